//! Checks, on a finished class, whether cospectral members are linked by
//! mutations at sinks and sources.

use std::collections::BTreeMap;

use serde::Serialize;

use super::canonical::CanonicalKey;
use super::class::{cospectral_partition, MutationClass};
use crate::error::{QuiverError, Result};
use crate::mutation::vertex_kind_of;
use crate::quiver::VertexKind;

#[derive(Clone, Debug, Default, Serialize)]
pub struct ProbeReport {
    pub groups: usize,
    /// Cospectral pairs joined by a sink/source path.
    pub verified: Vec<(CanonicalKey, CanonicalKey)>,
    /// Cospectral pairs with no such path: counterexample candidates.
    pub candidates: Vec<(CanonicalKey, CanonicalKey)>,
}

impl ProbeReport {
    pub fn pairs_checked(&self) -> usize {
        self.verified.len() + self.candidates.len()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Refuses incomplete classes: a missing member could hide a path.
pub fn probe_conjecture(c: &MutationClass) -> Result<ProbeReport> {
    if !c.complete {
        return Err(QuiverError::IncompleteClass);
    }
    let index: BTreeMap<&CanonicalKey, usize> = c.keys().enumerate().map(|(i, k)| (k, i)).collect();
    let mut parent: Vec<usize> = (0..index.len()).collect();
    for (from, k, to) in &c.edges {
        let kind = vertex_kind_of(&c.members[from].matrix, *k)?;
        if kind != VertexKind::Neither {
            let (a, b) = (find(&mut parent, index[from]), find(&mut parent, index[to]));
            parent[a] = b;
        }
    }
    let mut report = ProbeReport::default();
    for group in cospectral_partition(c) {
        report.groups += 1;
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                let (a, b) = (&group[i], &group[j]);
                let joined = find(&mut parent, index[a]) == find(&mut parent, index[b]);
                let pair = (a.clone(), b.clone());
                if joined {
                    report.verified.push(pair);
                } else {
                    report.candidates.push(pair);
                }
            }
        }
    }
    Ok(report)
}
