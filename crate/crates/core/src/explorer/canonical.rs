//! Canonical labelling of exchange matrices up to simultaneous row and
//! column permutation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::quiver::{minimal_symmetrizer, ExchangeMatrix};

/// Identifies an exchange matrix up to relabelling of vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("keys are ASCII")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.as_str())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Key plus the relabelling that realizes it: `perm[i]` is the canonical
/// position of vertex `i`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    pub perm: Vec<usize>,
}

pub fn canonical_key(b: &ExchangeMatrix) -> CanonicalKey {
    canonical_form(b).key
}

/// Stable colour refinement. Colours are ranks of sorted signatures, so they
/// do not depend on the input labelling.
fn refine_colours(b: &ExchangeMatrix) -> Vec<usize> {
    let n = b.order();
    let d = minimal_symmetrizer(b.matrix()).expect("validated exchange matrix");
    let ranks = |sigs: Vec<Vec<(BigInt, BigInt, usize)>>| -> Vec<usize> {
        let mut distinct: Vec<&Vec<(BigInt, BigInt, usize)>> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        sigs.iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect()
    };
    // round zero: symmetrizer and the multiset of incident value pairs
    let mut colour = ranks(
        (0..n)
            .map(|i| {
                let mut s: Vec<(BigInt, BigInt, usize)> = (0..n)
                    .filter(|&j| j != i)
                    .map(|j| (b.get(i, j).clone(), b.get(j, i).clone(), 0))
                    .collect();
                s.sort();
                s.push((d[i].clone(), BigInt::default(), usize::MAX));
                s
            })
            .collect(),
    );
    loop {
        let classes = colour
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        let next = ranks(
            (0..n)
                .map(|i| {
                    let mut s: Vec<(BigInt, BigInt, usize)> = (0..n)
                        .filter(|&j| j != i)
                        .map(|j| (b.get(i, j).clone(), b.get(j, i).clone(), colour[j]))
                        .collect();
                    s.sort();
                    s.push((BigInt::default(), BigInt::default(), colour[i]));
                    s
                })
                .collect(),
        );
        let next_classes = next.iter().collect::<std::collections::BTreeSet<_>>().len();
        colour = next;
        if next_classes == classes {
            return colour;
        }
    }
}

struct Search<'a> {
    b: &'a ExchangeMatrix,
    /// Vertices grouped by colour, colours ascending.
    cells: Vec<Vec<usize>>,
    best: Option<(Vec<BigInt>, Vec<usize>)>,
}

impl Search<'_> {
    /// Entries contributed by placing `v` after `order`.
    fn block(&self, order: &[usize], v: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(2 * order.len());
        for &u in order {
            out.push(self.b.get(v, u).clone());
            out.push(self.b.get(u, v).clone());
        }
        out
    }

    /// `u` and `v` can be swapped by an automorphism fixing everything else.
    fn twins(&self, u: usize, v: usize) -> bool {
        let b = self.b;
        b.get(u, v) == b.get(v, u)
            && (0..b.order())
                .filter(|&w| w != u && w != v)
                .all(|w| b.get(u, w) == b.get(v, w) && b.get(w, u) == b.get(w, v))
    }

    fn run(&mut self, order: &mut Vec<usize>, seq: &mut Vec<BigInt>, used: &mut [bool]) {
        let n = self.b.order();
        if order.len() == n {
            let better = self.best.as_ref().is_none_or(|(s, _)| &**seq < s);
            if better {
                self.best = Some((seq.clone(), order.clone()));
            }
            return;
        }
        let cell = self
            .cells
            .iter()
            .find(|c| c.iter().any(|&v| !used[v]))
            .expect("unplaced vertex");
        let mut candidates: Vec<(Vec<BigInt>, usize)> = Vec::new();
        for &v in cell.iter().filter(|&&v| !used[v]) {
            let blk = self.block(order, v);
            match candidates.first() {
                Some((b0, _)) if blk > *b0 => {}
                Some((b0, _)) if blk < *b0 => candidates = vec![(blk, v)],
                _ => candidates.push((blk, v)),
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for (blk, v) in candidates {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let start = seq.len();
            seq.extend(blk);
            // prune against the best complete sequence on the same prefix length
            let prune = self
                .best
                .as_ref()
                .is_some_and(|(s, _)| seq.as_slice() > &s[..seq.len()]);
            if !prune {
                used[v] = true;
                order.push(v);
                self.run(order, seq, used);
                order.pop();
                used[v] = false;
            }
            seq.truncate(start);
        }
    }
}

/// Lexicographically least serialization among labellings that list
/// vertices by refined colour.
pub fn canonical_form(b: &ExchangeMatrix) -> CanonicalForm {
    let n = b.order();
    let colour = refine_colours(b);
    let mut by_colour: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        by_colour.entry(c).or_default().push(v);
    }
    let mut search = Search {
        b,
        cells: by_colour.into_values().collect(),
        best: None,
    };
    search.run(
        &mut Vec::with_capacity(n),
        &mut Vec::new(),
        &mut vec![false; n],
    );
    let order = search.best.map(|(_, o)| o).unwrap_or_default();
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let canon = b.permuted(&perm);
    let mut text = format!("{n}|");
    for (i, x) in canon.matrix().entries().iter().enumerate() {
        if i > 0 {
            text.push(',');
        }
        text.push_str(&x.to_string());
    }
    CanonicalForm {
        key: CanonicalKey(text.into_bytes()),
        perm,
    }
}
