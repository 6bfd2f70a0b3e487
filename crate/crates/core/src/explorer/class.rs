//! Breadth-first enumeration of mutation classes up to isomorphism.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::canonical::{canonical_key, CanonicalKey};
use crate::error::{QuiverError, Result};
use crate::mutation::{mutate, MutationSequence};
use crate::poly::IntPolynomial;
use crate::quiver::ExchangeMatrix;
use crate::spectral::exchange_polynomial;

/// Bounds that keep enumeration of infinite classes finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLimits {
    pub max_quivers: usize,
    /// Matrices with an entry of absolute value above this are not admitted.
    pub max_entry: BigInt,
    pub max_depth: Option<usize>,
}

impl Default for ClassLimits {
    fn default() -> Self {
        ClassLimits {
            max_quivers: 100_000,
            max_entry: BigInt::from(64),
            max_depth: None,
        }
    }
}

impl ClassLimits {
    pub fn with_max_entry(mut self, m: i64) -> Self {
        self.max_entry = BigInt::from(m);
        self
    }

    pub fn with_max_quivers(mut self, m: usize) -> Self {
        self.max_quivers = m;
        self
    }

    pub fn with_max_depth(mut self, d: usize) -> Self {
        self.max_depth = Some(d);
        self
    }
}

impl FromStr for ClassLimits {
    type Err = QuiverError;

    /// `max_quivers=N,max_entry=N,max_depth=N`, any subset, defaults elsewhere.
    fn from_str(s: &str) -> Result<Self> {
        let mut limits = ClassLimits::default();
        let bad = |m: &str| QuiverError::BadLimits(m.to_string());
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| bad(&format!("expected key=value, found {part:?}")))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| bad(&format!("{k}: expected a positive integer")))?;
            if v == 0 {
                return Err(bad(&format!("{k} must be positive")));
            }
            match k.trim() {
                "max_quivers" => limits.max_quivers = v as usize,
                "max_entry" => limits.max_entry = BigInt::from(v),
                "max_depth" => limits.max_depth = Some(v as usize),
                other => return Err(bad(&format!("unknown limit {other:?}"))),
            }
        }
        Ok(limits)
    }
}

impl fmt::Display for ClassLimits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max_quivers={},max_entry={}",
            self.max_quivers, self.max_entry
        )?;
        if let Some(d) = self.max_depth {
            write!(f, ",max_depth={d}")?;
        }
        Ok(())
    }
}

/// A representative reached from the root.
#[derive(Clone, Debug)]
pub struct ClassMember {
    /// Equals `mutate_seq(root, word)`.
    pub matrix: ExchangeMatrix,
    pub word: MutationSequence,
}

/// Members of a mutation class keyed by isomorphism type.
#[derive(Clone, Debug)]
pub struct MutationClass {
    pub root_key: CanonicalKey,
    pub members: BTreeMap<CanonicalKey, ClassMember>,
    /// `(from, vertex, to)`: mutating the stored `from` matrix at `vertex`
    /// gives a matrix isomorphic to `to`. Sorted.
    pub edges: Vec<(CanonicalKey, usize, CanonicalKey)>,
    /// False when some limit cut the search short.
    pub complete: bool,
}

impl MutationClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.members.keys()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<&ClassMember> {
        self.members.get(key)
    }

    pub fn root(&self) -> &ClassMember {
        &self.members[&self.root_key]
    }

    /// `{root_key, size, complete, members: [{key, matrix, word}], edges, cospectral_groups}`
    pub fn to_json(&self) -> Value {
        let members: Vec<Value> = self
            .members
            .iter()
            .map(
                |(k, m)| json!({"key": k, "matrix": m.matrix.matrix(), "word": m.word.one_based()}),
            )
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|(a, k, b)| json!([a, k + 1, b]))
            .collect();
        json!({
            "root_key": self.root_key,
            "size": self.len(),
            "complete": self.complete,
            "members": members,
            "edges": edges,
            "cospectral_groups": cospectral_partition(self),
        })
    }
}

/// What the caller wants to hear about each newly admitted member.
pub(crate) enum Visit {
    Continue,
    Stop,
}

/// One mutation from the frontier: source, vertex, and the new key and matrix
/// unless an entry exceeded the limit.
type Step = (CanonicalKey, usize, Option<(CanonicalKey, ExchangeMatrix)>);

/// Level-synchronous BFS. `visit` sees each new member in deterministic order
/// and may stop the search, which leaves the class incomplete.
pub(crate) fn explore(
    root: &ExchangeMatrix,
    limits: &ClassLimits,
    mut visit: impl FnMut(&CanonicalKey, &ClassMember) -> Visit,
) -> MutationClass {
    let n = root.order();
    let root_key = canonical_key(root);
    let mut members = BTreeMap::new();
    let root_member = ClassMember {
        matrix: root.clone(),
        word: MutationSequence::default(),
    };
    let stop_at_root = matches!(visit(&root_key, &root_member), Visit::Stop);
    members.insert(root_key.clone(), root_member);
    let mut class = MutationClass {
        root_key: root_key.clone(),
        members,
        edges: Vec::new(),
        complete: !stop_at_root,
    };
    if stop_at_root {
        return class;
    }
    let mut frontier = vec![root_key];
    let mut depth = 0;
    while !frontier.is_empty() {
        let at_depth_limit = limits.max_depth.is_some_and(|d| depth >= d);
        let jobs: Vec<(&CanonicalKey, usize)> = frontier
            .iter()
            .flat_map(|key| (0..n).map(move |k| (key, k)))
            .collect();
        // frontier is sorted, so results come back ordered by (from key, vertex)
        let results: Vec<Step> = jobs
            .par_iter()
            .map(|&(key, k)| {
                let m = mutate(&class.members[key].matrix, k).expect("vertex in range");
                if m.matrix().max_abs_entry() > limits.max_entry {
                    (key.clone(), k, None)
                } else {
                    (key.clone(), k, Some((canonical_key(&m), m)))
                }
            })
            .collect();
        let mut next = Vec::new();
        for (from, k, outcome) in results {
            let Some((to, m)) = outcome else {
                class.complete = false;
                continue;
            };
            if !class.members.contains_key(&to) {
                if at_depth_limit || class.members.len() >= limits.max_quivers {
                    class.complete = false;
                    continue;
                }
                let word = class.members[&from].word.pushed(k);
                let member = ClassMember { matrix: m, word };
                let stop = matches!(visit(&to, &member), Visit::Stop);
                class.members.insert(to.clone(), member);
                next.push(to.clone());
                class.edges.push((from, k, to));
                if stop {
                    class.complete = false;
                    class.edges.sort();
                    return class;
                }
                continue;
            }
            class.edges.push((from, k, to));
        }
        next.sort();
        frontier = next;
        depth += 1;
    }
    class.edges.sort();
    class
}

/// Members of the mutation class of `b`, up to isomorphism.
pub fn enumerate_class(b: &ExchangeMatrix, limits: &ClassLimits) -> MutationClass {
    explore(b, limits, |_, _| Visit::Continue)
}

/// Keys grouped by exchange polynomial; groups ordered by the polynomial's
/// ascending coefficient list, keys sorted inside each group.
pub fn cospectral_partition(c: &MutationClass) -> Vec<Vec<CanonicalKey>> {
    let polys: Vec<(IntPolynomial, CanonicalKey)> = c
        .members
        .par_iter()
        .map(|(k, m)| (exchange_polynomial(&m.matrix), k.clone()))
        .collect();
    let mut groups: BTreeMap<Vec<BigInt>, Vec<CanonicalKey>> = BTreeMap::new();
    for (p, k) in polys {
        groups.entry(p.coeffs().to_vec()).or_default().push(k);
    }
    groups
        .into_values()
        .map(|mut g| {
            g.sort();
            g
        })
        .collect()
}

/// Exchange polynomial of each cospectral group, aligned with
/// [`cospectral_partition`].
pub fn cospectral_polynomials(c: &MutationClass) -> Vec<(IntPolynomial, Vec<CanonicalKey>)> {
    cospectral_partition(c)
        .into_iter()
        .map(|g| (exchange_polynomial(&c.members[&g[0]].matrix), g))
        .collect()
}
