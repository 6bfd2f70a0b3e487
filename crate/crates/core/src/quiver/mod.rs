//! Valued cluster quivers and their structural operations.
//!
//! Vertices are 0-based in this API. The text and JSON formats display them
//! 1-based.

mod exchange;
mod format;

pub use exchange::{certifies_symmetrizer, AdjacencyPair, ExchangeMatrix};
pub use format::parse_quiver;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{QuiverError, Result};
use crate::matrix::IntMatrix;

/// An arrow `source -> target` carrying the value pair `(v1, v2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub v1: BigInt,
    pub v2: BigInt,
}

impl Arrow {
    pub fn new(source: usize, target: usize, v1: impl Into<BigInt>, v2: impl Into<BigInt>) -> Self {
        Arrow {
            source,
            target,
            v1: v1.into(),
            v2: v2.into(),
        }
    }

    /// Arrow with value `(m, m)`, i.e. `m` parallel arrows of a cluster quiver.
    pub fn simple(source: usize, target: usize, multiplicity: i64) -> Self {
        Self::new(source, target, multiplicity, multiplicity)
    }

    pub fn reversed(&self) -> Self {
        Arrow {
            source: self.target,
            target: self.source,
            v1: self.v2.clone(),
            v2: self.v1.clone(),
        }
    }
}

/// A finite loop-free quiver with at most one arrow per vertex pair, each
/// arrow carrying a positive value pair.
///
/// Arrows are kept sorted by `(source, target)`. Equality compares the vertex
/// count and arrows only; the optional symmetrizer is a certificate.
#[derive(Clone, Debug)]
pub struct ValuedQuiver {
    n: usize,
    arrows: Vec<Arrow>,
    symmetrizer: Option<Vec<BigInt>>,
}

impl PartialEq for ValuedQuiver {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arrows == other.arrows
    }
}

impl Eq for ValuedQuiver {}

/// Position of a vertex relative to the arrows touching it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Sink,
    Source,
    Neither,
    Isolated,
}

/// Weighted degrees `h_i = sum_j |b_ij|` with global and per-component maxima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<BigInt>,
    pub max_degree: BigInt,
    /// `(component vertices, max degree inside the component)`
    pub component_max: Vec<(Vec<usize>, BigInt)>,
    pub max_component_degree: BigInt,
}

impl ValuedQuiver {
    /// Checks the structural invariants and normalizes arrow order.
    pub fn new(n: usize, mut arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            for v in [a.source, a.target] {
                if v >= n {
                    return Err(QuiverError::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            if a.source == a.target {
                return Err(QuiverError::LoopArrow(a.source + 1));
            }
            if !a.v1.is_positive() || !a.v2.is_positive() {
                return Err(QuiverError::NonPositiveValue(a.source + 1, a.target + 1));
            }
            let pair = (a.source.min(a.target), a.source.max(a.target));
            if !seen.insert(pair) {
                return Err(QuiverError::DuplicatePair(pair.0 + 1, pair.1 + 1));
            }
        }
        arrows.sort();
        Ok(ValuedQuiver {
            n,
            arrows,
            symmetrizer: None,
        })
    }

    /// Quiver with no arrows on `n` vertices.
    pub fn empty(n: usize) -> Self {
        ValuedQuiver {
            n,
            arrows: Vec::new(),
            symmetrizer: None,
        }
    }

    /// Simply-laced quiver from `(source, target)` pairs.
    pub fn simply_laced(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            n,
            edges.iter().map(|&(s, t)| Arrow::simple(s, t, 1)).collect(),
        )
    }

    /// Attaches a symmetrizer after checking `d(s) v1 = d(t) v2` on every arrow.
    pub fn with_symmetrizer(mut self, d: Vec<BigInt>) -> Result<Self> {
        if d.len() != self.n || d.iter().any(|x| !x.is_positive()) {
            return Err(QuiverError::BadSymmetrizer { expected: self.n });
        }
        for a in &self.arrows {
            if &d[a.source] * &a.v1 != &d[a.target] * &a.v2 {
                return Err(QuiverError::InconsistentSymmetrizer(
                    a.source + 1,
                    a.target + 1,
                ));
            }
        }
        self.symmetrizer = Some(d);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn symmetrizer(&self) -> Option<&[BigInt]> {
        self.symmetrizer.as_deref()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.arrows.iter().all(|a| a.v1.is_one() && a.v2.is_one())
    }

    /// Raw `b_ij` values without checking for a symmetrizer.
    pub(crate) fn raw_matrix(&self) -> IntMatrix {
        let mut b = IntMatrix::zeros(self.n);
        for a in &self.arrows {
            b.set(a.source, a.target, a.v1.clone());
            b.set(a.target, a.source, -&a.v2);
        }
        b
    }

    /// Minimal positive integer symmetrizer, gcd-reduced on each component.
    pub fn validate(&self) -> Result<Vec<BigInt>> {
        minimal_symmetrizer(&self.raw_matrix())
    }

    /// `B(Q)`: `b_ij = v1`, `b_ji = -v2` for every arrow `i -> j`.
    pub fn exchange_matrix(&self) -> Result<ExchangeMatrix> {
        let d = self.validate()?;
        Ok(ExchangeMatrix::from_parts(self.raw_matrix(), d))
    }

    /// `A(Q) = [B]_+` and `C(Q) = [B]_+ + [-B]_+`.
    pub fn adjacency_matrices(&self) -> Result<AdjacencyPair> {
        Ok(self.exchange_matrix()?.adjacency())
    }

    /// Full subquiver on `vertices` (0-based). Vertices of the result are
    /// numbered in the order given.
    pub fn full_subquiver(&self, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(QuiverError::EmptySubset);
        }
        let mut position = vec![usize::MAX; self.n];
        for (p, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(QuiverError::VertexOutOfRange {
                    vertex: v + 1,
                    n: self.n,
                });
            }
            position[v] = p;
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|a| position[a.source] != usize::MAX && position[a.target] != usize::MAX)
            .map(|a| Arrow {
                source: position[a.source],
                target: position[a.target],
                v1: a.v1.clone(),
                v2: a.v2.clone(),
            })
            .collect();
        let mut sub = Self::new(vertices.len(), arrows)?;
        if let Some(d) = &self.symmetrizer {
            sub.symmetrizer = Some(vertices.iter().map(|&v| d[v].clone()).collect());
        }
        Ok(sub)
    }

    /// Neighbor lists of the underlying graph.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for a in &self.arrows {
            adj[a.source].push(a.target);
            adj[a.target].push(a.source);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Components of the underlying graph, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        components_of(&self.neighbors())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Replaces each selected arrow `i -> j, (v1, v2)` with `j -> i, (v2, v1)`.
    pub fn reorient(&self, arrow_indices: &[usize]) -> Result<Self> {
        let mut flip = vec![false; self.arrows.len()];
        for &idx in arrow_indices {
            if idx >= self.arrows.len() {
                return Err(QuiverError::ArrowOutOfRange {
                    index: idx,
                    count: self.arrows.len(),
                });
            }
            flip[idx] ^= true;
        }
        let arrows = self
            .arrows
            .iter()
            .zip(&flip)
            .map(|(a, &f)| if f { a.reversed() } else { a.clone() })
            .collect();
        let mut q = Self::new(self.n, arrows)?;
        q.symmetrizer = self.symmetrizer.clone();
        Ok(q)
    }

    pub fn vertex_kind(&self, k: usize) -> Result<VertexKind> {
        if k >= self.n {
            return Err(QuiverError::VertexOutOfRange {
                vertex: k + 1,
                n: self.n,
            });
        }
        let out = self.arrows.iter().any(|a| a.source == k);
        let inc = self.arrows.iter().any(|a| a.target == k);
        Ok(match (out, inc) {
            (false, false) => VertexKind::Isolated,
            (false, true) => VertexKind::Sink,
            (true, false) => VertexKind::Source,
            (true, true) => VertexKind::Neither,
        })
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![BigInt::zero(); self.n];
        for a in &self.arrows {
            degrees[a.source] += &a.v1;
            degrees[a.target] += &a.v2;
        }
        let max_degree = degrees.iter().max().cloned().unwrap_or_default();
        let component_max: Vec<_> = self
            .connected_components()
            .into_iter()
            .map(|c| {
                let m = c
                    .iter()
                    .map(|&v| degrees[v].clone())
                    .max()
                    .unwrap_or_default();
                (c, m)
            })
            .collect();
        let max_component_degree = component_max
            .iter()
            .map(|(_, m)| m.clone())
            .max()
            .unwrap_or_default();
        DegreeProfile {
            degrees,
            max_degree,
            component_max,
            max_component_degree,
        }
    }
}

pub(crate) fn components_of(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Checks sign-skew-symmetry and a zero diagonal.
pub(crate) fn check_sign_skew(b: &IntMatrix) -> Result<()> {
    let n = b.order();
    for i in 0..n {
        if !b.get(i, i).is_zero() {
            return Err(QuiverError::NonZeroDiagonal(i + 1));
        }
        for j in i + 1..n {
            let (x, y) = (b.get(i, j), b.get(j, i));
            let ok = (x.is_zero() && y.is_zero())
                || (x.is_positive() && y.is_negative())
                || (x.is_negative() && y.is_positive());
            if !ok {
                return Err(QuiverError::NotSignSkewSymmetric(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// Propagates `d_j = d_i |b_ij| / |b_ji|` along a spanning forest, clears
/// denominators and the gcd per component, then verifies every pair.
pub(crate) fn minimal_symmetrizer(b: &IntMatrix) -> Result<Vec<BigInt>> {
    check_sign_skew(b)?;
    let n = b.order();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| !b.get(i, j).is_zero()).collect())
        .collect();
    // numerator / denominator per vertex
    let mut num = vec![BigInt::zero(); n];
    let mut den = vec![BigInt::zero(); n];
    let mut d = vec![BigInt::zero(); n];
    for comp in components_of(&adj) {
        let root = comp[0];
        num[root] = BigInt::one();
        den[root] = BigInt::one();
        let mut queue = VecDeque::from([root]);
        let mut placed = vec![false; n];
        placed[root] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if placed[j] {
                    continue;
                }
                placed[j] = true;
                let p = &num[i] * b.get(i, j).abs();
                let q = &den[i] * b.get(j, i).abs();
                let g = p.gcd(&q);
                num[j] = p / &g;
                den[j] = q / &g;
                queue.push_back(j);
            }
        }
        let lcm = comp.iter().fold(BigInt::one(), |acc, &v| acc.lcm(&den[v]));
        let scaled: Vec<BigInt> = comp.iter().map(|&v| &num[v] * (&lcm / &den[v])).collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&v, x) in comp.iter().zip(scaled) {
            d[v] = x / &g;
        }
    }
    for i in 0..n {
        for &j in &adj[i] {
            if &d[i] * b.get(i, j) != -(&d[j] * b.get(j, i)) {
                let (s, t) = if b.get(i, j).is_positive() {
                    (i, j)
                } else {
                    (j, i)
                };
                return Err(QuiverError::InconsistentSymmetrizer(s + 1, t + 1));
            }
        }
    }
    Ok(d)
}
