//! Matrix and quiver mutation.
//!
//! Mutation is implemented once, on exchange matrices:
//!
//! ```text
//! b'_ij = -b_ij                                   if i = k or j = k
//! b'_ij = b_ij + sgn(b_ik) * max(b_ik * b_kj, 0)  otherwise
//! ```
//!
//! Quiver mutation goes through the matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{QuiverError, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{ExchangeMatrix, ValuedQuiver, VertexKind};

fn check_vertex(k: usize, n: usize) -> Result<()> {
    if k >= n {
        Err(QuiverError::VertexOutOfRange { vertex: k + 1, n })
    } else {
        Ok(())
    }
}

/// `mu_k(B)`. The symmetrizer of `b` certifies the result.
pub fn mutate(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    let n = b.order();
    check_vertex(k, n)?;
    let m = IntMatrix::from_fn(n, |i, j| {
        let bij = b.get(i, j);
        if i == k || j == k {
            return -bij;
        }
        let bik = b.get(i, k);
        let bkj = b.get(k, j);
        // sgn(b_ik) max(b_ik b_kj, 0) is nonzero only when both share a sign
        if bik.is_positive() && bkj.is_positive() {
            bij + bik * bkj
        } else if bik.is_negative() && bkj.is_negative() {
            bij - bik * bkj
        } else {
            bij.clone()
        }
    });
    Ok(ExchangeMatrix::from_parts(m, b.symmetrizer().to_vec()))
}

/// `mu_k(Q)`, read back from `mu_k(B(Q))`.
pub fn mutate_quiver(q: &ValuedQuiver, k: usize) -> Result<ValuedQuiver> {
    check_vertex(k, q.order())?;
    Ok(mutate(&q.exchange_matrix()?, k)?.to_quiver())
}

/// A word `k_1, ..., k_m` of mutations applied left to right (0-based).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MutationSequence(pub Vec<usize>);

impl MutationSequence {
    pub fn new(steps: Vec<usize>) -> Self {
        MutationSequence(steps)
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Steps as 1-based vertex labels.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|k| k + 1).collect()
    }

    pub fn pushed(&self, k: usize) -> Self {
        let mut steps = self.0.clone();
        steps.push(k);
        MutationSequence(steps)
    }

    pub fn reversed(&self) -> Self {
        MutationSequence(self.0.iter().rev().copied().collect())
    }
}

/// Parses comma-separated 1-based vertices, e.g. `"4,2"`. The empty string
/// is the empty word.
impl FromStr for MutationSequence {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(MutationSequence::default());
        }
        s.split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(QuiverError::Syntax {
                    line: 1,
                    message: format!("bad mutation step {t:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(MutationSequence)
    }
}

impl fmt::Display for MutationSequence {
    /// `[4, 2]`, 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn mutate_seq(b: &ExchangeMatrix, seq: &MutationSequence) -> Result<ExchangeMatrix> {
    for &k in seq.steps() {
        check_vertex(k, b.order())?;
    }
    let mut cur = b.clone();
    for &k in seq.steps() {
        cur = mutate(&cur, k)?;
    }
    Ok(cur)
}

/// The matrix `W` with `W B W^T = mu_k(B)` for skew-symmetric `B`.
///
/// `W` is the identity except in column `k`, which holds `[b_ik]_+` off the
/// diagonal and `-1` on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub w: IntMatrix,
    pub k: usize,
}

impl CongruenceWitness {
    /// `W B W^T`.
    pub fn apply(&self, b: &IntMatrix) -> IntMatrix {
        self.w.mul(b).mul(&self.w.transpose())
    }

    /// `det W`, by cofactor expansion along column `k` (the only non-identity
    /// column, so the expansion collapses to the diagonal entry).
    pub fn determinant(&self) -> BigInt {
        self.w.get(self.k, self.k).clone()
    }
}

pub fn congruence_witness(b: &ExchangeMatrix, k: usize) -> Result<CongruenceWitness> {
    let n = b.order();
    check_vertex(k, n)?;
    if !b.is_skew_symmetric() {
        return Err(QuiverError::NotSkewSymmetric);
    }
    let mut w = IntMatrix::identity(n);
    for i in 0..n {
        let x = if i == k {
            -BigInt::one()
        } else if b.get(i, k).is_positive() {
            b.get(i, k).clone()
        } else {
            BigInt::zero()
        };
        w.set(i, k, x);
    }
    let witness = CongruenceWitness { w, k };
    debug_assert_eq!(&witness.apply(b.matrix()), mutate(b, k)?.matrix());
    Ok(witness)
}

/// Sink, source, neither, or isolated.
pub fn sink_source_status(q: &ValuedQuiver, k: usize) -> Result<VertexKind> {
    q.vertex_kind(k)
}

/// Same classification read off an exchange matrix: a sink has `b_kj <= 0`
/// for all `j`, a source has `b_kj >= 0`.
pub fn vertex_kind_of(b: &ExchangeMatrix, k: usize) -> Result<VertexKind> {
    check_vertex(k, b.order())?;
    let row = b.matrix().row(k);
    let out = row.iter().any(Signed::is_positive);
    let inc = row.iter().any(Signed::is_negative);
    Ok(match (out, inc) {
        (false, false) => VertexKind::Isolated,
        (false, true) => VertexKind::Sink,
        (true, false) => VertexKind::Source,
        (true, true) => VertexKind::Neither,
    })
}

/// `J_k B J_k`: flips the sign of row and column `k`.
pub fn j_conjugate(b: &IntMatrix, k: usize) -> IntMatrix {
    IntMatrix::from_fn(b.order(), |i, j| {
        let x = b.get(i, j);
        if (i == k) != (j == k) {
            -x
        } else {
            x.clone()
        }
    })
}
