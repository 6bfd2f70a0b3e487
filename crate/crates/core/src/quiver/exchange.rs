use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{minimal_symmetrizer, Arrow, ValuedQuiver};
use crate::error::{QuiverError, Result};
use crate::matrix::IntMatrix;

/// Integer skew-symmetrizable matrix together with a positive symmetrizer
/// `d` satisfying `d_i b_ij = -d_j b_ji`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    b: IntMatrix,
    d: Vec<BigInt>,
}

/// `A(Q) = [B]_+` and `C(Q) = [B]_+ + [-B]_+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyPair {
    pub a: IntMatrix,
    pub c: IntMatrix,
}

impl ExchangeMatrix {
    /// Validates sign-skew-symmetry and computes the minimal symmetrizer.
    pub fn new(b: IntMatrix) -> Result<Self> {
        let d = minimal_symmetrizer(&b)?;
        Ok(ExchangeMatrix { b, d })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows).ok_or(QuiverError::Shape)?)
    }

    /// Caller guarantees `d` certifies `b`.
    pub(crate) fn from_parts(b: IntMatrix, d: Vec<BigInt>) -> Self {
        debug_assert!(certifies_symmetrizer(&b, &d));
        ExchangeMatrix { b, d }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.b.order()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.b.get(i, j)
    }

    pub fn symmetrizer(&self) -> &[BigInt] {
        &self.d
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.b
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.b.get(i, j) == &-self.b.get(j, i)))
    }

    /// Entries in {-1, 0, 1} with `b_ij = -b_ji`.
    pub fn is_simply_laced(&self) -> bool {
        self.is_skew_symmetric() && self.b.entries().iter().all(|x| x.abs() <= BigInt::one())
    }

    /// The quiver with an arrow `i -> j` of value `(b_ij, -b_ji)` for each
    /// positive entry.
    pub fn to_quiver(&self) -> ValuedQuiver {
        let n = self.order();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.b.get(i, j).is_positive() {
                    arrows.push(Arrow::new(
                        i,
                        j,
                        self.b.get(i, j).clone(),
                        -self.b.get(j, i),
                    ));
                }
            }
        }
        ValuedQuiver::new(n, arrows)
            .and_then(|q| q.with_symmetrizer(self.d.clone()))
            .expect("a validated exchange matrix always yields a valued quiver")
    }

    pub fn adjacency(&self) -> AdjacencyPair {
        let a = self.b.positive_part();
        let c = self.b.map(|x| x.abs());
        AdjacencyPair { a, c }
    }

    /// Principal submatrix; it is the exchange matrix of the full subquiver.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(QuiverError::EmptySubset);
        }
        if let Some(&v) = indices.iter().find(|&&v| v >= self.order()) {
            return Err(QuiverError::VertexOutOfRange {
                vertex: v + 1,
                n: self.order(),
            });
        }
        // the restricted certificate is valid but not necessarily minimal
        Self::new(self.b.principal_submatrix(indices))
    }

    /// `P B P^T`, with `perm[i]` the new label of vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut d = vec![BigInt::zero(); self.d.len()];
        for (i, &p) in perm.iter().enumerate() {
            d[p] = self.d[i].clone();
        }
        ExchangeMatrix::from_parts(self.b.permuted(perm), d)
    }

    /// Components of the underlying graph.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| !self.b.get(i, j).is_zero()).collect())
            .collect();
        super::components_of(&adj)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

/// `d_i b_ij + d_j b_ji = 0` for all pairs and `d > 0`.
pub fn certifies_symmetrizer(b: &IntMatrix, d: &[BigInt]) -> bool {
    let n = b.order();
    d.len() == n
        && d.iter().all(Signed::is_positive)
        && (0..n).all(|i| (0..n).all(|j| (&d[i] * b.get(i, j) + &d[j] * b.get(j, i)).is_zero()))
}

impl From<&ExchangeMatrix> for ValuedQuiver {
    fn from(b: &ExchangeMatrix) -> Self {
        b.to_quiver()
    }
}
