//! Whether every member of a mutation class has exchange radius at most `r`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use super::canonical::CanonicalKey;
use super::class::{enumerate_class, explore, ClassLimits, ClassMember, MutationClass, Visit};
use super::diagram::{recognize_diagram, Diagram, DynkinType};
use crate::error::{QuiverError, Result};
use crate::mutation::MutationSequence;
use crate::quiver::ExchangeMatrix;
use crate::spectral::{radius_approx, radius_cmp_matrix, RadiusVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Maximality {
    Maximal,
    NotMaximal,
    /// A limit stopped the search before closure or a witness.
    Undecided,
}

/// A class member whose radius exceeds the threshold.
#[derive(Clone, Debug)]
pub struct RadiusWitness {
    pub word: MutationSequence,
    pub key: CanonicalKey,
    pub matrix: ExchangeMatrix,
    pub verdict: RadiusVerdict,
}

#[derive(Clone, Debug)]
pub struct RMaximalVerdict {
    pub status: Maximality,
    /// Present exactly when `status` is `NotMaximal`; its verdict is `Greater`.
    pub witness: Option<RadiusWitness>,
    pub complete: bool,
    /// The part of the class explored before the decision.
    pub class: MutationClass,
}

impl RMaximalVerdict {
    /// `Some(true)` only after full closure, `None` when undecided.
    pub fn is_r_maximal(&self) -> Option<bool> {
        match self.status {
            Maximality::Maximal => Some(true),
            Maximality::NotMaximal => Some(false),
            Maximality::Undecided => None,
        }
    }
}

/// `max_i sum_j |b_ij|`, an upper bound for the radius.
fn max_row_sum(b: &ExchangeMatrix) -> BigInt {
    let m = b.matrix();
    (0..b.order())
        .map(|i| m.row(i).iter().map(|x| x.abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default()
}

/// Searches the class breadth-first and stops at the first member whose
/// radius exceeds `r`.
pub fn is_r_maximal(b: &ExchangeMatrix, r: &BigRational, limits: &ClassLimits) -> RMaximalVerdict {
    let mut witness = None;
    let class = explore(b, limits, |key, member| {
        if BigRational::from_integer(max_row_sum(&member.matrix)) <= *r {
            return Visit::Continue;
        }
        let verdict = radius_cmp_matrix(&member.matrix, r);
        if verdict.ordering == Ordering::Greater {
            witness = Some(RadiusWitness {
                word: member.word.clone(),
                key: key.clone(),
                matrix: member.matrix.clone(),
                verdict,
            });
            Visit::Stop
        } else {
            Visit::Continue
        }
    });
    let status = if witness.is_some() {
        Maximality::NotMaximal
    } else if class.complete {
        Maximality::Maximal
    } else {
        Maximality::Undecided
    };
    RMaximalVerdict {
        status,
        complete: class.complete,
        witness,
        class,
    }
}

/// A member of largest radius: radii within `1e-12` count as tied, and ties
/// go to the shorter word, then the smaller key. The verdict against `r` is
/// exact.
pub fn strongest_member(c: &MutationClass, r: &BigRational) -> RadiusWitness {
    let radii: Vec<(f64, &CanonicalKey, &ClassMember)> = c
        .members
        .par_iter()
        .map(|(k, m)| (radius_approx(&m.matrix), k, m))
        .collect();
    let top = radii.iter().map(|x| x.0).fold(f64::NEG_INFINITY, f64::max);
    let (_, key, member) = radii
        .into_iter()
        .filter(|x| x.0 >= top - 1e-12)
        .min_by(|a, b| (a.2.word.len(), a.1).cmp(&(b.2.word.len(), b.1)))
        .expect("classes are nonempty");
    RadiusWitness {
        word: member.word.clone(),
        key: key.clone(),
        matrix: member.matrix.clone(),
        verdict: radius_cmp_matrix(&member.matrix, r),
    }
}

/// The connected 2-maximal classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwoMaximalType {
    /// Two vertices joined by a double arrow.
    X2,
    A(usize),
}

impl fmt::Display for TwoMaximalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoMaximalType::X2 => f.write_str("X2"),
            TwoMaximalType::A(n) => write!(f, "A{n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum TwoMaximalVerdict {
    TwoMaximal(TwoMaximalType),
    Not(RadiusWitness),
    /// Limits were hit before closure or a witness.
    Undecided,
}

/// Decides 2-maximality of a connected cluster quiver and, when it holds,
/// names the class by a representative: `X2` or a path `A1`..`A4`.
///
/// A failing class that closes within `limits` is reported with its
/// [`strongest_member`]; otherwise with the first violation found.
pub fn classify_two_maximal(b: &ExchangeMatrix, limits: &ClassLimits) -> Result<TwoMaximalVerdict> {
    if !b.is_connected() {
        return Err(QuiverError::Disconnected);
    }
    if !b.is_skew_symmetric() {
        return Err(QuiverError::NotSkewSymmetric);
    }
    let two = BigRational::from_integer(2.into());
    let v = is_r_maximal(b, &two, limits);
    match v.status {
        Maximality::NotMaximal => {
            let first = v.witness.expect("witness");
            let full = enumerate_class(b, limits);
            let w = if full.complete {
                strongest_member(&full, &two)
            } else {
                first
            };
            return Ok(TwoMaximalVerdict::Not(w));
        }
        Maximality::Undecided => return Ok(TwoMaximalVerdict::Undecided),
        Maximality::Maximal => {}
    }
    let n = b.order();
    let mut found = None;
    for m in v.class.members.values() {
        if n == 2 && b.get(0, 1).abs() == BigInt::from(2) {
            found = Some(TwoMaximalType::X2);
            break;
        }
        let q = m.matrix.to_quiver();
        if q.is_simply_laced() && q.arrows().len() + 1 == n {
            if let Ok(r) = recognize_diagram(&q) {
                if let Diagram::Dynkin(DynkinType::A(p)) = r.diagram {
                    found = Some(TwoMaximalType::A(p));
                    break;
                }
            }
        }
    }
    let t = found
        .unwrap_or_else(|| panic!("2-maximal class without an X2 or path representative: {b:?}"));
    assert!(
        matches!(t, TwoMaximalType::X2 | TwoMaximalType::A(1..=4)),
        "2-maximal class of unexpected type {t}"
    );
    Ok(TwoMaximalVerdict::TwoMaximal(t))
}
