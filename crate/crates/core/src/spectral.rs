//! Characteristic polynomials and exact statements about exchange spectra.
//!
//! The eigenvalues of an exchange matrix are purely imaginary, so everything
//! is phrased through `g(x) = ±f(ix)`, a real-rooted integer polynomial whose
//! roots are the imaginary parts of the spectrum.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{QuiverError, Result};
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;
use crate::quiver::{ExchangeMatrix, ValuedQuiver};
use crate::roots::{eps_bits, real_roots, RootLocation, SturmChain};

/// Bisection width for reported approximations; `2^-34 / 2 < 1e-10`.
const APPROX_BITS: usize = 34;

trait Ring: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn ring_zero() -> Self {
        0
    }
    fn ring_one() -> Self {
        1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn ring_zero() -> Self {
        BigInt::zero()
    }
    fn ring_one() -> Self {
        BigInt::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Berkowitz: coefficients of `det(xI - M)`, highest degree first.
/// `None` on overflow.
fn berkowitz<T: Ring>(n: usize, a: &[T]) -> Option<Vec<T>> {
    let at = |i: usize, j: usize| &a[i * n + j];
    if n == 0 {
        return Some(vec![T::ring_one()]);
    }
    let mut vec = vec![T::ring_one(), at(n - 1, n - 1).neg()?];
    for s in (0..n - 1).rev() {
        let m = n - s;
        let mut diags = Vec::with_capacity(m + 1);
        diags.push(T::ring_one());
        diags.push(at(s, s).neg()?);
        // R A^t C for t = 0..m-2, with R the row and C the column beside the block
        let mut item: Vec<T> = (s + 1..n).map(|i| at(i, s).clone()).collect();
        for t in 0..m - 1 {
            let mut dot = T::ring_zero();
            for (k, x) in item.iter().enumerate() {
                dot = dot.add(&at(s, s + 1 + k).mul(x)?)?;
            }
            diags.push(dot.neg()?);
            if t + 2 < m {
                let mut next = Vec::with_capacity(m - 1);
                for i in s + 1..n {
                    let mut acc = T::ring_zero();
                    for (k, x) in item.iter().enumerate() {
                        acc = acc.add(&at(i, s + 1 + k).mul(x)?)?;
                    }
                    next.push(acc);
                }
                item = next;
            }
        }
        let mut out = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let mut acc = T::ring_zero();
            for j in 0..=i.min(m - 1) {
                acc = acc.add(&diags[i - j].mul(&vec[j])?)?;
            }
            out.push(acc);
        }
        vec = out;
    }
    Some(vec)
}

/// `det(λI - M)`, exact.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.order();
    let desc: Vec<BigInt> = match m.to_i128().and_then(|a| berkowitz(n, &a)) {
        Some(v) => v.into_iter().map(BigInt::from).collect(),
        None => berkowitz(n, m.entries()).expect("big integers do not overflow"),
    };
    IntPolynomial::new(desc.into_iter().rev().collect())
}

/// Characteristic polynomial of `B`. Odd codegrees always vanish.
pub fn exchange_polynomial(b: &ExchangeMatrix) -> IntPolynomial {
    let f = char_poly(b.matrix());
    let n = b.order();
    assert!(
        (0..=n)
            .filter(|j| (n - j) % 2 == 1)
            .all(|j| f.coeff(j).is_zero()),
        "exchange polynomial with a nonzero odd codegree: {f}"
    );
    f
}

pub fn quiver_exchange_polynomial(q: &ValuedQuiver) -> Result<IntPolynomial> {
    Ok(exchange_polynomial(&q.exchange_matrix()?))
}

/// `g(x) = ±f(ix)`, normalized monic. Fails when an odd codegree is nonzero.
pub fn real_root_form(f: &IntPolynomial) -> Result<IntPolynomial> {
    let Some(n) = f.degree() else {
        return Ok(IntPolynomial::zero());
    };
    let mut g = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let c = f.coeff(j);
        let codeg = n - j;
        if codeg % 2 == 1 {
            if !c.is_zero() {
                return Err(QuiverError::NotExchangePolynomial(codeg));
            }
            g.push(c);
        } else if (codeg / 2) % 2 == 1 {
            g.push(-c);
        } else {
            g.push(c);
        }
    }
    let g = IntPolynomial::new(g);
    Ok(if g.leading().is_negative() { -g } else { g })
}

/// Sign counts backing a [`RadiusVerdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusCertificate {
    /// Real-rooted form of the exchange polynomial.
    pub g: IntPolynomial,
    #[serde(serialize_with = "ser_rational")]
    pub threshold: BigRational,
    pub variations_at_threshold: usize,
    pub variations_at_infinity: usize,
    pub vanishes_at_threshold: bool,
}

impl RadiusCertificate {
    /// Distinct roots of `g` strictly above the threshold.
    pub fn roots_above(&self) -> usize {
        self.variations_at_threshold - self.variations_at_infinity
    }
}

fn ser_rational<S: serde::Serializer>(
    r: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Exact comparison of the exchange spectrum radius against a threshold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusVerdict {
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Ordering,
    /// Within `1e-9` of the true radius.
    pub approx: f64,
    pub certificate: RadiusCertificate,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(ordering_name(*o))
}

pub fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

/// Largest root of a real-rooted `g`, or 0 when `g` has no roots.
fn top_root_approx(chain: &SturmChain) -> f64 {
    chain
        .largest_root(&eps_bits(APPROX_BITS))
        .map_or(0.0, |loc| loc.approx())
}

/// Compares `Radi(B)` with `r`.
pub fn radius_cmp_matrix(b: &ExchangeMatrix, r: &BigRational) -> RadiusVerdict {
    let g = real_root_form(&exchange_polynomial(b)).expect("exchange polynomials are even");
    let chain = SturmChain::new(&g);
    let va = chain.variations_at(r);
    let vinf = chain.variations_at_pos_inf();
    let vanishes = g.sign_at(r) == Ordering::Equal;
    let ordering = if g.degree().unwrap_or(0) == 0 {
        // empty spectrum, radius 0
        BigRational::zero().cmp(r)
    } else if va > vinf {
        Ordering::Greater
    } else if vanishes {
        Ordering::Equal
    } else if r.is_negative() {
        // unreachable for a nonempty spectrum symmetric about 0
        Ordering::Greater
    } else {
        Ordering::Less
    };
    RadiusVerdict {
        ordering,
        approx: top_root_approx(&chain),
        certificate: RadiusCertificate {
            g,
            threshold: r.clone(),
            variations_at_threshold: va,
            variations_at_infinity: vinf,
            vanishes_at_threshold: vanishes,
        },
    }
}

pub fn radius_cmp(q: &ValuedQuiver, r: &BigRational) -> Result<RadiusVerdict> {
    Ok(radius_cmp_matrix(&q.exchange_matrix()?, r))
}

/// Floating-point `Radi(B)`, within `1e-9`.
pub fn radius_approx(b: &ExchangeMatrix) -> f64 {
    let g = real_root_form(&exchange_polynomial(b)).expect("exchange polynomials are even");
    top_root_approx(&SturmChain::new(&g))
}

fn topologically_acyclic(q: &ValuedQuiver) -> bool {
    let n = q.order();
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in q.arrows() {
        indeg[a.target] += 1;
        out[a.source].push(a.target);
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == n
}

/// No oriented cycles. Decided by topological sort and by nilpotency of
/// `A(Q)`, which must agree.
pub fn is_acyclic(q: &ValuedQuiver) -> Result<bool> {
    let adj = q.adjacency_matrices()?;
    let topo = topologically_acyclic(q);
    let spectral = char_poly(&adj.a) == IntPolynomial::power_of_x(q.order());
    assert_eq!(topo, spectral, "acyclicity tests disagree for {q:?}");
    Ok(topo)
}

/// Equal exchange polynomials.
pub fn cospectral(q1: &ValuedQuiver, q2: &ValuedQuiver) -> Result<bool> {
    if q1.order() != q2.order() {
        return Err(QuiverError::OrderMismatch(q1.order(), q2.order()));
    }
    Ok(quiver_exchange_polynomial(q1)? == quiver_exchange_polynomial(q2)?)
}

/// `λ ≤ μ ≤ h`: exchange radius, adjacency radius of `C(Q)`, max weighted degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub lambda_approx: f64,
    pub mu_approx: f64,
    #[serde(serialize_with = "ser_big")]
    pub h: BigInt,
    /// Exact comparison of `λ` with `h`.
    #[serde(serialize_with = "ser_ordering")]
    pub lambda_vs_h: Ordering,
    /// A component with every weighted degree equal to `h`, present when `λ = h`.
    pub regular_witness: Option<Vec<usize>>,
}

fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::json::big(x).serialize(s)
}

pub fn bounds_report(q: &ValuedQuiver) -> Result<BoundsReport> {
    let b = q.exchange_matrix()?;
    let profile = q.degree_profile();
    let h = profile.max_degree.clone();
    let verdict = radius_cmp_matrix(&b, &BigRational::from_integer(h.clone()));
    // C is similar to a symmetric matrix, so its characteristic polynomial is real-rooted
    let c = b.adjacency().c;
    let mu_approx = top_root_approx(&SturmChain::new(&char_poly(&c)));
    let regular_witness = if verdict.ordering == Ordering::Equal {
        profile
            .component_max
            .iter()
            .find(|(comp, _)| comp.iter().all(|&v| profile.degrees[v] == h))
            .map(|(comp, _)| comp.clone())
    } else {
        None
    };
    Ok(BoundsReport {
        lambda_approx: verdict.approx,
        mu_approx,
        h,
        lambda_vs_h: verdict.ordering,
        regular_witness,
    })
}

/// One absolute value in the exchange spectrum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumEntry {
    /// `|λ|`, i.e. a nonnegative root of `g`.
    pub abs_approx: f64,
    /// Multiplicity of `+i|λ|` as a root.
    pub multiplicity: usize,
    /// Eigenvalues with this absolute value: `2 * multiplicity` unless zero.
    pub count: usize,
}

/// Distinct absolute values `|λ_1| < ... < |λ_m|` with multiplicities.
pub fn exchange_spectrum(b: &ExchangeMatrix) -> Vec<SpectrumEntry> {
    let g = real_root_form(&exchange_polynomial(b)).expect("exchange polynomials are even");
    real_roots(&g, &eps_bits(APPROX_BITS))
        .into_iter()
        .filter_map(|(loc, m)| match &loc {
            RootLocation::Exact(x) if x.is_zero() => Some(SpectrumEntry {
                abs_approx: 0.0,
                multiplicity: m,
                count: m,
            }),
            _ if loc.lo().is_positive() => Some(SpectrumEntry {
                abs_approx: loc.approx(),
                multiplicity: m,
                count: 2 * m,
            }),
            _ => None,
        })
        .collect()
}

/// Imaginary parts of the spectrum, with multiplicity, in decreasing order.
pub fn imaginary_parts(b: &ExchangeMatrix) -> Vec<f64> {
    let g = real_root_form(&exchange_polynomial(b)).expect("exchange polynomials are even");
    let mut out: Vec<f64> = real_roots(&g, &eps_bits(APPROX_BITS))
        .into_iter()
        .flat_map(|(loc, m)| std::iter::repeat_n(loc.approx(), m))
        .collect();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}
