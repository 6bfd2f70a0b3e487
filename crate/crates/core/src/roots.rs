//! Exact real-root counting and isolation via Sturm sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPolynomial;

/// Sturm sequence of a square-free polynomial, each term rescaled by a
/// positive constant.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    /// Builds the chain for the square-free part of `p`.
    pub fn new(p: &IntPolynomial) -> Self {
        let p0 = p.square_free_part();
        let mut chain = vec![p0.clone()];
        if p0.degree().unwrap_or(0) == 0 {
            return SturmChain { chain };
        }
        chain.push(p0.derivative().primitive_part());
        loop {
            let k = chain.len();
            let r = chain[k - 2].signed_pseudo_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push((-r).primitive_part());
        }
        SturmChain { chain }
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    pub fn terms(&self) -> &[IntPolynomial] {
        &self.chain
    }

    /// Sign variations at `x`. Valid whether or not `x` is a root.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.chain.iter().map(IntPolynomial::sign_at_pos_inf))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.chain.iter().map(IntPolynomial::sign_at_neg_inf))
    }

    /// Distinct roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct roots in `(t, inf)`.
    pub fn count_above(&self, t: &BigRational) -> usize {
        self.variations_at(t) - self.variations_at_pos_inf()
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Integer `B` with every real root of `p` in `(-B, B)`.
pub fn root_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.leading().abs();
    let m = p
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    // Cauchy: 1 + max |c_i / c_n|
    let q = (&m + &lc - BigInt::one()) / &lc;
    q + BigInt::from(2)
}

/// A real root: either known exactly or strictly inside `(lo, hi)` with
/// neither endpoint a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLocation {
    Exact(BigRational),
    Between(BigRational, BigRational),
}

impl RootLocation {
    pub fn lo(&self) -> &BigRational {
        match self {
            RootLocation::Exact(x) => x,
            RootLocation::Between(lo, _) => lo,
        }
    }

    pub fn hi(&self) -> &BigRational {
        match self {
            RootLocation::Exact(x) => x,
            RootLocation::Between(_, hi) => hi,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RootLocation::Exact(x) => to_f64(x),
            RootLocation::Between(lo, hi) => {
                to_f64(&((lo + hi) / BigRational::from_integer(2.into())))
            }
        }
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

impl SturmChain {
    /// Shrinks a location to width at most `eps`, or to an exact hit.
    fn refine(&self, loc: RootLocation, eps: &BigRational) -> RootLocation {
        let (mut lo, mut hi) = match loc {
            RootLocation::Exact(_) => return loc,
            RootLocation::Between(lo, hi) => (lo, hi),
        };
        let p = self.polynomial();
        let s_lo = p.sign_at(&lo);
        while &(&hi - &lo) > eps {
            let mid = half(&lo, &hi);
            let s = p.sign_at(&mid);
            if s == Ordering::Equal {
                return RootLocation::Exact(mid);
            }
            // simple root, so the sign flips across it
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        RootLocation::Between(lo, hi)
    }

    /// All distinct real roots in increasing order, each to width `eps`.
    pub fn isolate(&self, eps: &BigRational) -> Vec<RootLocation> {
        let p = self.polynomial();
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let b = BigRational::from_integer(root_bound(p));
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let c = self.count_in(&lo, &hi);
            if c == 0 {
                continue;
            }
            if c == 1 {
                let loc = if p.sign_at(&hi) == Ordering::Equal {
                    RootLocation::Exact(hi)
                } else {
                    // the bounds are never roots: -B is outside, and any
                    // interior endpoint that was a root is reported exactly
                    RootLocation::Between(lo, hi)
                };
                out.push(loc);
                continue;
            }
            let mid = half(&lo, &hi);
            // push upper half first so the lower half pops first
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        let out: Vec<RootLocation> = out
            .into_iter()
            .map(|loc| match loc {
                RootLocation::Between(lo, hi) if p.sign_at(&lo) == Ordering::Equal => {
                    // lo is itself a root reported by the neighbouring interval;
                    // nudge inwards to get a non-root endpoint
                    self.nudge_lo(lo, hi)
                }
                other => other,
            })
            .map(|loc| self.refine(loc, eps))
            .collect();
        debug_assert!(out.windows(2).all(|w| w[0].hi() <= w[1].lo()));
        out
    }

    fn nudge_lo(&self, lo: BigRational, mut hi: BigRational) -> RootLocation {
        let p = self.polynomial();
        loop {
            let m = half(&lo, &hi);
            if p.sign_at(&m) == Ordering::Equal {
                return RootLocation::Exact(m);
            }
            if self.count_in(&m, &hi) == 1 {
                return RootLocation::Between(m, hi);
            }
            hi = m;
        }
    }

    /// Largest real root, if any, to width `eps`.
    pub fn largest_root(&self, eps: &BigRational) -> Option<RootLocation> {
        let p = self.polynomial();
        if self.count_real() == 0 {
            return None;
        }
        let mut hi = BigRational::from_integer(root_bound(p));
        let mut lo = -hi.clone();
        // keep exactly one root, the largest, in (lo, hi]
        loop {
            if p.sign_at(&hi) == Ordering::Equal && self.count_above(&hi) == 0 {
                return Some(RootLocation::Exact(hi));
            }
            if self.count_in(&lo, &hi) == 1 && p.sign_at(&lo) != Ordering::Equal {
                return Some(self.refine(RootLocation::Between(lo, hi), eps));
            }
            let mid = half(&lo, &hi);
            if self.count_above(&mid) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

/// Roots strictly above `t`, counted with multiplicity.
pub fn count_above_with_multiplicity(p: &IntPolynomial, t: &BigRational) -> usize {
    p.square_free_factors()
        .iter()
        .map(|(f, m)| m * SturmChain::new(f).count_above(t))
        .sum()
}

/// Real roots with multiplicities, increasing.
pub fn real_roots(p: &IntPolynomial, eps: &BigRational) -> Vec<(RootLocation, usize)> {
    let mut out: Vec<(RootLocation, usize)> = p
        .square_free_factors()
        .iter()
        .flat_map(|(f, m)| {
            SturmChain::new(f)
                .isolate(eps)
                .into_iter()
                .map(move |loc| (loc, *m))
        })
        .collect();
    // factors are coprime, so their roots are distinct; sort by a
    // representative point (separating isolation is not needed here)
    out.sort_by(|a, b| {
        a.0.approx()
            .partial_cmp(&b.0.approx())
            .unwrap_or(Ordering::Equal)
    });
    out
}

/// Parses `7`, `-3/2`, or a finite decimal like `2.25` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{int_digits}{frac}").parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let v = BigRational::new(digits, den);
        return Some(if neg { -v } else { v });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// `2^-bits` as an exact rational.
pub fn eps_bits(bits: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}
