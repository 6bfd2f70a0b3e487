//! Generators and brute-force oracles shared by unit tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use crate::matrix::IntMatrix;
use crate::quiver::{Arrow, ValuedQuiver};

/// Random valued quiver: pick a symmetrizer first, then compatible values.
pub fn valued_quiver_up_to(max_n: usize) -> impl Strategy<Value = ValuedQuiver> {
    (1usize..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(1i64..=3, n),
                proptest::collection::vec((0u8..3, 1i64..=2), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, d, pairs)| {
            let mut arrows = Vec::new();
            let mut idx = 0;
            for i in 0..n {
                for j in i + 1..n {
                    let (dir, m) = pairs[idx];
                    idx += 1;
                    let g = num_integer::gcd(d[i], d[j]);
                    // d_i v1 = d_j v2 for i -> j
                    let (v1, v2) = (m * d[j] / g, m * d[i] / g);
                    match dir {
                        1 => arrows.push(Arrow::new(i, j, v1, v2)),
                        2 => arrows.push(Arrow::new(j, i, v2, v1)),
                        _ => {}
                    }
                }
            }
            ValuedQuiver::new(n, arrows).unwrap()
        })
}

pub fn valued_quiver() -> impl Strategy<Value = ValuedQuiver> {
    valued_quiver_up_to(6)
}

/// Simply-laced quiver: each pair absent, `i -> j`, or `j -> i`.
pub fn simply_laced_quiver(max_n: usize) -> impl Strategy<Value = ValuedQuiver> {
    (1usize..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(0u8..3, n * (n - 1) / 2)))
        .prop_map(|(n, dirs)| quiver_from_code(n, &dirs))
}

pub fn quiver_from_code(n: usize, dirs: &[u8]) -> ValuedQuiver {
    let mut edges = Vec::new();
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            match dirs[idx] {
                1 => edges.push((i, j)),
                2 => edges.push((j, i)),
                _ => {}
            }
            idx += 1;
        }
    }
    ValuedQuiver::simply_laced(n, &edges).unwrap()
}

/// Every simply-laced quiver on `n` labelled vertices.
pub fn all_simply_laced(n: usize) -> impl Iterator<Item = ValuedQuiver> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..3usize.pow(pairs as u32)).map(move |mut code| {
        let dirs: Vec<u8> = (0..pairs)
            .map(|_| {
                let d = (code % 3) as u8;
                code /= 3;
                d
            })
            .collect();
        quiver_from_code(n, &dirs)
    })
}

/// Random valued tree: parent of vertex `i > 0` is `parents[i-1] % i`.
pub fn valued_tree(max_n: usize) -> impl Strategy<Value = ValuedQuiver> {
    (1usize..=max_n)
        .prop_flat_map(|n| {
            proptest::collection::vec((any::<usize>(), any::<bool>(), 1i64..=3, 1i64..=3), n - 1)
                .prop_map(move |e| (n, e))
        })
        .prop_map(|(n, edges)| {
            let arrows = edges
                .iter()
                .enumerate()
                .map(|(i, &(p, flip, v1, v2))| {
                    let (child, parent) = (i + 1, p % (i + 1));
                    if flip {
                        Arrow::new(child, parent, v1, v2)
                    } else {
                        Arrow::new(parent, child, v1, v2)
                    }
                })
                .collect();
            ValuedQuiver::new(n, arrows).unwrap()
        })
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(m: &IntMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.rows();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[test]
fn bareiss_small() {
    let m = crate::int_matrix![[2, 1, 0], [1, 3, 1], [0, 1, 4]];
    assert_eq!(bareiss_det(&m), BigInt::from(18));
    let m = crate::int_matrix![[0, 1], [1, 0]];
    assert_eq!(bareiss_det(&m), BigInt::from(-1));
    assert_eq!(permutations(3).len(), 6);
}
