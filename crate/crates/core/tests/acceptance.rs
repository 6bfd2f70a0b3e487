//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//!
//! Expected values come from oracles written here (Bareiss determinants,
//! interpolated characteristic polynomials, principal-minor semidefiniteness)
//! rather than from the library routines under test.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiverspec::explorer::{
    classify_two_maximal, cospectral_partition, enumerate_class, probe_conjecture, ClassLimits,
    TwoMaximalType, TwoMaximalVerdict,
};
use quiverspec::mutation::congruence_witness;
use quiverspec::roots::{count_above_with_multiplicity, real_roots, RootLocation};
use quiverspec::spectral::{
    bounds_report, cospectral, exchange_polynomial, imaginary_parts, is_acyclic,
};
use quiverspec::{
    mutate, mutate_quiver, mutate_seq, radius_cmp, real_root_form, Arrow, ExchangeMatrix,
    IntPolynomial, ValuedQuiver,
};

type Mat = Vec<Vec<BigInt>>;
type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rows(b: &ExchangeMatrix) -> Mat {
    b.matrix().rows()
}

fn det(mut a: Mat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
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

fn sub(m: &Mat, idx: &[usize]) -> Mat {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[j][i].clone()).collect())
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1usize..1 << n).map(move |mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
}

/// Ascending coefficients of `det(xI - m)`, by Newton interpolation at `x = 0..=n`.
fn charpoly_oracle(m: &Mat) -> Vec<BigInt> {
    let n = m.len();
    let xs: Vec<BigRational> = (0..=n)
        .map(|t| BigRational::from_integer(int(t as i64)))
        .collect();
    let mut dd: Vec<BigRational> = (0..=n)
        .map(|t| {
            let shifted: Mat = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                int(t as i64) - &m[i][j]
                            } else {
                                -&m[i][j]
                            }
                        })
                        .collect()
                })
                .collect();
            BigRational::from_integer(det(shifted))
        })
        .collect();
    for level in 1..=n {
        for i in (level..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut p = vec![dd[n].clone()];
    for i in (0..n).rev() {
        let mut q = vec![BigRational::zero(); p.len() + 1];
        for (j, c) in p.iter().enumerate() {
            q[j + 1] += c;
            q[j] -= c * &xs[i];
        }
        q[0] += &dd[i];
        p = q;
    }
    p.into_iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integral interpolated coefficient");
            c.to_integer()
        })
        .collect()
}

fn same_poly(f: &IntPolynomial, oracle: &[BigInt]) -> bool {
    f.coeffs() == oracle
}

fn psd(m: &Mat) -> bool {
    subsets(m.len()).all(|s| !det(sub(m, &s)).is_negative())
}

/// Exchange radius against `p/q` for `q > 0`, read off the symmetric matrix
/// `p^2 D + q^2 D B^2`: it is congruent to `r^2 I + S^2` with `S` skew-symmetric
/// and similar to `B`, so it is semidefinite iff every `|λ| <= r`.
fn radius_oracle(b: &Mat, d: &[BigInt], p: &BigInt, q: &BigInt) -> Ordering {
    let n = b.len();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(&d[i] * &b[i][j], -(&d[j] * &b[j][i]), "bad symmetrizer");
        }
    }
    let b2 = matmul(b, b);
    let m: Mat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j {
                        p * p * &d[i]
                    } else {
                        BigInt::zero()
                    };
                    diag + q * q * &d[i] * &b2[i][j]
                })
                .collect()
        })
        .collect();
    assert_eq!(m, transpose(&m));
    if !psd(&m) {
        Ordering::Greater
    } else if det(m).is_zero() {
        Ordering::Equal
    } else {
        Ordering::Less
    }
}

fn radius_vs_int(b: &ExchangeMatrix, r: i64) -> Ordering {
    radius_oracle(&rows(b), b.symmetrizer(), &int(r), &BigInt::one())
}

/// Mutation straight from the defining formula.
fn mutate_oracle(b: &Mat, k: usize) -> Mat {
    let n = b.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -&b[i][j]
                    } else {
                        let prod = &b[i][k] * &b[k][j];
                        let bump = if prod.is_positive() {
                            prod
                        } else {
                            BigInt::zero()
                        };
                        &b[i][j] + b[i][k].signum() * bump
                    }
                })
                .collect()
        })
        .collect()
}

fn directed(q: &ValuedQuiver) -> Vec<Vec<bool>> {
    let n = q.order();
    let mut a = vec![vec![false; n]; n];
    for x in q.arrows() {
        a[x.source][x.target] = true;
    }
    a
}

fn topo_acyclic(q: &ValuedQuiver) -> bool {
    let a = directed(q);
    let n = a.len();
    let mut indeg: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| a[i][j]).count())
        .collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for w in 0..n {
            if a[v][w] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
    }
    seen == n
}

fn components(b: &Mat) -> Vec<Vec<usize>> {
    let n = b.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for w in 0..n {
                if !seen[w] && !b[v][w].is_zero() {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn connected(b: &Mat) -> bool {
    components(b).len() <= 1
}

fn has_oriented_triangle(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    (0..n).any(|i| (0..n).any(|j| a[i][j] && (0..n).any(|k| a[j][k] && a[k][i])))
}

// ---------------------------------------------------------------- generators

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Random valued quiver on `n` vertices: weights `d_i` in `1..=max_d`, each
/// pair joined with probability `density` by an arrow of value
/// `(t d_j / g, t d_i / g)` with both entries at most `max_entry`.
fn random_valued(
    rng: &mut ChaCha8Rng,
    n: usize,
    density: f64,
    max_d: i64,
    max_entry: i64,
) -> ValuedQuiver {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max_d)).collect();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            let (s, t) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
            let g = gcd(d[s], d[t]);
            let (u1, u2) = (d[t] / g, d[s] / g);
            let cap = max_entry / u1.max(u2);
            if cap == 0 {
                continue;
            }
            let m = rng.gen_range(1..=cap);
            arrows.push(Arrow::new(s, t, m * u1, m * u2));
        }
    }
    ValuedQuiver::new(n, arrows).expect("generated quiver is well formed")
}

/// Edges inserted in random order, skipping any that would close a 4-cycle.
fn random_square_free(rng: &mut ChaCha8Rng, n: usize) -> ValuedQuiver {
    use rand::seq::SliceRandom;
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    let keep = rng.gen_range(0..=pairs.len());
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for &(u, v) in pairs.iter().take(keep) {
        // a path u - a - b - v through distinct vertices closes a square
        let square = (0..n).any(|a| {
            a != v && adj[u][a] && (0..n).any(|b| b != u && b != a && adj[a][b] && adj[b][v])
        });
        if square {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
    }
    ValuedQuiver::simply_laced(n, &edges).unwrap()
}

/// Random tree, each vertex hung off an earlier one, arbitrary value pairs.
fn random_valued_tree(rng: &mut ChaCha8Rng, n: usize) -> ValuedQuiver {
    let arrows = (1..n)
        .map(|v| {
            let u = rng.gen_range(0..v);
            Arrow::new(u, v, rng.gen_range(1..=3i64), rng.gen_range(1..=3i64))
        })
        .collect();
    ValuedQuiver::new(n, arrows).unwrap()
}

/// Every simply-laced quiver on `n` vertices: each pair absent or oriented either way.
fn all_simply_laced(n: usize) -> Vec<ValuedQuiver> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0..3usize.pow(pairs.len() as u32))
        .map(|mut code| {
            let mut edges = Vec::new();
            for &(i, j) in &pairs {
                match code % 3 {
                    1 => edges.push((i, j)),
                    2 => edges.push((j, i)),
                    _ => {}
                }
                code /= 3;
            }
            ValuedQuiver::simply_laced(n, &edges).unwrap()
        })
        .collect()
}

fn path(n: usize) -> ValuedQuiver {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    ValuedQuiver::simply_laced(n, &edges).unwrap()
}

/// A centre with arms of the given lengths, arrows pointing away from it.
fn arms(lengths: &[usize]) -> ValuedQuiver {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    ValuedQuiver::simply_laced(next, &edges).unwrap()
}

/// Extended `D_n` (`n + 1` vertices): a path of `n - 3` vertices with two leaves at each end.
fn extended_d(n: usize) -> ValuedQuiver {
    if n == 4 {
        return arms(&[1, 1, 1, 1]);
    }
    let spine = n - 3;
    let mut edges: Vec<(usize, usize)> = (0..spine - 1).map(|i| (i, i + 1)).collect();
    edges.extend([
        (0, spine),
        (0, spine + 1),
        (spine - 1, spine + 2),
        (spine - 1, spine + 3),
    ]);
    ValuedQuiver::simply_laced(n + 1, &edges).unwrap()
}

fn em(q: &ValuedQuiver) -> ExchangeMatrix {
    q.exchange_matrix().unwrap()
}

// ---------------------------------------------------------------- criteria

fn involution() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut mutations = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.2..0.9);
        let b = em(&random_valued(&mut rng, n, density, 3, 5));
        let m = rows(&b);
        ensure!(m.iter().flatten().all(|x| x.abs() <= int(5)), "entry bound");
        for k in 0..n {
            let once = mutate(&b, k).map_err(|e| e.to_string())?;
            ensure!(
                rows(&once) == mutate_oracle(&m, k),
                "mutation formula differs at k={k} for {m:?}"
            );
            ensure!(once.symmetrizer() == b.symmetrizer(), "symmetrizer changed");
            let twice = mutate(&once, k).map_err(|e| e.to_string())?;
            ensure!(twice == b, "mu_k mu_k != id at k={k} for {m:?}");
            mutations += 1;
        }
    }
    Ok(format!("1000 matrices, {mutations} vertices"))
}

fn congruence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.2..0.9);
        let b = em(&random_valued(&mut rng, n, density, 1, 5));
        let m = rows(&b);
        for k in 0..n {
            let w = congruence_witness(&b, k).map_err(|e| e.to_string())?;
            let wm = w.w.rows();
            for i in 0..n {
                for j in 0..n {
                    if j != k {
                        ensure!(
                            wm[i][j] == int((i == j) as i64),
                            "W differs from I outside column k"
                        );
                    }
                }
            }
            ensure!(det(wm.clone()) == int(-1), "det W != -1");
            let conj = matmul(&matmul(&wm, &m), &transpose(&wm));
            ensure!(
                conj == mutate_oracle(&m, k),
                "W B W^T != mu_k(B) at k={k} for {m:?}"
            );
            checked += 1;
        }
    }
    Ok(format!("500 matrices, {checked} vertices"))
}

fn acyclicity() -> Check {
    let check = |q: &ValuedQuiver| -> Check {
        let spectral = is_acyclic(q).map_err(|e| e.to_string())?;
        let topo = topo_acyclic(q);
        let a = rows(&em(q))
            .iter()
            .map(|r| r.iter().map(|x| x.max(&BigInt::zero()).clone()).collect())
            .collect::<Mat>();
        let minors = subsets(a.len()).all(|s| det(sub(&a, &s)).is_zero());
        ensure!(
            spectral == topo && topo == minors,
            "{q:?}: spectral {spectral}, topological {topo}, minors {minors}"
        );
        Ok(String::new())
    };
    let mut exhaustive = 0;
    for n in 1..=4 {
        for q in all_simply_laced(n) {
            check(&q)?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let density = rng.gen_range(0.2..0.9);
        check(&random_valued(&mut rng, n, density, 3, 6))?;
    }
    Ok(format!("{exhaustive} exhaustive + 500 random"))
}

fn tree_orientations() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut orientations = 0;
    for n in 1..=6 {
        for _ in 0..40 {
            let q = random_valued_tree(&mut rng, n);
            let b = em(&q);
            let f = exchange_polynomial(&b);
            ensure!(
                same_poly(&f, &charpoly_oracle(&rows(&b))),
                "exchange polynomial of {q:?}"
            );
            let c: Mat = rows(&b)
                .iter()
                .map(|r| r.iter().map(|x| x.abs()).collect())
                .collect();
            let g = real_root_form(&f).map_err(|e| e.to_string())?;
            ensure!(
                same_poly(&g, &charpoly_oracle(&c)),
                "real-root form of {f} is not det(xI - C) for {q:?}"
            );
            let m = q.arrows().len();
            for mask in 0..1usize << m {
                let flips: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
                let r = q.reorient(&flips).map_err(|e| e.to_string())?;
                ensure!(
                    exchange_polynomial(&em(&r)) == f,
                    "reorientation {flips:?} of {q:?}"
                );
                orientations += 1;
            }
        }
    }
    Ok(format!("240 trees, {orientations} orientations"))
}

fn dynkin_radii() -> Check {
    let mut cases: Vec<(String, ValuedQuiver, Ordering)> = Vec::new();
    for n in 2..=8 {
        cases.push((format!("A{n}"), path(n), Ordering::Less));
    }
    for n in 4..=8 {
        cases.push((format!("D{n}"), arms(&[1, 1, n - 3]), Ordering::Less));
    }
    for n in 6..=8 {
        cases.push((format!("E{n}"), arms(&[1, 2, n - 4]), Ordering::Less));
    }
    for n in 4..=8 {
        cases.push((format!("extended D{n}"), extended_d(n), Ordering::Equal));
    }
    cases.push(("extended E6".into(), arms(&[2, 2, 2]), Ordering::Equal));
    cases.push(("extended E7".into(), arms(&[1, 3, 3]), Ordering::Equal));
    cases.push(("extended E8".into(), arms(&[1, 2, 5]), Ordering::Equal));
    let pendant = ValuedQuiver::simply_laced(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]).unwrap();
    cases.push((
        "extended D4 plus pendant".into(),
        pendant,
        Ordering::Greater,
    ));
    let two = BigRational::from_integer(int(2));
    for (name, q, want) in &cases {
        let v = radius_cmp(q, &two).map_err(|e| e.to_string())?;
        let oracle = radius_vs_int(&em(q), 2);
        ensure!(
            v.ordering == *want && oracle == *want,
            "{name}: got {:?}, oracle {oracle:?}, want {want:?}",
            v.ordering
        );
    }
    Ok(format!("{} trees decided exactly", cases.len()))
}

fn interlacing() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut pairs = 0;
    let mut exact = 0;
    for case in 0..200 {
        let n = rng.gen_range(2..=7);
        let density = rng.gen_range(0.3..0.9);
        let q = random_valued(&mut rng, n, density, 2, 4);
        let b = em(&q);
        let parent = imaginary_parts(&b);
        ensure!(
            parent.len() == n,
            "expected {n} imaginary parts, got {parent:?}"
        );
        for v in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let child_q = q.full_subquiver(&keep).map_err(|e| e.to_string())?;
            let child_b = em(&child_q);
            let child = imaginary_parts(&child_b);
            for i in 0..n - 1 {
                ensure!(
                    parent[i] + 1e-8 >= child[i] && child[i] + 1e-8 >= parent[i + 1],
                    "interlacing fails at {i}: {parent:?} vs {child:?} for {q:?} minus {}",
                    v + 1
                );
            }
            if case < 20 {
                exact_interlacing(&b, &child_b)?;
                exact += 1;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} vertex deletions, {exact} checked exactly"))
}

/// With `N(t)` the number of roots above `t`, the child's roots interlace the
/// parent's iff `N_child(t) <= N_parent(t) <= N_child(t) + 1` for every `t`.
/// Both counts are constant between consecutive distinct roots of the
/// product, so one rational point per gap suffices.
fn exact_interlacing(parent: &ExchangeMatrix, child: &ExchangeMatrix) -> Check {
    let g = real_root_form(&exchange_polynomial(parent)).map_err(|e| e.to_string())?;
    let h = real_root_form(&exchange_polynomial(child)).map_err(|e| e.to_string())?;
    let u = &g * &h;
    let eps = BigRational::new(BigInt::one(), int(1) << 40);
    let roots: Vec<RootLocation> = real_roots(&u, &eps).into_iter().map(|(r, _)| r).collect();
    let distinct = roots.len();
    let mut points: Vec<BigRational> = Vec::new();
    match (roots.first(), roots.last()) {
        (Some(lo), Some(hi)) => {
            points.push(lo.lo() - BigRational::one());
            for w in roots.windows(2) {
                points.push((w[0].hi() + w[1].lo()) / BigRational::from_integer(int(2)));
            }
            points.push(hi.hi() + BigRational::one());
        }
        _ => points.push(BigRational::zero()),
    }
    let u_sf = u.square_free_part();
    for (k, t) in points.iter().enumerate() {
        ensure!(!u.eval_cleared(t).is_zero(), "gap point {t} is a root");
        ensure!(
            count_above_with_multiplicity(&u_sf, t) == distinct - k.min(distinct),
            "gap point {t} is not in gap {k}"
        );
        let (ng, nh) = (
            count_above_with_multiplicity(&g, t),
            count_above_with_multiplicity(&h, t),
        );
        ensure!(nh <= ng && ng <= nh + 1, "counts {ng} vs {nh} above {t}");
    }
    Ok(String::new())
}

fn two_maximal() -> Check {
    let lim = ClassLimits::default();
    let x2 = em(&ValuedQuiver::new(2, vec![Arrow::simple(0, 1, 2)]).unwrap());
    let mut maximal: Vec<(ExchangeMatrix, TwoMaximalType)> = (1..=4)
        .map(|n| (em(&path(n)), TwoMaximalType::A(n)))
        .collect();
    maximal.push((x2, TwoMaximalType::X2));
    let mut members = 0;
    for (b, want) in &maximal {
        match classify_two_maximal(b, &lim).map_err(|e| e.to_string())? {
            TwoMaximalVerdict::TwoMaximal(t) if t == *want => {}
            other => return Err(format!("{want}: got {other:?}")),
        }
        let c = enumerate_class(b, &lim);
        ensure!(c.complete, "{want}: class did not close");
        for m in c.members.values() {
            ensure!(
                radius_vs_int(&m.matrix, 2) != Ordering::Greater,
                "{want}: member above 2"
            );
            members += 1;
        }
    }
    let not = |b: &ExchangeMatrix,
               name: &str|
     -> std::result::Result<quiverspec::explorer::RadiusWitness, String> {
        match classify_two_maximal(b, &lim).map_err(|e| e.to_string())? {
            TwoMaximalVerdict::Not(w) => {
                ensure!(
                    w.verdict.ordering == Ordering::Greater,
                    "{name}: witness verdict {:?}",
                    w.verdict.ordering
                );
                ensure!(
                    radius_vs_int(&w.matrix, 2) == Ordering::Greater,
                    "{name}: oracle disagrees"
                );
                let replay = mutate_seq(b, &w.word).map_err(|e| e.to_string())?;
                ensure!(
                    replay == w.matrix,
                    "{name}: word {} does not reproduce the witness",
                    w.word
                );
                Ok(w)
            }
            other => Err(format!("{name}: got {other:?}")),
        }
    };
    let a5 = not(&em(&path(5)), "A5")?;
    ensure!(
        (a5.verdict.approx - 5f64.sqrt()).abs() <= 1e-6,
        "A5 witness radius {}",
        a5.verdict.approx
    );
    let d4 = em(&ValuedQuiver::simply_laced(4, &[(1, 0), (0, 2), (0, 3)]).unwrap());
    let w = not(&d4, "D4")?;
    ensure!(w.word.one_based() == vec![1], "D4 witness word {}", w.word);
    let want = [0, 0, 5, 0, 1].map(int);
    ensure!(
        charpoly_oracle(&rows(&w.matrix)) == want,
        "D4 witness polynomial"
    );
    ensure!(
        exchange_polynomial(&w.matrix).coeffs() == want,
        "D4 witness exchange polynomial"
    );
    let three = em(&ValuedQuiver::new(2, vec![Arrow::simple(0, 1, 3)]).unwrap());
    let w3 = not(&three, "X3")?;
    Ok(format!(
        "A1-A4, X2 closed ({members} members); A5 {} ≈{:.7}, D4 {}, X3 {}",
        a5.word, a5.verdict.approx, w.word, w3.word
    ))
}

fn a3_class() -> Check {
    let b = em(&path(3));
    let c = enumerate_class(&b, &ClassLimits::default());
    let groups = cospectral_partition(&c);
    ensure!(
        c.complete && c.len() == 4,
        "class size {} (complete {})",
        c.len(),
        c.complete
    );
    ensure!(groups.len() == 2, "{} cospectral groups", groups.len());
    // brute force: breadth-first search with isomorphism by all relabellings
    let perms: Vec<Vec<usize>> = vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ];
    let canon = |m: &Mat| -> Mat {
        perms
            .iter()
            .map(|p| {
                (0..3)
                    .map(|i| (0..3).map(|j| m[p[i]][p[j]].clone()).collect())
                    .collect::<Mat>()
            })
            .min()
            .unwrap()
    };
    let mut seen: BTreeSet<Mat> = BTreeSet::new();
    let mut queue = VecDeque::from([rows(&b)]);
    seen.insert(canon(&rows(&b)));
    while let Some(m) = queue.pop_front() {
        for k in 0..3 {
            let next = mutate_oracle(&m, k);
            if seen.insert(canon(&next)) {
                queue.push_back(next);
            }
        }
    }
    let polys: BTreeSet<Vec<BigInt>> = seen.iter().map(charpoly_oracle).collect();
    ensure!(
        seen.len() == 4 && polys.len() == 2,
        "oracle: {} members, {} polynomials",
        seen.len(),
        polys.len()
    );
    Ok("4 members, 2 cospectral groups".into())
}

fn low_codegrees() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut skew, mut laced) = (0, 0);
    for case in 0..500 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.2..0.9);
        let max_d = if case % 3 == 0 { 1 } else { 3 };
        let q = random_valued(&mut rng, n, density, max_d, 6);
        let b = em(&q);
        let m = rows(&b);
        let f = exchange_polynomial(&b);
        if case < 100 {
            ensure!(same_poly(&f, &charpoly_oracle(&m)), "polynomial of {q:?}");
        }
        let codeg = |c: usize| f.coeff(n - c);
        for c in (1..=n).step_by(2) {
            ensure!(codeg(c).is_zero(), "odd codegree {c} of {f}");
        }
        if n >= 2 {
            let products: BigInt = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| -(&m[i][j] * &m[j][i]))
                .sum();
            ensure!(
                codeg(2) == products,
                "codegree 2 of {f} is not sum of -b_ij b_ji"
            );
            if b.is_skew_symmetric() {
                let squares: BigInt = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .map(|(i, j)| &m[i][j] * &m[i][j])
                    .sum();
                ensure!(
                    codeg(2) == squares,
                    "codegree 2 of {f} is not sum of b_ij^2"
                );
                skew += 1;
            }
            if q.is_simply_laced() {
                ensure!(
                    codeg(2) == int(q.arrows().len() as i64),
                    "codegree 2 of {f} is not the arrow count"
                );
                laced += 1;
            }
        }
    }
    Ok(format!(
        "500 quivers ({skew} skew-symmetric, {laced} simply-laced)"
    ))
}

fn codegree_four() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut subquivers = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let q = random_square_free(&mut rng, n);
        let f = exchange_polynomial(&em(&q));
        let arrows = q.arrows();
        let disjoint = (0..arrows.len())
            .flat_map(|i| (i + 1..arrows.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let (a, b) = (&arrows[i], &arrows[j]);
                a.source != b.source
                    && a.source != b.target
                    && a.target != b.source
                    && a.target != b.target
            })
            .count();
        let c4 = if n >= 4 {
            f.coeff(n - 4)
        } else {
            BigInt::zero()
        };
        ensure!(
            c4 == int(disjoint as i64),
            "codegree 4 of {f} vs {disjoint} disjoint pairs in {q:?}"
        );
        for s in subsets(n).filter(|s| s.len() == 4) {
            let sq = q.full_subquiver(&s).map_err(|e| e.to_string())?;
            let base = charpoly_oracle(&rows(&em(&sq)));
            let m = sq.arrows().len();
            for mask in 0..1usize << m {
                let flips: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
                let r = sq.reorient(&flips).map_err(|e| e.to_string())?;
                ensure!(
                    same_poly(&exchange_polynomial(&em(&r)), &base),
                    "orientation {flips:?} of {sq:?}"
                );
            }
            subquivers += 1;
        }
    }
    Ok(format!("200 quivers, {subquivers} order-4 subquivers"))
}

fn sink_source_cospectral() -> Check {
    let mut quivers = 0;
    let mut mutations = 0;
    for n in 2..=5 {
        for q in all_simply_laced(n) {
            let a = directed(&q);
            if !connected(&rows(&em(&q))) || has_oriented_triangle(&a) {
                continue;
            }
            quivers += 1;
            for k in 0..n {
                let out = (0..n).any(|j| a[k][j]);
                let inc = (0..n).any(|j| a[j][k]);
                let sink_or_source = out != inc;
                let mk = mutate_quiver(&q, k).map_err(|e| e.to_string())?;
                let same = cospectral(&q, &mk).map_err(|e| e.to_string())?;
                ensure!(
                    same == sink_or_source,
                    "{q:?} at {}: cospectral {same}, sink/source {sink_or_source}",
                    k + 1
                );
                mutations += 1;
            }
        }
    }
    Ok(format!("{quivers} quivers, {mutations} mutations"))
}

fn probe() -> Check {
    let mut summary = Vec::new();
    for n in 2..=5 {
        let c = enumerate_class(&em(&path(n)), &ClassLimits::default());
        ensure!(c.complete, "A{n} class did not close");
        let r = probe_conjecture(&c).map_err(|e| e.to_string())?;
        ensure!(
            r.candidates.is_empty(),
            "A{n}: candidates {:?}",
            r.candidates
        );
        summary.push(format!(
            "A{n}: {} members, {} pairs",
            c.len(),
            r.pairs_checked()
        ));
    }
    Ok(summary.join("; "))
}

fn bounds() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut quivers: Vec<ValuedQuiver> = (0..500)
        .map(|_| {
            let n = rng.gen_range(1..=7);
            let density = rng.gen_range(0.2..0.9);
            random_valued(&mut rng, n, density, 3, 6)
        })
        .collect();
    // regular cases where the exchange radius reaches h
    quivers.push(ValuedQuiver::new(2, vec![Arrow::simple(0, 1, 2)]).unwrap());
    quivers.push(ValuedQuiver::new(2, vec![Arrow::simple(0, 1, 3)]).unwrap());
    quivers.push(ValuedQuiver::simply_laced(4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap());
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    quivers.push(ValuedQuiver::simply_laced(6, &k33).unwrap());
    let mixed = vec![
        Arrow::simple(0, 1, 2),
        Arrow::simple(2, 3, 1),
        Arrow::simple(4, 3, 1),
    ];
    quivers.push(ValuedQuiver::new(5, mixed).unwrap());
    let mut equal = 0;
    for q in &quivers {
        let b = em(q);
        let m = rows(&b);
        let r = bounds_report(q).map_err(|e| e.to_string())?;
        let degrees: Vec<BigInt> = m
            .iter()
            .map(|row| row.iter().map(|x| x.abs()).sum())
            .collect();
        let h = degrees.iter().max().cloned().unwrap_or_default();
        ensure!(r.h == h, "h = {} vs {h}", r.h);
        ensure!(
            r.lambda_approx <= r.mu_approx + 1e-9
                && r.mu_approx <= h.to_string().parse::<f64>().unwrap() + 1e-9,
            "λ {} μ {} h {h} for {q:?}",
            r.lambda_approx,
            r.mu_approx
        );
        let oracle = radius_oracle(&m, b.symmetrizer(), &h, &BigInt::one());
        ensure!(
            r.lambda_vs_h == oracle,
            "λ vs h: {:?}, oracle {oracle:?} for {q:?}",
            r.lambda_vs_h
        );
        ensure!(oracle != Ordering::Greater, "λ > h for {q:?}");
        if oracle == Ordering::Equal {
            equal += 1;
            let comp = r
                .regular_witness
                .clone()
                .ok_or_else(|| format!("no regular witness for {q:?}"))?;
            ensure!(
                components(&m).contains(&comp),
                "witness {comp:?} is not a component"
            );
            ensure!(
                comp.iter().all(|&v| degrees[v] == h),
                "witness {comp:?} is not h-regular"
            );
            let d: Vec<BigInt> = comp.iter().map(|&v| b.symmetrizer()[v].clone()).collect();
            ensure!(
                radius_oracle(&sub(&m, &comp), &d, &h, &BigInt::one()) == Ordering::Equal,
                "component radius"
            );
        } else {
            ensure!(r.regular_witness.is_none(), "unexpected witness");
        }
    }
    ensure!(equal >= 5, "only {equal} equality cases exercised");
    Ok(format!("{} quivers, {equal} with λ = h", quivers.len()))
}

// ---------------------------------------------------------------- driver

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "mutation is an involution",
            limit: Duration::from_secs(5),
            run: involution,
        },
        Criterion {
            id: 2,
            name: "congruence form of mutation",
            limit: Duration::from_secs(5),
            run: congruence,
        },
        Criterion {
            id: 3,
            name: "spectral acyclicity",
            limit: Duration::from_secs(30),
            run: acyclicity,
        },
        Criterion {
            id: 4,
            name: "tree orientations are cospectral",
            limit: Duration::from_secs(30),
            run: tree_orientations,
        },
        Criterion {
            id: 5,
            name: "Dynkin and extended Dynkin radii",
            limit: Duration::from_secs(10),
            run: dynkin_radii,
        },
        Criterion {
            id: 6,
            name: "interlacing",
            limit: Duration::from_secs(60),
            run: interlacing,
        },
        Criterion {
            id: 7,
            name: "2-maximal classification",
            limit: Duration::from_secs(60),
            run: two_maximal,
        },
        Criterion {
            id: 8,
            name: "A3 class and cospectral groups",
            limit: Duration::from_secs(1),
            run: a3_class,
        },
        Criterion {
            id: 9,
            name: "low codegree coefficients",
            limit: Duration::from_secs(5),
            run: low_codegrees,
        },
        Criterion {
            id: 10,
            name: "codegree four without squares",
            limit: Duration::from_secs(30),
            run: codegree_four,
        },
        Criterion {
            id: 11,
            name: "cospectral mutation iff sink or source",
            limit: Duration::from_secs(60),
            run: sink_source_cospectral,
        },
        Criterion {
            id: 12,
            name: "sink/source probe on A2-A5",
            limit: Duration::from_secs(120),
            run: probe,
        },
        Criterion {
            id: 13,
            name: "radius bounds chain",
            limit: Duration::from_secs(30),
            run: bounds,
        },
    ];
    let only: BTreeMap<u32, ()> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .map(|i| (i, ()))
        .collect();
    let mut failed = 0;
    for c in criteria
        .iter()
        .filter(|c| only.is_empty() || only.contains_key(&c.id))
    {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; over time limit")),
            other => other,
        };
        let timing = format!("{:.2}s / {}s", elapsed.as_secs_f64(), c.limit.as_secs());
        match outcome {
            Ok(detail) => println!("PASS {:>2}  {}: {detail} [{timing}]", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {}: {why} [{timing}]", c.id, c.name);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
