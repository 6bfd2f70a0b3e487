//! Dynkin and extended Dynkin recognition for tree quivers.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{QuiverError, Result};
use crate::quiver::ValuedQuiver;
use crate::spectral::{radius_cmp, RadiusVerdict};

/// A simply-laced Dynkin type. Extended diagrams are named by the type they
/// extend, so the extended `D4` has five vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Diagram {
    Dynkin(DynkinType),
    ExtendedDynkin(DynkinType),
    Neither { reason: String },
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::Dynkin(t) => write!(f, "Dynkin {t}"),
            Diagram::ExtendedDynkin(t) => write!(f, "extended Dynkin {t}"),
            Diagram::Neither { reason } => write!(f, "neither ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Recognition {
    pub diagram: Diagram,
    /// Radius against 2.
    pub verdict: RadiusVerdict,
}

/// Shape of a tree read off its degrees and arm lengths.
fn tree_shape(n: usize, nb: &[Vec<usize>]) -> Option<Diagram> {
    let deg: Vec<usize> = nb.iter().map(Vec::len).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    // length of the path leaving `from` through `first` until a leaf or branch vertex
    let arm = |from: usize, first: usize| -> (usize, usize) {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while deg[cur] == 2 {
            let next = if nb[cur][0] == prev {
                nb[cur][1]
            } else {
                nb[cur][0]
            };
            prev = cur;
            cur = next;
            len += 1;
        }
        (len, cur)
    };
    match branch.as_slice() {
        [] => Some(Diagram::Dynkin(DynkinType::A(n))),
        [c] if deg[*c] == 4 => (n == 5).then_some(Diagram::ExtendedDynkin(DynkinType::D(4))),
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = nb[*c].iter().map(|&w| arm(*c, w).0).collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, k] => Some(Diagram::Dynkin(DynkinType::D(k + 3))),
                [1, 2, 2] => Some(Diagram::Dynkin(DynkinType::E(6))),
                [1, 2, 3] => Some(Diagram::Dynkin(DynkinType::E(7))),
                [1, 2, 4] => Some(Diagram::Dynkin(DynkinType::E(8))),
                [2, 2, 2] => Some(Diagram::ExtendedDynkin(DynkinType::E(6))),
                [1, 3, 3] => Some(Diagram::ExtendedDynkin(DynkinType::E(7))),
                [1, 2, 5] => Some(Diagram::ExtendedDynkin(DynkinType::E(8))),
                _ => None,
            }
        }
        [u, v] if deg[*u] == 3 && deg[*v] == 3 => {
            // two forks joined by a path: every arm not leading to the other fork is a leaf
            let forks_ok = [(*u, *v), (*v, *u)].iter().all(|&(a, b)| {
                let ends: Vec<(usize, usize)> = nb[a].iter().map(|&w| arm(a, w)).collect();
                ends.iter().filter(|&&(_, end)| end == b).count() == 1
                    && ends
                        .iter()
                        .filter(|&&(len, end)| end != b && len == 1)
                        .count()
                        == 2
            });
            forks_ok.then_some(Diagram::ExtendedDynkin(DynkinType::D(n - 1)))
        }
        _ => None,
    }
}

/// Names the underlying graph of a connected simply-laced tree quiver and
/// checks the name against the radius test (below 2 for Dynkin, exactly 2 for
/// extended Dynkin).
pub fn recognize_diagram(q: &ValuedQuiver) -> Result<Recognition> {
    let n = q.order();
    if !q.is_simply_laced() {
        return Err(QuiverError::NotSimplyLaced);
    }
    if n == 0 || !q.is_connected() {
        return Err(QuiverError::Disconnected);
    }
    if q.arrows().len() != n - 1 {
        return Err(QuiverError::NotATree);
    }
    let shape = tree_shape(n, &q.neighbors());
    let verdict = radius_cmp(q, &BigRational::from_integer(2.into()))?;
    let diagram = match (verdict.ordering, shape) {
        (Ordering::Less, Some(d @ Diagram::Dynkin(_))) => d,
        (Ordering::Equal, Some(d @ Diagram::ExtendedDynkin(_))) => d,
        (Ordering::Greater, None) => Diagram::Neither {
            reason: "radius > 2".to_string(),
        },
        (ord, shape) => {
            panic!("tree shape {shape:?} disagrees with radius verdict {ord:?} for {q:?}")
        }
    };
    Ok(Recognition { diagram, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::valued_tree;
    use proptest::prelude::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> ValuedQuiver {
        ValuedQuiver::simply_laced(n, edges).unwrap()
    }

    fn path(n: usize) -> ValuedQuiver {
        tree(
            n,
            &(0..n.saturating_sub(1))
                .map(|i| (i, i + 1))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn examples() {
        assert_eq!(
            recognize_diagram(&path(4)).unwrap().diagram,
            Diagram::Dynkin(DynkinType::A(4))
        );
        let zig = tree(4, &[(0, 1), (2, 1), (2, 3)]);
        assert_eq!(
            recognize_diagram(&zig).unwrap().diagram,
            Diagram::Dynkin(DynkinType::A(4))
        );
        let star = tree(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let r = recognize_diagram(&star).unwrap();
        assert_eq!(r.diagram, Diagram::ExtendedDynkin(DynkinType::D(4)));
        assert_eq!(r.verdict.ordering, Ordering::Equal);
        assert_eq!(
            recognize_diagram(&path(2)).unwrap().diagram,
            Diagram::Dynkin(DynkinType::A(2))
        );
        assert_eq!(
            recognize_diagram(&path(1)).unwrap().diagram,
            Diagram::Dynkin(DynkinType::A(1))
        );
    }

    #[test]
    fn exceptional_and_affine() {
        // E8: arms 1, 2, 4 around vertex 0
        let e8 = tree(8, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)]);
        assert_eq!(
            recognize_diagram(&e8).unwrap().diagram,
            Diagram::Dynkin(DynkinType::E(8))
        );
        // extended D6: forks at 0 and 3
        let d6 = tree(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]);
        let r = recognize_diagram(&d6).unwrap();
        assert_eq!(r.diagram, Diagram::ExtendedDynkin(DynkinType::D(6)));
        // extended D4 plus a pendant edge
        let big = tree(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]);
        let r = recognize_diagram(&big).unwrap();
        assert!(matches!(r.diagram, Diagram::Neither { .. }));
        assert_eq!(r.verdict.ordering, Ordering::Greater);
    }

    #[test]
    fn rejects_non_trees() {
        let cyc = tree(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(recognize_diagram(&cyc).unwrap_err(), QuiverError::NotATree);
        let split = tree(3, &[(0, 1)]);
        assert_eq!(
            recognize_diagram(&split).unwrap_err(),
            QuiverError::Disconnected
        );
        let x2 = ValuedQuiver::new(2, vec![crate::quiver::Arrow::simple(0, 1, 2)]).unwrap();
        assert_eq!(
            recognize_diagram(&x2).unwrap_err(),
            QuiverError::NotSimplyLaced
        );
    }

    proptest! {
        // recognize_diagram panics if shape and radius disagree
        #[test]
        fn shape_agrees_with_radius(q in valued_tree(11)) {
            let arrows: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
            let simple = tree(q.order(), &arrows);
            recognize_diagram(&simple).unwrap();
        }
    }
}
