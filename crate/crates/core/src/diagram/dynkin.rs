use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::Diagram;

/// Connected Dynkin diagrams, as weighted trees. `B_n` and `C_n` share one
/// diagram, since weights forget which end is long.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DynkinShape {
    A(usize),
    BC(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl fmt::Display for DynkinShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinShape::A(n) => write!(f, "A{}", n),
            DynkinShape::BC(n) => write!(f, "B{}/C{}", n, n),
            DynkinShape::D(n) => write!(f, "D{}", n),
            DynkinShape::E(n) => write!(f, "E{}", n),
            DynkinShape::F4 => write!(f, "F4"),
            DynkinShape::G2 => write!(f, "G2"),
        }
    }
}

pub(crate) fn small_weight(d: &Diagram, u: usize, v: usize) -> u64 {
    d.weight(u, v).map_or(0, |w| w.to_u64().unwrap_or(u64::MAX))
}

/// Names the Dynkin diagram `d` is, if `d` is a tree that is one.
pub fn dynkin_tree_shape(d: &Diagram) -> Option<DynkinShape> {
    let n = d.n();
    let g = d.graph();
    if !g.is_tree() {
        return None;
    }
    if n == 1 {
        return Some(DynkinShape::A(1));
    }
    let weights: Vec<u64> = g.edges().iter().map(|&(u, v)| small_weight(d, u, v)).collect();
    if weights.iter().any(|&w| w > 3) {
        return None;
    }
    if weights.contains(&3) {
        return (n == 2).then_some(DynkinShape::G2);
    }
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let doubles: Vec<usize> = (0..weights.len()).filter(|&e| weights[e] == 2).collect();
    match doubles.len() {
        0 => {}
        1 => {
            if max_degree > 2 {
                return None;
            }
            let (u, v) = g.edges()[doubles[0]];
            let at_end = g.degree(u) == 1 || g.degree(v) == 1;
            if at_end {
                return Some(DynkinShape::BC(n));
            }
            return (n == 4).then_some(DynkinShape::F4);
        }
        _ => return None,
    }
    if max_degree <= 2 {
        return Some(DynkinShape::A(n));
    }
    if max_degree > 3 {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    if branch.len() != 1 {
        return None;
    }
    let center = branch[0];
    let mut arms: Vec<usize> = g
        .neighbors(center)
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while g.degree(cur) == 2 {
                let next = *g.neighbors(cur).iter().find(|&&x| x != prev).expect("degree 2");
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, _) => Some(DynkinShape::D(n)),
        (1, 2, 2..=4) => Some(DynkinShape::E(n)),
        _ => None,
    }
}
