//! Search for the affine weighted trees that no positive diagram contains
//! as an induced subdiagram.

use std::fmt;

use serde::Serialize;

use super::dynkin::small_weight;
use super::Diagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ForbiddenPattern {
    /// Path with weights 2, 2.
    C2,
    /// Path with weights 2, 1, ..., 1, 2 on `n + 1` vertices, `n > 2`.
    Cn(usize),
    /// A weight-2 edge into a vertex that branches into two weight-1 edges.
    B3,
    /// Center joined to four vertices by weight-1 edges.
    D4,
    /// Path with weights 3, then anything.
    G2,
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenPattern::C2 => write!(f, "affine C2"),
            ForbiddenPattern::Cn(n) => write!(f, "affine C{}", n),
            ForbiddenPattern::B3 => write!(f, "affine B3"),
            ForbiddenPattern::D4 => write!(f, "affine D4"),
            ForbiddenPattern::G2 => write!(f, "affine G2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub pattern: ForbiddenPattern,
    /// Vertices of the match, in the order the pattern lists them.
    pub vertices: Vec<usize>,
}

/// First induced forbidden subdiagram, trying patterns in declaration
/// order and vertices in ascending order.
pub fn contains_forbidden_subdiagram(d: &Diagram) -> Option<ForbiddenWitness> {
    find_c2(d)
        .or_else(|| find_cn(d))
        .or_else(|| find_b3(d))
        .or_else(|| find_d4(d))
        .or_else(|| find_g2(d))
}

fn nbrs(d: &Diagram, v: usize) -> impl Iterator<Item = usize> + '_ {
    (0..d.n()).filter(move |&u| d.has_edge(u, v))
}

fn independent(d: &Diagram, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(a, &u)| vs[a + 1..].iter().all(|&v| !d.has_edge(u, v)))
}

fn find_c2(d: &Diagram) -> Option<ForbiddenWitness> {
    for c in 0..d.n() {
        let heavy: Vec<usize> = nbrs(d, c).filter(|&x| small_weight(d, c, x) == 2).collect();
        for (i, &a) in heavy.iter().enumerate() {
            for &b in &heavy[i + 1..] {
                if !d.has_edge(a, b) {
                    return Some(ForbiddenWitness {
                        pattern: ForbiddenPattern::C2,
                        vertices: vec![a, c, b],
                    });
                }
            }
        }
    }
    None
}

fn find_cn(d: &Diagram) -> Option<ForbiddenWitness> {
    for v0 in 0..d.n() {
        for v1 in nbrs(d, v0) {
            if small_weight(d, v0, v1) != 2 {
                continue;
            }
            let mut path = vec![v0, v1];
            if let Some(found) = extend_cn(d, &mut path) {
                return Some(ForbiddenWitness {
                    pattern: ForbiddenPattern::Cn(found.len() - 1),
                    vertices: found,
                });
            }
        }
    }
    None
}

/// Extends an induced path along weight-1 edges until a weight-2 edge can
/// close the pattern.
fn extend_cn(d: &Diagram, path: &mut Vec<usize>) -> Option<Vec<usize>> {
    let last = *path.last().expect("nonempty");
    let len = path.len();
    for w in nbrs(d, last) {
        if path.contains(&w) || path[..len - 1].iter().any(|&x| d.has_edge(x, w)) {
            continue;
        }
        match small_weight(d, last, w) {
            2 if path.len() >= 3 => {
                let mut out = path.clone();
                out.push(w);
                return Some(out);
            }
            1 => {
                path.push(w);
                let r = extend_cn(d, path);
                path.pop();
                if r.is_some() {
                    return r;
                }
            }
            _ => {}
        }
    }
    None
}

fn find_b3(d: &Diagram) -> Option<ForbiddenWitness> {
    for c in 0..d.n() {
        let light: Vec<usize> = nbrs(d, c).filter(|&x| small_weight(d, c, x) == 1).collect();
        for x in nbrs(d, c).filter(|&x| small_weight(d, c, x) == 2) {
            for (i, &y) in light.iter().enumerate() {
                for &z in &light[i + 1..] {
                    if independent(d, &[x, y, z]) {
                        return Some(ForbiddenWitness {
                            pattern: ForbiddenPattern::B3,
                            vertices: vec![x, c, y, z],
                        });
                    }
                }
            }
        }
    }
    None
}

fn find_d4(d: &Diagram) -> Option<ForbiddenWitness> {
    for c in 0..d.n() {
        let light: Vec<usize> = nbrs(d, c).filter(|&x| small_weight(d, c, x) == 1).collect();
        let mut chosen = Vec::new();
        if pick_independent(d, &light, 0, 4, &mut chosen) {
            let mut vertices = vec![c];
            vertices.extend(chosen);
            return Some(ForbiddenWitness {
                pattern: ForbiddenPattern::D4,
                vertices,
            });
        }
    }
    None
}

fn pick_independent(d: &Diagram, pool: &[usize], from: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == k {
        return true;
    }
    for i in from..pool.len() {
        let v = pool[i];
        if chosen.iter().all(|&u| !d.has_edge(u, v)) {
            chosen.push(v);
            if pick_independent(d, pool, i + 1, k, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn find_g2(d: &Diagram) -> Option<ForbiddenWitness> {
    for c in 0..d.n() {
        for x in nbrs(d, c).filter(|&x| small_weight(d, c, x) == 3) {
            if let Some(y) = nbrs(d, c).find(|&y| y != x && !d.has_edge(x, y)) {
                return Some(ForbiddenWitness {
                    pattern: ForbiddenPattern::G2,
                    vertices: vec![x, c, y],
                });
            }
        }
    }
    None
}
