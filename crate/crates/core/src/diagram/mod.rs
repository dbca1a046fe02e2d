//! Edge-weighted diagrams of skew-symmetrizable and quasi-Cartan matrices.
//!
//! A diagram built from `B` carries an arrow `i -> j` on each edge with
//! `B_ij > 0`; one built from a quasi-Cartan `A` carries the sign
//! `-sgn(A_ij)`. Weights are `|B_ij B_ji|` (resp. `A_ij A_ji`).

mod dynkin;
mod forbidden;
mod graph;
mod quasi_finite;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::SkewSymmetrizableMatrix;
use crate::quasi_cartan::QuasiCartanMatrix;

pub use dynkin::{dynkin_tree_shape, DynkinShape};
pub use forbidden::{contains_forbidden_subdiagram, ForbiddenPattern, ForbiddenWitness};
pub use graph::{ChordlessCycle, SimpleGraph};
pub use quasi_finite::{is_quasi_finite, QuasiFiniteReport, QuasiFiniteWitness, DEFAULT_QUASI_FINITE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of_i64(x: i64) -> Self {
        if x < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Bit used when signs are treated as elements of GF(2): `-1 -> 1`.
    pub fn to_bit(self) -> bool {
        self.is_minus()
    }

    pub fn from_bit(b: bool) -> Self {
        if b {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bit(self.to_bit() ^ rhs.to_bit())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeMark {
    Plain,
    Arrow { tail: usize, head: usize },
    Sign(Sign),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DiagramEdge {
    pub u: usize,
    pub v: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub weight: BigUint,
    pub mark: EdgeMark,
}

fn serialize_biguint<S: serde::Serializer>(w: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match w.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&w.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    edges: BTreeMap<(usize, usize), (BigUint, EdgeMark)>,
}

pub(crate) fn is_perfect_square(x: &BigUint) -> bool {
    let r = x.sqrt();
    &(&r * &r) == x
}

impl Diagram {
    /// Validates and builds a diagram from `(u, v, weight, mark)` records.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize, BigUint, EdgeMark)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut kinds = (false, false);
        for (u, v, w, mark) in edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { index: u.max(v), n });
            }
            if u == v {
                return Err(Error::MalformedDiagram {
                    reason: format!("self-loop at vertex {}", u + 1),
                });
            }
            if w.is_zero() {
                return Err(Error::MalformedDiagram {
                    reason: format!("edge ({}, {}) has weight 0", u + 1, v + 1),
                });
            }
            match mark {
                EdgeMark::Arrow { tail, head } => {
                    if (tail.min(head), tail.max(head)) != (u.min(v), u.max(v)) {
                        return Err(Error::MalformedDiagram {
                            reason: format!("arrow does not match edge ({}, {})", u + 1, v + 1),
                        });
                    }
                    kinds.0 = true;
                }
                EdgeMark::Sign(_) => kinds.1 = true,
                EdgeMark::Plain => {}
            }
            if map.insert((u.min(v), u.max(v)), (w, mark)).is_some() {
                return Err(Error::MalformedDiagram {
                    reason: format!("duplicate edge ({}, {})", u + 1, v + 1),
                });
            }
        }
        if kinds.0 && kinds.1 {
            return Err(Error::MalformedDiagram {
                reason: "diagram mixes arrows and signs".into(),
            });
        }
        let d = Self { n, edges: map };
        d.check_perfect_square()?;
        Ok(d)
    }

    /// Undirected diagram with the given weights; convenient in tests.
    pub fn weighted(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        Self::from_edges(
            n,
            edges
                .iter()
                .map(|&(u, v, w)| (u, v, BigUint::from(w), EdgeMark::Plain))
                .collect(),
        )
    }

    /// The directed diagram of `B`.
    pub fn of_skew(b: &SkewSymmetrizableMatrix) -> Self {
        let n = b.n();
        let mut edges = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let bij = b.get(i, j);
                if bij.is_zero() {
                    continue;
                }
                let mark = if bij.is_positive() {
                    EdgeMark::Arrow { tail: i, head: j }
                } else {
                    EdgeMark::Arrow { tail: j, head: i }
                };
                let w = b.weight(i, j).magnitude().clone();
                edges.insert((i, j), (w, mark));
            }
        }
        let d = Self { n, edges };
        debug_assert!(d.check_perfect_square().is_ok());
        d
    }

    /// The signed diagram of a quasi-Cartan matrix `A`.
    pub fn of_quasi_cartan(a: &QuasiCartanMatrix) -> Self {
        let m = a.matrix();
        let n = m.n();
        let mut edges = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let aij = m.get(i, j);
                if aij.is_zero() {
                    continue;
                }
                let w: BigInt = aij * m.get(j, i);
                let sign = if aij.is_positive() { Sign::Minus } else { Sign::Plus };
                edges.insert((i, j), (w.magnitude().clone(), EdgeMark::Sign(sign)));
            }
        }
        let d = Self { n, edges };
        debug_assert!(d.check_perfect_square().is_ok());
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = DiagramEdge> + '_ {
        self.edges.iter().map(|(&(u, v), (w, m))| DiagramEdge {
            u,
            v,
            weight: w.clone(),
            mark: *m,
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&(u.min(v), u.max(v)))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&BigUint> {
        self.edges.get(&(u.min(v), u.max(v))).map(|(w, _)| w)
    }

    pub fn mark(&self, u: usize, v: usize) -> Option<EdgeMark> {
        self.edges.get(&(u.min(v), u.max(v))).map(|(_, m)| *m)
    }

    /// Whether the edge `{u, v}` is an arrow `u -> v`.
    pub fn points(&self, u: usize, v: usize) -> bool {
        matches!(self.mark(u, v), Some(EdgeMark::Arrow { tail, .. }) if tail == u)
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        match self.mark(u, v) {
            Some(EdgeMark::Sign(s)) => Some(s),
            _ => None,
        }
    }

    pub fn is_directed(&self) -> bool {
        self.edges
            .values()
            .all(|(_, m)| matches!(m, EdgeMark::Arrow { .. }))
    }

    pub fn is_signed(&self) -> bool {
        self.edges.values().all(|(_, m)| matches!(m, EdgeMark::Sign(_)))
    }

    /// Underlying simple graph.
    pub fn graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for &(u, v) in self.edges.keys() {
            g.add_edge(u, v).expect("validated edge");
        }
        g
    }

    /// Same diagram with all orientation and sign data dropped.
    pub fn weights_only(&self) -> Self {
        Self {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|(&k, (w, _))| (k, (w.clone(), EdgeMark::Plain)))
                .collect(),
        }
    }

    /// Sub-diagram on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut edges = BTreeMap::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if a >= b {
                    continue;
                }
                if let Some((w, m)) = self.edges.get(&(u.min(v), u.max(v))) {
                    let mark = match *m {
                        EdgeMark::Arrow { tail, .. } if tail == u => EdgeMark::Arrow { tail: a, head: b },
                        EdgeMark::Arrow { .. } => EdgeMark::Arrow { tail: b, head: a },
                        other => other,
                    };
                    edges.insert((a, b), (w.clone(), mark));
                }
            }
        }
        Self {
            n: vertices.len(),
            edges,
        }
    }

    pub fn chordless_cycles(&self) -> Vec<ChordlessCycle> {
        self.graph().chordless_cycles()
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.graph().connected_components()
    }

    /// For a directed diagram: whether the arrows along `cycle` all point
    /// the same way around it.
    pub fn is_cyclically_oriented(&self, cycle: &ChordlessCycle) -> bool {
        let forward = cycle.steps().all(|(a, b)| self.points(a, b));
        let backward = cycle.steps().all(|(a, b)| self.points(b, a));
        forward || backward
    }

    /// Weights along `cycle` in cycle order.
    pub fn cycle_weights(&self, cycle: &ChordlessCycle) -> Vec<BigUint> {
        cycle
            .steps()
            .map(|(a, b)| self.weight(a, b).cloned().unwrap_or_default())
            .collect()
    }

    /// Checks that the product of weights along every cycle is a perfect
    /// square, using the fundamental cycles of a BFS spanning forest.
    pub fn check_perfect_square(&self) -> Result<()> {
        let g = self.graph();
        let n = self.n;
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut tree = std::collections::BTreeSet::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        parent[v] = Some(u);
                        depth[v] = depth[u] + 1;
                        tree.insert((u.min(v), u.max(v)));
                        queue.push_back(v);
                    }
                }
            }
        }
        for (&(u, v), (w, _)) in &self.edges {
            if tree.contains(&(u, v)) {
                continue;
            }
            let mut product = w.clone();
            let (mut a, mut b) = (u, v);
            while a != b {
                if depth[a] < depth[b] {
                    std::mem::swap(&mut a, &mut b);
                }
                let p = parent[a].expect("same component");
                product *= self.weight(a, p).expect("tree edge");
                a = p;
            }
            if !is_perfect_square(&product) {
                return Err(Error::MalformedDiagram {
                    reason: format!(
                        "weight product {} on the cycle closed by edge ({}, {}) is not a perfect square",
                        product,
                        u + 1,
                        v + 1
                    ),
                });
            }
        }
        Ok(())
    }

    /// Diagram mutation at vertex `k` (directed diagrams only).
    ///
    /// Edges at `k` are reversed. For every oriented path `i -> k -> j` with
    /// weights `a`, `b` and third weight `c` (possibly 0), the new weight is
    /// `ab + c - 2e*sqrt(abc)` with `e = +1` when `{i, j, k}` is an oriented
    /// cycle and `-1` otherwise. The new edge points `i -> j` unless the
    /// cycle case has `c > ab`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::IndexOutOfRange { index: k, n: self.n });
        }
        if !self.is_directed() {
            return Err(Error::MalformedDiagram {
                reason: "mutation needs a directed diagram".into(),
            });
        }
        let mut edges = self.edges.clone();
        for (&(u, v), (_, mark)) in edges.iter_mut() {
            if u == k || v == k {
                if let EdgeMark::Arrow { tail, head } = *mark {
                    *mark = EdgeMark::Arrow { tail: head, head: tail };
                }
            }
        }
        let ins: Vec<usize> = (0..self.n).filter(|&i| self.points(i, k)).collect();
        let outs: Vec<usize> = (0..self.n).filter(|&j| self.points(k, j)).collect();
        for &i in &ins {
            for &j in &outs {
                let a = self.weight(i, k).expect("edge");
                let b = self.weight(k, j).expect("edge");
                let ab = a * b;
                let c = self.weight(i, j).cloned().unwrap_or_else(BigUint::zero);
                let key = (i.min(j), i.max(j));
                if c.is_zero() {
                    edges.insert(key, (ab, EdgeMark::Arrow { tail: i, head: j }));
                    continue;
                }
                let abc = &ab * &c;
                let root = abc.sqrt();
                if &root * &root != abc {
                    return Err(Error::MalformedDiagram {
                        reason: format!(
                            "weights around ({}, {}, {}) multiply to {}, not a perfect square",
                            i + 1,
                            k + 1,
                            j + 1,
                            abc
                        ),
                    });
                }
                let two_root = &root * BigUint::from(2u32);
                let oriented_cycle = self.points(j, i);
                let (new_w, tail, head) = if oriented_cycle {
                    // (sqrt(ab) - sqrt(c))^2; direction follows the larger term
                    let w = &ab + &c - &two_root;
                    if ab >= c {
                        (w, i, j)
                    } else {
                        (w, j, i)
                    }
                } else {
                    (&ab + &c + &two_root, i, j)
                };
                if new_w.is_zero() {
                    edges.remove(&key);
                } else {
                    edges.insert(key, (new_w, EdgeMark::Arrow { tail, head }));
                }
            }
        }
        Ok(Self { n: self.n, edges })
    }

    /// Graphviz rendering; weights other than 1 become edge labels.
    pub fn to_dot(&self) -> String {
        let directed = self.is_directed() && !self.edges.is_empty();
        let mut s = String::new();
        let (kw, arrow) = if directed { ("digraph", "->") } else { ("graph", "--") };
        let _ = writeln!(s, "{} G {{", kw);
        for v in 0..self.n {
            let _ = writeln!(s, "  {};", v + 1);
        }
        for (&(u, v), (w, mark)) in &self.edges {
            let (a, b) = match mark {
                EdgeMark::Arrow { tail, head } => (*tail, *head),
                _ => (u, v),
            };
            let mut attrs = Vec::new();
            if !w.is_one() {
                attrs.push(format!("label=\"{}\"", w));
            }
            if let EdgeMark::Sign(Sign::Minus) = mark {
                attrs.push("style=dashed".to_string());
            }
            let attr = if attrs.is_empty() {
                String::new()
            } else {
                format!(" [{}]", attrs.join(", "))
            };
            let _ = writeln!(s, "  {} {} {}{};", a + 1, arrow, b + 1, attr);
        }
        s.push_str("}\n");
        s
    }
}
