use serde::Serialize;

use super::{cycle_surplus, order_edges};
use crate::diagram::{ChordlessCycle, Sign, SimpleGraph};
use crate::error::{Error, Result};
use crate::matrix::{gf2_solve, Gf2Matrix, Gf2Solution};

/// A sign on every edge of a graph, edges in `SimpleGraph::edges()` order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignAssignment {
    pub edges: Vec<(usize, usize)>,
    pub signs: Vec<Sign>,
}

impl SignAssignment {
    pub fn new(edges: Vec<(usize, usize)>, signs: Vec<Sign>) -> Result<Self> {
        if edges.len() != signs.len() {
            return Err(Error::DimensionMismatch {
                expected: edges.len(),
                found: signs.len(),
            });
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let mut pairs: Vec<((usize, usize), Sign)> = edges.drain(..).zip(signs).collect();
        pairs.sort();
        let (edges, signs) = pairs.into_iter().unzip();
        Ok(Self { edges, signs })
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok().map(|t| self.signs[t])
    }

    pub fn cycle_product(&self, cycle: &ChordlessCycle) -> Option<Sign> {
        cycle
            .edges()
            .try_fold(Sign::Plus, |acc, (u, v)| self.sign(u, v).map(|s| acc * s))
    }

    /// Negates the signs of all edges at the given vertex.
    pub fn flip_vertex(&mut self, v: usize) {
        for (t, &(a, b)) in self.edges.iter().enumerate() {
            if a == v || b == v {
                self.signs[t] = self.signs[t].flip();
            }
        }
    }

    pub fn bits(&self) -> Vec<bool> {
        self.signs.iter().map(|s| s.to_bit()).collect()
    }
}

/// Edge-by-cycle incidence: row per cycle, column per edge of `g`.
pub(crate) fn cycle_incidence(g: &SimpleGraph, cycles: &[ChordlessCycle]) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(cycles.len(), g.edge_count());
    for (z, c) in cycles.iter().enumerate() {
        for (u, v) in c.edges() {
            m.set(z, g.edge_index(u, v).expect("cycle edge"), true);
        }
    }
    m
}

/// Vertex-flip map: row per edge, column per vertex.
pub(crate) fn vertex_incidence(g: &SimpleGraph) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(g.edge_count(), g.n());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        m.set(e, u, true);
        m.set(e, v, true);
    }
    m
}

/// Signs with product `-1` around every chordless cycle. Edges are taken
/// in the order of `order_edges`; an edge that is the last edge of some
/// cycle gets the sign completing that cycle, every other edge gets `+1`.
pub fn assign_signs(g: &SimpleGraph) -> Result<SignAssignment> {
    let cycles = g.chordless_cycles();
    if cycle_surplus(g, &cycles) != 0 {
        return Err(Error::NotOrientable);
    }
    let ordering = order_edges(g);
    let mut closes: Vec<Option<&ChordlessCycle>> = vec![None; ordering.edges.len()];
    for c in &cycles {
        let t = ordering.max_position(c);
        if closes[t].replace(c).is_some() {
            return Err(Error::NotOrientable);
        }
    }
    let mut signs = vec![Sign::Plus; g.edge_count()];
    for (t, &(u, v)) in ordering.edges.iter().enumerate() {
        let Some(c) = closes[t] else { continue };
        let others = c
            .edges()
            .filter(|&e| e != (u, v))
            .fold(Sign::Plus, |acc, (a, b)| acc * signs[g.edge_index(a, b).expect("edge")]);
        signs[g.edge_index(u, v).expect("edge")] = Sign::Minus * others;
    }
    let out = SignAssignment {
        edges: g.edges().to_vec(),
        signs,
    };

    // the linear system "product -1 on every cycle" must be solvable and
    // satisfied by the greedy answer
    let system = cycle_incidence(g, &cycles);
    let rhs = vec![true; cycles.len()];
    match gf2_solve(&system, &rhs)? {
        Gf2Solution::NoSolution => Err(Error::NotOrientable),
        Gf2Solution::Solution { .. } if system.mul_vec(&out.bits()) == rhs => Ok(out),
        Gf2Solution::Solution { .. } => Err(Error::NotOrientable),
    }
}

/// Whether two sign assignments on `g` differ by flipping the signs at
/// some set of vertices.
pub fn differ_by_vertex_flips(g: &SimpleGraph, a: &SignAssignment, b: &SignAssignment) -> Result<bool> {
    if a.edges != g.edges() || b.edges != g.edges() {
        return Err(Error::SignDomainMismatch {
            reason: "assignments must cover exactly the edges of the graph".into(),
        });
    }
    let ratio: Vec<bool> = a.bits().iter().zip(b.bits()).map(|(x, y)| x ^ y).collect();
    Ok(matches!(
        gf2_solve(&vertex_incidence(g), &ratio)?,
        Gf2Solution::Solution { .. }
    ))
}
