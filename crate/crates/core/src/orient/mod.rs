//! Cyclic orientability of undirected graphs: three equivalent tests, an
//! exhaustive oracle, a constructive orientation and edge sign assignment.

mod construct;
mod criteria;
mod signs;

use std::collections::VecDeque;

use serde::Serialize;

use crate::diagram::{ChordlessCycle, SimpleGraph};

pub use construct::{construct_orientation, Orientation};
pub use criteria::{
    brute_force_orientable, check_edge_ordering_criterion, check_exact_sequence, cycle_surplus,
    is_cyclically_orientable_count, BRUTE_FORCE_EDGE_CAP,
};
pub use signs::{assign_signs, differ_by_vertex_flips, SignAssignment};

/// All edges of a graph in a fixed order: a spanning forest first, then
/// the edges that close cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeOrdering {
    pub edges: Vec<(usize, usize)>,
    pub split_point: usize,
}

impl EdgeOrdering {
    pub fn position(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.iter().position(|&x| x == e)
    }

    pub fn suffix(&self) -> &[(usize, usize)] {
        &self.edges[self.split_point..]
    }

    /// Position of the last edge of `cycle` in this ordering.
    pub fn max_position(&self, cycle: &ChordlessCycle) -> usize {
        cycle
            .edges()
            .map(|(u, v)| self.position(u, v).expect("cycle edge in ordering"))
            .max()
            .expect("nonempty cycle")
    }
}

/// BFS spanning forest from each component's minimal vertex, then the
/// remaining edges one at a time, always the one whose endpoints are
/// closest in the graph placed so far (ties: lexicographic).
pub fn order_edges(g: &SimpleGraph) -> EdgeOrdering {
    let n = g.n();
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut seen = vec![false; n];
    let mut placed = SimpleGraph::new(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    edges.push((u.min(v), u.max(v)));
                    placed.add_edge(u, v).expect("valid edge");
                    queue.push_back(v);
                }
            }
        }
    }
    let split_point = edges.len();
    let mut rest: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !placed.has_edge(u, v))
        .collect();
    while !rest.is_empty() {
        let (idx, _) = rest
            .iter()
            .enumerate()
            .map(|(t, &(u, v))| (t, (distance(&placed, u, v), (u, v))))
            .min_by_key(|&(_, key)| key)
            .expect("nonempty");
        let (u, v) = rest.remove(idx);
        placed.add_edge(u, v).expect("valid edge");
        edges.push((u, v));
    }
    EdgeOrdering { edges, split_point }
}

pub(crate) fn distance(g: &SimpleGraph, s: usize, t: usize) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            return dist[u];
        }
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    usize::MAX
}
