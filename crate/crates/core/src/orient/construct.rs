use serde::Serialize;

use super::{is_cyclically_orientable_count, order_edges};
use crate::diagram::{ChordlessCycle, SimpleGraph};
use crate::error::{Error, Result};

/// One direction per edge, aligned with `SimpleGraph::edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Arcs as `(tail, head)`, in the graph's edge order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn points(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn is_cyclic_on(&self, cycle: &ChordlessCycle) -> bool {
        cycle.steps().all(|(a, b)| self.points(a, b)) || cycle.steps().all(|(a, b)| self.points(b, a))
    }
}

/// Orients edges in the order of `order_edges`. Forest edges go from the
/// smaller endpoint. A closing edge `{i, j}` has exactly one chain (induced
/// path) between its endpoints among the edges placed before it; that
/// chain is first made to run `i -> ... -> j` by reversing its backward
/// edges together with the pieces of the graph hanging off them, and the
/// new edge is then oriented `j -> i`.
pub fn construct_orientation(g: &SimpleGraph) -> Result<Orientation> {
    if !is_cyclically_orientable_count(g) {
        return Err(Error::NotOrientable);
    }
    let n = g.n();
    let ordering = order_edges(g);
    let mut placed = SimpleGraph::new(n);
    // head[e] for edge index e in g: which endpoint the arrow points to
    let mut head: Vec<Option<usize>> = vec![None; g.edge_count()];
    let idx = |u: usize, v: usize| g.edge_index(u, v).expect("edge of g");

    for (t, &(i, j)) in ordering.edges.iter().enumerate() {
        if t < ordering.split_point {
            head[idx(i, j)] = Some(i.max(j));
            placed.add_edge(i, j).expect("valid");
            continue;
        }
        let chains = chains_between(&placed, i, j, 2);
        match chains.len() {
            0 => head[idx(i, j)] = Some(j),
            1 => {
                let chain = &chains[0];
                line_up(&placed, chain, &mut head, &idx);
                head[idx(i, j)] = Some(i);
            }
            _ => return Err(Error::NotOrientable),
        }
        placed.add_edge(i, j).expect("valid");
    }

    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let h = head[e].expect("every edge oriented");
            if h == v {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    let orientation = Orientation { arcs };
    if g.chordless_cycles().iter().all(|c| orientation.is_cyclic_on(c)) {
        Ok(orientation)
    } else {
        Err(Error::NotOrientable)
    }
}

/// Reorients so that `chain` runs forward while keeping every chordless
/// cycle of `h` cyclically oriented.
fn line_up(
    h: &SimpleGraph,
    chain: &[usize],
    head: &mut [Option<usize>],
    idx: &impl Fn(usize, usize) -> usize,
) {
    let n = h.n();
    let on_chain: Vec<bool> = (0..n).map(|v| chain.contains(&v)).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| !on_chain[v]).collect();
    let rest_graph = h.induced(&rest);
    let components: Vec<Vec<usize>> = rest_graph
        .connected_components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| rest[v]).collect())
        .collect();

    let reverse = |head: &mut [Option<usize>], u: usize, v: usize| {
        let e = idx(u, v);
        let cur = head[e].expect("placed edge is oriented");
        head[e] = Some(if cur == u { v } else { u });
    };

    for p in 0..chain.len() - 1 {
        let (a, b) = (chain[p], chain[p + 1]);
        if head[idx(a, b)] == Some(b) {
            continue;
        }
        reverse(head, a, b);
        for comp in &components {
            let touches = |x: usize| comp.iter().any(|&v| h.has_edge(x, v));
            if !(touches(a) && touches(b)) {
                continue;
            }
            for (s, &u) in comp.iter().enumerate() {
                for &v in &comp[s + 1..] {
                    if h.has_edge(u, v) {
                        reverse(head, u, v);
                    }
                }
                for x in [a, b] {
                    if h.has_edge(x, u) {
                        reverse(head, x, u);
                    }
                }
            }
        }
    }
}

/// Induced paths from `i` to `j` with at least one interior vertex, up to
/// `cap` of them.
pub(crate) fn chains_between(h: &SimpleGraph, i: usize, j: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if h.has_edge(i, j) {
        return out;
    }
    let mut path = vec![i];
    grow_chain(h, j, cap, &mut path, &mut out);
    out
}

fn grow_chain(h: &SimpleGraph, j: usize, cap: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().expect("nonempty");
    for &w in h.neighbors(last) {
        if out.len() >= cap {
            return;
        }
        if path.contains(&w) || path[..path.len() - 1].iter().any(|&x| h.has_edge(x, w)) {
            continue;
        }
        if w == j {
            let mut chain = path.clone();
            chain.push(j);
            out.push(chain);
            continue;
        }
        path.push(w);
        grow_chain(h, j, cap, path, out);
        path.pop();
    }
}
