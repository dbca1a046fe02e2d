use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`. Edges are kept as `(u, v)`
/// with `u < v`, sorted lexicographically; that order is the edge index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

/// Induced cycle, listed from its minimal vertex in the direction whose
/// second vertex is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChordlessCycle {
    vertices: Vec<usize>,
}

impl ChordlessCycle {
    /// Canonicalizes a cyclic vertex sequence. Does not check chordlessness.
    pub fn from_cyclic(vertices: &[usize]) -> Self {
        let p = vertices.len();
        if p == 0 {
            return Self { vertices: vec![] };
        }
        let start = (0..p).min_by_key(|&i| vertices[i]).expect("nonempty");
        let fwd: Vec<usize> = (0..p).map(|t| vertices[(start + t) % p]).collect();
        let bwd: Vec<usize> = (0..p).map(|t| vertices[(start + p - t) % p]).collect();
        Self {
            vertices: fwd.min(bwd),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs `(v_t, v_{t+1})` in cycle order, closing pair last.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let p = self.vertices.len();
        (0..p).map(move |t| (self.vertices[t], self.vertices[(t + 1) % p]))
    }

    /// Edges as normalized `(min, max)` pairs in cycle order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.steps().map(|(a, b)| (a.min(b), a.max(b)))
    }
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid");
            }
        }
        g
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n;
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
        }
        if u == v {
            return Err(Error::MalformedDiagram {
                reason: format!("self-loop at vertex {}", u + 1),
            });
        }
        if self.matrix[u * n + v] {
            return Ok(());
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        let ins = |list: &mut Vec<usize>, x: usize| {
            let pos = list.binary_search(&x).unwrap_err();
            list.insert(pos, x);
        };
        ins(&mut self.adj[u], v);
        ins(&mut self.adj[v], u);
        let e = (u.min(v), u.max(v));
        let pos = self.edges.binary_search(&e).unwrap_err();
        self.edges.insert(pos, e);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Induced subgraph on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b).expect("in range");
                }
            }
        }
        g
    }

    /// Components sorted by minimal vertex, each sorted ascending.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Connected and 2-regular with at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// Every chordless cycle exactly once, in canonical form, sorted.
    ///
    /// Grows induced paths from each vertex `s` through vertices larger than
    /// `s`; a path closes when its newest vertex is adjacent to `s`.
    pub fn chordless_cycles(&self) -> Vec<ChordlessCycle> {
        let mut out = Vec::new();
        for s in 0..self.n {
            for &v1 in &self.adj[s] {
                if v1 <= s {
                    continue;
                }
                let mut path = vec![s, v1];
                self.extend_induced(&mut path, &mut out);
            }
        }
        out.sort();
        out
    }

    fn extend_induced(&self, path: &mut Vec<usize>, out: &mut Vec<ChordlessCycle>) {
        let s = path[0];
        let last = *path.last().expect("nonempty");
        let len = path.len();
        for &w in &self.adj[last] {
            if w <= s || path.contains(&w) {
                continue;
            }
            if path[1..len - 1].iter().any(|&x| self.has_edge(x, w)) {
                continue;
            }
            if self.has_edge(w, s) {
                // closes a cycle; the second vertex must be the smaller end
                if w > path[1] {
                    let mut cyc = path.clone();
                    cyc.push(w);
                    out.push(ChordlessCycle { vertices: cyc });
                }
                continue;
            }
            path.push(w);
            self.extend_induced(path, out);
            path.pop();
        }
    }

    /// Whether `cycle` lists a chordless cycle of this graph.
    pub fn is_chordless_cycle(&self, cycle: &[usize]) -> bool {
        let p = cycle.len();
        if p < 3 {
            return false;
        }
        let mut sorted = cycle.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != p || sorted.iter().any(|&v| v >= self.n) {
            return false;
        }
        (0..p).all(|a| {
            (a + 1..p).all(|b| {
                let consecutive = b == a + 1 || (a == 0 && b == p - 1);
                self.has_edge(cycle[a], cycle[b]) == consecutive
            })
        })
    }
}
