use std::collections::BTreeSet;

use super::order_edges;
use crate::diagram::{ChordlessCycle, SimpleGraph};
use crate::error::{Error, Result};
use crate::matrix::{gf2_rank, Gf2Matrix};

pub const BRUTE_FORCE_EDGE_CAP: usize = 20;

/// `|Cyc| - (|Edg| - |Ver| + |Con|)`; never negative.
pub fn cycle_surplus(g: &SimpleGraph, cycles: &[ChordlessCycle]) -> isize {
    let cyclomatic = g.edge_count() + g.connected_components().len() - g.n();
    cycles.len() as isize - cyclomatic as isize
}

/// Counting test: chordless cycles are exactly as many as independent cycles.
pub fn is_cyclically_orientable_count(g: &SimpleGraph) -> bool {
    cycle_surplus(g, &g.chordless_cycles()) == 0
}

/// Builds `F^Con -> F^Ver -> F^Edg -> F^Cyc` from the incidence relations
/// and checks exactness at every term by ranks over GF(2).
pub fn check_exact_sequence(g: &SimpleGraph) -> bool {
    let cycles = g.chordless_cycles();
    let comps = g.connected_components();
    let (n_con, n_ver, n_edg, n_cyc) = (comps.len(), g.n(), g.edge_count(), cycles.len());

    let mut con_ver = Gf2Matrix::zeros(n_ver, n_con);
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            con_ver.set(v, c, true);
        }
    }
    let mut ver_edg = Gf2Matrix::zeros(n_edg, n_ver);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        ver_edg.set(e, u, true);
        ver_edg.set(e, v, true);
    }
    let mut edg_cyc = Gf2Matrix::zeros(n_cyc, n_edg);
    for (z, cycle) in cycles.iter().enumerate() {
        for (u, v) in cycle.edges() {
            edg_cyc.set(z, g.edge_index(u, v).expect("cycle edge"), true);
        }
    }

    let compositions_vanish = ver_edg.mul(&con_ver).expect("shapes").is_zero()
        && edg_cyc.mul(&ver_edg).expect("shapes").is_zero();
    let (r1, r2, r3) = (gf2_rank(&con_ver), gf2_rank(&ver_edg), gf2_rank(&edg_cyc));
    compositions_vanish
        && r1 == n_con
        && r1 + r2 == n_ver
        && r2 + r3 == n_edg
        && r3 == n_cyc
}

/// Under the greedy edge ordering, distinct chordless cycles have distinct
/// maximal edges.
pub fn check_edge_ordering_criterion(g: &SimpleGraph) -> bool {
    let ordering = order_edges(g);
    let mut maxima = BTreeSet::new();
    g.chordless_cycles()
        .iter()
        .all(|c| maxima.insert(ordering.max_position(c)))
}

/// Exhaustive search over all orientations. Edges are fixed one at a time;
/// a partial orientation is abandoned once some cycle whose edges are all
/// fixed fails to be cyclically oriented, which skips only orientations
/// that would fail anyway.
pub fn brute_force_orientable(g: &SimpleGraph) -> Result<bool> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_EDGE_CAP {
        return Err(Error::CapExceeded {
            what: "edges for exhaustive orientation search",
            actual: m,
            cap: BRUTE_FORCE_EDGE_CAP,
        });
    }
    // per cycle: edge mask and the bit pattern of one cyclic orientation,
    // where bit e set means edge (u, v), u < v, points v -> u
    let mut closing: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
    for cycle in g.chordless_cycles() {
        let mut mask = 0u32;
        let mut pattern = 0u32;
        let mut last = 0;
        for (a, b) in cycle.steps() {
            let e = g.edge_index(a, b).expect("cycle edge");
            mask |= 1 << e;
            if a > b {
                pattern |= 1 << e;
            }
            last = last.max(e);
        }
        closing[last].push((mask, pattern));
    }
    Ok(search(&closing, 0, 0))
}

fn search(closing: &[Vec<(u32, u32)>], e: usize, bits: u32) -> bool {
    if e == closing.len() {
        return true;
    }
    [bits, bits | 1 << e].into_iter().any(|b| {
        closing[e].iter().all(|&(mask, pattern)| {
            let diff = (b ^ pattern) & mask;
            diff == 0 || diff == mask
        }) && search(closing, e + 1, b)
    })
}
