use serde::Serialize;

use super::dynkin::{dynkin_tree_shape, small_weight};
use super::{ChordlessCycle, Diagram};
use crate::error::{Error, Result};
use crate::quasi_cartan::{cycle_shape, CycleShape};

pub const DEFAULT_QUASI_FINITE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum QuasiFiniteWitness {
    /// An induced tree that is not a Dynkin diagram.
    NonDynkinTree { vertices: Vec<usize> },
    /// An induced cycle whose weights fit none of the positive shapes.
    BadCycle { cycle: ChordlessCycle },
    /// A weight-1 cycle plus a hub joined to an even number of its vertices.
    Wheel { cycle: ChordlessCycle, hub: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiFiniteReport {
    pub quasi_finite: bool,
    pub witness: Option<QuasiFiniteWitness>,
}

/// Exhaustive check over all induced subdiagrams, in order of increasing
/// vertex bitmask. Orientation and sign data are ignored.
pub fn is_quasi_finite(d: &Diagram, cap: usize) -> Result<QuasiFiniteReport> {
    let n = d.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "diagram vertices",
            actual: n,
            cap,
        });
    }
    for mask in 1u64..(1u64 << n) {
        let vertices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if let Some(w) = check_subset(d, &vertices) {
            return Ok(QuasiFiniteReport {
                quasi_finite: false,
                witness: Some(w),
            });
        }
    }
    Ok(QuasiFiniteReport {
        quasi_finite: true,
        witness: None,
    })
}

fn check_subset(d: &Diagram, vertices: &[usize]) -> Option<QuasiFiniteWitness> {
    let sub = d.induced(vertices);
    let g = sub.graph();
    if g.is_tree() {
        if dynkin_tree_shape(&sub).is_none() {
            return Some(QuasiFiniteWitness::NonDynkinTree {
                vertices: vertices.to_vec(),
            });
        }
        return None;
    }
    if g.is_cycle() {
        let local = g.chordless_cycles().pop().expect("a cycle graph has one cycle");
        let cycle = ChordlessCycle::from_cyclic(
            &local.vertices().iter().map(|&v| vertices[v]).collect::<Vec<_>>(),
        );
        let weights: Vec<u64> = cycle.steps().map(|(a, b)| small_weight(d, a, b)).collect();
        if cycle_shape(&weights) == CycleShape::NotPositiveShape {
            return Some(QuasiFiniteWitness::BadCycle { cycle });
        }
        return None;
    }
    if vertices.len() >= 4 {
        for (t, &hub) in vertices.iter().enumerate() {
            if let Some(w) = wheel_at(d, vertices, t, hub) {
                return Some(w);
            }
        }
    }
    None
}

fn wheel_at(d: &Diagram, vertices: &[usize], t: usize, hub: usize) -> Option<QuasiFiniteWitness> {
    let rim: Vec<usize> = vertices.iter().copied().filter(|&v| v != vertices[t]).collect();
    let rim_graph = d.induced(&rim).graph();
    if !rim_graph.is_cycle() {
        return None;
    }
    let cycle_local = rim_graph.chordless_cycles().pop().expect("one cycle");
    let cycle = ChordlessCycle::from_cyclic(
        &cycle_local.vertices().iter().map(|&v| rim[v]).collect::<Vec<_>>(),
    );
    if cycle.steps().any(|(a, b)| small_weight(d, a, b) != 1) {
        return None;
    }
    let spokes: Vec<usize> = rim.iter().copied().filter(|&v| d.has_edge(hub, v)).collect();
    if spokes.len() < 2 || spokes.len() % 2 == 1 {
        return None;
    }
    if spokes.iter().any(|&v| small_weight(d, hub, v) > 2) {
        return None;
    }
    let exception = spokes.len() == 2
        && d.has_edge(spokes[0], spokes[1])
        && spokes.iter().all(|&v| small_weight(d, hub, v) == 1);
    if exception {
        return None;
    }
    Some(QuasiFiniteWitness::Wheel { cycle, hub })
}
