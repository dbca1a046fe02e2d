//! Exhaustive and sampled self-checks, shared by the `selftest` command and
//! the acceptance tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::SimpleGraph;
use crate::matrix::{determinant, IntMatrix, SkewSymmetrizableMatrix};
use crate::orient::{
    brute_force_orientable, check_edge_ordering_criterion, check_exact_sequence, construct_orientation,
    cycle_surplus, BRUTE_FORCE_EDGE_CAP,
};
use crate::recognizer::{explore_class_members, recognize, Caps, OracleVerdict, ExplorationStatus, Verdict};
use crate::roots::{an_companion, bn_matrix, cartan_killing_type, dn_sequence};

/// Outcome of a sweep: how many instances were examined and a line per
/// failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        // keep reports readable when something is badly broken
        if self.failures.len() < 50 {
            self.failures.push(msg);
        }
    }
}

/// `det A(n)` for `n = 1..=8`.
pub const SERIES_DETERMINANTS: [i64; 8] = [2, 3, 4, 4, 4, 3, 2, 1];
/// Type of `A(n)` for `n = 1..=8`.
pub const SERIES_TYPES: [&str; 8] = ["A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"];

/// Recomputes determinants and types of `A(n)` for `n <= 8`, the verdict
/// on `B(n)` for `n <= 12`, and the determinant sequence: zero at 9, 10, 11
/// and of period 12 for every `n <= limit`.
pub fn series_check(limit: usize) -> CheckReport {
    let mut r = CheckReport::default();
    for n in 1..=8 {
        r.checked += 1;
        let a = an_companion(n);
        let det = determinant(a.matrix());
        if det != BigInt::from(SERIES_DETERMINANTS[n - 1]) {
            r.fail(format!("det A({}) = {}, expected {}", n, det, SERIES_DETERMINANTS[n - 1]));
        }
        match cartan_killing_type(&a) {
            Ok(t) if t.to_string() == SERIES_TYPES[n - 1] => {}
            other => r.fail(format!("type of A({}) is {:?}, expected {}", n, other, SERIES_TYPES[n - 1])),
        }
    }
    for n in 1..=12 {
        r.checked += 1;
        let report = recognize(&bn_matrix(n));
        let expect_finite = n <= 8;
        if (report.verdict == Verdict::Finite) != expect_finite {
            r.fail(format!("B({}) recognized as {:?}", n, report.verdict));
        }
        if expect_finite {
            let name = report.cartan_type.map(|t| t.to_string());
            if name.as_deref() != Some(SERIES_TYPES[n - 1]) {
                r.fail(format!("B({}) has type {:?}, expected {}", n, name, SERIES_TYPES[n - 1]));
            }
        }
    }
    let d = dn_sequence(limit + 12);
    for n in 9..=11 {
        r.checked += 1;
        if n < d.len() && d[n] != BigInt::from(0) {
            r.fail(format!("d_{} = {}, expected 0", n, d[n]));
        }
    }
    for n in 0..=limit {
        r.checked += 1;
        if d[n + 12] != d[n] {
            r.fail(format!("d_{} = {} but d_{} = {}", n + 12, d[n + 12], n, d[n]));
        }
    }
    r
}

/// Every labeled simple graph on `n` vertices, in order of edge bitmask.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        let edges: Vec<(usize, usize)> = (0..m).filter(|&e| mask >> e & 1 == 1).map(|e| pairs[e]).collect();
        SimpleGraph::from_edges(n, &edges).expect("valid edges")
    })
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `density`, stopping at `max_edges`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, density: f64, max_edges: usize) -> SimpleGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    rest.shuffle(rng);
    for e in rest {
        if edges.len() >= max_edges {
            break;
        }
        if rng.gen_bool(density) {
            edges.push(e);
        }
    }
    SimpleGraph::from_edges(n, &edges).expect("valid edges")
}

/// Runs the four orientability tests on `g` and checks that they agree,
/// that the chordless cycles are at least as many as the independent
/// cycles, and that a constructed orientation exists exactly when the
/// tests say so. Returns the common answer.
pub fn check_criteria(g: &SimpleGraph) -> std::result::Result<bool, String> {
    let cycles = g.chordless_cycles();
    let surplus = cycle_surplus(g, &cycles);
    if surplus < 0 {
        return Err(format!("fewer chordless cycles than independent cycles on {:?}", g.edges()));
    }
    let count = surplus == 0;
    let exact = check_exact_sequence(g);
    let ordering = check_edge_ordering_criterion(g);
    let brute = brute_force_orientable(g).map_err(|e| e.to_string())?;
    let built = construct_orientation(g).is_ok();
    if count == exact && exact == ordering && ordering == brute && brute == built {
        Ok(count)
    } else {
        Err(format!(
            "criteria disagree on {:?}: count {}, exact {}, ordering {}, brute force {}, construction {}",
            g.edges(),
            count,
            exact,
            ordering,
            brute,
            built
        ))
    }
}

/// All connected labeled graphs on up to `max_vertices` vertices, then
/// `samples` random connected graphs on 7 or 8 vertices with at most 20
/// edges.
pub fn criteria_sweep(max_vertices: usize, samples: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::default();
    for n in 1..=max_vertices {
        for g in labeled_graphs(n).filter(|g| g.is_connected()) {
            r.checked += 1;
            if let Err(msg) = check_criteria(&g) {
                r.fail(msg);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(7..=8);
        let density = rng.gen_range(0.0..0.6);
        let g = random_connected_graph(&mut rng, n, density, BRUTE_FORCE_EDGE_CAP);
        r.checked += 1;
        if let Err(msg) = check_criteria(&g) {
            r.fail(msg);
        }
    }
    r
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub check: CheckReport,
    pub finite: usize,
    pub not_finite: usize,
    pub unknown: usize,
    /// Distinct mutation classes the explorer had to walk.
    pub explorations: usize,
}

/// Every skew-symmetrizable `n x n` matrix with entries in
/// `[-bound, bound]`, `n = 1..=max_n`, in lexicographic order of the
/// upper-triangle choices.
pub fn skew_symmetrizable_matrices(max_n: usize, bound: i64) -> impl Iterator<Item = SkewSymmetrizableMatrix> {
    // (B_ij, B_ji) pairs with opposite signs or both zero
    let mut choices = vec![(0i64, 0i64)];
    for a in 1..=bound {
        for b in 1..=bound {
            choices.push((a, -b));
            choices.push((-a, b));
        }
    }
    (1..=max_n).flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let choices = choices.clone();
        let total = choices.len().pow(pairs.len() as u32);
        (0..total).filter_map(move |mut code| {
            let mut rows = vec![vec![0i64; n]; n];
            for &(i, j) in &pairs {
                let (x, y) = choices[code % choices.len()];
                code /= choices.len();
                rows[i][j] = x;
                rows[j][i] = y;
            }
            SkewSymmetrizableMatrix::from_i64(&rows).ok()
        })
    })
}

/// Compares `recognize` with the mutation-class explorer on every
/// skew-symmetrizable matrix with `n <= max_n` and entries in `[-2, 2]`.
/// Classes are explored once; every member seen inherits the verdict.
pub fn oracle_sweep(max_n: usize, caps: &Caps) -> OracleReport {
    let mut report = OracleReport::default();
    let mut known: HashMap<IntMatrix, OracleVerdict> = HashMap::new();
    for b in skew_symmetrizable_matrices(max_n, 2) {
        let oracle = match known.get(b.matrix()) {
            Some(&v) => v,
            None => {
                report.explorations += 1;
                let (result, members) = explore_class_members(&b, caps);
                let v = match result.status {
                    ExplorationStatus::ClassClosed => OracleVerdict::Finite,
                    ExplorationStatus::WeightExceeded => OracleVerdict::NotFinite,
                    ExplorationStatus::CapExceeded => OracleVerdict::Unknown,
                };
                // a truncated walk says nothing about the members it saw
                if v != OracleVerdict::Unknown {
                    for m in members {
                        known.insert(m.matrix().clone(), v);
                    }
                }
                v
            }
        };
        report.check.checked += 1;
        let rec = recognize(&b);
        if !rec.verify(&b) {
            report.check.fail(format!("witness does not replay for {:?}", b.matrix().to_i64_rows()));
        }
        let agrees = match oracle {
            OracleVerdict::Finite => {
                report.finite += 1;
                rec.verdict == Verdict::Finite
            }
            OracleVerdict::NotFinite => {
                report.not_finite += 1;
                rec.verdict == Verdict::NotFinite
            }
            OracleVerdict::Unknown => {
                report.unknown += 1;
                true
            }
        };
        if !agrees {
            report.check.fail(format!(
                "recognize says {:?}, explorer says {:?} for {:?}",
                rec.verdict,
                oracle,
                b.matrix().to_i64_rows()
            ));
        }
    }
    report
}
