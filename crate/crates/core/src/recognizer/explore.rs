use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Result;
use crate::matrix::{IntMatrix, SkewSymmetrizableMatrix};
use crate::quasi_cartan::{cartan_companion, is_positive};
use crate::roots::{cartan_killing_type, CartanKillingType};

pub const DEFAULT_MAX_VISITED: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_visited: usize,
    /// Largest entry magnitude allowed among visited matrices.
    pub max_entry: Option<BigInt>,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_visited: DEFAULT_MAX_VISITED,
            max_entry: None,
        }
    }
}

impl Caps {
    pub fn with_max_visited(max_visited: usize) -> Self {
        Self {
            max_visited,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExplorationStatus {
    ClassClosed,
    WeightExceeded,
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplorationWitness {
    pub matrix: SkewSymmetrizableMatrix,
    /// Mutation directions taking the seed to `matrix`, applied left to right.
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplorationResult {
    pub status: ExplorationStatus,
    pub visited: usize,
    pub witness: Option<ExplorationWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OracleVerdict {
    Finite,
    NotFinite,
    Unknown,
}

/// Dense row-major copy of a matrix whose diagram weights are at most 3.
/// Entries of such a matrix lie in `[-3, 3]`, and one mutation step can
/// reach at most `3 + 3 * 3`, so `i8` holds everything the search touches.
type Small = Vec<i8>;

fn weight_ok(m: &[i8], n: usize) -> bool {
    (0..n).all(|i| (i + 1..n).all(|j| (m[i * n + j] as i32 * m[j * n + i] as i32).abs() <= 3))
}

fn mutate_small(m: &[i8], n: usize, k: usize) -> Small {
    let mut out = m.to_vec();
    for i in 0..n {
        for j in 0..n {
            let v = if i == k || j == k {
                -(m[i * n + j] as i32)
            } else {
                let (bik, bkj) = (m[i * n + k] as i32, m[k * n + j] as i32);
                let mut v = m[i * n + j] as i32;
                if bik > 0 && bkj > 0 {
                    v += bik * bkj;
                } else if bik < 0 && bkj < 0 {
                    v -= bik * bkj;
                }
                v
            };
            out[i * n + j] = v as i8;
        }
    }
    out
}

fn to_small(b: &SkewSymmetrizableMatrix) -> Option<Small> {
    b.matrix().entries().iter().map(|x| x.to_i8()).collect()
}

fn from_small(m: &[i8], b: &SkewSymmetrizableMatrix) -> SkewSymmetrizableMatrix {
    let n = b.n();
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| m[i * n + j] as i64).collect()).collect();
    SkewSymmetrizableMatrix::from_parts_unchecked(
        IntMatrix::from_i64(&rows),
        b.symmetrizer().clone(),
    )
}

struct Search {
    result: ExplorationResult,
    members: Vec<Small>,
}

fn search(b: &SkewSymmetrizableMatrix, caps: &Caps, keep_members: bool) -> Search {
    let n = b.n();
    if b.max_weight() > BigInt::from(3) {
        return Search {
            result: ExplorationResult {
                status: ExplorationStatus::WeightExceeded,
                visited: 1,
                witness: Some(ExplorationWitness {
                    matrix: b.clone(),
                    path: vec![],
                }),
            },
            members: vec![],
        };
    }
    let seed = to_small(b).expect("weights at most 3 bound the entries");
    let entry_cap = caps.max_entry.as_ref().map(|c| c.to_i64().unwrap_or(i64::MAX));
    // parent index and direction for path replay
    let mut states: Vec<(Small, usize, usize)> = vec![(seed.clone(), usize::MAX, usize::MAX)];
    let mut index: HashMap<Small, usize> = HashMap::from([(seed, 0)]);
    let mut queue = VecDeque::from([0usize]);
    let path_to = |states: &Vec<(Small, usize, usize)>, mut t: usize| {
        let mut path = Vec::new();
        while states[t].1 != usize::MAX {
            path.push(states[t].2);
            t = states[t].1;
        }
        path.reverse();
        path
    };
    let over_entry_cap = |m: &[i8]| entry_cap.is_some_and(|c| m.iter().any(|&x| (x as i64).abs() > c));
    let finish = |status, states: Vec<(Small, usize, usize)>, witness| Search {
        result: ExplorationResult {
            status,
            visited: states.len(),
            witness,
        },
        members: if keep_members {
            states.into_iter().map(|s| s.0).collect()
        } else {
            vec![]
        },
    };
    if over_entry_cap(&states[0].0) || caps.max_visited == 0 {
        return finish(ExplorationStatus::CapExceeded, states, None);
    }
    while let Some(t) = queue.pop_front() {
        for k in 0..n {
            let next = mutate_small(&states[t].0, n, k);
            if index.contains_key(&next) {
                continue;
            }
            if !weight_ok(&next, n) {
                let mut path = path_to(&states, t);
                path.push(k);
                let witness = ExplorationWitness {
                    matrix: from_small(&next, b),
                    path,
                };
                return finish(ExplorationStatus::WeightExceeded, states, Some(witness));
            }
            if states.len() >= caps.max_visited || over_entry_cap(&next) {
                return finish(ExplorationStatus::CapExceeded, states, None);
            }
            index.insert(next.clone(), states.len());
            states.push((next, t, k));
            queue.push_back(states.len() - 1);
        }
    }
    finish(ExplorationStatus::ClassClosed, states, None)
}

/// Breadth-first search of the mutation class, directions in ascending
/// order, stopping at the first matrix with a diagram weight above 3.
pub fn explore_class(b: &SkewSymmetrizableMatrix, caps: &Caps) -> ExplorationResult {
    search(b, caps, false).result
}

/// Like `explore_class`, also returning every matrix visited.
pub fn explore_class_members(
    b: &SkewSymmetrizableMatrix,
    caps: &Caps,
) -> (ExplorationResult, Vec<SkewSymmetrizableMatrix>) {
    let s = search(b, caps, true);
    let members = s.members.iter().map(|m| from_small(m, b)).collect();
    (s.result, members)
}

pub fn oracle_finite_type(b: &SkewSymmetrizableMatrix, caps: &Caps) -> OracleVerdict {
    match explore_class(b, caps).status {
        ExplorationStatus::ClassClosed => OracleVerdict::Finite,
        ExplorationStatus::WeightExceeded => OracleVerdict::NotFinite,
        ExplorationStatus::CapExceeded => OracleVerdict::Unknown,
    }
}

/// Searches the class for a member whose Cartan companion (all
/// off-diagonal entries `-|B_ij|`) is positive and returns its type.
pub fn class_type_via_cartan_member(
    b: &SkewSymmetrizableMatrix,
    caps: &Caps,
) -> Result<Option<CartanKillingType>> {
    let (result, members) = explore_class_members(b, caps);
    if result.status == ExplorationStatus::WeightExceeded {
        return Ok(None);
    }
    for m in members {
        let a = cartan_companion(&m);
        if is_positive(&a) {
            return cartan_killing_type(&a).map(Some);
        }
    }
    Ok(None)
}
