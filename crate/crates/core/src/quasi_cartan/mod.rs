//! Quasi-Cartan matrices: diagonal 2, symmetrizable with transpose entries
//! of equal sign. Companions of skew-symmetrizable matrices, positivity and
//! companion mutation.

mod companion;
mod cycles;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::diagram::{ChordlessCycle, Diagram, Sign};
use crate::error::{Error, Result};
use crate::matrix::{
    find_for_pattern, first_nonpositive_leading_minor, verify, IntMatrix, SignPattern, Symmetrizer,
};

pub use companion::{
    cartan_companion, companion_from_signs, companion_mutate, companion_mutate_entrywise,
    gram_equivalent, is_k_compatible, CompanionCertificate,
};
pub use cycles::{classify_cycle_diagram, cycle_shape, CycleShape, SignStatus, SignedCycle};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuasiCartanMatrix {
    a: IntMatrix,
    d: Symmetrizer,
}

impl QuasiCartanMatrix {
    pub fn new(a: IntMatrix) -> Result<Self> {
        if let Some(i) = (0..a.n()).find(|&i| a.get(i, i) != &BigInt::from(2)) {
            return Err(Error::NotQuasiCartan {
                reason: format!("diagonal entry ({}, {}) is not 2", i + 1, i + 1),
            });
        }
        let d = find_for_pattern(&a, SignPattern::Symmetric)?;
        Ok(Self { a, d })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows)?)
    }

    /// Builds `A` and checks that the given symmetrizer makes `D*A`
    /// symmetric. The stored symmetrizer is the normalized one.
    pub fn with_symmetrizer(a: IntMatrix, d: &Symmetrizer) -> Result<Self> {
        if d.len() != a.n() {
            return Err(Error::DimensionMismatch {
                expected: a.n(),
                found: d.len(),
            });
        }
        if !verify(&a, d, SignPattern::Symmetric) {
            return Err(Error::NotQuasiCartan {
                reason: "declared symmetrizer does not make D*A symmetric".into(),
            });
        }
        Self::new(a)
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn symmetrizer(&self) -> &Symmetrizer {
        &self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.a.get(i, j)
    }

    /// The symmetric matrix `C = D*A`.
    pub fn symmetrized(&self) -> IntMatrix {
        self.d.apply(&self.a)
    }

    /// Conjugation by the sign flip at vertex `v`: row and column `v`
    /// change sign off the diagonal.
    pub fn flip_vertex(&self, v: usize) -> Self {
        let mut a = self.a.clone();
        for j in 0..self.n() {
            if j != v {
                a[(v, j)] = -a.get(v, j);
                a[(j, v)] = -a.get(j, v);
            }
        }
        Self { a, d: self.d.clone() }
    }
}

/// Sylvester's test on `C = D*A`: all leading principal minors positive.
pub fn is_positive(a: &QuasiCartanMatrix) -> bool {
    first_nonpositive_leading_minor(&a.symmetrized()).is_none()
}

/// First chordless cycle of the diagram of `A` along which the product of
/// the `-A_ij` is not negative; `None` when every cycle passes.
pub fn check_cycle_sign_condition(a: &QuasiCartanMatrix) -> Option<ChordlessCycle> {
    let d = Diagram::of_quasi_cartan(a);
    d.chordless_cycles().into_iter().find(|c| {
        let product = c
            .steps()
            .fold(Sign::Plus, |acc, (u, v)| acc * d.sign(u, v).expect("cycle edge"));
        product != Sign::Minus
    })
}

/// `0 <= A_ij A_ji <= 3` off the diagonal, and `A_ik A_kj A_ji >= 0` on
/// triangles; both hold for every positive quasi-Cartan matrix.
pub fn satisfies_positive_bounds(a: &QuasiCartanMatrix) -> bool {
    let n = a.n();
    let m = a.matrix();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let w = m.get(i, j) * m.get(j, i);
            if w.is_negative() || w > BigInt::from(3) {
                return false;
            }
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                let t = m.get(i, k) * m.get(k, j) * m.get(j, i);
                if t.is_negative() {
                    return false;
                }
            }
        }
    }
    true
}
