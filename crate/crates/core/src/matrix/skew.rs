use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::symmetrizer::{find_symmetrizer, verify, SignPattern, Symmetrizer};
use super::IntMatrix;
use crate::error::{Error, Result};

/// Integer matrix `B` together with a certified normalized symmetrizer `D`
/// such that `D*B` is skew-symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewSymmetrizableMatrix {
    b: IntMatrix,
    d: Symmetrizer,
}

impl SkewSymmetrizableMatrix {
    pub fn new(b: IntMatrix) -> Result<Self> {
        let d = find_symmetrizer(&b)?;
        Ok(Self { b, d })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows)?)
    }

    /// Checks a caller-supplied symmetrizer instead of searching for one.
    /// The stored symmetrizer is always the normalized one.
    pub fn with_declared_symmetrizer(b: IntMatrix, declared: &Symmetrizer) -> Result<Self> {
        if declared.len() != b.n() {
            return Err(Error::DimensionMismatch {
                expected: b.n(),
                found: declared.len(),
            });
        }
        if !verify(&b, declared, SignPattern::Skew) {
            return Err(Error::NotSkewSymmetrizable {
                reason: "declared symmetrizer does not make D*B skew-symmetric".into(),
            });
        }
        Self::new(b)
    }

    pub(crate) fn from_parts_unchecked(b: IntMatrix, d: Symmetrizer) -> Self {
        debug_assert!(verify(&b, &d, SignPattern::Skew));
        Self { b, d }
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn symmetrizer(&self) -> &Symmetrizer {
        &self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.b.get(i, j)
    }

    /// `|B_ij * B_ji|`, the weight of edge `{i, j}` in the diagram.
    pub fn weight(&self, i: usize, j: usize) -> BigInt {
        (self.b.get(i, j) * self.b.get(j, i)).abs()
    }

    pub fn max_weight(&self) -> BigInt {
        let n = self.n();
        let mut best = BigInt::zero();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.weight(i, j);
                if w > best {
                    best = w;
                }
            }
        }
        best
    }

    /// Matrix mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let n = self.n();
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        let b = &self.b;
        let mut out = b.clone();
        for i in 0..n {
            for j in 0..n {
                if i == k || j == k {
                    out[(i, j)] = -b.get(i, j);
                    continue;
                }
                let bik = b.get(i, k);
                let bkj = b.get(k, j);
                // sgn(B_ik) [B_ik B_kj]_+ is nonzero only when both share a sign
                if bik.is_positive() && bkj.is_positive() {
                    out[(i, j)] += bik * bkj;
                } else if bik.is_negative() && bkj.is_negative() {
                    out[(i, j)] -= bik * bkj;
                }
            }
        }
        Ok(Self::from_parts_unchecked(out, self.d.clone()))
    }

    /// Applies mutations left to right.
    pub fn mutate_seq(&self, ks: &[usize]) -> Result<Self> {
        ks.iter().try_fold(self.clone(), |acc, &k| acc.mutate(k))
    }
}
