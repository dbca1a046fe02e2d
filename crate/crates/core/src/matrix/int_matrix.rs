use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal<I: IntoIterator<Item = BigInt>>(diag: I) -> Self {
        let diag: Vec<BigInt> = diag.into_iter().collect();
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged or non-square input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self { n, data })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Convenience for tests and fixtures; panics on ragged input.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_i64_rows(rows).expect("square matrix literal")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    /// Entries as `i64` if every one fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .map(|r| r.iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Left multiplication by a diagonal matrix: scales row `i` by `diag[i]`.
    pub fn scale_rows(&self, diag: &[BigInt]) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] *= &diag[i];
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Principal submatrix on the given (ordered) index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .finish()
    }
}

/// Plain-text rendering: dimension on the first line, then one row per line.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for r in self.rows() {
            let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Serializes a big integer as a JSON number when it fits in `i64`,
/// otherwise as its decimal string.
pub(crate) struct BigIntRepr<'a>(pub &'a BigInt);

impl Serialize for BigIntRepr<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct RowRepr<'a>(&'a [BigInt]);

impl Serialize for RowRepr<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in self.0 {
            seq.serialize_element(&BigIntRepr(x))?;
        }
        seq.end()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.n))?;
        for r in self.rows() {
            seq.serialize_element(&RowRepr(r))?;
        }
        seq.end()
    }
}
