//! Linear algebra over the two-element field, rows packed into `u64` words.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gf2Solution {
    NoSolution,
    /// Particular solution with every free variable set to zero, plus a
    /// basis of the nullspace.
    Solution {
        particular: Vec<bool>,
        nullspace: Vec<Vec<bool>>,
    },
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.bits[i * self.words + j / 64];
        let mask = 1u64 << (j % 64);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] ^= 1u64 << (j % 64);
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for t in 0..w {
            let v = self.bits[src * w + t];
            self.bits[dst * w + t] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        for t in 0..w {
            self.bits.swap(a * w + t, b * w + t);
        }
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(false, |acc, j| acc ^ (self.get(i, j) & v[j]))
            })
            .collect()
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for t in 0..out.words {
                        out.bits[i * out.words + t] ^= other.row_words(k)[t];
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// In-place reduced row echelon form; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    m.clone().rref().len()
}

/// Solves `m x = rhs`, describing the full solution set.
pub fn gf2_solve(m: &Gf2Matrix, rhs: &[bool]) -> Result<Gf2Solution> {
    if rhs.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: rhs.len(),
        });
    }
    // augmented matrix [m | rhs]
    let mut aug = Gf2Matrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            if m.get(i, j) {
                aug.set(i, j, true);
            }
        }
        aug.set(i, m.cols, rhs[i]);
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Ok(Gf2Solution::NoSolution);
    }
    let mut particular = vec![false; m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug.get(r, m.cols);
    }
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let nullspace = (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![false; m.cols];
            v[f] = true;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = aug.get(r, f);
            }
            v
        })
        .collect();
    Ok(Gf2Solution::Solution {
        particular,
        nullspace,
    })
}
