//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every routine first runs on `i128` with checked arithmetic and falls back
//! to `BigInt` the moment an intermediate value overflows, so results are
//! always exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntMatrix;

trait Exact: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn neg(&self) -> Self;
    /// `(a*b - c*d) / p`, exact division; `None` on overflow.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Exact for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_positive(&self) -> bool {
        *self > 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(x % p, 0);
        Some(x / p)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Exact for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        let x = a * b - c * d;
        debug_assert!(Zero::is_zero(&(&x % p)));
        Some(x / p)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

fn small_entries(m: &IntMatrix) -> Option<Vec<i128>> {
    // i64-sized inputs keep the first products inside i128.
    m.entries()
        .iter()
        .map(|x| x.to_i64().map(i128::from))
        .collect()
}

/// Outcome of elimination without pivoting.
struct Leading<T> {
    minors: Vec<T>,
    /// Set when a zero pivot stopped elimination before the last step.
    stalled: bool,
}

fn leading_run<T: Exact>(mut a: Vec<T>, n: usize, stop_nonpositive: bool) -> Option<Leading<T>> {
    let mut minors = Vec::with_capacity(n);
    let mut prev = T::one();
    for k in 0..n {
        let pivot = a[k * n + k].clone();
        minors.push(pivot.clone());
        if stop_nonpositive && !pivot.is_positive() {
            return Some(Leading {
                minors,
                stalled: false,
            });
        }
        if k + 1 == n {
            break;
        }
        if pivot.is_zero() {
            return Some(Leading {
                minors,
                stalled: true,
            });
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = T::cross_div(
                    &pivot,
                    &a[i * n + j],
                    &a[i * n + k],
                    &a[k * n + j],
                    &prev,
                )?;
                a[i * n + j] = v;
            }
        }
        prev = pivot;
    }
    Some(Leading {
        minors,
        stalled: false,
    })
}

fn determinant_run<T: Exact>(mut a: Vec<T>, n: usize) -> Option<T> {
    if n == 0 {
        return Some(T::one());
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Some(T::zero());
            };
            for j in 0..n {
                a.swap(k * n + j, r * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = T::cross_div(
                    &pivot,
                    &a[i * n + j],
                    &a[i * n + k],
                    &a[k * n + j],
                    &prev,
                )?;
                a[i * n + j] = v;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    Some(if negate { d.neg() } else { d })
}

/// Exact determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.n();
    if let Some(small) = small_entries(m) {
        if let Some(d) = determinant_run(small, n) {
            return d.into_big();
        }
    }
    determinant_run(m.entries().to_vec(), n).expect("BigInt elimination cannot overflow")
}

fn leading(m: &IntMatrix, stop_nonpositive: bool) -> Leading<BigInt> {
    let n = m.n();
    if let Some(small) = small_entries(m) {
        if let Some(run) = leading_run(small, n, stop_nonpositive) {
            return Leading {
                minors: run.minors.into_iter().map(Exact::into_big).collect(),
                stalled: run.stalled,
            };
        }
    }
    leading_run(m.entries().to_vec(), n, stop_nonpositive)
        .expect("BigInt elimination cannot overflow")
}

/// Determinants of the leading `1x1, ..., nxn` submatrices.
///
/// A zero pivot ends fraction-free elimination early; the remaining minors
/// are then computed one by one with a pivoting determinant.
pub fn leading_principal_minors(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.n();
    let run = leading(m, false);
    let mut minors = run.minors;
    if run.stalled {
        for k in minors.len() + 1..=n {
            let idx: Vec<usize> = (0..k).collect();
            minors.push(determinant(&m.principal_submatrix(&idx)));
        }
    }
    minors
}

/// First leading principal minor that is not strictly positive, as
/// `(size, value)`; `None` when all are positive (Sylvester's test).
pub fn first_nonpositive_leading_minor(m: &IntMatrix) -> Option<(usize, BigInt)> {
    let run = leading(m, true);
    run.minors
        .into_iter()
        .enumerate()
        .find(|(_, v)| !Exact::is_positive(v))
        .map(|(k, v)| (k + 1, v))
}
