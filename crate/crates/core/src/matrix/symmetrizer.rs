use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::int_matrix::BigIntRepr;
use super::IntMatrix;
use crate::error::{Error, Result};

/// Positive diagonal `D`, normalized so that the entries on every connected
/// component of the associated graph have gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symmetrizer {
    diag: Vec<BigInt>,
}

impl Symmetrizer {
    pub fn identity(n: usize) -> Self {
        Self {
            diag: vec![BigInt::one(); n],
        }
    }

    /// Wraps an explicit diagonal. Only positivity is checked here; callers
    /// verify the symmetry condition against a concrete matrix.
    pub fn from_diag(diag: Vec<BigInt>) -> Result<Self> {
        if let Some(i) = diag.iter().position(|d| !d.is_positive()) {
            return Err(Error::NotSkewSymmetrizable {
                reason: format!("symmetrizer entry {} is not positive", i),
            });
        }
        Ok(Self { diag })
    }

    pub fn diag(&self) -> &[BigInt] {
        &self.diag
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn as_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.diag.iter().cloned())
    }

    /// `D * m`.
    pub fn apply(&self, m: &IntMatrix) -> IntMatrix {
        m.scale_rows(&self.diag)
    }
}

impl Serialize for Symmetrizer {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.diag.len()))?;
        for d in &self.diag {
            seq.serialize_element(&BigIntRepr(d))?;
        }
        seq.end()
    }
}

/// Which transpose-sign relation the matrix must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SignPattern {
    /// `DB` skew-symmetric: transpose entries have opposite signs.
    Skew,
    /// `DA` symmetric: transpose entries share a sign.
    Symmetric,
}

fn pattern_error(pattern: SignPattern, reason: String) -> Error {
    match pattern {
        SignPattern::Skew => Error::NotSkewSymmetrizable { reason },
        SignPattern::Symmetric => Error::NotQuasiCartan { reason },
    }
}

/// Checks `d[i]*m[i][j] == ±d[j]*m[j][i]` for every pair.
pub(crate) fn verify(m: &IntMatrix, d: &Symmetrizer, pattern: SignPattern) -> bool {
    let n = m.n();
    if d.len() != n {
        return false;
    }
    let dg = d.diag();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = &dg[i] * m.get(i, j);
            let rhs = &dg[j] * m.get(j, i);
            match pattern {
                SignPattern::Skew => lhs == -rhs,
                SignPattern::Symmetric => lhs == rhs,
            }
        })
    })
}

pub(crate) fn find_for_pattern(m: &IntMatrix, pattern: SignPattern) -> Result<Symmetrizer> {
    let n = m.n();
    if pattern == SignPattern::Skew {
        if let Some(i) = (0..n).find(|&i| !m.get(i, i).is_zero()) {
            return Err(pattern_error(pattern, format!("diagonal entry ({}, {}) is nonzero", i + 1, i + 1)));
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (m.get(i, j), m.get(j, i));
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (false, false) => {}
                _ => {
                    return Err(pattern_error(
                        pattern,
                        format!("entries ({}, {}) and ({}, {}) are not both zero or both nonzero", i + 1, j + 1, j + 1, i + 1),
                    ))
                }
            }
            let same_sign = a.signum() == b.signum();
            let ok = match pattern {
                SignPattern::Skew => !same_sign,
                SignPattern::Symmetric => same_sign,
            };
            if !ok {
                return Err(pattern_error(
                    pattern,
                    format!("sign pattern violated at ({}, {})", i + 1, j + 1),
                ));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
    }

    let mut ratio: Vec<Option<BigRational>> = vec![None; n];
    let mut diag = vec![BigInt::zero(); n];
    for root in 0..n {
        if ratio[root].is_some() {
            continue;
        }
        ratio[root] = Some(BigRational::one());
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = ratio[i].clone().expect("visited");
            for &j in &adj[i] {
                // d_i |m_ij| = d_j |m_ji|
                let dj = &di * BigRational::new(m.get(i, j).abs(), m.get(j, i).abs());
                match &ratio[j] {
                    None => {
                        ratio[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if *existing != dj => {
                        return Err(pattern_error(
                            pattern,
                            format!("cycle inconsistency at edge ({}, {})", i + 1, j + 1),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component.iter().fold(BigInt::one(), |acc, &v| {
            acc.lcm(ratio[v].as_ref().expect("set").denom())
        });
        let ints: Vec<BigInt> = component
            .iter()
            .map(|&v| {
                let r = ratio[v].as_ref().expect("set");
                r.numer() * (&lcm / r.denom())
            })
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&v, x) in component.iter().zip(ints) {
            diag[v] = x / &g;
        }
    }
    let d = Symmetrizer { diag };
    if !verify(m, &d, pattern) {
        return Err(pattern_error(pattern, "symmetrizer verification failed".into()));
    }
    Ok(d)
}

/// Finds the normalized symmetrizer `D` with `D*B` skew-symmetric.
pub fn find_symmetrizer(b: &IntMatrix) -> Result<Symmetrizer> {
    find_for_pattern(b, SignPattern::Skew)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn skew_symmetric_gets_identity() {
        let d = find_symmetrizer(&IntMatrix::from_i64(&[[0, 1], [-1, 0]])).unwrap();
        assert_eq!(d.diag(), diag(&[1, 1]).as_slice());
    }

    #[test]
    fn unequal_weights() {
        let b = IntMatrix::from_i64(&[[0, 1], [-2, 0]]);
        let d = find_symmetrizer(&b).unwrap();
        assert_eq!(d.diag(), diag(&[2, 1]).as_slice());
        // D*B = [[0,2],[-2,0]]
        assert_eq!(d.apply(&b), IntMatrix::from_i64(&[[0, 2], [-2, 0]]));
    }

    #[test]
    fn same_sign_rejected() {
        let err = find_symmetrizer(&IntMatrix::from_i64(&[[0, 1], [1, 0]])).unwrap_err();
        assert!(matches!(err, Error::NotSkewSymmetrizable { .. }));
    }

    #[test]
    fn one_sided_zero_rejected() {
        assert!(find_symmetrizer(&IntMatrix::from_i64(&[[0, 1], [0, 0]])).is_err());
    }

    #[test]
    fn nonzero_diagonal_rejected() {
        assert!(find_symmetrizer(&IntMatrix::from_i64(&[[1, 0], [0, 0]])).is_err());
    }

    #[test]
    fn inconsistent_cycle_rejected() {
        // ratios around the triangle multiply to 2, not 1
        let b = IntMatrix::from_i64(&[[0, 1, -1], [-2, 0, 1], [1, -1, 0]]);
        assert!(find_symmetrizer(&b).is_err());
    }

    #[test]
    fn normalized_per_component() {
        // two components: {0,1} with ratio 1:3, {2,3} with ratio 2:1
        let b = IntMatrix::from_i64(&[
            [0, 3, 0, 0],
            [-1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, -2, 0],
        ]);
        let d = find_symmetrizer(&b).unwrap();
        assert_eq!(d.diag(), diag(&[1, 3, 2, 1]).as_slice());
    }

    #[test]
    fn symmetric_pattern() {
        let a = IntMatrix::from_i64(&[[2, -1], [-2, 2]]);
        let d = find_for_pattern(&a, SignPattern::Symmetric).unwrap();
        assert_eq!(d.diag(), diag(&[2, 1]).as_slice());
        assert!(find_for_pattern(&IntMatrix::from_i64(&[[2, 1], [-1, 2]]), SignPattern::Symmetric).is_err());
    }
}
