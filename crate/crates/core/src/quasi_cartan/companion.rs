use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::QuasiCartanMatrix;
use crate::diagram::{Diagram, Sign};
use crate::error::{Error, Result};
use crate::matrix::{determinant, IntMatrix, SkewSymmetrizableMatrix};
use crate::orient::SignAssignment;

/// A companion `A` of `B` together with the signs it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompanionCertificate {
    pub companion: QuasiCartanMatrix,
    pub source: SkewSymmetrizableMatrix,
    pub signs: SignAssignment,
}

impl CompanionCertificate {
    /// Re-derives the companion from `source` and `signs` and compares.
    pub fn verify(&self) -> bool {
        companion_from_signs(&self.source, &self.signs).is_ok_and(|c| c.companion == self.companion)
    }
}

/// `A_ii = 2` and `A_ij = -e_ij |B_ij|`, with `e` given per edge of the
/// diagram of `B`.
pub fn companion_from_signs(b: &SkewSymmetrizableMatrix, s: &SignAssignment) -> Result<CompanionCertificate> {
    let diagram_edges: Vec<(usize, usize)> = Diagram::of_skew(b).edges().map(|e| (e.u, e.v)).collect();
    if diagram_edges != s.edges {
        return Err(Error::SignDomainMismatch {
            reason: format!(
                "diagram has edges {:?}, assignment has {:?}",
                diagram_edges, s.edges
            ),
        });
    }
    let n = b.n();
    let mut a = IntMatrix::identity(n);
    for i in 0..n {
        a[(i, i)] = BigInt::from(2);
    }
    for (&(u, v), &sign) in s.edges.iter().zip(&s.signs) {
        for (i, j) in [(u, v), (v, u)] {
            let mag = b.get(i, j).abs();
            a[(i, j)] = if sign == Sign::Plus { -mag } else { mag };
        }
    }
    let companion = QuasiCartanMatrix::with_symmetrizer(a, b.symmetrizer())?;
    Ok(CompanionCertificate {
        companion,
        source: b.clone(),
        signs: s.clone(),
    })
}

/// The companion with every off-diagonal entry `-|B_ij|`.
pub fn cartan_companion(b: &SkewSymmetrizableMatrix) -> QuasiCartanMatrix {
    let edges: Vec<(usize, usize)> = Diagram::of_skew(b).edges().map(|e| (e.u, e.v)).collect();
    let signs = vec![Sign::Plus; edges.len()];
    let s = SignAssignment { edges, signs };
    companion_from_signs(b, &s).expect("signs cover the diagram").companion
}

fn check_companion(a: &QuasiCartanMatrix, b: &SkewSymmetrizableMatrix) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: b.n(),
            found: a.n(),
        });
    }
    let n = a.n();
    for i in 0..n {
        for j in 0..n {
            if i != j && a.get(i, j).abs() != b.get(i, j).abs() {
                return Err(Error::NotACompanion {
                    reason: format!("|A_{}{}| differs from |B_{}{}|", i + 1, j + 1, i + 1, j + 1),
                });
            }
        }
    }
    Ok(())
}

fn first_incompatibility(a: &QuasiCartanMatrix, b: &SkewSymmetrizableMatrix, k: usize) -> Option<(usize, usize)> {
    let n = a.n();
    for i in 0..n {
        if !b.get(i, k).is_positive() {
            continue;
        }
        for j in 0..n {
            if j == i || !b.get(k, j).is_positive() {
                continue;
            }
            let lhs = (a.get(i, k) * a.get(k, j) * a.get(j, i)).signum();
            if lhs != b.get(j, i).signum() {
                return Some((i, j));
            }
        }
    }
    None
}

/// `sgn(A_ik A_kj A_ji) = sgn(B_ji)` whenever `B_ik > 0` and `B_kj > 0`.
pub fn is_k_compatible(a: &QuasiCartanMatrix, b: &SkewSymmetrizableMatrix, k: usize) -> Result<bool> {
    check_companion(a, b)?;
    if k >= a.n() {
        return Err(Error::IndexOutOfRange { index: k, n: a.n() });
    }
    Ok(first_incompatibility(a, b, k).is_none())
}

/// Mutates a `k`-compatible companion `A` of `B` into a companion of
/// `mu_k(B)` as `A' = (J - E) A (J - F)`. Here `J` negates coordinate `k`,
/// `E` keeps the entries `A_ik` of column `k` with `B_ik > 0` and `F` the
/// entries `A_kj` of row `k` with `B_kj < 0`. Returns `A'` and `J - F`,
/// which carries `C = DA` to `C' = (J - F)^T C (J - F)`.
pub fn companion_mutate(
    a: &QuasiCartanMatrix,
    b: &SkewSymmetrizableMatrix,
    k: usize,
) -> Result<(QuasiCartanMatrix, IntMatrix)> {
    check_companion(a, b)?;
    let n = a.n();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    if let Some((i, j)) = first_incompatibility(a, b, k) {
        return Err(Error::NotKCompatible { k, i, j });
    }
    let mut j_minus_e = IntMatrix::identity(n);
    let mut j_minus_f = IntMatrix::identity(n);
    j_minus_e[(k, k)] = -BigInt::one();
    j_minus_f[(k, k)] = -BigInt::one();
    for i in 0..n {
        if b.get(i, k).is_positive() {
            j_minus_e[(i, k)] = -a.get(i, k);
        }
        if b.get(k, i).is_negative() {
            j_minus_f[(k, i)] = -a.get(k, i);
        }
    }
    let product = j_minus_e.mul(a.matrix())?.mul(&j_minus_f)?;
    let mutated = QuasiCartanMatrix::with_symmetrizer(product, a.symmetrizer())?;
    Ok((mutated, j_minus_f))
}

/// Entry-by-entry form of companion mutation, for cross-checking.
pub fn companion_mutate_entrywise(a: &QuasiCartanMatrix, b: &SkewSymmetrizableMatrix, k: usize) -> Result<IntMatrix> {
    check_companion(a, b)?;
    let n = a.n();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let m = a.matrix();
    let mut out = IntMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = if i == k && j == k {
                BigInt::from(2)
            } else if j == k {
                b.get(i, k).signum() * m.get(i, k)
            } else if i == k {
                -(b.get(k, j).signum() * m.get(k, j))
            } else {
                let bb = b.get(i, k) * b.get(k, j);
                if bb.is_positive() {
                    m.get(i, j) - (m.get(i, k) * m.get(k, j)).signum() * bb
                } else {
                    m.get(i, j).clone()
                }
            };
        }
    }
    Ok(out)
}

/// Whether `det E = ±1` and `D A' = E^T (D A) E`.
pub fn gram_equivalent(a: &QuasiCartanMatrix, a2: &QuasiCartanMatrix, e: &IntMatrix) -> Result<bool> {
    if a.symmetrizer() != a2.symmetrizer() {
        return Err(Error::SymmetrizerMismatch);
    }
    if e.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: e.n(),
        });
    }
    if determinant(e).abs() != BigInt::one() {
        return Ok(false);
    }
    let c = a.symmetrized();
    let transported = e.transpose().mul(&c)?.mul(e)?;
    Ok(transported == a2.symmetrized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::SkewSymmetrizableMatrix as Skew;
    use crate::quasi_cartan::is_positive;
    use crate::roots::{an_companion, bn_matrix};

    fn skew(rows: &[&[i64]]) -> Skew {
        Skew::from_i64(rows).unwrap()
    }

    fn qc(rows: &[&[i64]]) -> QuasiCartanMatrix {
        QuasiCartanMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn companion_of_single_arrow() {
        let b = skew(&[&[0, 1], &[-1, 0]]);
        let s = SignAssignment::new(vec![(0, 1)], vec![Sign::Plus]).unwrap();
        let c = companion_from_signs(&b, &s).unwrap();
        assert_eq!(c.companion, qc(&[&[2, -1], &[-1, 2]]));
        assert!(c.verify());
    }

    #[test]
    fn companion_of_bn_is_an() {
        for n in 1..=10 {
            let b = bn_matrix(n);
            let edges: Vec<(usize, usize)> = Diagram::of_skew(&b).edges().map(|e| (e.u, e.v)).collect();
            let signs = edges
                .iter()
                .map(|&(i, j)| Sign::of_i64(if b.get(i, j).is_positive() { -1 } else { 1 }))
                .collect();
            let s = SignAssignment::new(edges, signs).unwrap();
            assert_eq!(companion_from_signs(&b, &s).unwrap().companion, an_companion(n));
        }
    }

    #[test]
    fn empty_diagram_gives_twice_identity() {
        let b = skew(&[&[0, 0], &[0, 0]]);
        let s = SignAssignment::new(vec![], vec![]).unwrap();
        assert_eq!(companion_from_signs(&b, &s).unwrap().companion, qc(&[&[2, 0], &[0, 2]]));
        let wrong = SignAssignment::new(vec![(0, 1)], vec![Sign::Plus]).unwrap();
        assert!(matches!(companion_from_signs(&b, &wrong), Err(Error::SignDomainMismatch { .. })));
    }

    #[test]
    fn compatibility_on_oriented_triangle() {
        // 1 -> 2 -> 3 -> 1
        let b = skew(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]]);
        let all_minus = qc(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert!(!is_k_compatible(&all_minus, &b, 1).unwrap());
        let fixed = qc(&[&[2, -1, 1], &[-1, 2, -1], &[1, -1, 2]]);
        assert!(is_k_compatible(&fixed, &b, 1).unwrap());
        assert!(matches!(companion_mutate(&all_minus, &b, 1), Err(Error::NotKCompatible { k: 1, .. })));
        let not_companion = qc(&[&[2, -2, 1], &[-2, 2, -1], &[1, -1, 2]]);
        assert!(matches!(is_k_compatible(&not_companion, &b, 1), Err(Error::NotACompanion { .. })));
    }

    #[test]
    fn mutate_a3_path() {
        let b = skew(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        let a = qc(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let (a2, t) = companion_mutate(&a, &b, 1).unwrap();
        let b2 = b.mutate(1).unwrap();
        assert!(is_positive(&a2));
        assert_eq!(&companion_mutate_entrywise(&a, &b, 1).unwrap(), a2.matrix());
        assert!(gram_equivalent(&a, &a2, &t).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(a2.get(i, j).abs(), b2.get(i, j).abs());
                }
            }
        }
        assert!(is_k_compatible(&a2, &b2, 1).unwrap());
    }

    #[test]
    fn rank_two_only_flips_signs() {
        let b = skew(&[&[0, 1], &[-3, 0]]);
        let a = qc(&[&[2, -1], &[-3, 2]]);
        let (a2, _) = companion_mutate(&a, &b, 0).unwrap();
        assert_eq!(a2, qc(&[&[2, 1], &[3, 2]]));
    }

    #[test]
    fn double_mutation_is_equivalent() {
        let b = bn_matrix(5);
        let a = an_companion(5);
        let (a1, t1) = companion_mutate(&a, &b, 2).unwrap();
        let b1 = b.mutate(2).unwrap();
        let (a2, t2) = companion_mutate(&a1, &b1, 2).unwrap();
        assert!(gram_equivalent(&a, &a2, &t1.mul(&t2).unwrap()).unwrap());
    }

    #[test]
    fn equivalence_checks() {
        let a = an_companion(4);
        assert!(gram_equivalent(&a, &a, &IntMatrix::identity(4)).unwrap());
        let flip = IntMatrix::diagonal([1, 1, -1, 1].map(BigInt::from));
        assert!(gram_equivalent(&a, &a.flip_vertex(2), &flip).unwrap());
        let singular = IntMatrix::diagonal([1, 1, 0, 1].map(BigInt::from));
        assert!(!gram_equivalent(&a, &a, &singular).unwrap());
        let other = qc(&[&[2, -2], &[-1, 2]]);
        let other2 = qc(&[&[2, -1], &[-2, 2]]);
        assert_eq!(
            gram_equivalent(&other, &other2, &IntMatrix::identity(2)),
            Err(Error::SymmetrizerMismatch)
        );
    }
}
