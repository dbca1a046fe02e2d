//! Root systems of quasi-Cartan matrices by reflection orbits, and the
//! Cartan-Killing type read off from them.

mod family;

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{determinant, IntMatrix, SkewSymmetrizableMatrix, Symmetrizer};
use crate::quasi_cartan::{is_positive, QuasiCartanMatrix};

pub use family::{cartan_matrix, CartanKillingType, Family};

/// Integer vector in the basis `e_1, ..., e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<BigInt>);

impl RootVector {
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        Self(v)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `v^T C w` for a symmetric matrix `C`.
    pub fn pair(&self, c: &IntMatrix, w: &RootVector) -> BigInt {
        let n = self.0.len();
        let mut total = BigInt::zero();
        for i in 0..n {
            if self.0[i].is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for j in 0..n {
                if !w.0[j].is_zero() {
                    row += c.get(i, j) * &w.0[j];
                }
            }
            total += &self.0[i] * row;
        }
        total
    }
}

impl Serialize for RootVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&crate::matrix::BigIntRepr(x))?;
        }
        seq.end()
    }
}

/// `s_i(v) = v - (sum_j A_ij v_j) e_i`, so that `s_i(e_j) = e_j - A_ij e_i`.
pub fn reflect(a: &QuasiCartanMatrix, i: usize, v: &RootVector) -> RootVector {
    let m = a.matrix();
    let mut coeff = BigInt::zero();
    for (j, x) in v.0.iter().enumerate() {
        if !x.is_zero() {
            coeff += m.get(i, j) * x;
        }
    }
    let mut out = v.clone();
    out.0[i] -= coeff;
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootEnumeration {
    /// The full orbit, sorted.
    Finite(Vec<RootVector>),
    /// The orbit grew past the cap.
    Exceeded { cap: usize },
}

impl RootEnumeration {
    pub fn roots(&self) -> Option<&[RootVector]> {
        match self {
            RootEnumeration::Finite(r) => Some(r),
            RootEnumeration::Exceeded { .. } => None,
        }
    }
}

/// Default orbit cap: twice the size of `E8` per unit of rank.
pub fn default_root_cap(n: usize) -> usize {
    2 * 240 * n.max(1)
}

/// Orbit of `{±e_i}` under the reflections `s_1, ..., s_n`, by worklist.
pub fn enumerate_roots(a: &QuasiCartanMatrix, cap: usize) -> RootEnumeration {
    let n = a.n();
    let mut seen: BTreeSet<RootVector> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let e = RootVector::basis(n, i);
        for v in [e.neg(), e] {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    if seen.len() > cap {
        return RootEnumeration::Exceeded { cap };
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let w = reflect(a, i, &v);
            if !seen.contains(&w) {
                seen.insert(w.clone());
                if seen.len() > cap {
                    return RootEnumeration::Exceeded { cap };
                }
                queue.push_back(w);
            }
        }
    }
    RootEnumeration::Finite(seen.into_iter().collect())
}

/// Splits the roots into classes of the relation "not orthogonal under
/// `C = DA`", closed transitively.
pub fn irreducible_components(roots: &[RootVector], c: &IntMatrix) -> Vec<Vec<usize>> {
    let r = roots.len();
    let images: Vec<RootVector> = roots
        .iter()
        .map(|v| {
            let n = v.0.len();
            RootVector(
                (0..n)
                    .map(|i| (0..n).fold(BigInt::zero(), |acc, j| acc + c.get(i, j) * &v.0[j]))
                    .collect(),
            )
        })
        .collect();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in 0..r {
        for b in a + 1..r {
            if find(&mut parent, a) == find(&mut parent, b) {
                continue;
            }
            let dot = roots[a]
                .0
                .iter()
                .zip(&images[b].0)
                .fold(BigInt::zero(), |acc, (x, y)| acc + x * y);
            if !dot.is_zero() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..r {
        let root = find(&mut parent, x);
        groups.entry(root).or_default().push(x);
    }
    groups.into_values().collect()
}

/// Rank over the rationals by fraction-free elimination.
pub(crate) fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..cols {
                row[j] = &row[j] * &pivot[col] - &factor * &pivot[j];
            }
            let g = row.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Cartan-Killing type of a positive quasi-Cartan matrix, from the root
/// orbit: each irreducible component is identified by its rank, number of
/// roots and the split into long and short roots.
pub fn cartan_killing_type(a: &QuasiCartanMatrix) -> Result<CartanKillingType> {
    if !is_positive(a) {
        return Err(Error::NotPositive);
    }
    let cap = default_root_cap(a.n());
    let roots = match enumerate_roots(a, cap) {
        RootEnumeration::Finite(r) => r,
        RootEnumeration::Exceeded { cap } => {
            return Err(Error::CapExceeded {
                what: "root orbit",
                actual: cap + 1,
                cap,
            })
        }
    };
    let c = a.symmetrized();
    let mut components = Vec::new();
    for group in irreducible_components(&roots, &c) {
        let members: Vec<&RootVector> = group.iter().map(|&t| &roots[t]).collect();
        let rank = integer_rank(members.iter().map(|v| v.0.clone()).collect());
        let lengths: Vec<BigInt> = members.iter().map(|v| v.pair(&c, v)).collect();
        let longest = lengths.iter().max().expect("nonempty component").clone();
        let long = lengths.iter().filter(|&l| *l == longest).count();
        let short = lengths.len() - long;
        components.push(family::identify(rank, members.len(), long, short)?);
    }
    CartanKillingType::new(components)
}

/// The matrix `B(n)`: above the diagonal `-1` at distance 1, `+1` at
/// distance 2, zero beyond.
pub fn bn_matrix(n: usize) -> SkewSymmetrizableMatrix {
    let mut b = IntMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let v = match j - i {
                1 => -1,
                2 => 1,
                _ => 0,
            };
            b[(i, j)] = BigInt::from(v);
            b[(j, i)] = BigInt::from(-v);
        }
    }
    SkewSymmetrizableMatrix::from_parts_unchecked(b, Symmetrizer::identity(n))
}

/// The companion `A(n)` of `B(n)`, equal to `B(n)` above the diagonal.
pub fn an_companion(n: usize) -> QuasiCartanMatrix {
    let b = bn_matrix(n);
    let mut a = IntMatrix::zeros(n);
    for i in 0..n {
        a[(i, i)] = BigInt::from(2);
        for j in i + 1..n {
            a[(i, j)] = b.get(i, j).clone();
            a[(j, i)] = b.get(i, j).clone();
        }
    }
    QuasiCartanMatrix::new(a).expect("A(n) is quasi-Cartan")
}

/// `det A(n)` for `n = 0, ..., limit`, with `d_0 = 1`.
pub fn dn_sequence(limit: usize) -> Vec<BigInt> {
    (0..=limit)
        .map(|n| {
            if n == 0 {
                BigInt::one()
            } else {
                determinant(an_companion(n).matrix())
            }
        })
        .collect()
}
