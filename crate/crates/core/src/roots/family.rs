use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quasi_cartan::QuasiCartanMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

fn check_rank(family: Family, rank: usize) -> Result<()> {
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidType {
            reason: format!("{}{} is not a canonical name", family, rank),
        })
    }
}

/// Multiset of irreducible components, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanKillingType {
    components: Vec<(Family, usize)>,
}

impl CartanKillingType {
    /// Validates ranks and sorts; `C2` is renamed `B2`.
    pub fn new(mut components: Vec<(Family, usize)>) -> Result<Self> {
        for c in components.iter_mut() {
            check_rank(c.0, c.1)?;
            if *c == (Family::C, 2) {
                c.0 = Family::B;
            }
        }
        components.sort();
        Ok(Self { components })
    }

    pub fn irreducible(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![(family, rank)])
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|&(_, r)| r).sum()
    }
}

impl fmt::Display for CartanKillingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self.components.iter().map(|(fam, r)| format!("{}{}", fam, r)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for CartanKillingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "empty" {
            return Self::new(vec![]);
        }
        let mut components = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let bad = || Error::InvalidType {
                reason: format!("cannot parse component {:?}", part),
            };
            let mut chars = part.chars();
            let family = match chars.next().ok_or_else(bad)? {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                'E' => Family::E,
                'F' => Family::F,
                'G' => Family::G,
                _ => return Err(bad()),
            };
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            components.push((family, rank));
        }
        Self::new(components)
    }
}

impl Serialize for CartanKillingType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Names an irreducible root system from rank, root count and the number
/// of long and short roots (`short = 0` when all roots have one length).
/// `B2` and `C2` coincide; the name `B2` is used.
pub(crate) fn identify(rank: usize, roots: usize, long: usize, short: usize) -> Result<(Family, usize)> {
    let r = rank;
    let found = if short == 0 {
        if roots == r * (r + 1) {
            Some((Family::A, r))
        } else if r >= 4 && roots == 2 * r * (r - 1) {
            Some((Family::D, r))
        } else {
            match (r, roots) {
                (6, 72) => Some((Family::E, 6)),
                (7, 126) => Some((Family::E, 7)),
                (8, 240) => Some((Family::E, 8)),
                _ => None,
            }
        }
    } else {
        match (r, roots, long, short) {
            (2, 12, 6, 6) => Some((Family::G, 2)),
            (4, 48, 24, 24) => Some((Family::F, 4)),
            _ if r >= 2 && roots == 2 * r * r && short == 2 * r && long == 2 * r * (r - 1) => {
                Some((Family::B, r))
            }
            _ if r >= 3 && roots == 2 * r * r && long == 2 * r && short == 2 * r * (r - 1) => {
                Some((Family::C, r))
            }
            _ => None,
        }
    };
    found.ok_or(Error::UnknownRootSystem { rank, roots })
}

/// Textbook Cartan matrix `A_ij = 2 (a_i|a_j) / (a_i|a_i)` of an
/// irreducible type, nodes numbered along the main chain.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<QuasiCartanMatrix> {
    check_rank(family, rank)?;
    let n = rank;
    // (i, j, m): A_ij = -1 and A_ji = -m, i.e. node j is m times shorter
    let mut bonds: Vec<(usize, usize, i64)> = Vec::new();
    match family {
        Family::A => bonds.extend((1..n).map(|i| (i - 1, i, 1))),
        Family::B => {
            bonds.extend((1..n - 1).map(|i| (i - 1, i, 1)));
            bonds.push((n - 2, n - 1, 2));
        }
        Family::C => {
            bonds.extend((1..n - 1).map(|i| (i - 1, i, 1)));
            bonds.push((n - 1, n - 2, 2));
        }
        Family::D => {
            bonds.extend((1..n - 1).map(|i| (i - 1, i, 1)));
            bonds.push((n - 3, n - 1, 1));
        }
        Family::E => {
            bonds.extend((1..n - 1).map(|i| (i - 1, i, 1)));
            bonds.push((2, n - 1, 1));
        }
        Family::F => bonds.extend([(0, 1, 1), (1, 2, 2), (2, 3, 1)]),
        Family::G => bonds.push((0, 1, 3)),
    }
    let mut a = IntMatrix::zeros(n);
    for i in 0..n {
        a[(i, i)] = BigInt::from(2);
    }
    for (i, j, m) in bonds {
        a[(i, j)] = BigInt::from(-1);
        a[(j, i)] = BigInt::from(-m);
    }
    QuasiCartanMatrix::new(a)
}
