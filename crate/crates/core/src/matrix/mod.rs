//! Exact integer matrices: symmetrizers, mutation, fraction-free minors and
//! linear algebra over GF(2).

mod bareiss;
mod gf2;
mod int_matrix;
mod skew;
mod symmetrizer;

pub use bareiss::{determinant, first_nonpositive_leading_minor, leading_principal_minors};
pub use gf2::{gf2_rank, gf2_solve, Gf2Matrix, Gf2Solution};
pub use int_matrix::IntMatrix;
pub use skew::SkewSymmetrizableMatrix;
pub use symmetrizer::{find_symmetrizer, Symmetrizer};

pub(crate) use int_matrix::BigIntRepr;
pub(crate) use symmetrizer::{find_for_pattern, verify, SignPattern};
