//! Finite-type recognition for skew-symmetrizable integer matrices under
//! mutation, in exact arithmetic.
//!
//! A matrix `B` is of finite type when every chordless cycle of its diagram
//! is cyclically oriented and `B` has a positive quasi-Cartan companion; the
//! type is then read off the companion's root system. [`recognizer`] runs
//! that pipeline and also offers a brute-force explorer of the mutation
//! class to check it against.

pub mod diagram;
pub mod error;
pub mod matrix;
pub mod orient;
pub mod quasi_cartan;
pub mod recognizer;
pub mod roots;
pub mod sweep;

pub use diagram::{ChordlessCycle, Diagram, Sign, SimpleGraph};
pub use error::{Error, Result};
pub use matrix::{IntMatrix, SkewSymmetrizableMatrix, Symmetrizer};
pub use quasi_cartan::QuasiCartanMatrix;
pub use recognizer::{recognize, RecognitionReport, Verdict};
pub use roots::CartanKillingType;
