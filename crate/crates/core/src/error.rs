use thiserror::Error;

/// Errors raised by the library. Verdicts such as "not finite" are values,
/// not errors; these are contract violations on inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not skew-symmetrizable: {reason}")]
    NotSkewSymmetrizable { reason: String },

    #[error("matrix is not a quasi-Cartan matrix: {reason}")]
    NotQuasiCartan { reason: String },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("malformed diagram: {reason}")]
    MalformedDiagram { reason: String },

    #[error("malformed cycle: {reason}")]
    MalformedCycle { reason: String },

    #[error("size cap exceeded: {what} is {actual}, cap is {cap}")]
    CapExceeded { what: &'static str, actual: usize, cap: usize },

    #[error("graph is not cyclically orientable")]
    NotOrientable,

    #[error("sign assignment does not cover the edges of the diagram: {reason}")]
    SignDomainMismatch { reason: String },

    #[error("not a quasi-Cartan companion: {reason}")]
    NotACompanion { reason: String },

    #[error("companion is not {k}-compatible (i = {i}, j = {j})")]
    NotKCompatible { k: usize, i: usize, j: usize },

    #[error("symmetrizers differ")]
    SymmetrizerMismatch,

    #[error("quasi-Cartan matrix is not positive")]
    NotPositive,

    #[error("root system of rank {rank} with {roots} roots matches no Cartan-Killing family")]
    UnknownRootSystem { rank: usize, roots: usize },

    #[error("invalid Cartan-Killing type: {reason}")]
    InvalidType { reason: String },

    #[error("mutation class is not of finite type")]
    NotFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
