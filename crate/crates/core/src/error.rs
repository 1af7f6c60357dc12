//! Error type shared by the library.

use thiserror::Error;

/// Errors produced by contract violations on library operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Matrix exponential input exceeds the supported operator-norm range.
    #[error("operator norm {norm:.3e} exceeds the matrix-exponential bound {bound}")]
    NormBoundExceeded { norm: f64, bound: f64 },

    /// A Hermitian matrix was required.
    #[error("matrix is not Hermitian (max |H - H†| entry = {deviation:.3e})")]
    NonHermitian { deviation: f64 },

    /// A matrix or parameter set contained NaN or infinite entries.
    #[error("non-finite entries in {context}")]
    NonFinite { context: &'static str },

    /// Matrix inversion failed.
    #[error("matrix is singular to working precision")]
    Singular,

    /// Foldy-Wouthuysen generators require a strictly positive mass.
    #[error("Foldy-Wouthuysen transformation requires mass > 0 (got {mass})")]
    ZeroMass { mass: f64 },

    /// Unknown catalog state name.
    #[error("unknown catalog state {name:?}; valid names: {valid}")]
    UnknownCatalog { name: String, valid: &'static str },

    /// The Weyl index symmetry fails on the given side.
    #[error("state is not Weyl-symmetric on side {side} (worst deviation {deviation:.3e})")]
    NotWeylSymmetric { side: char, deviation: f64 },

    /// A schedule must contain at least one segment of positive duration.
    #[error("schedule has no segments of positive duration")]
    EmptySchedule,
}

pub type Result<T> = std::result::Result<T, Error>;
