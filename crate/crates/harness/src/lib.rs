//! User-facing surface of the dirac-entanglement library: file I/O for
//! states, Hamiltonian specs and sweep scenarios, the property-suite runner
//! behind `dent verify`, the (t_A, t_B) sweep engine, and period fitting for
//! sampled invariant series.

// Dense fixed-size numerics reads best with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod io;
pub mod period;
pub mod suites;
pub mod sweep;
pub mod tolerances;

use std::path::PathBuf;

use thiserror::Error;

/// Errors from file handling, scenario validation and series analysis.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("{path}: field \"{field}\": {message}")]
    Field {
        path: PathBuf,
        field: &'static str,
        message: String,
    },

    #[error("unknown state {name:?}: not a catalog name and no such file; catalog names: {catalog}")]
    UnknownState { name: String, catalog: String },

    #[error("unknown suite {name:?}; valid suites: {valid}")]
    UnknownSuite { name: String, valid: &'static str },

    #[error("series is constant; no dominant period")]
    ConstantSeries,

    #[error("series too short: need at least {need} samples, got {got}")]
    TooFewSamples { need: usize, got: usize },

    #[error(transparent)]
    Core(#[from] dirac_entanglement::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
