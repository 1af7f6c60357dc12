//! Numerical library for Lorentz-invariant entanglement polynomials of two
//! Dirac spinors on fixed-momentum subspaces.
//!
//! The crate provides the gamma-matrix algebra in the Dirac basis, the spinor
//! representation of the proper orthochronous Lorentz group with its discrete
//! P/T/C/CP/CPT companions, two-spinor states and an example-state catalog,
//! the five polynomial invariants I₁, I₂, I₂A, I₂B, I₃ in mutually
//! cross-checking forms, Dirac-type Hamiltonians with constant and
//! time-ordered evolution, and the first two Foldy-Wouthuysen
//! transformations together with the compensated invariant forms in that
//! picture.
//!
//! Everything operates on plain value types and pure functions; seeded
//! generators are the only randomness, so every computation is reproducible.

// Dense fixed-size numerics reads best with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cmat;
pub mod error;
pub mod evolution;
pub mod foldy;
pub mod invariants;
pub mod lorentz;
pub mod states;

pub use cmat::{mat_exp, CMat2, CMat4, CVec4};
pub use error::{Error, Result};
pub use invariants::{all_invariants, InvariantRecord};
pub use num_complex::Complex64;
pub use states::{Spinor, TwoSpinorState};
