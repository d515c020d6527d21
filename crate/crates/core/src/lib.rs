//! # qmono
//!
//! Entanglement measures for small multipartite qubit states and the
//! `s`-parameterized weighted monogamy (lower) and polygamy (upper) bounds,
//! together with the earlier bound families they are compared against.
//!
//! The crate is split into four layers:
//!
//! - [`linalg`]: a dense complex matrix type and a cyclic Jacobi eigensolver
//!   for Hermitian matrices (sizes up to 16x16 in practice).
//! - [`state`]: pure states and density matrices with partial trace and
//!   partial transposition.
//! - [`measures`]: concurrence, negativity and SCREN on pure states, the
//!   two-qubit spin-flip concurrence, and [`MeasureVector`] assembly.
//! - [`bounds`]: the weighted kernel, inequality checkers, the bound
//!   operations, comparison bounds, threshold ratios, weights and sweeps.
//!
//! Worked example states and parameter presets live in [`presets`].

// `!(x <= tol)` forms also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![forbid(unsafe_code)]

pub mod bounds;
mod error;
pub mod linalg;
pub mod measures;
pub mod presets;
pub mod state;
mod tolerance;

pub use bounds::{BoundFamily, BoundFlags, BoundId, BoundParams, BoundReport, Mode};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, C64};
pub use measures::MeasureVector;
pub use state::{DensityMatrix, PureState};
pub use tolerance::{Tolerances, TOLERANCES};
