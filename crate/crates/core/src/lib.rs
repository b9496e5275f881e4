//! Knizhnik–Zamolodchikov systems built from symmetric-group representations.
//!
//! * [`symrep`] builds and validates transposition representations.
//! * [`kzcore`] assembles the connection, the `Q_k` sums, the reduced
//!   four-point coordinates, and the integer-eigenvalue test.
//! * [`hypergeom`] handles the Gauss equation behind the n = 4, m = 2 case.
//! * [`kzsolve`] assembles the closed-form fundamental solutions.
//! * [`verify`] checks them exactly on lines and numerically on grids.

pub mod error;
pub mod hypergeom;
pub mod kzcore;
pub mod kzsolve;
pub mod symrep;
pub mod verify;

pub use error::{KzError, Result};
pub use kzr_exact as exact;
