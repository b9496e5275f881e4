//! Exact arithmetic kernel.
//!
//! Everything here works over the number field Q(√2,√3), stored in the basis
//! `{1, √2, √3, √6}` with arbitrary-precision rational coordinates. On top of
//! the scalar type sit dense matrices, univariate polynomials and rational
//! functions. The [`Field`] trait lets the same linear algebra run over exact
//! scalars, rational functions in one variable, or plain `f64`.

mod error;
mod field;
mod matrix;
mod poly;
mod ratfun;
pub mod rational;
mod scalar;

pub use error::ExactError;
pub use field::{pow_i, Field, FromScalar};
pub use matrix::{FieldMatrix, Matrix};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use rational::Rational;
pub use scalar::FieldScalar;

pub type Result<T, E = ExactError> = std::result::Result<T, E>;
