//! Exact arithmetic over ℚ(i)(q, h, ...) and the linear algebra built on it.

pub mod gauss;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod unipoly;

pub use gauss::Gauss;
pub use matrix::{MatrixError, ScalarMatrix};
pub use parse::{parse_expr, parse_scalar, parse_scalar_in, ExprValue, ParseError};
pub use poly::{Poly, Var};
pub use scalar::Scalar;
pub use unipoly::{reconstruct_rational, UniPoly, UniVar};
