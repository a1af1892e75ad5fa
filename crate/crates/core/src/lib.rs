//! Exact symbolic engine for braided algebras: Hecke symmetries, reflection
//! equation and braided Weyl algebras, the U(u(2)_h) derivative calculus and
//! its quantization.
//!
//! Everything is computed over ℚ(i)(q, h, ...) without floating point.

pub mod exact;
pub mod exec;
pub mod hecke;
pub mod nc;
pub mod re_weyl;
pub mod quantize;
pub mod u2;

pub use exact::{Gauss, Poly, Scalar, ScalarMatrix, UniPoly, UniVar, Var};
pub use exec::ExecMode;
