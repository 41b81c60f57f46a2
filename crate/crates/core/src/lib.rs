//! Exact integer polynomials, irreducibility censuses for integral
//! combinations of coprime polynomials, certified root and value numerics,
//! and Diophantine exponent calculators and estimators.

pub mod analytic;
pub mod arith;
pub mod cli;
pub mod error;
pub mod exponents;
pub mod factor;
pub mod families;
pub mod poly;

pub use error::{Error, Result};
pub use poly::{IntPolynomial, MobiusMap};
