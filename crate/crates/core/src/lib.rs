//! Exact symbolic construction and verification of rational Lax matrices of
//! types B, C, D built from oscillator-algebra realizations of shifted
//! Yangians, parametrized by coweight-valued divisors on the projective line.

pub mod error;
pub mod exact;

pub use error::{AlgebraError, Result};
pub use exact::{Degree, FactoredRat, Monomial, ParamName, Poly, RatFunc, VarId};
