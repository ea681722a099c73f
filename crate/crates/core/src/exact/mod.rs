//! Exact arithmetic kernel: big rationals, sparse multivariate polynomials,
//! and reduced rational functions.

pub mod gcd;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod vars;

pub use gcd::poly_gcd;
pub use parse::parse_ratfunc;
pub use poly::{qint, qrat, Poly};
pub use ratfunc::{Degree, FactoredRat, RatFunc};
pub use vars::{Monomial, ParamName, VarId};
