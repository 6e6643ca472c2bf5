//! Differential polynomials over ℚ with parameter symbols.
//!
//! Expressions are quotients of sparse polynomials in `t`, parameter
//! symbols and jet variables `x⁽ᵏ⁾`. The total derivative acts by
//! `D t = 1`, `D param = 0`, `D x⁽ᵏ⁾ = x⁽ᵏ⁺¹⁾`; a [`RelationSet`] rewrites
//! jets back down to a normal form modulo an ODE.

mod compiled;
mod expr;
mod poly;
mod relations;
pub mod verify;

use thiserror::Error;

pub use compiled::CompiledExpr;
pub use expr::{sum, DiffExpr};
pub use poly::{Monomial, Poly, Var};
pub use relations::RelationSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffPolyError {
    #[error("denominator vanishes identically")]
    ZeroDenominator,
    #[error("relation set is not triangular at {0}")]
    NotTriangular(String),
    #[error("duplicate rule for {0}")]
    DuplicateRule(String),
    #[error("rule head {0} is not a derivative of a state variable")]
    BadRuleHead(String),
    #[error("reduced residual is not constant: {0}")]
    NotConstant(String),
}
