//! Exact arithmetic foundation: variables, sparse multivariate polynomials,
//! rational functions, and truncated-series utilities.
//!
//! All values are immutable after construction and all operations are pure,
//! so independent computations can run in parallel without shared state.

mod monomial;
mod poly;
mod ratfun;
mod series;
mod var;

pub use monomial::Monomial;
pub use poly::Poly;
pub use ratfun::RatFun;
pub use series::{Grading, SeriesCap};
pub use var::Var;

use num_traits::{FromPrimitive, Signed};
use std::fmt;

/// Coefficient field bound for the polynomial kernels.
///
/// `Signed` pulls in the full `Num` operation set by value; `FromPrimitive`
/// lets series code divide by small integers (`1/k`, `1/k!`).
pub trait Scalar: Clone + Signed + FromPrimitive + PartialEq + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Clone + Signed + FromPrimitive + PartialEq + fmt::Debug + fmt::Display {}

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Clone, thiserror::Error)]
pub enum RingError {
    #[error("polynomial division is inexact; first irreducible remainder term: {witness}")]
    NotDivisible { witness: String },
    #[error("variable {0} is unbound at evaluation")]
    UnboundVariable(Var),
    #[error("series operand must have constant term 1 in the graded variables, found {found}")]
    ConstantTermNotOne { found: String },
    #[error("series exp operand must vanish at graded degree 0, found {found}")]
    ConstantTermNotZero { found: String },
    #[error("zero denominator in rational function")]
    ZeroDenominator,
}
