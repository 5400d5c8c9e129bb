//! Exact computer algebra for symmetric-function and Pfaffian identities.
//!
//! The crate builds, over arbitrary-precision rationals, the objects needed to
//! machine-check a family of classical and recent identities relating weighted
//! sums of Schur functions to Pfaffians and determinants:
//!
//! - [`ring`]: sparse multivariate polynomials, rational functions, and
//!   total-degree-truncated series utilities (inverse, log, exp).
//! - [`combinat`]: integer partitions, conjugates, Frobenius coordinates, the
//!   four-parameter row weight, and the `(alpha | alpha+1)` partition family.
//! - [`linalg`]: generic matrices over a commutative-ring element type, exact
//!   determinants (cofactor / fraction-free Bareiss), and two independent
//!   Pfaffian algorithms.
//! - [`symfun`]: Schur polynomials, power sums, Hall-Littlewood and Macdonald
//!   one-row generators, weighted truncated sums, the `V^n`/`U^n` determinant
//!   family, and power-sum basis decomposition.
//! - [`verify`]: a registry of named identity checks with symbolic,
//!   randomized-evaluation and truncated-series engines, plus the log-sum
//!   membership pipeline and suite runner.
//!
//! The polynomial and linear-algebra kernels are generic over the scalar type
//! ([`ring::Scalar`], [`linalg::RingElem`]); the concrete instantiation used
//! throughout is exact big rationals, aliased here at the crate root.

pub mod combinat;
pub mod linalg;
pub mod ring;
pub mod symfun;
pub mod verify;

/// Arbitrary-precision rational scalar: the coefficient field everywhere.
pub type QRat = num_rational::BigRational;

/// Sparse multivariate polynomial over [`QRat`].
pub type QPoly = ring::Poly<QRat>;

/// Quotient of two [`QPoly`] values (no gcd normalization).
pub type QRatFun = ring::RatFun<QRat>;

/// Convenience constructor for a small rational.
pub fn qrat(num: i64, den: i64) -> QRat {
    QRat::new(num.into(), den.into())
}

/// Convenience constructor for a small integer as a rational.
pub fn qint(n: i64) -> QRat {
    QRat::from_integer(n.into())
}
