//! Symmetric-function constructors: Schur polynomials, power sums,
//! Hall-Littlewood and Macdonald one-row generators, weighted truncated sums,
//! the `V^n`/`U^n` determinant family, and power-sum basis decomposition.

mod dets;
mod generators;
mod pbasis;
mod schur;
mod weighted;

pub use dets::{a_alpha_beta, fn_matrix, fn_poly, un_poly, vn_matrix, vn_poly, zn_entry_parts};
pub use generators::{complete_homogeneous, hl_q_generator, macdonald_g_generator, row_determinant_schur};
pub use pbasis::{p_basis_decompose, oddness_test, PExpansion, PBasisExpansion};
pub use schur::{power_sum, schur, vandermonde};
pub use weighted::{weighted_sum, TruncatedSum, WeightKind};

#[derive(Debug, Clone, thiserror::Error)]
pub enum SymfunError {
    #[error("partition has {len} parts but only {vars} variables are available")]
    TooManyParts { len: usize, vars: usize },
    #[error("desk-scale limit: {0}")]
    DeskScale(String),
    #[error("tuple length mismatch: expected {expected}, got {got}")]
    TupleLength { expected: usize, got: usize },
    #[error("need at least as many variables as the degree ({degree}) for a power-sum decomposition, got {vars}")]
    TooFewVariables { degree: u32, vars: usize },
    #[error("not in the power-sum span; residual term: {witness}")]
    NotInSpan { witness: String },
    #[error(transparent)]
    Ring(#[from] crate::ring::RingError),
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
    #[error(transparent)]
    Combinat(#[from] crate::combinat::CombinatError),
}
