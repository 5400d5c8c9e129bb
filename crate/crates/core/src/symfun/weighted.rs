//! Weighted truncated sums of Schur-type polynomials over partitions.

use super::generators::{hl_q_generator, macdonald_g_generator, row_determinant_schur};
use super::schur::schur;
use super::SymfunError;
use crate::combinat::enumerate_partitions;
use crate::ring::SeriesCap;
use crate::QPoly;

/// Which weight and which basis family the sum uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Four-parameter weight `omega(lambda)` on Schur polynomials.
    StanleyOmega,
    /// Indicator weight: `lambda` and its conjugate both have all parts even.
    EvenEven,
    /// `omega(lambda)` on big Schur polynomials (Hall-Littlewood generators).
    BigSchur,
    /// `omega(lambda)` on the two-parameter generator determinants
    /// (Macdonald one-row generators, `q`-truncated).
    Macdonald,
}

impl WeightKind {
    pub fn name(self) -> &'static str {
        match self {
            WeightKind::StanleyOmega => "stanley-omega",
            WeightKind::EvenEven => "even-even",
            WeightKind::BigSchur => "big-schur",
            WeightKind::Macdonald => "macdonald",
        }
    }

    pub fn parse(s: &str) -> Option<WeightKind> {
        match s {
            "stanley-omega" => Some(WeightKind::StanleyOmega),
            "even-even" => Some(WeightKind::EvenEven),
            "big-schur" => Some(WeightKind::BigSchur),
            "macdonald" => Some(WeightKind::Macdonald),
            _ => None,
        }
    }
}

/// A weighted sum over all partitions with `|lambda| <= cap` and
/// `len(lambda) <= num_vars`, carried as an exact polynomial.
#[derive(Debug, Clone)]
pub struct TruncatedSum {
    pub value: QPoly,
    pub num_vars: usize,
    pub cap: SeriesCap,
    pub kind: WeightKind,
}

/// Largest degree cap and variable count accepted by the constructors.
pub const DESK_SCALE: u32 = 8;

/// Build the weighted sum. For the generator-determinant kinds the sum is
/// complete in degrees `<= cap` only when `num_vars >= cap`, because those
/// polynomials do not vanish for shapes longer than the variable count.
pub fn weighted_sum(
    kind: WeightKind,
    num_vars: usize,
    cap: u32,
    q_order: u32,
) -> Result<TruncatedSum, SymfunError> {
    if cap > DESK_SCALE || num_vars > DESK_SCALE as usize {
        return Err(SymfunError::DeskScale(format!(
            "weighted sums accept cap <= {DESK_SCALE} and num_vars <= {DESK_SCALE}, got cap {cap}, vars {num_vars}"
        )));
    }
    let mut value = QPoly::zero();
    for lam in enumerate_partitions(cap, num_vars) {
        let term = match kind {
            WeightKind::StanleyOmega => lam.omega_weight().mul_ref(&schur(&lam, num_vars)?),
            WeightKind::EvenEven => {
                if lam.all_parts_even() && lam.conjugate().all_parts_even() {
                    schur(&lam, num_vars)?
                } else {
                    continue;
                }
            }
            WeightKind::BigSchur => {
                let gen = |r: u32| hl_q_generator(r, num_vars);
                lam.omega_weight()
                    .mul_ref(&row_determinant_schur(&lam, &gen)?)
            }
            WeightKind::Macdonald => {
                let gen = |r: u32| macdonald_g_generator(r, num_vars, q_order);
                let det = row_determinant_schur(&lam, &gen)?.truncate(&SeriesCap::q(q_order));
                lam.omega_weight().mul_ref(&det)
            }
        };
        value = value.add_ref(&term);
    }
    Ok(TruncatedSum {
        value,
        num_vars,
        cap: SeriesCap::x(cap),
        kind,
    })
}
