//! Shared machinery for the three verification engines: exact comparison
//! witnesses for the symbolic and series engines, and pole-aware rational
//! point sampling for the randomized engine.

use super::report::{CheckOutcome, Witness};
use super::VerifyError;
use crate::ring::Var;
use crate::{QPoly, QRat, QRatFun};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// First mismatching monomial between two polynomials, if any.
pub fn poly_witness(lhs: &QPoly, rhs: &QPoly) -> Option<Witness> {
    let diff = lhs.sub_ref(rhs);
    diff.leading_term().map(|(m, _)| Witness::Term {
        monomial: m.to_string(),
        lhs_coefficient: lhs.coefficient(m).to_string(),
        rhs_coefficient: rhs.coefficient(m).to_string(),
    })
}

/// Cross-multiplied comparison of two rational functions.
pub fn ratfun_witness(lhs: &QRatFun, rhs: &QRatFun) -> Option<Witness> {
    let l = lhs.num().mul_ref(rhs.den());
    let r = rhs.num().mul_ref(lhs.den());
    poly_witness(&l, &r)
}

pub fn outcome_from(witness: Option<Witness>) -> CheckOutcome {
    match witness {
        None => CheckOutcome::pass(),
        Some(w) => CheckOutcome::fail(w),
    }
}

/// Stable string hash for deriving per-check seeds.
pub fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Deterministic rational sampler.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    /// The salt keeps different checks on different streams of the same seed.
    pub fn new(seed: u64, salt: &str) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(salt)),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Uniform rational with numerator and denominator drawn from [-99, 99],
    /// the denominator nonzero.
    pub fn qrat(&mut self) -> QRat {
        let num = self.rng.gen_range(-99i64..=99);
        let den = loop {
            let d = self.rng.gen_range(-99i64..=99);
            if d != 0 {
                break d;
            }
        };
        QRat::new(num.into(), den.into())
    }

    pub fn point(&mut self, vars: &[Var]) -> BTreeMap<Var, QRat> {
        vars.iter().map(|&v| (v, self.qrat())).collect()
    }
}

fn render_point(point: &BTreeMap<Var, QRat>) -> BTreeMap<String, String> {
    point
        .iter()
        .map(|(v, x)| (v.to_string(), x.to_string()))
        .collect()
}

/// Run a randomized identity check at `trials` distinct evaluation points.
///
/// The evaluator returns `None` when the sampled point hits a pole of either
/// side; such points are resampled (up to 100 attempts per trial) rather than
/// counted, so every reported pass is backed by `trials` genuine comparisons.
pub fn randomized_trials(
    trials: u32,
    seed: u64,
    salt: &str,
    vars: &[Var],
    eval: impl Fn(&BTreeMap<Var, QRat>) -> Option<(QRat, QRat)>,
) -> Result<CheckOutcome, VerifyError> {
    let mut sampler = Sampler::new(seed, salt);
    let mut seen: Vec<BTreeMap<Var, QRat>> = Vec::new();
    for trial in 0..trials {
        let mut attempts = 0;
        let (point, lhs, rhs) = loop {
            attempts += 1;
            if attempts > 100 {
                return Err(VerifyError::Internal(format!(
                    "{salt}: could not sample a pole-free point after 100 attempts (trial {trial})"
                )));
            }
            let point = sampler.point(vars);
            if seen.contains(&point) {
                continue;
            }
            if let Some((l, r)) = eval(&point) {
                break (point, l, r);
            }
        };
        if lhs != rhs {
            return Ok(CheckOutcome::fail(Witness::Point {
                assignment: render_point(&point),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }));
        }
        seen.push(point);
    }
    debug_assert_eq!(seen.len(), trials as usize);
    Ok(CheckOutcome::pass())
}

/// Evaluate a rational-function expression `num/den` at a point, treating a
/// vanishing denominator as a pole.
pub fn eval_ratio(num: &QPoly, den: &QPoly, point: &BTreeMap<Var, QRat>) -> Option<QRat> {
    let d = den.evaluate(point).ok()?;
    if d.is_zero() {
        return None;
    }
    let n = num.evaluate(point).ok()?;
    Some(n / d)
}

/// `base^e` for rationals.
pub fn qpow(base: &QRat, e: u32) -> QRat {
    let mut acc = QRat::new(1.into(), 1.into());
    for _ in 0..e {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Var;

    #[test]
    fn witness_reports_first_mismatch() {
        let lhs = QPoly::var(Var::X(1)) + QPoly::one();
        let rhs = QPoly::var(Var::X(1));
        match poly_witness(&lhs, &rhs) {
            Some(Witness::Term {
                monomial,
                lhs_coefficient,
                rhs_coefficient,
            }) => {
                assert_eq!(monomial, "1");
                assert_eq!(lhs_coefficient, "1");
                assert_eq!(rhs_coefficient, "0");
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(poly_witness(&rhs, &rhs).is_none());
    }

    #[test]
    fn sampler_is_deterministic_per_salt() {
        let mut a = Sampler::new(42, "check-a");
        let mut b = Sampler::new(42, "check-a");
        let mut c = Sampler::new(42, "check-b");
        let va: Vec<QRat> = (0..5).map(|_| a.qrat()).collect();
        let vb: Vec<QRat> = (0..5).map(|_| b.qrat()).collect();
        let vc: Vec<QRat> = (0..5).map(|_| c.qrat()).collect();
        assert_eq!(va, vb);
        assert_ne!(va, vc);
    }

    #[test]
    fn randomized_trials_resamples_poles_and_counts_distinct_points() {
        // A pole at every point with x1 in a large subset forces resampling.
        let vars = [Var::X(1)];
        let out = randomized_trials(8, 3, "resample-test", &vars, |pt| {
            let x = &pt[&Var::X(1)];
            if !x.numer().bit(0) {
                None // treat even numerators as poles
            } else {
                Some((x.clone(), x.clone()))
            }
        })
        .unwrap();
        assert!(matches!(out.status, super::super::report::Status::Pass));
    }
}
