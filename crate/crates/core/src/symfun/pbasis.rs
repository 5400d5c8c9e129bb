//! Power-sum basis decomposition and the ring homomorphisms that rescale
//! power sums by `(1 - t^k)` factors.

use super::schur::power_sum;
use super::SymfunError;
use crate::combinat::{enumerate_partitions, Partition};
use crate::ring::{Grading, Monomial, SeriesCap, Var};
use crate::{QPoly, QRat, QRatFun};
use num_traits::Zero;
use std::collections::BTreeMap;

/// An expansion `sum_mu c_mu p_mu` indexed by partitions, with coefficients
/// in a parameter ring (`QPoly`, or `QRatFun` after the two-parameter
/// rescaling).
#[derive(Debug, Clone, PartialEq)]
pub struct PExpansion<T> {
    coeffs: BTreeMap<Partition, T>,
}

/// The common case: polynomial coefficients in the parameters.
pub type PBasisExpansion = PExpansion<QPoly>;

impl<T: Clone> PExpansion<T> {
    pub fn new() -> Self {
        PExpansion {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(coeffs: BTreeMap<Partition, T>) -> Self {
        PExpansion { coeffs }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.coeffs.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Entries whose index contains at least one even part.
    pub fn even_part_terms(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.coeffs.iter().filter(|(mu, _)| mu.has_even_part())
    }
}

impl PExpansion<QPoly> {
    pub fn coefficient(&self, mu: &Partition) -> QPoly {
        self.coeffs.get(mu).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Reassemble `sum c_mu p_mu` in `m` variables.
    pub fn rebuild(&self, m: usize) -> QPoly {
        let mut out = QPoly::zero();
        for (mu, c) in &self.coeffs {
            out = out.add_ref(&c.mul_ref(&p_mu(mu, m)));
        }
        out
    }

    /// Subtract another expansion termwise.
    pub fn sub(&self, other: &PExpansion<QPoly>) -> PExpansion<QPoly> {
        let mut coeffs = self.coeffs.clone();
        for (mu, c) in &other.coeffs {
            let e = coeffs.entry(mu.clone()).or_insert_with(QPoly::zero);
            *e = e.sub_ref(c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        PExpansion { coeffs }
    }

    /// Rescale every `p_k` by `(1 - t^k)`: the coefficient of `p_mu` picks up
    /// `prod_i (1 - t^{mu_i})`.
    pub fn theta_big_schur(&self) -> PExpansion<QPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(mu, c)| {
                let mut factor = QPoly::one();
                for &part in mu.parts() {
                    factor = factor.mul_ref(&(QPoly::one() - QPoly::var(Var::T).pow(part)));
                }
                (mu.clone(), c.mul_ref(&factor))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        PExpansion { coeffs }
    }

    /// Rescale every `p_k` by `(1 - t^k) / (1 - q^k)`; coefficients become
    /// exact rational functions in the parameters.
    pub fn theta_macdonald(&self) -> PExpansion<QRatFun> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(mu, c)| {
                let mut num = c.clone();
                let mut den = QPoly::one();
                for &part in mu.parts() {
                    num = num.mul_ref(&(QPoly::one() - QPoly::var(Var::T).pow(part)));
                    den = den.mul_ref(&(QPoly::one() - QPoly::var(Var::Q).pow(part)));
                }
                (mu.clone(), QRatFun::new(num, den).expect("nonzero denominator"))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        PExpansion { coeffs }
    }

    /// Truncate every coefficient to `q`-degree `<= q_order`.
    pub fn truncate_q(&self, q_order: u32) -> PExpansion<QPoly> {
        let cap = SeriesCap::q(q_order);
        let mut coeffs: BTreeMap<Partition, QPoly> = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            let t = c.truncate(&cap);
            if !t.is_zero() {
                coeffs.insert(mu.clone(), t);
            }
        }
        PExpansion { coeffs }
    }
}

impl PExpansion<QRatFun> {
    pub fn coefficient_ratfun(&self, mu: &Partition) -> QRatFun {
        self.coeffs.get(mu).cloned().unwrap_or_else(QRatFun::zero)
    }
}

/// `p_mu = prod_i p_{mu_i}` in `m` variables.
pub fn p_mu(mu: &Partition, m: usize) -> QPoly {
    let mut out = QPoly::one();
    for &part in mu.parts() {
        out = out.mul_ref(&power_sum(part, m));
    }
    out
}

/// Decompose a symmetric polynomial of `x`-degree `<= degree` in `m >= degree`
/// variables over the power-sum products `p_mu`, exactly, one homogeneous
/// degree at a time.
///
/// For each degree `d` the coefficients of the monomials `x^alpha` with
/// `alpha` a partition of `d` determine a symmetric polynomial, and `m >= d`
/// makes the `p_mu` with `|mu| = d` linearly independent, so each degree is a
/// square rational linear system. A final exact rebuild guards against inputs
/// outside the span (in particular, non-symmetric ones).
pub fn p_basis_decompose(
    f: &QPoly,
    degree: u32,
    m: usize,
) -> Result<PBasisExpansion, SymfunError> {
    if (m as u32) < degree {
        return Err(SymfunError::TooFewVariables { degree, vars: m });
    }

    // Split f by x-degree, keyed by the x-part of each monomial.
    let mut by_degree: Vec<BTreeMap<Monomial, QPoly>> = vec![BTreeMap::new(); degree as usize + 1];
    for (mono, coef) in f.iter() {
        let d = mono.degree_under(Grading::X);
        if d > degree {
            return Err(SymfunError::NotInSpan {
                witness: format!("{coef} {mono} exceeds degree {degree}"),
            });
        }
        let xpart = Monomial::from_pairs(mono.iter().filter(|(v, _)| matches!(v, Var::X(_))));
        let ppart = Monomial::from_pairs(mono.iter().filter(|(v, _)| !matches!(v, Var::X(_))));
        by_degree[d as usize]
            .entry(xpart)
            .or_insert_with(QPoly::zero)
            .add_term(ppart, coef.clone());
    }

    let mut coeffs: BTreeMap<Partition, QPoly> = BTreeMap::new();

    // Degree 0: the p-product over the empty partition is 1.
    if let Some(c0) = by_degree[0].get(&Monomial::one()) {
        if !c0.is_zero() {
            coeffs.insert(Partition::empty(), c0.clone());
        }
    }

    for d in 1..=degree {
        let mus: Vec<Partition> = enumerate_partitions(d, d as usize)
            .into_iter()
            .filter(|p| p.size() == d)
            .collect();
        // Canonical monomial x_1^{alpha_1} ... x_k^{alpha_k} for each alpha.
        let alpha_monos: Vec<Monomial> = mus
            .iter()
            .map(|alpha| {
                Monomial::from_pairs(
                    alpha
                        .parts()
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| (Var::X(i as u32 + 1), e)),
                )
            })
            .collect();
        let p_polys: Vec<QPoly> = mus.iter().map(|mu| p_mu(mu, m)).collect();
        let matrix: Vec<Vec<QRat>> = alpha_monos
            .iter()
            .map(|am| p_polys.iter().map(|p| p.coefficient(am)).collect())
            .collect();
        let rhs: Vec<QPoly> = alpha_monos
            .iter()
            .map(|am| {
                by_degree[d as usize]
                    .get(am)
                    .cloned()
                    .unwrap_or_else(QPoly::zero)
            })
            .collect();
        let solution = solve_rational_system(matrix, rhs).ok_or_else(|| SymfunError::NotInSpan {
            witness: format!("singular power-sum system at degree {d}"),
        })?;
        for (mu, c) in mus.into_iter().zip(solution) {
            if !c.is_zero() {
                coeffs.insert(mu, c);
            }
        }
    }

    let expansion = PExpansion { coeffs };
    let residual = f.sub_ref(&expansion.rebuild(m));
    if let Some((mono, coef)) = residual.leading_term() {
        return Err(SymfunError::NotInSpan {
            witness: format!("{coef} {mono}"),
        });
    }
    Ok(expansion)
}

/// Gaussian elimination over the rationals with polynomial right-hand sides.
fn solve_rational_system(mut m: Vec<Vec<QRat>>, mut rhs: Vec<QPoly>) -> Option<Vec<QPoly>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = m[col][col].clone();
        for j in col..n {
            m[col][j] = &m[col][j] / &p;
        }
        rhs[col] = rhs[col].scale(&(QRat::from_integer(1.into()) / p));
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in col..n {
                m[r][j] = &m[r][j] - &(&factor * &m[col][j]);
            }
            let delta = rhs[col].scale(&factor);
            rhs[r] = rhs[r].sub_ref(&delta);
        }
    }
    Some(rhs)
}

/// The two-variable substitution criterion for membership in the ring
/// generated by odd power sums: substituting `(x_{m-1}, x_m) -> (t, -t)`
/// must reproduce the same expression in `m - 2` variables (the latter being
/// the substitution `(x_{m-1}, x_m) -> (0, 0)`), up to the cap.
pub fn oddness_test(f: &QPoly, m: usize, cap: u32) -> bool {
    assert!(m >= 2, "the substitution needs two variables to retire");
    let tcap = SeriesCap::xt(cap);
    let mut to_t = BTreeMap::new();
    to_t.insert(Var::X(m as u32 - 1), QPoly::var(Var::T));
    to_t.insert(Var::X(m as u32), QPoly::var(Var::T).neg_ref());
    let mut to_zero = BTreeMap::new();
    to_zero.insert(Var::X(m as u32 - 1), QPoly::zero());
    to_zero.insert(Var::X(m as u32), QPoly::zero());
    let lhs = f.substitute(&to_t).truncate(&tcap);
    let rhs = f.substitute(&to_zero).truncate(&tcap);
    lhs == rhs
}
