//! Sparse multivariate polynomials with exact coefficients.

use super::monomial::Monomial;
use super::series::SeriesCap;
use super::var::Var;
use super::{RingError, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial as a map from monomials to nonzero coefficients.
///
/// The map's key order is the canonical lexicographic term order, so
/// iteration (and therefore printing, hashing into reports, etc.) is
/// deterministic. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    /// A small integer constant.
    pub fn int(n: i64) -> Self {
        Poly::constant(C::from_i64(n).expect("small integer fits any scalar"))
    }

    pub fn var(v: Var) -> Self {
        Poly::from_term(Monomial::var(v), C::one())
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Poly::from_term(Monomial::var_pow(v, e), C::one())
    }

    pub fn from_term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Leading term in the lexicographic order, if any.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Add `c * m` in place, pruning a resulting zero.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn scale(&self, c: &C) -> Poly<C> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_terms(self.terms.iter().map(|(m, k)| (m.clone(), k.clone() * c.clone())))
    }

    pub fn add_ref(&self, other: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Product with terms beyond the cap dropped as they arise.
    pub fn mul_capped(&self, other: &Poly<C>, cap: &SeriesCap) -> Poly<C> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree_under(cap.grading);
            if d1 > cap.degree {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.degree_under(cap.grading) > cap.degree {
                    continue;
                }
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly<C> {
        let mut base = self.clone();
        let mut acc = Poly::one();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Drop every term whose graded degree exceeds the cap.
    pub fn truncate(&self, cap: &SeriesCap) -> Poly<C> {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_under(cap.grading) <= cap.degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest graded degree among the terms (0 for the zero polynomial).
    pub fn max_degree_under(&self, grading: super::series::Grading) -> u32 {
        self.terms.keys().map(|m| m.degree_under(grading)).max().unwrap_or(0)
    }

    /// Simultaneous substitution: every binding is applied to the original
    /// polynomial, unbound variables pass through.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly<C>>) -> Poly<C> {
        // Cache powers of each bound replacement polynomial.
        let mut pow_cache: BTreeMap<(Var, u32), Poly<C>> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut unbound = Vec::new();
            let mut acc = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                match bindings.get(&v) {
                    None => unbound.push((v, e)),
                    Some(rep) => {
                        let p = pow_cache
                            .entry((v, e))
                            .or_insert_with(|| rep.pow(e))
                            .clone();
                        acc = acc.mul_ref(&p);
                    }
                }
            }
            if !unbound.is_empty() {
                acc = acc.mul_ref(&Poly::from_term(Monomial::from_pairs(unbound), C::one()));
            }
            out = out.add_ref(&acc);
        }
        out
    }

    /// Substitute a single variable.
    pub fn substitute_one(&self, v: Var, rep: &Poly<C>) -> Poly<C> {
        let mut b = BTreeMap::new();
        b.insert(v, rep.clone());
        self.substitute(&b)
    }

    /// Exact evaluation; every variable must be bound.
    pub fn evaluate(&self, point: &BTreeMap<Var, C>) -> Result<C, RingError> {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (v, e) in m.iter() {
                let x = point.get(&v).ok_or(RingError::UnboundVariable(v))?;
                let mut p = C::one();
                for _ in 0..e {
                    p = p * x.clone();
                }
                val = val * p;
            }
            total = total + val;
        }
        Ok(total)
    }

    /// Exact polynomial quotient. Errors with the first irreducible remainder
    /// term if the division is inexact.
    ///
    /// Single-divisor reduction with respect to the lexicographic monomial
    /// order: over an integral domain, `lead(q*d) = lead(q)*lead(d)`, so the
    /// reduction succeeds at every step exactly when the division is exact.
    pub fn exact_div(&self, den: &Poly<C>) -> Result<Poly<C>, RingError> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let (dm, dc) = den.leading_term().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.try_div(&dm).ok_or_else(|| RingError::NotDivisible {
                witness: format!("{} {}", rc, rm),
            })?;
            let qc = rc.clone() / dc.clone();
            let piece = Poly::from_term(qm, qc);
            rem = rem.sub_ref(&piece.mul_ref(den));
            quot = quot.add_ref(&piece);
        }
        Ok(quot)
    }

    /// The graded-constant part: all graded variables set to zero.
    fn graded_constant(&self, cap: &SeriesCap) -> Poly<C> {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_under(cap.grading) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse as a truncated series. Requires the graded
    /// constant term to be exactly 1.
    pub fn series_inverse(&self, cap: &SeriesCap) -> Result<Poly<C>, RingError> {
        let c0 = self.graded_constant(cap);
        if c0 != Poly::one() {
            return Err(RingError::ConstantTermNotOne { found: c0.to_string() });
        }
        // 1/(1-u) = sum u^k; u has graded valuation >= 1, so k <= cap suffices.
        let u = Poly::one().sub_ref(self).truncate(cap);
        let mut acc = Poly::one();
        let mut pw = u.clone();
        for _ in 0..cap.degree {
            if pw.is_zero() {
                break;
            }
            acc = acc.add_ref(&pw);
            pw = pw.mul_capped(&u, cap);
        }
        Ok(acc)
    }

    /// Logarithm as a truncated series; the graded constant term must be 1.
    pub fn series_log(&self, cap: &SeriesCap) -> Result<Poly<C>, RingError> {
        let c0 = self.graded_constant(cap);
        if c0 != Poly::one() {
            return Err(RingError::ConstantTermNotOne { found: c0.to_string() });
        }
        // log(1-u) = -sum u^k / k.
        let u = Poly::one().sub_ref(self).truncate(cap);
        let mut acc = Poly::zero();
        let mut pw = u.clone();
        for k in 1..=cap.degree {
            if pw.is_zero() {
                break;
            }
            let inv_k = C::one() / C::from_u32(k).expect("small integer");
            acc = acc.sub_ref(&pw.scale(&inv_k));
            pw = pw.mul_capped(&u, cap);
        }
        Ok(acc)
    }

    /// Exponential as a truncated series; the graded constant term must be 0.
    pub fn series_exp(&self, cap: &SeriesCap) -> Result<Poly<C>, RingError> {
        let c0 = self.graded_constant(cap);
        if !c0.is_zero() {
            return Err(RingError::ConstantTermNotZero { found: c0.to_string() });
        }
        let h = self.truncate(cap);
        let mut acc = Poly::one();
        let mut pw = Poly::one();
        let mut fact = C::one();
        for k in 1..=cap.degree {
            pw = pw.mul_capped(&h, cap);
            if pw.is_zero() {
                break;
            }
            fact = fact * C::from_u32(k).expect("small integer");
            acc = acc.add_ref(&pw.scale(&(C::one() / fact.clone())));
        }
        Ok(acc)
    }
}

impl<C: Scalar> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Scalar> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        self.add_ref(&rhs)
    }
}

impl<C: Scalar> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        self.sub_ref(&rhs)
    }
}

impl<C: Scalar> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        self.mul_ref(&rhs)
    }
}

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

impl<'a, C: Scalar> Add for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.add_ref(rhs)
    }
}

impl<'a, C: Scalar> Sub for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.sub_ref(rhs)
    }
}

impl<'a, C: Scalar> Mul for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.mul_ref(rhs)
    }
}

/// Terms print in descending lexicographic order, leading term first.
impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qint, qrat, QPoly};

    fn x(i: u32) -> QPoly {
        QPoly::var(Var::X(i))
    }

    fn a() -> QPoly {
        QPoly::var(Var::A)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (x(1).clone() + x(2)).mul_ref(&(x(1) - x(2)));
        let expected = x(1).pow(2) - x(2).pow(2);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn additive_identity() {
        let p = x(1).pow(3) + a() * x(2);
        assert_eq!(p.add_ref(&QPoly::zero()), p);
    }

    #[test]
    fn binomial_square() {
        let base = QPoly::one() + a() * x(1);
        let sq = base.pow(2);
        let expected = QPoly::one()
            + QPoly::int(2) * a() * x(1)
            + a().pow(2) * x(1).pow(2);
        assert_eq!(sq, expected);
    }

    #[test]
    fn substitute_cancellation() {
        let p = x(1) + x(2);
        let out = p.substitute_one(Var::X(2), &x(1).neg_ref());
        assert!(out.is_zero());
    }

    #[test]
    fn substitute_is_simultaneous() {
        // x1 -> x2, x2 -> x1 swaps rather than collapsing.
        let p = x(1) - QPoly::int(2) * x(2);
        let mut b = BTreeMap::new();
        b.insert(Var::X(1), x(2));
        b.insert(Var::X(2), x(1));
        assert_eq!(p.substitute(&b), x(2) - QPoly::int(2) * x(1));
    }

    #[test]
    fn substitute_t_minus_t() {
        let p = x(1).mul_ref(&x(2));
        let mut b = BTreeMap::new();
        b.insert(Var::X(1), QPoly::var(Var::T));
        b.insert(Var::X(2), QPoly::var(Var::T).neg_ref());
        assert_eq!(p.substitute(&b), QPoly::var_pow(Var::T, 2).neg_ref());
    }

    #[test]
    fn substitute_square() {
        let p = QPoly::one() + x(1);
        assert_eq!(
            p.substitute_one(Var::X(1), &x(1).pow(2)),
            QPoly::one() + x(1).pow(2)
        );
    }

    #[test]
    fn evaluate_basic() {
        let p = x(1).pow(2) + x(2);
        let mut pt = BTreeMap::new();
        pt.insert(Var::X(1), qint(2));
        pt.insert(Var::X(2), qint(3));
        assert_eq!(p.evaluate(&pt).unwrap(), qint(7));
        assert_eq!(QPoly::zero().evaluate(&pt).unwrap(), qint(0));
    }

    #[test]
    fn evaluate_vandermonde_product() {
        // prod_{i<j} (x_i - x_j) at (1,2,3) = (-1)(-2)(-1) = -2
        let vdm = (x(1).sub_ref(&x(2)))
            .mul_ref(&x(1).sub_ref(&x(3)))
            .mul_ref(&x(2).sub_ref(&x(3)));
        let mut pt = BTreeMap::new();
        pt.insert(Var::X(1), qint(1));
        pt.insert(Var::X(2), qint(2));
        pt.insert(Var::X(3), qint(3));
        assert_eq!(vdm.evaluate(&pt).unwrap(), qint(-2));
    }

    #[test]
    fn evaluate_unbound_errors() {
        let p = x(1) + x(2);
        let mut pt = BTreeMap::new();
        pt.insert(Var::X(1), qint(1));
        assert!(matches!(
            p.evaluate(&pt),
            Err(RingError::UnboundVariable(Var::X(2)))
        ));
    }

    #[test]
    fn exact_div_basic() {
        let num = x(1).pow(2) - x(2).pow(2);
        let den = x(1) - x(2);
        assert_eq!(num.exact_div(&den).unwrap(), x(1) + x(2));
    }

    #[test]
    fn exact_div_with_parameters() {
        let f = QPoly::one() - a() * QPoly::var(Var::B) * x(1) * x(2);
        let num = (x(1).sub_ref(&x(2))).mul_ref(&f);
        assert_eq!(num.exact_div(&(x(1) - x(2))).unwrap(), f);
    }

    #[test]
    fn exact_div_inexact_errors() {
        let num = x(1).pow(2) + QPoly::one();
        let den = x(1) - x(2);
        assert!(matches!(
            num.exact_div(&den),
            Err(RingError::NotDivisible { .. })
        ));
    }

    #[test]
    fn series_inverse_geometric() {
        let p = QPoly::one() - x(1);
        let inv = p.series_inverse(&SeriesCap::x(3)).unwrap();
        let expected = QPoly::one() + x(1) + x(1).pow(2) + x(1).pow(3);
        assert_eq!(inv, expected);
    }

    #[test]
    fn series_inverse_with_parameters() {
        // (1 - ab x1^2)^{-1} to x-degree 4.
        let ab = a() * QPoly::var(Var::B);
        let p = QPoly::one().sub_ref(&ab.mul_ref(&x(1).pow(2)));
        let inv = p.series_inverse(&SeriesCap::x(4)).unwrap();
        let expected = QPoly::one()
            + ab.mul_ref(&x(1).pow(2))
            + ab.pow(2).mul_ref(&x(1).pow(4));
        assert_eq!(inv, expected);
        assert_eq!(QPoly::one().series_inverse(&SeriesCap::x(5)).unwrap(), QPoly::one());
    }

    #[test]
    fn series_inverse_requires_unit_constant() {
        let p = QPoly::int(2) - x(1);
        assert!(p.series_inverse(&SeriesCap::x(3)).is_err());
        // A parameter in the constant part also disqualifies.
        let p = QPoly::one() + a() + x(1);
        assert!(p.series_inverse(&SeriesCap::x(3)).is_err());
    }

    #[test]
    fn series_log_mercator() {
        let p = QPoly::one() + x(1);
        let lg = p.series_log(&SeriesCap::x(3)).unwrap();
        let expected = x(1) - x(1).pow(2).scale(&qrat(1, 2)) + x(1).pow(3).scale(&qrat(1, 3));
        assert_eq!(lg, expected);
        assert!(QPoly::one().series_log(&SeriesCap::x(4)).unwrap().is_zero());
    }

    #[test]
    fn series_log_of_inverse() {
        let cap = SeriesCap::x(2);
        let inv = (QPoly::one() - x(1)).series_inverse(&cap).unwrap();
        let lg = inv.series_log(&cap).unwrap();
        let expected = x(1) + x(1).pow(2).scale(&qrat(1, 2));
        assert_eq!(lg, expected);
    }

    #[test]
    fn display_is_descending_lex() {
        let p = x(1).pow(2) * QPoly::var(Var::X(2)) + x(1) * QPoly::var_pow(Var::X(2), 2);
        assert_eq!(p.to_string(), "x1^2 x2 + x1 x2^2");
        let q = QPoly::one() - x(1).scale(&qrat(1, 2));
        assert_eq!(q.to_string(), "-1/2 x1 + 1");
    }
}
