//! Rational functions as unreduced quotients of polynomials.
//!
//! No gcd normalization is performed: equality is decided by
//! cross-multiplication, which is what every identity check needs.

use super::poly::Poly;
use super::series::SeriesCap;
use super::{RingError, Scalar};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone)]
pub struct RatFun<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Scalar> RatFun<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self, RingError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Cross-multiplication equality: `n1*d2 == n2*d1`.
    pub fn equals(&self, other: &RatFun<C>) -> bool {
        self.num.mul_ref(&other.den) == other.num.mul_ref(&self.den)
    }

    pub fn add_ref(&self, other: &RatFun<C>) -> RatFun<C> {
        if self.den == other.den {
            return RatFun {
                num: self.num.add_ref(&other.num),
                den: self.den.clone(),
            };
        }
        RatFun {
            num: self.num.mul_ref(&other.den).add_ref(&other.num.mul_ref(&self.den)),
            den: self.den.mul_ref(&other.den),
        }
    }

    pub fn sub_ref(&self, other: &RatFun<C>) -> RatFun<C> {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> RatFun<C> {
        RatFun {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn mul_ref(&self, other: &RatFun<C>) -> RatFun<C> {
        RatFun {
            num: self.num.mul_ref(&other.num),
            den: self.den.mul_ref(&other.den),
        }
    }

    pub fn div_ref(&self, other: &RatFun<C>) -> RatFun<C> {
        assert!(!other.is_zero(), "division by a zero rational function");
        RatFun {
            num: self.num.mul_ref(&other.den),
            den: self.den.mul_ref(&other.num),
        }
    }

    /// Truncated series expansion `num * den^{-1}`; the denominator needs
    /// graded constant term 1.
    pub fn series(&self, cap: &SeriesCap) -> Result<Poly<C>, RingError> {
        let inv = self.den.series_inverse(cap)?;
        Ok(self.num.truncate(cap).mul_capped(&inv, cap))
    }
}

/// Equality as rational functions (cross-multiplication), so that matrices of
/// rational functions satisfy the generic ring-element contract.
impl<C: Scalar> PartialEq for RatFun<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<C: Scalar> Zero for RatFun<C> {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Scalar> One for RatFun<C> {
    fn one() -> Self {
        RatFun::one()
    }
}

impl<C: Scalar> Add for RatFun<C> {
    type Output = RatFun<C>;
    fn add(self, rhs: RatFun<C>) -> RatFun<C> {
        self.add_ref(&rhs)
    }
}

impl<C: Scalar> Sub for RatFun<C> {
    type Output = RatFun<C>;
    fn sub(self, rhs: RatFun<C>) -> RatFun<C> {
        self.sub_ref(&rhs)
    }
}

impl<C: Scalar> Mul for RatFun<C> {
    type Output = RatFun<C>;
    fn mul(self, rhs: RatFun<C>) -> RatFun<C> {
        self.mul_ref(&rhs)
    }
}

impl<C: Scalar> Div for RatFun<C> {
    type Output = RatFun<C>;
    fn div(self, rhs: RatFun<C>) -> RatFun<C> {
        self.div_ref(&rhs)
    }
}

impl<C: Scalar> Neg for RatFun<C> {
    type Output = RatFun<C>;
    fn neg(self) -> RatFun<C> {
        self.neg_ref()
    }
}

impl<C: Scalar> fmt::Display for RatFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
