use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{upoly, Coeff, YLaurent};
use crate::rat::Rat;

/// Quotient of two [`YLaurent`] values in canonical form.
///
/// The denominator has lowest exponent zero, coprime integer coefficients and a
/// positive constant term, and shares no factor with the numerator. Equal
/// fractions therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YRational {
    num: YLaurent,
    den: YLaurent,
}

impl YRational {
    pub fn new(num: YLaurent, den: YLaurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::canonical(num, den))
    }

    pub fn from_laurent(num: YLaurent) -> Self {
        YRational { num, den: YLaurent::one() }
    }

    pub fn numerator(&self) -> &YLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &YLaurent {
        &self.den
    }

    /// The Laurent polynomial this equals, when the denominator is trivial.
    pub fn to_laurent(&self) -> Option<YLaurent> {
        self.den.as_constant().filter(|c| c.is_one()).map(|_| self.num.clone())
    }

    fn canonical(num: YLaurent, den: YLaurent) -> Self {
        if num.is_zero() {
            return YRational { num, den: YLaurent::one() };
        }
        if den.is_monomial() {
            let (h, c) = den.terms()[0].clone();
            return YRational { num: num.scale(&c.recip()).shift(-h), den: YLaurent::one() };
        }
        let (nlo, nd) = num.to_dense();
        let (dlo, dd) = den.to_dense();
        let g = upoly::gcd(&nd, &dd);
        let (nd, dd) = if g.len() > 1 {
            (upoly::divrem(&nd, &g).0, upoly::divrem(&dd, &g).0)
        } else {
            (nd, dd)
        };
        // integer primitive denominator with positive constant term
        let lcm = dd.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let content = dd
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm / c.denom()))));
        let mut factor = Rat::new(lcm, content);
        if dd[0].is_negative() {
            factor = -factor;
        }
        let den = YLaurent::from_dense(0, dd.into_iter().map(|c| c * &factor).collect());
        let num = YLaurent::from_dense(nlo - dlo, nd.into_iter().map(|c| c * &factor).collect());
        YRational { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if self.den.as_constant().is_some() {
                return YRational { num: n, den: self.den.clone() };
            }
            return Self::canonical(n, self.den.clone());
        }
        let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::canonical(n, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        YRational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::from_laurent(YLaurent::zero());
        }
        let trivial_a = self.den.as_constant().is_some();
        let trivial_b = other.den.as_constant().is_some();
        if trivial_a && trivial_b {
            return YRational { num: self.num.mul(&other.num), den: YLaurent::one() };
        }
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::from_laurent(YLaurent::zero());
        }
        YRational { num: self.num.scale(r), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    /// `y d/dy` by the quotient rule.
    pub fn y_ddy(&self) -> Self {
        if self.den.as_constant().is_some() {
            return YRational { num: self.num.y_ddy(), den: self.den.clone() };
        }
        let n = self.num.y_ddy().mul(&self.den).sub(&self.num.mul(&self.den.y_ddy()));
        Self::canonical(n, self.den.mul(&self.den))
    }

    /// `y -> 1/y`.
    pub fn mirror(&self) -> Self {
        Self::canonical(self.num.mirror(), self.den.mirror())
    }
}

impl Coeff for YRational {
    fn nil() -> Self {
        YRational::from_laurent(YLaurent::zero())
    }
    fn unity() -> Self {
        YRational::from_laurent(YLaurent::one())
    }
    fn is_nil(&self) -> bool {
        YRational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        YRational::add(self, other)
    }
    fn neg(&self) -> Self {
        YRational::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        YRational::mul(self, other)
    }
    fn scale(&self, r: &Rat) -> Self {
        YRational::scale(self, r)
    }
    fn from_rat(r: Rat) -> Self {
        YRational::from_laurent(YLaurent::constant(r))
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse()
    }
    fn ring_name() -> &'static str {
        "YRational"
    }
}

impl fmt::Display for YRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// `y/(1-y)^2`, the building block of the Weierstrass expansion.
#[cfg(test)]
pub(crate) fn y_over_one_minus_y_squared() -> YRational {
    YRational::canonical(YLaurent::y_half(2), YLaurent::from_ints(&[(0, 1), (1, -1)]).pow(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn canonical_form_is_syntactic() {
        let one_minus_y = YLaurent::from_ints(&[(0, 1), (1, -1)]);
        let a = YRational::new(one_minus_y.clone(), one_minus_y.mul(&one_minus_y)).unwrap();
        let b = YRational::new(YLaurent::from_ints(&[(0, -2)]), YLaurent::from_ints(&[(1, 2), (0, -2)])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.denominator(), &one_minus_y);
    }

    #[test]
    fn sum_cancels_to_laurent() {
        let r = y_over_one_minus_y_squared();
        let back = r.mul(&YRational::from_laurent(YLaurent::from_ints(&[(0, 1), (1, -1)]).pow(2)));
        assert_eq!(back.to_laurent(), Some(YLaurent::y_half(2)));
        assert!(r.add(&r.neg()).is_zero());
    }

    #[test]
    fn quotient_rule() {
        // D(y/(1-y)) = y/(1-y)^2
        let f = YRational::new(YLaurent::y_half(2), YLaurent::from_ints(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(f.y_ddy(), y_over_one_minus_y_squared());
    }

    #[test]
    fn monomial_inverse() {
        let t = YLaurent::from_terms([(1, rat(1)), (-1, rat(-1))]);
        let inv = YRational::from_laurent(t.clone()).inverse().unwrap();
        assert_eq!(inv.mul(&YRational::from_laurent(t)), YRational::unity());
        assert_eq!(inv.numerator(), &YLaurent::y_half(1).neg());
    }
}
