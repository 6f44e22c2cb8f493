use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Coeff;
use crate::rat::{fmt_frac, rat, Rat};

/// Laurent polynomial in `y^(1/2)` with rational coefficients.
///
/// Exponents are stored in half-units: the pair `(h, c)` means `c * y^(h/2)`.
/// Terms are sorted by exponent and never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct YLaurent {
    terms: Vec<(i64, Rat)>,
}

impl YLaurent {
    pub fn zero() -> Self {
        YLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    /// `c * y^(h/2)`.
    pub fn monomial(h: i64, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            YLaurent { terms: vec![(h, c)] }
        }
    }

    /// `y^(h/2)`.
    pub fn y_half(h: i64) -> Self {
        Self::monomial(h, rat(1))
    }

    /// From `(half-unit exponent, coefficient)` pairs; repeats are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(it: I) -> Self {
        let mut map: BTreeMap<i64, Rat> = BTreeMap::new();
        for (h, c) in it {
            *map.entry(h).or_insert_with(Rat::zero) += c;
        }
        YLaurent { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// From integer-exponent, integer-coefficient pairs, e.g. `[(1,1),(0,10),(-1,1)]`.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(e, c)| (2 * e, rat(c))))
    }

    fn from_sorted(terms: Vec<(i64, Rat)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        YLaurent { terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(i64, Rat)] {
        &self.terms
    }

    /// Number of nonzero terms; see `is_zero` for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, h: i64) -> Rat {
        match self.terms.binary_search_by_key(&h, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// True when every exponent is an integer power of `y`.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.iter().all(|(h, _)| h % 2 == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        YLaurent { terms: out }
    }

    pub fn neg(&self) -> Self {
        YLaurent { terms: self.terms.iter().map(|(h, c)| (*h, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        YLaurent { terms: self.terms.iter().map(|(h, c)| (*h, c * r)).collect() }
    }

    /// Multiplies by `y^(h/2)`.
    pub fn shift(&self, h: i64) -> Self {
        YLaurent { terms: self.terms.iter().map(|(e, c)| (e + h, c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (h, c) = &self.terms[0];
            return other.scale(c).shift(*h);
        }
        if other.terms.len() == 1 {
            let (h, c) = &other.terms[0];
            return self.scale(c).shift(*h);
        }
        let (da, na) = integral_parts(&self.terms);
        let (db, nb) = integral_parts(&other.terms);
        let prod = mul_integral(&na, &nb);
        let den = da * db;
        let terms = if den.is_one() {
            prod.into_iter().map(|(h, v)| (h, Rat::from_integer(v))).collect()
        } else {
            prod.into_iter().map(|(h, v)| (h, Rat::new(v, den.clone()))).collect()
        };
        Self::from_sorted(terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `y d/dy`, which multiplies `y^(h/2)` by `h/2`.
    pub fn y_ddy(&self) -> Self {
        Self::from_sorted(
            self.terms.iter().map(|(h, c)| (*h, c * Rat::new((*h).into(), 2.into()))).collect(),
        )
    }

    /// `y -> y^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "y -> y^0 is not a substitution");
        let mut terms: Vec<(i64, Rat)> = self.terms.iter().map(|(h, c)| (h * k, c.clone())).collect();
        if k < 0 {
            terms.reverse();
        }
        YLaurent { terms }
    }

    /// `y -> 1/y`.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.mirror()
    }

    /// Value at `y = 1`.
    pub fn at_one(&self) -> Rat {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Exact quotient of Laurent polynomials, if it exists.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.terms.len() == 1 {
            let (h, c) = &other.terms[0];
            return Some(self.scale(&c.recip()).shift(-h));
        }
        let (bmin, bmax) = (other.min_exp()?, other.max_exp()?);
        let (amin, amax) = (self.min_exp()?, self.max_exp()?);
        if amax - amin < bmax - bmin {
            return None;
        }
        let qmin = amin - bmin;
        let qmax = amax - bmax;
        let mut rem: Vec<Rat> = vec![Rat::zero(); (amax - amin + 1) as usize];
        for (h, c) in &self.terms {
            rem[(h - amin) as usize] = c.clone();
        }
        let lead_inv = other.terms.last()?.1.recip();
        let mut quot: Vec<(i64, Rat)> = Vec::new();
        let mut qe = qmax;
        while qe >= qmin {
            let top = (qe + bmax - amin) as usize;
            if !rem[top].is_zero() {
                let qc = &rem[top] * &lead_inv;
                for (h, c) in &other.terms {
                    let idx = (qe + h - amin) as usize;
                    rem[idx] -= &qc * c;
                }
                quot.push((qe, qc));
            }
            qe -= 1;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        quot.reverse();
        Some(Self::from_sorted(quot))
    }

    /// Dense coefficient vector from `min_exp`, stepping by half-units.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rat>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut v = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (h, c) in &self.terms {
            v[(h - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i64, v: Vec<Rat>) -> Self {
        Self::from_sorted(v.into_iter().enumerate().map(|(i, c)| (lo + i as i64, c)).collect())
    }

    /// Smallest positive rational `d` such that `d * self` has integer coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
    }

    pub fn fmt_with(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (h, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *h {
                0 => String::new(),
                2 => var.to_string(),
                h if h % 2 == 0 => format!("{var}^{}", h / 2),
                h => format!("{var}^({})", fmt_frac(h, 2)),
            };
            let coeff = if a.denom().is_one() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff);
                out.push_str(&mono);
            }
        }
        out
    }
}

/// Common denominator and integer numerators.
fn integral_parts(terms: &[(i64, Rat)]) -> (BigInt, Vec<(i64, BigInt)>) {
    let den = terms.iter().fold(BigInt::one(), |acc, (_, c)| {
        if c.denom().is_one() {
            acc
        } else {
            acc.lcm(c.denom())
        }
    });
    let nums = if den.is_one() {
        terms.iter().map(|(h, c)| (*h, c.numer().clone())).collect()
    } else {
        terms.iter().map(|(h, c)| (*h, c.numer() * (&den / c.denom()))).collect()
    };
    (den, nums)
}

/// Product of two sparse integer Laurent polynomials, sorted by exponent.
fn mul_integral(a: &[(i64, BigInt)], b: &[(i64, BigInt)]) -> Vec<(i64, BigInt)> {
    let (amin, bmin) = (a[0].0, b[0].0);
    let stride = if a.iter().all(|(h, _)| (h - amin) % 2 == 0) && b.iter().all(|(h, _)| (h - bmin) % 2 == 0) {
        2
    } else {
        1
    };
    let span = ((a[a.len() - 1].0 - amin) + (b[b.len() - 1].0 - bmin)) / stride + 1;
    let lo = amin + bmin;
    if (a.len() * b.len()) as i64 * 4 < span {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ha, ca) in a {
            for (hb, cb) in b {
                *map.entry(ha + hb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        return map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    let small_a: Option<Vec<i64>> = a.iter().map(|(_, c)| c.to_i64()).collect();
    let small_b: Option<Vec<i64>> = b.iter().map(|(_, c)| c.to_i64()).collect();
    if let (Some(sa), Some(sb)) = (small_a, small_b) {
        let mut acc = vec![0i128; span as usize];
        let mut ok = true;
        'outer: for (i, (ha, _)) in a.iter().enumerate() {
            for (j, (hb, _)) in b.iter().enumerate() {
                let k = ((ha - amin + hb - bmin) / stride) as usize;
                let p = sa[i] as i128 * sb[j] as i128;
                match acc[k].checked_add(p) {
                    Some(v) => acc[k] = v,
                    None => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            return acc
                .into_iter()
                .enumerate()
                .filter(|(_, v)| *v != 0)
                .map(|(k, v)| (lo + k as i64 * stride, BigInt::from(v)))
                .collect();
        }
    }
    let mut acc = vec![BigInt::zero(); span as usize];
    for (ha, ca) in a {
        for (hb, cb) in b {
            let k = ((ha - amin + hb - bmin) / stride) as usize;
            acc[k] += ca * cb;
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (lo + k as i64 * stride, v))
        .collect()
}

impl Coeff for YLaurent {
    fn nil() -> Self {
        YLaurent::zero()
    }
    fn unity() -> Self {
        YLaurent::one()
    }
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        YLaurent::add(self, other)
    }
    fn neg(&self) -> Self {
        YLaurent::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        YLaurent::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        YLaurent::sub(self, other)
    }
    fn scale(&self, r: &Rat) -> Self {
        YLaurent::scale(self, r)
    }
    fn from_rat(r: Rat) -> Self {
        YLaurent::constant(r)
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(h, c)] => Some(YLaurent::monomial(-h, c.recip())),
            _ => None,
        }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        YLaurent::div_exact(self, other)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(h, c)] if h % 2 == 0 => c.sqrt_exact().map(|r| YLaurent::monomial(h / 2, r)),
            _ => None,
        }
    }
    fn ring_name() -> &'static str {
        "YLaurent"
    }
}

impl fmt::Display for YLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_theta_leading_factor() {
        let t = YLaurent::from_terms([(1, rat(1)), (-1, rat(-1))]);
        assert_eq!(t.mul(&t), YLaurent::from_ints(&[(1, 1), (0, -2), (-1, 1)]));
    }

    #[test]
    fn y_ddy_of_phi01_q0() {
        let p = YLaurent::from_ints(&[(1, 1), (0, 10), (-1, 1)]);
        assert_eq!(p.y_ddy(), YLaurent::from_ints(&[(1, 1), (-1, -1)]));
    }

    #[test]
    fn exact_division() {
        let a = YLaurent::from_ints(&[(2, 1), (0, -1)]);
        let b = YLaurent::from_ints(&[(1, 1), (0, -1)]);
        assert_eq!(a.div_exact(&b), Some(YLaurent::from_ints(&[(1, 1), (0, 1)])));
        assert_eq!(b.div_exact(&a), None);
        let c = YLaurent::from_ints(&[(2, 1), (0, 1)]);
        assert_eq!(c.div_exact(&b), None);
    }

    #[test]
    fn display_is_descending() {
        let p = YLaurent::from_ints(&[(2, 10), (1, -88), (0, -132), (-1, -88), (-2, 10)]);
        assert_eq!(p.to_string(), "10y^2 - 88y - 132 - 88y^-1 + 10y^-2");
        let h = YLaurent::from_terms([(1, rat(1)), (-1, rat(-1))]);
        assert_eq!(h.to_string(), "y^(1/2) - y^(-1/2)");
    }

    #[test]
    fn big_coefficients_take_the_slow_path() {
        let big = Rat::from_integer(BigInt::from(i64::MAX) * 4);
        let a = YLaurent::from_terms([(0, big.clone()), (2, big.clone())]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(2), &big * &big * rat(2));
    }

    #[test]
    fn rational_coefficients_multiply() {
        let a = YLaurent::from_terms([(0, Rat::new(1.into(), 2.into())), (1, Rat::new(1.into(), 3.into()))]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(1), Rat::new(1.into(), 3.into()));
        assert_eq!(sq.coeff(2), Rat::new(1.into(), 9.into()));
    }
}
