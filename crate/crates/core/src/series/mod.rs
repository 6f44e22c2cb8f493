//! Truncated q-series over pluggable exact coefficient rings.
//!
//! Every series carries a cap: all coefficients at q-exponents up to and
//! including the cap are known (absent entries are zero), everything beyond it
//! is unknown. Arithmetic only ever lowers caps.

mod cyclotomic;
mod jet;
mod laurent;
mod subst;
pub(crate) mod upoly;
mod yrational;

pub use cyclotomic::{Cyclotomic, SUPPORTED_ORDERS};
pub use jet::inv_factorial;
pub use jet::UJet;
pub use laurent::YLaurent;
pub use subst::{jet_substitute, LaurentBound};
pub use yrational::YRational;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{fmt_frac, rat, to_lattice, Rat};

/// Number of lattice steps per unit q-exponent.
pub const Q_DEN: i64 = 24;

/// A q-exponent on the lattice `(1/24)Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QExp(i64);

impl QExp {
    pub const ZERO: QExp = QExp(0);

    pub const fn from_units(units: i64) -> Self {
        QExp(units)
    }

    pub const fn int(n: i64) -> Self {
        QExp(n * Q_DEN)
    }

    /// `num/den`, failing when it is not a multiple of 1/24.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 || (num * Q_DEN) % den != 0 {
            return Err(Error::Lattice(format!(
                "q-exponent {num}/{den} has denominator not dividing 24"
            )));
        }
        Ok(QExp(num * Q_DEN / den))
    }

    pub fn from_rat(r: &Rat) -> Result<Self> {
        to_lattice(r, Q_DEN).map(QExp).ok_or_else(|| {
            Error::Lattice(format!("q-exponent {r} has denominator not dividing 24"))
        })
    }

    pub const fn units(self) -> i64 {
        self.0
    }

    pub fn to_rat(self) -> Rat {
        Rat::new(self.0.into(), Q_DEN.into())
    }

    pub fn is_integer(self) -> bool {
        self.0 % Q_DEN == 0
    }
}

impl std::ops::Add for QExp {
    type Output = QExp;
    fn add(self, o: QExp) -> QExp {
        QExp(self.0 + o.0)
    }
}

impl std::ops::Sub for QExp {
    type Output = QExp;
    fn sub(self, o: QExp) -> QExp {
        QExp(self.0 - o.0)
    }
}

impl fmt::Display for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_frac(self.0, Q_DEN))
    }
}

/// Exact commutative coefficient ring.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn nil() -> Self;
    fn unity() -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    fn from_rat(r: Rat) -> Self;
    /// Inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    fn ring_name() -> &'static str;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    /// `self / other` when the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.unit_inverse().map(|inv| self.mul(&inv))
    }

    /// A square root inside the ring, if one exists and is cheap to find.
    fn sqrt_exact(&self) -> Option<Self> {
        None
    }

    fn is_unity(&self) -> bool {
        *self == Self::unity()
    }
}

impl Coeff for Rat {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unity() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn ring_name() -> &'static str {
        "Rat"
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| Rat::new(n, d))
    }
}

/// A truncated series `sum c_e q^e` with `e` on the `(1/24)Z` lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierSeries<R> {
    terms: BTreeMap<QExp, R>,
    cap: QExp,
}

/// First coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch<R> {
    pub exponent: QExp,
    pub left: R,
    pub right: R,
}

impl<R: Coeff> FourierSeries<R> {
    pub fn zero(cap: QExp) -> Self {
        FourierSeries { terms: BTreeMap::new(), cap }
    }

    pub fn one(cap: QExp) -> Self {
        Self::constant(R::unity(), cap)
    }

    pub fn constant(c: R, cap: QExp) -> Self {
        Self::monomial(QExp::ZERO, c, cap)
    }

    pub fn monomial(e: QExp, c: R, cap: QExp) -> Self {
        Self::from_terms([(e, c)], cap)
    }

    /// Builds a series, summing repeated exponents and dropping zeros and
    /// anything beyond `cap`.
    pub fn from_terms<I: IntoIterator<Item = (QExp, R)>>(terms: I, cap: QExp) -> Self {
        let mut map: BTreeMap<QExp, R> = BTreeMap::new();
        for (e, c) in terms {
            if e > cap {
                continue;
            }
            match map.get_mut(&e) {
                Some(v) => v.add_assign(&c),
                None => {
                    map.insert(e, c);
                }
            }
        }
        map.retain(|_, c| !c.is_nil());
        FourierSeries { terms: map, cap }
    }

    pub fn cap(&self) -> QExp {
        self.cap
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (QExp, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of nonzero terms; see `is_zero` for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, e: QExp) -> Option<&R> {
        self.terms.get(&e)
    }

    /// Coefficient at `e`; zero when `e` is known but absent.
    pub fn coeff(&self, e: QExp) -> Result<R> {
        if e > self.cap {
            return Err(Error::CapUnderflow {
                needed: e.to_string(),
                available: self.cap.to_string(),
            });
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_else(R::nil))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<QExp> {
        self.terms.keys().next().copied()
    }

    /// Lowest exponent that might be nonzero: the valuation, or one step past
    /// the cap for a series known to vanish.
    fn order_bound(&self) -> QExp {
        self.valuation().unwrap_or(self.cap + QExp(1))
    }

    pub fn leading(&self) -> Option<(QExp, &R)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Restricts to a smaller cap; errors if `cap` is beyond what is known.
    pub fn truncate(&self, cap: QExp) -> Result<Self> {
        if cap > self.cap {
            return Err(Error::CapUnderflow {
                needed: cap.to_string(),
                available: self.cap.to_string(),
            });
        }
        Ok(self.lower_cap(cap))
    }

    /// Restricts to `min(cap, self.cap)`.
    pub fn lower_cap(&self, cap: QExp) -> Self {
        let cap = cap.min(self.cap);
        FourierSeries {
            terms: self.terms.range(..=cap).map(|(e, c)| (*e, c.clone())).collect(),
            cap,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = self.lower_cap(cap).terms;
        for (e, c) in other.terms.range(..=cap) {
            match out.get_mut(e) {
                Some(v) => {
                    v.add_assign(c);
                    if v.is_nil() {
                        out.remove(e);
                    }
                }
                None => {
                    out.insert(*e, c.clone());
                }
            }
        }
        FourierSeries { terms: out, cap }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, k: &R) -> Self {
        self.map_coeffs(|c| c.mul(k))
    }

    pub fn map_coeffs<S: Coeff, F: Fn(&R) -> S>(&self, f: F) -> FourierSeries<S> {
        FourierSeries::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))), self.cap)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: QExp) -> Self {
        FourierSeries {
            terms: self.terms.iter().map(|(x, c)| (*x + e, c.clone())).collect(),
            cap: self.cap + e,
        }
    }

    /// `q -> q^n`, the substitution `tau -> n tau`.
    pub fn rescale_q(&self, n: i64) -> Self {
        assert!(n > 0, "rescale factor must be positive");
        FourierSeries {
            terms: self.terms.iter().map(|(x, c)| (QExp(x.0 * n), c.clone())).collect(),
            cap: QExp(self.cap.0 * n),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = (self.cap + other.order_bound()).min(other.cap + self.order_bound());
        let mut out: BTreeMap<QExp, R> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = *ea + *eb;
                if e > cap {
                    break;
                }
                let p = ca.mul(cb);
                match out.get_mut(&e) {
                    Some(v) => v.add_assign(&p),
                    None => {
                        out.insert(e, p);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_nil());
        FourierSeries { terms: out, cap }
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one(self.cap - self.order_bound());
        }
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut e = k;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result.expect("k > 0")
    }

    /// Integer power; negative exponents go through [`Self::invert`].
    pub fn pow_int(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.invert()?.pow((-k) as u32))
        }
    }

    /// `self / other` by long division; the leading coefficient of `other`
    /// only has to divide exactly, not be a unit.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let (vb, b0) = other
            .leading()
            .ok_or_else(|| Error::NonUnit("division by a series with no known terms".into()))?;
        let va = self.order_bound();
        let cap = (self.cap - vb).min(other.cap + va - vb - vb);
        let mut rem = self.lower_cap(self.cap.min(cap + vb)).terms;
        let mut quot: BTreeMap<QExp, R> = BTreeMap::new();
        while let Some((&e, c)) = rem.iter().next() {
            let qe = e - vb;
            if qe > cap {
                break;
            }
            let qc = c.div_exact(b0).ok_or_else(|| {
                Error::InexactDivision(format!(
                    "coefficient at q^{e} is not divisible by the leading coefficient"
                ))
            })?;
            for (eb, cb) in &other.terms {
                let x = qe + *eb;
                if x > cap + vb {
                    break;
                }
                let p = qc.mul(cb);
                match rem.get_mut(&x) {
                    Some(v) => {
                        *v = v.sub(&p);
                        if v.is_nil() {
                            rem.remove(&x);
                        }
                    }
                    None => {
                        rem.insert(x, p.neg());
                    }
                }
            }
            quot.insert(qe, qc);
        }
        Ok(FourierSeries { terms: quot, cap })
    }

    /// Multiplicative inverse; the leading coefficient must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let (v, c) = self
            .leading()
            .ok_or_else(|| Error::NonUnit("cannot invert a series with no known terms".into()))?;
        if c.unit_inverse().is_none() {
            return Err(Error::NonUnit(format!("{c:?} in {}", R::ring_name())));
        }
        Self::one(self.cap - v).div(self)
    }

    /// Exponential of a series with strictly positive valuation.
    pub fn exp(&self) -> Result<Self> {
        if let Some(v) = self.valuation() {
            if v <= QExp::ZERO {
                return Err(Error::Precondition(
                    "exp needs a series without constant or negative-order terms".into(),
                ));
            }
        }
        let cap = self.cap;
        // n e_n = sum_k k a_k e_{n-k}, all exponents in lattice units
        let mut out: BTreeMap<QExp, R> = BTreeMap::new();
        out.insert(QExp::ZERO, R::unity());
        let mut n = QExp(1);
        while n <= cap {
            let mut acc = R::nil();
            for (k, a) in self.terms.range(..=n) {
                if let Some(e) = out.get(&(n - *k)) {
                    acc.add_assign(&a.mul(e).scale(&rat(k.0)));
                }
            }
            if !acc.is_nil() {
                out.insert(n, acc.scale(&Rat::new(1.into(), n.0.into())));
            }
            n = n + QExp(1);
        }
        Ok(FourierSeries { terms: out, cap })
    }

    /// Logarithm of a series `1 + (positive-order terms)`.
    pub fn log(&self) -> Result<Self> {
        match self.leading() {
            Some((v, c)) if v == QExp::ZERO && c.is_unity() => {}
            _ => {
                return Err(Error::Precondition(
                    "log needs a series with leading term 1".into(),
                ))
            }
        }
        let cap = self.cap;
        // n l_n = n a_n - sum_{0<k<n} k l_k a_{n-k}
        let mut out: BTreeMap<QExp, R> = BTreeMap::new();
        let mut n = QExp(1);
        while n <= cap {
            let mut acc = self.terms.get(&n).map(|a| a.scale(&rat(n.0))).unwrap_or_else(R::nil);
            for (k, l) in out.range(..n) {
                if let Some(a) = self.terms.get(&(n - *k)) {
                    acc = acc.sub(&l.mul(a).scale(&rat(k.0)));
                }
            }
            if !acc.is_nil() {
                out.insert(n, acc.scale(&Rat::new(1.into(), n.0.into())));
            }
            n = n + QExp(1);
        }
        Ok(FourierSeries { terms: out, cap })
    }

    /// Square root whose leading term is the chosen root of the leading term.
    pub fn sqrt(&self) -> Result<Self> {
        let (v, c) = self
            .leading()
            .ok_or_else(|| Error::Precondition("sqrt of a series with no known terms".into()))?;
        if v.0 % 2 != 0 {
            return Err(Error::Precondition(format!("sqrt needs an even leading exponent, got {v}")));
        }
        let root = c.sqrt_exact().ok_or_else(|| {
            Error::Precondition(format!("leading coefficient {c:?} is not a perfect square"))
        })?;
        let inv = c
            .unit_inverse()
            .ok_or_else(|| Error::NonUnit(format!("{c:?} in {}", R::ring_name())))?;
        let normalized = self.shift(QExp(-v.0)).mul_coeff(&inv);
        let half = Rat::new(1.into(), 2.into());
        let tail = normalized.log()?.scale(&half).exp()?;
        Ok(tail.mul_coeff(&root).shift(QExp(v.0 / 2)))
    }

    /// `q d/dq`, termwise.
    pub fn q_ddq(&self) -> Self {
        FourierSeries::from_terms(
            self.terms.iter().map(|(e, c)| (*e, c.scale(&e.to_rat()))),
            self.cap,
        )
    }

    /// First disagreement at or below the common cap.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch<R>> {
        let cap = self.cap.min(other.cap);
        let d = self.lower_cap(cap).sub(&other.lower_cap(cap));
        d.leading().map(|(e, _)| Mismatch {
            exponent: e,
            left: self.coeff(e).unwrap_or_else(|_| R::nil()),
            right: other.coeff(e).unwrap_or_else(|_| R::nil()),
        })
    }

    /// Exact agreement through `through`, which both caps must reach.
    pub fn agrees_through(&self, other: &Self, through: QExp) -> Result<Option<Mismatch<R>>> {
        let a = self.truncate(through)?;
        let b = other.truncate(through)?;
        Ok(a.first_mismatch(&b))
    }
}

impl FourierSeries<YLaurent> {
    /// `y d/dy`, termwise.
    pub fn y_ddy(&self) -> Self {
        self.map_coeffs(|c| c.y_ddy())
    }

    /// Lifts a one-variable series to constant-in-`y` coefficients.
    pub fn from_scalar(s: &FourierSeries<Rat>) -> Self {
        s.map_coeffs(|c| YLaurent::constant(c.clone()))
    }

    /// The `y`-free part, provided every coefficient is constant in `y`.
    pub fn to_scalar(&self) -> Option<FourierSeries<Rat>> {
        let mut out = Vec::with_capacity(self.len());
        for (e, c) in self.terms() {
            out.push((e, c.as_constant()?));
        }
        Some(FourierSeries::from_terms(out, self.cap))
    }

    pub fn to_rational(&self) -> FourierSeries<YRational> {
        self.map_coeffs(|c| YRational::from_laurent(c.clone()))
    }
}

impl FourierSeries<YRational> {
    pub fn y_ddy(&self) -> Self {
        self.map_coeffs(|c| c.y_ddy())
    }

    /// Converts back to Laurent coefficients when every denominator is a monomial.
    pub fn to_laurent(&self) -> Result<FourierSeries<YLaurent>> {
        let mut out = Vec::with_capacity(self.len());
        for (e, c) in self.terms() {
            out.push((
                e,
                c.to_laurent().ok_or_else(|| {
                    Error::InexactDivision(format!("coefficient at q^{e} keeps a pole: {c}"))
                })?,
            ));
        }
        Ok(FourierSeries::from_terms(out, self.cap))
    }
}

impl FourierSeries<Rat> {
    pub fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.is_integer())
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for FourierSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(e, c)| format!("q^{e}: {c}")).collect();
        if parts.is_empty() {
            write!(f, "0 + O(q^>{})", self.cap)
        } else {
            write!(f, "{} + O(q^>{})", parts.join("; "), self.cap)
        }
    }
}
