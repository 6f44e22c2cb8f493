use super::{Coeff, FourierSeries, QExp};
use crate::error::{Error, Result};
use crate::rat::{factorial, Rat};

/// Polynomial in a jet variable `u`, truncated after `u^order`, with series
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct UJet<R> {
    coeffs: Vec<FourierSeries<R>>,
}

impl<R: Coeff> UJet<R> {
    /// From `c_0..c_U`; the jet order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<FourierSeries<R>>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least the u^0 coefficient");
        UJet { coeffs }
    }

    pub fn constant(c: FourierSeries<R>, order: usize) -> Self {
        let cap = c.cap();
        let mut coeffs = vec![FourierSeries::zero(cap); order + 1];
        coeffs[0] = c;
        UJet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &FourierSeries<R> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[FourierSeries<R>] {
        &self.coeffs
    }

    pub fn cap(&self) -> QExp {
        self.coeffs.iter().map(|c| c.cap()).min().unwrap_or(QExp::ZERO)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        UJet { coeffs: (0..n).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        UJet { coeffs: (0..n).map(|k| self.coeffs[k].sub(&other.coeffs[k])).collect() }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        UJet { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn mul_series(&self, s: &FourierSeries<R>) -> Self {
        UJet { coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero())
                    .map(|i| self.coeffs[i].mul(&other.coeffs[k - i]))
                    .reduce(|a, b| a.add(&b))
                    .unwrap_or_else(|| {
                        FourierSeries::zero(self.coeffs[k].cap().min(other.coeffs[k].cap()))
                    })
            })
            .collect();
        UJet { coeffs }
    }

    /// `exp` of a jet with vanishing `u^0` coefficient, via `k e_k = sum j a_j e_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("jet exp needs a zero u^0 coefficient".into()));
        }
        let cap = self.cap();
        let mut e: Vec<FourierSeries<R>> = vec![FourierSeries::one(cap)];
        for k in 1..self.coeffs.len() {
            let mut acc = FourierSeries::zero(cap);
            for j in 1..=k {
                if self.coeffs[j].is_zero() || e[k - j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&e[k - j]).scale(&Rat::from_integer((j as i64).into())));
            }
            e.push(acc.scale(&Rat::new(1.into(), (k as i64).into())));
        }
        Ok(UJet { coeffs: e })
    }

    /// Truncates to a lower jet order.
    pub fn truncate(&self, order: usize) -> Self {
        UJet { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Lowers every coefficient cap to `cap`.
    pub fn lower_cap(&self, cap: QExp) -> Self {
        UJet { coeffs: self.coeffs.iter().map(|c| c.lower_cap(cap)).collect() }
    }
}

/// `1/k!` as a rational.
pub fn inv_factorial(k: u32) -> Rat {
    Rat::new(1.into(), factorial(k))
}
