//! The second-quantized elliptic genus, the index-multiplying substitution
//! and the Fourier expansion of the Siegel form `Delta_2`.

mod delta2;

pub use delta2::{delta2_expand, SiegelSeries};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat, Rat};
use crate::ring::JacobiForm;
use crate::series::{FourierSeries, QExp, YLaurent};

/// Truncated series in `p`, `q` and `y`, with `y`-exponents in half-units.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeVarSeries {
    terms: BTreeMap<(u32, QExp, i64), Rat>,
    pub pmax: u32,
    pub qcap: QExp,
}

impl ThreeVarSeries {
    pub fn one(pmax: u32, qcap: QExp) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, QExp::ZERO, 0), rat(1));
        ThreeVarSeries { terms, pmax, qcap }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, QExp, i64), Rat)>>(it: I, pmax: u32, qcap: QExp) -> Self {
        let mut s = ThreeVarSeries { terms: BTreeMap::new(), pmax, qcap };
        for (k, v) in it {
            s.add_term(k, v);
        }
        s
    }

    fn add_term(&mut self, k: (u32, QExp, i64), v: Rat) {
        if k.0 > self.pmax || k.1 > self.qcap || v.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rat::zero);
        *e += v;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// `(p-exponent, q-exponent, y-exponent in half-units)` and coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, QExp, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: u32, q: QExp, h: i64) -> Rat {
        self.terms.get(&(p, q, h)).cloned().unwrap_or_else(Rat::zero)
    }

    /// The coefficient of `p^n` as a series in `q` and `y`.
    pub fn slice(&self, n: u32) -> FourierSeries<YLaurent> {
        let mut by_q: BTreeMap<QExp, Vec<(i64, Rat)>> = BTreeMap::new();
        for ((p, q, h), v) in self.terms.range((n, QExp::from_units(i64::MIN), i64::MIN)..) {
            if *p != n {
                break;
            }
            by_q.entry(*q).or_default().push((*h, v.clone()));
        }
        FourierSeries::from_terms(by_q.into_iter().map(|(q, t)| (q, YLaurent::from_terms(t))), self.qcap)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let pmax = self.pmax.min(other.pmax);
        let qcap = self.qcap.min(other.qcap);
        let mut out = ThreeVarSeries { terms: BTreeMap::new(), pmax, qcap };
        for ((pa, qa, ha), a) in &self.terms {
            for ((pb, qb, hb), b) in &other.terms {
                out.add_term((pa + pb, *qa + *qb, ha + hb), a * b);
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|v| v.is_integer())
    }
}

impl fmt::Display for ThreeVarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..=self.pmax {
            writeln!(f, "p^{n}: {}", self.slice(n))?;
        }
        Ok(())
    }
}

/// Which factors of the product were included.
pub const SQEG_CONVENTION: &str = "m >= 0, n > 0, all l (m = 0 factors with l <= 0 included)";

/// `prod_{m >= 0, n > 0, l} (1 - q^m y^l p^n)^(-f(mn, l))` through `p^pmax`
/// and `q^qcap`, via the exponential of its logarithm.
pub fn sqeg_expand(f: &FourierSeries<YLaurent>, pmax: u32, qcap: QExp) -> Result<ThreeVarSeries> {
    let table = coeff_table(f, pmax, qcap)?;
    let qmax = qcap_int(qcap)?;
    // log = sum_{m, n, l} f(mn, l) sum_k q^(mk) y^(lk) p^(nk) / k
    let mut log: Vec<BTreeMap<(QExp, i64), Rat>> = vec![BTreeMap::new(); pmax as usize + 1];
    for n in 1..=pmax as i64 {
        for m in 0..=qmax {
            let Some(c) = table.get(&(m * n)) else { continue };
            for (h, v) in c.terms() {
                let mut k = 1;
                while n * k <= pmax as i64 && m * k <= qmax {
                    let slot = log[(n * k) as usize].entry((QExp::int(m * k), h * k)).or_insert_with(Rat::zero);
                    *slot += v / rat(k);
                    k += 1;
                }
            }
        }
    }
    let log: Vec<FourierSeries<YLaurent>> = log
        .into_iter()
        .map(|t| {
            let mut by_q: BTreeMap<QExp, Vec<(i64, Rat)>> = BTreeMap::new();
            for ((q, h), v) in t {
                by_q.entry(q).or_default().push((h, v));
            }
            FourierSeries::from_terms(by_q.into_iter().map(|(q, t)| (q, YLaurent::from_terms(t))), qcap)
        })
        .collect();
    // k E_k = sum_{j=1}^k j L_j E_{k-j}
    let mut e = vec![FourierSeries::one(qcap)];
    for k in 1..=pmax as usize {
        let mut acc = FourierSeries::zero(qcap);
        for j in 1..=k {
            if !log[j].is_zero() && !e[k - j].is_zero() {
                acc = acc.add(&log[j].mul(&e[k - j]).scale(&rat(j as i64)));
            }
        }
        e.push(acc.scale(&Rat::new(BigInt::one(), BigInt::from(k))));
    }
    let mut out = ThreeVarSeries { terms: BTreeMap::new(), pmax, qcap };
    for (n, s) in e.iter().enumerate() {
        for (q, c) in s.terms() {
            for (h, v) in c.terms() {
                out.add_term((n as u32, q, *h), v.clone());
            }
        }
    }
    if !out.is_integral() {
        return Err(Error::NonIntegral("second-quantized genus has a non-integral coefficient".into()));
    }
    Ok(out)
}

fn qcap_int(qcap: QExp) -> Result<i64> {
    if !qcap.is_integer() || qcap < QExp::ZERO {
        return Err(Error::Precondition(format!("q-cap {qcap} must be a nonnegative integer")));
    }
    Ok(qcap.units() / QExp::int(1).units())
}

/// `f(n, .)` for `n <= pmax * qcap`, checking that the input reaches that far.
fn coeff_table(f: &FourierSeries<YLaurent>, pmax: u32, qcap: QExp) -> Result<BTreeMap<i64, YLaurent>> {
    let need = pmax as i64 * qcap_int(qcap)?;
    if f.cap() < QExp::int(need) {
        return Err(Error::Missing(format!(
            "input known through q^{}, the p^{pmax} slice through q^{qcap} needs q^{need}",
            f.cap()
        )));
    }
    let mut out = BTreeMap::new();
    for (e, c) in f.terms() {
        if !e.is_integer() || e < QExp::ZERO {
            return Err(Error::Precondition(format!("input has q-exponent {e}")));
        }
        if !c.is_integral() {
            return Err(Error::NonIntegral(format!("input coefficient {c} at q^{e}")));
        }
        out.insert(e.units() / QExp::int(1).units(), c.clone());
    }
    Ok(out)
}

/// The same product by direct multiplication of its finitely many factors.
pub fn sqeg_product_oracle(f: &FourierSeries<YLaurent>, pmax: u32, qcap: QExp) -> Result<ThreeVarSeries> {
    let table = coeff_table(f, pmax, qcap)?;
    let qmax = qcap_int(qcap)?;
    let mut acc = ThreeVarSeries::one(pmax, qcap);
    for n in 1..=pmax as i64 {
        for m in 0..=qmax {
            let Some(c) = table.get(&(m * n)) else { continue };
            for (h, v) in c.terms() {
                let e = v.to_integer().to_i64().ok_or_else(|| Error::Precondition("exponent too large".into()))?;
                acc = acc.mul(&factor_power(n as u32, m, *h, e, pmax, qcap));
            }
        }
    }
    Ok(acc)
}

/// `(1 - q^m y^h p^n)^(-e)` truncated.
fn factor_power(n: u32, m: i64, h: i64, e: i64, pmax: u32, qcap: QExp) -> ThreeVarSeries {
    let mut terms = Vec::new();
    let mut coef = BigInt::one();
    let mut k: i64 = 0;
    while n as i64 * k <= pmax as i64 && QExp::int(m * k) <= qcap {
        terms.push(((n * k as u32, QExp::int(m * k), h * k), Rat::from_integer(coef.clone())));
        // binom(-e, k+1) (-1)^(k+1) from binom(-e, k) (-1)^k
        coef = coef * BigInt::from(e + k) / BigInt::from(k + 1);
        if coef.is_zero() {
            break;
        }
        k += 1;
    }
    ThreeVarSeries::from_terms(terms, pmax, qcap)
}

/// `phi(tau, h z)`, of index `h^2 t`.
pub fn hecke_rescale(a: &JacobiForm, h: i64) -> Result<JacobiForm> {
    if h < 1 {
        return Err(Error::Precondition("rescale factor must be positive".into()));
    }
    JacobiForm::new(a.weight.clone(), &a.index * rat(h * h), a.eta_character, a.series.substitute_power(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::FormName;
    use crate::ring::elliptic_check;

    fn k3(cap: i64) -> FourierSeries<YLaurent> {
        JacobiForm::named(FormName::Phi0_1, QExp::int(cap)).unwrap().series.scale(&rat(2))
    }

    #[test]
    fn low_slices() {
        let f = k3(8);
        let s = sqeg_expand(&f, 2, QExp::int(4)).unwrap();
        assert_eq!(s.slice(0), FourierSeries::one(QExp::int(4)));
        assert_eq!(s.slice(1), f.lower_cap(QExp::int(4)));
        assert_eq!(s, sqeg_product_oracle(&f, 2, QExp::int(4)).unwrap());
    }

    #[test]
    fn needs_enough_input() {
        assert!(matches!(sqeg_expand(&k3(3), 2, QExp::int(2)), Err(Error::Missing(_))));
    }

    #[test]
    fn factor_binomials() {
        let s = factor_power(1, 0, 2, 2, 3, QExp::int(1));
        assert_eq!(s.coeff(3, QExp::ZERO, 6), rat(4));
        let t = factor_power(1, 1, 0, -2, 5, QExp::int(5));
        assert_eq!(t.coeff(1, QExp::int(1), 0), rat(-2));
        assert_eq!(t.coeff(3, QExp::int(3), 0), rat(0));
    }

    #[test]
    fn rescale() {
        let cap = QExp::int(4);
        let phi = JacobiForm::named(FormName::Phi0_1, cap).unwrap();
        let r = hecke_rescale(&phi, 2).unwrap();
        let p2 = JacobiForm::named(FormName::Phi0_2, cap).unwrap();
        let p4 = JacobiForm::named(FormName::Phi0_4, cap).unwrap();
        let rhs = crate::ring::jf_mul(&p2, &p2).sub(&p4.scale(&rat(8))).unwrap();
        assert_eq!(r, rhs);
        assert_eq!(hecke_rescale(&phi, 1).unwrap(), phi);
        let th = JacobiForm::named(FormName::Theta, QExp::int(6)).unwrap();
        let t2 = hecke_rescale(&th, 2).unwrap();
        assert_eq!(t2.index, rat(2));
        let q = t2.series.div(&th.series).unwrap();
        let half = JacobiForm::named(FormName::Phi0_3Half, QExp::int(4)).unwrap();
        assert!(q.agrees_through(&half.series, QExp::int(4)).unwrap().is_none());
        assert!(elliptic_check(&hecke_rescale(&JacobiForm::named(FormName::Phi0_1, QExp::int(12)).unwrap(), 2).unwrap())
            .unwrap()
            .passed());
    }
}
