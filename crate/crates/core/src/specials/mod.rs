//! Values of Jacobi forms at torsion points, the functions `alpha`, `beta`,
//! `gamma`, and the congruences they imply.

mod congruence;
mod hauptmodul;

pub use congruence::{congruence_report, value_pattern, value_pattern_checks, CongruenceReport, ResidueCheck};
pub use hauptmodul::{hauptmodul_checks, quarter_point_variant};

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::forms::{eta, level2_thetas, FormName};
use crate::rat::Rat;
use crate::ring::JacobiForm;
use crate::series::{Cyclotomic, FourierSeries, LaurentBound, QExp, SUPPORTED_ORDERS};

/// `phi(tau, lambda tau + mu)` before and after the automorphy factor
/// `q^(t lambda^2) e(t lambda mu)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictedValue {
    pub lambda: Rat,
    pub mu: Rat,
    /// The series after `y -> e(mu) q^lambda`.
    pub base: FourierSeries<Cyclotomic>,
    /// `t lambda^2`.
    pub q_shift: Rat,
    /// `t lambda mu` modulo 1.
    pub phase: Rat,
}

impl RestrictedValue {
    /// `base * q^(t lambda^2) * e(t lambda mu)`.
    pub fn value(&self) -> Result<FourierSeries<Cyclotomic>> {
        let shift = QExp::from_rat(&self.q_shift)?;
        let den = self.phase.denom().to_u32().filter(|d| SUPPORTED_ORDERS.contains(d));
        let den = den.ok_or_else(|| Error::Unsupported(format!("automorphy phase e({})", self.phase)))?;
        let k = self.phase.numer().to_i64().expect("phase numerator below its denominator");
        Ok(self.base.shift(shift).mul_coeff(&Cyclotomic::root(den, k)?))
    }

    /// The value as a rational series, when every coefficient is rational.
    pub fn rational(&self) -> Result<FourierSeries<Rat>> {
        rational_series(&self.value()?)
    }
}

pub(crate) fn rational_series(s: &FourierSeries<Cyclotomic>) -> Result<FourierSeries<Rat>> {
    let mut terms = Vec::new();
    for (e, c) in s.terms() {
        let r = c.to_rat().ok_or_else(|| Error::RingMismatch(format!("coefficient {c} at q^{e} is not rational")))?;
        terms.push((e, r));
    }
    Ok(FourierSeries::from_terms(terms, s.cap()))
}

/// The series over `Q` when every coefficient is rational, else unchanged.
pub fn rational_or_cyclotomic(
    s: &FourierSeries<Cyclotomic>,
) -> std::result::Result<FourierSeries<Rat>, FourierSeries<Cyclotomic>> {
    rational_series(s).map_err(|_| s.clone())
}

fn check_den(r: &Rat) -> Result<()> {
    let ok = r.denom().to_u32().is_some_and(|d| SUPPORTED_ORDERS.contains(&d));
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("torsion coordinate {r}")))
    }
}

/// Restriction of `a` to `z = lambda tau + mu`.
pub fn restrict(a: &JacobiForm, lambda: &Rat, mu: &Rat) -> Result<RestrictedValue> {
    check_den(lambda)?;
    check_den(mu)?;
    let base = a.series.specialize(mu, lambda, &LaurentBound::weak(a.index.clone()))?;
    let q_shift = &a.index * lambda * lambda;
    let p = &a.index * lambda * mu;
    let phase = &p - p.floor();
    Ok(RestrictedValue { lambda: lambda.clone(), mu: mu.clone(), base, q_shift, phase })
}

/// The value of a named form at the torsion point `z = mu`.
pub fn value_at(name: FormName, mu: &Rat, cap: QExp) -> Result<FourierSeries<Rat>> {
    restrict(&JacobiForm::named(name, cap)?, &Rat::zero(), mu)?.rational()
}

/// `alpha = phi_0_1(tau, 1/2)`, `beta = phi_0_2(tau, 1/3)` and
/// `gamma = theta00(2 tau) / theta01(2 tau)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Abg {
    pub alpha: FourierSeries<Rat>,
    pub beta: FourierSeries<Rat>,
    pub gamma: FourierSeries<Rat>,
}

pub fn abg_functions(cap: QExp) -> Result<Abg> {
    if cap < QExp::int(1) {
        return Err(Error::CapUnderflow { needed: "1".into(), available: cap.to_string() });
    }
    Ok(Abg {
        alpha: value_at(FormName::Phi0_1, &Rat::new(1.into(), 2.into()), cap)?,
        beta: value_at(FormName::Phi0_2, &Rat::new(1.into(), 3.into()), cap)?,
        gamma: level2_thetas(cap)?.gamma,
    })
}

/// `q^(m/4) phi(tau, -(tau + 1)/2)` for `phi_0_1..phi_0_4` and `xi_0_6`.
#[derive(Clone, Debug, PartialEq)]
pub struct AhatValues {
    pub phi: [FourierSeries<Rat>; 4],
    pub xi6: FourierSeries<Rat>,
}

fn ahat(name: FormName, cap: QExp) -> Result<FourierSeries<Rat>> {
    let a = JacobiForm::named(name, cap)?;
    let half = Rat::new((-1).into(), 2.into());
    let r = restrict(&a, &half, &half)?;
    rational_series(&r.base.shift(QExp::from_rat(&r.q_shift)?))
}

/// The theta-group values; the input is expanded with a margin so the
/// results are known through `cap`.
pub fn ahat_values(cap: QExp) -> Result<AhatValues> {
    if cap < QExp::int(2) {
        return Err(Error::CapUnderflow { needed: "2".into(), available: cap.to_string() });
    }
    let pad = cap + cap + QExp::int(4);
    let names = [FormName::Phi0_1, FormName::Phi0_2, FormName::Phi0_3, FormName::Phi0_4];
    let mut phi = Vec::new();
    for n in names {
        phi.push(ahat(n, pad)?.truncate(cap)?);
    }
    let xi6 = ahat(FormName::Xi0_6, pad)?.truncate(cap)?;
    Ok(AhatValues { phi: phi.try_into().expect("four values"), xi6 })
}

/// `(theta00 / eta)^12` at `z = 0`.
pub fn theta00_over_eta_12(cap: QExp) -> Result<FourierSeries<Rat>> {
    let pad = cap + QExp::int(1);
    let t = level2_thetas(pad)?.theta00.at_one();
    t.div(&eta(pad))?.pow(12).truncate(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn table_values() {
        let cap = QExp::int(4);
        let c = |name, mu: Rat| value_at(name, &mu, cap).unwrap();
        assert_eq!(c(FormName::Phi0_1, rat(0)), FourierSeries::constant(rat(12), cap));
        assert_eq!(c(FormName::Phi0_4, ratio(1, 2)), FourierSeries::constant(rat(-1), cap));
        assert_eq!(c(FormName::Phi0_3, ratio(1, 3)), FourierSeries::constant(rat(1), cap));
        assert_eq!(c(FormName::Phi0_4, ratio(1, 4)), FourierSeries::constant(rat(1), cap));
    }

    #[test]
    fn alpha_and_gamma() {
        let cap = QExp::int(6);
        let abg = abg_functions(cap).unwrap();
        let expect = [8, 256, 2048, 11264, 49152, 183808];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(abg.alpha.coeff(QExp::int(n as i64)).unwrap(), rat(*v));
        }
        let g4 = abg.gamma.pow(4).scale(&rat(16)).sub(&FourierSeries::constant(rat(8), cap));
        assert_eq!(g4, abg.alpha);
        assert_eq!(abg.beta.coeff(QExp::ZERO).unwrap(), rat(3));
    }

    #[test]
    fn ahat_small() {
        let v = ahat_values(QExp::int(3)).unwrap();
        let cap = QExp::int(3);
        assert!(v.phi[2].is_zero());
        assert_eq!(v.phi[3], FourierSeries::constant(rat(-1), cap));
        assert_eq!(v.phi[1], FourierSeries::constant(rat(-2), cap));
        assert_eq!(v.phi[0].coeff(QExp::new(-1, 4).unwrap()).unwrap(), rat(-1));
        assert_eq!(v.phi[0].coeff(QExp::new(1, 4).unwrap()).unwrap(), rat(20));
        let sq = v.phi[0].pow(2).add(&FourierSeries::constant(rat(64), cap));
        assert!(sq.agrees_through(&v.xi6, QExp::int(2)).unwrap().is_none());
        assert!(v.xi6.agrees_through(&theta00_over_eta_12(cap).unwrap(), QExp::int(2)).unwrap().is_none());
    }

    #[test]
    fn phase_needs_supported_order() {
        let th = JacobiForm::named(FormName::Theta, QExp::int(3)).unwrap();
        let r = restrict(&th, &ratio(1, 2), &ratio(1, 2)).unwrap();
        assert_eq!(r.phase, ratio(1, 8));
        assert!(matches!(r.value(), Err(Error::Unsupported(_))));
        assert!(restrict(&th, &rat(0), &ratio(1, 5)).is_err());
    }
}
