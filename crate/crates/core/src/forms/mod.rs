//! Named building blocks: theta series, eta, Eisenstein series, the
//! Weierstrass jets and the weak Jacobi generators.

mod jacobi;
mod modular;
mod theta;

pub use jacobi::{
    chi_12, chi_m4, dlog_theta, phi_0_1, phi_0_2, phi_0_3, phi_0_3half, phi_0_4, phi_m1_half,
    phi_m2_1, wp_jets, xi_0_6,
};
pub use modular::{delta, eisenstein, eta, eta_power, g2k};
pub use theta::{
    level2_thetas, theta_3half_product, theta_3half_quotient, theta_product, theta_sum, Level2Thetas,
};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rat::{rat, ratio, Rat};
use crate::series::{FourierSeries, QExp, YLaurent, YRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormName {
    Theta,
    Theta00,
    Theta01,
    Theta10,
    Eta,
    Delta,
    /// `G_{2k}`, carrying `k`.
    G2k(u32),
    /// Normalized Eisenstein series `E_w`, carrying the weight `w`.
    Ek(u32),
    /// `P_n`, carrying `n >= 2`.
    WpJet(u32),
    DlogTheta,
    PhiM1Half,
    PhiM2_1,
    Phi0_1,
    Phi0_3Half,
    Phi0_2,
    Phi0_3,
    Phi0_4,
    Xi0_6,
    Theta3Half,
}

impl FormName {
    /// Every fixed (parameter-free) name, plus a few representative parametrized ones.
    pub fn catalogue() -> Vec<FormName> {
        use FormName::*;
        vec![
            Theta, Theta00, Theta01, Theta10, Eta, Delta, G2k(1), G2k(2), G2k(3), Ek(4), Ek(6),
            WpJet(2), WpJet(3), DlogTheta, PhiM1Half, PhiM2_1, Phi0_1, Phi0_3Half, Phi0_2,
            Phi0_3, Phi0_4, Xi0_6, Theta3Half,
        ]
    }

    /// The weak Jacobi generators with their (weight, index).
    pub fn generators() -> Vec<FormName> {
        use FormName::*;
        vec![PhiM1Half, PhiM2_1, Phi0_1, Phi0_3Half, Phi0_2, Phi0_3, Phi0_4, Xi0_6, Theta, Theta3Half]
    }

    /// `(weight, index, eta character exponent mod 24)`.
    ///
    /// The level-two thetas carry a theta-group multiplier that is not a
    /// power of the eta character; they report character 0.
    pub fn tags(self) -> (Rat, Rat, i64) {
        use FormName::*;
        let half = ratio(1, 2);
        match self {
            Theta => (half.clone(), half, 3),
            Theta00 | Theta01 | Theta10 => (half.clone(), half, 0),
            Eta => (half, rat(0), 1),
            Delta => (rat(12), rat(0), 0),
            G2k(k) => (rat(2 * k as i64), rat(0), 0),
            Ek(w) => (rat(w as i64), rat(0), 0),
            WpJet(n) => (rat(n as i64), rat(0), 0),
            DlogTheta => (rat(1), rat(0), 0),
            PhiM1Half => (rat(-1), half, 0),
            PhiM2_1 => (rat(-2), rat(1), 0),
            Phi0_1 => (rat(0), rat(1), 0),
            Phi0_3Half => (rat(0), ratio(3, 2), 0),
            Phi0_2 => (rat(0), rat(2), 0),
            Phi0_3 => (rat(0), rat(3), 0),
            Phi0_4 => (rat(0), rat(4), 0),
            Xi0_6 => (rat(0), rat(6), 0),
            Theta3Half => (half, ratio(3, 2), 1),
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FormName::*;
        match self {
            Theta => f.write_str("theta"),
            Theta00 => f.write_str("theta00"),
            Theta01 => f.write_str("theta01"),
            Theta10 => f.write_str("theta10"),
            Eta => f.write_str("eta"),
            Delta => f.write_str("delta"),
            G2k(k) => write!(f, "G{}", 2 * k),
            Ek(w) => write!(f, "E{w}"),
            WpJet(n) => write!(f, "wp_jet_{n}"),
            DlogTheta => f.write_str("dlog_theta"),
            PhiM1Half => f.write_str("phi_m1_half"),
            PhiM2_1 => f.write_str("phi_m2_1"),
            Phi0_1 => f.write_str("phi_0_1"),
            Phi0_3Half => f.write_str("phi_0_3half"),
            Phi0_2 => f.write_str("phi_0_2"),
            Phi0_3 => f.write_str("phi_0_3"),
            Phi0_4 => f.write_str("phi_0_4"),
            Xi0_6 => f.write_str("xi_0_6"),
            Theta3Half => f.write_str("theta_3half"),
        }
    }
}

impl FromStr for FormName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use FormName::*;
        let bad = || Error::Precondition(format!("unknown form name {s:?}"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        Ok(match s {
            "theta" => Theta,
            "theta00" => Theta00,
            "theta01" => Theta01,
            "theta10" => Theta10,
            "eta" => Eta,
            "delta" => Delta,
            "dlog_theta" => DlogTheta,
            "phi_m1_half" => PhiM1Half,
            "phi_m2_1" => PhiM2_1,
            "phi_0_1" => Phi0_1,
            "phi_0_3half" => Phi0_3Half,
            "phi_0_2" => Phi0_2,
            "phi_0_3" => Phi0_3,
            "phi_0_4" => Phi0_4,
            "xi_0_6" => Xi0_6,
            "theta_3half" => Theta3Half,
            _ => {
                if let Some(n) = s.strip_prefix("wp_jet_") {
                    let n = num(n)?;
                    if n < 2 {
                        return Err(bad());
                    }
                    WpJet(n)
                } else if let Some(w) = s.strip_prefix('G') {
                    let w = num(w)?;
                    if w < 2 || w % 2 == 1 {
                        return Err(bad());
                    }
                    G2k(w / 2)
                } else if let Some(w) = s.strip_prefix('E') {
                    let w = num(w)?;
                    if w < 2 || w % 2 == 1 {
                        return Err(bad());
                    }
                    Ek(w)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// Expansion carried by a named form.
#[derive(Clone, Debug, PartialEq)]
pub enum FormSeries {
    Laurent(FourierSeries<YLaurent>),
    Rational(FourierSeries<YRational>),
}

impl FormSeries {
    pub fn cap(&self) -> QExp {
        match self {
            FormSeries::Laurent(s) => s.cap(),
            FormSeries::Rational(s) => s.cap(),
        }
    }

    pub fn as_laurent(&self) -> Option<&FourierSeries<YLaurent>> {
        match self {
            FormSeries::Laurent(s) => Some(s),
            FormSeries::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> FourierSeries<YRational> {
        match self {
            FormSeries::Laurent(s) => s.to_rational(),
            FormSeries::Rational(s) => s.clone(),
        }
    }
}

/// A named expansion with its weight, index and eta-character bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedForm {
    pub name: FormName,
    pub weight: Rat,
    pub index: Rat,
    pub eta_character: i64,
    pub series: FormSeries,
}

type Memo = Mutex<HashMap<(FormName, QExp), Arc<NamedForm>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn compute(name: FormName, cap: QExp) -> Result<FormSeries> {
    use FormName::*;
    let scalar = |s: FourierSeries<Rat>| FormSeries::Laurent(FourierSeries::from_scalar(&s));
    Ok(match name {
        Theta => FormSeries::Laurent(theta_sum(cap)),
        Theta00 => FormSeries::Laurent(level2_thetas(cap)?.theta00),
        Theta01 => FormSeries::Laurent(level2_thetas(cap)?.theta01),
        Theta10 => FormSeries::Laurent(level2_thetas(cap)?.theta10),
        Eta => scalar(eta(cap)),
        Delta => scalar(delta(cap)?),
        G2k(k) => scalar(g2k(k, cap)?),
        Ek(w) => scalar(eisenstein(w, cap)?),
        WpJet(n) => FormSeries::Rational(wp_jets(n, cap)?.pop().expect("n >= 2")),
        DlogTheta => FormSeries::Rational(dlog_theta(cap)?),
        PhiM1Half => FormSeries::Laurent(phi_m1_half(cap)?),
        PhiM2_1 => FormSeries::Laurent(phi_m2_1(cap)?),
        Phi0_1 => FormSeries::Laurent(phi_0_1(cap)?),
        Phi0_3Half => FormSeries::Laurent(phi_0_3half(cap)?),
        Phi0_2 => FormSeries::Laurent(phi_0_2(cap)?),
        Phi0_3 => FormSeries::Laurent(phi_0_3(cap)?),
        Phi0_4 => FormSeries::Laurent(phi_0_4(cap)?),
        Xi0_6 => FormSeries::Laurent(xi_0_6(cap)?),
        Theta3Half => FormSeries::Laurent(theta_3half_product(cap)),
    })
}

/// The named expansion through `cap`, memoized per `(name, cap)`.
pub fn standard_form(name: FormName, cap: QExp) -> Result<Arc<NamedForm>> {
    if let Some(f) = memo().lock().expect("memo poisoned").get(&(name, cap)) {
        return Ok(Arc::clone(f));
    }
    let series = compute(name, cap)?;
    let (weight, index, eta_character) = name.tags();
    let form = Arc::new(NamedForm { name, weight, index, eta_character, series });
    memo().lock().expect("memo poisoned").insert((name, cap), Arc::clone(&form));
    Ok(form)
}

/// Shorthand for the Laurent-coefficient series of a named form.
pub fn laurent(name: FormName, cap: QExp) -> Result<FourierSeries<YLaurent>> {
    standard_form(name, cap)?
        .series
        .as_laurent()
        .cloned()
        .ok_or_else(|| Error::Unsupported(format!("{name} has rational coefficients")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in FormName::catalogue() {
            assert_eq!(n.to_string().parse::<FormName>().unwrap(), n);
        }
        assert!("G3".parse::<FormName>().is_err());
        assert!("wp_jet_1".parse::<FormName>().is_err());
        assert!("nope".parse::<FormName>().is_err());
    }

    #[test]
    fn memo_returns_same_value() {
        let a = standard_form(FormName::Phi0_4, QExp::int(2)).unwrap();
        let b = standard_form(FormName::Phi0_4, QExp::int(2)).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.index, rat(4));
    }
}
