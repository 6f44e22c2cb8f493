use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{decompose_core, index_half, CharData, GenusResult, SymMonomial, Symbol};
use crate::error::{Error, Result};
use crate::forms::{eta_power, g2k, laurent, wp_jets, FormName};
use crate::rat::{factorial, rat, Rat};
use crate::ring::JacobiForm;
use crate::series::{FourierSeries, QExp, YLaurent, YRational};

/// Overall sign of the split formula, fixed by the K3 tangent-bundle value `+2 phi_0_1`.
pub const MWG_SIGN: i64 = 1;

/// All symbol monomials of total degree `d`; bundle symbols only when `with_bundle`.
pub fn degree_monomials(d: u32, with_bundle: bool) -> Vec<SymMonomial> {
    let mut alphabet = Vec::new();
    for n in 2..=d {
        if n >= 4 && n % 2 == 0 {
            alphabet.push(Symbol::B(n));
        }
        if with_bundle {
            alphabet.push(Symbol::S(n));
        }
    }
    let mut out = Vec::new();
    fn rec(alpha: &[Symbol], left: u32, acc: &mut Vec<Symbol>, out: &mut Vec<SymMonomial>) {
        if left == 0 {
            out.push(SymMonomial::new(acc.clone()));
            return;
        }
        for (i, s) in alpha.iter().enumerate() {
            if s.degree() <= left {
                acc.push(*s);
                rec(&alpha[i..], left - s.degree(), acc, out);
                acc.pop();
            }
        }
    }
    rec(&alphabet, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn lift(s: &FourierSeries<Rat>) -> FourierSeries<YRational> {
    s.map_coeffs(|c| YRational::from_laurent(YLaurent::constant(c.clone())))
}

/// Multiplicities of each symbol in a monomial.
fn multiplicities(m: &SymMonomial) -> BTreeMap<Symbol, u32> {
    let mut out = BTreeMap::new();
    for s in m.symbols() {
        *out.entry(*s).or_insert(0) += 1;
    }
    out
}

struct Factors {
    cap: QExp,
    wp: Vec<FourierSeries<YRational>>,
    powers: HashMap<(Symbol, u32), FourierSeries<YRational>>,
}

impl Factors {
    fn new(d: u32, cap: QExp) -> Result<Self> {
        let wp = if d >= 2 { wp_jets(d, cap)? } else { Vec::new() };
        Ok(Factors { cap, wp, powers: HashMap::new() })
    }

    /// `c_s^e / e!` with `c_{S_n} = -P_n / n!` and `c_{B_2k} = 2 G_2k / (2k)!`.
    fn term(&mut self, s: Symbol, e: u32) -> Result<FourierSeries<YRational>> {
        if let Some(v) = self.powers.get(&(s, e)) {
            return Ok(v.clone());
        }
        let base = match s {
            Symbol::S(n) => self.wp[n as usize - 2].scale(&-Rat::new(1.into(), factorial(n))),
            Symbol::B(n) => lift(&g2k(n / 2, self.cap)?).scale(&Rat::new(2.into(), factorial(n))),
        };
        let v = base.pow(e).scale(&Rat::new(1.into(), factorial(e)));
        self.powers.insert((s, e), v.clone());
        Ok(v)
    }
}

/// `< P(E) W(M) >_d` as a series with rational-function coefficients in `y`.
fn paired_bracket(c: &CharData, cap: QExp, with_bundle: bool) -> Result<FourierSeries<YRational>> {
    let mut f = Factors::new(c.d, cap)?;
    let mut acc = FourierSeries::zero(cap);
    for m in degree_monomials(c.d, with_bundle) {
        let value = if m.has_bundle_symbols() && c.r == 0 {
            c.pairing.get(&m).cloned().unwrap_or_else(Rat::zero)
        } else {
            c.value(&m)?
        };
        if value.is_zero() {
            continue;
        }
        let mut t = FourierSeries::one(cap);
        for (s, e) in multiplicities(&m) {
            t = t.mul(&f.term(s, e)?);
        }
        acc = acc.add(&t.scale(&value));
    }
    Ok(acc)
}

/// The modified Witten genus of a bundle of rank `r` over a `d`-manifold,
/// as the weight-zero form `phi_m1_half^d * < P(E) W(M) >_d` of index `d/2`.
pub fn mwg(c: &CharData, cap: QExp) -> Result<GenusResult> {
    let bracket = paired_bracket(c, cap, true)?;
    let pre = laurent(FormName::PhiM1Half, cap)?.pow(c.d).to_rational();
    let series = bracket.mul(&pre).scale(&rat(MWG_SIGN)).to_laurent().map_err(|e| {
        Error::CheckFailed(format!("poles do not cancel, the characteristic numbers are inconsistent ({e})"))
    })?;
    let core = JacobiForm::new(Rat::zero(), index_half(c.d), 0, series)?;
    let decomposition = decompose_core(&core);
    let mut warnings = Vec::new();
    if !core.is_integral() {
        warnings.push("genus has non-integral coefficients".into());
    }
    Ok(GenusResult { core, prefactor_exponent: c.r as i64 - c.d as i64, decomposition, warnings })
}

/// `eta^(-2d) < W(M) >_d` for tangent data alone.
pub fn witten_rank0(c: &CharData, cap: QExp) -> Result<FourierSeries<Rat>> {
    if c.r != 0 || c.pairing.keys().any(|m| m.has_bundle_symbols()) {
        return Err(Error::Precondition("the rank-zero Witten genus takes B-symbols only".into()));
    }
    let pad = cap + QExp::from_units(2 * c.d as i64);
    let bracket = paired_bracket(c, pad, false)?;
    let scalar = bracket
        .to_laurent()?
        .to_scalar()
        .ok_or_else(|| Error::CheckFailed("Witten bracket depends on z".into()))?;
    scalar.mul(&eta_power(-2 * c.d as i64, pad)?).truncate(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::{elliptic_genus, ManifoldData};
    use crate::rat::ratio;

    #[test]
    fn monomial_enumeration() {
        let ms: Vec<String> = degree_monomials(4, true).iter().map(|m| m.to_string()).collect();
        assert_eq!(ms, vec!["B4", "S2*S2", "S4"]);
        assert_eq!(degree_monomials(0, true), vec![SymMonomial::default()]);
        assert!(degree_monomials(2, false).is_empty());
    }

    #[test]
    fn k3_tangent_data() {
        let c = CharData::from_pairs(2, 2, [("S2", rat(-48))]).unwrap();
        let r = mwg(&c, QExp::int(4)).unwrap();
        let eg = elliptic_genus(&ManifoldData::new(2, vec![2, -20, 2]).unwrap(), QExp::int(4)).unwrap();
        assert_eq!(r.core, eg.core);
        assert_eq!(r.prefactor_exponent, 0);
    }

    #[test]
    fn point() {
        let c = CharData::new(0, 0, BTreeMap::new()).unwrap();
        assert_eq!(mwg(&c, QExp::int(2)).unwrap().core, JacobiForm::one(QExp::int(2)));
        assert_eq!(witten_rank0(&c, QExp::int(2)).unwrap(), FourierSeries::one(QExp::int(2)));
    }

    #[test]
    fn missing_value() {
        let c = CharData::from_pairs(4, 2, [("S4", rat(1))]).unwrap();
        assert!(matches!(mwg(&c, QExp::int(2)), Err(Error::Missing(_))));
    }

    #[test]
    fn rank_five_surface() {
        let c = CharData::from_pairs(2, 5, [("S2", rat(24))]).unwrap();
        let r = mwg(&c, QExp::int(3)).unwrap();
        let phi = JacobiForm::named(FormName::Phi0_1, QExp::int(3)).unwrap();
        assert_eq!(r.core, phi.scale(&rat(-1)));
        assert_eq!(r.prefactor_exponent, 3);
        let raw = r.raw().unwrap();
        assert!(raw.valuation().unwrap() == QExp::new(1, 4).unwrap());
    }

    #[test]
    fn witten_degree_four() {
        let c = CharData::from_pairs(4, 0, [("B4", rat(5))]).unwrap();
        let w = witten_rank0(&c, QExp::int(3)).unwrap();
        let expect = g2k(2, QExp::int(4)).unwrap().scale(&ratio(10, 24)).mul(&eta_power(-8, QExp::int(4)).unwrap());
        assert!(w.agrees_through(&expect, QExp::int(3)).unwrap().is_none());
        let m = mwg(&c, QExp::int(3)).unwrap();
        let scalar = m.core.series.to_rational().mul(&laurent(FormName::PhiM1Half, QExp::int(4)).unwrap().to_rational().pow_int(-4).unwrap());
        assert!(scalar.to_laurent().unwrap().to_scalar().is_some());
    }

    #[test]
    fn quintic_matches_elliptic_genus() {
        let c = CharData::from_pairs(3, 3, [("S3", rat(-600))]).unwrap();
        let r = mwg(&c, QExp::int(3)).unwrap();
        let eg = elliptic_genus(&ManifoldData::new(3, vec![0, 100, -100, 0]).unwrap(), QExp::int(3)).unwrap();
        assert_eq!(r.core, eg.core);
        assert_eq!(r.decomposition.unwrap().to_string(), "-100*phi_0_3half");
    }

    #[test]
    fn k3_squared_tangent_data() {
        let c = CharData::from_pairs(4, 4, [("S2*S2", rat(4608)), ("S4", rat(0)), ("B4", rat(0))]).unwrap();
        let r = mwg(&c, QExp::int(3)).unwrap();
        assert_eq!(r.decomposition.unwrap().to_string(), "4*phi_0_1^2");
    }
}
