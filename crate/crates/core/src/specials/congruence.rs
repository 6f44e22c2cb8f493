use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::restrict;
use crate::error::Result;
use crate::genus::{elliptic_genus, ManifoldData};
use crate::rat::{big, ratio, residue, Rat};
use crate::ring::{q0_basis, JacobiForm};
use crate::series::{FourierSeries, QExp};

/// One coefficient reduced modulo the modulus claimed for it.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueCheck {
    pub at: QExp,
    pub value: Rat,
    pub modulus: BigInt,
    /// `None` when the value is not an integer.
    pub residue: Option<BigInt>,
}

impl ResidueCheck {
    fn new(at: QExp, value: Rat, modulus: BigInt) -> Self {
        let residue = residue(&value, &modulus);
        ResidueCheck { at, value, modulus, residue }
    }

    pub fn passed(&self) -> bool {
        self.residue.as_ref().is_some_and(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceReport {
    pub claim: String,
    /// Modulus for the coefficients of positive `q`-order.
    pub modulus: BigInt,
    pub checks: Vec<ResidueCheck>,
    pub passed: bool,
}

impl CongruenceReport {
    fn new(claim: &str, modulus: BigInt, checks: Vec<ResidueCheck>) -> Self {
        let passed = checks.iter().all(ResidueCheck::passed);
        CongruenceReport { claim: claim.into(), modulus, checks, passed }
    }
}

/// Moduli `(constant term, higher terms)` of the value at `z = mu` of a
/// weight-zero form of integral index `m`, when a pattern is claimed.
pub fn value_pattern(m: u32, mu: &Rat) -> Option<(i64, i64)> {
    let (n, d) = (mu.numer().to_i64()?, mu.denom().to_i64()?);
    match (n, d, m % 4, m % 3) {
        (1, 2, 0, _) => Some((1, 1 << 13)),
        (1, 2, 1, _) => Some((8, 1 << 8)),
        (1, 2, 2, _) => Some((2, 1 << 12)),
        (1, 2, 3, _) => Some((16, 1 << 9)),
        (1, 3, _, 0) => Some((1, 729)),
        (1, 3, _, 1) => Some((9, 81)),
        (1, 3, _, 2) => Some((3, 27)),
        (1, 4, 2, _) => Some((4, 1 << 5)),
        (1, 4, 3, _) => Some((2, 1 << 8)),
        _ => None,
    }
}

fn pattern_report(claim: &str, s: &FourierSeries<Rat>, const_mod: i64, higher_mod: i64) -> CongruenceReport {
    let mut checks = vec![ResidueCheck::new(QExp::ZERO, s.coeff(QExp::ZERO).unwrap_or_else(|_| Rat::zero()), big(const_mod))];
    let mut n = 1;
    while QExp::int(n) <= s.cap() {
        let e = QExp::int(n);
        checks.push(ResidueCheck::new(e, s.get(e).cloned().unwrap_or_else(Rat::zero), big(higher_mod)));
        n += 1;
    }
    for (e, c) in s.terms() {
        if !e.is_integer() {
            checks.push(ResidueCheck::new(e, c.clone(), big(higher_mod)));
        }
    }
    CongruenceReport::new(claim, big(higher_mod), checks)
}

fn value(a: &JacobiForm, mu: &Rat) -> Result<FourierSeries<Rat>> {
    restrict(a, &Rat::zero(), mu)?.rational()
}

/// The claimed value patterns at `z = mu` for every normal-form basis form
/// of index `m <= m_max`.
pub fn value_pattern_checks(m_max: u32, mu: &Rat, cap: QExp) -> Result<Vec<CongruenceReport>> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let Some((c, h)) = value_pattern(m, mu) else { continue };
        let basis = q0_basis(m, cap)?;
        for (n, f) in basis.forms.iter().enumerate() {
            let claim = format!("psi_{m}^({}) at z = {mu}", n + 1);
            out.push(pattern_report(&claim, &value(f, mu)?, c, h));
        }
    }
    Ok(out)
}

/// Divisibility of the Euler number and of the values of the elliptic genus
/// at `z = 1/2, 1/3, 1/4`, for the claims that apply to the dimension.
pub fn congruence_report(m: &ManifoldData, cap: QExp) -> Result<Vec<CongruenceReport>> {
    let eg = elliptic_genus(m, cap)?;
    let d = m.d;
    let e = eg.euler_value().coeff(QExp::ZERO)?;
    let mut out = vec![CongruenceReport::new(
        "euler-d-times-e-mod-24",
        big(24),
        vec![ResidueCheck::new(QExp::ZERO, &e * Rat::from_integer(d.into()), big(24))],
    )];
    if d % 8 == 2 {
        out.push(CongruenceReport::new("euler-mod-8", big(8), vec![ResidueCheck::new(QExp::ZERO, e.clone(), big(8))]));
        out.push(pattern_report("signature-2adic", &value(&eg.core, &ratio(1, 2))?, 16, 1 << 9));
    }
    if d.is_multiple_of(2) {
        if let Some((c, h)) = value_pattern(d / 2, &ratio(1, 3)) {
            out.push(pattern_report("chi-y-zeta3", &value(&eg.core, &ratio(1, 3))?, c, h));
        }
    }
    if d % 8 == 2 {
        out.push(pattern_report("chi-y-i", &value(&eg.core, &ratio(1, 4))?, 4, 1 << 4));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_and_quintic() {
        let k3 = congruence_report(&ManifoldData::new(2, vec![2, -20, 2]).unwrap(), QExp::int(6)).unwrap();
        let ids: Vec<_> = k3.iter().map(|r| r.claim.as_str()).collect();
        assert_eq!(ids, ["euler-d-times-e-mod-24", "euler-mod-8", "signature-2adic", "chi-y-zeta3", "chi-y-i"]);
        for r in &k3 {
            assert!(r.passed, "{r:?}");
        }
        let q = congruence_report(&ManifoldData::new(3, vec![0, 100, -100, 0]).unwrap(), QExp::int(4)).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].checks[0].value, Rat::from_integer((-600).into()));
        assert!(q[0].passed);
    }

    #[test]
    fn zero_data() {
        let r = congruence_report(&ManifoldData::new(2, vec![0, 0, 0]).unwrap(), QExp::int(3)).unwrap();
        assert!(r.iter().all(|c| c.passed && c.checks.iter().all(|x| x.residue == Some(BigInt::zero()))));
    }

    #[test]
    fn patterns_low_index() {
        for mu in [ratio(1, 2), ratio(1, 3)] {
            for r in value_pattern_checks(8, &mu, QExp::int(4)).unwrap() {
                assert!(r.passed, "{}", r.claim);
            }
        }
        let quarter = value_pattern_checks(8, &ratio(1, 4), QExp::int(4)).unwrap();
        assert!(quarter.iter().filter(|r| r.claim.starts_with("psi_2") || r.claim.starts_with("psi_6")).all(|r| r.passed));
        let bad = quarter.iter().find(|r| r.claim == "psi_3^(1) at z = 1/4").unwrap();
        assert!(!bad.passed);
        assert_eq!(bad.checks[1].value, Rat::from_integer(8.into()));
    }
}
