//! Named identity checks between independently computed expansions.
//!
//! Each function builds both sides from separate constructions and reports
//! the first disagreement.

use crate::check::{compare, CheckOutcome};
use crate::error::Result;
use crate::forms::{
    g2k, laurent, level2_thetas, theta_3half_product, theta_3half_quotient, theta_product, theta_sum, wp_jets,
    FormName,
};
use crate::rat::rat;
use crate::ring::{elliptic_check, jet_cocycle, normal_form, q0_basis, JacobiForm};
use crate::series::{inv_factorial, jet_substitute, FourierSeries, QExp, UJet, YLaurent, YRational};

fn named(name: FormName, cap: QExp) -> Result<FourierSeries<YLaurent>> {
    laurent(name, cap)
}

/// Sum and product expansions of `theta` agree.
pub fn theta_sum_product(cap: QExp) -> Result<CheckOutcome> {
    compare("theta sum = theta product", &theta_sum(cap), &theta_product(cap), cap)
}

/// `theta / eta^3` at `y = e^w` equals `w exp(-sum 2 G_2k w^2k / (2k)!)`
/// coefficientwise through `w^order`.
pub fn sigma_identity(order: usize, cap: QExp) -> Result<CheckOutcome> {
    let id = "phi_m1_half(e^w) = w exp(-sum 2 G_2k w^2k/(2k)!)";
    let lhs = jet_substitute(&named(FormName::PhiM1Half, cap)?, order);
    let mut expo = vec![FourierSeries::zero(cap); order + 1];
    let mut k = 1;
    while 2 * k <= order {
        expo[2 * k] = g2k(k as u32, cap)?.scale(&(rat(-2) * inv_factorial(2 * k as u32)));
        k += 1;
    }
    let e = UJet::new(expo).exp()?;
    for j in 0..=order {
        let rhs = if j == 0 { FourierSeries::zero(cap) } else { e.coeff(j - 1).clone() };
        let c = compare(id, lhs.coeff(j), &rhs, cap)?;
        if !c.passed() {
            return Ok(CheckOutcome::fail(id, cap, format!("w^{j}: {}", c.witness.unwrap_or_default())));
        }
    }
    Ok(CheckOutcome::pass(id, cap))
}

/// The jet of `theta` equals `theta exp(-sum P_n u^n / n!)` through `u^order`.
pub fn theta_jet_identity(order: usize, cap: QExp) -> Result<CheckOutcome> {
    let id = "jet(theta) = theta exp(-sum P_n u^n/n!)";
    let th = JacobiForm::named(FormName::Theta, cap + QExp::int(1))?;
    let lhs = jet_cocycle(&th, order)?;
    let wp = wp_jets(order.max(2) as u32, cap + QExp::int(1))?;
    let mut expo: Vec<FourierSeries<YRational>> = vec![FourierSeries::zero(cap + QExp::int(1)); order + 1];
    for n in 2..=order {
        expo[n] = wp[n - 2].scale(&-inv_factorial(n as u32));
    }
    let rhs = UJet::new(expo).exp()?.mul_series(&th.series.to_rational());
    for j in 0..=order {
        let c = compare(id, lhs.coeff(j), rhs.coeff(j), cap)?;
        if !c.passed() {
            return Ok(CheckOutcome::fail(id, cap, format!("u^{j}: {}", c.witness.unwrap_or_default())));
        }
    }
    Ok(CheckOutcome::pass(id, cap))
}

/// `4 phi_0_4 = phi_0_1 phi_0_3 - phi_0_2^2`.
pub fn torsion_relation(cap: QExp) -> Result<CheckOutcome> {
    let [p1, p2, p3, p4] = phis(cap)?;
    compare("4 phi_0_4 = phi_0_1 phi_0_3 - phi_0_2^2", &p4.scale(&rat(4)), &p1.mul(&p3).sub(&p2.pow(2)), cap)
}

fn phis(cap: QExp) -> Result<[FourierSeries<YLaurent>; 4]> {
    Ok([
        named(FormName::Phi0_1, cap)?,
        named(FormName::Phi0_2, cap)?,
        named(FormName::Phi0_3, cap)?,
        named(FormName::Phi0_4, cap)?,
    ])
}

/// `xi_0_6 = -phi1^2 phi4 + 9 phi1 phi2 phi3 - 8 phi2^3 - 27 phi3^2`.
pub fn xi_in_generators(cap: QExp) -> Result<CheckOutcome> {
    let [p1, p2, p3, p4] = phis(cap)?;
    let rhs = p1
        .pow(2)
        .mul(&p4)
        .neg()
        .add(&p1.mul(&p2).mul(&p3).scale(&rat(9)))
        .sub(&p2.pow(3).scale(&rat(8)))
        .sub(&p3.pow(2).scale(&rat(27)));
    compare("xi_0_6 = -phi1^2 phi4 + 9 phi1 phi2 phi3 - 8 phi2^3 - 27 phi3^2", &named(FormName::Xi0_6, cap)?, &rhs, cap)
}

/// The product form of `theta_3half` equals `eta theta(2z) / theta(z)`.
pub fn quintuple_product(cap: QExp) -> Result<CheckOutcome> {
    compare("theta_3half product = eta theta(2z)/theta(z)", &theta_3half_product(cap), &theta_3half_quotient(cap)?, cap)
}

/// The three level-two theta expressions for `phi_0_1`, `phi_0_3half`, `phi_0_2`.
pub fn level2_identities(cap: QExp) -> Result<Vec<CheckOutcome>> {
    let t = level2_thetas(cap + QExp::int(1))?;
    let (a, b, c) = (&t.xi00, &t.xi10, &t.xi01);
    let sq = |x: &FourierSeries<YLaurent>| x.pow(2);
    let phi1 = sq(a).add(&sq(b)).add(&sq(c)).scale(&rat(4));
    let half = a.mul(b).mul(c).scale(&rat(4));
    let phi2 = sq(&a.mul(b)).add(&sq(&a.mul(c))).add(&sq(&b.mul(c))).scale(&rat(2));
    Ok(vec![
        compare("phi_0_1 = 4(xi00^2 + xi10^2 + xi01^2)", &named(FormName::Phi0_1, cap)?, &phi1, cap)?,
        compare("phi_0_3half = 4 xi00 xi10 xi01", &named(FormName::Phi0_3Half, cap)?, &half, cap)?,
        compare("phi_0_2 = 2 sum (xi xi')^2", &named(FormName::Phi0_2, cap)?, &phi2, cap)?,
    ])
}

/// `phi_0_3half = 2 xi00 xi10 xi01`, the coefficient forced by the `q^0` terms.
pub fn level2_half_corrected(cap: QExp) -> Result<CheckOutcome> {
    let t = level2_thetas(cap + QExp::int(1))?;
    let rhs = t.xi00.mul(&t.xi10).mul(&t.xi01).scale(&rat(2));
    compare("phi_0_3half = 2 xi00 xi10 xi01", &named(FormName::Phi0_3Half, cap)?, &rhs, cap)
}

/// The elliptic law for every named generator at its declared index.
pub fn elliptic_suite() -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for name in FormName::generators() {
        let (_, index, _) = name.tags();
        let cap = QExp::from_rat(&(index * rat(2) + rat(3)))?;
        let a = JacobiForm::named(name, cap)?;
        let r = elliptic_check(&a)?;
        let id = format!("elliptic law for {name}");
        out.push(match r.witness {
            None => CheckOutcome::pass(&id, cap),
            Some(w) => CheckOutcome::fail(
                &id,
                cap,
                format!("f{:?} = {} but the law gives {} from {:?}", w.left_at, w.left, w.right, w.right_at),
            ),
        });
    }
    Ok(out)
}

/// `q^0` and `q^1` terms of a form against an expected pair.
pub fn low_terms(name: FormName, q0: &YLaurent, q1: &YLaurent) -> Result<CheckOutcome> {
    let cap = QExp::int(1);
    let s = named(name, cap)?;
    let expect = FourierSeries::from_terms([(QExp::ZERO, q0.clone()), (QExp::int(1), q1.clone())], cap);
    compare(&format!("{name} q^0, q^1 terms"), &s, &expect, cap)
}

/// Symmetric Laurent polynomial from its coefficients at `y^k, ..., y^0`.
pub fn symmetric(top_down: &[i64]) -> YLaurent {
    let k = top_down.len() as i64 - 1;
    let mut terms = Vec::new();
    for (i, c) in top_down.iter().enumerate() {
        let e = k - i as i64;
        terms.push((2 * e, rat(*c)));
        if e != 0 {
            terms.push((-2 * e, rat(*c)));
        }
    }
    YLaurent::from_terms(terms)
}

/// The displayed `q^0`, `q^1` terms of `phi_0_1`, `phi_0_2`, `phi_0_3`, `phi_0_4`.
pub fn displayed_low_terms() -> Result<Vec<CheckOutcome>> {
    Ok(vec![
        low_terms(FormName::Phi0_1, &symmetric(&[1, 10]), &symmetric(&[10, -88, -132]))?,
        low_terms(FormName::Phi0_2, &symmetric(&[1, 4]), &symmetric(&[1, -8, -1, 16]))?,
        low_terms(FormName::Phi0_3, &symmetric(&[1, 2]), &symmetric(&[-2, -2, 2, 4]))?,
        low_terms(FormName::Phi0_4, &symmetric(&[1, 1]), &symmetric(&[-1, -1, 0, 1, 2]))?,
    ])
}

/// The normal-form `q^0` terms of the basis forms of every index up to `m_max`.
pub fn normal_forms(m_max: u32) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let b = q0_basis(m, QExp::ZERO)?;
        for (n, f) in b.forms.iter().enumerate() {
            let id = format!("q^0 of psi_{m}^({})", n + 1);
            let want = normal_form(m, n as u32 + 1);
            let got = f.q0()?;
            out.push(if got == want {
                CheckOutcome::pass(&id, QExp::ZERO)
            } else {
                CheckOutcome::fail(&id, QExp::ZERO, format!("{got} vs {want}"))
            });
        }
    }
    Ok(out)
}

/// `q^0` terms of `phi_0_6`, `phi_0_8`, `phi_0_12` built from the generators.
pub fn exceptional_forms() -> Result<Vec<CheckOutcome>> {
    let cap = QExp::ZERO;
    let [_, p2, p3, p4] = phis(cap)?;
    let p6 = p2.mul(&p4).sub(&p3.pow(2));
    let p8 = p2.mul(&p6).sub(&p4.pow(2));
    let p12 = p4.mul(&p8).sub(&p6.pow(2).scale(&rat(2)));
    let q0 = |c: &[(i64, i64)]| FourierSeries::constant(YLaurent::from_ints(c), cap);
    Ok(vec![
        compare("phi_0_6 = phi2 phi4 - phi3^2", &p6, &q0(&[(1, 1), (-1, 1)]), cap)?,
        compare("phi_0_8 = phi2 phi6 - phi4^2", &p8, &q0(&[(1, 2), (0, -1), (-1, 2)]), cap)?,
        compare("phi_0_12 = phi4 phi8 - 2 phi6^2", &p12, &q0(&[(1, 1), (0, -1), (-1, 1)]), cap)?,
    ])
}
