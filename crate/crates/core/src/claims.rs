//! Checks of stated values: torsion-point values, genera of sample
//! manifolds, congruences, and the coefficients of the lifts.

use crate::check::{compare, CheckOutcome};
use crate::error::Result;
use crate::forms::{eta_power, theta_sum, FormName};
use crate::genus::{elliptic_genus, mwg, CharData, ManifoldData};
use crate::lift::{delta2_expand, sqeg_expand, sqeg_product_oracle};
use crate::rat::{big, fmt_rat, rat, ratio, residue, Rat};
use crate::ring::{decompose_weight0, elliptic_check, q0_basis, solve_by_q0, JacobiForm, Q0Solution};
use crate::specials::{abg_functions, ahat_values, congruence_report, theta00_over_eta_12, value_at, CongruenceReport};
use crate::series::{FourierSeries, QExp, YLaurent};

fn expect(id: &str, through: QExp, ok: bool, witness: impl FnOnce() -> String) -> CheckOutcome {
    if ok {
        CheckOutcome::pass(id, through)
    } else {
        CheckOutcome::fail(id, through, witness())
    }
}

fn text_eq(id: &str, got: String, want: &str) -> CheckOutcome {
    let ok = got == want;
    expect(id, QExp::ZERO, ok, || format!("{got} vs {want}"))
}

/// `K3` surface: `chi_0 = 2`, `chi_1 = -20`, `chi_2 = 2`.
pub fn k3() -> ManifoldData {
    ManifoldData::new(2, vec![2, -20, 2]).expect("valid K3 data")
}

/// The quintic threefold: `h^{1,1} = 1`, `h^{2,1} = 101`.
pub fn quintic() -> ManifoldData {
    ManifoldData::new(3, vec![0, 100, -100, 0]).expect("valid quintic data")
}

/// The exact decomposition of `xi_0_6`, `psi_2^(2) = phi_0_1^2 - 24 phi_0_2`,
/// and the Jacobi-Eisenstein solves of weight 4 and 6.
pub fn ring_structure() -> Result<Vec<CheckOutcome>> {
    let cap = QExp::int(3);
    let xi = JacobiForm::named(FormName::Xi0_6, cap)?;
    let want = "-phi_0_1^2*phi_0_4 + 9*phi_0_1*phi_0_2*phi_0_3 - 8*phi_0_2^3 - 27*phi_0_3^2";
    let mut out = vec![
        text_eq("decompose xi_0_6", decompose_weight0(&xi)?.to_string(), want),
        text_eq("psi_2^(2) = phi_0_1^2 - 24 phi_0_2", q0_basis(2, QExp::ZERO)?.polys[1].to_string(), "phi_0_1^2 - 24*phi_0_2"),
    ];
    let e41 = solve_by_q0(4, 1, &YLaurent::one(), QExp::int(2))?;
    let c1 = e41.form().series.coeff(QExp::int(1))?;
    let want = YLaurent::from_ints(&[(2, 1), (1, 56), (0, 126), (-1, 56), (-2, 1)]);
    out.push(expect("E_4_1 q^1 = y^2 + 56y + 126 + 56y^-1 + y^-2", QExp::int(1), c1 == want, || c1.to_string()));
    let fam = solve_by_q0(6, 3, &YLaurent::one(), QExp::int(2))?;
    let kernel = match &fam {
        Q0Solution::Family { kernel, .. } => kernel.iter().map(|(p, _)| p.to_string()).collect::<Vec<_>>().join(", "),
        Q0Solution::Unique { .. } => String::new(),
    };
    out.push(text_eq("E_6_3 family kernel", kernel, "delta*phi_m2_1^3"));
    Ok(out)
}

fn constant(id: &str, s: &FourierSeries<Rat>, c: i64) -> Result<CheckOutcome> {
    compare(id, s, &FourierSeries::constant(rat(c), s.cap()), s.cap())
}

/// Constant values at `z = 0, 1/2, 1/3, 1/4` and the closed forms in
/// `alpha`, `beta`, `gamma`.
pub fn torsion_values(cap: QExp) -> Result<Vec<CheckOutcome>> {
    let gens = [FormName::Phi0_1, FormName::Phi0_2, FormName::Phi0_3, FormName::Phi0_4];
    let mut out = Vec::new();
    for (name, v) in gens.iter().zip([12, 6, 4, 3]) {
        out.push(constant(&format!("{name}(0) = {v}"), &value_at(*name, &rat(0), cap)?, v)?);
    }
    let fixed = [
        (FormName::Phi0_2, ratio(1, 2), 2),
        (FormName::Phi0_3, ratio(1, 2), 0),
        (FormName::Phi0_4, ratio(1, 2), -1),
        (FormName::Phi0_3, ratio(1, 3), 1),
        (FormName::Phi0_4, ratio(1, 3), 0),
        (FormName::Phi0_4, ratio(1, 4), 1),
    ];
    for (name, mu, v) in fixed {
        out.push(constant(&format!("{name}({}) = {v}", fmt_rat(&mu)), &value_at(name, &mu, cap)?, v)?);
    }
    let abg = abg_functions(cap)?;
    out.push(compare("phi_0_1(1/3) = beta^2", &value_at(FormName::Phi0_1, &ratio(1, 3), cap)?, &abg.beta.pow(2), cap)?);
    out.push(compare("phi_0_2(1/4) = 4 gamma^2", &value_at(FormName::Phi0_2, &ratio(1, 4), cap)?, &abg.gamma.pow(2).scale(&rat(4)), cap)?);
    out.push(compare("phi_0_3(1/4) = 2 gamma", &value_at(FormName::Phi0_3, &ratio(1, 4), cap)?, &abg.gamma.scale(&rat(2)), cap)?);
    Ok(out)
}

/// `phi_0_1(1/4) gamma = gamma^4 + 4`, as displayed.
pub fn phi01_quarter_literal(cap: QExp) -> Result<CheckOutcome> {
    let abg = abg_functions(cap)?;
    let lhs = value_at(FormName::Phi0_1, &ratio(1, 4), cap)?.mul(&abg.gamma);
    let rhs = abg.gamma.pow(4).add(&FourierSeries::constant(rat(4), cap));
    compare("phi_0_1(1/4) = (gamma^4 + 4)/gamma", &lhs, &rhs, cap)
}

/// `phi_0_1(1/4) gamma = 2(4 gamma^4 + 1)`.
pub fn phi01_quarter_corrected(cap: QExp) -> Result<CheckOutcome> {
    let abg = abg_functions(cap)?;
    let lhs = value_at(FormName::Phi0_1, &ratio(1, 4), cap)?.mul(&abg.gamma);
    let rhs = abg.gamma.pow(4).scale(&rat(8)).add(&FourierSeries::constant(rat(2), cap));
    compare("phi_0_1(1/4) = 2(4 gamma^4 + 1)/gamma", &lhs, &rhs, cap)
}

/// The displayed coefficients of `alpha` and `alpha = 16 gamma^4 - 8`.
pub fn alpha_checks(cap: QExp) -> Result<Vec<CheckOutcome>> {
    let abg = abg_functions(cap.max(QExp::int(5)))?;
    let shown = FourierSeries::from_terms(
        [8i64, 1 << 8, 1 << 11, 11 << 10, 3 << 14, 359 << 9].iter().enumerate().map(|(n, v)| (QExp::int(n as i64), rat(*v))),
        QExp::int(5),
    );
    let g = abg_functions(cap)?;
    let rhs = g.gamma.pow(4).scale(&rat(16)).sub(&FourierSeries::constant(rat(8), cap));
    Ok(vec![
        compare("alpha = 8 + 2^8 q + 2^11 q^2 + 11*2^10 q^3 + 3*2^14 q^4 + 359*2^9 q^5", &abg.alpha, &shown, QExp::int(5))?,
        compare("alpha = 16 gamma^4 - 8", &g.alpha, &rhs, cap)?,
    ])
}

fn residue_check(id: &str, s: &FourierSeries<Rat>, shift: i64, modulus: i64, cap: QExp) -> Result<CheckOutcome> {
    let m = big(modulus);
    let mut n = QExp::ZERO;
    while n <= cap {
        let mut c = s.coeff(n)?;
        if n == QExp::ZERO {
            c -= rat(shift);
        }
        if residue(&c, &m).is_none_or(|r| r != big(0)) {
            return Ok(CheckOutcome::fail(id, cap, format!("coefficient {} at q^{n}", fmt_rat(&c))));
        }
        n = n + QExp::int(1);
    }
    Ok(CheckOutcome::pass(id, cap))
}

/// `alpha - 8 = 0 mod 2^8` and `beta - 3 = 0 mod 3^3` coefficientwise.
pub fn abg_congruences(cap: QExp) -> Result<Vec<CheckOutcome>> {
    let abg = abg_functions(cap)?;
    Ok(vec![
        residue_check("alpha - 8 = 0 mod 2^8", &abg.alpha, 8, 1 << 8, cap)?,
        residue_check("beta - 3 = 0 mod 3^3", &abg.beta, 3, 27, cap)?,
    ])
}

/// Values at `z = (tau + 1)/2` of the generators and of `xi_0_6`.
pub fn ahat_checks(cap: QExp) -> Result<Vec<CheckOutcome>> {
    let v = ahat_values(cap + QExp::int(1))?;
    let quarter = |n| QExp::new(n, 4);
    let lead = FourierSeries::from_terms([(quarter(-1)?, rat(-1)), (quarter(1)?, rat(20))], quarter(1)?);
    let sq = v.phi[0].pow(2).add(&FourierSeries::constant(rat(64), cap));
    Ok(vec![
        constant("phi_0_2 hat = -2", &v.phi[1], -2)?,
        constant("phi_0_3 hat = 0", &v.phi[2], 0)?,
        constant("phi_0_4 hat = -1", &v.phi[3], -1)?,
        compare("phi_0_1 hat = -q^(-1/4) + 20 q^(1/4) + ...", &v.phi[0], &lead, quarter(1)?)?,
        compare("xi_0_6 hat = phi_0_1 hat^2 + 64", &v.xi6, &sq, cap)?,
        compare("xi_0_6 hat = (theta00/eta)^12", &v.xi6, &theta00_over_eta_12(cap)?, cap)?,
    ])
}

pub fn report_outcome(prefix: &str, r: &CongruenceReport, through: QExp) -> CheckOutcome {
    let id = format!("{prefix}: {}", r.claim);
    let bad = r.checks.iter().find(|c| !c.passed());
    expect(&id, through, r.passed, || {
        bad.map(|c| format!("value {} at q^{} modulo {}", fmt_rat(&c.value), c.at, c.modulus)).unwrap_or_default()
    })
}

/// Elliptic genus, Witten genus and congruences of `K3` and of the quintic.
pub fn genus_checks(cap: QExp) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let eg = elliptic_genus(&k3(), cap)?;
    let dec = eg.decomposition.as_ref().map(ToString::to_string).unwrap_or_default();
    out.push(text_eq("elliptic genus of K3 = 2 phi_0_1", dec, "2*phi_0_1"));
    let e = eg.euler_value();
    out.push(compare("Euler number of K3 = 24", &e, &FourierSeries::constant(rat(24), e.cap()), e.cap())?);
    let w = mwg(&CharData::from_pairs(2, 2, [("S2", rat(-48))])?, cap)?;
    out.push(compare("mwg(K3, tangent bundle) = elliptic genus", &w.core.series, &eg.core.series, cap)?);
    let r = elliptic_check(&w.core)?;
    out.push(expect("mwg(K3) is elliptic", cap, r.passed(), || format!("{:?}", r.witness)));
    for r in congruence_report(&k3(), cap)? {
        out.push(report_outcome("K3", &r, cap));
    }
    for r in congruence_report(&quintic(), cap)? {
        out.push(report_outcome("quintic", &r, cap));
    }
    Ok(out)
}

/// Low slices of the second-quantized genus of `K3` and the product oracle.
pub fn sqeg_checks(qcap: QExp) -> Result<Vec<CheckOutcome>> {
    let pmax = 2;
    let input_cap = QExp::from_units(qcap.units() * pmax as i64);
    let f = elliptic_genus(&k3(), input_cap)?.core.series;
    let s = sqeg_expand(&f, pmax, qcap)?;
    let oracle = sqeg_product_oracle(&f, pmax, qcap)?;
    Ok(vec![
        compare("sqeg p^0 slice = 1", &s.slice(0), &FourierSeries::one(qcap), qcap)?,
        compare("sqeg p^1 slice = input genus", &s.slice(1), &f.lower_cap(qcap), qcap)?,
        compare("sqeg p^2 slice = product oracle", &s.slice(2), &oracle.slice(2), qcap)?,
        expect("sqeg coefficients are integral", qcap, s.is_integral(), || "non-integral coefficient".into()),
    ])
}

/// The first coefficients, the antisymmetry in `l`, and the first slice.
pub fn delta2_checks(bound: i64) -> Result<Vec<CheckOutcome>> {
    let s = delta2_expand(bound);
    let q = QExp::new(1, 4)?;
    let first = (s.coeff(1, 1, 1), s.coeff(1, -1, 1));
    let anti = s.terms.iter().find(|((n, l, m), v)| s.coeff(*n, -l, *m) != -(*v).clone());
    let cap = QExp::from_units((bound - 1) * 6).min(QExp::int(3));
    let pad = cap + QExp::int(1);
    let oracle = FourierSeries::from_scalar(&eta_power(3, pad)?).mul(&theta_sum(pad));
    Ok(vec![
        expect("Delta_2 at (1/4, +-1/2, 1/2) = (+1, -1)", q, first == (rat(1), rat(-1)), || format!("{first:?}")),
        expect("Delta_2 antisymmetric in l", q, anti.is_none(), || format!("{anti:?}")),
        compare("Delta_2 first slice = eta^3 theta", &s.slice(1), &oracle, cap)?,
    ])
}
