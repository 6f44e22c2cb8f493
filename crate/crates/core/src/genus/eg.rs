use num_traits::Zero;

use super::{decompose_core, index_half, to_i64, chi_y_q0, GenusResult, ManifoldData};
use crate::error::{Error, Result};
use crate::linalg::solve_rational;
use crate::rat::{rat, Rat};
use crate::ring::{q0_basis, Gen, GeneratorPoly, JacobiForm, Monomial};
use crate::series::QExp;

/// A basis of weight-zero weak forms of index `k`: the normal-form forms of
/// index `k` followed by `xi_0_6` times a basis of index `k - 6`.
pub fn weight0_module_basis(k: u32, cap: QExp) -> Result<Vec<GeneratorPoly>> {
    if k == 0 {
        return Ok(vec![GeneratorPoly::monomial(Monomial::one(), rat(1))]);
    }
    let mut out = q0_basis(k, cap)?.polys;
    if k >= 6 {
        let xi = GeneratorPoly::xi_0_6();
        out.extend(weight0_module_basis(k - 6, cap)?.iter().map(|p| xi.mul(p)));
    }
    Ok(out)
}

/// The weight-zero weak Jacobi form of index `d/2` whose `q^0` term is the
/// `chi_y` polynomial of the data, pinned by `extra_coeffs` where the
/// `q^0` term does not determine it.
pub fn elliptic_genus(m: &ManifoldData, cap: QExp) -> Result<GenusResult> {
    let d = m.d;
    let target = chi_y_q0(m);
    let index = index_half(d);
    let mut warnings = m.warnings();
    let zero_form = |cap| {
        let mut z = JacobiForm::constant(Rat::zero(), cap);
        z.index = index.clone();
        z
    };
    let basis: Vec<GeneratorPoly> = if d.is_multiple_of(2) {
        weight0_module_basis(d / 2, cap)?
    } else if d == 1 {
        Vec::new()
    } else {
        let half = GeneratorPoly::monomial(Monomial::new(&[(Gen::Phi0_3Half, 1)]), rat(1));
        weight0_module_basis((d - 3) / 2, cap)?.iter().map(|p| half.mul(p)).collect()
    };
    let mut max_n = 0;
    for e in &m.extra_coeffs {
        max_n = max_n.max(e.n);
    }
    if QExp::int(max_n) > cap {
        return Err(Error::CapUnderflow { needed: max_n.to_string(), available: cap.to_string() });
    }
    let forms: Vec<JacobiForm> = basis.iter().map(|p| p.evaluate(cap)).collect::<Result<_>>()?;
    // unknowns: basis coefficients; equations: q^0 at every y-power, then the extras
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    let mut h = -(d as i64);
    while h <= d as i64 {
        rows.push(forms.iter().map(|f| f.series.get(QExp::ZERO).map(|c| c.coeff(h)).unwrap_or_else(Rat::zero)).collect());
        rhs.push(target.coeff(h));
        h += 2;
    }
    for e in &m.extra_coeffs {
        let h = to_i64(&(&e.l * rat(2)))
            .ok_or_else(|| Error::Precondition(format!("y-exponent {} is not half-integral", e.l)))?;
        if (h - d as i64).rem_euclid(2) != 0 {
            return Err(Error::Precondition(format!("y-exponent {} has the wrong parity for d = {d}", e.l)));
        }
        let n = QExp::int(e.n);
        rows.push(forms.iter().map(|f| f.series.get(n).map(|c| c.coeff(h)).unwrap_or_else(Rat::zero)).collect());
        rhs.push(e.value.clone());
    }
    let (x, kernel) = if forms.is_empty() {
        if rhs.iter().any(|v| !v.is_zero()) {
            return Err(Error::NotInSpan(format!("chi_y term {target} is not the q^0 term of a form of index {index}")));
        }
        (Vec::new(), Vec::new())
    } else {
        solve_rational(&rows, &rhs).ok_or_else(|| {
            Error::NotInSpan(format!("chi_y term {target} and the prescribed coefficients fit no form of index {index}"))
        })?
    };
    if !kernel.is_empty() {
        return Err(Error::Underdetermined(format!(
            "{} free parameter(s) at index {index}; prescribe more coefficients of q^1 and beyond",
            kernel.len()
        )));
    }
    let mut core = zero_form(cap);
    for (f, c) in forms.iter().zip(&x) {
        if !c.is_zero() {
            core = core.add(&f.scale(c))?;
        }
    }
    if !core.is_integral() {
        warnings.push("genus has non-integral coefficients".into());
    }
    let decomposition = decompose_core(&core);
    Ok(GenusResult { core, prefactor_exponent: 0, decomposition, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::FormName;
    use crate::genus::ExtraCoeff;

    #[test]
    fn k3_is_twice_phi_0_1() {
        let k3 = ManifoldData::new(2, vec![2, -20, 2]).unwrap();
        let r = elliptic_genus(&k3, QExp::int(4)).unwrap();
        let phi = JacobiForm::named(FormName::Phi0_1, QExp::int(4)).unwrap();
        assert_eq!(r.core, phi.scale(&rat(2)));
        assert_eq!(r.decomposition.as_ref().unwrap().to_string(), "2*phi_0_1");
        assert_eq!(r.euler_value().coeff(QExp::ZERO).unwrap(), rat(24));
    }

    #[test]
    fn cy3_with_euler_two() {
        let m = ManifoldData::new(3, vec![0, -1, 1, 0]).unwrap();
        let r = elliptic_genus(&m, QExp::int(3)).unwrap();
        assert_eq!(r.core, JacobiForm::named(FormName::Phi0_3Half, QExp::int(3)).unwrap());
        assert_eq!(r.decomposition.unwrap().to_string(), "phi_0_3half");
    }

    #[test]
    fn point_and_curve() {
        let r = elliptic_genus(&ManifoldData::new(0, vec![1]).unwrap(), QExp::int(2)).unwrap();
        assert_eq!(r.core, JacobiForm::one(QExp::int(2)));
        assert!(elliptic_genus(&ManifoldData::new(1, vec![0, 0]).unwrap(), QExp::int(2)).unwrap().core.series.is_zero());
        assert!(matches!(
            elliptic_genus(&ManifoldData::new(1, vec![1, -1]).unwrap(), QExp::int(2)),
            Err(Error::NotInSpan(_))
        ));
    }

    #[test]
    fn index_six_needs_a_q1_coefficient() {
        let mut chi = vec![0i64; 13];
        chi[0] = 1;
        chi[5] = 36;
        chi[6] = 70;
        chi[7] = 36;
        chi[12] = 1;
        let m = ManifoldData::new(12, chi).unwrap();
        assert!(matches!(elliptic_genus(&m, QExp::int(3)), Err(Error::Underdetermined(_))));
        let xi = JacobiForm::named(FormName::Xi0_6, QExp::int(3)).unwrap();
        let base = q0_basis(6, QExp::int(3)).unwrap();
        let guess = elliptic_genus(&m.clone().with_extra(vec![ExtraCoeff { n: 1, l: rat(0), value: rat(7) }]), QExp::int(3)).unwrap();
        assert_eq!(guess.core.q0().unwrap(), base.forms[5].q0().unwrap());
        let diff = guess.core.sub(&base.forms[5]).unwrap();
        let c = diff.series.get(QExp::int(1)).unwrap().coeff(0) / xi.series.get(QExp::int(1)).unwrap().coeff(0);
        assert_eq!(diff, xi.scale(&c));
    }
}
