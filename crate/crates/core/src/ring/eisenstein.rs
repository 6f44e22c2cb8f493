use num_traits::Zero;

use super::basis::evaluate_cached;
use super::poly::{Gen, GeneratorPoly, Monomial};
use super::JacobiForm;
use crate::error::{Error, Result};
use crate::linalg::{primitive, rref, solve_rational};
use crate::rat::{rat, Rat};
use crate::series::{QExp, YLaurent};

/// Outcome of matching a `q^0` term inside a module of Jacobi forms.
#[derive(Clone, Debug, PartialEq)]
pub enum Q0Solution {
    Unique { poly: GeneratorPoly, form: JacobiForm },
    /// A particular solution plus primitive integral generators of the forms
    /// with vanishing `q^0` term.
    Family { poly: GeneratorPoly, form: JacobiForm, kernel: Vec<(GeneratorPoly, JacobiForm)> },
}

impl Q0Solution {
    pub fn form(&self) -> &JacobiForm {
        match self {
            Q0Solution::Unique { form, .. } | Q0Solution::Family { form, .. } => form,
        }
    }

    pub fn poly(&self) -> &GeneratorPoly {
        match self {
            Q0Solution::Unique { poly, .. } | Q0Solution::Family { poly, .. } => poly,
        }
    }
}

/// `E4^a E6^b Delta^c` of weight `w`, most `Delta` first.
fn modular_monomials(w: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for c in (0..=w / 12).rev() {
        let rest = w - 12 * c;
        for a in (0..=rest / 4).rev() {
            let r = rest - 4 * a;
            if r.is_multiple_of(6) {
                out.push(Monomial::new(&[(Gen::E4, a), (Gen::E6, r / 6), (Gen::Delta, c)]));
            }
        }
    }
    out
}

/// The spanning set `E4^a E6^b Delta^c phi_m2_1^j phi_0_1^(m-j)` of weight `k`, index `m`.
pub fn module_monomials(k: u32, m: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for j in 0..=m {
        let jf = Monomial::new(&[(Gen::PhiM2_1, j), (Gen::Phi0_1, m - j)]);
        out.extend(modular_monomials(k + 2 * j).into_iter().map(|mm| mm.mul(&jf)));
    }
    out
}

fn flatten(f: &JacobiForm, keys: &[(QExp, i64)]) -> Vec<Rat> {
    keys.iter()
        .map(|(e, h)| f.series.get(*e).map(|c| c.coeff(*h)).unwrap_or_else(Rat::zero))
        .collect()
}

/// Solves for the form of weight `k`, index `m` with the given `q^0` term.
pub fn solve_by_q0(k: u32, m: u32, target: &YLaurent, cap: QExp) -> Result<Q0Solution> {
    if !matches!(k, 4 | 6) || !(1..=3).contains(&m) {
        return Err(Error::Precondition(format!("(k, m) = ({k}, {m}) is outside k in {{4, 6}}, m in {{1, 2, 3}}")));
    }
    if cap < QExp::int(2) {
        return Err(Error::CapUnderflow { needed: "2".into(), available: cap.to_string() });
    }
    let candidates = module_monomials(k, m);
    let forms: Vec<JacobiForm> = candidates.iter().map(|c| evaluate_cached(c, cap)).collect::<Result<_>>()?;
    let mut keys: Vec<(QExp, i64)> = forms
        .iter()
        .flat_map(|f| f.series.terms().flat_map(|(e, c)| c.terms().iter().map(move |(h, _)| (e, *h))).collect::<Vec<_>>())
        .collect();
    keys.sort();
    keys.dedup();
    let mut kept: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        let mut trial = rows.clone();
        trial.push(flatten(f, &keys));
        if rref(&mut trial.clone()).len() > rows.len() {
            rows = trial;
            kept.push(i);
        }
    }
    let q0: Vec<Vec<Rat>> = kept.iter().map(|&i| flatten(&forms[i], &q0_keys(m))).collect();
    let a: Vec<Vec<Rat>> = (0..q0_keys(m).len()).map(|r| q0.iter().map(|col| col[r].clone()).collect()).collect();
    let b: Vec<Rat> = q0_keys(m).iter().map(|(_, h)| target.coeff(*h)).collect();
    if target.terms().iter().any(|(h, _)| h.abs() > 2 * m as i64 || h.rem_euclid(2) != 0) {
        return Err(Error::NotInSpan(format!("target {target} has exponents outside index {m}")));
    }
    let (x, kernel) = solve_rational(&a, &b)
        .ok_or_else(|| Error::NotInSpan(format!("q^0 term {target} is not attained in weight {k}, index {m}")))?;
    let build = |coeffs: &[Rat]| -> Result<(GeneratorPoly, JacobiForm)> {
        let poly = GeneratorPoly::from_terms(
            rat(k as i64),
            rat(m as i64),
            kept.iter().zip(coeffs).map(|(&i, c)| (candidates[i].clone(), c.clone())),
        );
        let mut form = JacobiForm::constant(Rat::zero(), cap);
        form.weight = rat(k as i64);
        form.index = rat(m as i64);
        for (&i, c) in kept.iter().zip(coeffs) {
            if !c.is_zero() {
                form = form.add(&forms[i].scale(c))?;
            }
        }
        Ok((poly, form))
    };
    let (poly, form) = build(&x)?;
    if kernel.is_empty() {
        return Ok(Q0Solution::Unique { poly, form });
    }
    let kernel = kernel
        .iter()
        .map(|v| {
            let p: Vec<Rat> = primitive(v).into_iter().map(Rat::from_integer).collect();
            build(&p)
        })
        .collect::<Result<_>>()?;
    Ok(Q0Solution::Family { poly, form, kernel })
}

fn q0_keys(m: u32) -> Vec<(QExp, i64)> {
    (-(m as i64)..=m as i64).map(|l| (QExp::ZERO, 2 * l)).collect()
}
