use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::poly::{Gen, GeneratorPoly, Monomial};
use super::JacobiForm;
use crate::error::{Error, Result};
use crate::forms::{self, FormName};
use crate::linalg::{hnf, solve_with_hnf};
use crate::rat::{rat, Rat};
use crate::series::{QExp, YLaurent};

/// Integer `q^0` coefficients of a form of index `t`, at `y^l` for
/// `l = -t, -t + 1, ..., t`.
pub fn q0_vector(a: &JacobiForm) -> Result<Vec<BigInt>> {
    let span = (&a.index * rat(2))
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Precondition("index too large".into()))?;
    let c = a.q0()?;
    let mut out = Vec::with_capacity(span as usize + 1);
    for (h, v) in c.terms() {
        if h.abs() > span {
            return Err(Error::Precondition(format!("q^0 term {c} exceeds index {}", a.index)));
        }
        if !v.is_integer() {
            return Err(Error::NonIntegral(format!("q^0 coefficient {v}")));
        }
    }
    let mut h = -span;
    while h <= span {
        out.push(c.coeff(h).to_integer());
        h += 2;
    }
    Ok(out)
}

/// Monomials `phi_0_1^a phi_0_2^b phi_0_3^c phi_0_4^e` with
/// `a + 2b + 3c + 4e = m`, highest power of `phi_0_1` first.
pub fn monomials_of_index(m: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e in 0..=m / 4 {
        for c in 0..=(m - 4 * e) / 3 {
            for b in 0..=(m - 4 * e - 3 * c) / 2 {
                let a = m - 4 * e - 3 * c - 2 * b;
                out.push(Monomial::new(&[
                    (Gen::Phi0_1, a),
                    (Gen::Phi0_2, b),
                    (Gen::Phi0_3, c),
                    (Gen::Phi0_4, e),
                ]));
            }
        }
    }
    out.sort();
    out
}

type EvalMemo = Mutex<HashMap<(Monomial, QExp), JacobiForm>>;

pub(crate) fn evaluate_cached(m: &Monomial, cap: QExp) -> Result<JacobiForm> {
    static MEMO: OnceLock<EvalMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = memo.lock().expect("memo poisoned").get(&(m.clone(), cap)) {
        return Ok(f.clone());
    }
    let f = m.evaluate(cap)?;
    memo.lock().expect("memo poisoned").insert((m.clone(), cap), f.clone());
    Ok(f)
}

fn combine(monos: &[Monomial], x: &[BigInt], index: u32) -> GeneratorPoly {
    GeneratorPoly::from_terms(
        Rat::zero(),
        rat(index as i64),
        monos.iter().zip(x).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), Rat::from_integer(c.clone()))),
    )
}

fn evaluate_combination(p: &GeneratorPoly, cap: QExp) -> Result<JacobiForm> {
    let mut acc = JacobiForm::constant(Rat::zero(), cap);
    acc.index = p.index.clone();
    for (m, c) in p.terms() {
        acc = acc.add(&evaluate_cached(m, cap)?.scale(c))?;
    }
    Ok(acc)
}

fn monomial_q0_rows(monos: &[Monomial]) -> Result<Vec<Vec<BigInt>>> {
    monos.iter().map(|m| q0_vector(&evaluate_cached(m, QExp::ZERO)?)).collect()
}

/// The normal-form `q^0` term of the `n`-th basis form of index `m`.
pub fn normal_form(m: u32, n: u32) -> YLaurent {
    let (m, n) = (m as i64, n as i64);
    if n == 1 {
        let g = m.gcd(&12);
        YLaurent::from_ints(&[(1, m / g), (0, (12 - 2 * m) / g), (-1, m / g)])
    } else {
        let n2 = n * n;
        YLaurent::from_ints(&[(n, 1), (1, -n2), (0, 2 * n2 - 2), (-1, -n2), (-n, 1)])
    }
}

/// A `Z`-basis of weight-zero forms of index `m` modulo `q`, with the
/// normal-form `q^0` terms.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisReport {
    pub index: u32,
    /// The generator monomials of index `m`, in row order of `transform`.
    pub monomials: Vec<Monomial>,
    /// Row `n - 1` holds the integer coefficients of the `n`-th basis form.
    pub transform: Vec<Vec<BigInt>>,
    pub polys: Vec<GeneratorPoly>,
    pub forms: Vec<JacobiForm>,
}

/// Integer combinations of generator monomials whose `q^0` terms are the
/// normal forms; fails if one is not reachable over `Z`.
pub fn q0_basis(m: u32, cap: QExp) -> Result<BasisReport> {
    if m == 0 {
        return Err(Error::Precondition("index must be positive".into()));
    }
    let monomials = monomials_of_index(m);
    let rows = monomial_q0_rows(&monomials)?;
    let h = hnf(&rows);
    let mut transform = Vec::new();
    let mut polys = Vec::new();
    let mut forms = Vec::new();
    for n in 1..=m {
        let target = normal_form(m, n);
        let tv: Vec<BigInt> = (-(m as i64)..=m as i64).map(|l| target.coeff(2 * l).to_integer()).collect();
        let x = solve_with_hnf(&h, &tv).ok_or_else(|| {
            Error::NotInSpan(format!("normal form {target} of index {m} is not an integral combination"))
        })?;
        let p = combine(&monomials, &x, m);
        forms.push(evaluate_combination(&p, cap)?);
        polys.push(p);
        transform.push(x);
    }
    Ok(BasisReport { index: m, monomials, transform, polys, forms })
}

/// Writes an integral weight-zero form of integral index as a polynomial in
/// `phi_0_1, phi_0_2, phi_0_3, phi_0_4`.
///
/// The `q^0` term is matched over `Z`, the rest must divide exactly by
/// `xi_0_6` with integral quotient, and the quotient is decomposed in turn.
/// Powers `phi_0_4^e`, `e >= 2`, are lowered where coefficients allow.
pub fn decompose_weight0(a: &JacobiForm) -> Result<GeneratorPoly> {
    if !a.weight.is_zero() || a.eta_character != 0 {
        return Err(Error::Precondition("decomposition needs weight 0 and trivial character".into()));
    }
    if !a.index.is_integer() || a.index < Rat::zero() {
        return Err(Error::Precondition(format!("index {} is not a nonnegative integer", a.index)));
    }
    if !a.is_integral() {
        return Err(Error::NonIntegral("form has non-integral coefficients".into()));
    }
    let m = a.index.to_integer().to_u32().ok_or_else(|| Error::Precondition("index too large".into()))?;
    let need = QExp::int(m.div_ceil(6) as i64 + 2);
    if a.cap() < need {
        return Err(Error::CapUnderflow { needed: need.to_string(), available: a.cap().to_string() });
    }
    Ok(decompose_rec(a, m)?.reduce_phi4())
}

/// [`decompose_weight0`] extended to index in `Z + 1/2` by first splitting
/// off `phi_0_3half`.
pub fn decompose(a: &JacobiForm) -> Result<GeneratorPoly> {
    if a.index.is_integer() {
        return decompose_weight0(a);
    }
    let (name, cofactor) = super::halfint_reduce(a)?;
    if name != FormName::Phi0_3Half {
        return Err(Error::Precondition("decomposition needs weight 0".into()));
    }
    let half = GeneratorPoly::monomial(Monomial::new(&[(Gen::Phi0_3Half, 1)]), rat(1));
    Ok(half.mul(&decompose_weight0(&cofactor)?))
}

fn decompose_rec(a: &JacobiForm, m: u32) -> Result<GeneratorPoly> {
    let cap = a.cap();
    if m == 0 {
        let c = a.q0()?.as_constant().ok_or_else(|| Error::NotInSpan("index 0 part is not constant".into()))?;
        if a.series.terms().any(|(e, _)| e != QExp::ZERO) {
            return Err(Error::NotInSpan("index 0 part has higher q-terms".into()));
        }
        return Ok(GeneratorPoly::monomial(Monomial::one(), c));
    }
    let monomials = monomials_of_index(m);
    let rows = monomial_q0_rows(&monomials)?;
    let x = solve_with_hnf(&hnf(&rows), &q0_vector(a)?).ok_or_else(|| {
        let c = a.q0().map(|c| c.to_string()).unwrap_or_default();
        Error::NotInSpan(format!("q^0 term {c} is not in the integral span at index {m}"))
    })?;
    let head = combine(&monomials, &x, m);
    let rest = a.sub(&evaluate_combination(&head, cap)?)?;
    if rest.series.is_zero() {
        return Ok(head);
    }
    if m < 6 {
        let (e, _) = rest.series.leading().expect("nonzero");
        return Err(Error::NotInSpan(format!("remainder at q^{e} after matching q^0 at index {m}")));
    }
    let xi = forms::laurent(FormName::Xi0_6, cap)?;
    let quot = rest.series.div(&xi)?;
    if !quot.terms().all(|(_, c)| c.is_integral()) {
        return Err(Error::NonIntegral("quotient by xi_0_6 is not integral".into()));
    }
    let q = JacobiForm::new(Rat::zero(), rat((m - 6) as i64), 0, quot)?;
    let tail = decompose_rec(&q, m - 6)?;
    Ok(head.add(&GeneratorPoly::xi_0_6().mul(&tail)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_index(1).len(), 1);
        assert_eq!(monomials_of_index(4).len(), 5);
        assert_eq!(monomials_of_index(6)[0], Monomial::new(&[(Gen::Phi0_1, 6)]));
    }

    #[test]
    fn basis_index_two() {
        let r = q0_basis(2, QExp::int(2)).unwrap();
        assert_eq!(r.polys[1].to_string(), "phi_0_1^2 - 24*phi_0_2");
        assert_eq!(r.forms[1].q0().unwrap(), YLaurent::from_ints(&[(2, 1), (1, -4), (0, 6), (-1, -4), (-2, 1)]));
        assert_eq!(r.forms[0].q0().unwrap(), YLaurent::from_ints(&[(1, 1), (0, 4), (-1, 1)]));
    }

    #[test]
    fn decompose_xi() {
        let a = JacobiForm::named(FormName::Xi0_6, QExp::int(3)).unwrap();
        let p = decompose_weight0(&a).unwrap();
        assert_eq!(p, GeneratorPoly::xi_0_6());
    }

    #[test]
    fn decompose_phi06() {
        use Gen::*;
        let p = GeneratorPoly::from_terms(
            rat(0),
            rat(6),
            [
                (Monomial::new(&[(Phi0_2, 1), (Phi0_4, 1)]), rat(1)),
                (Monomial::new(&[(Phi0_3, 2)]), rat(-1)),
            ],
        );
        let f = p.evaluate(QExp::int(3)).unwrap();
        assert_eq!(f.q0().unwrap(), YLaurent::from_ints(&[(1, 1), (-1, 1)]));
        let d = decompose_weight0(&f).unwrap();
        assert_eq!(d.evaluate(QExp::int(3)).unwrap(), f);
    }

    #[test]
    fn decompose_zero() {
        let mut z = JacobiForm::constant(Rat::zero(), QExp::int(3));
        z.index = rat(4);
        assert!(decompose_weight0(&z).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_form() {
        let mut a = JacobiForm::named(FormName::Phi0_1, QExp::int(3)).unwrap();
        a.series = a.series.add(&crate::series::FourierSeries::monomial(QExp::int(1), YLaurent::one(), QExp::int(3)));
        assert!(matches!(decompose_weight0(&a), Err(Error::NotInSpan(_))));
    }
}
