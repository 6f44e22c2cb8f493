//! The algebra of weak Jacobi forms: graded products, the elliptic
//! transformation check, integral bases and decomposition into generators.

mod basis;
mod cocycle;
mod eisenstein;
mod elliptic;
mod halfint;
mod poly;

pub use basis::{decompose, decompose_weight0, monomials_of_index, normal_form, q0_basis, q0_vector, BasisReport};
pub use cocycle::jet_cocycle;
pub use eisenstein::{module_monomials, solve_by_q0, Q0Solution};
pub use elliptic::{elliptic_check, elliptic_check_lambda, EllipticReport, EllipticWitness};
pub use halfint::halfint_reduce;
pub use poly::{Gen, GeneratorPoly, Monomial};

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{self, FormName};
use crate::rat::{rat, Rat};
use crate::series::{FourierSeries, QExp, YLaurent};

/// A Jacobi form: weight, index, eta-character exponent and its expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiForm {
    pub weight: Rat,
    pub index: Rat,
    /// Exponent `k` of the multiplier `v_eta^k`, reduced mod 24.
    pub eta_character: i64,
    pub series: FourierSeries<YLaurent>,
}

impl JacobiForm {
    /// Validates the Fourier support: `y`-exponents in `index + Z`, and
    /// integral nonnegative `q`-exponents when the character is trivial and
    /// the index integral.
    pub fn new(weight: Rat, index: Rat, eta_character: i64, series: FourierSeries<YLaurent>) -> Result<Self> {
        let parity = (&index * rat(2)).to_integer();
        let odd = parity.bit(0);
        for (e, c) in series.terms() {
            for (h, _) in c.terms() {
                if (h.rem_euclid(2) == 1) != odd {
                    return Err(Error::Precondition(format!(
                        "y-exponent {h}/2 at q^{e} is not in index {index} + Z"
                    )));
                }
            }
            if eta_character.rem_euclid(24) == 0 && index.is_integer() && (!e.is_integer() || e < QExp::ZERO) {
                return Err(Error::Precondition(format!(
                    "q-exponent {e} not a nonnegative integer for trivial character"
                )));
            }
        }
        Ok(JacobiForm { weight, index, eta_character: eta_character.rem_euclid(24), series })
    }

    /// The named generator as a Jacobi form.
    pub fn named(name: FormName, cap: QExp) -> Result<Self> {
        let f = forms::standard_form(name, cap)?;
        let s = f.series.as_laurent().cloned().ok_or_else(|| {
            Error::Unsupported(format!("{name} is meromorphic and has no Laurent expansion"))
        })?;
        JacobiForm::new(f.weight.clone(), f.index.clone(), f.eta_character, s)
    }

    /// The constant form `c` of weight and index zero.
    pub fn constant(c: Rat, cap: QExp) -> Self {
        JacobiForm {
            weight: Rat::zero(),
            index: Rat::zero(),
            eta_character: 0,
            series: FourierSeries::constant(YLaurent::constant(c), cap),
        }
    }

    pub fn one(cap: QExp) -> Self {
        Self::constant(Rat::one(), cap)
    }

    pub fn cap(&self) -> QExp {
        self.series.cap()
    }

    pub fn same_type(&self, other: &Self) -> bool {
        self.weight == other.weight && self.index == other.index && self.eta_character == other.eta_character
    }

    fn check_type(&self, other: &Self) -> Result<()> {
        if self.same_type(other) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "cannot add forms of type ({}, {}, {}) and ({}, {}, {})",
                self.weight, self.index, self.eta_character, other.weight, other.index, other.eta_character
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_type(other)?;
        Ok(JacobiForm { series: self.series.add(&other.series), ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_type(other)?;
        Ok(JacobiForm { series: self.series.sub(&other.series), ..self.clone() })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        JacobiForm { series: self.series.scale(r), ..self.clone() }
    }

    pub fn truncate(&self, cap: QExp) -> Result<Self> {
        Ok(JacobiForm { series: self.series.truncate(cap)?, ..self.clone() })
    }

    /// `q^0` coefficient.
    pub fn q0(&self) -> Result<YLaurent> {
        self.series.coeff(QExp::ZERO)
    }

    pub fn is_integral(&self) -> bool {
        self.series.terms().all(|(_, c)| c.is_integral())
    }
}

/// Graded product: weights, indices and characters add.
pub fn jf_mul(a: &JacobiForm, b: &JacobiForm) -> JacobiForm {
    JacobiForm {
        weight: &a.weight + &b.weight,
        index: &a.index + &b.index,
        eta_character: (a.eta_character + b.eta_character).rem_euclid(24),
        series: a.series.mul(&b.series),
    }
}

impl fmt::Display for JacobiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[weight {}, index {}, v_eta^{}] {}",
            self.weight, self.index, self.eta_character, self.series
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_phi_m1_half() {
        let cap = QExp::int(4);
        let a = JacobiForm::named(FormName::PhiM1Half, cap).unwrap();
        let sq = jf_mul(&a, &a);
        let b = JacobiForm::named(FormName::PhiM2_1, cap).unwrap();
        assert_eq!(sq, b);
    }

    #[test]
    fn phi_0_3_is_square() {
        let cap = QExp::int(4);
        let a = JacobiForm::named(FormName::Phi0_3Half, cap).unwrap();
        assert_eq!(jf_mul(&a, &a), JacobiForm::named(FormName::Phi0_3, cap).unwrap());
    }

    #[test]
    fn unit() {
        let cap = QExp::int(3);
        let a = JacobiForm::named(FormName::Phi0_1, cap).unwrap();
        assert_eq!(jf_mul(&JacobiForm::one(cap), &a), a);
    }

    #[test]
    fn support_is_validated() {
        let s = FourierSeries::constant(YLaurent::y_half(1), QExp::int(1));
        assert!(JacobiForm::new(rat(0), rat(1), 0, s.clone()).is_err());
        assert!(JacobiForm::new(rat(0), Rat::new(1.into(), 2.into()), 0, s).is_ok());
    }
}
