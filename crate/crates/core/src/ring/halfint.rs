use super::JacobiForm;
use crate::error::{Error, Result};
use crate::forms::{self, FormName};
use crate::rat::rat;

/// Splits off `phi_0_3half` (even weight) or `phi_m1_half` (odd weight) from
/// a form of index in `Z + 1/2`, returning the factor and the cofactor.
pub fn halfint_reduce(a: &JacobiForm) -> Result<(FormName, JacobiForm)> {
    let twice = &a.index * rat(2);
    if !twice.is_integer() || !twice.to_integer().bit(0) {
        return Err(Error::Precondition(format!("index {} is not in Z + 1/2", a.index)));
    }
    if !a.weight.is_integer() {
        return Err(Error::Precondition(format!("weight {} is not an integer", a.weight)));
    }
    let name = if a.weight.to_integer().bit(0) { FormName::PhiM1Half } else { FormName::Phi0_3Half };
    let (w, i, _) = name.tags();
    if i > a.index {
        return Err(Error::Precondition(format!("index {} is below that of {name}", a.index)));
    }
    let quot = a.series.div(&forms::laurent(name, a.cap())?)?;
    let cofactor = JacobiForm::new(&a.weight - w, &a.index - i, a.eta_character, quot)?;
    Ok((name, cofactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::jf_mul;
    use crate::series::QExp;

    #[test]
    fn trivial_reductions() {
        let cap = QExp::int(3);
        let a = JacobiForm::named(FormName::Phi0_3Half, cap).unwrap();
        let (n, c) = halfint_reduce(&a).unwrap();
        assert_eq!(n, FormName::Phi0_3Half);
        assert_eq!(c, JacobiForm::one(cap));
        let b = JacobiForm::named(FormName::PhiM1Half, cap).unwrap();
        let (n, c) = halfint_reduce(&b).unwrap();
        assert_eq!(n, FormName::PhiM1Half);
        assert_eq!(c, JacobiForm::one(cap));
    }

    #[test]
    fn round_trip_with_phi_0_2() {
        let cap = QExp::int(3);
        let f = JacobiForm::named(FormName::Phi0_2, cap).unwrap();
        let g = jf_mul(&JacobiForm::named(FormName::Phi0_3Half, cap).unwrap(), &f);
        let (_, c) = halfint_reduce(&g).unwrap();
        assert_eq!(c, f);
    }

    #[test]
    fn rejects_integral_index() {
        let a = JacobiForm::named(FormName::Phi0_1, QExp::int(2)).unwrap();
        assert!(halfint_reduce(&a).is_err());
    }
}
