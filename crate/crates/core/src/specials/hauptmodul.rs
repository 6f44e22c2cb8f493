use num_traits::Zero;

use super::{abg_functions, rational_series, restrict};
use crate::check::{compare, CheckOutcome};
use crate::error::{Error, Result};
use crate::forms::{delta, FormName};
use crate::rat::{rat, Rat};
use crate::ring::JacobiForm;
use crate::series::{FourierSeries, QExp};

/// `c * Delta(a tau) / Delta(b tau)`.
fn delta_quotient(c: i64, a: i64, b: i64, cap: QExp) -> Result<FourierSeries<Rat>> {
    let d = delta(cap)?;
    let num = d.rescale_q(a).lower_cap(cap);
    let den = d.rescale_q(b).lower_cap(cap);
    Ok(num.div(&den)?.scale(&rat(c)))
}

fn xi6_at(mu: Rat, cap: QExp) -> Result<FourierSeries<Rat>> {
    let xi = JacobiForm::named(FormName::Xi0_6, cap)?;
    rational_series(&restrict(&xi, &Rat::zero(), &mu)?.value()?)
}

/// The identities between `xi_0_6` at torsion points, `alpha`, `beta` and
/// quotients of `Delta`, through `q^cap`.
pub fn hauptmodul_checks(cap: QExp) -> Result<Vec<CheckOutcome>> {
    if cap < QExp::int(6) {
        return Err(Error::CapUnderflow { needed: "6".into(), available: cap.to_string() });
    }
    let pad = cap + QExp::int(6);
    let two12 = 1 << 12;
    let three12 = 531441;
    let d2 = delta_quotient(two12, 2, 1, pad)?;
    let d3 = delta_quotient(three12, 3, 1, pad)?;
    let d4 = delta_quotient(two12, 4, 1, pad)?;
    let d6 = delta(pad)?.mul(&delta(pad)?.rescale_q(6).lower_cap(pad)).div(
        &delta(pad)?.rescale_q(2).lower_cap(pad).mul(&delta(pad)?.rescale_q(3).lower_cap(pad)),
    )?;
    let half = Rat::new(1.into(), 2.into());
    let abg = abg_functions(pad)?;
    let one = |c: i64| FourierSeries::constant(rat(c), pad);
    let alpha2 = abg.alpha.pow(2).sub(&one(64));
    let beta3 = abg.beta.pow(3).sub(&one(27)).pow(2);
    let gamma = abg.gamma.pow(4).scale(&rat(16)).sub(&one(8));
    Ok(vec![
        compare("xi6(1/2) = 2^12 Delta(2t)/Delta(t)", &xi6_at(half, pad)?, &d2, cap)?,
        compare("xi6(1/3)^2 = 3^12 Delta(3t)/Delta(t)", &xi6_at(Rat::new(1.into(), 3.into()), pad)?.pow(2), &d3, cap)?,
        compare("xi6(1/4)^2 = 2^12 Delta(4t)/Delta(t)", &xi6_at(Rat::new(1.into(), 4.into()), pad)?.pow(2), &d4, cap)?,
        compare(
            "xi6(1/6)^2 = Delta(t)Delta(6t)/(Delta(2t)Delta(3t))",
            &xi6_at(Rat::new(1.into(), 6.into()), pad)?.pow(2),
            &d6,
            cap,
        )?,
        compare("alpha^2 - 64 = 2^12 Delta(2t)/Delta(t)", &alpha2, &d2, cap)?,
        compare("(beta^3 - 27)^2 = 3^12 Delta(3t)/Delta(t)", &beta3, &d3, cap)?,
        compare("alpha = 16 gamma^4 - 8", &abg.alpha, &gamma, cap)?,
    ])
}

/// The quarter-point identity with the quotient that does hold:
/// `xi6(1/4)^2 = 2^12 Delta(4t)/Delta(2t)`.
pub fn quarter_point_variant(cap: QExp) -> Result<CheckOutcome> {
    let pad = cap + QExp::int(4);
    let lhs = xi6_at(Rat::new(1.into(), 4.into()), pad)?.pow(2);
    compare("xi6(1/4)^2 = 2^12 Delta(4t)/Delta(2t)", &lhs, &delta_quotient(1 << 12, 4, 2, pad)?, cap)
}
