use super::JacobiForm;
use crate::error::Result;
use crate::forms::g2k;
use crate::rat::{rat, Rat};
use crate::series::{inv_factorial, FourierSeries, UJet, YLaurent, YRational};

fn lift(s: &FourierSeries<Rat>) -> FourierSeries<YRational> {
    s.map_coeffs(|c| YRational::from_laurent(YLaurent::constant(c.clone())))
}

/// The jet `exp(2 m G_2 u^2 - (D phi / phi) u) * sum_k D^k phi u^k / k!`
/// through `u^order`, with `D = y d/dy`.
pub fn jet_cocycle(a: &JacobiForm, order: usize) -> Result<UJet<YRational>> {
    let cap = a.cap();
    let s = a.series.to_rational();
    let mut taylor = vec![s.clone()];
    for k in 1..=order {
        let next = taylor[k - 1].y_ddy();
        taylor.push(next);
    }
    let taylor: Vec<_> = taylor
        .into_iter()
        .enumerate()
        .map(|(k, t)| t.scale(&inv_factorial(k as u32)))
        .collect();
    let dlog = s.y_ddy().div(&s)?;
    let zero = FourierSeries::zero(dlog.cap());
    let mut expo = vec![zero.clone(); order + 1];
    if order >= 1 {
        expo[1] = dlog.neg();
    }
    if order >= 2 {
        expo[2] = lift(&g2k(1, cap)?).scale(&(&a.index * rat(2)));
    }
    Ok(UJet::new(expo).exp()?.mul(&UJet::new(taylor)))
}
