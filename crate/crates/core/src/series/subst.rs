use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::cyclotomic::check_order;
use super::jet::inv_factorial;
use super::{Cyclotomic, FourierSeries, QExp, UJet, YLaurent, Q_DEN};
use crate::error::{Error, Result};
use crate::rat::{rat, Rat};

/// Support bound `l^2 <= 4 t n + slack` on the terms `q^n y^l` of a series.
///
/// Weak Jacobi forms of index `t` satisfy it with `slack = t^2`. The bound is
/// what lets a substitution `y -> q^lambda` know how far the result is exact.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentBound {
    pub index: Rat,
    pub slack: Rat,
}

impl LaurentBound {
    pub fn weak(index: Rat) -> Self {
        let slack = &index * &index;
        LaurentBound { index, slack }
    }

    /// Largest lattice point `c` such that every term beyond `cap` lands above
    /// `c` after `y -> q^lambda`.
    fn shifted_cap(&self, cap: QExp, lambda: &Rat) -> QExp {
        if lambda.is_zero() {
            return cap;
        }
        let t = &self.index;
        let n1 = (cap + QExp::from_units(1)).to_rat();
        let lam = lambda.abs();
        let lowest = if t.is_zero() {
            n1.clone()
        } else {
            let stationary = (rat(4) * t * t * &lam * &lam - &self.slack) / (rat(4) * t);
            if stationary > n1 {
                -(t * &lam * &lam) - &self.slack / (rat(4) * t)
            } else {
                let x = rat(4) * t * &n1 + &self.slack;
                let m = BigInt::from(Q_DEN * Q_DEN);
                let scaled = (&x * Rat::from_integer(&m * &m)).ceil().to_integer();
                let mut s = scaled.sqrt();
                if &s * &s < scaled {
                    s += 1;
                }
                n1 - lam * Rat::new(s, m)
            }
        };
        let k = (lowest * rat(Q_DEN)).ceil().to_integer() - 1;
        QExp::from_units(i64::try_from(k).expect("cap fits in i64"))
    }
}

impl FourierSeries<YLaurent> {
    /// `y -> y^h`, the index-multiplying substitution `z -> h z`.
    pub fn substitute_power(&self, h: i64) -> Self {
        self.map_coeffs(|c| c.substitute_power(h))
    }

    /// `y -> exp(2 pi i mu) q^lambda`.
    ///
    /// Root-of-unity values land in the smallest supported cyclotomic field;
    /// the cap is lowered using `bound` so every retained term is exact.
    pub fn specialize(
        &self,
        mu: &Rat,
        lambda: &Rat,
        bound: &LaurentBound,
    ) -> Result<FourierSeries<Cyclotomic>> {
        let mut order = 1i64;
        for (_, c) in self.terms() {
            for (h, _) in c.terms() {
                let angle = frac01(&(mu * Rat::new((*h).into(), 2.into())));
                order = order.lcm(&i64::try_from(angle.denom().clone()).map_err(|_| {
                    Error::Unsupported(format!("root of unity for mu = {mu}"))
                })?);
            }
        }
        let order = u32::try_from(order).map_err(|_| Error::Unsupported("root order".into()))?;
        check_order(order)?;
        let cap = bound.shifted_cap(self.cap(), lambda);
        let mut out: BTreeMap<QExp, Cyclotomic> = BTreeMap::new();
        for (e, c) in self.terms() {
            for (h, v) in c.terms() {
                let half = Rat::new((*h).into(), 2.into());
                let shift = QExp::from_rat(&(lambda * &half))?;
                let ne = e + shift;
                if ne > cap {
                    continue;
                }
                let angle = frac01(&(mu * &half)) * rat(order as i64);
                let k = angle.to_integer().try_into().expect("small root exponent");
                let z = Cyclotomic::root(order, k)?.scale(v);
                out.entry(ne).and_modify(|acc| *acc = acc.add(&z)).or_insert(z);
            }
        }
        Ok(FourierSeries::from_terms(out, cap))
    }

    /// `y -> zeta_n^k`.
    pub fn at_root_of_unity(&self, n: u32, k: i64) -> Result<FourierSeries<Cyclotomic>> {
        check_order(n)?;
        self.specialize(&Rat::new(k.into(), (n as i64).into()), &Rat::zero(), &LaurentBound::weak(Rat::zero()))
    }

    /// `y -> 1` as a rational series.
    pub fn at_one(&self) -> FourierSeries<Rat> {
        self.map_coeffs(|c| c.at_one())
    }
}

fn frac01(x: &Rat) -> Rat {
    x - x.floor()
}

/// `y -> e^w`, returning the Taylor jet in `w` through `w^order`.
pub fn jet_substitute(s: &FourierSeries<YLaurent>, order: usize) -> UJet<Rat> {
    let coeffs = (0..=order)
        .map(|k| {
            let fk = inv_factorial(k as u32);
            FourierSeries::from_terms(
                s.terms().map(|(e, c)| {
                    let v: Rat = c
                        .terms()
                        .iter()
                        .map(|(h, a)| a * Rat::new((*h).into(), 2.into()).pow(k as i32))
                        .sum();
                    (e, v * &fk)
                }),
                s.cap(),
            )
        })
        .collect();
    UJet::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn phi01_q0() -> FourierSeries<YLaurent> {
        FourierSeries::constant(YLaurent::from_ints(&[(1, 1), (0, 10), (-1, 1)]), QExp::int(3))
    }

    #[test]
    fn identity_power() {
        let s = phi01_q0();
        assert_eq!(s.substitute_power(1), s);
    }

    #[test]
    fn trivial_root_equals_one() {
        let s = phi01_q0();
        let a = s.at_root_of_unity(1, 0).unwrap().map_coeffs(|c| c.to_rat().unwrap());
        assert_eq!(a, s.at_one());
        assert_eq!(a.coeff(QExp::ZERO).unwrap(), rat(12));
    }

    #[test]
    fn unsupported_order() {
        assert!(phi01_q0().at_root_of_unity(5, 1).is_err());
        let half = FourierSeries::constant(YLaurent::y_half(1), QExp::int(1));
        assert!(half.at_root_of_unity(6, 1).is_err());
    }

    #[test]
    fn q_shift_lowers_cap() {
        let b = LaurentBound::weak(rat(1));
        // n1 = 3 + 1/24, sqrt(4 n1 + 1) just above 3.6, times 1/2
        let c = b.shifted_cap(QExp::int(3), &ratio(1, 2));
        assert!(c < QExp::int(3) && c > QExp::int(1));
        assert_eq!(b.shifted_cap(QExp::int(3), &Rat::zero()), QExp::int(3));
    }

    #[test]
    fn jet_of_y_plus_inverse() {
        let s = FourierSeries::constant(YLaurent::from_ints(&[(1, 1), (-1, 1)]), QExp::int(0));
        let j = jet_substitute(&s, 4);
        assert_eq!(j.coeff(0).coeff(QExp::ZERO).unwrap(), rat(2));
        assert!(j.coeff(1).is_zero());
        assert_eq!(j.coeff(2).coeff(QExp::ZERO).unwrap(), rat(1));
        assert_eq!(j.coeff(4).coeff(QExp::ZERO).unwrap(), ratio(1, 12));
    }
}
