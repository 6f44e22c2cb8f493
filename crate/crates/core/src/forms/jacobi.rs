use crate::error::{Error, Result};
use crate::rat::{rat, Rat};
use crate::series::{FourierSeries, QExp, YLaurent, YRational};

use super::modular::{eta_power, g2k};
use super::theta::theta_sum;

fn lift(s: &FourierSeries<Rat>) -> FourierSeries<YLaurent> {
    FourierSeries::from_scalar(s)
}

fn padded(cap: QExp) -> QExp {
    cap + QExp::int(1)
}

/// `phi_{-1,1/2} = theta / eta^3`.
pub fn phi_m1_half(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    let p = padded(cap);
    theta_sum(p).div(&lift(&eta_power(3, p)?))?.truncate(cap)
}

/// `phi_{-2,1} = theta^2 / eta^6`.
pub fn phi_m2_1(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    let p = padded(cap);
    theta_sum(p).pow(2).div(&lift(&eta_power(6, p)?))?.truncate(cap)
}

/// `phi_{0,1} = 12 ((D theta)^2 - theta D^2 theta - 2 G_2 theta^2) / eta^6`,
/// which is `12 P_2 phi_{-2,1}` with the poles of `P_2` already cleared.
pub fn phi_0_1(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    let p = padded(cap);
    let th = theta_sum(p);
    let d1 = th.y_ddy();
    let d2 = d1.y_ddy();
    let g2 = lift(&g2k(1, p)?);
    let num = d1.pow(2).sub(&th.mul(&d2)).sub(&g2.mul(&th.pow(2)).scale(&rat(2)));
    num.scale(&rat(12)).div(&lift(&eta_power(6, p)?))?.truncate(cap)
}

/// Kronecker symbol `(-4 / m)`.
pub fn chi_m4(m: i64) -> i64 {
    match m.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// Kronecker symbol `(12 / n)`.
pub fn chi_12(n: i64) -> i64 {
    match n.rem_euclid(12) {
        1 | 11 => 1,
        5 | 7 => -1,
        _ => 0,
    }
}

/// `phi_{0,2} = (1/2) eta^-4 sum (3m - n) (-4/m) (12/n) q^((3m^2+n^2)/24) y^((m+n)/2)`.
pub fn phi_0_2(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    let p = padded(cap);
    let limit = p.units() + 4;
    let mut terms = Vec::new();
    let mut m: i64 = 1;
    while 3 * m * m <= limit {
        for ms in [m, -m] {
            let mut n: i64 = 1;
            while 3 * m * m + n * n <= limit {
                for ns in [n, -n] {
                    let c = (3 * ms - ns) * chi_m4(ms) * chi_12(ns);
                    if c != 0 {
                        terms.push((
                            QExp::from_units(3 * m * m + n * n),
                            YLaurent::monomial(ms + ns, rat(c)),
                        ));
                    }
                }
                n += 2;
            }
        }
        m += 2;
    }
    let sum = FourierSeries::from_terms(terms, QExp::from_units(limit));
    let half = Rat::new(1.into(), 2.into());
    sum.mul(&lift(&eta_power(-4, p)?)).scale(&half).truncate(cap)
}

/// `theta(tau, h z) / theta(tau, z)`.
fn theta_ratio(h: i64, cap: QExp) -> Result<FourierSeries<YLaurent>> {
    let th = theta_sum(padded(cap));
    th.substitute_power(h).div(&th)?.truncate(cap)
}

/// `phi_{0,3/2} = theta(tau, 2z) / theta(tau, z)`.
pub fn phi_0_3half(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    theta_ratio(2, cap)
}

/// `phi_{0,3} = phi_{0,3/2}^2`.
pub fn phi_0_3(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    Ok(phi_0_3half(cap)?.pow(2))
}

/// `phi_{0,4} = theta(tau, 3z) / theta(tau, z)`.
pub fn phi_0_4(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    theta_ratio(3, cap)
}

/// `xi_{0,6} = theta^12 / eta^12`.
pub fn xi_0_6(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    let p = padded(cap);
    theta_sum(p).pow(12).div(&lift(&eta_power(12, p)?))?.truncate(cap)
}

/// `D theta / theta` with `D = y d/dy`.
pub fn dlog_theta(cap: QExp) -> Result<FourierSeries<YRational>> {
    let p = padded(cap);
    let th = theta_sum(p).shift(QExp::new(-1, 8)?);
    th.y_ddy().to_rational().div(&th.to_rational())?.truncate(cap)
}

/// The normalized Weierstrass jets `P_2, ..., P_nmax`, where
/// `P_2 = -D^2 log theta - 2 G_2` and `P_{n+1} = D P_n`.
pub fn wp_jets(nmax: u32, cap: QExp) -> Result<Vec<FourierSeries<YRational>>> {
    if nmax < 2 {
        return Err(Error::Precondition("wp_jets needs nmax >= 2".into()));
    }
    let g2 = g2k(1, cap)?.map_coeffs(|c| YRational::from_laurent(YLaurent::constant(c.clone())));
    let p2 = dlog_theta(cap)?.y_ddy().neg().sub(&g2.scale(&rat(2)));
    let mut out = vec![p2];
    for _ in 3..=nmax {
        let next = out.last().expect("nonempty").y_ddy();
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{Coeff, YRational};

    #[test]
    fn q0_terms_of_generators() {
        let cap = QExp::int(1);
        let q0 = |s: FourierSeries<YLaurent>| s.coeff(QExp::ZERO).unwrap();
        assert_eq!(q0(phi_0_1(cap).unwrap()), YLaurent::from_ints(&[(1, 1), (0, 10), (-1, 1)]));
        assert_eq!(q0(phi_0_2(cap).unwrap()), YLaurent::from_ints(&[(1, 1), (0, 4), (-1, 1)]));
        assert_eq!(q0(phi_0_3(cap).unwrap()), YLaurent::from_ints(&[(1, 1), (0, 2), (-1, 1)]));
        assert_eq!(q0(phi_0_4(cap).unwrap()), YLaurent::from_ints(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(q0(phi_m2_1(cap).unwrap()), YLaurent::from_ints(&[(1, 1), (0, -2), (-1, 1)]));
    }

    #[test]
    fn p2_constant_term() {
        let p = wp_jets(3, QExp::int(1)).unwrap();
        let c = p[0].coeff(QExp::ZERO).unwrap();
        let one_minus_y = YLaurent::from_ints(&[(0, 1), (1, -1)]);
        let expect = YRational::new(YLaurent::y_half(2), one_minus_y.pow(2))
            .unwrap()
            .add(&YRational::from_rat(Rat::new(1.into(), 12.into())));
        assert_eq!(c, expect);
        let p3 = p[1].coeff(QExp::int(1)).unwrap();
        assert_eq!(p3.mirror(), p3.neg());
    }

    #[test]
    fn dlog_theta_matches_product_formula() {
        let cap = QExp::int(4);
        let d = dlog_theta(cap).unwrap();
        let one_minus_y = YLaurent::from_ints(&[(0, 1), (1, -1)]);
        let c0 = YRational::new(YLaurent::y_half(2).neg(), one_minus_y)
            .unwrap()
            .add(&YRational::from_rat(Rat::new((-1).into(), 2.into())));
        assert_eq!(d.coeff(QExp::ZERO).unwrap(), c0);
        for n in 1..=4i64 {
            let mut terms = Vec::new();
            for k in 1..=n {
                if n % k == 0 {
                    terms.push((-2 * k, rat(1)));
                    terms.push((2 * k, rat(-1)));
                }
            }
            let expect = YRational::from_laurent(YLaurent::from_terms(terms));
            assert_eq!(d.coeff(QExp::int(n)).unwrap(), expect, "q^{n}");
        }
    }
}
