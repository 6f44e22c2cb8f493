use crate::error::Result;
use crate::rat::{rat, Rat};
use crate::series::{FourierSeries, QExp, YLaurent};

use super::modular::eta;

/// Multiplies by `1 + c q^k`, keeping the cap.
pub(crate) fn times_binomial(s: &FourierSeries<YLaurent>, k: QExp, c: &YLaurent) -> FourierSeries<YLaurent> {
    s.add(&s.shift(k).mul_coeff(c).lower_cap(s.cap()))
}

/// Odd Jacobi theta series `sum_{n odd} (-1)^((n-1)/2) q^(n^2/8) y^(n/2)`.
pub fn theta_sum(cap: QExp) -> FourierSeries<YLaurent> {
    let mut terms = Vec::new();
    let mut n: i64 = 1;
    while 3 * n * n <= cap.units() {
        let sign = |m: i64| if ((m - 1) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        let c = YLaurent::from_terms([(n, rat(sign(n))), (-n, rat(sign(-n)))]);
        terms.push((QExp::from_units(3 * n * n), c));
        n += 2;
    }
    FourierSeries::from_terms(terms, cap)
}

/// The triple product `-q^(1/8) y^(-1/2) prod (1-q^(n-1) y)(1-q^n/y)(1-q^n)`.
pub fn theta_product(cap: QExp) -> FourierSeries<YLaurent> {
    let lead = QExp::new(1, 8).expect("1/8 on lattice");
    let mut s = FourierSeries::monomial(lead, YLaurent::monomial(-1, rat(-1)), cap);
    let minus = |h: i64| YLaurent::monomial(h, rat(-1));
    s = times_binomial(&s, QExp::ZERO, &minus(2));
    let mut n = 1;
    while QExp::int(n) + lead <= cap {
        s = times_binomial(&s, QExp::int(n), &minus(2));
        s = times_binomial(&s, QExp::int(n), &minus(-2));
        s = times_binomial(&s, QExp::int(n), &minus(0));
        n += 1;
    }
    s
}

/// The quintuple product
/// `q^(1/24) y^(-1/2) prod (1+q^(n-1) y)(1+q^n/y)(1-q^(2n-1) y^2)(1-q^(2n-1) y^-2)(1-q^n)`.
pub fn theta_3half_product(cap: QExp) -> FourierSeries<YLaurent> {
    let lead = QExp::from_units(1);
    let mut s = FourierSeries::monomial(lead, YLaurent::y_half(-1), cap);
    let plus = |h: i64| YLaurent::y_half(h);
    let minus = |h: i64| YLaurent::monomial(h, rat(-1));
    s = times_binomial(&s, QExp::ZERO, &plus(2));
    let mut n = 1;
    while QExp::int(n) + lead <= cap {
        s = times_binomial(&s, QExp::int(n), &plus(-2));
        s = times_binomial(&s, QExp::int(n), &minus(0));
        s = times_binomial(&s, QExp::int(n), &plus(2));
        s = times_binomial(&s, QExp::int(2 * n - 1), &minus(4));
        s = times_binomial(&s, QExp::int(2 * n - 1), &minus(-4));
        n += 1;
    }
    s
}

/// The three even level-two theta series and related quotients.
#[derive(Clone, Debug, PartialEq)]
pub struct Level2Thetas {
    pub theta00: FourierSeries<YLaurent>,
    pub theta01: FourierSeries<YLaurent>,
    pub theta10: FourierSeries<YLaurent>,
    pub xi00: FourierSeries<YLaurent>,
    pub xi01: FourierSeries<YLaurent>,
    pub xi10: FourierSeries<YLaurent>,
    /// `theta00(2 tau) / theta01(2 tau)` at `z = 0`.
    pub gamma: FourierSeries<Rat>,
}

/// `sum_n q^(n^2/2) y^n` with signs `(-1)^n` when `alternating`.
fn theta_even(cap: QExp, alternating: bool) -> FourierSeries<YLaurent> {
    let mut terms = vec![(QExp::ZERO, YLaurent::one())];
    let mut n: i64 = 1;
    while 12 * n * n <= cap.units() {
        let s = if alternating && n % 2 == 1 { -1 } else { 1 };
        terms.push((QExp::from_units(12 * n * n), YLaurent::from_ints(&[(n, s), (-n, s)])));
        n += 1;
    }
    FourierSeries::from_terms(terms, cap)
}

/// `sum_n q^((n+1/2)^2/2) y^(n+1/2)`.
fn theta_odd_char(cap: QExp) -> FourierSeries<YLaurent> {
    let mut terms = Vec::new();
    let mut k: i64 = 1;
    while 3 * k * k <= cap.units() {
        terms.push((QExp::from_units(3 * k * k), YLaurent::from_terms([(k, rat(1)), (-k, rat(1))])));
        k += 2;
    }
    FourierSeries::from_terms(terms, cap)
}

pub fn level2_thetas(cap: QExp) -> Result<Level2Thetas> {
    let theta00 = theta_even(cap, false);
    let theta01 = theta_even(cap, true);
    let theta10 = theta_odd_char(cap);
    let at_zero = |s: &FourierSeries<YLaurent>| FourierSeries::from_scalar(&s.at_one());
    let xi00 = theta00.div(&at_zero(&theta00))?;
    let xi01 = theta01.div(&at_zero(&theta01))?;
    let xi10 = theta10.div(&at_zero(&theta10))?;
    let g_num = theta_even(cap, false).at_one().rescale_q(2).lower_cap(cap);
    let g_den = theta_even(cap, true).at_one().rescale_q(2).lower_cap(cap);
    let gamma = g_num.div(&g_den)?;
    Ok(Level2Thetas { theta00, theta01, theta10, xi00, xi01, xi10, gamma })
}

/// `eta(tau) theta(tau, 2z) / theta(tau, z)`.
pub fn theta_3half_quotient(cap: QExp) -> Result<FourierSeries<YLaurent>> {
    let pad = cap + QExp::int(1);
    let th = theta_sum(pad);
    let q = th.substitute_power(2).div(&th)?;
    q.mul(&FourierSeries::from_scalar(&eta(pad))).truncate(cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_leading_terms() {
        let t = theta_sum(QExp::int(2));
        let lead = t.leading().unwrap();
        assert_eq!(lead.0, QExp::new(1, 8).unwrap());
        assert_eq!(lead.1, &YLaurent::from_terms([(1, rat(1)), (-1, rat(-1))]));
        let c = t.coeff(QExp::new(9, 8).unwrap()).unwrap();
        assert_eq!(c, YLaurent::from_terms([(3, rat(-1)), (-3, rat(1))]));
    }

    #[test]
    fn sum_equals_product_small() {
        let cap = QExp::int(4);
        assert_eq!(theta_sum(cap), theta_product(cap));
    }

    #[test]
    fn gamma_starts_at_one() {
        let l = level2_thetas(QExp::int(3)).unwrap();
        assert_eq!(l.gamma.coeff(QExp::ZERO).unwrap(), rat(1));
        assert_eq!(l.gamma.coeff(QExp::int(1)).unwrap(), rat(4));
    }

    #[test]
    fn quintuple_small() {
        let cap = QExp::int(3);
        assert_eq!(theta_3half_product(cap), theta_3half_quotient(cap).unwrap());
    }
}
