use crate::error::{Error, Result};
use crate::rat::{bernoulli, divisor_sigma, rat, Rat};
use crate::series::{FourierSeries, QExp};

/// Dedekind eta via the pentagonal number theorem,
/// `sum_k (-1)^k q^((6k+1)^2/24)`.
pub fn eta(cap: QExp) -> FourierSeries<Rat> {
    let mut terms = Vec::new();
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for j in [k, -k - 1] {
            let e = (6 * j + 1) * (6 * j + 1);
            if e <= cap.units() {
                any = true;
                terms.push((QExp::from_units(e), rat(if j.rem_euclid(2) == 0 { 1 } else { -1 })));
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    FourierSeries::from_terms(terms, cap)
}

/// `eta^k` through `cap`, for any integer `k`.
pub fn eta_power(k: i64, cap: QExp) -> Result<FourierSeries<Rat>> {
    // eta^k has valuation k/24, so the input needs a margin of 2|k|/24
    let pad = cap + QExp::from_units(2 * k.abs() + 1);
    eta(pad).pow_int(k)?.truncate(cap)
}

/// `Delta = eta^24 = q prod (1 - q^n)^24`.
pub fn delta(cap: QExp) -> Result<FourierSeries<Rat>> {
    eta_power(24, cap)
}

/// `G_{2k} = -B_{2k}/(4k) + sum sigma_{2k-1}(n) q^n`, for `k >= 1`.
pub fn g2k(k: u32, cap: QExp) -> Result<FourierSeries<Rat>> {
    if k == 0 {
        return Err(Error::Precondition("G_2k needs k >= 1".into()));
    }
    let b = bernoulli(2 * k as usize);
    let c0 = -&b[2 * k as usize] / rat(4 * k as i64);
    let mut terms = vec![(QExp::ZERO, c0)];
    let mut n = 1i64;
    while QExp::int(n) <= cap {
        terms.push((QExp::int(n), Rat::from_integer(divisor_sigma(n as u64, 2 * k - 1))));
        n += 1;
    }
    Ok(FourierSeries::from_terms(terms, cap))
}

/// Eisenstein series of weight `w` normalized to constant term 1.
pub fn eisenstein(w: u32, cap: QExp) -> Result<FourierSeries<Rat>> {
    if w < 2 || w % 2 == 1 {
        return Err(Error::Precondition(format!("no Eisenstein series of weight {w}")));
    }
    let g = g2k(w / 2, cap)?;
    let c0 = g.coeff(QExp::ZERO)?;
    Ok(g.scale(&c0.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn eta_first_terms() {
        let e = eta(QExp::int(3));
        let norm = e.shift(QExp::from_units(-1));
        let expect: Vec<(QExp, Rat)> =
            [(0, 1), (1, -1), (2, -1)].iter().map(|&(n, c)| (QExp::int(n), rat(c))).collect();
        assert_eq!(norm.lower_cap(QExp::int(2)), FourierSeries::from_terms(expect, QExp::int(2)));
    }

    #[test]
    fn delta_coefficients() {
        let d = delta(QExp::int(4)).unwrap();
        let c: Vec<Rat> = (1..=4).map(|n| d.coeff(QExp::int(n)).unwrap()).collect();
        assert_eq!(c, vec![rat(1), rat(-24), rat(252), rat(-1472)]);
    }

    #[test]
    fn g2_constant() {
        let g = g2k(1, QExp::int(3)).unwrap();
        assert_eq!(g.coeff(QExp::ZERO).unwrap(), ratio(-1, 24));
        assert_eq!(g.coeff(QExp::int(2)).unwrap(), rat(3));
        let e4 = eisenstein(4, QExp::int(2)).unwrap();
        assert_eq!(e4.coeff(QExp::int(1)).unwrap(), rat(240));
        let e6 = eisenstein(6, QExp::int(2)).unwrap();
        assert_eq!(e6.coeff(QExp::int(1)).unwrap(), rat(-504));
    }

    #[test]
    fn negative_eta_power() {
        let cap = QExp::int(3);
        let a = eta_power(-4, cap).unwrap();
        let b = eta_power(4, cap + QExp::int(1)).unwrap();
        assert_eq!(a.cap(), cap);
        let one = a.mul(&b);
        assert!(one.first_mismatch(&FourierSeries::one(cap)).is_none());
    }
}
