use std::collections::BTreeMap;

use num_integer::{Integer, Roots};

use crate::forms::chi_m4;
use crate::rat::{rat, Rat};
use crate::series::{FourierSeries, QExp, YLaurent};

/// Fourier coefficients of `Delta_2` at `q^(n/4) y^(l/2) s^(m/2)`, keyed by `(n, l, m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelSeries {
    pub terms: BTreeMap<(i64, i64, i64), Rat>,
    /// Every `(n, l, m)` with `n + m <= bound` is present if nonzero.
    pub bound: i64,
}

impl SiegelSeries {
    pub fn coeff(&self, n: i64, l: i64, m: i64) -> Rat {
        self.terms.get(&(n, l, m)).cloned().unwrap_or_else(|| rat(0))
    }

    /// The coefficient of `s^(m/2)` as a series in `q` and `y`, complete
    /// through `q^((bound - m)/4)`.
    pub fn slice(&self, m: i64) -> FourierSeries<YLaurent> {
        let mut by_q: BTreeMap<i64, Vec<(i64, Rat)>> = BTreeMap::new();
        for ((n, l, mm), v) in &self.terms {
            if *mm == m {
                by_q.entry(*n).or_default().push((*l, v.clone()));
            }
        }
        let cap = QExp::from_units((self.bound - m) * 6);
        FourierSeries::from_terms(by_q.into_iter().map(|(n, t)| (QExp::from_units(6 * n), YLaurent::from_terms(t))), cap)
    }
}

/// `sum N (-4/Nl) sum_{a | (n, l, m)} (-4/a) q^(n/4) y^(l/2) s^(m/2)` over
/// `n, m = 1 mod 4`, `2nm - l^2 = N^2 > 0`, `n + m <= bound`.
pub fn delta2_expand(bound: i64) -> SiegelSeries {
    let mut terms = BTreeMap::new();
    let mut n = 1;
    while n < bound {
        let mut m = 1;
        while n + m <= bound {
            let disc = 2 * n * m;
            let lmax = disc.sqrt();
            for l in -lmax..=lmax {
                let r = disc - l * l;
                if r <= 0 {
                    continue;
                }
                let big_n = r.sqrt();
                if big_n * big_n != r {
                    continue;
                }
                let g = n.gcd(&l).gcd(&m);
                let sigma: i64 = (1..=g).filter(|a| g % a == 0).map(chi_m4).sum();
                let c = big_n * chi_m4(big_n * l) * sigma;
                if c != 0 {
                    terms.insert((n, l, m), rat(c));
                }
            }
            m += 4;
        }
        n += 4;
    }
    SiegelSeries { terms, bound }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{eta_power, theta_sum};

    #[test]
    fn first_coefficients() {
        let s = delta2_expand(10);
        assert_eq!(s.coeff(1, 1, 1), rat(1));
        assert_eq!(s.coeff(1, -1, 1), rat(-1));
        assert_eq!(s.coeff(1, 3, 1), rat(0));
        for ((n, l, m), v) in &s.terms {
            assert_eq!(s.coeff(*n, -l, *m), -v.clone());
        }
    }

    #[test]
    fn first_slice_is_eta_cubed_theta() {
        let s = delta2_expand(13);
        let cap = QExp::int(3);
        let e3 = FourierSeries::from_scalar(&eta_power(3, QExp::int(4)).unwrap());
        let oracle = e3.mul(&theta_sum(QExp::int(4)));
        assert!(s.slice(1).agrees_through(&oracle, cap).unwrap().is_none());
    }
}
