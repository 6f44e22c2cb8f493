use std::collections::BTreeSet;

use num_traits::Zero;

use super::JacobiForm;
use crate::error::{Error, Result};
use crate::rat::{rat, to_lattice, Rat};
use crate::series::{QExp, Q_DEN};

/// First coefficient pair violating the elliptic transformation law.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticWitness {
    /// `(q-exponent, y-exponent in half-units)` of the left coefficient.
    pub left_at: (QExp, i64),
    /// Where the law says the matching coefficient lives.
    pub right_at: (QExp, i64),
    pub left: Rat,
    pub right: Rat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EllipticReport {
    pub lambda: i64,
    pub pairs_compared: usize,
    pub witness: Option<EllipticWitness>,
}

impl EllipticReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Formal check of `phi(tau, z + tau) = (-1)^(2t) q^(-t) y^(-2t) phi(tau, z)`.
pub fn elliptic_check(a: &JacobiForm) -> Result<EllipticReport> {
    elliptic_check_lambda(a, 1)
}

/// The same law for the shift `z -> z + lambda tau`:
/// `f(n, l) = (-1)^(2 t lambda) f(n + lambda l + t lambda^2, l + 2 t lambda)`,
/// compared on every pair with both sides inside the cap.
pub fn elliptic_check_lambda(a: &JacobiForm, lambda: i64) -> Result<EllipticReport> {
    if lambda < 1 {
        return Err(Error::Precondition("lambda must be positive".into()));
    }
    let t = &a.index;
    let need = QExp::from_rat(&(t * rat(2) + rat(2)))?;
    if a.cap() < need {
        return Err(Error::CapUnderflow { needed: need.to_string(), available: a.cap().to_string() });
    }
    let two_t_lambda = to_lattice(&(t * rat(2 * lambda)), 1)
        .ok_or_else(|| Error::Precondition(format!("index {t} is not half-integral")))?;
    let sign = if two_t_lambda.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
    let shift_q = QExp::from_rat(&(t * rat(lambda * lambda)))?;
    // y-exponent shift 2 t lambda, in half-units
    let shift_h = 2 * two_t_lambda;
    let cap = a.cap();
    let target = |n: QExp, h: i64| -> (QExp, i64) {
        let dq = QExp::from_units(lambda * h * Q_DEN / 2);
        (n + dq + shift_q, h + shift_h)
    };
    let mut pairs: BTreeSet<(QExp, i64)> = BTreeSet::new();
    for (n, c) in a.series.terms() {
        for (h, _) in c.terms() {
            pairs.insert((n, *h));
            // the source whose image is (n, h)
            let sh = h - shift_h;
            let sn = n - shift_q - QExp::from_units(lambda * sh * Q_DEN / 2);
            pairs.insert((sn, sh));
        }
    }
    let get = |n: QExp, h: i64| -> Rat {
        a.series.get(n).map(|c| c.coeff(h)).unwrap_or_else(Rat::zero)
    };
    let mut compared = 0;
    for (n, h) in pairs {
        let (tn, th) = target(n, h);
        if n > cap || tn > cap {
            continue;
        }
        compared += 1;
        let left = get(n, h);
        let right = &sign * get(tn, th);
        if left != right {
            return Ok(EllipticReport {
                lambda,
                pairs_compared: compared,
                witness: Some(EllipticWitness { left_at: (n, h), right_at: (tn, th), left, right }),
            });
        }
    }
    Ok(EllipticReport { lambda, pairs_compared: compared, witness: None })
}
