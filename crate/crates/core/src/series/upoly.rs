//! Dense univariate polynomials over the rationals, index = degree.

use num_traits::Zero;

use crate::rat::Rat;

pub(crate) fn trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Quotient and remainder; `b` must be nonzero and trimmed.
pub(crate) fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b[b.len() - 1].recip();
    let mut q = vec![Rat::zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = &r[k + b.len() - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

/// Monic greatest common divisor.
pub(crate) fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
        if let Some(l) = y.last().cloned() {
            let inv = l.recip();
            y.iter_mut().for_each(|c| *c *= &inv);
        }
    }
    if let Some(l) = x.last().cloned() {
        let inv = l.recip();
        x.iter_mut().for_each(|c| *c *= &inv);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(c: &[i64]) -> Vec<Rat> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1 - t)^2 (1 + t) and (1 - t)(2 + t)
        let a = p(&[1, -1, -1, 1]);
        let b = p(&[2, -1, -1]);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn divrem_exact() {
        let (q, r) = divrem(&p(&[-1, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_empty());
    }
}
