//! Exact linear algebra: Hermite normal form over the integers and
//! reduced row echelon form over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Row-style Hermite normal form `U * A = H` with `U` unimodular.
#[derive(Clone, Debug, PartialEq)]
pub struct Hnf {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, columns strictly increasing.
    pub pivots: Vec<(usize, usize)>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn axpy(dst: &mut [BigInt], k: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= k * s;
    }
}

/// Hermite normal form of the row lattice of `a` (`a` has `n` rows of equal length).
pub fn hnf(a: &[Vec<BigInt>]) -> Hnf {
    let n = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == n {
            break;
        }
        loop {
            let best = (r..n)
                .filter(|&i| !h[i][col].is_zero())
                .min_by(|&i, &j| h[i][col].abs().cmp(&h[j][col].abs()));
            let Some(best) = best else { break };
            h.swap(r, best);
            u.swap(r, best);
            let mut done = true;
            for i in r + 1..n {
                if h[i][col].is_zero() {
                    continue;
                }
                let k = h[i][col].div_floor(&h[r][col]);
                let (hr, ur) = (h[r].clone(), u[r].clone());
                axpy(&mut h[i], &k, &hr);
                axpy(&mut u[i], &k, &ur);
                if !h[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][col].is_zero() {
            continue;
        }
        if h[r][col].is_negative() {
            h[r].iter_mut().for_each(|x| *x = -&*x);
            u[r].iter_mut().for_each(|x| *x = -&*x);
        }
        for i in 0..r {
            let k = h[i][col].div_floor(&h[r][col]);
            if !k.is_zero() {
                let (hr, ur) = (h[r].clone(), u[r].clone());
                axpy(&mut h[i], &k, &hr);
                axpy(&mut u[i], &k, &ur);
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    Hnf { h, u, pivots }
}

/// Integer coefficients `x` with `sum x_i a_i = target`, if the target lies
/// in the row lattice.
pub fn solve_integer(a: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    solve_with_hnf(&hnf(a), target)
}

pub fn solve_with_hnf(f: &Hnf, target: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut b = target.to_vec();
    let mut x = vec![BigInt::zero(); f.u.len()];
    for &(r, c) in &f.pivots {
        let p = &f.h[r][c];
        let (k, rem) = b[c].div_rem(p);
        if !rem.is_zero() {
            return None;
        }
        axpy(&mut b, &k, &f.h[r]);
        for (xi, ui) in x.iter_mut().zip(&f.u[r]) {
            *xi += &k * ui;
        }
    }
    b.iter().all(Zero::is_zero).then_some(x)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        m[r].iter_mut().for_each(|x| *x *= &inv);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &k * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Solution set of `A x = b`: a particular solution (free variables zero)
/// and a basis of the kernel. `None` when inconsistent.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n].clone();
    }
    let mut kernel = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[f] = Rat::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][f].clone();
        }
        kernel.push(v);
    }
    Some((x, kernel))
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive(v: &[Rat]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}
