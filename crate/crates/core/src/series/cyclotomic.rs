use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Coeff;
use crate::error::{Error, Result};
use crate::rat::{fmt_rat, rat, Rat};

/// Orders of roots of unity whose cyclotomic field has degree at most two.
pub const SUPPORTED_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

/// Element `a + b*zeta_N` of `Q(zeta_N)` for `N` in {1, 2, 3, 4, 6}.
///
/// Rational elements are always stored with `N = 1`, so they mix freely with
/// any order. Combining irrational elements of orders 4 and 3 or 6 panics: no
/// supported field contains both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u32,
    a: Rat,
    b: Rat,
}

impl Cyclotomic {
    pub fn rational(r: Rat) -> Self {
        Cyclotomic { n: 1, a: r, b: Rat::zero() }
    }

    pub fn new(n: u32, a: Rat, b: Rat) -> Result<Self> {
        check_order(n)?;
        Ok(Self::normalized(n, a, b))
    }

    fn normalized(n: u32, a: Rat, b: Rat) -> Self {
        match n {
            1 => Cyclotomic { n: 1, a: a + b, b: Rat::zero() },
            2 => Cyclotomic { n: 1, a: a - b, b: Rat::zero() },
            _ if b.is_zero() => Cyclotomic { n: 1, a, b },
            _ => Cyclotomic { n, a, b },
        }
    }

    /// `zeta_n^k` with `zeta_n = exp(2 pi i / n)`.
    pub fn root(n: u32, k: i64) -> Result<Self> {
        check_order(n)?;
        let k = k.rem_euclid(n as i64);
        let (a, b) = match (n, k) {
            (_, 0) => (1, 0),
            (2, 1) => (-1, 0),
            (3, 1) => (0, 1),
            (3, 2) => (-1, -1),
            (4, 1) => (0, 1),
            (4, 2) => (-1, 0),
            (4, 3) => (0, -1),
            (6, 1) => (0, 1),
            (6, 2) => (-1, 1),
            (6, 3) => (-1, 0),
            (6, 4) => (0, -1),
            (6, 5) => (1, -1),
            _ => unreachable!("k reduced mod n"),
        };
        Ok(Self::normalized(n, rat(a), rat(b)))
    }

    /// Order of the generator used for the stored coordinates (1 if rational).
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coords(&self) -> (&Rat, &Rat) {
        (&self.a, &self.b)
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.b.is_zero().then(|| self.a.clone())
    }

    /// Coordinates in the basis `1, zeta_to`.
    fn lift(&self, to: u32) -> (Rat, Rat) {
        match (self.n, to) {
            (1, _) => (self.a.clone(), Rat::zero()),
            (x, y) if x == y => (self.a.clone(), self.b.clone()),
            (3, 6) => (&self.a - &self.b, self.b.clone()),
            (x, y) => panic!("ring mismatch: Q(zeta_{x}) and Q(zeta_{y}) have no supported compositum"),
        }
    }

    fn common(&self, other: &Self) -> u32 {
        match (self.n, other.n) {
            (1, m) | (m, 1) => m,
            (x, y) if x == y => x,
            (3, 6) | (6, 3) => 6,
            (x, y) => panic!("ring mismatch: Q(zeta_{x}) and Q(zeta_{y}) have no supported compositum"),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common(other);
        let (a, b) = self.lift(n);
        let (c, d) = other.lift(n);
        Self::normalized(n, a + c, b + d)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { n: self.n, a: -&self.a, b: -&self.b }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common(other);
        let (a, b) = self.lift(n);
        let (c, d) = other.lift(n);
        let bd = &b * &d;
        let (x, y) = (&a * &c, &a * &d + &b * &c);
        // zeta^2 reduced by the minimal polynomial
        let (x, y) = match n {
            1 => (x, y),
            3 => (x - &bd, y - bd),
            4 => (x - bd, y),
            6 => (x - &bd, y + bd),
            _ => unreachable!("orders checked at construction"),
        };
        Self::normalized(n, x, y)
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        let (a, b) = (&self.a, &self.b);
        match self.n {
            3 => Self::normalized(3, a - b, -b),
            4 => Self::normalized(4, a.clone(), -b),
            6 => Self::normalized(6, a + b, -b),
            _ => self.clone(),
        }
    }

    /// Field norm `x * conj(x)`, a rational.
    pub fn norm(&self) -> Rat {
        self.mul(&self.conj()).to_rat().expect("norm of a quadratic element is rational")
    }

    pub fn inverse(&self) -> Option<Self> {
        let nm = self.norm();
        if nm.is_zero() {
            return None;
        }
        Some(self.conj().scale(&nm.recip()))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::normalized(self.n, &self.a * r, &self.b * r)
    }
}

pub(crate) fn check_order(n: u32) -> Result<()> {
    if SUPPORTED_ORDERS.contains(&n) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("root of unity of order {n}")))
    }
}

impl Coeff for Cyclotomic {
    fn nil() -> Self {
        Cyclotomic::rational(Rat::zero())
    }
    fn unity() -> Self {
        Cyclotomic::rational(Rat::one())
    }
    fn is_nil(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn scale(&self, r: &Rat) -> Self {
        Cyclotomic::scale(self, r)
    }
    fn from_rat(r: Rat) -> Self {
        Cyclotomic::rational(r)
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse()
    }
    fn sqrt_exact(&self) -> Option<Self> {
        self.to_rat().and_then(|r| r.sqrt_exact()).map(Cyclotomic::rational)
    }
    fn ring_name() -> &'static str {
        "Cyclotomic"
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&fmt_rat(&self.a));
        }
        let z = format!("zeta{}", self.n);
        let b = if self.b.is_one() {
            z
        } else if (-&self.b).is_one() {
            format!("-{z}")
        } else {
            format!("{}*{z}", fmt_rat(&self.b))
        };
        if self.a.is_zero() {
            f.write_str(&b)
        } else if self.b.is_negative() {
            write!(f, "{} - {}", fmt_rat(&self.a), b.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", fmt_rat(&self.a), b)
        }
    }
}
