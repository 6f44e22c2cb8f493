use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{jf_mul, JacobiForm};
use crate::error::Result;
use crate::forms::FormName;
use crate::rat::{fmt_rat, rat, Rat};
use crate::series::QExp;

/// Ring generators a [`GeneratorPoly`] may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E4,
    E6,
    Delta,
    Phi0_1,
    Phi0_2,
    Phi0_3,
    Phi0_4,
    Phi0_3Half,
    Xi0_6,
    PhiM1Half,
    PhiM2_1,
}

impl Gen {
    pub const ALL: [Gen; 11] = [
        Gen::E4,
        Gen::E6,
        Gen::Delta,
        Gen::Phi0_1,
        Gen::Phi0_2,
        Gen::Phi0_3,
        Gen::Phi0_4,
        Gen::Phi0_3Half,
        Gen::Xi0_6,
        Gen::PhiM1Half,
        Gen::PhiM2_1,
    ];

    pub fn form_name(self) -> FormName {
        match self {
            Gen::Phi0_1 => FormName::Phi0_1,
            Gen::Phi0_2 => FormName::Phi0_2,
            Gen::Phi0_3 => FormName::Phi0_3,
            Gen::Phi0_4 => FormName::Phi0_4,
            Gen::Phi0_3Half => FormName::Phi0_3Half,
            Gen::Xi0_6 => FormName::Xi0_6,
            Gen::E4 => FormName::Ek(4),
            Gen::E6 => FormName::Ek(6),
            Gen::Delta => FormName::Delta,
            Gen::PhiM1Half => FormName::PhiM1Half,
            Gen::PhiM2_1 => FormName::PhiM2_1,
        }
    }

    /// `(weight, index)`.
    pub fn bidegree(self) -> (Rat, Rat) {
        let (w, i, _) = self.form_name().tags();
        (w, i)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form_name())
    }
}

/// A monomial in the generators. Ordered so that higher powers of earlier
/// generators come first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<Gen, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(powers: &[(Gen, u32)]) -> Self {
        let mut m = BTreeMap::new();
        for &(g, e) in powers {
            if e > 0 {
                *m.entry(g).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn exponent(&self, g: Gen) -> u32 {
        self.0.get(&g).copied().unwrap_or(0)
    }

    pub fn powers(&self) -> impl Iterator<Item = (Gen, u32)> + '_ {
        self.0.iter().map(|(g, e)| (*g, *e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (g, e) in &other.0 {
            *m.entry(*g).or_insert(0) += e;
        }
        Monomial(m)
    }

    /// `self / g`, if `g` divides it.
    pub fn without(&self, g: Gen) -> Option<Self> {
        let mut m = self.0.clone();
        let e = m.get_mut(&g)?;
        *e -= 1;
        if *e == 0 {
            m.remove(&g);
        }
        Some(Monomial(m))
    }

    pub fn bidegree(&self) -> (Rat, Rat) {
        self.0.iter().fold((Rat::zero(), Rat::zero()), |(w, i), (g, e)| {
            let (gw, gi) = g.bidegree();
            (w + gw * rat(*e as i64), i + gi * rat(*e as i64))
        })
    }

    /// The monomial as a Jacobi form through `cap`.
    pub fn evaluate(&self, cap: QExp) -> Result<JacobiForm> {
        let mut acc = JacobiForm::one(cap);
        for (g, e) in &self.0 {
            let f = JacobiForm::named(g.form_name(), cap)?;
            for _ in 0..*e {
                acc = jf_mul(&acc, &f);
            }
        }
        Ok(acc)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for g in Gen::ALL {
            match other.exponent(g).cmp(&self.exponent(g)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A polynomial in the generators, all monomials of one bidegree.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorPoly {
    pub weight: Rat,
    pub index: Rat,
    terms: BTreeMap<Monomial, Rat>,
}

impl GeneratorPoly {
    pub fn zero(weight: Rat, index: Rat) -> Self {
        GeneratorPoly { weight, index, terms: BTreeMap::new() }
    }

    /// Sums the given terms; every monomial must have bidegree `(weight, index)`.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(weight: Rat, index: Rat, it: I) -> Self {
        let mut p = GeneratorPoly::zero(weight, index);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let (w, i) = m.bidegree();
        GeneratorPoly::from_terms(w, i, [(m, c)])
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.bidegree(), (self.weight.clone(), self.index.clone()), "mixed bidegree");
        let e = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Number of nonzero terms; see `is_zero` for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        if p.is_zero() {
            p.weight = other.weight.clone();
            p.index = other.index.clone();
        }
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * r));
        GeneratorPoly::from_terms(self.weight.clone(), self.index.clone(), terms)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = GeneratorPoly::zero(&self.weight + &other.weight, &self.index + &other.index);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                p.add_term(a.mul(b), ca * cb);
            }
        }
        p
    }

    /// The polynomial as a Jacobi form through `cap`.
    pub fn evaluate(&self, cap: QExp) -> Result<JacobiForm> {
        let mut acc: Option<JacobiForm> = None;
        for (m, c) in &self.terms {
            let t = m.evaluate(cap)?.scale(c);
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t)?,
            });
        }
        Ok(acc.unwrap_or_else(|| {
            let mut z = JacobiForm::constant(Rat::zero(), cap);
            z.weight = self.weight.clone();
            z.index = self.index.clone();
            z
        }))
    }

    /// Repeatedly rewrites `c phi_0_4^e M` with `e >= 2` and `4 | c` as
    /// `(c/4) phi_0_4^(e-1) (phi_0_1 phi_0_3 - phi_0_2^2) M`.
    pub fn reduce_phi4(&self) -> Self {
        let mut p = self.clone();
        loop {
            let hit = p
                .terms
                .iter()
                .find(|(m, c)| m.exponent(Gen::Phi0_4) >= 2 && (*c / rat(4)).is_integer())
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else { return p };
            let rest = m.without(Gen::Phi0_4).expect("exponent >= 2");
            let quarter = c / rat(4);
            p.add_term(m, -(&quarter * rat(4)));
            p.add_term(rest.mul(&Monomial::new(&[(Gen::Phi0_1, 1), (Gen::Phi0_3, 1)])), quarter.clone());
            p.add_term(rest.mul(&Monomial::new(&[(Gen::Phi0_2, 2)])), -quarter);
        }
    }

    /// `xi_{0,6}` in the four weight-zero generators.
    pub fn xi_0_6() -> Self {
        use Gen::*;
        GeneratorPoly::from_terms(
            Rat::zero(),
            rat(6),
            [
                (Monomial::new(&[(Phi0_1, 2), (Phi0_4, 1)]), rat(-1)),
                (Monomial::new(&[(Phi0_1, 1), (Phi0_2, 1), (Phi0_3, 1)]), rat(9)),
                (Monomial::new(&[(Phi0_2, 3)]), rat(-8)),
                (Monomial::new(&[(Phi0_3, 2)]), rat(-27)),
            ],
        )
    }
}

impl fmt::Display for GeneratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = *c < Rat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else if a.is_integer() {
                write!(f, "{}*{m}", fmt_rat(&a))?;
            } else {
                write!(f, "({})*{m}", fmt_rat(&a))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_order() {
        assert_eq!(
            GeneratorPoly::xi_0_6().to_string(),
            "-phi_0_1^2*phi_0_4 + 9*phi_0_1*phi_0_2*phi_0_3 - 8*phi_0_2^3 - 27*phi_0_3^2"
        );
        let p = GeneratorPoly::monomial(Monomial::new(&[(Gen::Phi0_1, 1)]), rat(2));
        assert_eq!(p.to_string(), "2*phi_0_1");
        assert_eq!(GeneratorPoly::zero(rat(0), rat(1)).to_string(), "0");
    }

    #[test]
    fn phi4_relation_holds() {
        let cap = QExp::int(4);
        let lhs = GeneratorPoly::monomial(Monomial::new(&[(Gen::Phi0_4, 1)]), rat(4));
        let rhs = GeneratorPoly::from_terms(
            rat(0),
            rat(4),
            [
                (Monomial::new(&[(Gen::Phi0_1, 1), (Gen::Phi0_3, 1)]), rat(1)),
                (Monomial::new(&[(Gen::Phi0_2, 2)]), rat(-1)),
            ],
        );
        assert_eq!(lhs.evaluate(cap).unwrap(), rhs.evaluate(cap).unwrap());
    }

    #[test]
    fn reduction_keeps_value() {
        let cap = QExp::int(3);
        let p = GeneratorPoly::monomial(Monomial::new(&[(Gen::Phi0_4, 2)]), rat(8));
        let r = p.reduce_phi4();
        assert!(r.terms().all(|(m, _)| m.exponent(Gen::Phi0_4) <= 1));
        assert_eq!(p.evaluate(cap).unwrap(), r.evaluate(cap).unwrap());
        let odd = GeneratorPoly::monomial(Monomial::new(&[(Gen::Phi0_4, 2)]), rat(3));
        assert_eq!(odd.reduce_phi4(), odd);
    }

    #[test]
    fn xi_matches_definition() {
        let cap = QExp::int(4);
        let lhs = GeneratorPoly::xi_0_6().evaluate(cap).unwrap();
        assert_eq!(lhs, JacobiForm::named(FormName::Xi0_6, cap).unwrap());
    }
}
