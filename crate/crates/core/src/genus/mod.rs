//! Elliptic genus from Hodge-type data and the modified Witten genus from
//! characteristic numbers.

mod eg;
mod mwg;

pub use eg::{elliptic_genus, weight0_module_basis};
pub use mwg::{degree_monomials, mwg, witten_rank0, MWG_SIGN};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::forms::{eta, theta_sum};
use crate::rat::{rat, Rat};
use crate::ring::{decompose, GeneratorPoly, JacobiForm};
use crate::series::{FourierSeries, QExp, YLaurent, YRational};

/// A prescribed Fourier coefficient `f(n, l)` of the genus.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtraCoeff {
    pub n: i64,
    /// `y`-exponent, in `Z` or `Z + 1/2`.
    pub l: Rat,
    pub value: Rat,
}

/// Complex dimension and the numbers `chi_p = sum_q (-1)^q h^{p,q}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldData {
    pub d: u32,
    pub chi: Vec<i64>,
    pub extra_coeffs: Vec<ExtraCoeff>,
}

impl ManifoldData {
    pub fn new(d: u32, chi: Vec<i64>) -> Result<Self> {
        if chi.len() != d as usize + 1 {
            return Err(Error::Precondition(format!("chi has {} entries, expected {}", chi.len(), d + 1)));
        }
        Ok(ManifoldData { d, chi, extra_coeffs: Vec::new() })
    }

    pub fn with_extra(mut self, extra: Vec<ExtraCoeff>) -> Self {
        self.extra_coeffs = extra;
        self
    }

    /// Violations of `chi_p = (-1)^d chi_{d-p}`; these are reported, not rejected.
    pub fn warnings(&self) -> Vec<String> {
        let d = self.d as usize;
        let sign = if d.is_multiple_of(2) { 1 } else { -1 };
        (0..=d / 2)
            .filter(|&p| self.chi.get(p).copied().unwrap_or(0) != sign * self.chi.get(d - p).copied().unwrap_or(0))
            .map(|p| format!("Serre symmetry fails: chi_{p} = {}, chi_{} = {}", self.chi[p], d - p, self.chi[d - p]))
            .collect()
    }

    /// `e(M) = sum_p (-1)^p chi_p`.
    pub fn euler_number(&self) -> i64 {
        self.chi.iter().enumerate().map(|(p, c)| if p % 2 == 0 { *c } else { -c }).sum()
    }
}

/// `sum_p (-1)^p chi_p y^(d/2 - p)`.
pub fn chi_y_q0(m: &ManifoldData) -> YLaurent {
    let d = m.d as i64;
    YLaurent::from_terms(
        m.chi
            .iter()
            .enumerate()
            .map(|(p, c)| (d - 2 * p as i64, rat(if p % 2 == 0 { *c } else { -c }))),
    )
}

/// A characteristic-number symbol: `S_n` (bundle power sum, `n >= 2`) or
/// `B_2k` (tangent power sum, `2k >= 4`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    B(u32),
    S(u32),
}

impl Symbol {
    pub fn degree(self) -> u32 {
        match self {
            Symbol::B(n) | Symbol::S(n) => n,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::B(n) => write!(f, "B{n}"),
            Symbol::S(n) => write!(f, "S{n}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("bad symbol {s:?}"));
        let (kind, n) = s.split_at(1.min(s.len()));
        let n: u32 = n.parse().map_err(|_| bad())?;
        match kind {
            "S" if n >= 2 => Ok(Symbol::S(n)),
            "B" if n >= 4 && n.is_multiple_of(2) => Ok(Symbol::B(n)),
            _ => Err(bad()),
        }
    }
}

/// Sorted product of symbols; the empty product is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SymMonomial(Vec<Symbol>);

impl SymMonomial {
    pub fn new(mut syms: Vec<Symbol>) -> Self {
        syms.sort();
        SymMonomial(syms)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|s| s.degree()).sum()
    }

    pub fn has_bundle_symbols(&self) -> bool {
        self.0.iter().any(|s| matches!(s, Symbol::S(_)))
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for SymMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(SymMonomial::default());
        }
        Ok(SymMonomial::new(s.split('*').map(|t| t.trim().parse()).collect::<Result<_>>()?))
    }
}

/// Integrated monomials in the normalized power sums of a rank-`r` bundle
/// over a `d`-dimensional manifold.
#[derive(Clone, Debug, PartialEq)]
pub struct CharData {
    pub d: u32,
    pub r: u32,
    pub pairing: BTreeMap<SymMonomial, Rat>,
}

impl CharData {
    pub fn new(d: u32, r: u32, pairing: BTreeMap<SymMonomial, Rat>) -> Result<Self> {
        for k in pairing.keys() {
            if k.degree() != d {
                return Err(Error::Precondition(format!("monomial {k} has degree {}, expected {d}", k.degree())));
            }
        }
        Ok(CharData { d, r, pairing })
    }

    /// Parses `"S2*S2" -> value` style entries.
    pub fn from_pairs<'a, I: IntoIterator<Item = (&'a str, Rat)>>(d: u32, r: u32, pairs: I) -> Result<Self> {
        let mut pairing = BTreeMap::new();
        for (k, v) in pairs {
            pairing.insert(k.parse()?, v);
        }
        CharData::new(d, r, pairing)
    }

    pub fn value(&self, m: &SymMonomial) -> Result<Rat> {
        if let Some(v) = self.pairing.get(m) {
            return Ok(v.clone());
        }
        if m.symbols().is_empty() {
            return Ok(rat(1));
        }
        Err(Error::Missing(format!("pairing value for {m}")))
    }
}

/// A genus as a holomorphic weak Jacobi form of weight 0, index `d/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusResult {
    pub core: JacobiForm,
    /// Power of `theta/eta` that turns `core` into the raw genus.
    pub prefactor_exponent: i64,
    pub decomposition: Option<GeneratorPoly>,
    pub warnings: Vec<String>,
}

impl GenusResult {
    /// The value at `z = 0`.
    pub fn euler_value(&self) -> FourierSeries<Rat> {
        self.core.series.at_one()
    }

    /// `core * (theta/eta)^prefactor_exponent`.
    pub fn raw(&self) -> Result<FourierSeries<YRational>> {
        let cap = self.core.cap();
        let pad = cap + QExp::int(1);
        let ratio = theta_sum(pad).div(&FourierSeries::from_scalar(&eta(pad)))?.to_rational();
        let p = ratio.pow_int(self.prefactor_exponent)?;
        Ok(self.core.series.to_rational().mul(&p).lower_cap(cap))
    }
}

/// Decomposition into generators when the core is integral and the cap allows.
pub(crate) fn decompose_core(core: &JacobiForm) -> Option<GeneratorPoly> {
    if !core.is_integral() || !core.weight.is_zero() {
        return None;
    }
    decompose(core).ok()
}

pub(crate) fn index_half(d: u32) -> Rat {
    Rat::new(d.into(), 2.into())
}

pub(crate) fn to_i64(r: &Rat) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_y_of_k3() {
        let k3 = ManifoldData::new(2, vec![2, -20, 2]).unwrap();
        assert_eq!(chi_y_q0(&k3), YLaurent::from_ints(&[(1, 2), (0, 20), (-1, 2)]));
        assert_eq!(k3.euler_number(), 24);
        assert!(k3.warnings().is_empty());
        assert_eq!(chi_y_q0(&ManifoldData::new(0, vec![1]).unwrap()), YLaurent::one());
        assert!(chi_y_q0(&ManifoldData::new(3, vec![0; 4]).unwrap()).is_zero());
    }

    #[test]
    fn serre_warning() {
        let m = ManifoldData::new(2, vec![1, 0, 2]).unwrap();
        assert_eq!(m.warnings().len(), 1);
    }

    #[test]
    fn symbols_parse() {
        let m: SymMonomial = "S2*B4*S2".parse().unwrap();
        assert_eq!(m.to_string(), "B4*S2*S2");
        assert_eq!(m.degree(), 8);
        assert!("S1".parse::<SymMonomial>().is_err());
        assert!("B2".parse::<SymMonomial>().is_err());
    }
}
