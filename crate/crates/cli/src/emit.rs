//! JSON and plain-text rendering of series and reports.

use jacobi_forms::rat::{fmt_frac, fmt_rat, parse_rat};
use jacobi_forms::series::{Coeff, Cyclotomic, FourierSeries, QExp, YLaurent};
use jacobi_forms::Rat;
use serde_json::{json, Map, Value};

use crate::input::InputError;

/// Output format selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A coefficient that can be written as a list of `[y-exponent, value]` pairs.
pub trait YTerms: Coeff {
    fn y_terms(&self) -> Vec<(String, String)>;
    fn text(&self) -> String;
}

impl YTerms for YLaurent {
    fn y_terms(&self) -> Vec<(String, String)> {
        self.terms().iter().map(|(h, c)| (fmt_frac(*h, 2), fmt_rat(c))).collect()
    }

    fn text(&self) -> String {
        self.to_string()
    }
}

impl YTerms for Rat {
    fn y_terms(&self) -> Vec<(String, String)> {
        vec![("0".into(), fmt_rat(self))]
    }

    fn text(&self) -> String {
        fmt_rat(self)
    }
}

impl YTerms for Cyclotomic {
    fn y_terms(&self) -> Vec<(String, String)> {
        vec![("0".into(), self.to_string())]
    }

    fn text(&self) -> String {
        self.to_string()
    }
}

pub fn qexp_json(e: QExp) -> Value {
    Value::String(e.to_string())
}

/// `[[qexp, [[yexp, coeff], ...]], ...]` in ascending order.
pub fn series_json<C: YTerms>(s: &FourierSeries<C>) -> Value {
    Value::Array(
        s.terms()
            .map(|(e, c)| {
                let ys: Vec<Value> = c.y_terms().into_iter().map(|(h, v)| json!([h, v])).collect();
                json!([e.to_string(), ys])
            })
            .collect(),
    )
}

/// `"q^0: ...; q^1: ..."`.
pub fn series_text<C: YTerms>(s: &FourierSeries<C>) -> String {
    let parts: Vec<String> = s.terms().map(|(e, c)| format!("q^{e}: {}", c.text())).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("; ")
    }
}

fn schema(msg: impl Into<String>) -> InputError {
    InputError::Schema(msg.into())
}

pub fn str_field<'a>(v: &'a Value, what: &str) -> Result<&'a str, InputError> {
    v.as_str().ok_or_else(|| schema(format!("{what} must be a string")))
}

pub fn rat_field(v: &Value, what: &str) -> Result<Rat, InputError> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(Rat::from_integer(n.as_i64().expect("checked").into())),
        _ => parse_rat(str_field(v, what)?).map_err(|e| schema(format!("{what}: {e}"))),
    }
}

pub fn qexp_field(v: &Value, what: &str) -> Result<QExp, InputError> {
    QExp::from_rat(&rat_field(v, what)?).map_err(|e| schema(format!("{what}: {e}")))
}

fn half_units(r: &Rat, what: &str) -> Result<i64, InputError> {
    jacobi_forms::rat::to_lattice(r, 2).ok_or_else(|| schema(format!("{what}: y-exponent {r} is not in Z/2")))
}

/// Inverse of [`series_json`] for Laurent coefficients.
pub fn parse_series(v: &Value, cap: QExp) -> Result<FourierSeries<YLaurent>, InputError> {
    let rows = v.as_array().ok_or_else(|| schema("series must be an array"))?;
    let mut terms = Vec::with_capacity(rows.len());
    for row in rows {
        let pair = row.as_array().filter(|p| p.len() == 2).ok_or_else(|| schema("series rows are [qexp, terms]"))?;
        let e = qexp_field(&pair[0], "q-exponent")?;
        if e > cap {
            return Err(schema(format!("q-exponent {e} beyond qcap {cap}")));
        }
        let ys = pair[1].as_array().ok_or_else(|| schema("y-terms must be an array"))?;
        let mut c = Vec::with_capacity(ys.len());
        for y in ys {
            let yp = y.as_array().filter(|p| p.len() == 2).ok_or_else(|| schema("y-terms are [yexp, coeff]"))?;
            let h = half_units(&rat_field(&yp[0], "y-exponent")?, "series")?;
            c.push((h, rat_field(&yp[1], "coefficient")?));
        }
        terms.push((e, YLaurent::from_terms(c)));
    }
    Ok(FourierSeries::from_terms(terms, cap))
}

/// A series file: weight, index, cap and the series itself.
pub fn series_file_json(weight: &Rat, index: &Rat, s: &FourierSeries<YLaurent>) -> Value {
    let mut m = Map::new();
    m.insert("weight".into(), Value::String(fmt_rat(weight)));
    m.insert("index".into(), Value::String(fmt_rat(index)));
    m.insert("qcap".into(), qexp_json(s.cap()));
    m.insert("series".into(), series_json(s));
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use jacobi_forms::forms::{laurent, FormName};
    use jacobi_forms::rat::rat;

    #[test]
    fn constant_one() {
        let s = FourierSeries::<Rat>::one(QExp::int(2));
        assert_eq!(series_json(&s).to_string(), r#"[["0",[["0","1"]]]]"#);
    }

    #[test]
    fn theta_and_phi4() {
        let th = laurent(FormName::Theta, QExp::int(1)).unwrap();
        let j = series_json(&th);
        assert_eq!(j[0].to_string(), r#"["1/8",[["-1/2","-1"],["1/2","1"]]]"#);
        let p4 = laurent(FormName::Phi0_4, QExp::ZERO).unwrap();
        assert_eq!(series_json(&p4).to_string(), r#"[["0",[["-1","1"],["0","1"],["1","1"]]]]"#);
    }

    #[test]
    fn text_form() {
        let s = FourierSeries::from_terms(
            [(QExp::ZERO, YLaurent::from_ints(&[(1, 1), (0, 10), (-1, 1)])), (QExp::int(1), YLaurent::constant(rat(3)))],
            QExp::int(1),
        );
        assert_eq!(series_text(&s), "q^0: y + 10 + y^-1; q^1: 3");
    }
}
