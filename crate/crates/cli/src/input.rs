//! Reading manifold, characteristic-number and series files.

use std::path::Path;

use jacobi_forms::genus::{CharData, ExtraCoeff, ManifoldData};
use jacobi_forms::ring::JacobiForm;
use jacobi_forms::Rat;
use serde_json::Value;

use crate::emit::{parse_series, qexp_field, rat_field, str_field};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
}

/// Contents of a manifold file.
#[derive(Clone, Debug, PartialEq)]
pub enum Manifold {
    Chi(ManifoldData),
    Char(CharData),
}

pub fn read_json(path: &Path) -> Result<Value, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
    Ok(serde_json::from_str(&text)?)
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, InputError> {
    v.get(key).ok_or_else(|| InputError::Schema(format!("missing field {key:?}")))
}

fn int(v: &Value, what: &str) -> Result<i64, InputError> {
    v.as_i64().ok_or_else(|| InputError::Schema(format!("{what} must be an integer")))
}

fn uint(v: &Value, what: &str) -> Result<u32, InputError> {
    int(v, what)?.try_into().map_err(|_| InputError::Schema(format!("{what} must be a nonnegative integer")))
}

fn extra(v: &Value) -> Result<ExtraCoeff, InputError> {
    Ok(ExtraCoeff {
        n: int(field(v, "n")?, "n")?,
        l: rat_field(field(v, "l")?, "l")?,
        value: rat_field(field(v, "value")?, "value")?,
    })
}

pub fn manifold_from_json(v: &Value) -> Result<Manifold, InputError> {
    let kind = str_field(field(v, "kind")?, "kind")?;
    let d = uint(field(v, "d")?, "d")?;
    let lib = |e: jacobi_forms::Error| InputError::Schema(e.to_string());
    match kind {
        "chi" => {
            let chi = field(v, "chi")?
                .as_array()
                .ok_or_else(|| InputError::Schema("chi must be an array".into()))?
                .iter()
                .map(|c| int(c, "chi entry"))
                .collect::<Result<Vec<_>, _>>()?;
            let mut m = ManifoldData::new(d, chi).map_err(lib)?;
            if let Some(x) = v.get("extra_coeffs") {
                let xs = x.as_array().ok_or_else(|| InputError::Schema("extra_coeffs must be an array".into()))?;
                m = m.with_extra(xs.iter().map(extra).collect::<Result<_, _>>()?);
            }
            Ok(Manifold::Chi(m))
        }
        "char" => {
            let r = uint(field(v, "r")?, "r")?;
            let pairs = field(v, "pairs")?.as_object().ok_or_else(|| InputError::Schema("pairs must be an object".into()))?;
            let vals: Vec<(&str, Rat)> =
                pairs.iter().map(|(k, x)| Ok((k.as_str(), rat_field(x, k)?))).collect::<Result<_, InputError>>()?;
            Ok(Manifold::Char(CharData::from_pairs(d, r, vals).map_err(lib)?))
        }
        other => Err(InputError::Schema(format!("unknown kind {other:?}"))),
    }
}

/// A series file as a Jacobi form; `eta_character` is optional and defaults to 0.
pub fn form_from_json(v: &Value) -> Result<JacobiForm, InputError> {
    let weight = rat_field(field(v, "weight")?, "weight")?;
    let index = rat_field(field(v, "index")?, "index")?;
    let cap = qexp_field(field(v, "qcap")?, "qcap")?;
    let eta = v.get("eta_character").map(|x| int(x, "eta_character")).transpose()?.unwrap_or(0);
    let s = parse_series(field(v, "series")?, cap)?;
    JacobiForm::new(weight, index, eta, s).map_err(|e| InputError::Schema(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jacobi_forms::rat::rat;
    use serde_json::json;

    #[test]
    fn chi_and_char() {
        let m = manifold_from_json(&json!({"kind": "chi", "d": 2, "chi": [2, -20, 2]})).unwrap();
        assert_eq!(m, Manifold::Chi(ManifoldData::new(2, vec![2, -20, 2]).unwrap()));
        let c = manifold_from_json(&json!({"kind": "char", "d": 2, "r": 2, "pairs": {"S2": "-48"}})).unwrap();
        assert_eq!(c, Manifold::Char(CharData::from_pairs(2, 2, [("S2", rat(-48))]).unwrap()));
        let x = manifold_from_json(&json!({"kind": "chi", "d": 0, "chi": [1], "extra_coeffs": [{"n": 1, "l": "1/2", "value": "3"}]}));
        let Manifold::Chi(x) = x.unwrap() else { panic!() };
        assert_eq!(x.extra_coeffs[0].l, jacobi_forms::rat::ratio(1, 2));
    }

    #[test]
    fn schema_errors() {
        for v in [
            json!({"kind": "chi", "d": 2}),
            json!({"kind": "other", "d": 2}),
            json!({"kind": "chi", "d": 2, "chi": [1, 2]}),
            json!({"kind": "char", "d": 2, "r": 0, "pairs": {"S3": "1"}}),
            json!({"kind": "char", "d": 2, "r": 0, "pairs": {"S2": "x"}}),
        ] {
            assert!(matches!(manifold_from_json(&v), Err(InputError::Schema(_))), "{v}");
        }
    }
}
