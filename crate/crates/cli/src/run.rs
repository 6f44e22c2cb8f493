//! Command-line surface and dispatch.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use jacobi_forms::check::CheckOutcome;
use jacobi_forms::forms::{standard_form, FormName, FormSeries};
use jacobi_forms::genus::{elliptic_genus, mwg, GenusResult};
use jacobi_forms::lift::{delta2_expand, sqeg_expand};
use jacobi_forms::rat::{fmt_frac, fmt_rat, parse_rat, ratio};
use jacobi_forms::ring::{decompose, JacobiForm};
use jacobi_forms::series::{Coeff, FourierSeries, QExp, YRational};
use jacobi_forms::specials::{congruence_report, rational_or_cyclotomic, restrict};
use jacobi_forms::Rat;
use serde_json::{json, Map, Value};

use crate::emit::{series_json, series_text, Format, YTerms};
use crate::input::{form_from_json, manifold_from_json, read_json, InputError, Manifold};
use crate::suites::{run_checks, suite, SUITES};

#[derive(Debug, Parser)]
#[command(name = "jacobi", version, about = "Exact expansions and identity checks for weak Jacobi forms")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Every `--qcap` is exclusive: terms with `q`-exponent below it are printed.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a named form.
    Expand {
        form: String,
        #[arg(long, default_value = "2")]
        qcap: String,
    },
    /// Run a named identity suite.
    Check {
        #[arg(long)]
        suite: String,
    },
    /// Write a weight-0 form from a series file in the generators.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Elliptic genus from chi_p data.
    Eg {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "3")]
        qcap: String,
    },
    /// Modified Witten genus from characteristic numbers.
    Mwg {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "3")]
        qcap: String,
    },
    /// Value of a named form at a torsion point: 0, 1/2, 1/3, 1/4, 1/6 or (t+1)/2.
    Special {
        #[arg(long)]
        form: String,
        #[arg(long)]
        z: String,
        #[arg(long, default_value = "4")]
        qcap: String,
    },
    /// Divisibility claims for the elliptic genus of a manifold.
    Congruence {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "6")]
        qcap: String,
    },
    /// Second-quantized genus of a weight-0 form from a series file.
    Sqeg {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        pmax: u32,
        #[arg(long, default_value = "3")]
        qcap: String,
    },
    /// Fourier coefficients of Delta_2.
    Delta2 {
        #[arg(long, default_value_t = 13)]
        bound: i64,
    },
}

/// Exit code and the bytes for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<jacobi_forms::Error> for Failure {
    fn from(e: jacobi_forms::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

struct Report {
    json: Value,
    text: String,
    ok: bool,
}

fn obj<const N: usize>(pairs: [(&str, Value); N]) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

/// Parses an exclusive `q`-cap, which must be at least 1.
fn parse_qcap(text: &str) -> Result<QExp, Failure> {
    let r = parse_rat(text).map_err(|e| Failure::Usage(format!("--qcap: {e}")))?;
    if r < Rat::from_integer(1.into()) {
        return Err(Failure::Usage("--qcap must be at least 1".into()));
    }
    QExp::from_rat(&r).map_err(|e| Failure::Usage(format!("--qcap: {e}")))
}

fn below<C: Coeff>(f: &FourierSeries<C>, qcap: QExp) -> Result<FourierSeries<C>, Failure> {
    Ok(f.truncate(qcap - QExp::from_units(1))?)
}

fn form_name(text: &str) -> Result<FormName, Failure> {
    text.parse().map_err(|e: jacobi_forms::Error| Failure::Usage(e.to_string()))
}

fn rational_json(f: &FourierSeries<YRational>) -> Value {
    Value::Array(
        f.terms()
            .map(|(e, c)| {
                let part = |p: &jacobi_forms::series::YLaurent| {
                    Value::Array(p.y_terms().into_iter().map(|(h, v)| json!([h, v])).collect())
                };
                json!([e.to_string(), obj([("num", part(c.numerator())), ("den", part(c.denominator()))])])
            })
            .collect(),
    )
}

fn expand(form: &str, qcap: &str) -> Result<Report, Failure> {
    let name = form_name(form)?;
    let qcap = parse_qcap(qcap)?;
    let f = standard_form(name, qcap)?;
    let (series, text) = match &f.series {
        FormSeries::Laurent(x) => {
            let x = below(x, qcap)?;
            (series_json(&x), series_text(&x))
        }
        FormSeries::Rational(x) => {
            let x = below(x, qcap)?;
            let t: Vec<String> = x.terms().map(|(e, c)| format!("q^{e}: {c}")).collect();
            (rational_json(&x), t.join("; "))
        }
    };
    let json = obj([
        ("form", s(name)),
        ("weight", s(fmt_rat(&f.weight))),
        ("index", s(fmt_rat(&f.index))),
        ("qcap", s(qcap)),
        ("series", series),
    ]);
    Ok(Report { json, text, ok: true })
}

fn outcome_json(c: &CheckOutcome) -> Value {
    obj([
        ("id", s(&c.id)),
        ("passed", Value::Bool(c.passed())),
        ("through", s(c.through)),
        ("witness", c.witness.as_ref().map_or(Value::Null, s)),
    ])
}

fn check(name: &str) -> Result<Report, Failure> {
    let checks = suite(name)
        .ok_or_else(|| Failure::Usage(format!("unknown suite {name:?}; known: {}", SUITES.join(", "))))?;
    let out = run_checks(&checks);
    let ok = out.iter().all(CheckOutcome::passed);
    let text = out.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    let json = obj([
        ("suite", s(name)),
        ("passed", Value::Bool(ok)),
        ("checks", Value::Array(out.iter().map(outcome_json).collect())),
    ]);
    Ok(Report { json, text, ok })
}

fn decompose_file(input: &Path) -> Result<Report, Failure> {
    let a = form_from_json(&read_json(input)?)?;
    let p = decompose(&a)?;
    let json = obj([("index", s(fmt_rat(&a.index))), ("decomposition", s(&p))]);
    Ok(Report { json, text: p.to_string(), ok: true })
}

fn genus_report(r: &GenusResult, qcap: QExp) -> Result<Report, Failure> {
    let core = below(&r.core.series, qcap)?;
    let euler = r.euler_value().coeff(QExp::ZERO)?;
    let dec = r.decomposition.as_ref().map(ToString::to_string);
    let json = obj([
        ("core", series_json(&core)),
        ("index", s(fmt_rat(&r.core.index))),
        ("prefactor_exponent", json!(r.prefactor_exponent)),
        ("decomposition", dec.clone().map_or(Value::Null, Value::String)),
        ("euler_number", s(fmt_rat(&euler))),
        ("warnings", Value::Array(r.warnings.iter().map(s).collect())),
    ]);
    let mut lines = vec![
        format!("decomposition: {}", dec.unwrap_or_else(|| "none".into())),
        format!("euler number: {}", fmt_rat(&euler)),
    ];
    if r.prefactor_exponent != 0 {
        lines.push(format!("prefactor: (theta/eta)^{}", r.prefactor_exponent));
    }
    lines.push(format!("core: {}", series_text(&core)));
    lines.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
    Ok(Report { json, text: lines.join("\n"), ok: true })
}

fn read_manifold(input: &Path) -> Result<Manifold, Failure> {
    Ok(manifold_from_json(&read_json(input)?)?)
}

fn eg(input: &Path, qcap: &str) -> Result<Report, Failure> {
    let qcap = parse_qcap(qcap)?;
    let Manifold::Chi(m) = read_manifold(input)? else {
        return Err(Failure::Usage("eg needs a file of kind \"chi\"".into()));
    };
    genus_report(&elliptic_genus(&m, qcap)?, qcap)
}

fn witten(input: &Path, qcap: &str) -> Result<Report, Failure> {
    let qcap = parse_qcap(qcap)?;
    let Manifold::Char(c) = read_manifold(input)? else {
        return Err(Failure::Usage("mwg needs a file of kind \"char\"".into()));
    };
    genus_report(&mwg(&c, qcap)?, qcap)
}

fn parse_z(z: &str) -> Result<(Rat, Rat), Failure> {
    match z.replace(' ', "").as_str() {
        "(t+1)/2" | "(tau+1)/2" => Ok((ratio(-1, 2), ratio(-1, 2))),
        "0" | "1/2" | "1/3" | "1/4" | "1/6" => Ok((Rat::from_integer(0.into()), parse_rat(z).expect("listed"))),
        other => Err(Failure::Usage(format!("unsupported --z {other:?}; use 0, 1/2, 1/3, 1/4, 1/6 or (t+1)/2"))),
    }
}

fn special(form: &str, z: &str, qcap: &str) -> Result<Report, Failure> {
    let name = form_name(form)?;
    let (lambda, mu) = parse_z(z)?;
    let qcap = parse_qcap(qcap)?;
    let pad = qcap + qcap + QExp::int(2);
    let r = restrict(&JacobiForm::named(name, pad)?, &lambda, &mu)?;
    let value = if lambda == Rat::from_integer(0.into()) {
        r.value()?
    } else {
        r.base.shift(QExp::from_rat(&r.q_shift)?)
    };
    let (series, text) = match rational_or_cyclotomic(&value) {
        Ok(v) => {
            let v = below(&v, qcap)?;
            (series_json(&v), series_text(&v))
        }
        Err(v) => {
            let v = below(&v, qcap)?;
            (series_json(&v), series_text(&v))
        }
    };
    let json = obj([("form", s(name)), ("z", s(z)), ("qcap", s(qcap)), ("value", series)]);
    Ok(Report { json, text, ok: true })
}

fn congruence(input: &Path, qcap: &str) -> Result<Report, Failure> {
    let qcap = parse_qcap(qcap)?;
    let Manifold::Chi(m) = read_manifold(input)? else {
        return Err(Failure::Usage("congruence needs a file of kind \"chi\"".into()));
    };
    let reports = congruence_report(&m, qcap - QExp::from_units(1))?;
    let ok = reports.iter().all(|r| r.passed);
    let mut lines = Vec::new();
    let mut js = Vec::new();
    for r in &reports {
        let bad = r.checks.iter().find(|c| !c.passed());
        lines.push(match bad {
            None => format!("PASS {} (modulus {})", r.claim, r.modulus),
            Some(c) => format!("FAIL {}: value {} at q^{} modulo {}", r.claim, fmt_rat(&c.value), c.at, c.modulus),
        });
        let checks = r
            .checks
            .iter()
            .map(|c| {
                obj([
                    ("at", s(c.at)),
                    ("value", s(fmt_rat(&c.value))),
                    ("modulus", s(&c.modulus)),
                    ("residue", c.residue.as_ref().map_or(Value::Null, s)),
                ])
            })
            .collect();
        js.push(obj([
            ("claim", s(&r.claim)),
            ("modulus", s(&r.modulus)),
            ("passed", Value::Bool(r.passed)),
            ("checks", Value::Array(checks)),
        ]));
    }
    let json = obj([("passed", Value::Bool(ok)), ("reports", Value::Array(js))]);
    Ok(Report { json, text: lines.join("\n"), ok })
}

fn sqeg(input: &Path, pmax: u32, qcap: &str) -> Result<Report, Failure> {
    let qcap = parse_qcap(qcap)?;
    let a = form_from_json(&read_json(input)?)?;
    if !qcap.is_integer() {
        return Err(Failure::Usage("sqeg needs an integral --qcap".into()));
    }
    let top = qcap - QExp::int(1);
    let t = sqeg_expand(&a.series, pmax, top)?;
    let mut js = Vec::new();
    let mut lines = Vec::new();
    for p in 0..=pmax {
        let sl = t.slice(p);
        js.push(json!([p.to_string(), series_json(&sl)]));
        lines.push(format!("p^{p}: {}", series_text(&sl)));
    }
    let json = obj([
        ("pmax", json!(pmax)),
        ("qcap", s(qcap)),
        ("integral", Value::Bool(t.is_integral())),
        ("slices", Value::Array(js)),
    ]);
    Ok(Report { json, text: lines.join("\n"), ok: true })
}

fn delta2(bound: i64) -> Result<Report, Failure> {
    if bound < 2 {
        return Err(Failure::Usage("--bound must be at least 2".into()));
    }
    let d = delta2_expand(bound);
    let mut js = Vec::new();
    let mut lines = Vec::new();
    for ((n, l, m), v) in &d.terms {
        let (a, b, c) = (fmt_frac(*n, 4), fmt_frac(*l, 2), fmt_frac(*m, 2));
        lines.push(format!("q^{a} y^{b} s^{c}: {}", fmt_rat(v)));
        js.push(json!([a, b, c, fmt_rat(v)]));
    }
    let json = obj([("bound", json!(bound)), ("terms", Value::Array(js))]);
    Ok(Report { json, text: lines.join("\n"), ok: true })
}

/// Runs one command; exit code 0 on success, 1 on failed checks or
/// computation errors, 2 on usage and input errors.
pub fn run(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Expand { form, qcap } => expand(form, qcap),
        Command::Check { suite } => check(suite),
        Command::Decompose { input } => decompose_file(input),
        Command::Eg { input, qcap } => eg(input, qcap),
        Command::Mwg { input, qcap } => witten(input, qcap),
        Command::Special { form, z, qcap } => special(form, z, qcap),
        Command::Congruence { input, qcap } => congruence(input, qcap),
        Command::Sqeg { input, pmax, qcap } => sqeg(input, *pmax, qcap),
        Command::Delta2 { bound } => delta2(*bound),
    };
    match r {
        Ok(rep) => {
            let mut stdout = match cli.format {
                Format::Text => rep.text,
                Format::Json => serde_json::to_string(&rep.json).expect("serializable"),
            };
            stdout.push('\n');
            Outcome { code: if rep.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(e)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(Failure::Compute(e)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
