//! Named lists of identity checks.
//!
//! `literal` holds the statements checked exactly as displayed, including
//! the ones known to fail; the other suites hold what is expected to pass.

use jacobi_forms::check::CheckOutcome;
use jacobi_forms::claims::{self, report_outcome};
use jacobi_forms::identities as id;
use jacobi_forms::rat::ratio;
use jacobi_forms::series::QExp;
use jacobi_forms::specials::{hauptmodul_checks, quarter_point_variant, value_pattern_checks};
use jacobi_forms::Result;
use rayon::prelude::*;

/// One named unit of work producing one or more outcomes.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<Vec<CheckOutcome>>,
}

pub const SUITES: [&str; 11] =
    ["series", "forms", "ring", "elliptic", "genus", "specials", "lift", "literal", "core", "all", "empty"];

fn one(c: Result<CheckOutcome>) -> Result<Vec<CheckOutcome>> {
    c.map(|c| vec![c])
}

fn keep(v: Result<Vec<CheckOutcome>>, literal: &[&str], want_literal: bool) -> Result<Vec<CheckOutcome>> {
    Ok(v?.into_iter().filter(|c| literal.contains(&c.id.as_str()) == want_literal).collect())
}

const LITERAL_DISPLAY: &[&str] = &["phi_0_1 q^0, q^1 terms"];
const LITERAL_LEVEL2: &[&str] = &["phi_0_3half = 4 xi00 xi10 xi01"];
const LITERAL_HAUPTMODUL: &[&str] = &["xi6(1/4)^2 = 2^12 Delta(4t)/Delta(t)"];

fn patterns(mu: jacobi_forms::Rat) -> Result<Vec<CheckOutcome>> {
    let cap = QExp::int(4);
    Ok(value_pattern_checks(8, &mu, cap)?.iter().map(|r| report_outcome("pattern", r, cap)).collect())
}

fn series() -> Vec<Check> {
    vec![
        Check { name: "theta sum = product", run: || one(id::theta_sum_product(QExp::int(10))) },
        Check { name: "sigma identity", run: || one(id::sigma_identity(12, QExp::int(6))) },
        Check { name: "theta jet", run: || one(id::theta_jet_identity(6, QExp::int(5))) },
        Check { name: "quintuple product", run: || one(id::quintuple_product(QExp::int(10))) },
    ]
}

fn forms() -> Vec<Check> {
    vec![
        Check { name: "displayed terms", run: || keep(id::displayed_low_terms(), LITERAL_DISPLAY, false) },
        Check { name: "level-2 identities", run: || keep(id::level2_identities(QExp::int(6)), LITERAL_LEVEL2, false) },
        Check { name: "level-2 phi_0_3half", run: || one(id::level2_half_corrected(QExp::int(6))) },
        Check { name: "phi_0_6, phi_0_8, phi_0_12", run: id::exceptional_forms },
        Check { name: "alpha", run: || claims::alpha_checks(QExp::int(10)) },
    ]
}

fn ring() -> Vec<Check> {
    vec![
        Check { name: "torsion relation", run: || one(id::torsion_relation(QExp::int(8))) },
        Check { name: "xi_0_6 in generators", run: || one(id::xi_in_generators(QExp::int(8))) },
        Check { name: "normal forms", run: || id::normal_forms(8) },
        Check { name: "ring structure", run: claims::ring_structure },
    ]
}

fn elliptic() -> Vec<Check> {
    vec![Check { name: "elliptic law", run: id::elliptic_suite }]
}

fn genus() -> Vec<Check> {
    vec![Check { name: "sample genera", run: || claims::genus_checks(QExp::int(6)) }]
}

fn specials() -> Vec<Check> {
    vec![
        Check { name: "torsion values", run: || claims::torsion_values(QExp::int(6)) },
        Check { name: "phi_0_1(1/4)", run: || one(claims::phi01_quarter_corrected(QExp::int(6))) },
        Check { name: "hauptmodul", run: || keep(hauptmodul_checks(QExp::int(10)), LITERAL_HAUPTMODUL, false) },
        Check { name: "hauptmodul at 1/4", run: || one(quarter_point_variant(QExp::int(10))) },
        Check { name: "alpha, beta congruences", run: || claims::abg_congruences(QExp::int(20)) },
        Check { name: "theta-group values", run: || claims::ahat_checks(QExp::int(5)) },
        Check { name: "patterns at 1/2", run: || patterns(ratio(1, 2)) },
        Check { name: "patterns at 1/3", run: || patterns(ratio(1, 3)) },
    ]
}

fn lift() -> Vec<Check> {
    vec![
        Check { name: "sqeg", run: || claims::sqeg_checks(QExp::int(4)) },
        Check { name: "delta2", run: || claims::delta2_checks(13) },
    ]
}

fn literal() -> Vec<Check> {
    vec![
        Check { name: "displayed phi_0_1", run: || keep(id::displayed_low_terms(), LITERAL_DISPLAY, true) },
        Check { name: "level-2 phi_0_3half", run: || keep(id::level2_identities(QExp::int(6)), LITERAL_LEVEL2, true) },
        Check { name: "hauptmodul at 1/4", run: || keep(hauptmodul_checks(QExp::int(10)), LITERAL_HAUPTMODUL, true) },
        Check { name: "phi_0_1(1/4)", run: || one(claims::phi01_quarter_literal(QExp::int(6))) },
        Check { name: "patterns at 1/4", run: || patterns(ratio(1, 4)) },
    ]
}

/// The checks of a named suite, or `None` for an unknown name.
pub fn suite(name: &str) -> Option<Vec<Check>> {
    let core = || [series(), forms(), ring(), elliptic()].concat();
    Some(match name {
        "series" => series(),
        "forms" => forms(),
        "ring" => ring(),
        "elliptic" => elliptic(),
        "genus" => genus(),
        "specials" => specials(),
        "lift" => lift(),
        "literal" => literal(),
        "core" => core(),
        "all" => [core(), genus(), specials(), lift(), literal()].concat(),
        "empty" => Vec::new(),
        _ => return None,
    })
}

/// Runs the checks in parallel; the outcomes keep the order of `checks`.
pub fn run_checks(checks: &[Check]) -> Vec<CheckOutcome> {
    let nested: Vec<Vec<CheckOutcome>> = checks
        .par_iter()
        .map(|c| match (c.run)() {
            Ok(v) => v,
            Err(e) => vec![CheckOutcome::fail(c.name, QExp::ZERO, format!("error: {e}"))],
        })
        .collect();
    nested.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for s in SUITES {
            assert!(suite(s).is_some(), "{s}");
        }
        assert!(suite("nope").is_none());
        assert!(run_checks(&suite("empty").unwrap()).is_empty());
    }

    #[test]
    fn literal_failures() {
        let out = run_checks(&literal());
        let failed: Vec<&str> = out.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
        assert!(failed.contains(&"phi_0_1 q^0, q^1 terms"));
        assert!(failed.contains(&"phi_0_3half = 4 xi00 xi10 xi01"));
        assert!(failed.contains(&"xi6(1/4)^2 = 2^12 Delta(4t)/Delta(t)"));
        assert!(failed.contains(&"phi_0_1(1/4) = (gamma^4 + 4)/gamma"));
    }
}
