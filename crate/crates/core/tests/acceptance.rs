//! One PASS/FAIL line per acceptance criterion. Every comparison is exact;
//! the caps below are the only tunables.

use jacobi_forms::check::CheckOutcome;
use jacobi_forms::claims;
use jacobi_forms::forms::FormName;
use jacobi_forms::genus::{mwg, CharData};
use jacobi_forms::identities as id;
use jacobi_forms::rat::rat;
use jacobi_forms::ring::{decompose, elliptic_check, monomials_of_index, solve_by_q0, GeneratorPoly, JacobiForm, Q0Solution};
use jacobi_forms::series::{QExp, YLaurent};
use jacobi_forms::specials::hauptmodul_checks;
use jacobi_forms::Result;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

/// Coefficients must agree exactly.
const TOLERANCE: i64 = 0;
const THETA_CAP: i64 = 10;
const SIGMA_W: usize = 12;
const SIGMA_CAP: i64 = 6;
const JET_U: usize = 6;
const JET_CAP: i64 = 5;
const RELATION_CAP: i64 = 8;
const MAX_INDEX: u32 = 8;
const ROUND_TRIPS: usize = 50;
const GENUS_CAP: i64 = 6;
const SPECIAL_CAP: i64 = 10;
const CONGRUENCE_CAP: i64 = 20;
const AHAT_CAP: i64 = 5;
const LEVEL2_CAP: i64 = 6;
const SQEG_CAP: i64 = 4;
const DELTA2_BOUND: i64 = 13;

/// Criteria whose displayed statements are known not to hold as printed.
const KNOWN_DEFECTS: [usize; 3] = [7, 11, 15];

fn q(n: i64) -> QExp {
    QExp::int(n)
}

fn c1() -> Result<Vec<CheckOutcome>> {
    Ok(vec![id::theta_sum_product(q(THETA_CAP))?])
}

fn c2() -> Result<Vec<CheckOutcome>> {
    Ok(vec![id::sigma_identity(SIGMA_W, q(SIGMA_CAP))?])
}

fn c3() -> Result<Vec<CheckOutcome>> {
    Ok(vec![id::theta_jet_identity(JET_U, q(JET_CAP))?])
}

fn c4() -> Result<Vec<CheckOutcome>> {
    Ok(vec![id::torsion_relation(q(RELATION_CAP))?, id::xi_in_generators(q(RELATION_CAP))?])
}

fn pick(v: Vec<CheckOutcome>, ids: &[&str]) -> Vec<CheckOutcome> {
    v.into_iter().filter(|c| ids.contains(&c.id.as_str())).collect()
}

fn c5() -> Result<Vec<CheckOutcome>> {
    let mut v = id::normal_forms(MAX_INDEX)?;
    v.extend(pick(claims::ring_structure()?, &["psi_2^(2) = phi_0_1^2 - 24 phi_0_2"]));
    Ok(v)
}

fn c6() -> Result<Vec<CheckOutcome>> {
    let mut v = pick(claims::ring_structure()?, &["decompose xi_0_6"]);
    let mut runner = TestRunner::deterministic();
    for m in 1..=MAX_INDEX {
        let monos = monomials_of_index(m);
        let strat = proptest::collection::vec(-4i64..5, monos.len());
        let cap = q(m.div_ceil(6) as i64 + 2);
        let id = format!("{ROUND_TRIPS} decompose round-trips at index {m}");
        let mut failure = None;
        for _ in 0..ROUND_TRIPS {
            let cs = strat.new_tree(&mut runner).expect("strategy").current();
            let p = GeneratorPoly::from_terms(rat(0), rat(m as i64), monos.iter().cloned().zip(cs.iter().map(|c| rat(*c))));
            let f = p.evaluate(cap)?;
            let back = decompose(&f)?;
            if back.evaluate(cap)? != f || !back.is_integral() {
                failure = Some(format!("{p} came back as {back}"));
                break;
            }
        }
        v.push(match failure {
            None => CheckOutcome::pass(&id, cap),
            Some(w) => CheckOutcome::fail(&id, cap, w),
        });
    }
    Ok(v)
}

fn c7() -> Result<Vec<CheckOutcome>> {
    id::displayed_low_terms()
}

fn c8() -> Result<Vec<CheckOutcome>> {
    let v = claims::genus_checks(q(GENUS_CAP))?;
    Ok(v.into_iter().filter(|c| !c.id.starts_with("mwg")).collect())
}

fn c9() -> Result<Vec<CheckOutcome>> {
    let cap = q(GENUS_CAP);
    let w = mwg(&CharData::from_pairs(2, 2, [("S2", rat(-48))])?, cap)?;
    let dec = w.decomposition.as_ref().map(ToString::to_string).unwrap_or_default();
    let id = "mwg(d=2, r=2, S2 = -48) = 2 phi_0_1";
    let mut v = vec![if dec == "2*phi_0_1" {
        CheckOutcome::pass(id, cap)
    } else {
        CheckOutcome::fail(id, cap, dec)
    }];
    let r = elliptic_check(&w.core)?;
    v.push(if r.passed() {
        CheckOutcome::pass("mwg core is elliptic", cap)
    } else {
        CheckOutcome::fail("mwg core is elliptic", cap, format!("{:?}", r.witness))
    });
    v.push(if w.core.series.terms().all(|(_, c)| c.is_integral()) {
        CheckOutcome::pass("mwg core has pole-free integral coefficients", cap)
    } else {
        CheckOutcome::fail("mwg core has pole-free integral coefficients", cap, "non-integral".into())
    });
    Ok(v)
}

fn c10() -> Result<Vec<CheckOutcome>> {
    let mut v: Vec<CheckOutcome> = claims::torsion_values(q(SPECIAL_CAP))?
        .into_iter()
        .filter(|c| !c.id.contains("beta") && !c.id.contains("gamma"))
        .collect();
    v.extend(claims::alpha_checks(q(SPECIAL_CAP))?);
    Ok(v)
}

fn c11() -> Result<Vec<CheckOutcome>> {
    let v = hauptmodul_checks(q(SPECIAL_CAP))?;
    Ok(v.into_iter().filter(|c| c.id != "alpha = 16 gamma^4 - 8").collect())
}

fn c12() -> Result<Vec<CheckOutcome>> {
    claims::abg_congruences(q(CONGRUENCE_CAP))
}

fn c13() -> Result<Vec<CheckOutcome>> {
    claims::ahat_checks(q(AHAT_CAP))
}

fn c14() -> Result<Vec<CheckOutcome>> {
    Ok(vec![id::quintuple_product(q(THETA_CAP))?])
}

fn c15() -> Result<Vec<CheckOutcome>> {
    id::level2_identities(q(LEVEL2_CAP))
}

fn c16() -> Result<Vec<CheckOutcome>> {
    claims::sqeg_checks(q(SQEG_CAP))
}

fn c17() -> Result<Vec<CheckOutcome>> {
    claims::delta2_checks(DELTA2_BOUND)
}

fn c18() -> Result<Vec<CheckOutcome>> {
    id::elliptic_suite()
}

/// `q^1` of the `E8` theta series along a root: the 240 roots grouped by
/// their pairing with `e1 + e2`, in doubled coordinates.
fn e8_oracle() -> YLaurent {
    let mut roots: Vec<[i64; 8]> = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for (a, b) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = [0; 8];
                v[i] = a;
                v[j] = b;
                roots.push(v);
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push(std::array::from_fn(|k| if mask >> k & 1 == 1 { -1 } else { 1 }));
        }
    }
    assert_eq!(roots.len(), 240);
    // pairing with e1 + e2 is (r0 + r1)/2, i.e. r0 + r1 in half-units
    YLaurent::from_terms(roots.iter().map(|r| (r[0] + r[1], rat(1))))
}

fn c19() -> Result<Vec<CheckOutcome>> {
    let cap = q(2);
    let e41 = solve_by_q0(4, 1, &YLaurent::one(), cap)?;
    let got = e41.form().series.coeff(q(1))?;
    let oracle = e8_oracle();
    let shown = YLaurent::from_ints(&[(2, 1), (1, 56), (0, 126), (-1, 56), (-2, 1)]);
    let id = "E_4_1 q^1 = y^2 + 56y + 126 + 56y^-1 + y^-2 = E8 root count";
    let mut v = vec![if got == oracle && got == shown {
        CheckOutcome::pass(id, q(1))
    } else {
        CheckOutcome::fail(id, q(1), format!("solve {got}, oracle {oracle}"))
    }];
    let fam = solve_by_q0(6, 3, &YLaurent::one(), cap)?;
    let id = "(6, 3) is a one-parameter family with kernel Delta phi_m2_1^3";
    let kernel_ok = match &fam {
        Q0Solution::Family { kernel, .. } => {
            let delta_phi = JacobiForm::named(FormName::PhiM2_1, cap)?.series.pow(3);
            let d = jacobi_forms::series::FourierSeries::from_scalar(&jacobi_forms::forms::delta(cap)?);
            kernel.len() == 1 && kernel[0].1.series.agrees_through(&d.mul(&delta_phi), cap)?.is_none()
        }
        Q0Solution::Unique { .. } => false,
    };
    v.push(if kernel_ok { CheckOutcome::pass(id, cap) } else { CheckOutcome::fail(id, cap, format!("{fam:?}")) });
    Ok(v)
}

type Criterion = (&'static str, fn() -> Result<Vec<CheckOutcome>>);

const CRITERIA: [Criterion; 19] = [
    ("theta sum equals theta product through q^10", c1),
    ("phi_m1_half at y = e^w equals the G_2k exponential through w^12, q^6", c2),
    ("jet of theta equals theta exp(-sum P_n u^n/n!) through u^6, q^5", c3),
    ("4 phi_0_4 = phi_0_1 phi_0_3 - phi_0_2^2 and the xi_0_6 formula through q^8", c4),
    ("normal forms for m <= 8 and psi_2^(2) = phi_0_1^2 - 24 phi_0_2", c5),
    ("decomposition of xi_0_6 and 50 round-trips per index m <= 8", c6),
    ("displayed q^0, q^1 terms of phi_0_1, phi_0_2, phi_0_3, phi_0_4", c7),
    ("K3 elliptic genus, Euler number 24, K3 and quintic congruences", c8),
    ("modified Witten genus of K3 is 2 phi_0_1, elliptic and pole-free", c9),
    ("values at 0, 1/2, 1/3, 1/4; alpha display; alpha = 16 gamma^4 - 8", c10),
    ("xi_0_6 at torsion points as Delta quotients through q^10", c11),
    ("alpha - 8 = 0 mod 2^8 and beta - 3 = 0 mod 3^3 through q^20", c12),
    ("values at (tau + 1)/2 through q^5", c13),
    ("quintuple product through q^10", c14),
    ("level-2 theta identities through q^6", c15),
    ("second-quantized genus slices and product oracle through q^4", c16),
    ("Delta_2 coefficients, antisymmetry and first slice", c17),
    ("elliptic law for every named generator", c18),
    ("E_4_1 against the E8 roots; (6, 3) family", c19),
];

fn main() {
    assert_eq!(TOLERANCE, 0);
    let mut unexpected = 0;
    for (n, (title, f)) in CRITERIA.iter().enumerate() {
        let n = n + 1;
        let (ok, detail) = match f() {
            Ok(v) => {
                let bad: Vec<String> = v.iter().filter(|c| !c.passed()).map(ToString::to_string).collect();
                (bad.is_empty() && !v.is_empty(), bad.join("; "))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        if ok {
            println!("PASS {n:2}. {title}");
        } else {
            let known = KNOWN_DEFECTS.contains(&n);
            let note = if known { " [statement as displayed does not hold]" } else { "" };
            println!("FAIL {n:2}. {title}{note}: {detail}");
            if !known {
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
