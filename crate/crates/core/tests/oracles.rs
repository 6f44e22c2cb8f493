use jacobi_forms::rat::rat;
use jacobi_forms::ring::solve_by_q0;
use jacobi_forms::series::{QExp, YLaurent};

/// The 240 roots of `E8` in doubled coordinates.
fn e8_roots() -> Vec<[i64; 8]> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [-2, 2] {
                for sj in [-2, 2] {
                    let mut v = [0; 8];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(std::array::from_fn(|k| if mask >> k & 1 == 1 { -1 } else { 1 }));
        }
    }
    out
}

#[test]
fn e41_matches_root_count() {
    let roots = e8_roots();
    assert_eq!(roots.len(), 240);
    let alpha = [2, 2, 0, 0, 0, 0, 0, 0];
    let mut terms = Vec::new();
    for r in &roots {
        assert_eq!(r.iter().map(|x| x * x).sum::<i64>(), 8);
        // pairing in doubled coordinates is 4 (r, alpha)
        let ip: i64 = r.iter().zip(alpha).map(|(a, b)| a * b).sum::<i64>() / 4;
        terms.push((2 * ip, rat(1)));
    }
    let oracle = YLaurent::from_terms(terms);
    let s = solve_by_q0(4, 1, &YLaurent::one(), QExp::int(2)).unwrap();
    assert_eq!(s.form().series.coeff(QExp::int(1)).unwrap(), oracle);
}

#[test]
fn e41_second_coefficient_matches_norm_four_vectors() {
    // lattice vectors of norm 4 in doubled coordinates: squared length 16
    let mut terms = Vec::new();
    let mut count = 0;
    let range = -4i64..=4;
    let mut v = [0i64; 8];
    fn rec(k: usize, v: &mut [i64; 8], left: i64, range: &std::ops::RangeInclusive<i64>, f: &mut dyn FnMut(&[i64; 8])) {
        if k == 8 {
            if left == 0 {
                f(v);
            }
            return;
        }
        for x in range.clone() {
            if x * x <= left {
                v[k] = x;
                rec(k + 1, v, left - x * x, range, f);
            }
        }
    }
    rec(0, &mut v, 16, &range, &mut |v| {
        let parity = v[0].rem_euclid(2);
        if v.iter().any(|x| x.rem_euclid(2) != parity) {
            return;
        }
        let s: i64 = v.iter().sum();
        if s.rem_euclid(4) != 0 {
            return;
        }
        count += 1;
        terms.push((2 * (v[0] + v[1]) / 2, rat(1)));
    });
    assert_eq!(count, 2160);
    let oracle = YLaurent::from_terms(terms);
    let s = solve_by_q0(4, 1, &YLaurent::one(), QExp::int(2)).unwrap();
    assert_eq!(s.form().series.coeff(QExp::int(2)).unwrap(), oracle);
}
