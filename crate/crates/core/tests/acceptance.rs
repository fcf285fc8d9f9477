//! Acceptance suite: one PASS/FAIL line per criterion. Every expected
//! matrix, factor list and pair below is a literal or is rebuilt by a
//! brute-force oracle written here, independent of the library routines
//! it checks.

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;

use garside_burau::burau::rho;
use garside_burau::classical::{enumerate_perm_simples, meet_c, normal_form_c, simple_from_word, PermSimple};
use garside_burau::criteria::row_degree_profile;
use garside_burau::dual::{
    dual_simples, join_d, left_weighted_d, left_weighted_lattice, meet_d, normal_form_d, simply_nested_pair,
    DualNF, DualSimple,
};
use garside_burau::fixtures::{kernel_b5, kernel_b6, reference_nf_x_prime, reference_nf_y_prime};
use garside_burau::random::{random_b4_positive_nf, random_simply_nested_nf, random_word, rng_from_seed};
use garside_burau::recovery::{dual_nf_from_matrix, inf_from_matrix, sup_from_matrix};
use garside_burau::{BraidWord, BurauMatrix, LaurentPoly};

/// Pinned sample sizes.
const SAMPLES: usize = 1000;
const BOUND_SAMPLES_PER_N: usize = 2500;
const MAX_WORD_LEN: usize = 40;
const MAX_FACTORS: usize = 8;
const N5_PAIRS: usize = 1000;

/// Parses `0`, `±1`, `±q`, `±q^k`.
fn mono(s: &str) -> LaurentPoly {
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    match body {
        "0" => LaurentPoly::zero(),
        "1" => LaurentPoly::constant(sign),
        "q" => LaurentPoly::monomial(sign, 1),
        _ => LaurentPoly::monomial(sign, body.strip_prefix("q^").unwrap().parse().unwrap()),
    }
}

fn mat(n: usize, rows: &[&[&str]]) -> BurauMatrix {
    BurauMatrix::from_rows(n, rows.iter().map(|r| r.iter().map(|s| mono(s)).collect()).collect()).unwrap()
}

fn word(text: &str, n: usize) -> BraidWord {
    BraidWord::parse(text, n).unwrap()
}

fn artin(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::artin(n, letters).unwrap()
}

/// `ρₙ(σᵢ)` assembled from the identity and the 2×2 / 3×3 blocks.
fn block_generator(n: usize, i: usize) -> BurauMatrix {
    let d = n - 1;
    let mut rows: Vec<Vec<LaurentPoly>> =
        (0..d).map(|r| (0..d).map(|c| if r == c { mono("1") } else { mono("0") }).collect()).collect();
    let (top, block): (usize, Vec<Vec<&str>>) = if i == 1 {
        (0, vec![vec!["-q", "0"], vec!["1", "1"]])
    } else if i == n - 1 {
        (d - 2, vec![vec!["1", "q"], vec!["0", "-q"]])
    } else {
        (i - 2, vec![vec!["1", "q", "0"], vec!["0", "-q", "0"], vec!["0", "1", "1"]])
    };
    for (r, row) in block.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            rows[top + r][top + c] = mono(s);
        }
    }
    BurauMatrix::from_rows(n, rows).unwrap()
}

fn atoms(n: usize, a: &[(usize, usize)]) -> DualSimple {
    DualSimple::from_atom_word(n, a).unwrap()
}

fn max_deg(m: &BurauMatrix) -> i64 {
    m.max_deg().finite().unwrap()
}

fn criterion_1() -> Result<String, String> {
    let b4 = [
        mat(4, &[&["-q", "0", "0"], &["1", "1", "0"], &["0", "0", "1"]]),
        mat(4, &[&["1", "q", "0"], &["0", "-q", "0"], &["0", "1", "1"]]),
        mat(4, &[&["1", "0", "0"], &["0", "1", "q"], &["0", "0", "-q"]]),
    ];
    for (i, expected) in b4.iter().enumerate() {
        if rho(&artin(4, &[i as i32 + 1])) != *expected {
            return Err(format!("ρ₄(σ{})", i + 1));
        }
    }
    for n in [3, 5, 6] {
        for i in 1..n {
            if rho(&artin(n, &[i as i32])) != block_generator(n, i) {
                return Err(format!("ρ_{n}(σ{i})"));
            }
        }
    }
    Ok("B₄ displays and block forms for n = 3, 5, 6".into())
}

fn criterion_2() -> Result<String, String> {
    let cases: Vec<(&str, BurauMatrix)> = vec![
        ("D", mat(4, &[&["0", "0", "-q^3"], &["0", "-q^2", "0"], &["-q", "0", "0"]])),
        ("s2 s1 s3", mat(4, &[&["0", "q", "q^2"], &["-q", "-q", "-q^2"], &["1", "1", "0"]])),
        ("s1 s3", mat(4, &[&["-q", "0", "0"], &["1", "1", "q"], &["0", "0", "-q"]])),
        ("s1 s3 s2", mat(4, &[&["-q", "-q^2", "0"], &["1", "q", "q"], &["0", "-q", "-q"]])),
        ("s1 s3 s2 s1", mat(4, &[&["0", "-q^2", "0"], &["0", "q", "q"], &["-q", "-q", "-q"]])),
        ("s1 s3 s2 s3", mat(4, &[&["-q", "-q^2", "-q^3"], &["1", "q", "0"], &["0", "-q", "0"]])),
        ("s1 s3 s2 s1 s3", mat(4, &[&["0", "-q^2", "-q^3"], &["0", "q", "0"], &["-q", "-q", "0"]])),
        ("D s2 s1 s3 s2", mat(4, &[&["-q^3", "0", "0"], &["q^3", "q^4", "q^4"], &["0", "0", "-q^3"]])),
        ("s2 s1 s3 s2", mat(4, &[&["0", "0", "q^2"], &["-q", "-q^2", "-q^2"], &["1", "0", "0"]])),
        ("D s2", mat(4, &[&["0", "-q^3", "-q^3"], &["0", "q^3", "0"], &["-q", "-q^2", "0"]])),
        ("D^2", mat(4, &[&["q^4", "0", "0"], &["0", "q^4", "0"], &["0", "0", "q^4"]])),
    ];
    for (w, expected) in &cases {
        if rho(&word(w, 4)) != *expected {
            return Err(format!("ρ₄({w})"));
        }
    }
    Ok(format!("{} matrices", cases.len()))
}

fn criterion_3() -> Result<String, String> {
    let factors: [&[i32]; 6] = [&[2, 1, 3], &[1, 3, 2, 1], &[1, 2, 1, 3], &[1, 3], &[1, 2], &[2]];
    let w = artin(4, &factors.concat());
    let nf = normal_form_c(&w);
    let expected: Vec<PermSimple> = factors.iter().map(|f| simple_from_word(&artin(4, f)).unwrap()).collect();
    if nf.p != 0 || nf.factors != expected {
        return Err(format!("normal form p = {}, {} factors", nf.p, nf.len()));
    }
    let degrees: Vec<Vec<i64>> =
        rho(&w).degree_matrix().iter().map(|r| r.iter().map(|d| d.finite().unwrap()).collect()).collect();
    if degrees != vec![vec![5, 8, 7], vec![6, 7, 7], vec![5, 7, 2]] {
        return Err(format!("degree matrix {degrees:?}"));
    }
    Ok("six factors, p = 0, degrees (5 8 7; 6 7 7; 5 7 2)".into())
}

/// Row-maximum inequalities by starting set, evaluated here from scratch.
fn row_case_holds(start: &[usize], m: [i64; 3]) -> bool {
    let [m1, m2, m3] = m;
    let a1 = m1 > m2 && m1 > m3 + 1;
    let a2 = m2 >= m1 && m2 > m3;
    let a3 = m3 >= m1 && m3 >= m2;
    match start {
        [1] => a1,
        [2] => a2,
        [3] => a3,
        [1, 2] => a1 || a2,
        [2, 3] => a2 || a3,
        [1, 3] => (m1 > m2 && m1 > m3) || a3,
        _ => false,
    }
}

fn criterion_4() -> Result<String, String> {
    let mut rng = rng_from_seed(4);
    for k in 0..SAMPLES {
        let r = rng.gen_range(2..=MAX_FACTORS);
        let nf = random_b4_positive_nf(r, &mut rng).map_err(|e| e.to_string())?;
        let w = nf.to_word();
        let m = rho(&w);
        let rows: Vec<i64> = m.row_maxima().iter().map(|d| d.finite().unwrap()).collect();
        let start = nf.factors[0].starting_set();
        let sup = nf.sup();
        let top = max_deg(&m);
        if !row_case_holds(&start, [rows[0], rows[1], rows[2]]) || !(sup <= top && top <= 3 * sup) {
            return Err(format!("sample {k}: {w}"));
        }
        let profile = row_degree_profile(&w).map_err(|e| e.to_string())?;
        if !profile.holds() {
            return Err(format!("library profile disagrees on sample {k}"));
        }
    }
    Ok(format!("{SAMPLES} samples, zero violations"))
}

fn criterion_5() -> Result<String, String> {
    let w = word("a3,4 a2,4", 4);
    let nf = normal_form_d(&w);
    let fixed = DualNF { n: 4, p: 0, factors: vec![atoms(4, &[(3, 4)]), atoms(4, &[(2, 4)])] };
    if nf != fixed || nf.to_word() != w {
        return Err("a3,4 a2,4 is not a fixed point".into());
    }
    let inv = DualNF { n: 4, p: -2, factors: vec![atoms(4, &[(1, 2), (3, 4)]), atoms(4, &[(1, 2), (1, 4)])] };
    if normal_form_d(&w.invert()) != inv {
        return Err(format!("inverse normal form {:?}", normal_form_d(&w.invert())));
    }
    Ok("fixed point and δ⁻²(a1,2 a3,4)(a1,2 a1,4)".into())
}

fn criterion_6() -> Result<String, String> {
    let expected_pairs = [
        (&[(1, 2), (3, 4)][..], &[(2, 4)][..]),
        (&[(1, 2), (3, 4)], &[(3, 4), (2, 3)]),
        (&[(1, 2), (3, 4)], &[(1, 2), (1, 4)]),
        (&[(2, 3), (1, 4)], &[(1, 3)]),
        (&[(2, 3), (1, 4)], &[(1, 3), (2, 3)]),
        (&[(2, 3), (1, 4)], &[(1, 3), (1, 4)]),
    ];
    let mut expected: Vec<(DualSimple, DualSimple)> = expected_pairs.iter().map(|(a, b)| (atoms(4, a), atoms(4, b))).collect();
    let simples = dual_simples(4);
    if simples.len() != 14 {
        return Err(format!("{} simples", simples.len()));
    }
    let mut found = Vec::new();
    for a in simples {
        for b in simples {
            if left_weighted_d(a, b) && !simply_nested_pair(a, b) {
                found.push((a.clone(), b.clone()));
            }
        }
    }
    expected.sort();
    found.sort();
    if found != expected {
        return Err(format!("{} pairs found", found.len()));
    }
    Ok("exactly the six pairs among 196".into())
}

fn criterion_7() -> Result<String, String> {
    let mut rng = rng_from_seed(7);
    let mut total = 0;
    for n in 3..=6 {
        for _ in 0..BOUND_SAMPLES_PER_N {
            let len = rng.gen_range(0..=MAX_WORD_LEN);
            let w = random_word(n, len, &mut rng);
            if max_deg(&rho(&w)) > normal_form_d(&w).sup() {
                return Err(format!("violated by {w} in B{n}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} words, zero violations"))
}

fn criterion_8() -> Result<String, String> {
    for n in 3..=6 {
        let mut rng = rng_from_seed(80 + n as u64);
        for _ in 0..SAMPLES {
            let r = rng.gen_range(0..=MAX_FACTORS);
            let nf = random_simply_nested_nf(n, r, &mut rng).map_err(|e| e.to_string())?;
            let w = nf.to_word();
            if normal_form_d(&w) != nf {
                return Err(format!("generator produced a non-normal form in B{n}"));
            }
            if max_deg(&rho(&w)) != nf.sup() {
                return Err(format!("sup mismatch for {w} in B{n}"));
            }
        }
    }
    Ok(format!("{SAMPLES} simply-nested braids per n = 3..6"))
}

fn criterion_9() -> Result<String, String> {
    for n in 3..=6 {
        let mut rng = rng_from_seed(90 + n as u64);
        for _ in 0..SAMPLES {
            let r = rng.gen_range(0..=MAX_FACTORS);
            let nf = random_simply_nested_nf(n, r, &mut rng).map_err(|e| e.to_string())?;
            let m = rho(&nf.to_word());
            let (got, trace) = dual_nf_from_matrix(&m, n).map_err(|e| format!("B{n}: {e}"))?;
            if got != nf || trace.replay(n) != m {
                return Err(format!("B{n}: recovered {got:?} for {nf:?}"));
            }
        }
    }
    let mut rng = rng_from_seed(93);
    for _ in 0..SAMPLES {
        let len = rng.gen_range(0..=MAX_WORD_LEN);
        let w = random_word(3, len, &mut rng);
        let m = rho(&w);
        let expected = normal_form_d(&w);
        let (got, _) = dual_nf_from_matrix(&m, 3).map_err(|e| format!("{w}: {e}"))?;
        if got != expected || sup_from_matrix(&m) != expected.sup() || inf_from_matrix(&m) != expected.inf() {
            return Err(format!("3-braid {w}"));
        }
    }
    Ok(format!("{SAMPLES} per n = 3..6 and {SAMPLES} arbitrary 3-braids with sup and inf"))
}

fn criterion_10() -> Result<String, String> {
    for (name, w) in [("B6", kernel_b6()), ("B5", kernel_b5())] {
        if !rho(&w).is_identity() || w.exponent_sum() != 0 {
            return Err(format!("{name} kernel element"));
        }
    }
    for (name, nf, p, r) in [("B6", reference_nf_x_prime(), -6, 13), ("B5", reference_nf_y_prime(), -23, 46)] {
        let w = nf.to_word();
        if nf.p != p || nf.len() != r {
            return Err(format!("{name} reference form has p = {}, {} factors", nf.p, nf.len()));
        }
        if normal_form_d(&w) != nf || !nf.is_normal() {
            return Err(format!("{name} reference form is not a normalization fixed point"));
        }
        if !rho(&w).is_identity() || w.exponent_sum() != 0 {
            return Err(format!("{name} reference form is not in the kernel"));
        }
    }
    let x = reference_nf_x_prime();
    if x.factors.windows(2).all(|p| simply_nested_pair(&p[0], &p[1])) {
        return Err("B6 reference form has no pair failing simple nesting".into());
    }
    Ok("ρ = Id, e = 0, reference forms fixed and in the kernel".into())
}

/// Greatest common left divisor by scanning every simple.
fn brute_meet_c(all: &[PermSimple], a: &PermSimple, b: &PermSimple) -> PermSimple {
    all.iter().filter(|s| s.left_divides(a) && s.left_divides(b)).max_by_key(|s| s.len()).unwrap().clone()
}

fn brute_meet_d(all: &[DualSimple], a: &DualSimple, b: &DualSimple) -> DualSimple {
    all.iter().filter(|s| s.left_divides(a) && s.left_divides(b)).max_by_key(|s| s.len()).unwrap().clone()
}

fn brute_join_d(all: &[DualSimple], a: &DualSimple, b: &DualSimple) -> DualSimple {
    all.iter().filter(|s| a.left_divides(s) && b.left_divides(s)).min_by_key(|s| s.len()).unwrap().clone()
}

fn criterion_11() -> Result<String, String> {
    for n in [3, 4] {
        let all = dual_simples(n);
        for a in all {
            for b in all {
                if left_weighted_d(a, b) != left_weighted_lattice(a, b) {
                    return Err(format!("left-weightedness differs on ({a}, {b})"));
                }
            }
        }
    }
    let mut pairs = 0;
    for n in 2..=4 {
        let cs = enumerate_perm_simples(n);
        let ds = dual_simples(n);
        for a in &cs {
            for b in &cs {
                if meet_c(a, b) != brute_meet_c(&cs, a, b) {
                    return Err(format!("meet_c({a}, {b})"));
                }
                pairs += 1;
            }
        }
        for a in ds {
            for b in ds {
                if meet_d(a, b) != brute_meet_d(ds, a, b) || join_d(a, b) != brute_join_d(ds, a, b) {
                    return Err(format!("meet_d/join_d({a}, {b})"));
                }
                pairs += 1;
            }
        }
    }
    let mut rng = rng_from_seed(11);
    let cs = enumerate_perm_simples(5);
    let ds = dual_simples(5);
    for _ in 0..N5_PAIRS {
        let (a, b) = (&cs[rng.gen_range(0..cs.len())], &cs[rng.gen_range(0..cs.len())]);
        if meet_c(a, b) != brute_meet_c(&cs, a, b) {
            return Err(format!("meet_c({a}, {b}) in B5"));
        }
        let (a, b) = (&ds[rng.gen_range(0..ds.len())], &ds[rng.gen_range(0..ds.len())]);
        if meet_d(a, b) != brute_meet_d(ds, a, b) || join_d(a, b) != brute_join_d(ds, a, b) {
            return Err(format!("meet_d/join_d({a}, {b}) in B5"));
        }
        pairs += 2;
    }
    Ok(format!("{pairs} pairs checked"))
}

fn criterion_12() -> Result<String, String> {
    let mut rng = rng_from_seed(12);
    for n in 3..=6 {
        for _ in 0..SAMPLES {
            let len = rng.gen_range(0..=MAX_WORD_LEN);
            let w = random_word(n, len, &mut rng);
            let e = w.exponent_sum();
            let sign = if e % 2 == 0 { 1 } else { -1 };
            if rho(&w).det() != LaurentPoly::monomial(sign, e) {
                return Err(format!("det of {w} in B{n}"));
            }
        }
    }
    Ok(format!("{SAMPLES} words per n = 3..6"))
}

type Criterion = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 12] = [
        ("generator matrices", criterion_1),
        ("explicit product matrices", criterion_2),
        ("classical example braid", criterion_3),
        ("row-degree inequalities in B4", criterion_4),
        ("dual normal form fixtures", criterion_5),
        ("left-weighted pairs that are not simply-nested", criterion_6),
        ("maximal degree bounded by sup", criterion_7),
        ("sup equals maximal degree when simply-nested", criterion_8),
        ("recovery round trip", criterion_9),
        ("kernel fixtures", criterion_10),
        ("oracle equivalences", criterion_11),
        ("determinant law", criterion_12),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
