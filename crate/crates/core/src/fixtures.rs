//! Built-in braids with stored expectations: two Burau kernel elements,
//! reference dual normal forms of conjugates of them, and a classical normal
//! form in `B₄` with its entry degrees. Every expectation is a stored
//! literal; nothing here is computed by the code under test.

use serde::Serialize;

use crate::burau::rho;
use crate::classical::{normal_form_c, simple_from_word, ClassicalNF};
use crate::dual::{normal_form_d, simply_nested_pair, DualNF, DualSimple};
use crate::error::Result;
use crate::words::BraidWord;

/// What a fixture is expected to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expectation {
    /// `ρ(w) = Id` and `e(w) = 0`.
    KernelElement,
    /// `w` is the reference dual normal form: it is a normalization fixed
    /// point with `p` and `factors` factors, maps to the identity, has
    /// exponent sum 0 and, when asked, has a pair that is not simply-nested.
    ReferenceDualNF { p: i64, factors: usize, has_non_simply_nested_pair: bool },
    /// `w` is the reference classical normal form with `p = 0`, and the entry
    /// degrees of `ρ(w)` are `degrees`.
    ReferenceClassicalNF { factors: Vec<Vec<i32>>, degrees: Vec<Vec<i64>> },
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub n: usize,
    pub word: BraidWord,
    pub expected: Expectation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn artin(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::artin(n, letters).expect("fixture letters are in range")
}

/// `a⁻¹b⁻¹ab`.
fn commutator(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.invert().concat(&b.invert()).and_then(|w| w.concat(a)).and_then(|w| w.concat(b)).expect("same strand count")
}

/// `u⁻¹ v u`.
fn conjugate(v: &BraidWord, u: &BraidWord) -> BraidWord {
    u.invert().concat(v).and_then(|w| w.concat(u)).expect("same strand count")
}

pub fn kernel_b6() -> BraidWord {
    let v1 = artin(6, &[1, -2, -5, 4]);
    let v2 = artin(6, &[-1, -1, 2, 5, 5, -4]);
    let s3 = artin(6, &[3]);
    let u = v1.invert().concat(&v2).expect("same strand count");
    commutator(&conjugate(&s3, &u), &s3)
}

pub fn kernel_b5() -> BraidWord {
    let w1 = artin(5, &[-3, 2, 1, 1, 2, 4, 4, 4, 3, 2]);
    let w2 = artin(5, &[-4, 3, 2, -1, -1, 2, 1, 1, 2, 2, 1, 4, 4, 4, 4, 4]);
    let a = conjugate(&artin(5, &[4]), &w1);
    let b = conjugate(&artin(5, &[4, 3, 2, 1, 1, 2, 3, 4]), &w2);
    commutator(&a, &b)
}

type FactorSpec = (&'static [(usize, usize)], usize);

const X_PRIME: &[FactorSpec] = &[
    (&[(1, 6), (4, 5)], 1),
    (&[(1, 6), (2, 5)], 1),
    (&[(1, 6), (4, 6), (2, 3)], 1),
    (&[(1, 5), (4, 5), (2, 3)], 1),
    (&[(3, 6), (4, 5)], 1),
    (&[(1, 6), (2, 5), (4, 5)], 1),
    (&[(1, 6), (3, 5)], 1),
    (&[(1, 6), (5, 6), (2, 4)], 1),
    (&[(1, 3), (5, 6)], 1),
    (&[(2, 4), (5, 6)], 1),
    (&[(1, 3), (5, 6), (4, 5)], 1),
    (&[(2, 6), (4, 5)], 1),
    (&[(1, 3)], 1),
];

const Y_PRIME: &[FactorSpec] = &[
    (&[(2, 5), (4, 5)], 1),
    (&[(1, 5), (3, 5)], 1),
    (&[(1, 4), (3, 4)], 1),
    (&[(2, 5)], 1),
    (&[(1, 5), (2, 3)], 1),
    (&[(1, 5), (3, 4)], 2),
    (&[(1, 3)], 1),
    (&[(2, 5), (3, 4)], 1),
    (&[(1, 4), (3, 4)], 1),
    (&[(1, 2), (1, 4)], 1),
    (&[(1, 2), (3, 5)], 1),
    (&[(1, 2), (1, 5), (3, 4)], 1),
    (&[(1, 5)], 1),
    (&[(1, 2)], 1),
    (&[(2, 3)], 1),
    (&[(3, 4)], 1),
    (&[(2, 4)], 1),
    (&[(1, 3), (4, 5)], 1),
    (&[(1, 2), (4, 5)], 1),
    (&[(2, 3), (4, 5)], 1),
    (&[(1, 3), (4, 5)], 1),
    (&[(1, 2), (3, 5), (4, 5)], 1),
    (&[(2, 5), (3, 5)], 1),
    (&[(1, 3), (1, 4)], 1),
    (&[(1, 2), (1, 4)], 1),
    (&[(1, 2), (1, 3), (4, 5)], 1),
    (&[(1, 2), (4, 5)], 1),
    (&[(2, 3), (4, 5)], 2),
    (&[(2, 5)], 1),
    (&[(1, 4), (2, 3)], 1),
    (&[(2, 5), (3, 5)], 1),
    (&[(1, 5), (3, 5)], 1),
    (&[(1, 5), (2, 4)], 1),
    (&[(1, 5), (4, 5), (2, 3)], 1),
    (&[(1, 5), (3, 5), (2, 3)], 4),
    (&[(2, 4)], 1),
    (&[(1, 3), (4, 5)], 1),
    (&[(1, 2), (4, 5)], 1),
    (&[(2, 3), (4, 5)], 1),
    (&[(1, 3), (4, 5)], 1),
    (&[(1, 2), (4, 5), (3, 4)], 1),
];

fn reference_nf(n: usize, p: i64, factors_spec: &[FactorSpec]) -> Result<DualNF> {
    let mut factors = Vec::new();
    for (atoms, power) in factors_spec {
        let d = DualSimple::from_atom_word(n, atoms)?;
        factors.extend(std::iter::repeat_n(d, *power));
    }
    Ok(DualNF { n, p, factors })
}

/// The reference dual normal form of the conjugate of the `B₆` kernel element.
pub fn reference_nf_x_prime() -> DualNF {
    reference_nf(6, -6, X_PRIME).expect("listed factors are dual simples")
}

/// The reference dual normal form of the conjugate of the `B₅` kernel element.
pub fn reference_nf_y_prime() -> DualNF {
    reference_nf(5, -23, Y_PRIME).expect("listed factors are dual simples")
}

const EXAMPLE_B4: &[&[i32]] = &[&[2, 1, 3], &[1, 3, 2, 1], &[1, 2, 1, 3], &[1, 3], &[1, 2], &[2]];

/// A `B₄` braid whose first factor is `σ₂σ₁σ₃`, in classical normal form.
pub fn example_b4() -> BraidWord {
    artin(4, &EXAMPLE_B4.concat())
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { name: "kernel-b6", n: 6, word: kernel_b6(), expected: Expectation::KernelElement },
        Fixture { name: "kernel-b5", n: 5, word: kernel_b5(), expected: Expectation::KernelElement },
        Fixture {
            name: "reference-nf-b6",
            n: 6,
            word: reference_nf_x_prime().to_word(),
            expected: Expectation::ReferenceDualNF { p: -6, factors: 13, has_non_simply_nested_pair: true },
        },
        Fixture {
            name: "reference-nf-b5",
            n: 5,
            word: reference_nf_y_prime().to_word(),
            expected: Expectation::ReferenceDualNF { p: -23, factors: 46, has_non_simply_nested_pair: true },
        },
        Fixture {
            name: "classical-example-b4",
            n: 4,
            word: example_b4(),
            expected: Expectation::ReferenceClassicalNF {
                factors: EXAMPLE_B4.iter().map(|f| f.to_vec()).collect(),
                degrees: vec![vec![5, 8, 7], vec![6, 7, 7], vec![5, 7, 2]],
            },
        },
    ]
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

fn kernel_checks(w: &BraidWord) -> Vec<Check> {
    let e = w.exponent_sum();
    vec![check("burau-identity", rho(w).is_identity(), ""), check("exponent-sum-zero", e == 0, format!("e = {e}"))]
}

fn classical_matches(nf: &ClassicalNF, n: usize, factors: &[Vec<i32>]) -> Result<bool> {
    let expected = factors.iter().map(|f| simple_from_word(&artin(n, f))).collect::<Result<Vec<_>>>()?;
    Ok(nf.p == 0 && nf.factors == expected)
}

pub fn run_fixture(f: &Fixture) -> FixtureReport {
    let mut checks = Vec::new();
    match &f.expected {
        Expectation::KernelElement => checks.extend(kernel_checks(&f.word)),
        Expectation::ReferenceDualNF { p, factors, has_non_simply_nested_pair } => {
            let nf = normal_form_d(&f.word);
            let again = normal_form_d(&nf.to_word());
            checks.push(check(
                "normal-form-shape",
                nf.p == *p && nf.len() == *factors,
                format!("p = {}, {} factors", nf.p, nf.len()),
            ));
            checks.push(check("fixed-point", nf.to_word() == f.word && again == nf, ""));
            checks.push(check("left-weighted", nf.is_normal(), ""));
            checks.extend(kernel_checks(&f.word));
            if *has_non_simply_nested_pair {
                let bad = nf.factors.windows(2).filter(|w| !simply_nested_pair(&w[0], &w[1])).count();
                checks.push(check("non-simply-nested-pair", bad > 0, format!("{bad} pairs")));
            }
        }
        Expectation::ReferenceClassicalNF { factors, degrees } => {
            let nf = normal_form_c(&f.word);
            let ok = classical_matches(&nf, f.n, factors).unwrap_or(false);
            checks.push(check("classical-normal-form", ok, nf.factors.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" . ")));
            let got: Vec<Vec<i64>> = rho(&f.word)
                .degree_matrix()
                .iter()
                .map(|r| r.iter().map(|d| d.finite().unwrap_or(i64::MIN)).collect())
                .collect();
            checks.push(check("degree-matrix", got == *degrees, format!("{got:?}")));
        }
    }
    FixtureReport { name: f.name.into(), n: f.n, passed: checks.iter().all(|c| c.passed), checks }
}

pub fn run_all() -> Vec<FixtureReport> {
    fixtures().iter().map(run_fixture).collect()
}
