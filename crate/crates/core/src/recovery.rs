//! Reconstruction of a dual normal form from a Burau matrix alone, for
//! simply-nested braids of any index and for all 3-braids.
//!
//! The last factor is peeled off repeatedly. At each stage band generators
//! are read off the column and entry degrees of the matrix and stripped
//! until the maximal degree drops; that product is tried first as the last
//! factor, then the other dual simples, those divisible by the letter
//! first. A factor is kept when its removal lowers the maximal degree by
//! exactly one and it is left-weighted (and simply-nested for `n ≥ 4`)
//! against the factor after it. The search backtracks on dead ends and
//! stops at a pure `δ` power, so every answer reproduces the matrix.

use std::sync::OnceLock;

use serde::Serialize;

use crate::burau::{apply_letters_right, rho_delta_power};
use crate::dual::{dual_simples, left_weighted_d, simply_nested_pair, DualNF, DualSimple};
use crate::error::{Error, Result};
use crate::laurent::{BurauMatrix, Degree};

/// Output of the letter-finding step, 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixLetter {
    pub max_deg: i64,
    /// Least column attaining the global maximal degree.
    pub i0: usize,
    /// Row of column `i0` attaining it.
    pub row: usize,
    /// Punctures satisfying both entry-degree conditions, increasing.
    pub candidates: Vec<usize>,
    /// The accepted puncture: `a_{i0,p}` divides the last factor.
    pub p: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecoveryStep {
    /// The letter read off the matrix, when it divides the factor; `None`
    /// when the factor was found by the unguided part of the search.
    pub letter: Option<PrefixLetter>,
    /// The factor removed at this step.
    pub factor: DualSimple,
}

/// Steps run from the last factor to the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecoveryTrace {
    pub steps: Vec<RecoveryStep>,
    pub terminal_power: i64,
}

impl RecoveryTrace {
    /// `ρ(δ)^p ρ(d₁)⋯ρ(d_r)`, which equals the input matrix.
    pub fn replay(&self, n: usize) -> BurauMatrix {
        let mut m = rho_delta_power(n, self.terminal_power);
        for step in self.steps.iter().rev() {
            apply_letters_right(&mut m, &letters(&step.factor));
        }
        m
    }
}

fn letters(d: &DualSimple) -> Vec<i32> {
    d.to_word().to_artin_letters()
}

fn inverse_letters(d: &DualSimple) -> Vec<i32> {
    letters(d).iter().rev().map(|&l| -l).collect()
}

/// `m·ρ(d)⁻¹`.
fn strip(m: &BurauMatrix, d: &DualSimple) -> BurauMatrix {
    let mut out = m.clone();
    apply_letters_right(&mut out, &inverse_letters(d));
    out
}

fn deg(m: &BurauMatrix, row: usize, col: usize) -> Degree {
    m.entry(row - 1, col - 1).max_deg()
}

fn require_square(m: &BurauMatrix, n: usize) -> Result<()> {
    if m.n() != n {
        return Err(Error::StrandMismatch { expected: n, got: m.n() });
    }
    if n < 2 {
        return Err(Error::BadStrandCount(n));
    }
    Ok(())
}

/// `e` with `det M = (−q)^e`, or an error when the determinant has another
/// shape.
pub fn exponent_from_det(m: &BurauMatrix) -> Result<i64> {
    let det = m.det();
    match det.as_monomial() {
        Some((c, e)) if c.as_i64() == Some(if e.rem_euclid(2) == 0 { 1 } else { -1 }) => Ok(e),
        _ => Err(Error::Input(format!("determinant {det} is not of the form (−q)^e"))),
    }
}

/// `p` with `M = ρ(δ)^p`, if there is one. The candidate `p` comes from the
/// degree of the determinant.
pub fn delta_power_from_matrix(m: &BurauMatrix) -> Option<i64> {
    let n = m.n() as i64;
    let e = exponent_from_det(m).ok()?;
    if n < 2 || e % (n - 1) != 0 {
        return None;
    }
    let p = e / (n - 1);
    (rho_delta_power(m.n(), p) == *m).then_some(p)
}

/// `M(ρ)`, which equals `sup_d` for simply-nested braids.
pub fn sup_from_matrix(m: &BurauMatrix) -> i64 {
    m.max_deg().finite().expect("Burau matrices are invertible")
}

/// `m(ρ)`, which equals `inf_d` for 3-braids.
pub fn inf_from_matrix(m: &BurauMatrix) -> i64 {
    m.min_deg().finite().expect("Burau matrices are invertible")
}

/// Finds a band generator `a_{i0,p}` dividing the last factor of the dual
/// normal form of a simply-nested braid with Burau matrix `m`.
pub fn find_prefix_letter(m: &BurauMatrix) -> Result<PrefixLetter> {
    let n = m.n();
    if n < 3 {
        return Err(Error::NotSimplyNestedEvidence(format!("B_{n} has no proper dual simples")));
    }
    if delta_power_from_matrix(m).is_some() {
        return Err(Error::NotSimplyNestedEvidence("matrix is a power of ρ(δ)".into()));
    }
    letter_from_degrees(m)
}

/// The degree tests behind [`find_prefix_letter`], without the `δ`-power
/// check.
fn letter_from_degrees(m: &BurauMatrix) -> Result<PrefixLetter> {
    let n = m.n();
    let top = m.max_deg();
    let max_deg = top.finite().expect("Burau matrices are invertible");
    let i0 = (1..n)
        .find(|&c| m.col_max(c - 1).expect("in range") == top)
        .expect("some column attains the maximum");
    let row = (1..n).find(|&r| deg(m, r, i0) == top).expect("column attains it");
    let candidates: Vec<usize> = (i0 + 1..=n)
        .filter(|&p| deg(m, row, p - 1) == top && (p == n || deg(m, row, p) != top))
        .collect();
    for &p in &candidates {
        if p == n {
            return Ok(PrefixLetter { max_deg, i0, row, candidates, p });
        }
        let a = DualSimple::atom(n, i0, p).expect("valid atom");
        if deg(&strip(m, &a), row, p) < top {
            return Ok(PrefixLetter { max_deg, i0, row, candidates, p });
        }
    }
    Err(Error::NotSimplyNestedEvidence(format!(
        "no puncture passes the degree-drop test (i0 = {i0}, row = {row}, candidates {candidates:?})"
    )))
}

/// Proper dual simples of `B_n` with their inverse Artin letters, longest
/// first. Cached per `n`.
type SimpleWithInverse = (DualSimple, Vec<i32>);

fn proper_simples(n: usize) -> &'static [SimpleWithInverse] {
    const MAX: usize = 10;
    static CACHE: [OnceLock<Vec<SimpleWithInverse>>; MAX + 1] = [const { OnceLock::new() }; MAX + 1];
    CACHE[n].get_or_init(|| {
        let mut v: Vec<SimpleWithInverse> = dual_simples(n)
            .iter()
            .filter(|d| !d.is_empty() && !d.is_delta())
            .map(|d| (d.clone(), inverse_letters(d)))
            .collect();
        v.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        v
    })
}

/// Search nodes allowed per matrix. Simply-nested inputs need a few per
/// factor; the cap only bounds the time spent rejecting other matrices.
pub const SEARCH_BUDGET: usize = 5_000;

struct Search {
    n: usize,
    steps: Vec<RecoveryStep>,
    budget: usize,
}

impl Search {
    fn compatible(&self, d: &DualSimple, next: Option<&DualSimple>) -> bool {
        match next {
            None => true,
            Some(b) if self.n == 3 => left_weighted_d(d, b),
            Some(b) => left_weighted_d(d, b) && simply_nested_pair(d, b),
        }
    }

    /// Candidate last factors in the order they are tried: those divisible
    /// by the letter read off the matrix, then those divisible by another
    /// puncture passing the column tests, then every other proper simple.
    fn ordered(&self, letter: Option<&PrefixLetter>) -> Vec<usize> {
        let pool = proper_simples(self.n);
        let rank = |d: &DualSimple| -> usize {
            let Some(l) = letter else { return 2 };
            let divides = |p: usize| DualSimple::atom(self.n, l.i0, p).expect("valid atom").left_divides(d);
            if divides(l.p) {
                0
            } else if l.candidates.iter().any(|&p| divides(p)) {
                1
            } else {
                2
            }
        };
        let mut idx: Vec<(usize, usize)> = pool.iter().enumerate().map(|(k, (d, _))| (rank(d), k)).collect();
        idx.sort();
        idx.into_iter().map(|(_, k)| k).collect()
    }

    /// Peels factors off `m`, whose exponent sum is `e`; returns the
    /// terminal `δ` power.
    fn run(&mut self, m: &BurauMatrix, e: i64, next: Option<&DualSimple>) -> Option<i64> {
        if self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        let n = self.n as i64;
        let max = m.max_deg().finite()?;
        // e = (n−1)p + Σ|d_i| ≤ (n−1)·sup − r, with equality only when r = 0.
        if (n - 1) * max == e {
            return (rho_delta_power(self.n, max) == *m).then_some(max);
        }
        if (n - 1) * max < e {
            return None;
        }
        let letter = letter_from_degrees(m).ok();
        let pool = proper_simples(self.n);
        let greedy = peel_factor(m, max);
        let first = greedy.as_ref().and_then(|g| pool.iter().position(|(d, _)| d == g));
        let rest_order = self.ordered(letter.as_ref()).into_iter().filter(|&k| Some(k) != first);
        for k in first.into_iter().chain(rest_order) {
            let (d, inv) = &pool[k];
            if !self.compatible(d, next) {
                continue;
            }
            let mut rest = m.clone();
            apply_letters_right(&mut rest, inv);
            if rest.max_deg() != Degree::Finite(max - 1) {
                continue;
            }
            let used = letter
                .as_ref()
                .filter(|l| DualSimple::atom(self.n, l.i0, l.p).expect("valid atom").left_divides(d))
                .cloned();
            self.steps.push(RecoveryStep { letter: used, factor: d.clone() });
            if let Some(p) = self.run(&rest, e - d.len() as i64, Some(d)) {
                return Some(p);
            }
            self.steps.pop();
        }
        None
    }
}

/// Reads the last factor off `m` by stripping one prefix letter at a time
/// until the maximal degree drops below `max`.
fn peel_factor(m: &BurauMatrix, max: i64) -> Option<DualSimple> {
    let n = m.n();
    let mut cur = m.clone();
    let mut atoms = Vec::new();
    while atoms.len() < n - 1 {
        let l = letter_from_degrees(&cur).ok()?;
        atoms.push((l.i0, l.p));
        let a = DualSimple::atom(n, l.i0, l.p).expect("valid atom");
        cur = strip(&cur, &a);
        if cur.max_deg() < Degree::Finite(max) {
            return DualSimple::from_atom_word(n, &atoms).ok();
        }
    }
    None
}

/// The dual normal form of the simply-nested braid (or 3-braid) whose
/// Burau matrix is `m`, with the trace of the reconstruction.
pub fn dual_nf_from_matrix(m: &BurauMatrix, n: usize) -> Result<(DualNF, RecoveryTrace)> {
    require_square(m, n)?;
    let e = exponent_from_det(m)?;
    if n == 2 {
        // B₂ is generated by δ = σ₁.
        return match delta_power_from_matrix(m) {
            Some(p) => Ok((DualNF::delta_power(n, p), RecoveryTrace { steps: vec![], terminal_power: p })),
            None => Err(Error::Input("not a Burau matrix of B₂".into())),
        };
    }
    let mut search = Search { n, steps: Vec::new(), budget: SEARCH_BUDGET };
    let p = search.run(m, e, None).ok_or_else(|| {
        if search.budget == 0 {
            Error::SearchBudget(SEARCH_BUDGET)
        } else {
            Error::NotSimplyNestedEvidence("no simply-nested normal form reproduces the matrix".into())
        }
    })?;
    let factors = search.steps.iter().rev().map(|s| s.factor.clone()).collect();
    let nf = DualNF { n, p, factors };
    let trace = RecoveryTrace { steps: search.steps, terminal_power: p };
    Ok((nf, trace))
}
