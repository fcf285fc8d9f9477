//! Non-vanishing and degree-bound criteria for the Burau representation,
//! reported as verdicts that carry the evidence behind them.

use serde::Serialize;

use crate::burau::rho;
use crate::classical::{normal_form_c, simple_from_word, PermSimple};
use crate::dual::{normal_form_d, simply_nested_pair, DualNF, DualSimple};
use crate::error::{Error, Result};
use crate::laurent::Degree;
use crate::words::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    ClassicalB4,
    DualB4,
    KernelExclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    NonvanishingGuaranteed,
    Inconclusive,
}

/// Evidence for a verdict. Factor and pair positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The input is the trivial braid, outside every criterion's scope.
    TrivialBraid,
    ClassicalFactors {
        p: i64,
        factors: Vec<PermSimple>,
        /// First factor equal to `σ₂σ₁σ₃`.
        offending_factor: Option<usize>,
    },
    DualPairs {
        p: i64,
        factors: Vec<DualSimple>,
        /// First `i` with `(d_i, d_{i+1})` in the forbidden list.
        forbidden_pair: Option<usize>,
        /// First factor equal to `a₁,₂a₃,₄` or `a₂,₃a₁,₄`.
        forbidden_factor: Option<usize>,
    },
    KernelExclusion {
        r: usize,
        /// Largest qualifying prefix length.
        r_prime: Option<usize>,
        /// Exponent sum of the factors after the prefix.
        tail_exponent: Option<i64>,
        longest_simply_nested_prefix: usize,
        /// Whether `r′ > (n−2)r/(n−1)` held for the qualifying prefix.
        fraction_condition: Option<bool>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub criterion: Criterion,
    pub applicable: bool,
    pub conclusion: Conclusion,
    pub witness: Witness,
}

impl Verdict {
    pub fn is_guaranteed(&self) -> bool {
        self.conclusion == Conclusion::NonvanishingGuaranteed
    }

    fn trivial(criterion: Criterion) -> Verdict {
        Verdict {
            criterion,
            applicable: false,
            conclusion: Conclusion::Inconclusive,
            witness: Witness::TrivialBraid,
        }
    }
}

fn require_b4(w: &BraidWord) -> Result<()> {
    if w.n() != 4 {
        return Err(Error::StrandMismatch { expected: 4, got: w.n() });
    }
    Ok(())
}

fn conclude(guaranteed: bool) -> Conclusion {
    if guaranteed {
        Conclusion::NonvanishingGuaranteed
    } else {
        Conclusion::Inconclusive
    }
}

/// `σ₂σ₁σ₃` as a simple of `B₄`.
pub fn sigma213() -> PermSimple {
    simple_from_word(&BraidWord::artin(4, &[2, 1, 3]).expect("valid word")).expect("simple")
}

/// `ρ₄(w) ≠ 1` whenever the classical normal form of a nontrivial `w` has
/// no factor `σ₂σ₁σ₃`.
pub fn classical_criterion_b4(w: &BraidWord) -> Result<Verdict> {
    require_b4(w)?;
    let nf = normal_form_c(w);
    if nf.is_empty() {
        return Ok(Verdict::trivial(Criterion::ClassicalB4));
    }
    let bad = sigma213();
    let offending = nf.factors.iter().position(|f| *f == bad).map(|k| k + 1);
    Ok(Verdict {
        criterion: Criterion::ClassicalB4,
        applicable: true,
        conclusion: conclude(offending.is_none()),
        witness: Witness::ClassicalFactors { p: nf.p, factors: nf.factors, offending_factor: offending },
    })
}

/// Row-degree profile of a positive `B₄` braid in classical normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowDegreeProfile {
    pub starting_set: Vec<usize>,
    /// `(M₁, M₂, M₃)`, the maximal degrees of the rows of `ρ₄(x)`.
    pub row_max: [i64; 3],
    /// Each disjunct the starting set calls for, with whether it holds.
    pub disjuncts: Vec<(String, bool)>,
    pub case_holds: bool,
    pub sup_c: i64,
    pub max_deg: i64,
    /// `sup_c ≤ M(ρ₄(x)) ≤ 3·sup_c`.
    pub sup_bound_holds: bool,
}

impl RowDegreeProfile {
    pub fn holds(&self) -> bool {
        self.case_holds && self.sup_bound_holds
    }
}

pub fn row_degree_profile(w: &BraidWord) -> Result<RowDegreeProfile> {
    require_b4(w)?;
    let nf = normal_form_c(w);
    if nf.inf() != 0 {
        return Err(Error::Precondition(format!("inf_c = {} (needs 0)", nf.inf())));
    }
    if nf.len() < 2 {
        return Err(Error::Precondition(format!("canonical length {} (needs ≥ 2)", nf.len())));
    }
    let bad = sigma213();
    if let Some(k) = nf.factors.iter().position(|f| *f == bad) {
        return Err(Error::Precondition(format!("factor {} is σ₂σ₁σ₃", k + 1)));
    }
    let m = rho(w);
    let rows = m.row_maxima();
    let fin = |d: Degree| d.finite().expect("rows of an invertible matrix are nonzero");
    let [m1, m2, m3] = [fin(rows[0]), fin(rows[1]), fin(rows[2])];
    let a1 = ("M1 > M2 and M1 > M3 + 1", m1 > m2 && m1 > m3 + 1);
    let a2 = ("M2 >= M1 and M2 > M3", m2 >= m1 && m2 > m3);
    let a3 = ("M3 >= M1 and M3 >= M2", m3 >= m1 && m3 >= m2);
    let b1 = ("M1 > M2 and M1 > M3", m1 > m2 && m1 > m3);
    let s = nf.factors[0].starting_set();
    let cases: Vec<(&str, bool)> = match s.as_slice() {
        [1] => vec![a1],
        [2] => vec![a2],
        [3] => vec![a3],
        [1, 2] => vec![a1, a2],
        [2, 3] => vec![a2, a3],
        [1, 3] => vec![b1, a3],
        _ => unreachable!("Δ and σ₂σ₁σ₃ are excluded"),
    };
    let max_deg = fin(m.max_deg());
    let sup = nf.sup();
    Ok(RowDegreeProfile {
        starting_set: s,
        row_max: [m1, m2, m3],
        case_holds: cases.iter().any(|c| c.1),
        disjuncts: cases.into_iter().map(|(l, b)| (l.to_string(), b)).collect(),
        sup_c: sup,
        max_deg,
        sup_bound_holds: sup <= max_deg && max_deg <= 3 * sup,
    })
}

fn b4(blocks: &[&[usize]]) -> DualSimple {
    let bs: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
    DualSimple::from_blocks(4, &bs).expect("valid blocks")
}

/// The six left-weighted pairs of `B₄` dual simples that are not
/// simply-nested.
pub fn forbidden_pairs_b4() -> Vec<(DualSimple, DualSimple)> {
    let a12a34 = b4(&[&[1, 2], &[3, 4]]);
    let a23a14 = b4(&[&[1, 4], &[2, 3]]);
    vec![
        (a12a34.clone(), b4(&[&[2, 4]])),
        (a12a34.clone(), b4(&[&[2, 3, 4]])),
        (a12a34, b4(&[&[1, 2, 4]])),
        (a23a14.clone(), b4(&[&[1, 3]])),
        (a23a14.clone(), b4(&[&[1, 2, 3]])),
        (a23a14, b4(&[&[1, 3, 4]])),
    ]
}

/// Simply-nested `B₄` braids are detected by their Burau matrix; a
/// nontrivial braid whose normal form avoids the forbidden pairs is not in
/// the kernel.
pub fn dual_criterion_b4(w: &BraidWord) -> Result<Verdict> {
    require_b4(w)?;
    let nf = normal_form_d(w);
    if nf.is_empty() {
        return Ok(Verdict::trivial(Criterion::DualB4));
    }
    let forbidden = forbidden_pairs_b4();
    let pair = nf
        .factors
        .windows(2)
        .position(|p| forbidden.iter().any(|(a, b)| *a == p[0] && *b == p[1]))
        .map(|k| k + 1);
    let (x, y) = (b4(&[&[1, 2], &[3, 4]]), b4(&[&[1, 4], &[2, 3]]));
    let factor = nf.factors.iter().position(|f| *f == x || *f == y).map(|k| k + 1);
    Ok(Verdict {
        criterion: Criterion::DualB4,
        applicable: true,
        conclusion: conclude(pair.is_none()),
        witness: Witness::DualPairs {
            p: nf.p,
            factors: nf.factors,
            forbidden_pair: pair,
            forbidden_factor: factor,
        },
    })
}

/// `M(ρ(x))` against `sup_d(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBoundReport {
    pub max_deg: Degree,
    pub min_deg: Degree,
    pub sup_d: i64,
    pub inf_d: i64,
    pub simply_nested: bool,
    /// `M(ρ(x)) ≤ sup_d(x)`.
    pub bound_holds: bool,
    /// `M(ρ(x)) = sup_d(x)`.
    pub equality: bool,
}

pub fn degree_bound_report(w: &BraidWord) -> DegreeBoundReport {
    let nf = normal_form_d(w);
    let stats = rho(w).stats();
    let sup = Degree::Finite(nf.sup());
    DegreeBoundReport {
        max_deg: stats.max_deg,
        min_deg: stats.min_deg,
        sup_d: nf.sup(),
        inf_d: nf.inf(),
        simply_nested: nf.is_simply_nested(),
        bound_holds: stats.max_deg <= sup,
        equality: stats.max_deg == sup,
    }
}

/// Length of the longest prefix `d₁⋯d_k` whose adjacent pairs are all
/// simply-nested.
pub fn simply_nested_prefix_len(nf: &DualNF) -> usize {
    if nf.factors.is_empty() {
        return 0;
    }
    1 + nf.factors.windows(2).take_while(|p| simply_nested_pair(&p[0], &p[1])).count()
}

/// A nontrivial braid is not in the kernel when some simply-nested prefix
/// of length `r′` beats the exponent sum of the remaining factors.
pub fn kernel_exclusion(w: &BraidWord) -> Verdict {
    let nf = normal_form_d(w);
    if nf.is_empty() {
        return Verdict::trivial(Criterion::KernelExclusion);
    }
    let (n, r) = (nf.n as i64, nf.len());
    let sn = simply_nested_prefix_len(&nf);
    // Prefixes of a simply-nested prefix are simply-nested, so only r′ ≤ sn
    // qualify for the first condition; scan from the largest.
    let found = (1..=sn).rev().find_map(|k| {
        let tail: i64 = nf.factors[k..].iter().map(|f| f.len() as i64).sum();
        (k as i64 > tail).then_some((k, tail))
    });
    let witness = Witness::KernelExclusion {
        r,
        r_prime: found.map(|f| f.0),
        tail_exponent: found.map(|f| f.1),
        longest_simply_nested_prefix: sn,
        fraction_condition: found.map(|(k, _)| k as i64 * (n - 1) > (n - 2) * r as i64),
    };
    Verdict {
        criterion: Criterion::KernelExclusion,
        applicable: true,
        conclusion: conclude(found.is_some()),
        witness,
    }
}
