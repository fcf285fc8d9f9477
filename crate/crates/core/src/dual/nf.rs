use serde::{Serialize, Serializer};

use super::{polygon_obstructs, DualSimple};
use crate::garside::NormalForm;
use crate::words::{generator_artin_letters, BraidWord, Generator};

/// Dual left normal form `δ^p d₁⋯d_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualNF {
    pub n: usize,
    pub p: i64,
    pub factors: Vec<DualSimple>,
}

impl DualNF {
    pub fn delta_power(n: usize, p: i64) -> Self {
        DualNF { n, p, factors: Vec::new() }
    }

    pub fn sup(&self) -> i64 {
        self.p + self.factors.len() as i64
    }

    pub fn inf(&self) -> i64 {
        self.p
    }

    /// Canonical length `r`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p == 0 && self.factors.is_empty()
    }

    /// `max(sup, 0) − min(inf, 0)`.
    pub fn garside_len(&self) -> i64 {
        self.sup().max(0) - self.inf().min(0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.p * (self.n as i64 - 1) + self.factors.iter().map(|f| f.len() as i64).sum::<i64>()
    }

    pub fn is_simply_nested(&self) -> bool {
        is_simply_nested(self)
    }

    /// The normal-form invariants: no trivial or `δ` factor, adjacent pairs
    /// left-weighted.
    pub fn is_normal(&self) -> bool {
        NormalForm { n: self.n, p: self.p, factors: self.factors.clone() }.is_normal()
    }

    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::identity(self.n).expect("valid strand count");
        if self.p != 0 {
            w.push_generator(Generator::SmallDelta, self.p).expect("valid generator");
        }
        for f in &self.factors {
            for (i, j) in f.atom_pairs().into_iter().flatten() {
                w.push_generator(Generator::band(i, j), 1).expect("valid generator");
            }
        }
        w
    }

    /// The prefix `δ^p d₁⋯d_k`.
    pub fn prefix(&self, k: usize) -> DualNF {
        DualNF { n: self.n, p: self.p, factors: self.factors[..k].to_vec() }
    }
}

impl Serialize for DualNF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({
            "kind": "dual",
            "n": self.n,
            "p": self.p,
            "factors": self.factors,
            "sup": self.sup(),
            "inf": self.inf(),
            "len": self.len(),
            "simply_nested": self.is_simply_nested(),
        })
        .serialize(s)
    }
}

fn atom_of(n: usize, g: Generator) -> DualSimple {
    match g {
        Generator::Artin(i) => DualSimple::atom(n, i, i + 1),
        Generator::Band(i, j) => DualSimple::atom(n, i, j),
        _ => unreachable!("only atoms are expanded"),
    }
    .expect("validated generator")
}

pub fn normal_form_d(w: &BraidWord) -> DualNF {
    let n = w.n();
    let mut nf = NormalForm::<DualSimple>::identity(n);
    for t in w.tokens() {
        let reps = t.power.unsigned_abs();
        match t.generator {
            Generator::SmallDelta => nf.push_garside_power(t.power),
            Generator::BigDelta => {
                let atoms: Vec<DualSimple> = generator_artin_letters(Generator::BigDelta, n)
                    .iter()
                    .map(|&l| atom_of(n, Generator::Artin(l as usize)))
                    .collect();
                for _ in 0..reps {
                    if t.power > 0 {
                        atoms.iter().for_each(|a| nf.push_simple(a.clone()));
                    } else {
                        atoms.iter().rev().for_each(|a| nf.push_inverse_simple(a.clone()));
                    }
                }
            }
            g => {
                let a = atom_of(n, g);
                for _ in 0..reps {
                    if t.power > 0 {
                        nf.push_simple(a.clone());
                    } else {
                        nf.push_inverse_simple(a.clone());
                    }
                }
            }
        }
    }
    DualNF { n, p: nf.p, factors: nf.factors }
}

/// Every polygon of `d2` is obstructed, pair by pair, by exactly one
/// polygon of `d1`.
pub fn simply_nested_pair(d1: &DualSimple, d2: &DualSimple) -> bool {
    let n = d1.n();
    let ps = d1.polygons();
    d2.polygons()
        .iter()
        .all(|q| ps.iter().filter(|p| polygon_obstructs(n, p, q)).count() == 1)
}

pub fn is_simply_nested(nf: &DualNF) -> bool {
    nf.factors.windows(2).all(|w| simply_nested_pair(&w[0], &w[1]))
}

pub fn sup_d(w: &BraidWord) -> i64 {
    normal_form_d(w).sup()
}

pub fn inf_d(w: &BraidWord) -> i64 {
    normal_form_d(w).inf()
}

pub fn len_d(w: &BraidWord) -> usize {
    normal_form_d(w).len()
}

pub fn garside_len_d(w: &BraidWord) -> i64 {
    normal_form_d(w).garside_len()
}

#[cfg(test)]
mod tests {
    use super::super::{dual_simples, left_weighted_d, left_weighted_lattice};
    use super::*;
    use crate::burau::rho;

    fn atom(n: usize, i: usize, j: usize) -> DualSimple {
        DualSimple::atom(n, i, j).unwrap()
    }

    fn blocks(n: usize, bs: &[&[usize]]) -> DualSimple {
        DualSimple::from_blocks(n, &bs.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn delta_word_normalizes_to_delta() {
        let nf = normal_form_d(&BraidWord::artin(3, &[2, 1]).unwrap());
        assert_eq!((nf.p, nf.len()), (1, 0));
        let nf = normal_form_d(&BraidWord::parse("D^2", 4).unwrap());
        assert_eq!((nf.p, nf.len()), (4, 0));
    }

    #[test]
    fn simply_nested_example_and_inverse() {
        let w = BraidWord::parse("a3,4 a2,4", 4).unwrap();
        let nf = normal_form_d(&w);
        assert_eq!(nf.p, 0);
        assert_eq!(nf.factors, vec![atom(4, 3, 4), atom(4, 2, 4)]);
        assert!(nf.is_simply_nested());

        let inv = normal_form_d(&w.invert());
        assert_eq!(inv.p, -2);
        assert_eq!(
            inv.factors,
            vec![blocks(4, &[&[1, 2], &[3, 4]]), blocks(4, &[&[1, 2, 4]])]
        );
        assert_eq!(inv.factors[1], DualSimple::from_atom_word(4, &[(1, 2), (1, 4)]).unwrap());
        assert!(!inv.is_simply_nested());
        assert_eq!(rho(&inv.to_word()), rho(&w.invert()));
    }

    #[test]
    fn simply_nested_pairs() {
        assert!(simply_nested_pair(&atom(4, 3, 4), &atom(4, 2, 4)));
        assert!(!simply_nested_pair(&blocks(4, &[&[1, 2], &[3, 4]]), &atom(4, 2, 4)));
    }

    #[test]
    fn b3_simply_nested_iff_left_weighted() {
        for a in dual_simples(3) {
            for b in dual_simples(3) {
                if a.is_delta() || b.is_delta() || b.is_empty() {
                    continue;
                }
                assert_eq!(simply_nested_pair(a, b), left_weighted_d(a, b), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn polygon_and_lattice_paths_agree_exhaustively() {
        for n in 3..=5 {
            for a in dual_simples(n) {
                for b in dual_simples(n) {
                    assert_eq!(left_weighted_d(a, b), left_weighted_lattice(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let nf = normal_form_d(&BraidWord::parse("a3,4 a2,4", 4).unwrap().invert());
        assert_eq!(
            serde_json::to_value(&nf).unwrap(),
            serde_json::json!({
                "kind": "dual", "n": 4, "p": -2,
                "factors": [["a1,2", "a3,4"], ["a2,4", "a1,2"]],
                "sup": 0, "inf": -2, "len": 2, "simply_nested": false
            })
        );
    }
}
