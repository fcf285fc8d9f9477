//! Classical Garside structure of `B_n`: simple elements are positive
//! permutation braids, stored as strand permutations.
//!
//! `image[k−1]` is the final position of the strand starting at position
//! `k`, so the permutation of a product `xy` is `π_y ∘ π_x`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::garside::{GarsideSimple, NormalForm};
use crate::words::{BraidWord, Generator};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermSimple {
    // 0-based images.
    perm: Vec<u8>,
}

impl PermSimple {
    pub fn identity(n: usize) -> Self {
        PermSimple { perm: (0..n as u8).collect() }
    }

    /// Builds a simple from its 1-based strand permutation.
    pub fn from_image(image: &[usize]) -> Result<Self> {
        let n = image.len();
        if n < 2 {
            return Err(Error::BadStrandCount(n));
        }
        let mut seen = vec![false; n];
        for &v in image {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Input(format!("{image:?} is not a permutation of 1..{n}")));
            }
        }
        Ok(PermSimple { perm: image.iter().map(|&v| (v - 1) as u8).collect() })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// 1-based strand permutation.
    pub fn image(&self) -> Vec<usize> {
        self.perm.iter().map(|&v| v as usize + 1).collect()
    }

    fn inverse_perm(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.n()];
        for (k, &v) in self.perm.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        inv
    }

    /// `π_t ∘ π_s`, the permutation of `s·t`.
    fn then(&self, t: &PermSimple) -> PermSimple {
        PermSimple { perm: self.perm.iter().map(|&v| t.perm[v as usize]).collect() }
    }

    fn inverse(&self) -> PermSimple {
        PermSimple { perm: self.inverse_perm() }
    }

    /// Number of crossings, i.e. the Artin length.
    pub fn len(&self) -> usize {
        let n = self.n();
        (0..n).map(|a| (a + 1..n).filter(|&b| self.perm[a] > self.perm[b]).count()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    /// Starting set `S(s)`: indices `i` with `σᵢ ≼ s`.
    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.perm[i - 1] > self.perm[i]).collect()
    }

    /// Finishing set `F(s)`: indices `i` with `s σᵢ⁻¹` positive.
    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.inverse_perm();
        (1..self.n()).filter(|&i| inv[i - 1] > inv[i]).collect()
    }

    /// Left divisibility `s ≼ t`: every crossing of `s` is a crossing of `t`.
    pub fn left_divides(&self, t: &PermSimple) -> bool {
        let n = self.n();
        n == t.n()
            && (0..n).all(|a| {
                (a + 1..n).all(|b| self.perm[a] < self.perm[b] || t.perm[a] > t.perm[b])
            })
    }

    /// Lexicographically least Artin word, as positive letters.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut rest = self.clone();
        while let Some(&i) = rest.starting_set().first() {
            out.push(i);
            // σᵢ⁻¹·rest: swap the strands starting at i and i+1.
            rest.perm.swap(i - 1, i);
        }
        out
    }

    pub fn to_word(&self) -> BraidWord {
        let letters: Vec<i32> = self.letters().iter().map(|&i| i as i32).collect();
        BraidWord::artin(self.n(), &letters).expect("letters are in range")
    }
}

impl fmt::Display for PermSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = letters.iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for PermSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermSimple({self})")
    }
}

impl Serialize for PermSimple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Δ`, the order-reversing permutation.
pub fn big_delta(n: usize) -> PermSimple {
    PermSimple { perm: (0..n as u8).rev().collect() }
}

/// The simple braid of a positive Artin word.
pub fn simple_from_word(w: &BraidWord) -> Result<PermSimple> {
    let n = w.n();
    let mut s = PermSimple::identity(n);
    // position → starting strand
    let mut at: Vec<u8> = (0..n as u8).collect();
    for (g, positive) in w.letters() {
        let Generator::Artin(i) = g else {
            return Err(Error::NotPositive);
        };
        if !positive {
            return Err(Error::NotPositive);
        }
        let (a, b) = (at[i - 1], at[i]);
        if a > b {
            return Err(Error::NotSimple(b as usize + 1, a as usize + 1));
        }
        at.swap(i - 1, i);
        s.perm[a as usize] = i as u8;
        s.perm[b as usize] = (i - 1) as u8;
    }
    Ok(s)
}

pub fn simple_to_word(s: &PermSimple) -> BraidWord {
    s.to_word()
}

pub fn starting_set(s: &PermSimple) -> Vec<usize> {
    s.starting_set()
}

pub fn finishing_set(s: &PermSimple) -> Vec<usize> {
    s.finishing_set()
}

/// `(s, t)` is left-weighted iff `S(t) ⊆ F(s)`.
pub fn left_weighted_c(s: &PermSimple, t: &PermSimple) -> bool {
    let f = s.finishing_set();
    t.starting_set().iter().all(|i| f.contains(i))
}

/// Greatest common left divisor, built one letter at a time.
pub fn meet_c(s: &PermSimple, t: &PermSimple) -> PermSimple {
    let n = s.n();
    let crosses = |p: &PermSimple, a: u8, b: u8| p.perm[a as usize] > p.perm[b as usize];
    let mut m = PermSimple::identity(n);
    let mut at: Vec<u8> = (0..n as u8).collect();
    'grow: loop {
        for i in 0..n - 1 {
            let (a, b) = (at[i], at[i + 1]);
            if a < b && crosses(s, a, b) && crosses(t, a, b) {
                at.swap(i, i + 1);
                m.perm[a as usize] = (i + 1) as u8;
                m.perm[b as usize] = i as u8;
                continue 'grow;
            }
        }
        return m;
    }
}

/// `Δ⁻¹sΔ`, sending `σᵢ` to `σ_{n−i}`.
pub fn tau_c(s: &PermSimple) -> PermSimple {
    let n = s.n() as u8;
    let mut perm = vec![0u8; n as usize];
    for (k, &v) in s.perm.iter().enumerate() {
        perm[(n - 1) as usize - k] = n - 1 - v;
    }
    PermSimple { perm }
}

/// `s⁻¹Δ`.
pub fn complement_c(s: &PermSimple) -> PermSimple {
    s.inverse().then(&big_delta(s.n()))
}

impl GarsideSimple for PermSimple {
    fn strands(&self) -> usize {
        self.n()
    }
    fn is_trivial(&self) -> bool {
        self.is_empty()
    }
    fn is_garside(&self) -> bool {
        let n = self.n() as u8;
        self.perm.iter().enumerate().all(|(k, &v)| v == n - 1 - k as u8)
    }
    fn right_complement(&self) -> Self {
        complement_c(self)
    }
    fn meet(&self, other: &Self) -> Self {
        meet_c(self, other)
    }
    fn times_divisor(&self, t: &Self) -> Self {
        self.then(t)
    }
    fn left_quotient(&self, t: &Self) -> Self {
        t.inverse().then(self)
    }
    fn tau(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            tau_c(self)
        }
    }
}

/// Left normal form `Δ^p s₁⋯s_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalNF {
    pub n: usize,
    pub p: i64,
    pub factors: Vec<PermSimple>,
}

impl ClassicalNF {
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

    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::identity(self.n).expect("valid strand count");
        if self.p != 0 {
            w.push_generator(Generator::BigDelta, self.p).expect("valid generator");
        }
        for f in &self.factors {
            for i in f.letters() {
                w.push_generator(Generator::Artin(i), 1).expect("valid generator");
            }
        }
        w
    }
}

impl Serialize for ClassicalNF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({
            "kind": "classical",
            "n": self.n,
            "p": self.p,
            "factors": self.factors,
            "sup": self.sup(),
            "inf": self.inf(),
            "len": self.len(),
        })
        .serialize(s)
    }
}

pub fn normal_form_c(w: &BraidWord) -> ClassicalNF {
    let n = w.n();
    let mut nf = NormalForm::<PermSimple>::identity(n);
    for t in w.tokens() {
        if t.generator == Generator::BigDelta {
            nf.push_garside_power(t.power);
            continue;
        }
        let letters = crate::words::generator_artin_letters(t.generator, n);
        let reps = t.power.unsigned_abs();
        for _ in 0..reps {
            if t.power > 0 {
                for &l in &letters {
                    nf.push_simple(artin_simple(n, l as usize));
                }
            } else {
                for &l in letters.iter().rev() {
                    nf.push_inverse_simple(artin_simple(n, l as usize));
                }
            }
        }
    }
    ClassicalNF { n, p: nf.p, factors: nf.factors }
}

fn artin_simple(n: usize, i: usize) -> PermSimple {
    let mut s = PermSimple::identity(n);
    s.perm.swap(i - 1, i);
    s
}

/// Whether the factors satisfy the normal-form invariants.
pub fn is_normal_c(nf: &ClassicalNF) -> bool {
    NormalForm { n: nf.n, p: nf.p, factors: nf.factors.clone() }.is_normal()
}

pub fn sup_c(w: &BraidWord) -> i64 {
    normal_form_c(w).sup()
}

pub fn inf_c(w: &BraidWord) -> i64 {
    normal_form_c(w).inf()
}

pub fn len_c(w: &BraidWord) -> usize {
    normal_form_c(w).len()
}

pub fn garside_len_c(w: &BraidWord) -> i64 {
    normal_form_c(w).garside_len()
}

/// All `n!` simples of `B_n`, in lexicographic order of images.
pub fn enumerate_perm_simples(n: usize) -> Vec<PermSimple> {
    fn rec(prefix: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<PermSimple>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(PermSimple { perm: prefix.clone() });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
