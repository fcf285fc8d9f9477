//! Dual Garside structure. Dual simples are non-crossing
//! partitions of the punctures `1..n`, read clockwise around the circle.
//! A block `v₁ < ⋯ < v_r` is the polygon acting as the strand cycle
//! `v₁ → v₂ → ⋯ → v_r → v₁`; `δ` is the single block `{1..n}`.

mod nf;

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::garside::GarsideSimple;
use crate::words::{BraidWord, Generator};

pub use nf::{
    garside_len_d, inf_d, is_simply_nested, len_d, normal_form_d, simply_nested_pair, sup_d, DualNF,
};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualSimple {
    // labels[i] = smallest (0-based) vertex of the block containing i.
    labels: Vec<u8>,
}

impl DualSimple {
    pub fn identity(n: usize) -> Self {
        DualSimple { labels: (0..n as u8).collect() }
    }

    /// The atom `a_{i,j}` (1-based, any order).
    pub fn atom(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::IndexOutOfRange { n, detail: format!("a{i},{j}") });
        }
        let mut d = DualSimple::identity(n);
        let (lo, hi) = (i.min(j) - 1, i.max(j) - 1);
        d.labels[hi] = lo as u8;
        Ok(d)
    }

    /// Builds a simple from 1-based blocks; unlisted vertices are singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadStrandCount(n));
        }
        let mut labels: Vec<Option<u8>> = vec![None; n];
        for b in blocks {
            let Some(&min) = b.iter().min() else { continue };
            for &v in b {
                if v == 0 || v > n {
                    return Err(Error::IndexOutOfRange { n, detail: format!("vertex {v}") });
                }
                if labels[v - 1].replace((min - 1) as u8).is_some() {
                    return Err(Error::NotNonCrossing(format!("vertex {v} lies in two blocks")));
                }
            }
        }
        let d = DualSimple {
            labels: labels.iter().enumerate().map(|(k, l)| l.unwrap_or(k as u8)).collect(),
        };
        if let Some((a, b)) = d.crossing_blocks() {
            return Err(Error::NotNonCrossing(format!("blocks containing {a} and {b} cross")));
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// All blocks, 1-based and sorted, ordered by smallest vertex.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; self.n()];
        for (v, &l) in self.labels.iter().enumerate() {
            let l = l as usize;
            if index[l] == usize::MAX {
                index[l] = out.len();
                out.push(Vec::new());
            }
            out[index[l]].push(v + 1);
        }
        out
    }

    /// Blocks with at least two vertices.
    pub fn polygons(&self) -> Vec<Vec<usize>> {
        self.blocks().into_iter().filter(|b| b.len() > 1).collect()
    }

    /// Number of atoms, `n − #blocks`.
    pub fn len(&self) -> usize {
        self.labels.iter().enumerate().filter(|&(k, &l)| k != l as usize).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_delta(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// 0-based strand permutation: `perm[v]` is where the strand at `v` ends.
    pub fn perm(&self) -> Vec<u8> {
        let n = self.n();
        let mut perm: Vec<u8> = (0..n as u8).collect();
        let mut last = vec![u8::MAX; n];
        for v in 0..n {
            let l = self.labels[v] as usize;
            if last[l] != u8::MAX {
                perm[last[l] as usize] = v as u8;
            }
            last[l] = v as u8;
        }
        for v in 0..n {
            if self.labels[v] as usize == v {
                perm[last[v] as usize] = v as u8;
            }
        }
        perm
    }

    /// Inverse of [`DualSimple::perm`], when the permutation comes from a
    /// non-crossing partition with increasing cycles.
    pub fn from_perm(perm: &[u8]) -> Option<Self> {
        let n = perm.len();
        let mut labels = vec![u8::MAX; n];
        for start in 0..n {
            if labels[start] != u8::MAX {
                continue;
            }
            let mut v = start;
            let mut descents = 0;
            loop {
                labels[v] = start as u8;
                let w = perm[v] as usize;
                if w < v {
                    descents += 1;
                }
                v = w;
                if v == start {
                    break;
                }
            }
            // an increasing cycle wraps around exactly once
            if descents > 1 {
                return None;
            }
        }
        let d = DualSimple { labels };
        d.crossing_blocks().is_none().then_some(d)
    }

    /// Two vertices (1-based) witnessing a crossing, if any.
    fn crossing_blocks(&self) -> Option<(usize, usize)> {
        let n = self.n();
        let l = &self.labels;
        for a in 0..n {
            for b in a + 1..n {
                if l[b] == l[a] {
                    continue;
                }
                for c in b + 1..n {
                    if l[c] != l[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if l[d] == l[b] {
                            return Some((a + 1, b + 1));
                        }
                    }
                }
            }
        }
        None
    }

    /// `s ≼_d d`: every block of `s` lies inside a block of `d`.
    pub fn left_divides(&self, d: &DualSimple) -> bool {
        self.n() == d.n()
            && self.labels.iter().enumerate().all(|(v, &l)| d.labels[v] == d.labels[l as usize])
    }

    /// Edge atoms of each polygon as `(i, j)` pairs in product order: a
    /// polygon `v₁ < ⋯ < v_r` is `a_{v_{r−1},v_r} ⋯ a_{v₁,v₂}`.
    pub fn atom_pairs(&self) -> Vec<Vec<(usize, usize)>> {
        self.polygons()
            .iter()
            .map(|p| p.windows(2).rev().map(|w| (w[0], w[1])).collect())
            .collect()
    }

    /// Atom rendering, e.g. `["a3,4", "a2,3", "a1,2"]` for `δ` in `B₄`.
    pub fn atom_strings(&self) -> Vec<String> {
        self.atom_pairs().iter().flatten().map(|(i, j)| format!("a{i},{j}")).collect()
    }

    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::identity(self.n()).expect("valid strand count");
        for (i, j) in self.atom_pairs().into_iter().flatten() {
            w.push_generator(Generator::band(i, j), 1).expect("valid generator");
        }
        w
    }

    /// The simple element represented by a product of atoms, if it is one.
    pub fn from_atom_word(n: usize, atoms: &[(usize, usize)]) -> Result<Self> {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        for &(i, j) in atoms {
            let t = DualSimple::atom(n, i, j)?.perm();
            perm = perm.iter().map(|&v| t[v as usize]).collect();
        }
        let render = || {
            atoms.iter().map(|(i, j)| format!("a{i},{j}")).collect::<Vec<_>>().join(" ")
        };
        match DualSimple::from_perm(&perm) {
            Some(d) if d.len() == atoms.len() => Ok(d),
            _ => Err(Error::Input(format!("{} is not a dual simple element", render()))),
        }
    }
}

impl fmt::Display for DualSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms = self.atom_strings();
        if atoms.is_empty() {
            f.write_str("1")
        } else {
            write!(f, "({})", atoms.join(" "))
        }
    }
}

impl fmt::Debug for DualSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualSimple{:?}", self.polygons())
    }
}

impl Serialize for DualSimple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.atom_strings().serialize(s)
    }
}

/// `δ`, the single block `{1..n}`.
pub fn small_delta(n: usize) -> DualSimple {
    DualSimple { labels: vec![0; n] }
}

pub fn polygons(d: &DualSimple) -> Vec<Vec<usize>> {
    d.polygons()
}

/// Whether `x` lies on the closed clockwise arc from `a` to `b` (1-based).
fn on_arc(n: usize, x: usize, a: usize, b: usize) -> bool {
    let step = |v: usize| (v + n - a) % n;
    step(x) <= step(b)
}

fn prev(n: usize, v: usize) -> usize {
    if v == 1 {
        n
    } else {
        v - 1
    }
}

/// `a_{k,l} ⊢ a_{i,j}` for the ordered pairs exactly as given:
/// `k ∈ (j, i−1)` and `l ∈ (i, j−1)` on closed clockwise arcs.
pub fn obstructs_ordered(n: usize, (k, l): (usize, usize), (i, j): (usize, usize)) -> bool {
    on_arc(n, k, j, prev(n, i)) && on_arc(n, l, i, prev(n, j))
}

/// `a_{k,l} ⊢ a_{i,j}` for unordered chords: some ordering of each pair
/// satisfies the arc conditions.
pub fn obstructs(n: usize, (k, l): (usize, usize), (i, j): (usize, usize)) -> bool {
    [(k, l), (l, k)]
        .iter()
        .any(|&kl| [(i, j), (j, i)].iter().any(|&ij| obstructs_ordered(n, kl, ij)))
}

fn vertex_pairs(poly: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    poly.iter().enumerate().flat_map(move |(a, &i)| poly[a + 1..].iter().map(move |&j| (i, j)))
}

/// Whether some vertex pair of `p` obstructs every vertex pair of `q`.
pub(crate) fn polygon_obstructs(n: usize, p: &[usize], q: &[usize]) -> bool {
    vertex_pairs(q).all(|ij| vertex_pairs(p).any(|kl| obstructs(n, kl, ij)))
}

/// Left-weightedness through polygons: every vertex pair of every polygon
/// of `d2` is obstructed by a vertex pair of some polygon of `d1`.
pub fn left_weighted_d(d1: &DualSimple, d2: &DualSimple) -> bool {
    let n = d1.n();
    let ps = d1.polygons();
    d2.polygons().iter().all(|q| {
        vertex_pairs(q).all(|ij| ps.iter().any(|p| vertex_pairs(p).any(|kl| obstructs(n, kl, ij))))
    })
}

/// Left-weightedness through the lattice: `∂d₁ ∧ d₂ = 1`.
pub fn left_weighted_lattice(d1: &DualSimple, d2: &DualSimple) -> bool {
    meet_d(&d1.right_complement(), d2).is_empty()
}

/// Common refinement of two partitions.
pub fn meet_d(a: &DualSimple, b: &DualSimple) -> DualSimple {
    let n = a.n();
    let labels = (0..n)
        .map(|v| {
            (0..=v)
                .find(|&u| a.labels[u] == a.labels[v] && b.labels[u] == b.labels[v])
                .expect("v itself matches") as u8
        })
        .collect();
    DualSimple { labels }
}

/// Finest non-crossing partition coarser than both.
pub fn join_d(a: &DualSimple, b: &DualSimple) -> DualSimple {
    let n = a.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        parent[v] = r;
        r
    }
    fn union(parent: &mut [usize], x: usize, y: usize) {
        let (rx, ry) = (find(parent, x), find(parent, y));
        if rx != ry {
            parent[rx.max(ry)] = rx.min(ry);
        }
    }
    for v in 0..n {
        union(&mut parent, v, a.labels[v] as usize);
        union(&mut parent, v, b.labels[v] as usize);
    }
    loop {
        let mut labels: Vec<u8> = (0..n).map(|v| find(&mut parent, v) as u8).collect();
        for v in 0..n {
            labels[v] = labels[labels[v] as usize];
        }
        let d = DualSimple { labels };
        match d.crossing_blocks() {
            None => return d,
            Some((x, y)) => union(&mut parent, x - 1, y - 1),
        }
    }
}

/// `s⁻¹d` for `s ≼_d d`.
pub fn complement_d(s: &DualSimple, d: &DualSimple) -> Result<DualSimple> {
    if !s.left_divides(d) {
        return Err(Error::NotDivisor(s.to_string(), d.to_string()));
    }
    Ok(d.left_quotient(s))
}

/// `δ^{-k} d δ^k`: every vertex moves `k` notches, `i ↦ i + k mod n`.
pub fn tau_d(d: &DualSimple, k: i64) -> DualSimple {
    let n = d.n();
    let shift = k.rem_euclid(n as i64) as usize;
    if shift == 0 {
        return d.clone();
    }
    let mut labels = vec![0u8; n];
    for v in 0..n {
        let w = (v + shift) % n;
        labels[w] = ((d.labels[v] as usize + shift) % n) as u8;
    }
    // rotated blocks may have a new smallest vertex
    let mut min = vec![u8::MAX; n];
    for (v, &l) in labels.iter().enumerate() {
        min[l as usize] = min[l as usize].min(v as u8);
    }
    DualSimple { labels: labels.iter().map(|&l| min[l as usize]).collect() }
}

fn compose(first: &[u8], second: &[u8]) -> Vec<u8> {
    first.iter().map(|&v| second[v as usize]).collect()
}

fn invert(perm: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; perm.len()];
    for (k, &v) in perm.iter().enumerate() {
        inv[v as usize] = k as u8;
    }
    inv
}

impl GarsideSimple for DualSimple {
    fn strands(&self) -> usize {
        self.n()
    }
    fn is_trivial(&self) -> bool {
        self.is_empty()
    }
    fn is_garside(&self) -> bool {
        self.is_delta()
    }
    fn right_complement(&self) -> Self {
        small_delta(self.n()).left_quotient(self)
    }
    fn meet(&self, other: &Self) -> Self {
        meet_d(self, other)
    }
    fn times_divisor(&self, t: &Self) -> Self {
        DualSimple::from_perm(&compose(&self.perm(), &t.perm())).expect("product is simple")
    }
    fn left_quotient(&self, t: &Self) -> Self {
        DualSimple::from_perm(&compose(&invert(&t.perm()), &self.perm()))
            .expect("quotient of a divisor is simple")
    }
    fn tau(&self, k: i64) -> Self {
        tau_d(self, k)
    }
}

fn generate(n: usize) -> Vec<DualSimple> {
    // restricted growth strings, filtered to non-crossing partitions
    fn rec(labels: &mut Vec<u8>, n: usize, out: &mut Vec<DualSimple>) {
        let v = labels.len();
        if v == n {
            let d = DualSimple { labels: labels.clone() };
            if d.crossing_blocks().is_none() {
                out.push(d);
            }
            return;
        }
        for u in 0..=v {
            if labels.get(u).is_none_or(|&l| l as usize == u) {
                labels.push(u as u8);
                rec(labels, n, out);
                labels.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), n, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

const MAX_ENUMERATED: usize = 10;

/// All dual simples of `B_n` (Catalan many), by length then labels.
/// Cached per `n`.
pub fn dual_simples(n: usize) -> &'static [DualSimple] {
    static CACHE: [OnceLock<Vec<DualSimple>>; MAX_ENUMERATED + 1] =
        [const { OnceLock::new() }; MAX_ENUMERATED + 1];
    assert!((1..=MAX_ENUMERATED).contains(&n), "enumeration supports n ≤ {MAX_ENUMERATED}");
    CACHE[n].get_or_init(|| generate(n))
}

pub fn enumerate_dual_simples(n: usize) -> Vec<DualSimple> {
    dual_simples(n).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burau::rho;

    fn atom(n: usize, i: usize, j: usize) -> DualSimple {
        DualSimple::atom(n, i, j).unwrap()
    }

    fn blocks(n: usize, bs: &[&[usize]]) -> DualSimple {
        DualSimple::from_blocks(n, &bs.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn conj(pre: &str, d: &DualSimple, post: &str) -> BraidWord {
        let n = d.n();
        let w = BraidWord::parse(pre, n).unwrap().concat(&d.to_word()).unwrap();
        w.concat(&BraidWord::parse(post, n).unwrap()).unwrap()
    }

    #[test]
    fn delta_is_rotation() {
        let d = small_delta(4);
        assert_eq!(d.perm(), vec![1, 2, 3, 0]);
        assert_eq!(d.blocks(), vec![vec![1, 2, 3, 4]]);
        assert_eq!(rho(&d.to_word()), rho(&BraidWord::parse("d", 4).unwrap()));
        assert_eq!(d.atom_strings(), vec!["a3,4", "a2,3", "a1,2"]);
    }

    #[test]
    fn polygons_examples() {
        assert!(DualSimple::identity(4).polygons().is_empty());
        assert_eq!(blocks(4, &[&[1, 2], &[3, 4]]).polygons(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(small_delta(4).polygons(), vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn crossing_blocks_rejected() {
        let err = DualSimple::from_blocks(4, &[vec![1, 3], vec![2, 4]]).unwrap_err();
        assert!(matches!(err, Error::NotNonCrossing(_)));
    }

    #[test]
    fn polygon_words_match_perm() {
        for n in 2..7 {
            for d in dual_simples(n) {
                let word = d.to_word();
                assert_eq!(word.exponent_sum(), d.len() as i64);
                assert_eq!(DualSimple::from_atom_word(n, &d.atom_pairs().concat()).unwrap(), *d);
                assert_eq!(DualSimple::from_perm(&d.perm()).as_ref(), Some(d));
            }
        }
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (2..=7).map(|n| dual_simples(n).len()).collect();
        assert_eq!(counts, vec![2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn obstruction_examples() {
        assert!(obstructs_ordered(4, (1, 3), (2, 4)));
        assert!(!obstructs_ordered(4, (2, 4), (1, 3)));
        assert!(obstructs(4, (2, 4), (1, 3)));
        for n in 3..7 {
            for i in 1..=n {
                for j in i + 1..=n {
                    assert!(obstructs(n, (i, j), (i, j)));
                }
            }
        }
        // chords sharing a vertex obstruct in one direction only
        assert!(obstructs(4, (1, 2), (2, 3)));
        assert!(!obstructs(4, (2, 3), (1, 2)));
    }

    #[test]
    fn left_weighted_examples() {
        for d in dual_simples(4).iter().filter(|d| !d.is_empty()) {
            assert!(left_weighted_d(&small_delta(4), d));
        }
        assert!(left_weighted_d(&atom(4, 3, 4), &atom(4, 2, 4)));
        assert!(left_weighted_d(&blocks(4, &[&[1, 2], &[3, 4]]), &atom(4, 2, 4)));
    }

    #[test]
    fn lattice_examples() {
        let d = blocks(5, &[&[1, 2, 4], &[5]]);
        assert_eq!(meet_d(&d, &small_delta(5)), d);
        assert_eq!(join_d(&d, &DualSimple::identity(5)), d);
        assert_eq!(join_d(&atom(4, 1, 3), &atom(4, 2, 4)), small_delta(4));
        let c = complement_d(&atom(3, 1, 2), &small_delta(3)).unwrap();
        // δ₃ = a₁,₂a₁,₃ = a₂,₃a₁,₂, while a₁,₂a₂,₃ = σ₁σ₂ is not δ₃.
        assert_eq!(c, atom(3, 1, 3));
        let delta = rho(&small_delta(3).to_word());
        assert_eq!(&rho(&atom(3, 1, 2).to_word()) * &rho(&c.to_word()), delta);
        assert_ne!(&rho(&atom(3, 1, 2).to_word()) * &rho(&atom(3, 2, 3).to_word()), delta);
        assert!(complement_d(&atom(4, 1, 3), &atom(4, 2, 4)).is_err());
    }

    #[test]
    fn tau_rotates_forward() {
        assert_eq!(tau_d(&atom(4, 1, 2), 1), atom(4, 2, 3));
        assert_eq!(tau_d(&small_delta(4), 1), small_delta(4));
        for d in dual_simples(4) {
            assert_eq!(tau_d(d, 4), *d);
            assert_eq!(tau_d(&tau_d(d, 3), 1), *d);
            assert_eq!(rho(&conj("d^-1", d, "d")), rho(&tau_d(d, 1).to_word()));
        }
    }

    #[test]
    fn complement_multiplies_to_delta() {
        for n in 3..6 {
            let delta = rho(&small_delta(n).to_word());
            for d in dual_simples(n) {
                let c = d.right_complement();
                assert_eq!(d.len() + c.len(), n - 1);
                assert_eq!(&rho(&d.to_word()) * &rho(&c.to_word()), delta);
            }
        }
    }

    #[test]
    fn json_renders_atoms() {
        let d = blocks(6, &[&[1, 4, 6], &[2, 3]]);
        assert_eq!(serde_json::to_value(&d).unwrap(), serde_json::json!(["a4,6", "a1,4", "a2,3"]));
    }
}
