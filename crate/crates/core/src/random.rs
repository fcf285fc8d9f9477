//! Seeded random braids for property tests and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{big_delta, left_weighted_c, simple_from_word, ClassicalNF, PermSimple};
use crate::dual::{dual_simples, simply_nested_pair, DualNF, DualSimple};
use crate::error::{Error, Result};
use crate::words::{BraidWord, Generator};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform word in the letters `σᵢ^{±1}`.
pub fn random_word<R: Rng>(n: usize, len: usize, rng: &mut R) -> BraidWord {
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::artin(n, &letters).expect("letters are in range")
}

/// Word mixing Artin letters, band generators and small powers of `δ`
/// and `Δ`, for exercising every token kind.
pub fn random_mixed_word<R: Rng>(n: usize, len: usize, rng: &mut R) -> BraidWord {
    let mut w = BraidWord::identity(n).expect("valid strand count");
    for _ in 0..len {
        let g = match rng.gen_range(0..10) {
            0 => Generator::SmallDelta,
            1 => Generator::BigDelta,
            2..=5 => Generator::Artin(rng.gen_range(1..n)),
            _ => {
                let i = rng.gen_range(1..n);
                Generator::band(i, rng.gen_range(i + 1..=n))
            }
        };
        let power = *[-2, -1, -1, 1, 1, 2].choose(rng).expect("nonempty");
        w.push_generator(g, power).expect("valid generator");
    }
    w
}

/// Depth-first extension of a factor sequence, candidates in random order.
fn extend<T: Clone, R: Rng>(
    chain: &mut Vec<T>,
    target: usize,
    pool: &[T],
    ok: &impl Fn(&T, &T) -> bool,
    rng: &mut R,
    budget: &mut usize,
) -> bool {
    if chain.len() == target {
        return true;
    }
    let mut order: Vec<&T> = match chain.last() {
        Some(prev) => pool.iter().filter(|c| ok(prev, c)).collect(),
        None => pool.iter().collect(),
    };
    order.shuffle(rng);
    for c in order {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        chain.push(c.clone());
        if extend(chain, target, pool, ok, rng, budget) {
            return true;
        }
        chain.pop();
    }
    false
}

const SEARCH_BUDGET: usize = 100_000;

/// A simply-nested dual normal form `δ^p d₁⋯d_r` with `p ∈ [−2, 2]`.
pub fn random_simply_nested_nf<R: Rng>(n: usize, r: usize, rng: &mut R) -> Result<DualNF> {
    let pool: Vec<DualSimple> =
        dual_simples(n).iter().filter(|d| !d.is_empty() && !d.is_delta()).cloned().collect();
    if r > 0 && pool.is_empty() {
        return Err(Error::Generation(format!("B_{n} has no proper dual simples")));
    }
    let mut chain = Vec::with_capacity(r);
    let mut budget = SEARCH_BUDGET;
    if !extend(&mut chain, r, &pool, &simply_nested_pair, rng, &mut budget) {
        return Err(Error::Generation(format!("no simply-nested sequence of length {r} in B_{n}")));
    }
    Ok(DualNF { n, p: rng.gen_range(-2..=2), factors: chain })
}

/// Word of a random simply-nested braid, deterministic in `seed`.
pub fn random_simply_nested(n: usize, r: usize, seed: u64) -> Result<BraidWord> {
    Ok(random_simply_nested_nf(n, r, &mut rng_from_seed(seed))?.to_word())
}

/// A classical normal form in `B₄` with `p = 0`, `r` factors and no factor
/// equal to `σ₂σ₁σ₃`.
pub fn random_b4_positive_nf<R: Rng>(r: usize, rng: &mut R) -> Result<ClassicalNF> {
    let forbidden = simple_from_word(&BraidWord::artin(4, &[2, 1, 3]).expect("valid"))?;
    let delta = big_delta(4);
    let pool: Vec<PermSimple> = crate::classical::enumerate_perm_simples(4)
        .into_iter()
        .filter(|s| !s.is_empty() && *s != delta && *s != forbidden)
        .collect();
    let mut chain = Vec::with_capacity(r);
    let mut budget = SEARCH_BUDGET;
    if !extend(&mut chain, r, &pool, &left_weighted_c, rng, &mut budget) {
        return Err(Error::Generation(format!("no admissible sequence of length {r}")));
    }
    Ok(ClassicalNF { n: 4, p: 0, factors: chain })
}
