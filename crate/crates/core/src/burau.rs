//! The reduced Burau representation `ρ_n : B_n → GL(n−1, Z[q^±1])`.
//!
//! Conventions: braids act on the right and `ρ(xy) = ρ(x)ρ(y)`. In the
//! standard-fork basis, `ρ(σᵢ)` is the identity except in column `i`, which
//! holds `q` in row `i−1`, `−q` in row `i` and `1` in row `i+1` (rows that
//! exist). For `n = 4`:
//!
//! ```text
//! ρ(σ₁) = [-q 0 0; 1 1 0; 0 0 1]
//! ρ(σ₂) = [1 q 0; 0 -q 0; 0 1 1]
//! ρ(σ₃) = [1 0 0; 0 1 q; 0 0 -q]
//! ```
//!
//! Under these conventions `det ρ(x) = (−q)^{e(x)}` where `e` is the
//! exponent sum.

use crate::error::{Error, Result};
use crate::laurent::{BurauMatrix, LaurentPoly};
use crate::words::{generator_artin_letters, BraidWord, Generator};

/// Marker for the multiplication and basis conventions documented at the
/// module level: right action, `ρ(xy) = ρ(x)ρ(y)`, standard-fork basis.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RhoConvention;

fn check_index(n: usize, i: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadStrandCount(n));
    }
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { n, detail: format!("s{i}") });
    }
    Ok(())
}

/// `ρ_n(σᵢ)`.
pub fn rho_sigma(n: usize, i: usize) -> Result<BurauMatrix> {
    check_index(n, i)?;
    let mut m = BurauMatrix::identity(n);
    apply_artin_right(&mut m, i as i32);
    Ok(m)
}

/// `ρ_n(σᵢ)⁻¹`, in closed form.
pub fn rho_sigma_inv(n: usize, i: usize) -> Result<BurauMatrix> {
    check_index(n, i)?;
    let mut m = BurauMatrix::identity(n);
    apply_artin_right(&mut m, -(i as i32));
    Ok(m)
}

/// `m ← m · ρ(σ_|letter|^{sign letter})`. Only column `|letter|` changes.
pub fn apply_artin_right(m: &mut BurauMatrix, letter: i32) {
    let d = m.dim();
    let c = letter.unsigned_abs() as usize - 1;
    assert!(c < d, "Artin index out of range");
    for r in 0..d {
        let left = (c > 0).then(|| m.entries[r * d + c - 1].clone());
        let right = (c + 1 < d).then(|| m.entries[r * d + c + 1].clone());
        let cell = &mut m.entries[r * d + c];
        if letter > 0 {
            // q·A[.,c−1] − q·A[.,c] + A[.,c+1]
            let mut v = cell.scale_monomial(-1, 1);
            if let Some(l) = left {
                v.add_scaled(&l, 1, 1);
            }
            if let Some(rt) = right {
                v.add_scaled(&rt, 1, 0);
            }
            *cell = v;
        } else {
            // A[.,c−1] − q⁻¹·A[.,c] + q⁻¹·A[.,c+1]
            let mut v = cell.scale_monomial(-1, -1);
            if let Some(l) = left {
                v.add_scaled(&l, 1, 0);
            }
            if let Some(rt) = right {
                v.add_scaled(&rt, 1, -1);
            }
            *cell = v;
        }
    }
}

/// `m ← m · ρ(w)` for a signed Artin letter sequence.
pub fn apply_letters_right(m: &mut BurauMatrix, letters: &[i32]) {
    for &l in letters {
        apply_artin_right(m, l);
    }
}

/// Burau matrix of one positive generator.
pub fn rho_generator(n: usize, g: Generator) -> BurauMatrix {
    let mut m = BurauMatrix::identity(n);
    apply_letters_right(&mut m, &generator_artin_letters(g, n));
    m
}

fn rho_generator_inv(n: usize, g: Generator) -> BurauMatrix {
    let letters: Vec<i32> = generator_artin_letters(g, n).iter().rev().map(|&l| -l).collect();
    let mut m = BurauMatrix::identity(n);
    apply_letters_right(&mut m, &letters);
    m
}

/// `ρ_n(δ)`.
pub fn rho_delta(n: usize) -> BurauMatrix {
    rho_generator(n, Generator::SmallDelta)
}

/// `ρ_n(δ^p)` by repeated squaring.
pub fn rho_delta_power(n: usize, p: i64) -> BurauMatrix {
    if p >= 0 {
        rho_delta(n).pow(p as u64)
    } else {
        rho_generator_inv(n, Generator::SmallDelta).pow(p.unsigned_abs())
    }
}

// Beyond this many repetitions a token is raised by squaring instead of
// being applied letter by letter.
const SQUARING_THRESHOLD: u64 = 8;

/// `ρ_n(w)`.
pub fn rho(w: &BraidWord) -> BurauMatrix {
    let n = w.n();
    let mut m = BurauMatrix::identity(n);
    for t in w.tokens() {
        let reps = t.power.unsigned_abs();
        let letters = generator_artin_letters(t.generator, n);
        let heavy = matches!(t.generator, Generator::SmallDelta | Generator::BigDelta);
        if reps > SQUARING_THRESHOLD || (heavy && reps > 1) {
            let base = if t.power > 0 {
                rho_generator(n, t.generator)
            } else {
                rho_generator_inv(n, t.generator)
            };
            m = &m * &base.pow(reps);
            continue;
        }
        let seq: Vec<i32> = if t.power > 0 {
            letters
        } else {
            letters.iter().rev().map(|&l| -l).collect()
        };
        for _ in 0..reps {
            apply_letters_right(&mut m, &seq);
        }
    }
    m
}

pub fn is_identity(m: &BurauMatrix) -> bool {
    m.is_identity()
}

/// The ratio `c` when `m = c·I`.
pub fn is_homothety(m: &BurauMatrix) -> Option<LaurentPoly> {
    m.homothety_ratio()
}

/// `(−q)^e`, the determinant of `ρ(x)` when `e(x) = e`.
pub fn expected_det(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(if e.rem_euclid(2) == 0 { 1 } else { -1 }, e)
}
