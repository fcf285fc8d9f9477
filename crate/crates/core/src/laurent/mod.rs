//! Exact Laurent polynomials in one variable `q` with integer coefficients,
//! and square matrices over them.
//!
//! Degree statistics follow the usual conventions for the zero polynomial:
//! its minimal degree is `+∞` and its maximal degree is `−∞`. These are
//! represented literally by [`Degree`] rather than by sentinel integers.

mod coeff;
mod matrix;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize};

pub use coeff::Coeff;
pub use matrix::BurauMatrix;

/// An extended integer degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    /// Shift a finite degree; infinities are absorbing.
    pub fn offset(self, k: i64) -> Degree {
        match self {
            Degree::Finite(d) => Degree::Finite(d + k),
            other => other,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::PosInf => f.write_str("+inf"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(d) => s.serialize_i64(*d),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Minimal and maximal degree of a polynomial or matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min_deg: Degree,
    pub max_deg: Degree,
}

impl DegreeStats {
    pub const EMPTY: DegreeStats = DegreeStats {
        min_deg: Degree::PosInf,
        max_deg: Degree::NegInf,
    };

    pub fn merge(self, other: DegreeStats) -> DegreeStats {
        DegreeStats {
            min_deg: self.min_deg.min(other.min_deg),
            max_deg: self.max_deg.max(other.max_deg),
        }
    }
}

/// `Σ coeffs[k] · q^(lo + k)`, kept trimmed so that the first and last
/// stored coefficients are nonzero. The zero polynomial has no coefficients
/// and `lo == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<Coeff>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q^e`.
    pub fn monomial(c: impl Into<Coeff>, e: i64) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds `Σ coeffs[k] · q^(lo + k)` and trims it.
    pub fn from_coeffs(lo: i64, coeffs: Vec<Coeff>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(lo, coeffs.iter().map(|&c| Coeff::Small(c)).collect())
    }

    /// Build from `(exponent, coefficient)` terms; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let terms: Vec<(i64, i64)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Coeff::default(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += &Coeff::Small(c);
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        let Some(first) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            self.coeffs.clear();
            self.lo = 0;
            return;
        };
        let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        self.coeffs.truncate(last + 1);
        if first > 0 {
            self.coeffs.drain(..first);
            self.lo += first as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exponent of the lowest stored term (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> Coeff {
        let k = e - self.lo;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Coeff::default()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn min_deg(&self) -> Degree {
        if self.is_zero() {
            Degree::PosInf
        } else {
            Degree::Finite(self.lo)
        }
    }

    pub fn max_deg(&self) -> Degree {
        if self.is_zero() {
            Degree::NegInf
        } else {
            Degree::Finite(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn stats(&self) -> DegreeStats {
        DegreeStats {
            min_deg: self.min_deg(),
            max_deg: self.max_deg(),
        }
    }

    /// `Some((c, e))` when the polynomial is the single term `c · q^e`.
    pub fn as_monomial(&self) -> Option<(&Coeff, i64)> {
        match self.coeffs.as_slice() {
            [c] => Some((c, self.lo)),
            _ => None,
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiply by `c · q^k`.
    pub fn scale_monomial(&self, c: i64, k: i64) -> Self {
        if c == 0 || self.is_zero() {
            return Self::zero();
        }
        let c = Coeff::Small(c);
        LaurentPoly {
            lo: self.lo + k,
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// In-place `self += c · q^k · other`.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: i64, k: i64) {
        if other.is_zero() || c == 0 {
            return;
        }
        let olo = other.lo + k;
        let ohi = olo + other.coeffs.len() as i64 - 1;
        if self.is_zero() {
            *self = other.scale_monomial(c, k);
            return;
        }
        let hi = self.lo + self.coeffs.len() as i64 - 1;
        let new_lo = self.lo.min(olo);
        let new_hi = hi.max(ohi);
        if new_lo < self.lo {
            let pad = (self.lo - new_lo) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(Coeff::default(), pad));
            self.lo = new_lo;
        }
        if new_hi > hi {
            self.coeffs
                .resize((new_hi - self.lo + 1) as usize, Coeff::default());
        }
        let off = (olo - self.lo) as usize;
        let c = Coeff::Small(c);
        for (i, x) in other.coeffs.iter().enumerate() {
            let term = if c.is_one() { x.clone() } else { x * &c };
            self.coeffs[off + i] += &term;
        }
        self.trim();
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, 1, 0);
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, -1, 0);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Coeff::default(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] += &t;
            }
        }
        LaurentPoly::from_coeffs(self.lo + rhs.lo, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Arbitrary but total, so polynomials can key ordered maps.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lo, &self.coeffs).cmp(&(other.lo, &other.coeffs))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lo: i64,
            coeffs: Vec<Coeff>,
        }
        let raw = Raw::deserialize(d)?;
        Ok(LaurentPoly::from_coeffs(raw.lo, raw.coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + k as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn arithmetic_examples() {
        // (q + 1) + (-1) = q
        assert_eq!(&p(&[(1, 1), (0, 1)]) + &LaurentPoly::constant(-1), LaurentPoly::q());
        // (-q)(-q) = q^2
        let mq = p(&[(1, -1)]);
        assert_eq!(&mq * &mq, LaurentPoly::monomial(1, 2));
        let x = p(&[(-3, 2), (0, 5), (4, -1)]);
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert_eq!(z.stats(), DegreeStats::EMPTY);
    }

    #[test]
    fn stats_examples() {
        assert_eq!(
            p(&[(-1, 1), (2, 3)]).stats(),
            DegreeStats { min_deg: Degree::Finite(-1), max_deg: Degree::Finite(2) }
        );
        assert_eq!(LaurentPoly::zero().min_deg(), Degree::PosInf);
        assert_eq!(LaurentPoly::zero().max_deg(), Degree::NegInf);
        assert_eq!(
            LaurentPoly::constant(5).stats(),
            DegreeStats { min_deg: Degree::Finite(0), max_deg: Degree::Finite(0) }
        );
    }

    #[test]
    fn trimming_is_canonical() {
        let a = LaurentPoly::from_i64s(-2, &[0, 0, 3, 0, -1, 0]);
        assert_eq!(a.lo(), 0);
        assert_eq!(a.coeffs().len(), 3);
        assert_eq!(a, p(&[(0, 3), (2, -1)]));
        assert_eq!(LaurentPoly::from_i64s(7, &[0, 0]), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().lo(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(2, -1), (0, 3), (-1, 1)]).to_string(), "-q^2 + 3 + q^-1");
        assert_eq!(p(&[(1, 2), (0, -1)]).to_string(), "2q - 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let x = p(&[(-1, 1), (1, -2)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"lo":-1,"coeffs":[1,0,-2]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&LaurentPoly::zero()).unwrap(), r#"{"lo":0,"coeffs":[]}"#);
        let untrimmed: LaurentPoly = serde_json::from_str(r#"{"lo":3,"coeffs":[0,4,0]}"#).unwrap();
        assert_eq!(untrimmed, LaurentPoly::monomial(4, 4));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let x = p(&[(-1, 1), (0, -1), (2, 1)]);
        let mut acc = LaurentPoly::one();
        for k in 0..7 {
            assert_eq!(x.pow(k), acc);
            acc = &acc * &x;
        }
    }
}
