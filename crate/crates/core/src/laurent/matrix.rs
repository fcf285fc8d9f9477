use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Degree, DegreeStats, LaurentPoly};
use crate::error::{Error, Result};

/// A dense `(n−1) × (n−1)` matrix over `Z[q, q⁻¹]`, tagged with the strand
/// count `n` of the braid group it represents. Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    n: usize,
    pub(crate) entries: Vec<LaurentPoly>,
}

impl BurauMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2, "strand count must be at least 2");
        let d = n - 1;
        BurauMatrix {
            n,
            entries: vec![LaurentPoly::zero(); d * d],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, LaurentPoly::one())
    }

    /// `c · I`.
    pub fn scalar(n: usize, c: LaurentPoly) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n - 1 {
            m.entries[i * (n - 1) + i] = c.clone();
        }
        m
    }

    pub fn from_rows(n: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadStrandCount(n));
        }
        let d = n - 1;
        if rows.len() != d {
            return Err(Error::DimensionMismatch(d, rows.len()));
        }
        let mut entries = Vec::with_capacity(d * d);
        for row in rows {
            if row.len() != d {
                return Err(Error::DimensionMismatch(d, row.len()));
            }
            entries.extend(row);
        }
        Ok(BurauMatrix { n, entries })
    }

    /// Convenience constructor from `(exponent, coefficient)` term lists.
    pub fn from_terms(n: usize, rows: &[&[&[(i64, i64)]]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|t| LaurentPoly::from_terms(t.iter().copied()))
                    .collect()
            })
            .collect();
        Self::from_rows(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Side length, `n − 1`.
    pub fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        let d = self.dim();
        self.entries[i * d + j] = p;
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries.chunks(self.dim()).map(|r| r.to_vec()).collect()
    }

    pub fn try_mul(&self, rhs: &BurauMatrix) -> Result<BurauMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.dim(), rhs.dim()));
        }
        let d = self.dim();
        let mut out = BurauMatrix::zero(self.n);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &rhs.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.entries[i * d + j].add_scaled(&prod, 1, 0);
                }
            }
        }
        Ok(out)
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> BurauMatrix {
        let mut base = self.clone();
        let mut acc = BurauMatrix::identity(self.n);
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

    /// Multiply every entry by `q^k`.
    pub fn shift(&self, k: i64) -> BurauMatrix {
        BurauMatrix {
            n: self.n,
            entries: self.entries.iter().map(|p| p.shift(k)).collect(),
        }
    }

    /// Determinant by cofactor expansion along rows, memoized on the set of
    /// remaining columns.
    pub fn det(&self) -> LaurentPoly {
        let d = self.dim();
        let mut memo: HashMap<u64, LaurentPoly> = HashMap::new();
        self.minor(0, (1u64 << d) - 1, &mut memo)
    }

    fn minor(&self, row: usize, cols: u64, memo: &mut HashMap<u64, LaurentPoly>) -> LaurentPoly {
        let d = self.dim();
        if row == d {
            return LaurentPoly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero();
        let mut sign = 1;
        for j in 0..d {
            if cols & (1 << j) == 0 {
                continue;
            }
            let a = &self.entries[row * d + j];
            if !a.is_zero() {
                let sub = self.minor(row + 1, cols & !(1 << j), memo);
                acc.add_scaled(&(a * &sub), sign, 0);
            }
            sign = -sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Global `(m(A), M(A))` over all entries.
    pub fn stats(&self) -> DegreeStats {
        self.entries
            .iter()
            .fold(DegreeStats::EMPTY, |acc, p| acc.merge(p.stats()))
    }

    pub fn max_deg(&self) -> Degree {
        self.stats().max_deg
    }

    pub fn min_deg(&self) -> Degree {
        self.stats().min_deg
    }

    /// Maximal degree in row `i`.
    pub fn row_max(&self, i: usize) -> Result<Degree> {
        let d = self.dim();
        if i >= d {
            return Err(Error::IndexOutOfRange { n: self.n, detail: format!("row {i}") });
        }
        Ok((0..d).map(|j| self.entry(i, j).max_deg()).max().unwrap())
    }

    /// Maximal degree in column `j`.
    pub fn col_max(&self, j: usize) -> Result<Degree> {
        let d = self.dim();
        if j >= d {
            return Err(Error::IndexOutOfRange { n: self.n, detail: format!("column {j}") });
        }
        Ok((0..d).map(|i| self.entry(i, j).max_deg()).max().unwrap())
    }

    pub fn row_maxima(&self) -> Vec<Degree> {
        (0..self.dim()).map(|i| self.row_max(i).unwrap()).collect()
    }

    pub fn col_maxima(&self) -> Vec<Degree> {
        (0..self.dim()).map(|j| self.col_max(j).unwrap()).collect()
    }

    /// Entry-wise maximal degrees.
    pub fn degree_matrix(&self) -> Vec<Vec<Degree>> {
        self.entries
            .chunks(self.dim())
            .map(|r| r.iter().map(LaurentPoly::max_deg).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.homothety_ratio().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the matrix equals `c · I`.
    pub fn homothety_ratio(&self) -> Option<LaurentPoly> {
        let d = self.dim();
        let c = self.entry(0, 0);
        for i in 0..d {
            for j in 0..d {
                let e = self.entry(i, j);
                if i == j {
                    if e != c {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(c.clone())
    }
}

impl Mul<&BurauMatrix> for &BurauMatrix {
    type Output = BurauMatrix;

    /// Panics on a strand-count mismatch; see [`BurauMatrix::try_mul`].
    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim()) {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BurauMatrix(n={})", self.n)?;
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl Serialize for BurauMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { n: self.n, entries: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BurauMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        BurauMatrix::from_rows(raw.n, raw.entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma1_b4() -> BurauMatrix {
        BurauMatrix::from_terms(
            4,
            &[
                &[&[(1, -1)], &[], &[]],
                &[&[(0, 1)], &[(0, 1)], &[]],
                &[&[], &[], &[(0, 1)]],
            ],
        )
        .unwrap()
    }

    #[test]
    fn identity_and_det() {
        let a = sigma1_b4();
        assert_eq!(&BurauMatrix::identity(4) * &a, a);
        assert_eq!(BurauMatrix::identity(4).det(), LaurentPoly::one());
        // Lower-triangular: -q · 1 · 1.
        assert_eq!(a.det(), LaurentPoly::monomial(-1, 1));
    }

    #[test]
    fn det_matches_leibniz_on_3x3() {
        let p = |t: &[(i64, i64)]| LaurentPoly::from_terms(t.iter().copied());
        let m = BurauMatrix::from_rows(
            4,
            vec![
                vec![p(&[(0, 2), (1, -1)]), p(&[(-1, 3)]), p(&[(2, 1)])],
                vec![p(&[(0, 1)]), p(&[(1, 1), (0, 1)]), p(&[(0, -4)])],
                vec![p(&[(3, 1)]), p(&[]), p(&[(-2, 5)])],
            ],
        )
        .unwrap();
        let e = |i: usize, j: usize| m.entry(i, j).clone();
        let leibniz = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        assert_eq!(m.det(), leibniz);
    }

    #[test]
    fn stats_and_homothety() {
        let m = BurauMatrix::scalar(4, LaurentPoly::monomial(1, 4));
        assert_eq!(
            m.stats(),
            DegreeStats { min_deg: Degree::Finite(4), max_deg: Degree::Finite(4) }
        );
        assert_eq!(m.homothety_ratio(), Some(LaurentPoly::monomial(1, 4)));
        assert!(!m.is_identity());
        assert_eq!(sigma1_b4().homothety_ratio(), None);

        let z = BurauMatrix::zero(4);
        assert_eq!(z.col_max(1).unwrap(), Degree::NegInf);
        assert_eq!(z.stats(), DegreeStats::EMPTY);
        assert!(z.row_max(3).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(BurauMatrix::identity(3).try_mul(&BurauMatrix::identity(4)).is_err());
        assert!(BurauMatrix::from_rows(3, vec![vec![LaurentPoly::one()]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = sigma1_b4();
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.starts_with(r#"{"n":4,"entries":[[{"lo":1,"coeffs":[-1]}"#));
        let back: BurauMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
