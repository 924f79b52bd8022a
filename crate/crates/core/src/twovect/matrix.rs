//! Dense matrices for the based model: multiplicity matrices over the
//! naturals and 2-morphism blocks over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Multiplicity matrix of a 1-morphism: nonnegative integers, row-major,
/// indexed (target simple, source simple).
#[derive(Clone, PartialEq, Eq)]
pub struct NatMat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl NatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        NatMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> NatMat {
        NatMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// self * other with overflow checks.
    pub fn mul(&self, other: &NatMat) -> NatMat {
        assert_eq!(self.cols, other.rows, "multiplicity matrix dimension mismatch");
        let mut out = NatMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let v = out
                            .get(r, c)
                            .checked_add(a.checked_mul(b).expect("multiplicity overflow"))
                            .expect("multiplicity overflow");
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn scaled_add(&self, c: u64, other: &NatMat) -> NatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        NatMat::from_fn(self.rows, self.cols, |r, cc| {
            self.get(r, cc) + c * other.get(r, cc)
        })
    }

    /// Nonzero entries of one row as (column, multiplicity) pairs.
    pub fn row_nonzero(&self, r: usize) -> Vec<(usize, u64)> {
        (0..self.cols)
            .filter_map(|c| {
                let v = self.get(r, c);
                (v != 0).then_some((c, v))
            })
            .collect()
    }

    pub fn to_int_mat(&self) -> crate::linalg::IntMat {
        crate::linalg::IntMat::from_fn(self.rows, self.cols, |r, c| BigInt::from(self.get(r, c)))
    }
}

impl std::fmt::Debug for NatMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "NatMat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for NatMat {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("NatMat", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        let grid: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect();
        st.serialize_field("entries", &grid)?;
        st.end()
    }
}

/// A block of a 2-morphism: a dense matrix over exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Identity on the overlapping square, zero elsewhere. Well-defined for
    /// any shape; coincides with the identity when rows == cols.
    pub fn partial_identity(rows: usize, cols: usize) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows.min(cols) {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn transpose(&self) -> RatMat {
        RatMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "block dimension mismatch");
        let mut out = RatMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn neg(&self) -> RatMat {
        RatMat::from_fn(self.rows, self.cols, |r, c| -self.get(r, c).clone())
    }

    /// Kronecker product, the right operand fastest: entry at
    /// (r1*rows2 + r2, c1*cols2 + c2) is self[r1,c1] * other[r2,c2].
    pub fn kronecker(&self, other: &RatMat) -> RatMat {
        let mut out = RatMat::zero(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Determinant by exact Gaussian elimination. None for non-square.
    pub fn det(&self) -> Option<BigRational> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigRational::one());
        }
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else { return Some(BigRational::zero()) };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det *= m[col][col].clone();
            let inv = m[col][col].clone();
            for r in (col + 1)..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &inv;
                for c in col..n {
                    let v = &m[r][c] - &factor * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
        Some(det)
    }

    pub fn is_invertible(&self) -> bool {
        match self.det() {
            Some(d) => !d.is_zero(),
            None => false,
        }
    }
}

impl std::fmt::Debug for RatMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for RatMat {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("RatMat", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        let grid: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        st.serialize_field("entries", &grid)?;
        st.end()
    }
}

/// Convenience constructor for a rational from an integer.
pub fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor n/d.
pub fn ratio_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
