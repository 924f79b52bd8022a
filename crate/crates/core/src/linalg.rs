//! Exact integer and rational linear algebra: dense matrices over BigInt,
//! integer kernel lattices via unimodular column reduction, and ranks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix over arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let v = &out[(r, c)] + a * b;
                        out[(r, c)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Rank over the rationals (= rank over the integers).
    pub fn rank(&self) -> usize {
        rational_rank_of(self.rows, self.cols, |r, c| {
            BigRational::from_integer(self[(r, c)].clone())
        })
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn rational_rank_of(
    rows: usize,
    cols: usize,
    entry: impl Fn(usize, usize) -> BigRational,
) -> usize {
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| (0..cols).map(|c| entry(r, c)).collect())
        .collect();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = &m[r][col] / &inv;
                for c in col..cols {
                    let v = &m[r][c] - &factor * &m[row][c];
                    m[r][c] = v;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// A basis of the integer kernel lattice {x : M x = 0}, computed by
/// unimodular column reduction (column-style Hermite form with the
/// transformation matrix tracked). The result is saturated: it generates
/// the full lattice of integer solutions.
pub fn kernel_basis(m: &IntMat) -> Vec<Vec<BigInt>> {
    let rows = m.rows;
    let cols = m.cols;
    let mut h = m.clone();
    let mut u = IntMat::identity(cols);
    let mut active: Vec<usize> = (0..cols).collect();

    for r in 0..rows {
        loop {
            let nonzero: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&c| !h[(r, c)].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                if let Some(&c) = nonzero.first() {
                    active.retain(|&x| x != c);
                }
                break;
            }
            // reduce all by the column with the smallest nonzero magnitude
            let &cmin = nonzero
                .iter()
                .min_by_key(|&&c| h[(r, c)].abs())
                .unwrap();
            for &c in &nonzero {
                if c == cmin {
                    continue;
                }
                let q = h[(r, c)].div_floor(&h[(r, cmin)]);
                if q.is_zero() {
                    continue;
                }
                for rr in 0..rows {
                    let v = &h[(rr, c)] - &q * &h[(rr, cmin)];
                    h[(rr, c)] = v;
                }
                for rr in 0..cols {
                    let v = &u[(rr, c)] - &q * &u[(rr, cmin)];
                    u[(rr, c)] = v;
                }
            }
        }
    }

    let mut basis = Vec::new();
    for c in 0..cols {
        let col_zero = (0..rows).all(|r| h[(r, c)].is_zero());
        if col_zero {
            let v: Vec<BigInt> = (0..cols).map(|r| u[(r, c)].clone()).collect();
            if v.iter().any(|x| !x.is_zero()) {
                basis.push(v);
            }
        }
    }
    basis
}
