//! Dense exact matrices with fraction-free elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, Rational};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from equal-length rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[Rational]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            entries.extend_from_slice(r.as_ref());
        }
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rs: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
            .collect();
        Matrix::from_rows(&rs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Rows scaled by their denominators' lcm; the per-row multipliers are returned too.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.rows);
        let mut mults = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let row = self.row(r);
            let den = common_denominator(row.iter());
            out.push(
                row.iter()
                    .map(|v| v.numer() * (&den / v.denom()))
                    .collect::<Vec<_>>(),
            );
            mults.push(den);
        }
        (out, mults)
    }

    /// Fraction-free (Bareiss) forward elimination over the integers.
    /// Pivots are the first nonzero entry in column order. Returns the
    /// eliminated rows, the pivot columns, and the row-swap parity.
    fn bareiss(&self) -> (Vec<Vec<BigInt>>, Vec<usize>, bool) {
        let (mut a, _) = self.integer_rows();
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            if piv != r {
                a.swap(piv, r);
                odd = !odd;
            }
            let (top, rest) = a.split_at_mut(r + 1);
            let prow = &top[r];
            for row in rest.iter_mut() {
                for j in c + 1..self.cols {
                    let v = (&prow[c] * &row[j] - &row[c] * &prow[j]) / &prev;
                    row[j] = v;
                }
                row[c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        (a, pivots, odd)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Basis of the right null space. Each vector has a 1 in one free
    /// column, 0 in the other free columns, and is read off the reduced
    /// echelon form, so the output is a deterministic function of the input.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (ech, pivots, _) = self.bareiss();
        let rank = pivots.len();
        // Back-substitute to reduced echelon form over the rationals.
        let mut red: Vec<Vec<Rational>> = ech[..rank]
            .iter()
            .map(|row| row.iter().map(|v| Rational::from(v.clone())).collect())
            .collect();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let inv = red[i][pc].recip();
            for v in red[i].iter_mut() {
                *v = &*v * &inv;
            }
            for k in 0..i {
                if red[k][pc].is_zero() {
                    continue;
                }
                let f = red[k][pc].clone();
                for j in pc..self.cols {
                    let d = &f * &red[i][j];
                    red[k][j] -= &d;
                }
            }
        }
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&red[i][free];
                }
                v
            })
            .collect()
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (_, mults) = self.integer_rows();
        let (ech, pivots, odd) = self.bareiss();
        if pivots.len() < n {
            return Ok(Rational::zero());
        }
        let scale: BigInt = mults.iter().product();
        let det = Rational::new(ech[n - 1][n - 1].clone(), scale);
        Ok(if odd { -det } else { det })
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[(r, c)].is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(piv, c);
            inv.swap_rows(piv, c);
            let s = a[(c, c)].recip();
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] * &s;
                inv[(c, j)] = &inv[(c, j)] * &s;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for j in 0..n {
                    let da = &f * &a[(c, j)];
                    a[(r, j)] -= &da;
                    let di = &f * &inv[(c, j)];
                    inv[(r, j)] -= &di;
                }
            }
        }
        Ok(inv)
    }

    /// Solves `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        Ok(self.inverse()?.mul_vec(b))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let d = a * &rhs[(k, j)];
                    out[(i, j)] += &d;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The kernel of `m` has dimension `cols - rank`; this helper is the
/// dimension alone.
pub fn nullity(m: &Matrix) -> usize {
    m.cols() - m.rank()
}
