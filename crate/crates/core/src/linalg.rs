//! Dense exact-rational matrices, just big enough for Gram inversions and
//! the small matrix realizations used by the rank-two checks.

use std::fmt;

use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer entries, for terse fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::integer(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * r).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn bracket(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        let mut t = Rational::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Exponential of a nilpotent matrix; panics if a power fails to vanish
    /// within the dimension.
    pub fn exp_nilpotent(&self) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut total = Matrix::identity(self.rows);
        let mut term = Matrix::identity(self.rows);
        for k in 1..=self.rows + 1 {
            term = term.mul(self).scale(&Rational::new(1, k as i64));
            if term.is_zero() {
                return total;
            }
            total = total.add(&term);
        }
        panic!("matrix is not nilpotent");
    }

    /// Gauss-Jordan inverse; `None` for singular input.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let a = work.get(pivot, j).clone();
                    let b = work.get(col, j).clone();
                    work.set(pivot, j, b);
                    work.set(col, j, a);
                    let a = inv.get(pivot, j).clone();
                    let b = inv.get(col, j).clone();
                    inv.set(pivot, j, b);
                    inv.set(col, j, a);
                }
            }
            let scale = work.get(col, col).recip();
            for j in 0..n {
                work.set(col, j, work.get(col, j) * &scale);
                inv.set(col, j, inv.get(col, j) * &scale);
            }
            for r in 0..n {
                if r == col || work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col).clone();
                for j in 0..n {
                    let w = work.get(r, j) - &(&factor * work.get(col, j));
                    work.set(r, j, w);
                    let v = inv.get(r, j) - &(&factor * inv.get(col, j));
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Solves `self * x = rhs` for a single column; `None` when inconsistent
    /// or underdetermined. Used to express images in a stored basis.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, rhs.len());
        let n = self.cols;
        let mut aug: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| {
                let mut row: Vec<Rational> =
                    (0..n).map(|c| self.get(r, c).clone()).collect();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(row, p);
            let scale = aug[row][col].recip();
            for v in aug[row].iter_mut() {
                *v = &*v * &scale;
            }
            let pivot_row = aug[row].clone();
            for (r, other) in aug.iter_mut().enumerate() {
                if r != row && !other[col].is_zero() {
                    let factor = other[col].clone();
                    for (x, p) in other.iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == aug.len() {
                break;
            }
        }
        // inconsistent?
        if aug[row..].iter().any(|r| !r[n].is_zero()) {
            return None;
        }
        if pivot_cols.len() < n {
            return None;
        }
        let mut x = vec![Rational::zero(); n];
        for (r, &col) in pivot_cols.iter().enumerate() {
            x[col] = aug[r][n].clone();
        }
        Some(x)
    }
}

/// Incrementally maintained row space, for linear-independence tests over
/// flattened matrices.
#[derive(Debug, Clone, Default)]
pub struct RowSpan {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new() -> Self {
        RowSpan::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces the vector against the span; returns true (and extends the
    /// span) when it was independent.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let scale = v[p].recip();
                for x in v.iter_mut() {
                    *x = &*x * &scale;
                }
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        v.iter().all(Rational::is_zero)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_cartan_block() {
        let a = Matrix::from_int_rows(&[&[2, -1], &[-1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.get(0, 0), &Rational::new(2, 3));
        assert_eq!(inv.get(0, 1), &Rational::new(1, 3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(a.inverse().is_none());
    }

    #[test]
    fn exp_of_nilpotent() {
        let e = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let exp = e.exp_nilpotent();
        assert_eq!(exp.get(0, 2), &Rational::new(1, 2));
        assert_eq!(exp.get(0, 1), &Rational::one());
    }

    #[test]
    fn solve_in_basis() {
        let a = Matrix::from_int_rows(&[&[1, 0], &[1, 1], &[0, 2]]);
        let x = a
            .solve(&[
                Rational::integer(3),
                Rational::integer(5),
                Rational::integer(4),
            ])
            .unwrap();
        assert_eq!(x, vec![Rational::integer(3), Rational::integer(2)]);
        assert!(a
            .solve(&[Rational::integer(1), Rational::zero(), Rational::zero()])
            .is_none());
    }
}
