//! Dense matrices over a [`Field`] with Gaussian elimination.
//!
//! Pivots are always the first nonzero entry in column order, so every
//! derived object (rank profile, reduced form, null-space basis) is deterministic.

mod structured;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

pub use structured::{
    block_det_lhs, block_det_rhs, cauchy, cauchy_det_closed_form, ordered_partitions,
    partition_sign, vandermonde,
};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for &e in row {
                field.check(e)?;
                data.push(e);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor from small integer encodings.
    pub fn from_u64(field: &Field, rows: &[&[u64]]) -> Result<Matrix> {
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Elem(v)).collect())
            .collect();
        Matrix::from_rows(field, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, cols.len(), |i, j| {
            self[(i, cols[j])]
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, rows.len(), self.cols, |i, j| {
            self[(rows[i], j)]
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(&self.field, rows.len(), cols.len(), |i, j| {
            self[(rows.start + i, cols.start + j)]
        })
    }

    /// Writes `block` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(row + i, col + j)] = block[(i, j)];
            }
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns over {}",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot join {} rows with {}",
                self.rows, other.rows
            )));
        }
        Ok(Matrix::from_fn(
            &self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self[(i, j)]
                } else {
                    other[(i, j - self.cols)]
                }
            },
        ))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows).map(|i| dot(f, self.row(i), v)).collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        Ok(out)
    }

    pub fn scale_row(&mut self, i: usize, c: Elem) {
        let f = self.field.clone();
        for x in self.row_mut(i) {
            *x = f.mul(*x, c);
        }
    }

    pub fn scale_column(&mut self, j: usize, c: Elem) {
        for i in 0..self.rows {
            self[(i, j)] = self.field.mul(self[(i, j)], c);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= c * row[source]`
    fn eliminate_row(&mut self, target: usize, source: usize, c: Elem, from_col: usize) {
        let f = self.field.clone();
        for j in from_col..self.cols {
            let s = self.data[source * self.cols + j];
            if !s.is_zero() {
                let t = &mut self.data[target * self.cols + j];
                *t = f.sub(*t, f.mul(c, s));
            }
        }
    }

    /// In-place forward elimination. Returns pivot columns and the number of row swaps.
    fn forward(&mut self, reduce_above: bool) -> (Vec<usize>, usize) {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                swaps += 1;
            }
            let inv = f.inv(self[(r, c)]).expect("pivot is nonzero");
            let targets: Box<dyn Iterator<Item = usize>> = if reduce_above {
                Box::new((0..self.rows).filter(|&i| i != r))
            } else {
                Box::new(r + 1..self.rows)
            };
            for i in targets {
                let x = self[(i, c)];
                if !x.is_zero() {
                    self.eliminate_row(i, r, f.mul(x, inv), c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, swaps)
    }

    pub fn rank(&self) -> usize {
        self.clone().forward(false).0.len()
    }

    pub fn det(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let (pivots, swaps) = m.forward(false);
        if pivots.len() < self.rows {
            return Ok(Elem::ZERO);
        }
        let f = &self.field;
        let d = f.product((0..self.rows).map(|i| m[(i, i)]));
        Ok(if swaps % 2 == 1 { f.neg(d) } else { d })
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let (pivots, _) = m.forward(true);
        let f = self.field.clone();
        for (i, &c) in pivots.iter().enumerate() {
            let inv = f.inv(m[(i, c)]).expect("pivot is nonzero");
            m.scale_row(i, inv);
        }
        Rref { matrix: m, pivots }
    }

    /// Some `x` with `self * x = b`; free variables are set to zero.
    pub fn solve(&self, b: &[Elem]) -> Result<Vec<Elem>> {
        if b.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let rhs = Matrix::from_fn(&self.field, self.rows, 1, |i, _| b[i]);
        let Rref { matrix, pivots } = self.hstack(&rhs)?.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![Elem::ZERO; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = matrix[(i, self.cols)];
        }
        Ok(x)
    }

    /// Basis of the right null space as columns, each scaled so its first
    /// nonzero entry is 1.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            let mut v = vec![Elem::ZERO; self.cols];
            v[fc] = Elem::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(matrix[(i, fc)]);
            }
            let lead = *v
                .iter()
                .find(|e| !e.is_zero())
                .expect("basis vector is nonzero");
            let inv = f.inv(lead).expect("nonzero");
            for (i, x) in v.into_iter().enumerate() {
                out[(i, k)] = f.mul(x, inv);
            }
        }
        out
    }
}

pub(crate) fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Elem;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|&e| self.field.render(e)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
