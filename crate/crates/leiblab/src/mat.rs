//! Dense exact matrices and vectors with canonical Gauss-Jordan reduction.
//!
//! The reduced row echelon form computed here is the unique canonical
//! representative of a row space; canonical forms make subspace equality a
//! data comparison and make parallel reductions order-independent.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn vec_zeros(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `acc += coeff * v`
pub fn vec_add_scaled(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a = a.add(&x.mul(coeff));
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_scale(coeff: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| x.mul(coeff)).collect()
}

pub fn vec_dot(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.mul(y));
        }
    }
    acc
}

/// Renders a vector as `(c1, c2, ..., cn)` for error messages and reports.
pub fn vec_display(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Dense row-major matrix over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Result<Mat> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        let n_rows = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        Ok(Mat {
            field,
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vector {
        self.row(r).to_vec()
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    /// Flattens row-major into a single coordinate vector (used to canonize
    /// linear maps as points of the rows*cols coordinate space).
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, data: Vector) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Mat {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    /// Matrix-vector product (column convention: the vector holds
    /// coordinates, the result is the image's coordinates).
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec_zeros(self.field, self.rows);
        for (r, slot) in out.iter_mut().enumerate() {
            *slot = vec_dot(self.field, self.row(r), v);
        }
        Ok(out)
    }

    pub fn matmul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, coeff: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(coeff)).collect(),
        }
    }

    /// `self^k` for square matrices; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "pow of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let mut acc = Mat::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "vstack {}x{} on {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form with zero rows stripped, plus pivot columns.
    /// The result is the unique canonical basis of the row space.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.rows_vec();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            let inv = m[r][c].inv().expect("pivot is nonzero");
            if !m[r][c].is_one() {
                for x in m[r].iter_mut() {
                    *x = x.mul(&inv);
                }
            }
            for rr in 0..m.len() {
                if rr != r && !m[rr][c].is_zero() {
                    let coeff = m[rr][c].neg();
                    let pivot_row = m[r].clone();
                    vec_add_scaled(&mut m[rr], &coeff, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (
            Mat::from_rows(self.field, self.cols, m).expect("rows keep their width"),
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Canonical basis (as rows) of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec_zeros(self.field, self.cols);
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.at(i, f).neg();
            }
            basis.push(v);
        }
        let raw = Mat::from_rows(self.field, self.cols, basis).expect("rows keep their width");
        raw.rref().0
    }

    /// One particular solution of `self * x = b`, if consistent
    /// (free variables set to zero).
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut aug_rows = Vec::with_capacity(self.rows);
        for (r, b_r) in b.iter().enumerate() {
            let mut row = self.row_vec(r);
            row.push(b_r.clone());
            aug_rows.push(row);
        }
        let aug = Mat::from_rows(self.field, self.cols + 1, aug_rows)?;
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // inconsistent: pivot in the augmented column
        }
        let mut x = vec_zeros(self.field, self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rr.at(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}
