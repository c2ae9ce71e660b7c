//! Canonical subspaces of a coordinate space and the lattice of
//! bracket-defined subspaces of a Leibniz algebra: Lie-center,
//! Lie-centralizers, classical one-sided centers, normalizers, ideal
//! closures and the derived Lie-ideal.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::mat::{vec_display, vec_is_zero, vec_zeros, Mat, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// A linear subspace of K^ambient, stored as the unique reduced row echelon
/// basis. Equality of subspaces is therefore plain data equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
        let m = Mat::from_rows(field, ambient, vectors.to_vec())?;
        let (basis, pivots) = m.rref();
        Ok(Subspace {
            field,
            ambient,
            basis,
            pivots,
        })
    }

    /// Wraps an already-reduced basis (canonical form is re-established, so
    /// this is safe on any generating matrix).
    pub fn from_mat(m: &Mat) -> Subspace {
        let (basis, pivots) = m.rref();
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.rows_vec()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    /// Residual of `v` after eliminating all pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce_vector(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let coeff = out[p].neg();
                crate::mat::vec_add_scaled(&mut out, &coeff, self.basis.row(i));
            }
        }
        Ok(out)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        Ok(vec_is_zero(&self.reduce_vector(v)?))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for i in 0..other.dim() {
            if !self.contains_vector(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut rem = v.to_vec();
        let mut coords = vec_zeros(self.field, self.dim());
        for (i, &p) in self.pivots.iter().enumerate() {
            if !rem[p].is_zero() {
                coords[i] = rem[p].clone();
                let coeff = rem[p].neg();
                crate::mat::vec_add_scaled(&mut rem, &coeff, self.basis.row(i));
            }
        }
        if vec_is_zero(&rem) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_mat(&stacked))
    }

    /// Annihilator subspace `{u : u . v = 0 for all v in self}`.
    pub fn dual(&self) -> Subspace {
        Subspace::from_mat(&self.basis.nullspace())
    }

    /// Intersection via duals: (U ∩ V) = (U^perp + V^perp)^perp.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let stacked = self.dual().basis.vstack(&other.dual().basis)?;
        Ok(Subspace::from_mat(&stacked.nullspace()))
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// coordinate columns.
    pub fn apply(&self, m: &Mat) -> Result<Subspace> {
        let mut images = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            images.push(m.mul_vec(self.basis.row(i))?);
        }
        Subspace::span(self.field, m.rows(), &images)
    }
}

/// Solves the homogeneous system given by `rows` (each a linear functional
/// on K^ambient) into a canonical subspace.
pub fn solve_constraints(field: FieldSpec, ambient: usize, rows: &[Vector]) -> Subspace {
    if rows.is_empty() {
        return Subspace::full(field, ambient);
    }
    let m = Mat::from_rows(field, ambient, rows.to_vec()).expect("constraint rows match ambient");
    Subspace::from_mat(&m.nullspace())
}

/// The classical (non-Lie) one-sided annihilator centers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCenters {
    /// Z^l = {x : [x, g] = 0}. Returned as a plain subspace: it is not an
    /// ideal in general and is deliberately never ideal-closed.
    pub left: Subspace,
    /// Whether Z^l is closed under the bracket (verified, not assumed).
    pub left_is_subalgebra: bool,
    /// Z^r = {x : [g, x] = 0}; always a two-sided ideal.
    pub right: Subspace,
    /// Z = Z^l ∩ Z^r.
    pub center: Subspace,
}

/// Lie-center Z_Lie = {z : [x, z]_lie = 0 for all x}; a two-sided ideal.
pub fn lie_center(a: &Algebra) -> Subspace {
    let n = a.dim();
    let field = a.field();
    let mut rows = Vec::with_capacity(n * n);
    for m in 0..n {
        for k in 0..n {
            let mut row = vec_zeros(field, n);
            for (i, slot) in row.iter_mut().enumerate() {
                *slot = a.c(i, m, k).add(a.c(m, i, k));
            }
            rows.push(row);
        }
    }
    solve_constraints(field, n, &rows)
}

/// Lie-centralizer C^Lie(m, w) = {x : [x, u]_lie ∈ w for every u ∈ m}.
pub fn lie_centralizer(a: &Algebra, m: &Subspace, w: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    let field = a.field();
    if m.ambient_dim() != n || w.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: if m.ambient_dim() != n {
                m.ambient_dim()
            } else {
                w.ambient_dim()
            },
        });
    }
    if m.field() != field || w.field() != field {
        return Err(Error::FieldMismatch);
    }
    let duals = w.dual();
    let mut rows = Vec::new();
    for u_idx in 0..m.dim() {
        let u = m.basis().row(u_idx);
        // w_i = [e_i, u]_lie, so [x, u]_lie = sum_i x_i w_i
        let mut w_vecs = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = vec_zeros(field, n);
            for (j, uj) in u.iter().enumerate() {
                if !uj.is_zero() {
                    crate::mat::vec_add_scaled(&mut acc, uj, &a.lie_basis(i, j));
                }
            }
            w_vecs.push(acc);
        }
        for d_idx in 0..duals.dim() {
            let d = duals.basis().row(d_idx);
            let mut row = vec_zeros(field, n);
            for (i, slot) in row.iter_mut().enumerate() {
                *slot = crate::mat::vec_dot(field, d, &w_vecs[i]);
            }
            rows.push(row);
        }
    }
    Ok(solve_constraints(field, n, &rows))
}

pub fn classical_centers(a: &Algebra) -> ClassicalCenters {
    let n = a.dim();
    let field = a.field();
    let mut left_rows = Vec::with_capacity(n * n);
    let mut right_rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let mut lrow = vec_zeros(field, n);
            let mut rrow = vec_zeros(field, n);
            for i in 0..n {
                lrow[i] = a.c(i, j, k).clone();
                rrow[i] = a.c(j, i, k).clone();
            }
            left_rows.push(lrow);
            right_rows.push(rrow);
        }
    }
    let left = solve_constraints(field, n, &left_rows);
    let right = solve_constraints(field, n, &right_rows);
    let center = left.intersect(&right).expect("same ambient space");
    let mut left_is_subalgebra = true;
    'outer: for i in 0..left.dim() {
        for j in 0..left.dim() {
            let br = a
                .bracket(left.basis().row(i), left.basis().row(j))
                .expect("basis vectors have ambient length");
            if !left.contains_vector(&br).expect("ambient matches") {
                left_is_subalgebra = false;
                break 'outer;
            }
        }
    }
    ClassicalCenters {
        left,
        left_is_subalgebra,
        right,
        center,
    }
}

/// Normalizer N(m) = {x : [x, u] ∈ m and [u, x] ∈ m for all u ∈ m},
/// with absolute (not symmetrized) brackets.
pub fn lie_normalizer(a: &Algebra, m: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    let field = a.field();
    if m.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.ambient_dim(),
        });
    }
    let duals = m.dual();
    let mut rows = Vec::new();
    for u_idx in 0..m.dim() {
        let u = m.basis().row(u_idx);
        for d_idx in 0..duals.dim() {
            let d = duals.basis().row(d_idx);
            let mut row_xu = vec_zeros(field, n); // [x, u] ∈ m
            let mut row_ux = vec_zeros(field, n); // [u, x] ∈ m
            for i in 0..n {
                let mut img_xu = vec_zeros(field, n);
                let mut img_ux = vec_zeros(field, n);
                for (j, uj) in u.iter().enumerate() {
                    if !uj.is_zero() {
                        crate::mat::vec_add_scaled(&mut img_xu, uj, &a.bracket_basis(i, j));
                        crate::mat::vec_add_scaled(&mut img_ux, uj, &a.bracket_basis(j, i));
                    }
                }
                row_xu[i] = crate::mat::vec_dot(field, d, &img_xu);
                row_ux[i] = crate::mat::vec_dot(field, d, &img_ux);
            }
            rows.push(row_xu);
            rows.push(row_ux);
        }
    }
    Ok(solve_constraints(field, n, &rows))
}

/// Smallest two-sided ideal containing `s`.
pub fn ideal_closure(a: &Algebra, s: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    if s.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: s.ambient_dim(),
        });
    }
    let mut cur = s.clone();
    loop {
        let mut new_vecs = cur.basis_vectors();
        for b_idx in 0..cur.dim() {
            let b = cur.basis().row(b_idx);
            for i in 0..n {
                let mut right = vec_zeros(a.field(), n);
                let mut left = vec_zeros(a.field(), n);
                for (j, bj) in b.iter().enumerate() {
                    if !bj.is_zero() {
                        crate::mat::vec_add_scaled(&mut right, bj, &a.bracket_basis(j, i));
                        crate::mat::vec_add_scaled(&mut left, bj, &a.bracket_basis(i, j));
                    }
                }
                new_vecs.push(right);
                new_vecs.push(left);
            }
        }
        let next = Subspace::span(a.field(), n, &new_vecs)?;
        if next.dim() == cur.dim() {
            return Ok(next);
        }
        cur = next;
    }
}

/// Two-sided ideal generated by the symmetrized products of two ideals:
/// [m, w]_Lie = ideal closure of span{[u, v]_lie : u ∈ m, v ∈ w}.
pub fn lie_product_ideal(a: &Algebra, m: &Subspace, w: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    let field = a.field();
    let mut vecs = Vec::new();
    for i in 0..m.dim() {
        for j in 0..w.dim() {
            vecs.push(a.lie_bracket(m.basis().row(i), w.basis().row(j))?);
        }
    }
    let raw = Subspace::span(field, n, &vecs)?;
    ideal_closure(a, &raw)
}

/// Derived Lie-ideal γ2 = [g, g]_Lie: the ideal closure of the span of all
/// symmetrized basis products (pairs i ≤ j suffice by symmetry).
pub fn lie_commutator_ideal(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut vecs = Vec::new();
    for i in 0..n {
        for j in i..n {
            vecs.push(a.lie_basis(i, j));
        }
    }
    let raw = Subspace::span(a.field(), n, &vecs).expect("basis products have ambient length");
    ideal_closure(a, &raw).expect("ambient matches")
}

/// Checks whether `s` is a two-sided ideal; returns a human-readable
/// witness of failure if not.
pub fn ideal_witness(a: &Algebra, s: &Subspace) -> Result<Option<String>> {
    let n = a.dim();
    if s.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: s.ambient_dim(),
        });
    }
    for b_idx in 0..s.dim() {
        let b = s.basis().row(b_idx);
        for i in 0..n {
            let mut right = vec_zeros(a.field(), n);
            let mut left = vec_zeros(a.field(), n);
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    crate::mat::vec_add_scaled(&mut right, bj, &a.bracket_basis(j, i));
                    crate::mat::vec_add_scaled(&mut left, bj, &a.bracket_basis(i, j));
                }
            }
            if !s.contains_vector(&right)? {
                return Ok(Some(format!(
                    "[{}, {}] = {} escapes the subspace",
                    vec_display(b),
                    a.labels()[i],
                    vec_display(&right)
                )));
            }
            if !s.contains_vector(&left)? {
                return Ok(Some(format!(
                    "[{}, {}] = {} escapes the subspace",
                    a.labels()[i],
                    vec_display(b),
                    vec_display(&left)
                )));
            }
        }
    }
    Ok(None)
}

pub fn is_two_sided_ideal(a: &Algebra, s: &Subspace) -> Result<bool> {
    Ok(ideal_witness(a, s)?.is_none())
}
