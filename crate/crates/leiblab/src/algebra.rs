//! Finite-dimensional Leibniz algebras presented by structure constants.
//!
//! A (right) Leibniz algebra satisfies [x,[y,z]] = [[x,y],z] − [[x,z],y].
//! The symmetrized product [x,y]_lie = [x,y] + [y,x] measures the failure of
//! antisymmetry; it vanishes identically exactly on Lie algebras.

use crate::error::{Error, Result};
use crate::lattice::{ideal_closure, ideal_witness, Subspace};
use crate::mat::{vec_display, vec_is_zero, vec_zeros, Mat, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// A Leibniz algebra over Q or GF(p), p an odd prime, given by the structure
/// tensor c with [e_i, e_j] = Σ_k c[i][j][k] e_k. Validated at construction:
/// the Leibniz identity holds on all basis triples and the field has
/// characteristic ≠ 2 (several constructions divide by 2 implicitly via the
/// polarization identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    /// Flattened tensor, index ((i * dim) + j) * dim + k.
    c: Vec<Scalar>,
    labels: Vec<String>,
}

/// One bracket of a presentation: `[e_i, e_j] = Σ coeff_k e_k`, 0-based.
pub type BracketSpec = (usize, usize, Vec<(usize, Scalar)>);

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("a{i}")).collect()
}

/// Builds and validates an algebra from sparse bracket data (0-based
/// indices; file parsing converts from the 1-based on-disk convention).
pub fn build_algebra(field: FieldSpec, dim: usize, brackets: &[BracketSpec]) -> Result<Algebra> {
    field.validate()?;
    let mut c = vec![field.zero(); dim * dim * dim];
    for (i, j, terms) in brackets {
        for (k, coeff) in terms {
            for idx in [i, j, k] {
                if *idx >= dim {
                    return Err(Error::IndexOutOfRange {
                        index: *idx,
                        dim,
                    });
                }
            }
            if coeff.field() != field {
                return Err(Error::FieldMismatch);
            }
            let slot = &mut c[(i * dim + j) * dim + k];
            *slot = slot.add(coeff);
        }
    }
    Algebra::from_tensor(field, dim, c)
}

impl Algebra {
    /// Builds from a flattened structure tensor, running full validation.
    pub fn from_tensor(field: FieldSpec, dim: usize, c: Vec<Scalar>) -> Result<Algebra> {
        field.validate()?;
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: c.len(),
            });
        }
        for s in &c {
            if s.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let a = Algebra {
            field,
            dim,
            c,
            labels: default_labels(dim),
        };
        a.validate_leibniz()?;
        Ok(a)
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Algebra {
        Algebra {
            field,
            dim,
            c: vec![field.zero(); dim * dim * dim],
            labels: default_labels(dim),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Structure constant c[i][j][k] (0-based).
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    /// `[e_i, e_j]_lie = [e_i, e_j] + [e_j, e_i]`.
    pub fn lie_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = self.bracket_basis(i, j);
        for (k, slot) in v.iter_mut().enumerate() {
            *slot = slot.add(self.c(j, i, k));
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec_zeros(self.field, self.dim);
        v[i] = self.field.one();
        v
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        for s in v {
            if s.field() != self.field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(())
    }

    /// Bilinear bracket `[x, y]`.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let mut out = vec_zeros(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi.mul(yj);
                crate::mat::vec_add_scaled(&mut out, &coeff, &self.bracket_basis(i, j));
            }
        }
        Ok(out)
    }

    /// Symmetrized bracket `[x, y]_lie = [x, y] + [y, x]`.
    pub fn lie_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let a = self.bracket(x, y)?;
        let b = self.bracket(y, x)?;
        Ok(crate::mat::vec_add(&a, &b))
    }

    fn validate_leibniz(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // lhs = [e_i, [e_j, e_k]]
                    let mut lhs = vec_zeros(self.field, n);
                    for m in 0..n {
                        let c_jkm = self.c(j, k, m);
                        if !c_jkm.is_zero() {
                            crate::mat::vec_add_scaled(&mut lhs, c_jkm, &self.bracket_basis(i, m));
                        }
                    }
                    // rhs = [[e_i, e_j], e_k] - [[e_i, e_k], e_j]
                    let mut rhs = vec_zeros(self.field, n);
                    for m in 0..n {
                        let c_ijm = self.c(i, j, m);
                        if !c_ijm.is_zero() {
                            crate::mat::vec_add_scaled(&mut rhs, c_ijm, &self.bracket_basis(m, k));
                        }
                        let c_ikm = self.c(i, k, m);
                        if !c_ikm.is_zero() {
                            let neg = c_ikm.neg();
                            crate::mat::vec_add_scaled(&mut rhs, &neg, &self.bracket_basis(m, j));
                        }
                    }
                    let diff: Vector = lhs
                        .iter()
                        .zip(&rhs)
                        .map(|(a, b)| a.sub(b))
                        .collect();
                    if !vec_is_zero(&diff) {
                        return Err(Error::LeibnizViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            lhs: vec_display(&lhs),
                            rhs: vec_display(&rhs),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(|s| s.is_zero())
    }

    /// True iff the algebra is a Lie algebra, i.e. all symmetrized products
    /// vanish ([x,x] = 0 follows by polarization in characteristic ≠ 2).
    pub fn is_lie(&self) -> bool {
        for i in 0..self.dim {
            for j in i..self.dim {
                if !vec_is_zero(&self.lie_basis(i, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// g^ann: the two-sided ideal generated by all squares [x, x]; equals
    /// the ideal closure of the span of the symmetrized basis products.
    pub fn ann_ideal(&self) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                vecs.push(self.lie_basis(i, j));
            }
        }
        let raw = Subspace::span(self.field, self.dim, &vecs).expect("ambient matches");
        ideal_closure(self, &raw).expect("ambient matches")
    }

    /// Quotient by a two-sided ideal. Returns the quotient algebra and the
    /// projection matrix q×n (column convention) sending coordinates of g to
    /// coordinates in the canonical quotient basis (the images of the
    /// standard basis vectors at the non-pivot columns of the ideal's
    /// echelon basis).
    pub fn quotient(&self, m: &Subspace) -> Result<(Algebra, Mat)> {
        if m.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: m.ambient_dim(),
            });
        }
        if m.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if let Some(witness) = ideal_witness(self, m)? {
            return Err(Error::NotAnIdeal { witness });
        }
        let free = m.free_cols();
        let q = free.len();
        let project = |v: &[Scalar]| -> Result<Vector> {
            let rem = m.reduce_vector(v)?;
            Ok(free.iter().map(|&fc| rem[fc].clone()).collect())
        };
        let mut proj = Mat::zeros(self.field, q, self.dim);
        for i in 0..self.dim {
            let img = project(&self.basis_vector(i))?;
            for (r, val) in img.into_iter().enumerate() {
                proj.set(r, i, val);
            }
        }
        let mut c = vec![self.field.zero(); q * q * q];
        for (s, &fs) in free.iter().enumerate() {
            for (t, &ft) in free.iter().enumerate() {
                let img = project(&self.bracket_basis(fs, ft))?;
                for (k, val) in img.into_iter().enumerate() {
                    c[(s * q + t) * q + k] = val;
                }
            }
        }
        let labels = free.iter().map(|&fc| self.labels[fc].clone()).collect();
        let alg = Algebra::from_tensor(self.field, q, c)?.with_labels(labels)?;
        Ok((alg, proj))
    }

    /// The Liezation g / g^ann: the universal Lie-algebra quotient.
    pub fn liezation(&self) -> (Algebra, Mat) {
        let ann = self.ann_ideal();
        self.quotient(&ann)
            .expect("the annihilator ideal is two-sided by construction")
    }

    /// External direct sum with componentwise bracket.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n1 = self.dim;
        let n2 = other.dim;
        let n = n1 + n2;
        let mut c = vec![self.field.zero(); n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    c[(i * n + j) * n + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    c[((n1 + i) * n + (n1 + j)) * n + (n1 + k)] = other.c(i, j, k).clone();
                }
            }
        }
        let mut labels: Vec<String> = self.labels.clone();
        for l in &other.labels {
            let mut cand = l.clone();
            while labels.contains(&cand) {
                cand.push('\'');
            }
            labels.push(cand);
        }
        Algebra::from_tensor(self.field, n, c)?.with_labels(labels)
    }

    /// Reduction of a rational algebra modulo p (fails if any denominator
    /// is divisible by p or if the reduced tensor violates the Leibniz
    /// identity, which cannot happen since the identity is polynomial).
    pub fn reduce_mod(&self, p: u64) -> Result<Algebra> {
        let field = FieldSpec::gf(p)?;
        let c: Result<Vec<Scalar>> = self.c.iter().map(|s| s.to_gf(p)).collect();
        Algebra::from_tensor(field, self.dim, c?)?.with_labels(self.labels.clone())
    }
}
