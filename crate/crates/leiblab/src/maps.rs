//! Spaces of linear maps cut out by bracket identities: Lie-derivations,
//! Lie-central derivations, the Lie-centroid, the ID spaces, the V/T spaces
//! attached to a centroid-invariant ideal, and the kernel-intersection
//! subspace K.
//!
//! Maps use the column convention d(e_j) = Σ_i M[i][j] e_i and are
//! canonicalized as points of the (target·source)-dimensional coordinate
//! space by row-major flattening followed by echelon reduction, so equal
//! spaces have equal representations.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::lattice::{
    ideal_witness, lie_center, lie_centralizer, lie_commutator_ideal, solve_constraints, Subspace,
};
use crate::mat::{vec_display, vec_zeros, Mat, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// Verify commutator closure only for spaces up to this dimension (all
/// spaces arising at the supported algebra sizes stay below it).
const CLOSURE_VERIFY_LIMIT: usize = 64;

/// A canonical subspace of Hom(K^source, K^target).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    field: FieldSpec,
    target_dim: usize,
    source_dim: usize,
    space: Subspace,
    /// `Some(b)` once closure under the commutator has been checked
    /// (only meaningful for square spaces); `None` when not verified.
    pub closed_under_commutator: Option<bool>,
}

impl MapSpace {
    pub(crate) fn from_subspace(
        field: FieldSpec,
        target_dim: usize,
        source_dim: usize,
        space: Subspace,
    ) -> MapSpace {
        debug_assert_eq!(space.ambient_dim(), target_dim * source_dim);
        MapSpace {
            field,
            target_dim,
            source_dim,
            space,
            closed_under_commutator: None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn is_square(&self) -> bool {
        self.target_dim == self.source_dim
    }

    /// The underlying canonical subspace of flattened maps.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Echelon basis as matrices.
    pub fn basis_maps(&self) -> Vec<Mat> {
        (0..self.space.dim())
            .map(|i| {
                Mat::from_flat(
                    self.field,
                    self.target_dim,
                    self.source_dim,
                    self.space.basis().row_vec(i),
                )
                .expect("flattened length matches")
            })
            .collect()
    }

    pub fn contains_map(&self, m: &Mat) -> Result<bool> {
        if m.rows() != self.target_dim || m.cols() != self.source_dim {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} map tested against a {}x{} map space",
                m.rows(),
                m.cols(),
                self.target_dim,
                self.source_dim
            )));
        }
        self.space.contains_vector(&m.flatten())
    }

    /// Checks commutator closure (square spaces only) and records the
    /// outcome in `closed_under_commutator`.
    pub fn verify_closed(&mut self) {
        if !self.is_square() || self.dim() > CLOSURE_VERIFY_LIMIT {
            self.closed_under_commutator = None;
            return;
        }
        let basis = self.basis_maps();
        for (i, x) in basis.iter().enumerate() {
            for y in basis.iter().skip(i + 1) {
                let comm = map_commutator(x, y).expect("square bases commute shapes");
                if !self
                    .contains_map(&comm)
                    .expect("shape already validated")
                {
                    self.closed_under_commutator = Some(false);
                    return;
                }
            }
        }
        self.closed_under_commutator = Some(true);
    }

    /// Intersection of two map spaces of identical shape.
    pub fn intersect(&self, other: &MapSpace) -> Result<MapSpace> {
        if self.target_dim != other.target_dim || self.source_dim != other.source_dim {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.target_dim, self.source_dim, other.target_dim, other.source_dim
            )));
        }
        Ok(MapSpace::from_subspace(
            self.field,
            self.target_dim,
            self.source_dim,
            self.space.intersect(&other.space)?,
        ))
    }
}

#[inline]
fn flat(source_dim: usize, r: usize, c: usize) -> usize {
    r * source_dim + c
}

/// Generic solver: each constraint row is a linear functional on the
/// flattened map entries; the result is the canonical solution subspace.
pub fn solve_map_space(
    field: FieldSpec,
    target_dim: usize,
    source_dim: usize,
    constraints: &[Vector],
) -> MapSpace {
    let space = solve_constraints(field, target_dim * source_dim, constraints);
    MapSpace::from_subspace(field, target_dim, source_dim, space)
}

/// Constraint rows for the Lie-derivation identity at the basis pair (i, j):
/// d([e_i,e_j]_lie) − [d(e_i),e_j]_lie − [e_i,d(e_j)]_lie = 0.
fn lie_der_rows(a: &Algebra, i: usize, j: usize, rows: &mut Vec<Vector>) {
    let n = a.dim();
    let field = a.field();
    let s_ij = a.lie_basis(i, j);
    for r in 0..n {
        let mut row = vec_zeros(field, n * n);
        for m in 0..n {
            row[flat(n, r, m)] = row[flat(n, r, m)].add(&s_ij[m]);
        }
        for k in 0..n {
            let skj_r = a.lie_basis(k, j)[r].clone();
            row[flat(n, k, i)] = row[flat(n, k, i)].sub(&skj_r);
            let sik_r = a.lie_basis(i, k)[r].clone();
            row[flat(n, k, j)] = row[flat(n, k, j)].sub(&sik_r);
        }
        rows.push(row);
    }
}

/// Constraint rows for the absolute derivation identity at (i, j):
/// d([e_i,e_j]) − [d(e_i),e_j] − [e_i,d(e_j)] = 0.
fn abs_der_rows(a: &Algebra, i: usize, j: usize, rows: &mut Vec<Vector>) {
    let n = a.dim();
    let field = a.field();
    for r in 0..n {
        let mut row = vec_zeros(field, n * n);
        for m in 0..n {
            row[flat(n, r, m)] = row[flat(n, r, m)].add(a.c(i, j, m));
        }
        for k in 0..n {
            row[flat(n, k, i)] = row[flat(n, k, i)].sub(a.c(k, j, r));
            row[flat(n, k, j)] = row[flat(n, k, j)].sub(a.c(i, k, r));
        }
        rows.push(row);
    }
}

/// Constraint rows for the centroid identity at the ordered pair (i, j):
/// d([e_i,e_j]_lie) − [d(e_i),e_j]_lie = 0. Running over ordered pairs also
/// captures the second defining equality [e_i, d(e_j)]_lie by the symmetry
/// of the lie-bracket.
fn centroid_rows(a: &Algebra, i: usize, j: usize, rows: &mut Vec<Vector>) {
    let n = a.dim();
    let field = a.field();
    let s_ij = a.lie_basis(i, j);
    for r in 0..n {
        let mut row = vec_zeros(field, n * n);
        for m in 0..n {
            row[flat(n, r, m)] = row[flat(n, r, m)].add(&s_ij[m]);
        }
        for k in 0..n {
            let skj_r = a.lie_basis(k, j)[r].clone();
            row[flat(n, k, i)] = row[flat(n, k, i)].sub(&skj_r);
        }
        rows.push(row);
    }
}

/// Rows forcing every column of the map into the subspace `w`.
pub(crate) fn image_in_rows(
    field: FieldSpec,
    target_dim: usize,
    source_dim: usize,
    w: &Subspace,
    rows: &mut Vec<Vector>,
) {
    let duals = w.dual();
    for d_idx in 0..duals.dim() {
        let d = duals.basis().row(d_idx);
        for m in 0..source_dim {
            let mut row = vec_zeros(field, target_dim * source_dim);
            for k in 0..target_dim {
                row[flat(source_dim, k, m)] = d[k].clone();
            }
            rows.push(row);
        }
    }
}

/// Rows forcing `M v = 0` for each given vector.
pub(crate) fn kill_rows(
    field: FieldSpec,
    target_dim: usize,
    source_dim: usize,
    kill: &[Vector],
    rows: &mut Vec<Vector>,
) {
    for v in kill {
        for r in 0..target_dim {
            let mut row = vec_zeros(field, target_dim * source_dim);
            for m in 0..source_dim {
                row[flat(source_dim, r, m)] = v[m].clone();
            }
            rows.push(row);
        }
    }
}

/// The subspace of n²-flattened maps whose image lies in `w`.
pub(crate) fn hom_into(field: FieldSpec, n: usize, w: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for u_idx in 0..w.dim() {
        let u = w.basis().row(u_idx);
        for j in 0..n {
            let mut m = vec_zeros(field, n * n);
            for k in 0..n {
                m[flat(n, k, j)] = u[k].clone();
            }
            vecs.push(m);
        }
    }
    Subspace::span(field, n * n, &vecs).expect("flat maps have ambient length")
}

fn lie_der_constraints(a: &Algebra) -> Vec<Vector> {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            lie_der_rows(a, i, j, &mut rows);
        }
    }
    rows
}

/// Der^Lie(g): all d with d([x,y]_lie) = [d(x),y]_lie + [x,d(y)]_lie.
pub fn der_lie(a: &Algebra) -> MapSpace {
    let n = a.dim();
    let mut ms = solve_map_space(a.field(), n, n, &lie_der_constraints(a));
    ms.verify_closed();
    ms
}

/// Der(g): absolute derivations (always contained in Der^Lie).
pub fn der_abs(a: &Algebra) -> MapSpace {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            abs_der_rows(a, i, j, &mut rows);
        }
    }
    let mut ms = solve_map_space(a.field(), n, n, &rows);
    ms.verify_closed();
    ms
}

/// Der_z^Lie(g): Lie-derivations with image inside the Lie-center. Every
/// element annihilates γ2 (a consequence checked in debug builds).
pub fn der_z(a: &Algebra) -> MapSpace {
    let n = a.dim();
    let z = lie_center(a);
    let mut rows = lie_der_constraints(a);
    image_in_rows(a.field(), n, n, &z, &mut rows);
    let mut ms = solve_map_space(a.field(), n, n, &rows);
    ms.verify_closed();
    #[cfg(debug_assertions)]
    {
        let g2 = lie_commutator_ideal(a);
        for m in ms.basis_maps() {
            for b_idx in 0..g2.dim() {
                let img = m.mul_vec(g2.basis().row(b_idx)).expect("square map");
                debug_assert!(
                    crate::mat::vec_is_zero(&img),
                    "Lie-central derivations must annihilate the derived Lie-ideal"
                );
            }
        }
    }
    ms
}

/// Γ^Lie(g): the Lie-centroid, d([x,y]_lie) = [d(x),y]_lie = [x,d(y)]_lie.
pub fn centroid_lie(a: &Algebra) -> MapSpace {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            centroid_rows(a, i, j, &mut rows);
        }
    }
    let mut ms = solve_map_space(a.field(), n, n, &rows);
    ms.verify_closed();
    ms
}

/// ID^Lie(g): Lie-derivations with image inside γ2.
pub fn id_lie(a: &Algebra) -> MapSpace {
    let n = a.dim();
    let g2 = lie_commutator_ideal(a);
    let mut rows = lie_der_constraints(a);
    image_in_rows(a.field(), n, n, &g2, &mut rows);
    let mut ms = solve_map_space(a.field(), n, n, &rows);
    ms.verify_closed();
    ms
}

/// ID_*^Lie(g): elements of ID^Lie vanishing on the Lie-center.
pub fn id_star(a: &Algebra) -> MapSpace {
    let n = a.dim();
    let g2 = lie_commutator_ideal(a);
    let z = lie_center(a);
    let mut rows = lie_der_constraints(a);
    image_in_rows(a.field(), n, n, &g2, &mut rows);
    kill_rows(a.field(), n, n, &z.basis_vectors(), &mut rows);
    let mut ms = solve_map_space(a.field(), n, n, &rows);
    ms.verify_closed();
    ms
}

/// dim Hom(V, W) for dim V = a, dim W = b.
pub fn hom_space(a: usize, b: usize) -> usize {
    a * b
}

fn check_centroid_invariant_ideal(a: &Algebra, m: &Subspace) -> Result<()> {
    if let Some(witness) = ideal_witness(a, m)? {
        return Err(Error::NotAnIdeal { witness });
    }
    let gamma = centroid_lie(a);
    for (phi_idx, phi) in gamma.basis_maps().iter().enumerate() {
        for b_idx in 0..m.dim() {
            let img = phi.mul_vec(m.basis().row(b_idx))?;
            if !m.contains_vector(&img)? {
                return Err(Error::NotInvariant {
                    witness: format!(
                        "centroid basis map #{phi_idx} sends {} to {}, outside the ideal",
                        vec_display(m.basis().row(b_idx)),
                        vec_display(&img)
                    ),
                });
            }
        }
    }
    Ok(())
}

/// V(m) = {φ ∈ Γ^Lie(g) : φ(m) = 0} for a centroid-invariant ideal m.
pub fn v_of_ideal(a: &Algebra, m: &Subspace) -> Result<MapSpace> {
    check_centroid_invariant_ideal(a, m)?;
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            centroid_rows(a, i, j, &mut rows);
        }
    }
    kill_rows(a.field(), n, n, &m.basis_vectors(), &mut rows);
    let mut ms = solve_map_space(a.field(), n, n, &rows);
    ms.verify_closed();
    Ok(ms)
}

/// T(m): maps f : g/m → C^Lie(m, 0) with f([x̄,ȳ]_lie) = [f(x̄), y]_lie for
/// all pairs (the value is representative-independent because f lands in the
/// centralizer of m). Realized as a rectangular map space g/m → g.
pub fn t_of_ideal(a: &Algebra, m: &Subspace) -> Result<MapSpace> {
    check_centroid_invariant_ideal(a, m)?;
    let n = a.dim();
    let field = a.field();
    let free = m.free_cols();
    let q = free.len();
    let project = |v: &[Scalar]| -> Result<Vector> {
        let rem = m.reduce_vector(v)?;
        Ok(free.iter().map(|&fc| rem[fc].clone()).collect())
    };
    let centralizer = lie_centralizer(a, m, &Subspace::zero(field, n))?;
    let mut rows = Vec::new();
    image_in_rows(field, n, q, &centralizer, &mut rows);
    for i in 0..n {
        let pi_ei = project(&a.basis_vector(i))?;
        for j in 0..n {
            let pi_sij = project(&a.lie_basis(i, j))?;
            for r in 0..n {
                let mut row = vec_zeros(field, n * q);
                for t in 0..q {
                    // f(π[e_i,e_j]_lie) component r
                    row[flat(q, r, t)] = row[flat(q, r, t)].add(&pi_sij[t]);
                }
                for k in 0..n {
                    let skj_r = a.lie_basis(k, j)[r].clone();
                    if skj_r.is_zero() {
                        continue;
                    }
                    for t in 0..q {
                        // [f(π e_i), e_j]_lie component r
                        let term = pi_ei[t].mul(&skj_r);
                        row[flat(q, k, t)] = row[flat(q, k, t)].sub(&term);
                    }
                }
                rows.push(row);
            }
        }
    }
    Ok(solve_map_space(field, n, q, &rows))
}

/// K(g) = ⋂ Ker(f) over all algebra homomorphisms f : g → γ2(g), available
/// when γ2 is abelian as a subalgebra: homomorphisms into an abelian target
/// are exactly the linear maps killing the ordinary derived ideal [g, g],
/// so K = [g, g] when γ2 ≠ 0, and K = g when γ2 = 0.
pub fn k_intersection(a: &Algebra) -> Result<Subspace> {
    let n = a.dim();
    let g2 = lie_commutator_ideal(a);
    if g2.is_zero() {
        return Ok(Subspace::full(a.field(), n));
    }
    for i in 0..g2.dim() {
        for j in 0..g2.dim() {
            let br = a.bracket(g2.basis().row(i), g2.basis().row(j))?;
            if !crate::mat::vec_is_zero(&br) {
                return Err(Error::TargetNotAbelian);
            }
        }
    }
    let mut vecs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            vecs.push(a.bracket_basis(i, j));
        }
    }
    Subspace::span(a.field(), n, &vecs)
}

/// [d1, d2] = d1∘d2 − d2∘d1.
pub fn map_commutator(d1: &Mat, d2: &Mat) -> Result<Mat> {
    if d1.rows() != d1.cols() || d2.rows() != d2.cols() || d1.rows() != d2.rows() {
        return Err(Error::ShapeMismatch(format!(
            "commutator of {}x{} and {}x{}",
            d1.rows(),
            d1.cols(),
            d2.rows(),
            d2.cols()
        )));
    }
    d1.matmul(d2)?.sub(&d2.matmul(d1)?)
}

/// All pairwise basis commutators vanish.
pub fn is_abelian(s: &MapSpace) -> Result<bool> {
    if !s.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "abelian test on a {}x{} map space",
            s.target_dim(),
            s.source_dim()
        )));
    }
    let basis = s.basis_maps();
    for (i, x) in basis.iter().enumerate() {
        for y in basis.iter().skip(i + 1) {
            if !map_commutator(x, y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Center {z ∈ S : [z, b] = 0 for every basis b of S}; requires S closed
/// under the commutator (verified here if not already recorded).
pub fn center_of(s: &MapSpace) -> Result<MapSpace> {
    if !s.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "center of a {}x{} map space",
            s.target_dim(),
            s.source_dim()
        )));
    }
    let closed = match s.closed_under_commutator {
        Some(c) => c,
        None => {
            let mut copy = s.clone();
            copy.verify_closed();
            copy.closed_under_commutator.unwrap_or(false)
        }
    };
    if !closed {
        return Err(Error::NotClosed(
            "center is only defined for commutator-closed map spaces".into(),
        ));
    }
    let basis = s.basis_maps();
    let d = basis.len();
    let n2 = s.target_dim() * s.source_dim();
    let field = s.field();
    // Unknowns: coefficients over the echelon basis of S.
    let mut rows = Vec::new();
    for b in &basis {
        let comms: Vec<Vector> = basis
            .iter()
            .map(|t| {
                map_commutator(t, b)
                    .expect("square shapes")
                    .flatten()
            })
            .collect();
        for e in 0..n2 {
            let mut row = vec_zeros(field, d);
            for (t, comm) in comms.iter().enumerate() {
                row[t] = comm[e].clone();
            }
            rows.push(row);
        }
    }
    let coeff_space = solve_constraints(field, d, &rows);
    let mut vecs = Vec::new();
    for c_idx in 0..coeff_space.dim() {
        let coeffs = coeff_space.basis().row(c_idx);
        let mut v = vec_zeros(field, n2);
        for (t, c) in coeffs.iter().enumerate() {
            crate::mat::vec_add_scaled(&mut v, c, &basis[t].flatten());
        }
        vecs.push(v);
    }
    let space = Subspace::span(field, n2, &vecs)?;
    let mut ms = MapSpace::from_subspace(field, s.target_dim(), s.source_dim(), space);
    // Central elements commute with the whole space, in particular with
    // each other, so the center is trivially closed.
    ms.closed_under_commutator = Some(true);
    Ok(ms)
}

/// Summand dimensions of the Lie-centroid of a direct sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub gamma_a: usize,
    pub gamma_b: usize,
    /// Maps g_a → Z_Lie(g_b) killing γ2(g_a).
    pub cross_ab: usize,
    /// Maps g_b → Z_Lie(g_a) killing γ2(g_b).
    pub cross_ba: usize,
    pub total: usize,
    pub verified: bool,
}

fn cross_block(a_src: &Algebra, a_tgt: &Algebra) -> usize {
    let field = a_src.field();
    let z_tgt = lie_center(a_tgt);
    let g2_src = lie_commutator_ideal(a_src);
    let mut rows = Vec::new();
    image_in_rows(field, a_tgt.dim(), a_src.dim(), &z_tgt, &mut rows);
    kill_rows(
        field,
        a_tgt.dim(),
        a_src.dim(),
        &g2_src.basis_vectors(),
        &mut rows,
    );
    solve_map_space(field, a_tgt.dim(), a_src.dim(), &rows).dim()
}

/// Computes Γ^Lie(a ⊕ b) directly and independently computes the four
/// summand blocks; `verified` iff the dimensions add up.
pub fn centroid_decomposition(a: &Algebra, b: &Algebra) -> Result<Decomposition> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let sum = a.direct_sum(b)?;
    let total = centroid_lie(&sum).dim();
    let gamma_a = centroid_lie(a).dim();
    let gamma_b = centroid_lie(b).dim();
    let cross_ab = cross_block(a, b);
    let cross_ba = cross_block(b, a);
    Ok(Decomposition {
        gamma_a,
        gamma_b,
        cross_ab,
        cross_ba,
        total,
        verified: gamma_a + gamma_b + cross_ab + cross_ba == total,
    })
}
