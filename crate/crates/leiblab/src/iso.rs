//! The commutator map on the canonical central quotient, verification of
//! Lie-isoclinisms, isoclinism invariants, and the dimension audits relating
//! stem algebras to their derivation and Hom spaces.

use crate::algebra::Algebra;
use crate::audit::AuditItem;
use crate::error::{Error, Result};
use crate::inner::{der_c, Certainty};
use crate::lattice::{classical_centers, lie_center, lie_commutator_ideal, Subspace};
use crate::maps::{center_of, der_z, hom_space, id_star, is_abelian, k_intersection};
use crate::mat::{vec_add, vec_add_scaled, vec_zeros, Mat, Vector};
use crate::par::Exec;
use crate::scalar::{FieldSpec, Scalar};
use crate::series::class_report;

/// The bilinear commutator map C(x̄, ȳ) = [x, y]_lie induced on the central
/// quotient g/Z_Lie(g), tabulated over the canonical quotient basis (the
/// standard basis vectors at the non-pivot columns of the Lie-center).
#[derive(Clone, Debug)]
pub struct CommutatorTable {
    field: FieldSpec,
    ambient: usize,
    pub quotient_dim: usize,
    /// Standard-basis indices representing the quotient basis.
    pub rep_cols: Vec<usize>,
    /// values[i][j] = [rep_i, rep_j]_lie as an ambient coordinate vector
    /// (always inside the derived Lie-ideal).
    pub values: Vec<Vec<Vector>>,
    /// Whether re-evaluation at representatives shifted by every Lie-center
    /// basis vector reproduced the table (well-definedness certificate).
    pub rep_independent: bool,
}

impl CommutatorTable {
    /// Dimension of the span of all table values.
    pub fn rank(&self) -> usize {
        let flat: Vec<Vector> = self
            .values
            .iter()
            .flat_map(|row| row.iter().cloned())
            .collect();
        Subspace::span(self.field, self.ambient, &flat)
            .expect("table values have ambient length")
            .dim()
    }

    /// Bilinear extension C(u, v) over quotient coordinates, as an ambient
    /// vector.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        if u.len() != self.quotient_dim || v.len() != self.quotient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.quotient_dim,
                got: if u.len() != self.quotient_dim {
                    u.len()
                } else {
                    v.len()
                },
            });
        }
        let mut out = vec_zeros(self.field, self.ambient);
        for (s, us) in u.iter().enumerate() {
            if us.is_zero() {
                continue;
            }
            for (t, vt) in v.iter().enumerate() {
                if vt.is_zero() {
                    continue;
                }
                let coeff = us.mul(vt);
                vec_add_scaled(&mut out, &coeff, &self.values[s][t]);
            }
        }
        Ok(out)
    }
}

pub fn commutator_map(a: &Algebra) -> CommutatorTable {
    let field = a.field();
    let z = lie_center(a);
    let rep_cols = z.free_cols();
    let q = rep_cols.len();
    let values: Vec<Vec<Vector>> = rep_cols
        .iter()
        .map(|&i| rep_cols.iter().map(|&j| a.lie_basis(i, j)).collect())
        .collect();
    // Well-definedness: shifting either representative by any Lie-center
    // basis vector must not change any value.
    let mut rep_independent = true;
    'check: for (ti, &i) in rep_cols.iter().enumerate() {
        for (tj, &j) in rep_cols.iter().enumerate() {
            let ei = a.basis_vector(i);
            let ej = a.basis_vector(j);
            for z_idx in 0..z.dim() {
                let zv = z.basis().row(z_idx);
                let shifted_left = a
                    .lie_bracket(&vec_add(&ei, zv), &ej)
                    .expect("ambient lengths match");
                let shifted_right = a
                    .lie_bracket(&ei, &vec_add(&ej, zv))
                    .expect("ambient lengths match");
                if shifted_left != values[ti][tj] || shifted_right != values[ti][tj] {
                    rep_independent = false;
                    break 'check;
                }
            }
        }
    }
    CommutatorTable {
        field,
        ambient: a.dim(),
        quotient_dim: q,
        rep_cols,
        values,
        rep_independent,
    }
}

/// A claimed Lie-isoclinism (η, ξ): η on central quotients (coordinates over
/// the canonical quotient bases), ξ on derived Lie-ideals (coordinates over
/// the echelon bases).
#[derive(Clone, Debug)]
pub struct IsoclinismWitness {
    pub eta: Mat,
    pub xi: Mat,
}

/// The identity witness of the self-isoclinism of `a`.
pub fn identity_witness(a: &Algebra) -> IsoclinismWitness {
    let q = commutator_map(a).quotient_dim;
    let g2 = lie_commutator_ideal(a);
    IsoclinismWitness {
        eta: Mat::identity(a.field(), q),
        xi: Mat::identity(a.field(), g2.dim()),
    }
}

/// `a ⊕ (k-dimensional abelian)` together with the canonical witness of its
/// isoclinism with `a`: padding enlarges the Lie-center by exactly the new
/// coordinates, so the canonical quotient basis and the derived Lie-ideal
/// are untouched and both witness matrices are identities.
pub fn padding_witness(a: &Algebra, k: usize) -> Result<(Algebra, IsoclinismWitness)> {
    let b = a.direct_sum(&Algebra::abelian(a.field(), k))?;
    Ok((b, identity_witness(a)))
}

/// True iff η and ξ are invertible and ξ∘C_a = C_b∘(η×η) on every pair of
/// canonical quotient basis vectors. Shape or field disagreements with the
/// computed quotient/derived dimensions are errors, not `false`.
pub fn verify_isoclinism(a: &Algebra, b: &Algebra, w: &IsoclinismWitness) -> Result<bool> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if w.eta.field() != a.field() || w.xi.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    let ta = commutator_map(a);
    let tb = commutator_map(b);
    let g2a = lie_commutator_ideal(a);
    let g2b = lie_commutator_ideal(b);
    if w.eta.rows() != tb.quotient_dim || w.eta.cols() != ta.quotient_dim {
        return Err(Error::ShapeMismatch(format!(
            "eta is {}x{}, expected {}x{}",
            w.eta.rows(),
            w.eta.cols(),
            tb.quotient_dim,
            ta.quotient_dim
        )));
    }
    if w.xi.rows() != g2b.dim() || w.xi.cols() != g2a.dim() {
        return Err(Error::ShapeMismatch(format!(
            "xi is {}x{}, expected {}x{}",
            w.xi.rows(),
            w.xi.cols(),
            g2b.dim(),
            g2a.dim()
        )));
    }
    if !w.eta.is_invertible() || !w.xi.is_invertible() {
        return Ok(false);
    }
    for i in 0..ta.quotient_dim {
        for j in 0..ta.quotient_dim {
            let ca_coords = g2a
                .coords(&ta.values[i][j])?
                .expect("commutator values lie in the derived Lie-ideal");
            let lhs = w.xi.mul_vec(&ca_coords)?;
            let rhs_ambient = tb.eval(&w.eta.col(i), &w.eta.col(j))?;
            let rhs = g2b
                .coords(&rhs_ambient)?
                .expect("commutator values lie in the derived Lie-ideal");
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Quantities invariant under Lie-isoclinism.
#[derive(Clone, Debug)]
pub struct InvariantRecord {
    pub gamma2_dim: usize,
    pub central_quotient_dim: usize,
    pub class_c: Option<usize>,
    pub commutator_rank: usize,
    pub id_star_dim: usize,
    pub der_c_dim: usize,
    pub der_c_certainty: Certainty,
}

impl InvariantRecord {
    /// Equality of the invariant quantities; the certainty metadata depends
    /// on the sampling run and is deliberately ignored.
    pub fn agrees_with(&self, other: &InvariantRecord) -> bool {
        self.gamma2_dim == other.gamma2_dim
            && self.central_quotient_dim == other.central_quotient_dim
            && self.class_c == other.class_c
            && self.commutator_rank == other.commutator_rank
            && self.id_star_dim == other.id_star_dim
            && self.der_c_dim == other.der_c_dim
    }
}

pub fn isoclinism_invariants(
    a: &Algebra,
    sample_budget: usize,
    seed: u64,
    exec: Exec,
) -> Result<InvariantRecord> {
    let table = commutator_map(a);
    let report = class_report(a)?;
    let (dc, certainty) = der_c(a, sample_budget, seed, exec);
    Ok(InvariantRecord {
        gamma2_dim: lie_commutator_ideal(a).dim(),
        central_quotient_dim: table.quotient_dim,
        class_c: report.class_c,
        commutator_rank: table.rank(),
        id_star_dim: id_star(a).dim(),
        der_c_dim: dc.dim(),
        der_c_certainty: certainty,
    })
}

/// Ordinary derived subspace [g, g] = span of all basis brackets.
fn ordinary_derived(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut vecs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            vecs.push(a.bracket_basis(i, j));
        }
    }
    Subspace::span(a.field(), n, &vecs).expect("basis brackets have ambient length")
}

/// Dimension-level audits tying stem/class-2/filiform structure to the
/// derivation spaces, plus the kernel-intersection log. Every item either
/// evaluates its claim or reports its failed hypothesis as a skip.
pub fn stem_dim_audit(a: &Algebra) -> Result<Vec<AuditItem>> {
    let n = a.dim();
    let g2 = lie_commutator_ideal(a);
    let z = lie_center(a);
    let cc = classical_centers(a);
    let dz = der_z(a);
    let ist = id_star(a);
    let report = class_report(a)?;
    let class2 = report.class_c == Some(2);
    let gg = ordinary_derived(a);
    let gg_eq_g2 = gg == g2;
    let zr_eq_z = cc.right == z;
    let mut items = Vec::new();

    // (i) stem algebras: der_z has full Hom dimension.
    if report.stem {
        let expect = hom_space(n - g2.dim(), z.dim());
        items.push(AuditItem::check(
            "stem_der_z_has_hom_dimension",
            dz.dim() == expect,
            format!("dim der_z={} expected {}", dz.dim(), expect),
        ));
    } else {
        items.push(AuditItem::skip(
            "stem_der_z_has_hom_dimension",
            "algebra is not Lie-stem",
        ));
    }

    // (ii) class 2: the center of der_z has full Hom dimension.
    if class2 {
        let center = center_of(&dz)?;
        let expect = hom_space(n - z.dim(), g2.dim());
        items.push(AuditItem::check(
            "class2_center_of_der_z_has_hom_dimension",
            center.dim() == expect,
            format!("dim Z(der_z)={} expected {}", center.dim(), expect),
        ));
    } else {
        items.push(AuditItem::skip(
            "class2_center_of_der_z_has_hom_dimension",
            "algebra is not class-2 Lie-nilpotent",
        ));
    }

    // (iii) class 2: der_z abelian iff γ2 = Z_Lie.
    if class2 {
        let ab = is_abelian(&dz)?;
        let eq = g2 == z;
        items.push(AuditItem::check(
            "class2_der_z_abelian_iff_gamma2_is_center",
            ab == eq,
            format!("der_z abelian={ab} gamma2==z_lie={eq}"),
        ));
    } else {
        items.push(AuditItem::skip(
            "class2_der_z_abelian_iff_gamma2_is_center",
            "algebra is not class-2 Lie-nilpotent",
        ));
    }

    // (iv) [g,g] = γ2 and Z_Lie ⊆ Z^r: id_star = der_z iff γ2 = Z_Lie.
    if gg_eq_g2 && cc.right.contains(&z)? {
        let eq_spaces = ist.space() == dz.space();
        let eq_cond = g2 == z;
        items.push(AuditItem::check(
            "id_star_equals_der_z_iff_gamma2_is_center",
            eq_spaces == eq_cond,
            format!("id_star==der_z is {eq_spaces}, gamma2==z_lie is {eq_cond}"),
        ));
    } else {
        items.push(AuditItem::skip(
            "id_star_equals_der_z_iff_gamma2_is_center",
            format!(
                "hypotheses fail ([g,g]==gamma2 is {gg_eq_g2}, z_lie inside z_right is {})",
                cc.right.contains(&z)?
            ),
        ));
    }

    // (v) dim id_star ≤ p · dim γ2 with p the generator count of g/Z_Lie.
    let bound = report.p_generators * g2.dim();
    items.push(AuditItem::check(
        "id_star_dim_bounded_by_generators",
        ist.dim() <= bound,
        format!(
            "dim id_star={} bound={} (p={} via {}, dim gamma2={})",
            ist.dim(),
            bound,
            report.p_generators,
            report.method.as_str(),
            g2.dim()
        ),
    ));

    // (vi) Z^r = Z_Lie and [g,g] = γ2: dim g/Z_Lie ≤ p · dim γ2.
    if zr_eq_z && gg_eq_g2 {
        items.push(AuditItem::check(
            "central_quotient_dim_bounded_by_generators",
            n - z.dim() <= bound,
            format!("dim g/z_lie={} bound={}", n - z.dim(), bound),
        ));
    } else {
        items.push(AuditItem::skip(
            "central_quotient_dim_bounded_by_generators",
            format!("hypotheses fail (z_right==z_lie is {zr_eq_z}, [g,g]==gamma2 is {gg_eq_g2})"),
        ));
    }

    // (vii) Lie-filiform algebras meeting (vi) with equality have dimension
    // exactly 3. The nondegeneracy hypothesis γ2 ≠ 0 is material: small
    // abelian algebras satisfy every other hypothesis vacuously.
    if report.filiform && zr_eq_z && gg_eq_g2 && !g2.is_zero() && n - z.dim() == bound {
        items.push(AuditItem::check(
            "filiform_extremal_dimension_is_three",
            n == 3,
            format!("dim={n}"),
        ));
    } else {
        items.push(AuditItem::skip(
            "filiform_extremal_dimension_is_three",
            format!(
                "hypotheses fail (filiform={}, z_right==z_lie is {zr_eq_z}, [g,g]==gamma2 is \
                 {gg_eq_g2}, gamma2 nonzero is {}, extremal is {})",
                report.filiform,
                !g2.is_zero(),
                !g2.is_zero() && n - z.dim() == bound
            ),
        ));
    }

    // Kernel-intersection log: on class-2 members with abelian γ2 the
    // subspace K is computed and compared against γ2. Discrepancies are
    // recorded in the detail but never fail the audit.
    if class2 {
        match k_intersection(a) {
            Ok(k) => {
                let detail = if k == g2 {
                    format!("K == gamma2 (dim {})", k.dim())
                } else {
                    format!(
                        "logged: K (dim {}) differs from gamma2 (dim {})",
                        k.dim(),
                        g2.dim()
                    )
                };
                items.push(AuditItem::pass("kernel_intersection_log", detail));
            }
            Err(Error::TargetNotAbelian) => {
                items.push(AuditItem::skip(
                    "kernel_intersection_log",
                    "derived Lie-ideal is not abelian",
                ));
            }
            Err(e) => return Err(e),
        }
    } else {
        items.push(AuditItem::skip(
            "kernel_intersection_log",
            "algebra is not class-2 Lie-nilpotent",
        ));
    }

    Ok(items)
}
