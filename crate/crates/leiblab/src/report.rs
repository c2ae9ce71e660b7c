//! Per-algebra structural reports: every computed invariant plus the audit
//! table, rendered as stable sorted-key JSON or human-readable text.

use crate::algebra::Algebra;
use crate::audit::AuditItem;
use crate::error::{Error, Result};
use crate::inner::{der_c, der_cz, prop516_suite, right_mul, Certainty};
use crate::iso::stem_dim_audit;
use crate::lattice::{classical_centers, lie_center, lie_commutator_ideal};
use crate::maps::{
    centroid_lie, der_abs, der_lie, der_z, id_lie, id_star, is_abelian, k_intersection,
    map_commutator, t_of_ideal, v_of_ideal, MapSpace,
};
use crate::mat::Mat;
use crate::par::Exec;
use crate::scalar::FieldSpec;
use crate::series::{class_report, is_lie_stem, lower_lie_series, upper_lie_series, SeriesChain};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Schema version stamped into JSON reports.
pub const REPORT_SCHEMA: u64 = 1;

/// Number of random (derivation, centroid) pairs added to the basis pairs
/// when testing the composition biconditionals, which are not linear in the
/// pair and so need more than basis instances.
const RANDOM_PAIR_BUDGET: usize = 8;

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub seed: u64,
    /// Monte-Carlo sample budget for the almost-inner spaces.
    pub samples: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: 0,
            samples: 64,
        }
    }
}

/// The full structural record for one algebra.
#[derive(Clone, Debug)]
pub struct Report {
    pub label: String,
    pub dim: usize,
    pub field: String,
    pub basis: Vec<String>,
    pub ann_dim: usize,
    pub z_lie_dim: usize,
    pub z_left_dim: usize,
    pub z_left_is_subalgebra: bool,
    pub z_right_dim: usize,
    pub z_dim: usize,
    pub lower_series_dims: Vec<usize>,
    pub upper_series_dims: Vec<usize>,
    pub nilpotent: bool,
    pub class: Option<usize>,
    pub stem: bool,
    pub filiform: bool,
    pub p_generators: usize,
    pub p_method: String,
    pub der_abs_dim: usize,
    pub der_lie_dim: usize,
    pub der_z_dim: usize,
    pub centroid_dim: usize,
    pub id_lie_dim: usize,
    pub id_star_dim: usize,
    pub der_c_dim: usize,
    pub der_cz_dim: usize,
    pub der_c_certainty: Certainty,
    /// Dimension of K = ∩ ker(hom into the lie-derived ideal); absent when
    /// that ideal is non-abelian and the space is undefined here.
    pub k_dim: Option<usize>,
    pub seed: u64,
    pub samples: usize,
    pub audit: Vec<AuditItem>,
}

fn certainty_value(c: &Certainty) -> Value {
    match c {
        Certainty::Exact => json!({ "mode": "exact" }),
        Certainty::MonteCarlo {
            samples,
            stabilized_after,
        } => json!({
            "mode": "monte_carlo",
            "samples": samples,
            "stabilized_after": stabilized_after,
        }),
    }
}

fn certainty_text(c: &Certainty) -> String {
    match c {
        Certainty::Exact => "exact".to_string(),
        Certainty::MonteCarlo {
            samples,
            stabilized_after,
        } => format!("monte_carlo (samples {samples}, stabilized after {stabilized_after})"),
    }
}

impl Report {
    pub fn to_json_value(&self) -> Value {
        let audit: Vec<Value> = self
            .audit
            .iter()
            .map(|item| {
                json!({
                    "name": item.name,
                    "status": item.status.as_str(),
                    "detail": item.detail,
                })
            })
            .collect();
        json!({
            "schema": REPORT_SCHEMA,
            "label": self.label,
            "dim": self.dim,
            "field": self.field,
            "basis": self.basis,
            "ann_dim": self.ann_dim,
            "z_lie_dim": self.z_lie_dim,
            "z_left_dim": self.z_left_dim,
            "z_left_is_subalgebra": self.z_left_is_subalgebra,
            "z_right_dim": self.z_right_dim,
            "z_dim": self.z_dim,
            "lower_series_dims": self.lower_series_dims,
            "upper_series_dims": self.upper_series_dims,
            "nilpotent": self.nilpotent,
            "class": self.class,
            "stem": self.stem,
            "filiform": self.filiform,
            "p_generators": self.p_generators,
            "p_method": self.p_method,
            "der_abs_dim": self.der_abs_dim,
            "der_lie_dim": self.der_lie_dim,
            "der_z_dim": self.der_z_dim,
            "centroid_dim": self.centroid_dim,
            "id_lie_dim": self.id_lie_dim,
            "id_star_dim": self.id_star_dim,
            "der_c_dim": self.der_c_dim,
            "der_cz_dim": self.der_cz_dim,
            "der_c_certainty": certainty_value(&self.der_c_certainty),
            "k_dim": self.k_dim,
            "seed": self.seed,
            "samples": self.samples,
            "audit": audit,
        })
    }

    /// Stable JSON: sorted keys, fixed audit order, deterministic for a
    /// fixed (algebra, seed, samples).
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value())
            .expect("report serializes to JSON");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!(
            "{}: dim {} over {}",
            self.label, self.dim, self.field
        ));
        line(format!("  basis                      {}", self.basis.join(", ")));
        line(format!("  annihilator ideal dim      {}", self.ann_dim));
        line(format!("  lie center dim             {}", self.z_lie_dim));
        line(format!(
            "  left center dim            {} (subalgebra: {})",
            self.z_left_dim, self.z_left_is_subalgebra
        ));
        line(format!("  right center dim           {}", self.z_right_dim));
        line(format!("  two-sided center dim       {}", self.z_dim));
        line(format!(
            "  lower lie series dims      {:?}",
            self.lower_series_dims
        ));
        line(format!(
            "  upper lie series dims      {:?}",
            self.upper_series_dims
        ));
        let class = match self.class {
            Some(c) => format!("true (class {c})"),
            None => "false".to_string(),
        };
        line(format!("  lie-nilpotent              {class}"));
        line(format!("  lie-stem                   {}", self.stem));
        line(format!("  lie-filiform               {}", self.filiform));
        line(format!(
            "  minimal generators p       {} ({})",
            self.p_generators, self.p_method
        ));
        line(format!("  dim derivations (abs)      {}", self.der_abs_dim));
        line(format!("  dim lie-derivations        {}", self.der_lie_dim));
        line(format!("  dim lie-central der.       {}", self.der_z_dim));
        line(format!("  dim lie-centroid           {}", self.centroid_dim));
        line(format!("  dim central der. ideal     {}", self.id_lie_dim));
        line(format!("  dim star ideal             {}", self.id_star_dim));
        line(format!(
            "  dim almost-inner der.      {} [{}]",
            self.der_c_dim,
            certainty_text(&self.der_c_certainty)
        ));
        line(format!("  dim central almost-inner   {}", self.der_cz_dim));
        match self.k_dim {
            Some(k) => line(format!("  dim kernel intersection K  {k}")),
            None => line("  dim kernel intersection K  n/a (derived ideal non-abelian)".to_string()),
        }
        line(format!(
            "  seed {} / sample budget {}",
            self.seed, self.samples
        ));
        line("audit:".to_string());
        for item in &self.audit {
            line(format!("  [{}] {} — {}", item.status, item.name, item.detail));
        }
        out
    }
}

/// Derives the nilpotency class independently from each series: the index of
/// the first zero term going down, and of the first full term going up.
fn class_from_lower(chain: &SeriesChain) -> Option<usize> {
    chain.terms.iter().position(|t| t.is_zero())
}

fn class_from_upper(chain: &SeriesChain) -> Option<usize> {
    chain.terms.iter().position(|t| t.is_full())
}

/// Basis pairs plus seeded random pairs of (lie-derivation, centroid) maps.
/// The composition conditions checked against these are biconditionals in
/// the individual maps, not linear conditions, so random combinations probe
/// strictly more than basis pairs do.
fn sampled_pairs(
    field: FieldSpec,
    n: usize,
    ders: &[Mat],
    cents: &[Mat],
    seed: u64,
) -> Vec<(Mat, Mat)> {
    let mut pairs = Vec::new();
    for d in ders {
        for phi in cents {
            pairs.push((d.clone(), phi.clone()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combo = |basis: &[Mat], rng: &mut ChaCha8Rng| {
        let mut m = Mat::zeros(field, n, n);
        for b in basis {
            let coeff = field.from_i64(rng.gen_range(-3..=3));
            m = m.add(&b.scale(&coeff)).expect("same-shape sum");
        }
        m
    };
    for _ in 0..RANDOM_PAIR_BUDGET {
        let d = combo(ders, &mut rng);
        let phi = combo(cents, &mut rng);
        pairs.push((d, phi));
    }
    pairs
}

fn contains_space(outer: &MapSpace, inner: &MapSpace) -> Result<bool> {
    outer.space().contains(inner.space())
}

fn closure_item(name: &str, s: &MapSpace) -> AuditItem {
    match s.closed_under_commutator {
        Some(true) => AuditItem::pass(name, "closed under the map commutator"),
        Some(false) => AuditItem::fail(name, "a commutator of basis maps left the space"),
        None => AuditItem::skip(name, "closure not verified (space too large)"),
    }
}

/// Computes the full report, including the audit table, for one algebra.
pub fn build_report(
    a: &Algebra,
    label: &str,
    opts: &ReportOptions,
    exec: Exec,
) -> Result<Report> {
    let n = a.dim();
    let field = a.field();

    let ann = a.ann_ideal();
    let z_lie = lie_center(a);
    let centers = classical_centers(a);
    let lower = lower_lie_series(a, None)?;
    let upper = upper_lie_series(a)?;
    let g2 = lie_commutator_ideal(a);
    let cls = class_report(a)?;

    let d_abs = der_abs(a);
    let d_lie = der_lie(a);
    let d_z = der_z(a);
    let gamma = centroid_lie(a);
    let i_lie = id_lie(a);
    let i_star = id_star(a);
    let (dc, certainty) = der_c(a, opts.samples, opts.seed, exec);
    let (dcz, _) = der_cz(a, opts.samples, opts.seed, exec);
    let k_dim = match k_intersection(a) {
        Ok(k) => Some(k.dim()),
        Err(Error::TargetNotAbelian) => None,
        Err(e) => return Err(e),
    };

    let mut audit: Vec<AuditItem> = Vec::new();

    // Der_z equals Der ∩ Γ as canonical subspaces.
    {
        let meet = d_lie.space().intersect(gamma.space())?;
        audit.push(AuditItem::check(
            "der_z_equals_der_meet_centroid",
            meet == *d_z.space(),
            format!(
                "dim der_z = {}, dim (der ∩ centroid) = {}",
                d_z.dim(),
                meet.dim()
            ),
        ));
    }

    // Every centroid map preserves the lie center.
    {
        let mut ok = true;
        for phi in gamma.basis_maps() {
            for v in z_lie.basis_vectors() {
                if !z_lie.contains_vector(&phi.mul_vec(&v)?)? {
                    ok = false;
                }
            }
        }
        audit.push(AuditItem::check(
            "centroid_preserves_lie_center",
            ok,
            format!(
                "{} centroid maps applied to a {}-dim center",
                gamma.dim(),
                z_lie.dim()
            ),
        ));
    }

    // Every R_{e_i} is a lie-derivation.
    {
        let mut ok = true;
        for i in 0..n {
            let r = right_mul(a, &a.basis_vector(i))?;
            if !d_lie.contains_map(&r)? {
                ok = false;
            }
        }
        audit.push(AuditItem::check(
            "right_multiplications_are_derivations",
            ok,
            format!("R_x checked on {n} basis vectors"),
        ));
    }

    // Commutators [d, φ] of lie-derivations with centroid maps land back in
    // the centroid.
    {
        let mut ok = true;
        let mut checked = 0usize;
        for d in d_lie.basis_maps() {
            for phi in gamma.basis_maps() {
                checked += 1;
                if !gamma.contains_map(&map_commutator(&d, &phi)?)? {
                    ok = false;
                }
            }
        }
        audit.push(AuditItem::check(
            "derivations_normalize_centroid",
            ok,
            format!("{checked} basis-pair commutators"),
        ));
    }

    // Composition biconditionals on sampled (d, φ) pairs:
    //   d∘φ ∈ Γ       ⟺  φ∘d ∈ Der_z
    //   d∘φ ∈ Der     ⟺  [d, φ] ∈ Der_z
    {
        let pairs = sampled_pairs(
            field,
            n,
            &d_lie.basis_maps(),
            &gamma.basis_maps(),
            opts.seed,
        );
        let mut ok_b = true;
        let mut ok_c = true;
        for (d, phi) in &pairs {
            let dphi = d.matmul(phi)?;
            let lhs_b = gamma.contains_map(&dphi)?;
            let rhs_b = d_z.contains_map(&phi.matmul(d)?)?;
            if lhs_b != rhs_b {
                ok_b = false;
            }
            let lhs_c = d_lie.contains_map(&dphi)?;
            let rhs_c = d_z.contains_map(&map_commutator(d, phi)?)?;
            if lhs_c != rhs_c {
                ok_c = false;
            }
        }
        let detail = format!("{} sampled pairs", pairs.len());
        audit.push(AuditItem::check(
            "compose_in_centroid_iff_swap_in_der_z",
            ok_b,
            detail.clone(),
        ));
        audit.push(AuditItem::check(
            "compose_is_derivation_iff_commutator_in_der_z",
            ok_c,
            detail,
        ));
    }

    // Lie-stem ⟺ Der_z abelian, for lie-nilpotent algebras with nonzero
    // lie-derived ideal.
    if cls.nilpotent && !g2.is_zero() {
        let stem = is_lie_stem(a);
        let ab = is_abelian(&d_z)?;
        audit.push(AuditItem::check(
            "stem_iff_der_z_abelian",
            stem == ab,
            format!("stem = {stem}, der_z abelian = {ab}"),
        ));
    } else {
        audit.push(AuditItem::skip(
            "stem_iff_der_z_abelian",
            "needs lie-nilpotency and a nonzero lie-derived ideal",
        ));
    }

    // Der_z = V(derived ideal) as subspaces and dim T(derived ideal) agrees;
    // this identity is stated over the rationals.
    if field == FieldSpec::Rational {
        let item = match (v_of_ideal(a, &g2), t_of_ideal(a, &g2)) {
            (Ok(v), Ok(t)) => AuditItem::check(
                "der_z_matches_v_and_t_of_derived",
                v.space() == d_z.space() && t.dim() == d_z.dim(),
                format!(
                    "dim der_z = {}, dim V = {}, dim T = {}",
                    d_z.dim(),
                    v.dim(),
                    t.dim()
                ),
            ),
            (Err(e), _) | (_, Err(e)) => {
                AuditItem::fail("der_z_matches_v_and_t_of_derived", e.to_string())
            }
        };
        audit.push(item);
    } else {
        audit.push(AuditItem::skip(
            "der_z_matches_v_and_t_of_derived",
            "stated over the rationals",
        ));
    }

    // Containment chain among the exactly-computed spaces.
    {
        let ok = contains_space(&d_lie, &d_z)?
            && contains_space(&i_lie, &i_star)?
            && contains_space(&d_lie, &i_lie)?
            && contains_space(&d_lie, &d_abs)?;
        audit.push(AuditItem::check(
            "containment_chain",
            ok,
            "der_z ⊆ der, id_star ⊆ id ⊆ der, der_abs ⊆ der",
        ));
    }

    // Almost-inner chain der_c ⊆ id_star ⊆ id.
    {
        let ok = contains_space(&i_star, &dc)? && contains_space(&i_lie, &i_star)?;
        audit.push(AuditItem::check(
            "almost_inner_chain",
            ok,
            format!(
                "der_c ⊆ id_star ⊆ id [der_c {}]",
                certainty_text(&certainty)
            ),
        ));
    }

    audit.push(closure_item("der_closed_under_commutator", &d_lie));
    audit.push(closure_item("der_z_closed_under_commutator", &d_z));
    audit.push(closure_item("id_closed_under_commutator", &i_lie));
    audit.push(closure_item("id_star_closed_under_commutator", &i_star));

    // The two series detect nilpotency, and the class, consistently.
    {
        let down = class_from_lower(&lower);
        let up = class_from_upper(&upper);
        let ok = down == up && down == cls.class_c && (down.is_some() == cls.nilpotent);
        audit.push(AuditItem::check(
            "series_limits_agree",
            ok,
            format!("class from lower = {down:?}, from upper = {up:?}"),
        ));
    }

    audit.extend(stem_dim_audit(a)?);
    audit.extend(prop516_suite(a, None, opts.samples, opts.seed, exec)?);

    Ok(Report {
        label: label.to_string(),
        dim: n,
        field: field.to_string(),
        basis: a.labels().to_vec(),
        ann_dim: ann.dim(),
        z_lie_dim: z_lie.dim(),
        z_left_dim: centers.left.dim(),
        z_left_is_subalgebra: centers.left_is_subalgebra,
        z_right_dim: centers.right.dim(),
        z_dim: centers.center.dim(),
        lower_series_dims: lower.dims(),
        upper_series_dims: upper.dims(),
        nilpotent: cls.nilpotent,
        class: cls.class_c,
        stem: cls.stem,
        filiform: cls.filiform,
        p_generators: cls.p_generators,
        p_method: cls.method.as_str().to_string(),
        der_abs_dim: d_abs.dim(),
        der_lie_dim: d_lie.dim(),
        der_z_dim: d_z.dim(),
        centroid_dim: gamma.dim(),
        id_lie_dim: i_lie.dim(),
        id_star_dim: i_star.dim(),
        der_c_dim: dc.dim(),
        der_cz_dim: dcz.dim(),
        der_c_certainty: certainty,
        k_dim,
        seed: opts.seed,
        samples: opts.samples,
        audit,
    })
}

/// Runs just the audit table for one algebra.
pub fn run_audit(a: &Algebra, opts: &ReportOptions, exec: Exec) -> Result<Vec<AuditItem>> {
    Ok(build_report(a, "audit", opts, exec)?.audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::all_pass_or_skip;
    use crate::catalog::fixture;

    #[test]
    fn report_on_l2c_matches_known_dimensions() {
        let a = fixture("L2c").unwrap();
        let r = build_report(&a, "L2c", &ReportOptions::default(), Exec::Sequential).unwrap();
        assert_eq!(r.z_lie_dim, 1);
        assert_eq!(r.der_z_dim, 2);
        assert_eq!(r.centroid_dim, 3);
        assert_eq!(r.class, Some(2));
        assert!(r.stem);
        assert!(all_pass_or_skip(&r.audit), "{:#?}", r.audit);
    }

    #[test]
    fn json_is_deterministic() {
        let a = fixture("R2").unwrap();
        let opts = ReportOptions {
            seed: 7,
            samples: 64,
        };
        let r1 = build_report(&a, "R2", &opts, Exec::Sequential).unwrap();
        let r2 = build_report(&a, "R2", &opts, Exec::Sequential).unwrap();
        assert_eq!(r1.to_json_string(), r2.to_json_string());
        assert!(r1.to_json_string().contains("\"schema\": 1"));
    }

    #[test]
    fn text_rendering_contains_audit_lines() {
        let a = fixture("LEF").unwrap();
        let r = build_report(&a, "LEF", &ReportOptions::default(), Exec::Sequential).unwrap();
        let text = r.render_text();
        assert!(text.contains("LEF: dim 2 over rational"));
        assert!(text.contains("[pass]"));
    }
}
