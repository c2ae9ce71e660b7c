//! Commutator tables, isoclinism witnesses, and the dimension invariants
//! preserved by abelian padding.

use leiblab::{
    commutator_map, fixture, identity_witness, isoclinism_invariants, padding_witness,
    verify_isoclinism, Algebra, Error, Exec, FieldSpec, IsoclinismWitness, Mat, Scalar,
};

fn fx(name: &str) -> Algebra {
    fixture(name).unwrap()
}

const NAMES: [&str; 7] = ["LEF", "L2c", "L2a", "L2f", "R21", "R2", "L3s"];

#[test]
fn identity_witnesses_verify_on_all_fixtures() {
    for name in NAMES {
        let a = fx(name);
        let w = identity_witness(&a);
        assert!(verify_isoclinism(&a, &a, &w).unwrap(), "{name}");
    }
}

#[test]
fn abelian_padding_preserves_all_invariants() {
    for name in NAMES {
        let a = fx(name);
        let base = isoclinism_invariants(&a, 32, 5, Exec::Sequential).unwrap();
        for k in 1..=3 {
            let (padded, w) = padding_witness(&a, k).unwrap();
            assert_eq!(padded.dim(), a.dim() + k, "{name}+{k}");
            assert!(verify_isoclinism(&a, &padded, &w).unwrap(), "{name}+{k}");
            let inv = isoclinism_invariants(&padded, 32, 5, Exec::Sequential).unwrap();
            assert!(base.agrees_with(&inv), "{name}+{k}: {base:?} vs {inv:?}");
        }
    }
}

#[test]
fn commutator_table_of_l2c() {
    let a = fx("L2c");
    let t = commutator_map(&a);
    assert_eq!(t.quotient_dim, 2);
    assert_eq!(t.rank(), 1);
    assert!(t.rep_independent);
    // Bilinearity through quotient coordinates: [2u, v] = 2 [u, v].
    let u = vec![a.field().from_i64(1), a.field().from_i64(0)];
    let two_u = vec![a.field().from_i64(2), a.field().from_i64(0)];
    let v = vec![a.field().from_i64(0), a.field().from_i64(1)];
    let uv = t.eval(&u, &v).unwrap();
    let scaled: Vec<Scalar> = uv.iter().map(|s| s.mul(&a.field().from_i64(2))).collect();
    assert_eq!(t.eval(&two_u, &v).unwrap(), scaled);
}

#[test]
fn genuine_lie_algebras_have_zero_tables() {
    let a = fx("LEF");
    let t = commutator_map(&a);
    // The lie bracket of LEF vanishes identically, so the whole algebra is
    // its own lie center and the quotient is zero-dimensional.
    assert_eq!(t.quotient_dim, 0);
    assert_eq!(t.rank(), 0);
}

#[test]
fn invariants_agree_across_fields_ignoring_certainty() {
    // Over Q the almost-inner dimension is Monte-Carlo; over GF(7) it is
    // exact. Agreement must ignore that metadata.
    let a = fx("L2c");
    let b = fx("L2c").reduce_mod(7).unwrap();
    let ia = isoclinism_invariants(&a, 48, 1, Exec::Sequential).unwrap();
    let ib = isoclinism_invariants(&b, 0, 1, Exec::Sequential).unwrap();
    assert!(ia.agrees_with(&ib));
    assert_ne!(ia.der_c_certainty, ib.der_c_certainty);
}

#[test]
fn distinct_structures_disagree() {
    let l2c = isoclinism_invariants(&fx("L2c"), 32, 5, Exec::Sequential).unwrap();
    let l2f = isoclinism_invariants(&fx("L2f"), 32, 5, Exec::Sequential).unwrap();
    let r2 = isoclinism_invariants(&fx("R2"), 32, 5, Exec::Sequential).unwrap();
    assert!(!l2c.agrees_with(&l2f));
    assert!(!l2c.agrees_with(&r2));
}

#[test]
fn shape_mismatch_is_an_error_not_a_rejection() {
    let a = fx("L2c");
    let w = IsoclinismWitness {
        eta: Mat::identity(a.field(), 3), // quotient is 2-dim, not 3
        xi: Mat::identity(a.field(), 1),
    };
    match verify_isoclinism(&a, &a, &w) {
        Err(Error::ShapeMismatch(_)) => {}
        other => panic!("expected ShapeMismatch, got {other:?}"),
    }
}

#[test]
fn singular_witness_is_rejected_quietly() {
    let a = fx("L2c");
    let mut w = identity_witness(&a);
    w.eta = Mat::zeros(a.field(), 2, 2);
    assert!(!verify_isoclinism(&a, &a, &w).unwrap());
}

#[test]
fn invertible_but_non_multiplicative_witness_is_rejected() {
    let a = fx("L2c");
    let field = a.field();
    let one = field.one();
    let zero = field.zero();
    // η maps u1 ↦ u1, u2 ↦ u1 + u2; the squares [u2,u2] then disagree.
    let eta = Mat::from_rows(
        field,
        2,
        vec![vec![one.clone(), one.clone()], vec![zero, one.clone()]],
    )
    .unwrap();
    let w = IsoclinismWitness {
        eta,
        xi: Mat::identity(field, 1),
    };
    assert!(!verify_isoclinism(&a, &a, &w).unwrap());
}

#[test]
fn field_mismatch_is_an_error() {
    let a = fx("L2c");
    let b = fx("L2c").reduce_mod(7).unwrap();
    let w = identity_witness(&a);
    assert!(matches!(
        verify_isoclinism(&a, &b, &w),
        Err(Error::FieldMismatch)
    ));
    let mut wf = identity_witness(&a);
    wf.xi = Mat::identity(FieldSpec::gf(7).unwrap(), 1);
    assert!(matches!(
        verify_isoclinism(&a, &a, &wf),
        Err(Error::FieldMismatch)
    ));
}

#[test]
fn padded_pairs_verify_between_themselves() {
    // A ⊕ ab(1) and A ⊕ ab(2) are isoclinic with the same identity data.
    let a = fx("R21");
    let (p1, _) = padding_witness(&a, 1).unwrap();
    let (p2, _) = padding_witness(&a, 2).unwrap();
    let w = identity_witness(&a);
    assert!(verify_isoclinism(&p1, &p2, &w).unwrap());
}
