//! Derivation, centroid, and central-ideal map spaces on the fixtures, with
//! dimensions frozen against independent computation.

use leiblab::maps::{center_of, hom_space, is_abelian};
use leiblab::{
    centroid_decomposition, centroid_lie, der_abs, der_lie, der_z, fixture, id_lie, id_star,
    k_intersection, lie_commutator_ideal, map_commutator, t_of_ideal, v_of_ideal, Algebra, Error,
    Subspace,
};

fn fx(name: &str) -> Algebra {
    fixture(name).unwrap()
}

const NAMES: [&str; 7] = ["LEF", "L2c", "L2a", "L2f", "R21", "R2", "L3s"];

#[test]
fn map_space_dimensions_match_frozen_values() {
    // (name, der_abs, der, der_z, centroid, id, id_star)
    let expected = [
        ("LEF", 2, 4, 4, 4, 0, 0),
        ("L2c", 4, 4, 2, 3, 2, 2),
        ("L2a", 4, 4, 2, 3, 2, 2),
        ("L2f", 3, 5, 4, 5, 2, 1),
        ("R21", 7, 10, 9, 10, 3, 1),
        ("R2", 6, 6, 2, 3, 4, 4),
        ("L3s", 5, 5, 4, 5, 2, 1),
    ];
    for (name, abs, der, dz, gamma, id, star) in expected {
        let a = fx(name);
        assert_eq!(der_abs(&a).dim(), abs, "{name} der_abs");
        assert_eq!(der_lie(&a).dim(), der, "{name} der");
        assert_eq!(der_z(&a).dim(), dz, "{name} der_z");
        assert_eq!(centroid_lie(&a).dim(), gamma, "{name} centroid");
        assert_eq!(id_lie(&a).dim(), id, "{name} id");
        assert_eq!(id_star(&a).dim(), star, "{name} id_star");
    }
}

#[test]
fn der_z_is_der_meet_centroid() {
    for name in NAMES {
        let a = fx(name);
        let meet = der_lie(&a).intersect(&centroid_lie(&a)).unwrap();
        assert_eq!(meet.space(), der_z(&a).space(), "{name}");
    }
}

#[test]
fn center_of_der_z_dimensions_and_abelian_flags() {
    let expected = [
        ("LEF", 1, false),
        ("L2c", 2, true),
        ("L2a", 2, true),
        ("L2f", 1, false),
        ("R21", 1, false),
        ("R2", 0, false),
        ("L3s", 1, false),
    ];
    for (name, z_dim, abelian) in expected {
        let a = fx(name);
        let dz = der_z(&a);
        assert_eq!(center_of(&dz).unwrap().dim(), z_dim, "{name} Z(der_z)");
        assert_eq!(is_abelian(&dz).unwrap(), abelian, "{name} abelian");
    }
}

#[test]
fn kernel_intersection_dimensions() {
    let expected = [
        ("LEF", 2),
        ("L2c", 1),
        ("L2a", 1),
        ("L2f", 2),
        ("R21", 1),
        ("R2", 2),
        ("L3s", 1),
    ];
    for (name, k) in expected {
        let a = fx(name);
        assert_eq!(k_intersection(&a).unwrap().dim(), k, "{name} K");
    }
    // The one fixture where K strictly exceeds the lie-derived ideal: its
    // ordinary derived span is bigger because the bracket is not symmetric.
    let a = fx("L2f");
    let k = k_intersection(&a).unwrap();
    let g2 = lie_commutator_ideal(&a);
    assert!(k.contains(&g2).unwrap());
    assert_eq!(k.dim(), 2);
    assert_eq!(g2.dim(), 1);
}

#[test]
fn v_and_t_of_the_derived_ideal_recover_der_z() {
    for name in NAMES {
        let a = fx(name);
        let g2 = lie_commutator_ideal(&a);
        let dz = der_z(&a);
        let v = v_of_ideal(&a, &g2).unwrap();
        let t = t_of_ideal(&a, &g2).unwrap();
        assert_eq!(v.space(), dz.space(), "{name} V");
        assert_eq!(t.dim(), dz.dim(), "{name} T");
        assert_eq!(t.source_dim(), a.dim() - g2.dim(), "{name} T source");
        assert_eq!(t.target_dim(), a.dim(), "{name} T target");
    }
}

#[test]
fn v_of_a_non_ideal_is_rejected() {
    let a = fx("R2");
    let s = Subspace::span(a.field(), 4, &[a.basis_vector(3)]).unwrap();
    match v_of_ideal(&a, &s) {
        Err(Error::NotAnIdeal { .. }) => {}
        other => panic!("expected NotAnIdeal, got {other:?}"),
    }
}

#[test]
fn centroid_decompositions_add_up() {
    // (a, b, gamma_a, gamma_b, cross_ab, cross_ba, total)
    let expected = [
        ("L2c", "L3s", 3, 5, 4, 2, 14),
        ("LEF", "L2c", 4, 3, 2, 4, 13),
        ("L2c", "L2c", 3, 3, 2, 2, 10),
        ("R2", "L2f", 3, 5, 4, 2, 14),
        ("R21", "L3s", 10, 5, 6, 6, 27),
    ];
    for (na, nb, ga, gb, ab, ba, total) in expected {
        let a = fx(na);
        let b = fx(nb);
        let d = centroid_decomposition(&a, &b).unwrap();
        assert!(d.verified, "{na}+{nb}");
        assert_eq!(d.gamma_a, ga, "{na}+{nb} gamma_a");
        assert_eq!(d.gamma_b, gb, "{na}+{nb} gamma_b");
        assert_eq!(d.cross_ab, ab, "{na}+{nb} cross_ab");
        assert_eq!(d.cross_ba, ba, "{na}+{nb} cross_ba");
        assert_eq!(d.total, total, "{na}+{nb} total");
        assert_eq!(
            centroid_lie(&a.direct_sum(&b).unwrap()).dim(),
            total,
            "{na}+{nb} direct"
        );
    }
}

#[test]
fn decomposition_requires_matching_fields() {
    let a = fx("L2c");
    let b = fx("L2c").reduce_mod(5).unwrap();
    assert!(matches!(
        centroid_decomposition(&a, &b),
        Err(Error::FieldMismatch)
    ));
}

#[test]
fn map_spaces_are_closed_under_commutator() {
    for name in NAMES {
        let a = fx(name);
        for (what, s) in [
            ("der", der_lie(&a)),
            ("der_z", der_z(&a)),
            ("id", id_lie(&a)),
            ("id_star", id_star(&a)),
        ] {
            assert_eq!(
                s.closed_under_commutator,
                Some(true),
                "{name} {what} closure"
            );
            // Spot-check the flag against an explicit commutator.
            let basis = s.basis_maps();
            if basis.len() >= 2 {
                let c = map_commutator(&basis[0], &basis[1]).unwrap();
                assert!(s.contains_map(&c).unwrap(), "{name} {what} commutator");
            }
        }
    }
}

#[test]
fn containment_chains_hold() {
    for name in NAMES {
        let a = fx(name);
        let der = der_lie(&a);
        assert!(der.space().contains(der_z(&a).space()).unwrap(), "{name}");
        assert!(der.space().contains(der_abs(&a).space()).unwrap(), "{name}");
        let id = id_lie(&a);
        assert!(der.space().contains(id.space()).unwrap(), "{name}");
        assert!(id.space().contains(id_star(&a).space()).unwrap(), "{name}");
    }
}

#[test]
fn abelian_algebra_has_full_map_spaces() {
    let a = Algebra::abelian(leiblab::FieldSpec::Rational, 3);
    assert_eq!(der_lie(&a).dim(), 9);
    assert_eq!(der_abs(&a).dim(), 9);
    assert_eq!(der_z(&a).dim(), 9);
    assert_eq!(centroid_lie(&a).dim(), 9);
    assert_eq!(lie_commutator_ideal(&a).dim(), 0);
    assert_eq!(hom_space(3, 3), 9);
    // With a zero derived ideal, K is the whole space.
    assert!(k_intersection(&a).unwrap().is_full());
}
