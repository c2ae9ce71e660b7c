//! Exact linear algebra for finite-dimensional Leibniz algebras over the
//! rationals or GF(p), p an odd prime: centers, series, derivation and
//! centroid spaces, almost-inner derivations, isoclinism checks, corpus
//! generation, and a structural report/audit layer.
//!
//! All arithmetic is exact (arbitrary-precision rationals or modular); every
//! subspace is kept in canonical reduced row-echelon form so that equal
//! spaces compare equal bytewise.
//!
//! # Example
//!
//! ```
//! use leiblab::{
//!     all_pass_or_skip, der_z, fixture, lie_center, lie_commutator_ideal, run_audit, Exec,
//!     ReportOptions,
//! };
//!
//! let g = fixture("R21")?;
//! assert_eq!(lie_center(&g).dim(), 3);
//! assert_eq!(lie_commutator_ideal(&g).dim(), 1);
//! assert_eq!(der_z(&g).dim(), 9);
//!
//! let items = run_audit(&g, &ReportOptions::default(), Exec::Auto)?;
//! assert!(all_pass_or_skip(&items));
//! # Ok::<(), leiblab::Error>(())
//! ```

pub mod algebra;
pub mod audit;
pub mod catalog;
pub mod corpus;
pub mod error;
pub mod inner;
pub mod iso;
pub mod lattice;
pub mod maps;
pub mod mat;
pub mod par;
pub mod report;
pub mod scalar;
pub mod series;

pub use algebra::{build_algebra, Algebra, BracketSpec};
pub use audit::{all_pass_or_skip, AuditItem, Status};
pub use catalog::{
    fixture, parse_algebra, parse_witness, serialize_algebra, serialize_witness, FIXTURE_NAMES,
};
pub use corpus::{generate, oracle_der_lie, valid_mod_p, CorpusMode, CorpusSpec, CorpusStats};
pub use error::{Error, Result};
pub use inner::{
    der_c, der_cz, inner_family, left_mul, prop516_suite, right_mul, Certainty, InnerFamily,
};
pub use iso::{
    commutator_map, identity_witness, isoclinism_invariants, padding_witness, stem_dim_audit,
    verify_isoclinism, CommutatorTable, InvariantRecord, IsoclinismWitness,
};
pub use lattice::{
    classical_centers, ideal_closure, lie_center, lie_centralizer, lie_commutator_ideal,
    lie_normalizer, ClassicalCenters, Subspace,
};
pub use maps::{
    centroid_decomposition, centroid_lie, der_abs, der_lie, der_z, id_lie, id_star,
    k_intersection, map_commutator, t_of_ideal, v_of_ideal, Decomposition, MapSpace,
};
pub use mat::{Mat, Vector};
pub use par::Exec;
pub use report::{build_report, run_audit, Report, ReportOptions};
pub use scalar::{parse_field, FieldSpec, Scalar};
pub use series::{
    class_report, is_lie_filiform, is_lie_stem, lie_nilpotency_class, lower_lie_series,
    min_generators, upper_lie_series, ClassReport, GenMethod, SeriesChain,
};
