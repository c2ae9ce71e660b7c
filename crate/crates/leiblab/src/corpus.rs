//! Exhaustive and seeded-random generation of small Leibniz algebras over
//! prime fields, and a brute-force enumeration oracle for the space of
//! Lie-derivations.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::lattice::Subspace;
use crate::maps::MapSpace;
use crate::mat::Vector;
use crate::par::{filter_map_indices, map_reduce_chunks, Exec};
use crate::scalar::{FieldSpec, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Enumeration budget for exhaustive tensor generation and for the
/// enumeration oracle.
const ENUM_LIMIT: u64 = 10_000_000;

/// Hard cap on rejection-sampling candidates before giving up.
const CANDIDATE_CAP: u64 = 4_000_000;

/// Density ladder for random tensors: candidate k keeps each entry with
/// probability 1/DENOMS[k % 4] (then draws it uniformly). A fully uniform
/// tensor almost never satisfies the Leibniz identity at dimension ≥ 3, so
/// the ladder mixes dense and sparse candidates to keep the acceptance rate
/// usable while still exercising dense instances.
const DENOMS: [u64; 4] = [1, 3, 7, 14];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

/// A generation request. `count` applies to random mode only; exhaustive
/// mode yields every valid tensor.
#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub dim: usize,
    pub p: u64,
    pub mode: CorpusMode,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusStats {
    /// Candidates examined (equals the full enumeration size in exhaustive
    /// mode).
    pub tried: u64,
    pub accepted: usize,
}

/// Fast Leibniz-identity check on a flattened structure tensor with entries
/// in [0, p), index ((i·n)+j)·n+k. This is the production validator; the
/// test suite counts against an independently written implementation.
pub fn valid_mod_p(dim: usize, p: u64, c: &[u64]) -> bool {
    debug_assert_eq!(c.len(), dim * dim * dim);
    let n = dim;
    let at = |i: usize, j: usize, k: usize| c[(i * n + j) * n + k];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
                    let mut acc: u64 = 0;
                    for t in 0..n {
                        acc = (acc + at(j, k, t) * at(i, t, m)) % p;
                        acc = (acc + p - (at(i, j, t) * at(t, k, m)) % p) % p;
                        acc = (acc + at(i, k, t) * at(t, j, m)) % p;
                    }
                    if acc != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn checked_pow(p: u64, e: usize, limit: u64) -> Option<u64> {
    let mut total: u64 = 1;
    for _ in 0..e {
        total = total.checked_mul(p)?;
        if total > limit {
            return None;
        }
    }
    Some(total)
}

fn tensor_from_u64(field: FieldSpec, p: u64, dim: usize, c: &[u64]) -> Algebra {
    let scalars: Vec<Scalar> = c.iter().map(|&v| Scalar::Fp { val: v % p, p }).collect();
    Algebra::from_tensor(field, dim, scalars)
        .expect("full validation must agree with the fast modular check")
}

fn decode_digits(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(idx % p);
        idx /= p;
    }
    out
}

fn random_tensor(seed: u64, k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    let denom = DENOMS[(k % DENOMS.len() as u64) as usize];
    (0..len)
        .map(|_| {
            if denom == 1 || rng.gen_range(0..denom) == 0 {
                rng.gen_range(0..p)
            } else {
                0
            }
        })
        .collect()
}

/// Generates the corpus described by `spec`. Exhaustive mode enumerates all
/// p^(n³) tensors (error if that exceeds the budget); random mode
/// rejection-samples candidates in increasing candidate order, so the stream
/// replays bit-exactly for a fixed spec regardless of the execution
/// strategy.
pub fn generate(spec: &CorpusSpec, exec: Exec) -> Result<(Vec<Algebra>, CorpusStats)> {
    let field = FieldSpec::gf(spec.p)?;
    let n = spec.dim;
    let len = n * n * n;
    match spec.mode {
        CorpusMode::Exhaustive => {
            let total = checked_pow(spec.p, len, ENUM_LIMIT).ok_or_else(|| {
                Error::SpecTooLarge(format!(
                    "exhaustive generation needs {}^{} tensors (budget {})",
                    spec.p, len, ENUM_LIMIT
                ))
            })?;
            let algebras = filter_map_indices(exec, total, |idx| {
                let c = decode_digits(idx, spec.p, len);
                if valid_mod_p(n, spec.p, &c) {
                    Some(tensor_from_u64(field, spec.p, n, &c))
                } else {
                    None
                }
            });
            let accepted = algebras.len();
            Ok((
                algebras,
                CorpusStats {
                    tried: total,
                    accepted,
                },
            ))
        }
        CorpusMode::Random => {
            let mut kept: Vec<(u64, Algebra)> = Vec::with_capacity(spec.count);
            let block = (spec.count.max(16) as u64) * 8;
            let mut start: u64 = 0;
            while kept.len() < spec.count && start < CANDIDATE_CAP {
                let found = filter_map_indices(exec, block, |off| {
                    let k = start + off;
                    let c = random_tensor(spec.seed, k, spec.p, len);
                    if valid_mod_p(n, spec.p, &c) {
                        Some((k, tensor_from_u64(field, spec.p, n, &c)))
                    } else {
                        None
                    }
                });
                kept.extend(found);
                start += block;
            }
            if kept.len() < spec.count {
                return Err(Error::SpecTooLarge(format!(
                    "rejection sampling accepted only {} of {} requested algebras \
                     within {} candidates",
                    kept.len(),
                    spec.count,
                    CANDIDATE_CAP
                )));
            }
            kept.truncate(spec.count);
            let tried = kept.last().map_or(0, |(k, _)| k + 1);
            let algebras = kept.into_iter().map(|(_, a)| a).collect();
            Ok((
                algebras,
                CorpusStats {
                    tried,
                    accepted: spec.count,
                },
            ))
        }
    }
}

/// The space of Lie-derivations computed by brute force: every matrix over
/// GF(p) is enumerated and tested against the defining identity, and the
/// survivors are spanned. Must equal the nullspace-based solver output.
pub fn oracle_der_lie(a: &Algebra, exec: Exec) -> Result<MapSpace> {
    let FieldSpec::Gf(p) = a.field() else {
        return Err(Error::FieldMismatch);
    };
    let n = a.dim();
    let n2 = n * n;
    let total = checked_pow(p, n2, ENUM_LIMIT).ok_or_else(|| {
        Error::SpecTooLarge(format!(
            "derivation oracle needs {}^{} matrices (budget {})",
            p, n2, ENUM_LIMIT
        ))
    })?;
    // Symmetrized structure constants as machine words.
    let mut s = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, val) in a.lie_basis(i, j).iter().enumerate() {
                let Scalar::Fp { val: v, .. } = val else {
                    unreachable!("finite-field algebra has Fp entries");
                };
                s[(i * n + j) * n + k] = *v;
            }
        }
    }
    let sat = |i: usize, j: usize, k: usize| s[(i * n + j) * n + k];
    let is_der = |m: &[u64]| -> bool {
        for i in 0..n {
            for j in i..n {
                for r in 0..n {
                    let mut acc: u64 = 0;
                    for t in 0..n {
                        // d([e_i,e_j]_lie) - [d(e_i),e_j]_lie - [e_i,d(e_j)]_lie
                        acc = (acc + m[r * n + t] * sat(i, j, t)) % p;
                        acc = (acc + p - (m[t * n + i] * sat(t, j, r)) % p) % p;
                        acc = (acc + p - (m[t * n + j] * sat(i, t, r)) % p) % p;
                    }
                    if acc != 0 {
                        return false;
                    }
                }
            }
        }
        true
    };
    let field = a.field();
    let space = map_reduce_chunks(
        exec,
        total,
        2048,
        |range| {
            let mut flats: Vec<Vector> = Vec::new();
            for idx in range {
                let m = decode_digits(idx, p, n2);
                if is_der(&m) {
                    flats.push(m.iter().map(|&v| Scalar::Fp { val: v, p }).collect());
                }
            }
            Subspace::span(field, n2, &flats).expect("flattened matrices have ambient length")
        },
        || Subspace::zero(field, n2),
        |s1, s2| s1.sum(&s2).expect("same ambient"),
    );
    Ok(MapSpace::from_subspace(field, n, n, space))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_dim1_gf3_is_only_abelian() {
        let spec = CorpusSpec {
            dim: 1,
            p: 3,
            mode: CorpusMode::Exhaustive,
            count: 0,
            seed: 0,
        };
        let (algebras, stats) = generate(&spec, Exec::Sequential).unwrap();
        assert_eq!(stats.tried, 3);
        assert_eq!(algebras.len(), 1);
        assert!(algebras[0].is_abelian());
    }

    #[test]
    fn exhaustive_too_large_is_rejected() {
        let spec = CorpusSpec {
            dim: 3,
            p: 3,
            mode: CorpusMode::Exhaustive,
            count: 0,
            seed: 0,
        };
        assert!(matches!(
            generate(&spec, Exec::Sequential),
            Err(Error::SpecTooLarge(_))
        ));
    }

    #[test]
    fn random_replays_identically() {
        let spec = CorpusSpec {
            dim: 2,
            p: 5,
            mode: CorpusMode::Random,
            count: 12,
            seed: 99,
        };
        let (a1, s1) = generate(&spec, Exec::Sequential).unwrap();
        let (a2, s2) = generate(&spec, Exec::Auto).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(a1, a2);
    }

    #[test]
    fn oracle_on_abelian_is_full() {
        let a = Algebra::abelian(FieldSpec::gf(3).unwrap(), 2);
        let oracle = oracle_der_lie(&a, Exec::Sequential).unwrap();
        assert_eq!(oracle.dim(), 4);
    }
}
