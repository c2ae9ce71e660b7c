//! Lower/upper Lie-central series, nilpotency class, stem and filiform
//! predicates, and minimal generator counts.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::lattice::{
    lie_center, lie_centralizer, lie_commutator_ideal, lie_product_ideal, Subspace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Descending,
    Ascending,
}

/// A stabilizing chain of subspaces. Terms are appended until the chain
/// repeats (the first repeated value is stored, making stabilization
/// visible) or until the absorbing end is reached (the zero space for
/// descending chains, the full space for ascending ones), in which case the
/// absorbing term appears exactly once. `stabilized_at` is the index of the
/// first occurrence of the limit value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesChain {
    pub terms: Vec<Subspace>,
    pub direction: Direction,
    pub stabilized_at: usize,
}

impl SeriesChain {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }

    pub fn limit(&self) -> &Subspace {
        &self.terms[self.stabilized_at]
    }

    /// The i-th term (0-based), reading past the stored tail as the limit.
    pub fn term_at(&self, i: usize) -> &Subspace {
        if i < self.terms.len() {
            &self.terms[i]
        } else {
            self.limit()
        }
    }
}

fn run_chain(
    a: &Algebra,
    first: Subspace,
    direction: Direction,
    step: impl Fn(&Subspace) -> Result<Subspace>,
) -> Result<SeriesChain> {
    let absorbing_dim = match direction {
        Direction::Descending => 0,
        Direction::Ascending => a.dim(),
    };
    let mut terms = vec![first];
    // A strictly monotone chain in an n-dim space stabilizes within n steps;
    // the cap only guards against construction bugs.
    while terms.len() < a.dim() + 2 {
        let cur = terms.last().expect("chain is nonempty");
        if cur.dim() == absorbing_dim {
            break;
        }
        let next = step(cur)?;
        let repeated = &next == cur;
        terms.push(next);
        if repeated {
            break;
        }
    }
    let last = terms.len() - 1;
    let stabilized_at = if terms.len() >= 2 && terms[last] == terms[last - 1] {
        last - 1
    } else {
        last
    };
    Ok(SeriesChain {
        terms,
        direction,
        stabilized_at,
    })
}

/// Lower Lie-central series of the ideal `start` (defaults to g):
/// γ_1 = start, γ_{i+1} = [γ_i, g]_Lie.
pub fn lower_lie_series(a: &Algebra, start: Option<&Subspace>) -> Result<SeriesChain> {
    let full = Subspace::full(a.field(), a.dim());
    let first = start.cloned().unwrap_or_else(|| full.clone());
    run_chain(a, first, Direction::Descending, |cur| {
        lie_product_ideal(a, cur, &full)
    })
}

/// Upper Lie-central series: Z_0 = 0, Z_{i+1} = C^Lie(g, Z_i)
/// (so Z_1 is the Lie-center).
pub fn upper_lie_series(a: &Algebra) -> Result<SeriesChain> {
    let full = Subspace::full(a.field(), a.dim());
    let first = Subspace::zero(a.field(), a.dim());
    run_chain(a, first, Direction::Ascending, |cur| {
        lie_centralizer(a, &full, cur)
    })
}

/// Lie-nilpotency class: the least c with γ_{c+1} = 0, or `None`.
pub fn lie_nilpotency_class(a: &Algebra) -> Result<Option<usize>> {
    let chain = lower_lie_series(a, None)?;
    if chain.limit().is_zero() {
        Ok(Some(chain.stabilized_at))
    } else {
        Ok(None)
    }
}

/// Lie-stem: Z_Lie(g) ⊆ γ2(g).
pub fn is_lie_stem(a: &Algebra) -> bool {
    let z = lie_center(a);
    let g2 = lie_commutator_ideal(a);
    g2.contains(&z).expect("same ambient space")
}

/// Lie-filiform: dim γ_i = n − i for all 2 ≤ i ≤ n.
pub fn is_lie_filiform(a: &Algebra) -> Result<bool> {
    let n = a.dim();
    let chain = lower_lie_series(a, None)?;
    for i in 2..=n {
        if chain.term_at(i - 1).dim() != n - i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lie-perfect ideal: [m, m]_Lie = m.
pub fn is_lie_perfect_ideal(a: &Algebra, m: &Subspace) -> Result<bool> {
    Ok(&lie_product_ideal(a, m, m)? == m)
}

/// How a minimal-generator count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMethod {
    /// No search needed (zero or abelian algebra: every basis is minimal).
    Exact,
    /// Exhaustive search over standard-basis subsets in ascending size.
    Brute,
    /// Dimension used as an upper bound (search skipped above dim 5).
    UpperBound,
}

impl GenMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            GenMethod::Exact => "exact",
            GenMethod::Brute => "brute",
            GenMethod::UpperBound => "upper_bound",
        }
    }
}

fn subalgebra_closure(a: &Algebra, seed: &[crate::mat::Vector]) -> Result<Subspace> {
    let mut cur = Subspace::span(a.field(), a.dim(), seed)?;
    loop {
        let mut vecs = cur.basis_vectors();
        let basis = cur.basis_vectors();
        for u in &basis {
            for v in &basis {
                vecs.push(a.bracket(u, v)?);
            }
        }
        let next = Subspace::span(a.field(), a.dim(), &vecs)?;
        if next.dim() == cur.dim() {
            return Ok(next);
        }
        cur = next;
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Minimal number of generators of `a` as an algebra (bracket-closure of the
/// span), searched over subsets of the standard basis in ascending size.
pub fn min_generators(a: &Algebra) -> Result<(usize, GenMethod)> {
    let n = a.dim();
    if n == 0 {
        return Ok((0, GenMethod::Exact));
    }
    if a.is_abelian() {
        // The bracket adds nothing, so generating = spanning.
        return Ok((n, GenMethod::Exact));
    }
    if n > 5 {
        return Ok((n, GenMethod::UpperBound));
    }
    for k in 1..=n {
        for combo in combinations(n, k) {
            let seed: Vec<crate::mat::Vector> =
                combo.iter().map(|&i| a.basis_vector(i)).collect();
            if subalgebra_closure(a, &seed)?.is_full() {
                return Ok((k, GenMethod::Brute));
            }
        }
    }
    Ok((n, GenMethod::Brute)) // the full basis always generates
}

/// Aggregated classification data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub nilpotent: bool,
    pub class_c: Option<usize>,
    pub stem: bool,
    pub filiform: bool,
    /// Minimal generators of the Lie-central quotient g / Z_Lie(g).
    pub p_generators: usize,
    pub method: GenMethod,
}

pub fn class_report(a: &Algebra) -> Result<ClassReport> {
    let class_c = lie_nilpotency_class(a)?;
    let z = lie_center(a);
    let (quot, _) = a.quotient(&z)?;
    let (p_generators, method) = min_generators(&quot)?;
    Ok(ClassReport {
        nilpotent: class_c.is_some(),
        class_c,
        stem: is_lie_stem(a),
        filiform: is_lie_filiform(a)?,
        p_generators,
        method,
    })
}
