//! Orthogonal projection of edge sets onto subspaces and the sum-of-squares
//! law check σ' = σ·M/N.
//!
//! σ' is computed from edge vectors, never from projected endpoints, so
//! translations of the polytope are irrelevant and the sign ambiguity of
//! edge vectors disappears under squaring.

use crate::error::{Error, Result};
use crate::numeric::{dot, Subspace, Tol, Vector};
use crate::polytope::Polytope;
use crate::scalar::Real;
use crate::symmetry::{
    decompose_edges, group_preserves_polytope, is_edge_transitive, EdgeOrbitDecomposition,
    MatrixGroup,
};

/// Outcome of one law evaluation.
#[derive(Debug, Clone)]
pub struct LawReport<S> {
    pub polytope: String,
    pub ambient_dim: usize,
    pub subspace_dim: usize,
    pub sigma: S,
    pub sigma_prime: S,
    pub expected_ratio: S,
    /// |σ'/σ − M/N|
    pub deviation: S,
    pub pass: bool,
    /// Seed of the sampled subspace, when there is one.
    pub seed: Option<u64>,
}

/// A law evaluation either verified against the theorem's hypotheses or
/// flagged because the group is not edge-transitive on this polytope.
#[derive(Debug, Clone)]
pub enum LawCheck<S> {
    Verified(LawReport<S>),
    /// The hypothesis failed; the raw numbers are still reported (they are
    /// what the `--force` path prints) but never counted as a law failure.
    HypothesisViolated {
        orbit_count: usize,
        orbit_sizes: Vec<usize>,
        report: LawReport<S>,
    },
}

impl<S> LawCheck<S> {
    pub fn report(&self) -> &LawReport<S> {
        match self {
            Self::Verified(r) => r,
            Self::HypothesisViolated { report, .. } => report,
        }
    }
}

/// Coordinates of `x` in the subspace basis: b_i = ⟨x, u_i⟩.
pub fn project_vector<S: Real>(s: &Subspace<S>, x: &Vector<S>) -> Result<Vec<S>> {
    if x.dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: s.ambient_dim(), got: x.dim() });
    }
    Ok(s.basis().iter().map(|u| dot(x.as_slice(), u.as_slice())).collect())
}

/// σ: the sum of squared edge lengths (equals E for unit-edge polytopes).
pub fn sum_squares<S: Real>(p: &Polytope<S>) -> S {
    (0..p.edge_count())
        .map(|l| {
            let e = p.edge_vector(l);
            dot(e.as_slice(), e.as_slice())
        })
        .sum()
}

/// σ': the sum of squared lengths of the projected edges,
/// Σ_l Σ_i ⟨e_l, u_i⟩².
pub fn sum_squares_projected<S: Real>(p: &Polytope<S>, s: &Subspace<S>) -> Result<S> {
    if s.ambient_dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: s.ambient_dim(),
        });
    }
    let mut total = S::zero();
    for l in 0..p.edge_count() {
        let e = p.edge_vector(l);
        for u in s.basis() {
            let b = dot(e.as_slice(), u.as_slice());
            total = total + b * b;
        }
    }
    Ok(total)
}

/// The raw ratio check with no hypothesis validation; `pass` is against
/// `tol.verify_tol`.
pub fn raw_law_report<S: Real>(
    p: &Polytope<S>,
    s: &Subspace<S>,
    seed: Option<u64>,
    tol: Tol<S>,
) -> Result<LawReport<S>> {
    let sigma = sum_squares(p);
    let sigma_prime = sum_squares_projected(p, s)?;
    if sigma <= S::zero() {
        return Err(Error::InvalidPolytope("sigma must be positive".into()));
    }
    let expected_ratio = S::cst(s.dim() as f64) / S::cst(p.ambient_dim() as f64);
    let deviation = (sigma_prime / sigma - expected_ratio).abs();
    Ok(LawReport {
        polytope: p.name().to_string(),
        ambient_dim: p.ambient_dim(),
        subspace_dim: s.dim(),
        sigma,
        sigma_prime,
        expected_ratio,
        deviation,
        pass: deviation <= tol.verify_tol,
        seed,
    })
}

/// Validate the theorem's hypotheses for (p, g): every element a symmetry
/// of `p`, then the edge-orbit decomposition (base edge 0). The caller can
/// reuse the returned decomposition across many subspaces.
pub fn check_hypothesis<S: Real>(
    p: &Polytope<S>,
    g: &MatrixGroup<S>,
    tol: Tol<S>,
) -> Result<EdgeOrbitDecomposition> {
    group_preserves_polytope(p, g, tol)?;
    decompose_edges(p, g, 0, tol)
}

/// Full law check: hypothesis validation plus the ratio test.
/// Non-edge-transitive inputs come back as
/// [`LawCheck::HypothesisViolated`], never as a law failure.
pub fn verify_law<S: Real>(
    p: &Polytope<S>,
    s: &Subspace<S>,
    g: &MatrixGroup<S>,
    seed: Option<u64>,
    tol: Tol<S>,
) -> Result<LawCheck<S>> {
    let decomp = check_hypothesis(p, g, tol)?;
    verify_law_with(p, s, &decomp, seed, tol)
}

/// Law check against a precomputed edge-orbit decomposition.
pub fn verify_law_with<S: Real>(
    p: &Polytope<S>,
    s: &Subspace<S>,
    decomp: &EdgeOrbitDecomposition,
    seed: Option<u64>,
    tol: Tol<S>,
) -> Result<LawCheck<S>> {
    let report = raw_law_report(p, s, seed, tol)?;
    if !is_edge_transitive(decomp) {
        return Ok(LawCheck::HypothesisViolated {
            orbit_count: decomp.orbit_count(),
            orbit_sizes: decomp.orbit_sizes(),
            report: LawReport { pass: false, ..report },
        });
    }
    Ok(LawCheck::Verified(report))
}

/// Evaluate both sides of the group-averaging identity independently — the
/// sum Σ_R ‖P_S(R(e))‖² over all group elements, and the coset form
/// k·Σ_l ‖P_S(e_l)‖² — and return their max deviation from |G|·M/N.
pub fn group_average_check<S: Real>(
    p: &Polytope<S>,
    s: &Subspace<S>,
    g: &MatrixGroup<S>,
    base_edge: usize,
    tol: Tol<S>,
) -> Result<S> {
    let decomp = if base_edge == 0 {
        check_hypothesis(p, g, tol)?
    } else {
        group_preserves_polytope(p, g, tol)?;
        decompose_edges(p, g, base_edge, tol)?
    };
    group_average_check_with(p, s, g, &decomp, tol)
}

/// [`group_average_check`] against a precomputed decomposition.
pub fn group_average_check_with<S: Real>(
    p: &Polytope<S>,
    s: &Subspace<S>,
    g: &MatrixGroup<S>,
    decomp: &EdgeOrbitDecomposition,
    tol: Tol<S>,
) -> Result<S> {
    if s.ambient_dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: s.ambient_dim(),
        });
    }
    if !is_edge_transitive(decomp) {
        return Err(Error::HypothesisFailure(format!(
            "edge action has {} orbits (sizes {:?})",
            decomp.orbit_count(),
            decomp.orbit_sizes()
        )));
    }
    let base = decomp.base_edge();
    let edge = p.edge_vector(base);
    if (edge.norm() - S::one()).abs() > tol.eq_tol {
        return Err(Error::Precondition(format!(
            "edges must be unit length (edge {base} has length {})",
            edge.norm()
        )));
    }

    let projected_sq = |x: &Vector<S>| -> S {
        s.basis()
            .iter()
            .map(|u| {
                let b = dot(x.as_slice(), u.as_slice());
                b * b
            })
            .sum()
    };
    // route 1: direct sum over the group
    let group_sum: S = g.elements().iter().map(|m| projected_sq(&m.mul_vec(&edge))).sum();
    // route 2: coset decomposition, k times the sum over edges
    let k = S::cst(decomp.stabilizer_order() as f64);
    let edge_sum: S = (0..p.edge_count()).map(|l| projected_sq(&p.edge_vector(l))).sum();
    let coset_sum = k * edge_sum;

    let target = S::cst(g.order() as f64) * S::cst(s.dim() as f64)
        / S::cst(p.ambient_dim() as f64);
    Ok((group_sum - target).abs().max((coset_sum - target).abs()))
}
