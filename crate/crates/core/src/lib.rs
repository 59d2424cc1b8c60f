//! Numerical verification toolkit for the projection sum-of-squares law on
//! edge-transitive polytopes.
//!
//! When an N-dimensional polytope whose proper symmetry group acts
//! transitively on its edges is orthogonally projected onto an
//! M-dimensional subspace, the sum of the squared edge lengths shrinks by
//! exactly M/N — for every subspace, not merely on average. This crate
//! builds the machinery to certify that numerically:
//!
//! - [`catalog`]: edge-transitive polytope constructions (simplex,
//!   hypercube, cross-polytope for n = 2..6, icosahedron, dodecahedron,
//!   24-cell, optional 600-cell) plus cuboid negative controls;
//! - [`symmetry`]: rotation groups as explicit matrix sets closed from
//!   generators, with edge orbits, stabilizers, and cosets;
//! - [`representation`]: unitarity, character-norm, orthogonality-relation,
//!   and edge sum-of-squares identity checks;
//! - [`projection`]: σ and σ' evaluation and the law check itself;
//! - [`numeric`]: the tolerant linear algebra and seeded sampling
//!   underneath;
//! - [`io`]: documented JSON interchange for polytopes and groups.
//!
//! Core types are generic over the scalar ([`Real`], i.e. `f32` or `f64`);
//! the `*64` aliases fix the precision the default tolerances target.

pub mod catalog;
pub mod error;
pub mod io;
pub mod numeric;
pub mod polytope;
pub mod projection;
pub mod representation;
pub mod scalar;
pub mod symmetry;

pub use catalog::{build_polytope, control_catalog, default_catalog, CatalogId};
pub use error::{Error, Result};
pub use numeric::{
    inner, is_special_orthogonal, orthonormalize, orthonormalize_filtering, random_subspace,
    random_unit_vector, Matrix, Subspace, Tol, Vector,
};
pub use polytope::{extract_edges, Polytope};
pub use projection::{
    check_hypothesis, group_average_check, group_average_check_with, project_vector,
    raw_law_report, sum_squares, sum_squares_projected, verify_law, verify_law_with, LawCheck,
    LawReport,
};
pub use representation::{
    character_norm, edge_aligned_basis, verify_schur, verify_sos0, verify_sos1, verify_sos2,
    verify_sos3, verify_unitary, OrthogonalityReport,
};
pub use scalar::Real;
pub use symmetry::{
    build_polytope_with_group, catalog_generators, decompose_edges, edge_action,
    group_preserves_polytope, is_edge_transitive, is_symmetry, EdgeOrbitDecomposition,
    MatrixGroup, DEFAULT_MAX_ORDER,
};

/// Concrete double-precision aliases.
pub type Vector64 = Vector<f64>;
pub type Matrix64 = Matrix<f64>;
pub type Tol64 = Tol<f64>;
pub type Polytope64 = Polytope<f64>;
pub type MatrixGroup64 = MatrixGroup<f64>;
pub type Subspace64 = Subspace<f64>;
pub type LawReport64 = LawReport<f64>;
