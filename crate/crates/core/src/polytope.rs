//! Vertex/edge polytope representation.
//!
//! Vertices are centered at the origin and edges are stored as unordered
//! index pairs with `i < j`; edge vectors (endpoint differences) are derived
//! on demand and defined only up to sign.

use crate::error::{Error, Result};
use crate::numeric::{orthonormalize_filtering, Tol, Vector};
use crate::scalar::Real;

/// A polytope given by its vertex set and edge list.
#[derive(Debug, Clone)]
pub struct Polytope<S> {
    name: String,
    ambient_dim: usize,
    vertices: Vec<Vector<S>>,
    edges: Vec<(usize, usize)>,
    uniform_edge_length: bool,
}

impl<S: Real> Polytope<S> {
    /// Validate and build. Checks: matching dimensions, finite entries,
    /// centroid at the origin, distinct edge endpoints with `i < j`, no
    /// duplicate edges, and vertices spanning all of R^N.
    pub fn new(
        name: impl Into<String>,
        ambient_dim: usize,
        vertices: Vec<Vector<S>>,
        edges: Vec<(usize, usize)>,
        tol: Tol<S>,
    ) -> Result<Self> {
        let name = name.into();
        if vertices.len() < 2 {
            return Err(Error::InvalidPolytope("need at least 2 vertices".into()));
        }
        for v in &vertices {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, got: v.dim() });
            }
        }
        let inv = S::cst(1.0 / vertices.len() as f64);
        for k in 0..ambient_dim {
            let c: S = vertices.iter().map(|v| v[k]).sum::<S>() * inv;
            if c.abs() > tol.eq_tol {
                return Err(Error::InvalidPolytope(format!(
                    "centroid is off-origin in coordinate {k}: {c}"
                )));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for &(i, j) in &edges {
            if i >= j {
                return Err(Error::InvalidPolytope(format!(
                    "edge ({i},{j}) must have i < j"
                )));
            }
            if j >= vertices.len() {
                return Err(Error::InvalidPolytope(format!(
                    "edge ({i},{j}) references a missing vertex"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidPolytope(format!("duplicate edge ({i},{j})")));
            }
        }
        if orthonormalize_filtering(&vertices, ambient_dim, tol).is_err() {
            return Err(Error::InvalidPolytope(format!(
                "vertices do not span R^{ambient_dim}"
            )));
        }
        let uniform_edge_length = edge_length_spread(&vertices, &edges)
            .map(|(_, spread)| spread <= tol.eq_tol)
            .unwrap_or(true);
        Ok(Self { name, ambient_dim, vertices, edges, uniform_edge_length })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vector<S>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Whether all edges have the same length; the non-uniform cuboid
    /// controls are flagged `false`.
    pub fn has_uniform_edge_length(&self) -> bool {
        self.uniform_edge_length
    }

    /// Edge vector v_j − v_i for edge `l` (defined up to sign).
    pub fn edge_vector(&self, l: usize) -> Vector<S> {
        let (i, j) = self.edges[l];
        self.vertices[j].sub(&self.vertices[i])
    }

    pub fn edge_length(&self, l: usize) -> S {
        self.edge_vector(l).norm()
    }

    /// Number of edges incident to each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices.len()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Uniformly rescaled copy with edge length 1; errors when edge lengths
    /// are not uniform within `eq_tol`. Idempotent, keeps the centroid at
    /// the origin.
    pub fn normalize_unit_edges(&self, tol: Tol<S>) -> Result<Self> {
        let (min_len, spread) = edge_length_spread(&self.vertices, &self.edges)
            .ok_or_else(|| Error::InvalidPolytope("polytope has no edges".into()))?;
        if spread > tol.eq_tol {
            return Err(Error::NonUniformEdges {
                spread: spread.to_f64().unwrap_or(f64::NAN),
            });
        }
        let factor = S::one() / min_len;
        let vertices = self.vertices.iter().map(|v| v.scale(factor)).collect();
        Ok(Self {
            name: self.name.clone(),
            ambient_dim: self.ambient_dim,
            vertices,
            edges: self.edges.clone(),
            uniform_edge_length: true,
        })
    }
}

fn edge_length_spread<S: Real>(
    vertices: &[Vector<S>],
    edges: &[(usize, usize)],
) -> Option<(S, S)> {
    let mut min = S::infinity();
    let mut max = S::neg_infinity();
    for &(i, j) in edges {
        let len = vertices[j].sub(&vertices[i]).norm();
        min = min.min(len);
        max = max.max(len);
    }
    if edges.is_empty() {
        None
    } else {
        Some((min, max - min))
    }
}

/// All unordered vertex pairs at the minimal pairwise distance (within
/// `eq_tol`). This is the edge rule for every catalog polytope; it is not a
/// general edge detector (the non-uniform cuboid overrides it with
/// combinatorial adjacency).
pub fn extract_edges<S: Real>(vertices: &[Vector<S>], tol: Tol<S>) -> Result<Vec<(usize, usize)>> {
    if vertices.len() < 2 {
        return Err(Error::InvalidPolytope("need at least 2 vertices".into()));
    }
    let mut min = S::infinity();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let d = vertices[j].sub(&vertices[i]).norm();
            min = min.min(d);
        }
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let d = vertices[j].sub(&vertices[i]).norm();
            if (d - min).abs() <= tol.eq_tol {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}
