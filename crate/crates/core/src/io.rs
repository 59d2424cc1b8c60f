//! JSON interchange for polytopes and matrix groups.
//!
//! Polytope shape (consumed by the CLI and test fixtures):
//!
//! ```json
//! {"name": "...", "ambient_dim": 3, "vertices": [[x, y, z], ...],
//!  "edges": [[i, j], ...]}
//! ```
//!
//! Group shape (format_version 1, matrices row-major):
//!
//! ```json
//! {"format_version": 1, "dimension": 3, "elements": [[m00, m01, ...], ...]}
//! ```
//!
//! Loading always re-validates: polytope invariants via [`Polytope::new`],
//! group invariants via [`MatrixGroup::verify`].

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{Matrix, Tol, Vector};
use crate::polytope::Polytope;
use crate::scalar::Real;
use crate::symmetry::MatrixGroup;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeJson {
    name: String,
    ambient_dim: usize,
    vertices: Vec<Vec<f64>>,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    format_version: u32,
    dimension: usize,
    elements: Vec<Vec<f64>>,
}

const GROUP_FORMAT_VERSION: u32 = 1;

pub fn polytope_to_json<S: Real>(p: &Polytope<S>) -> String {
    let doc = PolytopeJson {
        name: p.name().to_string(),
        ambient_dim: p.ambient_dim(),
        vertices: p
            .vertices()
            .iter()
            .map(|v| v.as_slice().iter().map(|c| c.to_f64().unwrap()).collect())
            .collect(),
        edges: p.edges().iter().map(|&(i, j)| [i, j]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn polytope_from_json<S: Real>(json: &str, tol: Tol<S>) -> Result<Polytope<S>> {
    let doc: PolytopeJson = serde_json::from_str(json)?;
    let vertices = doc
        .vertices
        .into_iter()
        .map(|v| Vector::new(v.into_iter().map(S::cst).collect()))
        .collect::<Result<Vec<_>>>()?;
    let edges = doc.edges.into_iter().map(|[i, j]| (i, j)).collect();
    Polytope::new(doc.name, doc.ambient_dim, vertices, edges, tol)
}

pub fn save_polytope<S: Real>(p: &Polytope<S>, path: &Path) -> Result<()> {
    std::fs::write(path, polytope_to_json(p))?;
    Ok(())
}

pub fn load_polytope<S: Real>(path: &Path, tol: Tol<S>) -> Result<Polytope<S>> {
    let json = std::fs::read_to_string(path)?;
    polytope_from_json(&json, tol)
}

pub fn group_to_json<S: Real>(g: &MatrixGroup<S>) -> String {
    let doc = GroupJson {
        format_version: GROUP_FORMAT_VERSION,
        dimension: g.dim(),
        elements: g
            .elements()
            .iter()
            .map(|m| m.as_slice().iter().map(|e| e.to_f64().unwrap()).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn group_from_json<S: Real>(json: &str, tol: Tol<S>) -> Result<MatrixGroup<S>> {
    let doc: GroupJson = serde_json::from_str(json)?;
    if doc.format_version != GROUP_FORMAT_VERSION {
        return Err(Error::Precondition(format!(
            "unsupported group format_version {} (expected {GROUP_FORMAT_VERSION})",
            doc.format_version
        )));
    }
    let dim = doc.dimension;
    let elements = doc
        .elements
        .into_iter()
        .map(|flat| {
            if flat.len() != dim * dim {
                return Err(Error::DimensionMismatch { expected: dim * dim, got: flat.len() });
            }
            Matrix::from_rows(
                flat.chunks(dim)
                    .map(|row| row.iter().map(|&e| S::cst(e)).collect())
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let group = MatrixGroup::from_elements_unchecked(elements);
    group.verify(tol)?;
    Ok(group)
}

pub fn save_group<S: Real>(g: &MatrixGroup<S>, path: &Path) -> Result<()> {
    std::fs::write(path, group_to_json(g))?;
    Ok(())
}

pub fn load_group<S: Real>(path: &Path, tol: Tol<S>) -> Result<MatrixGroup<S>> {
    let json = std::fs::read_to_string(path)?;
    group_from_json(&json, tol)
}
