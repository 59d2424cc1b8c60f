//! The shipped polytope catalog: edge-transitive families (simplex,
//! hypercube, cross-polytope for n = 2..6), the exceptional 3- and
//! 4-dimensional solids, and the cuboid negative controls.
//!
//! Every catalog entry is centered at the origin and rescaled to unit edge
//! length; the cuboid controls keep their raw side lengths and are flagged
//! non-uniform when sides differ.

use crate::error::{Error, Result};
use crate::numeric::{Tol, Vector};
use crate::polytope::{extract_edges, Polytope};
use crate::scalar::Real;

/// Golden ratio (1 + √5)/2 in the working precision.
pub(crate) fn golden_ratio<S: Real>() -> S {
    (S::one() + S::cst(5.0).sqrt()) / S::cst(2.0)
}

/// Identifier for a catalog entry, parsed from names like `hypercube-3`,
/// `cross-polytope-4`, `simplex-2`, `24cell`, `icosahedron`, `dodecahedron`,
/// `600cell`, or `cuboid-1-1-2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatalogId {
    Simplex(usize),
    Hypercube(usize),
    CrossPolytope(usize),
    Icosahedron,
    Dodecahedron,
    Cell24,
    Cell600,
    /// Negative control: not edge-transitive when sides differ.
    Cuboid(f64, f64, f64),
}

impl CatalogId {
    pub fn parse(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownPolytope(name.to_string());
        if let Some(rest) = name.strip_prefix("hypercube-") {
            return Ok(Self::Hypercube(rest.parse().map_err(|_| unknown())?));
        }
        if let Some(rest) = name.strip_prefix("cross-polytope-") {
            return Ok(Self::CrossPolytope(rest.parse().map_err(|_| unknown())?));
        }
        if let Some(rest) = name.strip_prefix("simplex-") {
            return Ok(Self::Simplex(rest.parse().map_err(|_| unknown())?));
        }
        if let Some(rest) = name.strip_prefix("cuboid-") {
            let sides: Vec<f64> = rest
                .split('-')
                .map(|s| s.parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| unknown())?;
            if sides.len() != 3 {
                return Err(unknown());
            }
            return Ok(Self::Cuboid(sides[0], sides[1], sides[2]));
        }
        match name {
            "icosahedron" => Ok(Self::Icosahedron),
            "dodecahedron" => Ok(Self::Dodecahedron),
            "24cell" => Ok(Self::Cell24),
            "600cell" => Ok(Self::Cell600),
            _ => Err(unknown()),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            Self::Simplex(n) | Self::Hypercube(n) | Self::CrossPolytope(n) => *n,
            Self::Icosahedron | Self::Dodecahedron | Self::Cuboid(..) => 3,
            Self::Cell24 | Self::Cell600 => 4,
        }
    }

    /// Order of the proper symmetry group generated for this entry.
    pub fn expected_group_order(&self) -> usize {
        match self {
            Self::Simplex(n) => factorial(n + 1) / 2,
            Self::Hypercube(n) | Self::CrossPolytope(n) => (1 << (n - 1)) * factorial(*n),
            Self::Icosahedron | Self::Dodecahedron => 60,
            Self::Cell24 => 576,
            Self::Cell600 => 7200,
            Self::Cuboid(a, b, c) => {
                if a == b && b == c {
                    24
                } else if a == b || b == c || a == c {
                    8
                } else {
                    4
                }
            }
        }
    }

    pub fn is_negative_control(&self) -> bool {
        matches!(self, Self::Cuboid(..))
    }
}

impl std::fmt::Display for CatalogId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Simplex(n) => write!(f, "simplex-{n}"),
            Self::Hypercube(n) => write!(f, "hypercube-{n}"),
            Self::CrossPolytope(n) => write!(f, "cross-polytope-{n}"),
            Self::Icosahedron => write!(f, "icosahedron"),
            Self::Dodecahedron => write!(f, "dodecahedron"),
            Self::Cell24 => write!(f, "24cell"),
            Self::Cell600 => write!(f, "600cell"),
            Self::Cuboid(a, b, c) => write!(f, "cuboid-{a}-{b}-{c}"),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Entries exercised by default runs (the 600-cell joins only when the
/// `cell600` feature is enabled; cuboid controls are listed separately).
pub fn default_catalog() -> Vec<CatalogId> {
    let mut ids = Vec::new();
    for n in 2..=6 {
        ids.push(CatalogId::Simplex(n));
    }
    for n in 2..=6 {
        ids.push(CatalogId::Hypercube(n));
    }
    for n in 2..=6 {
        ids.push(CatalogId::CrossPolytope(n));
    }
    ids.push(CatalogId::Icosahedron);
    ids.push(CatalogId::Dodecahedron);
    ids.push(CatalogId::Cell24);
    #[cfg(feature = "cell600")]
    ids.push(CatalogId::Cell600);
    ids
}

/// Negative controls: cuboids that violate edge-transitivity.
pub fn control_catalog() -> Vec<CatalogId> {
    vec![CatalogId::Cuboid(1.0, 1.0, 2.0), CatalogId::Cuboid(1.0, 2.0, 3.0)]
}

/// Build any catalog entry by id.
pub fn build_polytope<S: Real>(id: CatalogId, tol: Tol<S>) -> Result<Polytope<S>> {
    match id {
        CatalogId::Simplex(n) => build_simplex(n, tol),
        CatalogId::Hypercube(n) => build_hypercube(n, tol),
        CatalogId::CrossPolytope(n) => build_cross_polytope(n, tol),
        CatalogId::Icosahedron => build_icosahedron(tol),
        CatalogId::Dodecahedron => build_dodecahedron(tol),
        CatalogId::Cell24 => build_24cell(tol),
        CatalogId::Cell600 => build_600cell(tol),
        CatalogId::Cuboid(a, b, c) => build_cuboid(S::cst(a), S::cst(b), S::cst(c), tol),
    }
}

fn check_range(name: &'static str, n: usize) -> Result<()> {
    if !(2..=6).contains(&n) {
        return Err(Error::DimensionOutOfRange { name, dim: n, min: 2, max: 6 });
    }
    Ok(())
}

fn finish<S: Real>(
    name: String,
    dim: usize,
    vertices: Vec<Vector<S>>,
    tol: Tol<S>,
) -> Result<Polytope<S>> {
    let edges = extract_edges(&vertices, tol)?;
    Polytope::new(name, dim, vertices, edges, tol)?.normalize_unit_edges(tol)
}

/// n-cube: 2^n vertices (±1, ..., ±1) rescaled to unit edge; n·2^(n−1) edges.
pub fn build_hypercube<S: Real>(n: usize, tol: Tol<S>) -> Result<Polytope<S>> {
    check_range("hypercube", n)?;
    let vertices = (0..1usize << n)
        .map(|mask| {
            Vector::new(
                (0..n)
                    .map(|k| if mask >> k & 1 == 0 { -S::one() } else { S::one() })
                    .collect(),
            )
            .expect("finite")
        })
        .collect();
    finish(format!("hypercube-{n}"), n, vertices, tol)
}

/// n-orthoplex: 2n vertices ±e_i rescaled to unit edge; 2n(n−1) edges (all
/// pairs except antipodes).
pub fn build_cross_polytope<S: Real>(n: usize, tol: Tol<S>) -> Result<Polytope<S>> {
    check_range("cross-polytope", n)?;
    let mut vertices = Vec::with_capacity(2 * n);
    for i in 0..n {
        for sign in [S::one(), -S::one()] {
            let mut v = vec![S::zero(); n];
            v[i] = sign;
            vertices.push(Vector::new(v).expect("finite"));
        }
    }
    finish(format!("cross-polytope-{n}"), n, vertices, tol)
}

/// Orthonormal basis of the sum-zero hyperplane of R^(n+1), as columns
/// h_1..h_n (Helmert vectors). Shared with the simplex symmetry generators.
pub(crate) fn simplex_hyperplane_basis<S: Real>(n: usize) -> Vec<Vec<S>> {
    (1..=n)
        .map(|k| {
            let norm = S::cst((k * (k + 1)) as f64).sqrt();
            (0..n + 1)
                .map(|i| {
                    if i < k {
                        S::one() / norm
                    } else if i == k {
                        -S::cst(k as f64) / norm
                    } else {
                        S::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Regular n-simplex: the n+1 standard basis points of R^(n+1) restricted to
/// the sum-zero hyperplane via an explicit orthonormal hyperplane basis,
/// recentered and rescaled to unit edge; all C(n+1, 2) pairs are edges.
pub fn build_simplex<S: Real>(n: usize, tol: Tol<S>) -> Result<Polytope<S>> {
    check_range("simplex", n)?;
    let basis = simplex_hyperplane_basis::<S>(n);
    // vertex i = hyperplane coordinates of e_i − centroid, which reduce to
    // (h_1[i], ..., h_n[i]) because every h_k is orthogonal to the all-ones
    // direction
    let vertices = (0..n + 1)
        .map(|i| Vector::new(basis.iter().map(|h| h[i]).collect()).expect("finite"))
        .collect();
    finish(format!("simplex-{n}"), n, vertices, tol)
}

/// 24-cell: the 24 permutations of (±1, ±1, 0, 0) rescaled to unit edge;
/// 96 minimal-distance edges.
pub fn build_24cell<S: Real>(tol: Tol<S>) -> Result<Polytope<S>> {
    let mut vertices = Vec::with_capacity(24);
    for i in 0..4 {
        for j in i + 1..4 {
            for si in [S::one(), -S::one()] {
                for sj in [S::one(), -S::one()] {
                    let mut v = vec![S::zero(); 4];
                    v[i] = si;
                    v[j] = sj;
                    vertices.push(Vector::new(v).expect("finite"));
                }
            }
        }
    }
    finish("24cell".into(), 4, vertices, tol)
}

/// Icosahedron: cyclic permutations of (0, ±1, ±φ) rescaled to unit edge;
/// 12 vertices, 30 edges.
pub fn build_icosahedron<S: Real>(tol: Tol<S>) -> Result<Polytope<S>> {
    let phi = golden_ratio::<S>();
    let mut vertices = Vec::with_capacity(12);
    for s1 in [S::one(), -S::one()] {
        for s2 in [phi, -phi] {
            for rot in 0..3 {
                let base = [S::zero(), s1, s2];
                let mut v = vec![S::zero(); 3];
                for k in 0..3 {
                    v[(k + rot) % 3] = base[k];
                }
                vertices.push(Vector::new(v).expect("finite"));
            }
        }
    }
    finish("icosahedron".into(), 3, vertices, tol)
}

/// Dodecahedron: (±1, ±1, ±1) plus cyclic permutations of (0, ±φ, ±1/φ),
/// rescaled to unit edge; 20 vertices, 30 edges. This cyclic order aligns
/// the solid with [`build_icosahedron`] so both share the same rotation
/// group (the reversed order would give the mirror image).
pub fn build_dodecahedron<S: Real>(tol: Tol<S>) -> Result<Polytope<S>> {
    let phi = golden_ratio::<S>();
    let inv_phi = S::one() / phi;
    let mut vertices = Vec::with_capacity(20);
    for sx in [S::one(), -S::one()] {
        for sy in [S::one(), -S::one()] {
            for sz in [S::one(), -S::one()] {
                vertices.push(Vector::new(vec![sx, sy, sz]).expect("finite"));
            }
        }
    }
    for s1 in [phi, -phi] {
        for s2 in [inv_phi, -inv_phi] {
            for rot in 0..3 {
                let base = [S::zero(), s1, s2];
                let mut v = vec![S::zero(); 3];
                for k in 0..3 {
                    v[(k + rot) % 3] = base[k];
                }
                vertices.push(Vector::new(v).expect("finite"));
            }
        }
    }
    finish("dodecahedron".into(), 3, vertices, tol)
}

/// All 12 even permutations of (0, 1, 2, 3).
#[cfg(feature = "cell600")]
pub(crate) fn even_permutations_4() -> Vec<[usize; 4]> {
    let mut perms = Vec::with_capacity(12);
    let mut items = [0usize, 1, 2, 3];
    heap_permutations(&mut items, 4, &mut perms);
    perms.retain(|p| permutation_is_even(p));
    perms
}

#[cfg(feature = "cell600")]
fn heap_permutations(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 1 {
        out.push(*items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

#[cfg(feature = "cell600")]
fn permutation_is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// 600-cell: the 120 unit icosians (8 axis units, 16 half-integer points,
/// 96 even permutations of (±φ, ±1, ±1/φ, 0)/2), rescaled to unit edge;
/// 720 edges. Requires the `cell600` feature.
pub fn build_600cell<S: Real>(tol: Tol<S>) -> Result<Polytope<S>> {
    #[cfg(not(feature = "cell600"))]
    {
        let _ = tol;
        Err(Error::FeatureDisabled("600cell"))
    }
    #[cfg(feature = "cell600")]
    {
        let phi = golden_ratio::<S>();
        let half = S::cst(0.5);
        let mut vertices: Vec<Vector<S>> = Vec::with_capacity(120);
        for i in 0..4 {
            for sign in [S::one(), -S::one()] {
                let mut v = vec![S::zero(); 4];
                v[i] = sign;
                vertices.push(Vector::new(v).expect("finite"));
            }
        }
        for mask in 0..16u32 {
            let v: Vec<S> = (0..4)
                .map(|k| if mask >> k & 1 == 0 { half } else { -half })
                .collect();
            vertices.push(Vector::new(v).expect("finite"));
        }
        let pattern = [phi * half, half, half / phi, S::zero()];
        for perm in even_permutations_4() {
            for mask in 0..8u32 {
                let mut v = vec![S::zero(); 4];
                let mut sign_bit = 0;
                for k in 0..4 {
                    let magnitude = pattern[perm[k]];
                    if perm[k] == 3 {
                        v[k] = S::zero();
                    } else {
                        let sign = if mask >> sign_bit & 1 == 0 { S::one() } else { -S::one() };
                        v[k] = sign * magnitude;
                        sign_bit += 1;
                    }
                }
                vertices.push(Vector::new(v).expect("finite"));
            }
        }
        finish("600cell".into(), 4, vertices, tol)
    }
}

/// Rectangular cuboid with side lengths (a, b, c): 8 vertices
/// (±a/2, ±b/2, ±c/2) and 12 edges by combinatorial adjacency (NOT the
/// minimal-distance rule, which would drop the long edges). Never rescaled;
/// flagged non-uniform when sides differ. This is the negative control for
/// the edge-transitivity hypothesis.
pub fn build_cuboid<S: Real>(a: S, b: S, c: S, tol: Tol<S>) -> Result<Polytope<S>> {
    for side in [a, b, c] {
        if !(side > S::zero()) || !side.is_finite() {
            return Err(Error::InvalidPolytope(format!(
                "cuboid sides must be positive, got {side}"
            )));
        }
    }
    let half = S::cst(0.5);
    let sides = [a * half, b * half, c * half];
    let vertices: Vec<Vector<S>> = (0..8usize)
        .map(|mask| {
            Vector::new(
                (0..3)
                    .map(|k| if mask >> k & 1 == 0 { -sides[k] } else { sides[k] })
                    .collect(),
            )
            .expect("finite")
        })
        .collect();
    let mut edges = Vec::with_capacity(12);
    for i in 0..8usize {
        for k in 0..3 {
            let j = i ^ (1 << k);
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let name = format!(
        "cuboid-{}-{}-{}",
        a.to_f64().unwrap(),
        b.to_f64().unwrap(),
        c.to_f64().unwrap()
    );
    Polytope::new(name, 3, vertices, edges, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tol<f64> {
        Tol::default()
    }

    #[test]
    fn hypercube_counts() {
        let p3 = build_hypercube::<f64>(3, tol()).unwrap();
        assert_eq!((p3.vertex_count(), p3.edge_count()), (8, 12));
        let p4 = build_hypercube::<f64>(4, tol()).unwrap();
        assert_eq!((p4.vertex_count(), p4.edge_count()), (16, 32));
        let p2 = build_hypercube::<f64>(2, tol()).unwrap();
        assert_eq!((p2.vertex_count(), p2.edge_count()), (4, 4));
        // n·2^(n−1) for the full range
        for n in 2..=6 {
            let p = build_hypercube::<f64>(n, tol()).unwrap();
            assert_eq!(p.edge_count(), n * (1 << (n - 1)));
        }
    }

    #[test]
    fn cross_polytope_counts() {
        let oct = build_cross_polytope::<f64>(3, tol()).unwrap();
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        let cell16 = build_cross_polytope::<f64>(4, tol()).unwrap();
        assert_eq!((cell16.vertex_count(), cell16.edge_count()), (8, 24));
        for n in 2..=6 {
            let p = build_cross_polytope::<f64>(n, tol()).unwrap();
            assert_eq!(p.edge_count(), 2 * n * (n - 1));
        }
    }

    #[test]
    fn simplex_counts_and_gram() {
        let tri = build_simplex::<f64>(2, tol()).unwrap();
        assert_eq!((tri.vertex_count(), tri.edge_count()), (3, 3));
        for l in 0..3 {
            assert!((tri.edge_length(l) - 1.0).abs() <= 1e-9);
        }
        let tet = build_simplex::<f64>(3, tol()).unwrap();
        assert_eq!(tet.edge_count(), 6);
        // simplex-4: 5 vertices, 10 edges, Gram matrix with exactly two
        // distinct entries (diagonal and off-diagonal)
        let s4 = build_simplex::<f64>(4, tol()).unwrap();
        assert_eq!((s4.vertex_count(), s4.edge_count()), (5, 10));
        let mut diag = Vec::new();
        let mut off = Vec::new();
        for i in 0..5 {
            for j in 0..5 {
                let g = crate::numeric::inner(&s4.vertices()[i], &s4.vertices()[j]).unwrap();
                if i == j {
                    diag.push(g);
                } else {
                    off.push(g);
                }
            }
        }
        for d in &diag {
            assert!((d - diag[0]).abs() < 1e-12);
        }
        for o in &off {
            assert!((o - off[0]).abs() < 1e-12);
        }
        assert!((diag[0] - off[0]).abs() > 1e-6);
    }

    #[test]
    fn cell24_counts_and_degree() {
        let p = build_24cell::<f64>(tol()).unwrap();
        assert_eq!(p.vertex_count(), 24);
        assert_eq!(p.edge_count(), 96);
        assert!(p.vertex_degrees().iter().all(|&d| d == 8));
    }

    #[test]
    fn cell24_edge_count_oracle() {
        // independent enumeration: count vertex pairs at the minimal
        // squared distance directly on the raw coordinates
        let mut raw: Vec<[f64; 4]> = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                for si in [1.0, -1.0] {
                    for sj in [1.0, -1.0] {
                        let mut v = [0.0; 4];
                        v[i] = si;
                        v[j] = sj;
                        raw.push(v);
                    }
                }
            }
        }
        let d2 = |a: &[f64; 4], b: &[f64; 4]| -> f64 {
            a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
        };
        let mut min = f64::INFINITY;
        for i in 0..raw.len() {
            for j in i + 1..raw.len() {
                min = min.min(d2(&raw[i], &raw[j]));
            }
        }
        let count = (0..raw.len())
            .flat_map(|i| (i + 1..raw.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| (d2(&raw[i], &raw[j]) - min).abs() < 1e-9)
            .count();
        assert_eq!(count, 96);
    }

    #[test]
    fn icosahedron_counts() {
        let p = build_icosahedron::<f64>(tol()).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (12, 30));
        for l in 0..p.edge_count() {
            assert!((p.edge_length(l) - 1.0).abs() <= 1e-9);
        }
        assert!(p.vertex_degrees().iter().all(|&d| d == 5));
    }

    #[test]
    fn icosahedron_single_edge_length_before_normalization() {
        // distance histogram on the raw golden-ratio coordinates: all
        // minimal-distance pairs share one length
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let mut raw: Vec<[f64; 3]> = Vec::new();
        for s1 in [1.0, -1.0] {
            for s2 in [phi, -phi] {
                for rot in 0..3 {
                    let base = [0.0, s1, s2];
                    let mut v = [0.0; 3];
                    for k in 0..3 {
                        v[(k + rot) % 3] = base[k];
                    }
                    raw.push(v);
                }
            }
        }
        let mut lengths: Vec<f64> = Vec::new();
        for i in 0..raw.len() {
            for j in i + 1..raw.len() {
                let d: f64 = raw[i]
                    .iter()
                    .zip(&raw[j])
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum::<f64>()
                    .sqrt();
                lengths.push(d);
            }
        }
        let min = lengths.iter().cloned().fold(f64::INFINITY, f64::min);
        let minimal: Vec<f64> = lengths
            .iter()
            .cloned()
            .filter(|&d| (d - min).abs() < 1e-9)
            .collect();
        assert_eq!(minimal.len(), 30);
        for d in minimal {
            assert!((d - min).abs() < 1e-12);
        }
    }

    #[test]
    fn dodecahedron_counts() {
        let p = build_dodecahedron::<f64>(tol()).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (20, 30));
        assert!(p.vertex_degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn cuboid_examples() {
        let p = build_cuboid::<f64>(1.0, 1.0, 2.0, tol()).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (8, 12));
        assert!(!p.has_uniform_edge_length());
        // squared-length multiset {1 × 8, 4 × 4}
        let mut squared: Vec<f64> = (0..12).map(|l| p.edge_length(l).powi(2)).collect();
        squared.sort_by(f64::total_cmp);
        assert!(squared[..8].iter().all(|&s| (s - 1.0).abs() < 1e-12));
        assert!(squared[8..].iter().all(|&s| (s - 4.0).abs() < 1e-12));

        let unit = build_cuboid::<f64>(1.0, 1.0, 1.0, tol()).unwrap();
        assert!(unit.has_uniform_edge_length());

        assert!(build_cuboid::<f64>(0.0, 1.0, 1.0, tol()).is_err());
        assert!(build_cuboid::<f64>(1.0, -1.0, 1.0, tol()).is_err());
    }

    #[test]
    fn out_of_range_dims_rejected() {
        assert!(build_hypercube::<f64>(1, tol()).is_err());
        assert!(build_hypercube::<f64>(7, tol()).is_err());
        assert!(build_cross_polytope::<f64>(0, tol()).is_err());
        assert!(build_simplex::<f64>(7, tol()).is_err());
    }

    #[test]
    fn catalog_invariants() {
        for id in default_catalog() {
            let p = build_polytope::<f64>(id, tol()).unwrap();
            assert_eq!(p.ambient_dim(), id.ambient_dim());
            // unit edges and origin centroid for every default entry
            for l in 0..p.edge_count() {
                assert!(
                    (p.edge_length(l) - 1.0).abs() <= 1e-9,
                    "{id}: edge {l} has length {}",
                    p.edge_length(l)
                );
            }
            for k in 0..p.ambient_dim() {
                let c: f64 =
                    p.vertices().iter().map(|v| v[k]).sum::<f64>() / p.vertex_count() as f64;
                assert!(c.abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn name_round_trip() {
        for id in default_catalog().into_iter().chain(control_catalog()) {
            let parsed = CatalogId::parse(&id.to_string()).unwrap();
            assert_eq!(parsed, id);
        }
        assert!(CatalogId::parse("hyperkube-3").is_err());
        assert!(CatalogId::parse("cuboid-1-2").is_err());
    }

    #[cfg(feature = "cell600")]
    #[test]
    fn cell600_counts() {
        let p = build_600cell::<f64>(tol()).unwrap();
        assert_eq!(p.vertex_count(), 120);
        assert_eq!(p.edge_count(), 720);
        assert!(p.vertex_degrees().iter().all(|&d| d == 12));
    }

    #[cfg(not(feature = "cell600"))]
    #[test]
    fn cell600_requires_feature() {
        assert!(matches!(
            build_600cell::<f64>(tol()),
            Err(Error::FeatureDisabled(_))
        ));
    }
}
