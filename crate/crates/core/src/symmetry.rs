//! Finite rotation groups as explicit matrix sets: breadth-first closure
//! from per-polytope generators, symmetry testing against a vertex set, and
//! the orbit / stabilizer / coset decomposition of the edge action.

use std::collections::{HashMap, VecDeque};

use crate::catalog::{self, CatalogId};
use crate::error::{Error, Result};
use crate::numeric::{is_special_orthogonal, Matrix, QuantIndex, Tol};
use crate::polytope::Polytope;
use crate::scalar::Real;

/// Default closure ceiling: above the largest catalog group (hypercube-6,
/// order 23040) with slack.
pub const DEFAULT_MAX_ORDER: usize = 30_000;

/// A finite group of special-orthogonal matrices, closed under product and
/// inverse. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct MatrixGroup<S> {
    elements: Vec<Matrix<S>>,
    generator_indices: Vec<usize>,
}

impl<S: Real> MatrixGroup<S> {
    /// Breadth-first closure of `generators` under left-multiplication.
    ///
    /// Deduplication hashes entries rounded to `tol.key_digits` decimals and
    /// confirms candidates entrywise within `eq_tol`. Errors with
    /// [`Error::ClosureOverflow`] when the closure exceeds `max_order`
    /// (bad generators or too-fine hashing), and rejects generators that are
    /// not special-orthogonal (improper symmetries such as reflections).
    pub fn close(generators: &[Matrix<S>], tol: Tol<S>, max_order: usize) -> Result<Self> {
        if max_order == 0 {
            return Err(Error::Precondition("max_order must be >= 1".into()));
        }
        let dim = generators.first().map(Matrix::dim).unwrap_or(0);
        if dim == 0 {
            return Err(Error::Precondition("need at least one generator".into()));
        }
        for g in generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.dim() });
            }
            if !is_special_orthogonal(g, tol) {
                return Err(Error::Precondition(
                    "generator is not special-orthogonal (reflections are rejected)".into(),
                ));
            }
        }

        let mut elements: Vec<Matrix<S>> = Vec::new();
        let mut index = QuantIndex::new(tol);
        let mut queue: VecDeque<usize> = VecDeque::new();

        insert_if_new(&mut elements, &mut index, Matrix::identity(dim), max_order)?;
        queue.push_back(0);
        let mut generator_indices = Vec::new();
        for g in generators {
            if let Some(idx) = insert_if_new(&mut elements, &mut index, g.clone(), max_order)? {
                generator_indices.push(idx);
                queue.push_back(idx);
            }
        }
        while let Some(i) = queue.pop_front() {
            for &gi in &generator_indices {
                let product = elements[gi].mul_mat(&elements[i]);
                if let Some(idx) = insert_if_new(&mut elements, &mut index, product, max_order)? {
                    queue.push_back(idx);
                }
            }
        }
        let group = Self { elements, generator_indices };
        group.verify(tol)?;
        Ok(group)
    }

    /// Wrap raw elements without any closure or orthogonality checks.
    /// Intended for fixtures and fault-injection diagnostics; most callers
    /// want [`MatrixGroup::close`].
    pub fn from_elements_unchecked(elements: Vec<Matrix<S>>) -> Self {
        Self { elements, generator_indices: Vec::new() }
    }

    /// Copy of this group with one entry of one element shifted by `eps`
    /// (fault injection for the verification checks).
    pub fn with_perturbed_entry(&self, element: usize, row: usize, col: usize, eps: S) -> Self {
        let mut elements = self.elements.clone();
        let old = elements[element].get(row, col);
        elements[element].set(row, col, old + eps);
        Self { elements, generator_indices: self.generator_indices.clone() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<S>] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.first().map(Matrix::dim).unwrap_or(0)
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    /// Check the group invariants: identity present, every element
    /// special-orthogonal, aᵀ ∈ G for all a, and products landing on exactly
    /// one stored element. Products are checked exhaustively up to order 600
    /// and on a fixed sample of pairs above that.
    pub fn verify(&self, tol: Tol<S>) -> Result<()> {
        let n = self.order();
        if n == 0 {
            return Err(Error::Precondition("empty group".into()));
        }
        let dim = self.dim();
        let identity = Matrix::identity(dim);
        if !self.elements[0].approx_eq(&identity, tol.eq_tol) {
            return Err(Error::Precondition("element 0 is not the identity".into()));
        }
        for (i, m) in self.elements.iter().enumerate() {
            if !is_special_orthogonal(m, tol) {
                return Err(Error::Precondition(format!(
                    "element {i} is not special-orthogonal"
                )));
            }
        }
        let mut index = QuantIndex::new(tol);
        for (i, m) in self.elements.iter().enumerate() {
            index.insert(m.as_slice(), i)?;
        }
        let slices: Vec<&[S]> = self.elements.iter().map(Matrix::as_slice).collect();
        let find = |m: &Matrix<S>| -> Result<Option<usize>> {
            index.find(m.as_slice(), |i| slices[i])
        };
        for (i, m) in self.elements.iter().enumerate() {
            if find(&m.transpose())?.is_none() {
                return Err(Error::Precondition(format!(
                    "inverse (transpose) of element {i} is not in the group"
                )));
            }
        }
        let check_product = |a: usize, b: usize| -> Result<()> {
            match find(&self.elements[a].mul_mat(&self.elements[b]))? {
                Some(_) => Ok(()),
                None => Err(Error::Precondition(format!(
                    "product of elements {a} and {b} is not in the group"
                ))),
            }
        };
        if n <= 600 {
            for a in 0..n {
                for b in 0..n {
                    check_product(a, b)?;
                }
            }
        } else {
            // deterministic sample: stride through the pair grid
            let step = (n * n / 2000).max(1);
            let mut pair = 0usize;
            while pair < n * n {
                check_product(pair / n, pair % n)?;
                pair += step;
            }
        }
        Ok(())
    }
}

fn insert_if_new<S: Real>(
    elements: &mut Vec<Matrix<S>>,
    index: &mut QuantIndex<S>,
    m: Matrix<S>,
    max_order: usize,
) -> Result<Option<usize>> {
    if index.find(m.as_slice(), |i| elements[i].as_slice())?.is_some() {
        return Ok(None);
    }
    if elements.len() == max_order {
        return Err(Error::ClosureOverflow { max_order });
    }
    index.insert(m.as_slice(), elements.len())?;
    elements.push(m);
    Ok(Some(elements.len() - 1))
}

/// Generators whose closure is the proper symmetry group of the named
/// catalog entry.
///
/// Hypercubes and cross-polytopes use the adjacent-plane 90° rotations;
/// the simplex uses even vertex permutations conjugated into R^N via the
/// sum-zero hyperplane basis; the 24-cell adds the half-Hadamard rotation to
/// the signed-permutation rotations; the icosahedral solids use a coordinate
/// 3-cycle plus a golden-ratio edge flip; the 600-cell uses quaternion
/// left/right multiplications by unit icosians.
pub fn catalog_generators<S: Real>(id: CatalogId) -> Result<Vec<Matrix<S>>> {
    match id {
        CatalogId::Hypercube(n) | CatalogId::CrossPolytope(n) => {
            if !(2..=6).contains(&n) {
                return Err(Error::DimensionOutOfRange {
                    name: "catalog generators",
                    dim: n,
                    min: 2,
                    max: 6,
                });
            }
            Ok(plane_rotation_generators(n))
        }
        CatalogId::Simplex(n) => {
            if !(2..=6).contains(&n) {
                return Err(Error::DimensionOutOfRange {
                    name: "catalog generators",
                    dim: n,
                    min: 2,
                    max: 6,
                });
            }
            Ok(simplex_generators(n))
        }
        CatalogId::Cell24 => {
            let mut gens = plane_rotation_generators(4);
            gens.push(half_hadamard());
            Ok(gens)
        }
        CatalogId::Icosahedron | CatalogId::Dodecahedron => Ok(icosahedral_generators()),
        CatalogId::Cell600 => {
            #[cfg(not(feature = "cell600"))]
            {
                Err(Error::FeatureDisabled("600cell"))
            }
            #[cfg(feature = "cell600")]
            {
                Ok(cell600_generators())
            }
        }
        CatalogId::Cuboid(a, b, c) => Ok(cuboid_generators(a, b, c)),
    }
}

/// Convenience: build a catalog polytope together with its closed symmetry
/// group.
pub fn build_polytope_with_group<S: Real>(
    id: CatalogId,
    tol: Tol<S>,
) -> Result<(Polytope<S>, MatrixGroup<S>)> {
    let polytope = catalog::build_polytope(id, tol)?;
    let group = MatrixGroup::close(&catalog_generators(id)?, tol, DEFAULT_MAX_ORDER)?;
    Ok((polytope, group))
}

/// 90° rotation in the (i, j) coordinate plane: e_i → e_j, e_j → −e_i.
fn plane_rotation<S: Real>(n: usize, i: usize, j: usize) -> Matrix<S> {
    let mut m = Matrix::identity(n);
    m.set(i, i, S::zero());
    m.set(j, j, S::zero());
    m.set(j, i, S::one());
    m.set(i, j, -S::one());
    m
}

/// Adjacent-plane 90° rotations; their closure is the rotation subgroup of
/// the signed permutations (order 2^(n−1)·n!).
fn plane_rotation_generators<S: Real>(n: usize) -> Vec<Matrix<S>> {
    (0..n - 1).map(|i| plane_rotation(n, i, i + 1)).collect()
}

/// 180° rotation about coordinate axis `axis` in R³.
fn axis_flip<S: Real>(axis: usize) -> Matrix<S> {
    let mut m = Matrix::identity(3);
    for k in 0..3 {
        if k != axis {
            m.set(k, k, -S::one());
        }
    }
    m
}

/// Even vertex permutations of the (n+1) simplex vertices, conjugated into
/// R^n via the orthonormal hyperplane basis. Two generators: a 3-cycle and
/// a long even cycle.
fn simplex_generators<S: Real>(n: usize) -> Vec<Matrix<S>> {
    let m = n + 1;
    let three_cycle: Vec<usize> = (0..m).map(|i| match i {
        0 => 1,
        1 => 2,
        2 => 0,
        other => other,
    }).collect();
    let long_cycle: Vec<usize> = if m % 2 == 1 {
        (0..m).map(|i| (i + 1) % m).collect()
    } else {
        (0..m)
            .map(|i| match i {
                0 => 0,
                i if i == m - 1 => 1,
                i => i + 1,
            })
            .collect()
    };
    [three_cycle, long_cycle]
        .into_iter()
        .map(|perm| conjugated_permutation(n, &perm))
        .collect()
}

/// Hᵀ P_π H for the permutation π of the n+1 ambient coordinates, with H
/// the hyperplane basis columns.
fn conjugated_permutation<S: Real>(n: usize, perm: &[usize]) -> Matrix<S> {
    let basis = catalog::simplex_hyperplane_basis::<S>(n);
    let mut out = Matrix::identity(n);
    for a in 0..n {
        for b in 0..n {
            let mut sum = S::zero();
            for (j, &pj) in perm.iter().enumerate() {
                sum = sum + basis[a][pj] * basis[b][j];
            }
            out.set(a, b, sum);
        }
    }
    out
}

/// The half-Hadamard rotation (H₂ ⊗ H₂): a determinant-+1 symmetry of the
/// 24-cell that is not a signed permutation.
fn half_hadamard<S: Real>() -> Matrix<S> {
    let h = S::cst(0.5);
    Matrix::from_rows(vec![
        vec![h, h, h, h],
        vec![h, -h, h, -h],
        vec![h, h, -h, -h],
        vec![h, -h, -h, h],
    ])
    .expect("static entries")
}

/// Icosahedral rotation group: coordinate 3-cycle (a face axis) plus the
/// 180° rotation about the edge-midpoint axis (1/φ, φ, 1)/2.
fn icosahedral_generators<S: Real>() -> Vec<Matrix<S>> {
    let mut cycle = Matrix::identity(3);
    for j in 0..3 {
        for i in 0..3 {
            cycle.set(i, j, if i == (j + 1) % 3 { S::one() } else { S::zero() });
        }
    }
    let phi = catalog::golden_ratio::<S>();
    let h = S::cst(0.5);
    let edge_flip = Matrix::from_rows(vec![
        vec![-phi * h, h, (phi - S::one()) * h],
        vec![h, (phi - S::one()) * h, phi * h],
        vec![(phi - S::one()) * h, phi * h, -h],
    ])
    .expect("static entries");
    vec![cycle, edge_flip]
}

/// Left multiplication by the unit quaternion q = (w, x, y, z).
#[cfg(feature = "cell600")]
fn quaternion_left<S: Real>(q: [S; 4]) -> Matrix<S> {
    let [w, x, y, z] = q;
    Matrix::from_rows(vec![
        vec![w, -x, -y, -z],
        vec![x, w, -z, y],
        vec![y, z, w, -x],
        vec![z, -y, x, w],
    ])
    .expect("static entries")
}

/// Right multiplication by the conjugate of the unit quaternion
/// q = (w, x, y, z), i.e. p ↦ p·q̄.
#[cfg(feature = "cell600")]
fn quaternion_right_conjugate<S: Real>(q: [S; 4]) -> Matrix<S> {
    let [w, x, y, z] = q;
    Matrix::from_rows(vec![
        vec![w, x, y, z],
        vec![-x, w, -z, y],
        vec![-y, z, w, -x],
        vec![-z, -y, x, w],
    ])
    .expect("static entries")
}

/// Rotations x ↦ q·x·r̄ for q, r ranging over the binary icosahedral group;
/// generated by left/right multiplications by two unit icosians.
#[cfg(feature = "cell600")]
fn cell600_generators<S: Real>() -> Vec<Matrix<S>> {
    let phi = catalog::golden_ratio::<S>();
    let h = S::cst(0.5);
    let qa = [h, h, h, h];
    let qb = [phi * h, h, (S::one() / phi) * h, S::zero()];
    vec![
        quaternion_left(qa),
        quaternion_left(qb),
        quaternion_right_conjugate(qa),
        quaternion_right_conjugate(qb),
    ]
}

/// Proper symmetries of a rectangular cuboid: the full cube rotations when
/// all sides agree, a 4-fold rotation about the distinct axis plus an
/// in-plane flip when exactly two sides agree, and the three axis flips
/// when all sides differ.
fn cuboid_generators<S: Real>(a: f64, b: f64, c: f64) -> Vec<Matrix<S>> {
    if a == b && b == c {
        return plane_rotation_generators(3);
    }
    if a == b {
        return vec![plane_rotation(3, 0, 1), axis_flip(0)];
    }
    if b == c {
        return vec![plane_rotation(3, 1, 2), axis_flip(1)];
    }
    if a == c {
        return vec![plane_rotation(3, 0, 2), axis_flip(0)];
    }
    vec![axis_flip(0), axis_flip(1)]
}

/// Vertex and edge lookup for one polytope, shared across symmetry tests.
pub(crate) struct Matcher<'p, S> {
    polytope: &'p Polytope<S>,
    vertex_index: QuantIndex<S>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl<'p, S: Real> Matcher<'p, S> {
    pub fn new(polytope: &'p Polytope<S>, tol: Tol<S>) -> Result<Self> {
        let mut vertex_index = QuantIndex::new(tol);
        for (i, v) in polytope.vertices().iter().enumerate() {
            vertex_index.insert(v.as_slice(), i)?;
        }
        let edge_index = polytope
            .edges()
            .iter()
            .enumerate()
            .map(|(l, &e)| (e, l))
            .collect();
        Ok(Self { polytope, vertex_index, edge_index })
    }

    fn vertex_image(&self, m: &Matrix<S>, vertex: usize) -> Result<Option<usize>> {
        let image = m.mul_vec(&self.polytope.vertices()[vertex]);
        self.vertex_index.find(image.as_slice(), |i| {
            self.polytope.vertices()[i].as_slice()
        })
    }

    /// Permutation of vertex indices induced by `m`, or `None` when `m`
    /// does not map the vertex set bijectively onto itself.
    pub fn vertex_action(&self, m: &Matrix<S>) -> Result<Option<Vec<usize>>> {
        let count = self.polytope.vertex_count();
        let mut perm = vec![0usize; count];
        let mut seen = vec![false; count];
        for v in 0..count {
            match self.vertex_image(m, v)? {
                Some(image) if !seen[image] => {
                    seen[image] = true;
                    perm[v] = image;
                }
                _ => return Ok(None),
            }
        }
        Ok(Some(perm))
    }

    /// Edge index of the image of edge `l` under the vertex permutation.
    pub fn edge_image(&self, perm: &[usize], l: usize) -> Option<usize> {
        let (i, j) = self.polytope.edges()[l];
        let (a, b) = (perm[i], perm[j]);
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    /// Image of one edge under `m` without computing the full permutation.
    pub fn edge_image_direct(&self, m: &Matrix<S>, l: usize) -> Result<Option<usize>> {
        let (i, j) = self.polytope.edges()[l];
        let (Some(a), Some(b)) = (self.vertex_image(m, i)?, self.vertex_image(m, j)?) else {
            return Ok(None);
        };
        Ok(self.edge_index.get(&(a.min(b), a.max(b))).copied())
    }
}

/// True iff `m` maps the vertex set bijectively onto itself within `eq_tol`
/// (it then maps edges to edges as well).
pub fn is_symmetry<S: Real>(p: &Polytope<S>, m: &Matrix<S>, tol: Tol<S>) -> Result<bool> {
    if m.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), got: m.dim() });
    }
    let matcher = Matcher::new(p, tol)?;
    Ok(matcher.vertex_action(m)?.is_some())
}

/// Permutation π of edge indices with m(edge_l) = edge_{π(l)} as unordered
/// pairs. Errors with [`Error::NotASymmetry`] when an image edge is missing.
pub fn edge_action<S: Real>(p: &Polytope<S>, m: &Matrix<S>, tol: Tol<S>) -> Result<Vec<usize>> {
    if m.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), got: m.dim() });
    }
    let matcher = Matcher::new(p, tol)?;
    edge_action_with(&matcher, m)
}

fn edge_action_with<S: Real>(matcher: &Matcher<'_, S>, m: &Matrix<S>) -> Result<Vec<usize>> {
    let Some(vperm) = matcher.vertex_action(m)? else {
        return Err(Error::NotASymmetry);
    };
    (0..matcher.polytope.edge_count())
        .map(|l| matcher.edge_image(&vperm, l).ok_or(Error::NotASymmetry))
        .collect()
}

/// Orbits, stabilizer order, and coset map of the edge action.
#[derive(Debug, Clone)]
pub struct EdgeOrbitDecomposition {
    orbits: Vec<Vec<usize>>,
    base_edge: usize,
    stabilizer_order: usize,
    /// cosets[l] = indices of group elements sending the base edge to edge
    /// l (empty outside the base orbit).
    cosets: Vec<Vec<usize>>,
    group_order: usize,
}

impl EdgeOrbitDecomposition {
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn base_edge(&self) -> usize {
        self.base_edge
    }

    /// k = |H|, the number of group elements fixing the base edge as an
    /// unordered pair (endpoint swap allowed).
    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer_order
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }
}

/// True iff the decomposition has exactly one orbit.
pub fn is_edge_transitive(decomp: &EdgeOrbitDecomposition) -> bool {
    decomp.orbit_count() == 1
}

/// Decompose the edge set under the action of `g`: orbits, the stabilizer
/// order k of `base_edge`, and the coset map. Verifies the orbit–stabilizer
/// identity k·|orbit(base)| = |G| exactly.
pub fn decompose_edges<S: Real>(
    p: &Polytope<S>,
    g: &MatrixGroup<S>,
    base_edge: usize,
    tol: Tol<S>,
) -> Result<EdgeOrbitDecomposition> {
    let edge_count = p.edge_count();
    if base_edge >= edge_count {
        return Err(Error::Precondition(format!(
            "base edge {base_edge} out of range (E = {edge_count})"
        )));
    }
    let matcher = Matcher::new(p, tol)?;

    // orbits from the generator actions (or all elements for raw fixture
    // groups without recorded generators)
    let acting: Vec<&Matrix<S>> = if g.generator_indices().is_empty() {
        g.elements().iter().collect()
    } else {
        g.generator_indices().iter().map(|&i| &g.elements()[i]).collect()
    };
    let actions: Vec<Vec<usize>> = acting
        .iter()
        .map(|m| edge_action_with(&matcher, m))
        .collect::<Result<_>>()?;
    let mut orbit_of = vec![usize::MAX; edge_count];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..edge_count {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![start];
        orbit_of[start] = id;
        let mut frontier = vec![start];
        while let Some(l) = frontier.pop() {
            for action in &actions {
                let image = action[l];
                if orbit_of[image] == usize::MAX {
                    orbit_of[image] = id;
                    orbit.push(image);
                    frontier.push(image);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    debug_assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), edge_count);

    // coset map: image of the base edge under every element
    let mut cosets = vec![Vec::new(); edge_count];
    for (idx, m) in g.elements().iter().enumerate() {
        let Some(image) = matcher.edge_image_direct(m, base_edge)? else {
            return Err(Error::NotASymmetry);
        };
        cosets[image].push(idx);
    }
    let stabilizer_order = cosets[base_edge].len();
    let base_orbit_size = orbits[orbit_of[base_edge]].len();
    if stabilizer_order * base_orbit_size != g.order() {
        return Err(Error::Precondition(format!(
            "orbit-stabilizer identity failed: {stabilizer_order} * {base_orbit_size} != {}",
            g.order()
        )));
    }
    Ok(EdgeOrbitDecomposition {
        orbits,
        base_edge,
        stabilizer_order,
        cosets,
        group_order: g.order(),
    })
}

/// Check that every element of `g` is a symmetry of `p` (the hypothesis the
/// projection law needs, before edge-transitivity).
pub fn group_preserves_polytope<S: Real>(
    p: &Polytope<S>,
    g: &MatrixGroup<S>,
    tol: Tol<S>,
) -> Result<()> {
    if g.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), got: g.dim() });
    }
    let matcher = Matcher::new(p, tol)?;
    for (i, m) in g.elements().iter().enumerate() {
        if matcher.vertex_action(m)?.is_none() {
            return Err(Error::Precondition(format!(
                "group element {i} is not a symmetry of {}",
                p.name()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_polytope, CatalogId};

    fn tol() -> Tol<f64> {
        Tol::default()
    }

    fn rotation_z(degrees: f64) -> Matrix<f64> {
        let t = degrees.to_radians();
        Matrix::from_rows_f64(&[
            &[t.cos(), -t.sin(), 0.0],
            &[t.sin(), t.cos(), 0.0],
            &[0.0, 0.0, 1.0],
        ])
    }

    #[test]
    fn closure_of_identity() {
        let g = MatrixGroup::close(&[Matrix::<f64>::identity(3)], tol(), 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_of_quarter_turn_is_cyclic_four() {
        let r = plane_rotation::<f64>(2, 0, 1);
        let g = MatrixGroup::close(&[r], tol(), 10).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn closure_of_cube_generators() {
        let gens = catalog_generators::<f64>(CatalogId::Hypercube(3)).unwrap();
        let g = MatrixGroup::close(&gens, tol(), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn closure_overflow_reported() {
        let gens = catalog_generators::<f64>(CatalogId::Hypercube(3)).unwrap();
        assert!(matches!(
            MatrixGroup::close(&gens, tol(), 10),
            Err(Error::ClosureOverflow { max_order: 10 })
        ));
    }

    #[test]
    fn reflection_generator_rejected() {
        let reflection = Matrix::from_rows_f64(&[
            &[1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0],
            &[0.0, 0.0, -1.0],
        ]);
        assert!(matches!(
            MatrixGroup::close(&[reflection], tol(), 10),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn catalog_generator_orders() {
        for (id, order) in [
            (CatalogId::Hypercube(3), 24),
            (CatalogId::CrossPolytope(3), 24),
            (CatalogId::Hypercube(4), 192),
            (CatalogId::Simplex(2), 3),
            (CatalogId::Simplex(3), 12),
            (CatalogId::Icosahedron, 60),
            (CatalogId::Dodecahedron, 60),
            (CatalogId::Cell24, 576),
        ] {
            let gens = catalog_generators::<f64>(id).unwrap();
            let g = MatrixGroup::close(&gens, tol(), DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(g.order(), order, "group order for {id}");
        }
    }

    #[test]
    fn closure_is_group_small_orders() {
        // exhaustive closure/inverse invariants run inside verify()
        for id in [CatalogId::Hypercube(3), CatalogId::Icosahedron, CatalogId::Simplex(3)] {
            let gens = catalog_generators::<f64>(id).unwrap();
            let g = MatrixGroup::close(&gens, tol(), DEFAULT_MAX_ORDER).unwrap();
            g.verify(tol()).unwrap();
        }
    }

    #[test]
    fn is_symmetry_cases() {
        let cube = build_polytope::<f64>(CatalogId::Hypercube(3), tol()).unwrap();
        assert!(is_symmetry(&cube, &Matrix::identity(3), tol()).unwrap());
        assert!(is_symmetry(&cube, &rotation_z(90.0), tol()).unwrap());
        assert!(!is_symmetry(&cube, &rotation_z(45.0), tol()).unwrap());
    }

    #[test]
    fn group_elements_are_polytope_symmetries() {
        for id in [
            CatalogId::Simplex(3),
            CatalogId::Hypercube(3),
            CatalogId::CrossPolytope(4),
            CatalogId::Icosahedron,
            CatalogId::Dodecahedron,
            CatalogId::Cell24,
        ] {
            let (p, g) = build_polytope_with_group::<f64>(id, tol()).unwrap();
            group_preserves_polytope(&p, &g, tol()).unwrap();
        }
    }

    #[test]
    fn edge_action_identity() {
        let cube = build_polytope::<f64>(CatalogId::Hypercube(3), tol()).unwrap();
        let action = edge_action(&cube, &Matrix::identity(3), tol()).unwrap();
        assert_eq!(action, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn edge_action_quarter_turn_cycle_structure() {
        let cube = build_polytope::<f64>(CatalogId::Hypercube(3), tol()).unwrap();
        let action = edge_action(&cube, &rotation_z(90.0), tol()).unwrap();
        let mut cycle_lengths = Vec::new();
        let mut seen = vec![false; action.len()];
        for start in 0..action.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut l = start;
            while !seen[l] {
                seen[l] = true;
                len += 1;
                l = action[l];
            }
            cycle_lengths.push(len);
        }
        cycle_lengths.sort_unstable();
        assert_eq!(cycle_lengths, vec![4, 4, 4]);
    }

    #[test]
    fn edge_action_respects_composition() {
        let cube = build_polytope::<f64>(CatalogId::Hypercube(3), tol()).unwrap();
        let m1 = rotation_z(90.0);
        let m2 = plane_rotation::<f64>(3, 1, 2);
        let a1 = edge_action(&cube, &m1, tol()).unwrap();
        let a2 = edge_action(&cube, &m2, tol()).unwrap();
        let a12 = edge_action(&cube, &m1.mul_mat(&m2), tol()).unwrap();
        for l in 0..12 {
            assert_eq!(a12[l], a1[a2[l]]);
        }
    }

    #[test]
    fn edge_action_rejects_non_symmetry() {
        let cube = build_polytope::<f64>(CatalogId::Hypercube(3), tol()).unwrap();
        assert!(matches!(
            edge_action(&cube, &rotation_z(45.0), tol()),
            Err(Error::NotASymmetry)
        ));
    }

    #[test]
    fn cube_decomposition() {
        let (cube, g) = build_polytope_with_group::<f64>(CatalogId::Hypercube(3), tol()).unwrap();
        let d = decompose_edges(&cube, &g, 0, tol()).unwrap();
        assert_eq!(d.orbit_sizes(), vec![12]);
        assert_eq!(d.stabilizer_order(), 2);
        assert_eq!(d.stabilizer_order() * 12, g.order());
        assert!(is_edge_transitive(&d));
        // every coset has cardinality k
        for l in 0..12 {
            assert_eq!(d.cosets()[l].len(), 2);
        }
    }

    #[test]
    fn icosahedron_decomposition() {
        let (p, g) = build_polytope_with_group::<f64>(CatalogId::Icosahedron, tol()).unwrap();
        let d = decompose_edges(&p, &g, 0, tol()).unwrap();
        assert_eq!(d.orbit_sizes(), vec![30]);
        assert_eq!(d.stabilizer_order(), 2);
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn cuboid_control_has_two_orbits() {
        let id = CatalogId::Cuboid(1.0, 1.0, 2.0);
        let (p, g) = build_polytope_with_group::<f64>(id, tol()).unwrap();
        assert_eq!(g.order(), 8);
        let d = decompose_edges(&p, &g, 0, tol()).unwrap();
        assert!(d.orbit_count() >= 2);
        let mut sizes = d.orbit_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 8]);
        assert!(!is_edge_transitive(&d));
    }

    #[test]
    fn base_edge_choice_is_consistent() {
        let (cube, g) = build_polytope_with_group::<f64>(CatalogId::Hypercube(3), tol()).unwrap();
        for base in [0, 5, 11] {
            let d = decompose_edges(&cube, &g, base, tol()).unwrap();
            assert_eq!(d.stabilizer_order(), 2);
            assert_eq!(d.cosets()[base].len(), 2);
        }
    }
}
