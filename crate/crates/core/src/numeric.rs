//! Tolerant dense linear algebra for small dimensions (N ≤ 8), seeded
//! sampling of unit vectors and Haar-distributed subspaces, and the
//! quantized lookup index used to deduplicate floating-point matrices.
//!
//! All comparisons are absolute and entrywise against [`Tol::eq_tol`];
//! hashing for deduplication rounds entries to [`Tol::key_digits`] decimals,
//! a strictly coarser grid, and every hash hit is confirmed with an `eq_tol`
//! comparison.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Comparison and hashing tolerances.
///
/// `eq_tol` is the absolute entrywise comparison tolerance, `verify_tol` the
/// bound deviations are reported against, and `key_digits` the number of
/// decimals kept by the deduplication hash (the hash grid must be coarser
/// than `eq_tol`).
#[derive(Debug, Clone, Copy)]
pub struct Tol<S> {
    pub eq_tol: S,
    pub verify_tol: S,
    pub key_digits: u32,
}

impl<S: Real> Tol<S> {
    pub fn new(eq_tol: S, verify_tol: S, key_digits: u32) -> Result<Self> {
        if !(eq_tol > S::zero() && eq_tol < verify_tol) {
            return Err(Error::InvalidTolerance(format!(
                "need 0 < eq_tol < verify_tol, got eq_tol={eq_tol}, verify_tol={verify_tol}"
            )));
        }
        let grid = S::cst(10.0).powi(-(key_digits as i32));
        if grid <= eq_tol {
            return Err(Error::InvalidTolerance(format!(
                "hash grid 10^-{key_digits} must be coarser than eq_tol={eq_tol}"
            )));
        }
        Ok(Self { eq_tol, verify_tol, key_digits })
    }
}

impl Default for Tol<f64> {
    fn default() -> Self {
        Self { eq_tol: 1e-9, verify_tol: 1e-8, key_digits: 6 }
    }
}

impl Default for Tol<f32> {
    fn default() -> Self {
        Self { eq_tol: 1e-4, verify_tol: 1e-3, key_digits: 3 }
    }
}

/// Dense real vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S> {
    components: Vec<S>,
}

impl<S: Real> Vector<S> {
    /// Build a vector, rejecting non-finite entries.
    pub fn new(components: Vec<S>) -> Result<Self> {
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { components })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { components: vec![S::zero(); dim] }
    }

    pub fn from_f64s(components: &[f64]) -> Self {
        Self { components: components.iter().map(|&c| S::cst(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn as_slice(&self) -> &[S] {
        &self.components
    }

    pub fn norm(&self) -> S {
        self.components.iter().map(|&c| c * c).sum::<S>().sqrt()
    }

    pub fn scale(&self, factor: S) -> Self {
        Self { components: self.components.iter().map(|&c| c * factor).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// Largest absolute componentwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim(), other.dim());
        self.components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| (a - b).abs())
            .fold(S::zero(), S::max)
    }
}

impl<S> std::ops::Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.components[i]
    }
}

/// Standard inner product Σ aᵢbᵢ.
pub fn inner<S: Real>(a: &Vector<S>, b: &Vector<S>) -> Result<S> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: b.dim() });
    }
    Ok(dot(a.as_slice(), b.as_slice()))
}

pub(crate) fn dot<S: Real>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Real> Matrix<S> {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![S::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = S::one();
        }
        Self { dim, entries }
    }

    /// Build from rows, rejecting ragged or non-finite input.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            entries.extend_from_slice(row);
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows_f64(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim);
            entries.extend(row.iter().map(|&e| S::cst(e)));
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.entries[row * self.dim + col] = value;
    }

    /// Row-major flattened entries.
    pub fn as_slice(&self) -> &[S] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self { dim: n, entries }
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == S::zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j] + a * other.entries[k * n + j];
                }
            }
        }
        Self { dim: n, entries }
    }

    pub fn mul_vec(&self, v: &Vector<S>) -> Vector<S> {
        debug_assert_eq!(self.dim, v.dim());
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            out[i] = dot(&self.entries[i * n..(i + 1) * n], v.as_slice());
        }
        Vector { components: out }
    }

    pub fn trace(&self) -> S {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> S {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = S::one();
        for col in 0..n {
            let mut pivot = col;
            let mut best = a[col * n + col].abs();
            for row in col + 1..n {
                let v = a[row * n + col].abs();
                if v > best {
                    best = v;
                    pivot = row;
                }
            }
            if best == S::zero() {
                return S::zero();
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det = det * p;
            for row in col + 1..n {
                let f = a[row * n + col] / p;
                if f == S::zero() {
                    continue;
                }
                for j in col..n {
                    a[row * n + j] = a[row * n + j] - f * a[col * n + j];
                }
            }
        }
        det
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a - b).abs())
            .fold(S::zero(), S::max)
    }

    pub fn approx_eq(&self, other: &Self, eq_tol: S) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= eq_tol
    }
}

/// True iff `m` is orthogonal (MᵀM = I within `eq_tol`) with det +1.
pub fn is_special_orthogonal<S: Real>(m: &Matrix<S>, tol: Tol<S>) -> bool {
    let gram = m.transpose().mul_mat(m);
    if gram.max_abs_diff(&Matrix::identity(m.dim())) > tol.eq_tol {
        return false;
    }
    (m.det() - S::one()).abs() <= tol.eq_tol
}

/// Modified Gram–Schmidt with a second re-orthogonalization pass.
///
/// Errors with [`Error::DegenerateSubspace`] when the input is rank-deficient
/// within tolerance; rank is never silently reduced.
pub fn orthonormalize<S: Real>(vectors: &[Vector<S>], tol: Tol<S>) -> Result<Vec<Vector<S>>> {
    let mut basis: Vec<Vector<S>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        match mgs_residual(v, &basis, tol)? {
            Some(unit) => basis.push(unit),
            None => return Err(Error::DegenerateSubspace),
        }
    }
    Ok(basis)
}

/// Gram–Schmidt extension: like [`orthonormalize`] but skips dependent
/// candidates instead of erroring, stopping once `target_rank` vectors are
/// found. Candidates are consumed in input order (input order breaks ties).
pub fn orthonormalize_filtering<S: Real>(
    candidates: &[Vector<S>],
    target_rank: usize,
    tol: Tol<S>,
) -> Result<Vec<Vector<S>>> {
    let mut basis: Vec<Vector<S>> = Vec::with_capacity(target_rank);
    for v in candidates {
        if basis.len() == target_rank {
            break;
        }
        if let Some(unit) = mgs_residual(v, &basis, tol)? {
            basis.push(unit);
        }
    }
    if basis.len() < target_rank {
        return Err(Error::DegenerateSubspace);
    }
    Ok(basis)
}

/// Project `v` against `basis` twice (MGS + re-orthogonalization) and
/// normalize; `None` when the residual is dependent within tolerance.
fn mgs_residual<S: Real>(
    v: &Vector<S>,
    basis: &[Vector<S>],
    tol: Tol<S>,
) -> Result<Option<Vector<S>>> {
    if let Some(b) = basis.first() {
        if b.dim() != v.dim() {
            return Err(Error::DimensionMismatch { expected: b.dim(), got: v.dim() });
        }
    }
    let mut w = v.clone();
    for _ in 0..2 {
        for b in basis {
            let coeff = dot(w.as_slice(), b.as_slice());
            w = w.sub(&b.scale(coeff));
        }
    }
    let norm = w.norm();
    let threshold = tol.eq_tol * (S::one() + v.norm());
    if norm <= threshold {
        return Ok(None);
    }
    Ok(Some(w.scale(S::one() / norm)))
}

/// M-dimensional subspace of R^N given by an orthonormal basis.
#[derive(Debug, Clone)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Vec<Vector<S>>,
}

impl<S: Real> Subspace<S> {
    /// Validate and wrap an orthonormal basis (1 ≤ M ≤ N, Gram = I within
    /// `eq_tol`).
    pub fn new(basis: Vec<Vector<S>>, tol: Tol<S>) -> Result<Self> {
        let m = basis.len();
        if m == 0 {
            return Err(Error::InvalidDimension("subspace dimension must be >= 1".into()));
        }
        let n = basis[0].dim();
        if m > n {
            return Err(Error::InvalidDimension(format!(
                "subspace dimension {m} exceeds ambient dimension {n}"
            )));
        }
        for u in &basis {
            if u.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, got: u.dim() });
            }
        }
        for i in 0..m {
            for j in i..m {
                let target = if i == j { S::one() } else { S::zero() };
                let p = dot(basis[i].as_slice(), basis[j].as_slice());
                if (p - target).abs() > tol.eq_tol {
                    return Err(Error::Precondition(format!(
                        "basis is not orthonormal: <u{i},u{j}> = {p}"
                    )));
                }
            }
        }
        Ok(Self { ambient_dim: n, basis })
    }

    /// span(e_1, ..., e_m) in R^n.
    pub fn axis_aligned(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::InvalidDimension(format!(
                "need 1 <= m <= n, got m={m}, n={n}"
            )));
        }
        let basis = (0..m)
            .map(|i| {
                let mut v = Vector::zeros(n);
                v.components[i] = S::one();
                v
            })
            .collect();
        Ok(Self { ambient_dim: n, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    /// The projector P = Σ uᵢuᵢᵀ onto this subspace.
    pub fn projector(&self) -> Matrix<S> {
        let n = self.ambient_dim;
        let mut entries = vec![S::zero(); n * n];
        for u in &self.basis {
            for i in 0..n {
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j] + u[i] * u[j];
                }
            }
        }
        Matrix { dim: n, entries }
    }

    /// Orthogonal complement, extending the basis with coordinate axes.
    /// Errors for M = N (the complement would be zero-dimensional).
    pub fn orthogonal_complement(&self, tol: Tol<S>) -> Result<Subspace<S>> {
        let n = self.ambient_dim;
        let m = self.dim();
        if m == n {
            return Err(Error::InvalidDimension(
                "full space has a zero-dimensional complement".into(),
            ));
        }
        let mut candidates = self.basis.clone();
        for i in 0..n {
            let mut v = Vector::zeros(n);
            v.components[i] = S::one();
            candidates.push(v);
        }
        let full = orthonormalize_filtering(&candidates, n, tol)?;
        Ok(Subspace { ambient_dim: n, basis: full[m..].to_vec() })
    }
}

/// Uniform unit vector: normalized standard-Gaussian components from a
/// ChaCha8 stream seeded with `seed`. Pure function of `(dim, seed)`.
pub fn random_unit_vector<S: Real>(dim: usize, seed: u64) -> Result<Vector<S>> {
    if dim == 0 {
        return Err(Error::InvalidDimension("unit vector needs dim >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(gaussian_unit(dim, &mut rng))
}

fn gaussian_unit<S: Real>(dim: usize, rng: &mut ChaCha8Rng) -> Vector<S> {
    loop {
        let v = Vector {
            components: (0..dim).map(|_| S::sample_standard_normal(rng)).collect(),
        };
        let norm = v.norm();
        if norm > S::cst(1e-4) {
            return v.scale(S::one() / norm);
        }
        // astronomically rare: redraw from the same stream
    }
}

/// Haar-uniform M-dimensional subspace of R^N: orthonormalized Gaussian
/// sample, deterministic per seed.
pub fn random_subspace<S: Real>(n: usize, m: usize, seed: u64, tol: Tol<S>) -> Result<Subspace<S>> {
    if m == 0 || m > n {
        return Err(Error::InvalidDimension(format!(
            "need 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let sample: Vec<Vector<S>> = (0..m)
            .map(|_| Vector {
                components: (0..n).map(|_| S::sample_standard_normal(&mut rng)).collect(),
            })
            .collect();
        if let Ok(basis) = orthonormalize(&sample, tol) {
            return Subspace::new(basis, tol);
        }
    }
    Err(Error::DegenerateSubspace)
}

/// Hash index over flattened scalar slices, keyed on entries rounded to
/// `key_digits` decimals. Lookups probe the rounded key plus the alternate
/// roundings of any entry sitting within a guard band of a rounding
/// boundary, then confirm candidates entrywise within `eq_tol`, so elements
/// equal within `eq_tol` are never missed at hash-bucket boundaries.
#[derive(Debug)]
pub(crate) struct QuantIndex<S> {
    scale: S,
    guard: S,
    eq_tol: S,
    buckets: HashMap<Vec<i64>, Vec<usize>>,
}

impl<S: Real> QuantIndex<S> {
    pub fn new(tol: Tol<S>) -> Self {
        let scale = S::cst(10.0).powi(tol.key_digits as i32);
        Self {
            scale,
            guard: tol.eq_tol * scale * S::cst(4.0),
            eq_tol: tol.eq_tol,
            buckets: HashMap::new(),
        }
    }

    fn primary_key(&self, flat: &[S]) -> Result<Vec<i64>> {
        flat.iter()
            .map(|&x| (x * self.scale).round().to_i64().ok_or(Error::NonFinite))
            .collect()
    }

    /// Candidate keys: primary first, then boundary variants. `None` when
    /// too many entries are ambiguous (caller falls back to a linear scan).
    fn candidate_keys(&self, flat: &[S]) -> Result<Option<Vec<Vec<i64>>>> {
        let primary = self.primary_key(flat)?;
        let mut ambiguous: Vec<(usize, i64)> = Vec::new();
        for (i, &x) in flat.iter().enumerate() {
            let y = x * self.scale;
            let r = y.round();
            let offset = y - r;
            if (offset.abs() - S::cst(0.5)).abs() <= self.guard {
                let alt = primary[i] + if offset >= S::zero() { 1 } else { -1 };
                ambiguous.push((i, alt));
            }
        }
        if ambiguous.len() > 6 {
            return Ok(None);
        }
        let mut keys = vec![primary];
        for (i, alt) in ambiguous {
            for k in 0..keys.len() {
                let mut variant = keys[k].clone();
                variant[i] = alt;
                keys.push(variant);
            }
        }
        Ok(Some(keys))
    }

    /// Index of a stored slice equal to `flat` within `eq_tol`, if any.
    /// `resolve` maps a stored index back to its flattened entries.
    pub fn find<'a, F>(&self, flat: &[S], resolve: F) -> Result<Option<usize>>
    where
        F: Fn(usize) -> &'a [S],
        S: 'a,
    {
        let confirm = |idx: usize| -> bool {
            let stored = resolve(idx);
            stored.len() == flat.len()
                && stored
                    .iter()
                    .zip(flat)
                    .all(|(&a, &b)| (a - b).abs() <= self.eq_tol)
        };
        match self.candidate_keys(flat)? {
            Some(keys) => {
                for key in keys {
                    if let Some(bucket) = self.buckets.get(&key) {
                        for &idx in bucket {
                            if confirm(idx) {
                                return Ok(Some(idx));
                            }
                        }
                    }
                }
                Ok(None)
            }
            None => {
                // degenerate quantization; scan everything
                let total: usize = self.buckets.values().map(Vec::len).sum();
                for idx in 0..total {
                    if confirm(idx) {
                        return Ok(Some(idx));
                    }
                }
                Ok(None)
            }
        }
    }

    /// Insert a slice under its primary key.
    pub fn insert(&mut self, flat: &[S], idx: usize) -> Result<()> {
        let key = self.primary_key(flat)?;
        self.buckets.entry(key).or_default().push(idx);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(cs: &[f64]) -> Vector<f64> {
        Vector::from_f64s(cs)
    }

    #[test]
    fn inner_orthogonal_axes() {
        assert_eq!(inner(&v(&[1.0, 0.0, 0.0]), &v(&[0.0, 1.0, 0.0])).unwrap(), 0.0);
    }

    #[test]
    fn inner_ones() {
        assert_eq!(inner(&v(&[1.0, 1.0]), &v(&[1.0, 1.0])).unwrap(), 2.0);
    }

    #[test]
    fn inner_hand_arithmetic() {
        // 1*4 + 2*5 + 3*6
        assert_eq!(inner(&v(&[1.0, 2.0, 3.0]), &v(&[4.0, 5.0, 6.0])).unwrap(), 32.0);
    }

    #[test]
    fn inner_dim_mismatch() {
        assert!(matches!(
            inner(&v(&[1.0]), &v(&[1.0, 2.0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn vector_rejects_nan() {
        assert!(matches!(Vector::new(vec![f64::NAN]), Err(Error::NonFinite)));
    }

    #[test]
    fn orthonormalize_rescales() {
        let tol = Tol::default();
        let basis = orthonormalize(&[v(&[2.0, 0.0, 0.0])], tol).unwrap();
        assert!(basis[0].max_abs_diff(&v(&[1.0, 0.0, 0.0])) <= tol.eq_tol);
    }

    #[test]
    fn orthonormalize_pair() {
        let tol = Tol::default();
        let basis = orthonormalize(&[v(&[1.0, 1.0, 0.0]), v(&[1.0, 0.0, 0.0])], tol).unwrap();
        assert_eq!(basis.len(), 2);
        for i in 0..2 {
            assert!((basis[i].norm() - 1.0).abs() <= tol.eq_tol);
        }
        assert!(inner(&basis[0], &basis[1]).unwrap().abs() <= tol.eq_tol);
    }

    #[test]
    fn orthonormalize_dependent_errors() {
        let tol = Tol::default();
        assert!(matches!(
            orthonormalize(&[v(&[1.0, 0.0]), v(&[2.0, 0.0])], tol),
            Err(Error::DegenerateSubspace)
        ));
    }

    #[test]
    fn unit_vector_dim_one_is_sign() {
        for seed in 0..8 {
            let u = random_unit_vector::<f64>(1, seed).unwrap();
            assert!((u[0].abs() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn unit_vector_deterministic() {
        let a = random_unit_vector::<f64>(3, 7).unwrap();
        let b = random_unit_vector::<f64>(3, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_vector_dim_zero_errors() {
        assert!(random_unit_vector::<f64>(0, 1).is_err());
    }

    #[test]
    fn unit_vector_coordinate_means_vanish() {
        // Monte-Carlo oracle: 10^4 uniform samples on S^3, per-coordinate
        // mean within 0.05 of 0.
        let n = 10_000;
        let mut means = [0.0f64; 4];
        for seed in 0..n {
            let u = random_unit_vector::<f64>(4, seed).unwrap();
            for (m, i) in means.iter_mut().zip(0..4) {
                *m += u[i];
            }
        }
        for m in means {
            assert!((m / n as f64).abs() < 0.05);
        }
    }

    #[test]
    fn random_subspace_full_rank_gram_is_identity() {
        let tol = Tol::default();
        let s = random_subspace::<f64>(3, 3, 11, tol).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                let p = inner(&s.basis()[i], &s.basis()[j]).unwrap();
                assert!((p - target).abs() <= tol.eq_tol);
            }
        }
    }

    #[test]
    fn random_subspace_deterministic() {
        let tol = Tol::default();
        let a = random_subspace::<f64>(2, 1, 5, tol).unwrap();
        let b = random_subspace::<f64>(2, 1, 5, tol).unwrap();
        assert_eq!(a.basis()[0], b.basis()[0]);
    }

    #[test]
    fn random_subspace_orthonormal_pair() {
        let tol = Tol::default();
        let s = random_subspace::<f64>(4, 2, 3, tol).unwrap();
        assert!((s.basis()[0].norm() - 1.0).abs() <= tol.eq_tol);
        assert!((s.basis()[1].norm() - 1.0).abs() <= tol.eq_tol);
        assert!(inner(&s.basis()[0], &s.basis()[1]).unwrap().abs() <= tol.eq_tol);
    }

    #[test]
    fn random_subspace_rejects_bad_dims() {
        let tol = Tol::<f64>::default();
        assert!(random_subspace::<f64>(3, 0, 1, tol).is_err());
        assert!(random_subspace::<f64>(3, 4, 1, tol).is_err());
    }

    #[test]
    fn projector_idempotent_and_symmetric() {
        let tol = Tol::default();
        for seed in 0..10 {
            let s = random_subspace::<f64>(5, 2, seed, tol).unwrap();
            let p = s.projector();
            assert!(p.mul_mat(&p).max_abs_diff(&p) <= tol.verify_tol);
            assert!(p.transpose().max_abs_diff(&p) <= tol.verify_tol);
        }
    }

    #[test]
    fn special_orthogonal_identity() {
        assert!(is_special_orthogonal(&Matrix::<f64>::identity(3), Tol::<f64>::default()));
    }

    #[test]
    fn special_orthogonal_rejects_reflection() {
        let m = Matrix::<f64>::from_rows_f64(&[
            &[1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0],
            &[0.0, 0.0, -1.0],
        ]);
        assert!(!is_special_orthogonal(&m, Tol::default()));
    }

    #[test]
    fn special_orthogonal_accepts_rotation() {
        let t = 30f64.to_radians();
        let m = Matrix::<f64>::from_rows_f64(&[&[t.cos(), -t.sin()], &[t.sin(), t.cos()]]);
        assert!(is_special_orthogonal(&m, Tol::default()));
    }

    #[test]
    fn determinant_small_cases() {
        let m = Matrix::<f64>::from_rows_f64(&[&[2.0, 0.0], &[0.0, 3.0]]);
        assert!((m.det() - 6.0).abs() < 1e-12);
        let r = Matrix::<f64>::from_rows_f64(&[&[0.0, -1.0], &[1.0, 0.0]]);
        assert!((r.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complement_splits_space() {
        let tol = Tol::default();
        let s = random_subspace::<f64>(5, 2, 9, tol).unwrap();
        let c = s.orthogonal_complement(tol).unwrap();
        assert_eq!(c.dim(), 3);
        for u in s.basis() {
            for w in c.basis() {
                assert!(inner(u, w).unwrap().abs() <= tol.eq_tol);
            }
        }
    }

    #[test]
    fn quant_index_finds_within_tolerance() {
        let tol = Tol::<f64>::default();
        let stored = [vec![0.5, -1.0, 0.0], vec![0.25, 0.75, 1.0]];
        let mut index = QuantIndex::new(tol);
        for (i, s) in stored.iter().enumerate() {
            index.insert(s, i).unwrap();
        }
        let query = [0.5 + 1e-13, -1.0 - 1e-13, 1e-13];
        let hit = index.find(&query, |i| stored[i].as_slice()).unwrap();
        assert_eq!(hit, Some(0));
        let miss = index.find(&[0.5, -1.0, 0.1], |i| stored[i].as_slice()).unwrap();
        assert_eq!(miss, None);
    }

    #[test]
    fn quant_index_survives_rounding_boundary() {
        let tol = Tol::<f64>::default();
        // entry exactly on a 1e-6 rounding boundary; the two perturbed
        // copies round to different keys
        let center = 0.1234565;
        let stored = [vec![center - 2e-10]];
        let mut index = QuantIndex::new(tol);
        index.insert(&stored[0], 0).unwrap();
        let hit = index
            .find(&[center + 2e-10], |i| stored[i].as_slice())
            .unwrap();
        assert_eq!(hit, Some(0));
    }

    #[test]
    fn tol_validation() {
        assert!(Tol::new(1e-9, 1e-8, 6).is_ok());
        assert!(Tol::new(1e-8, 1e-9, 6).is_err());
        assert!(Tol::new(1e-9, 1e-8, 10).is_err()); // grid finer than eq_tol
    }
}
