//! Scalar abstraction: the toolkit is generic over the floating-point type.
//!
//! Everything downstream (polytopes, groups, projection sums) works for any
//! [`Real`]; `f64` is the type the default tolerances are calibrated for,
//! `f32` works with coarser tolerances.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Real scalar usable for all group and projection arithmetic: `f32` or `f64`.
pub trait Real:
    num_traits::Float + num_traits::FromPrimitive + std::iter::Sum + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Draw one standard-normal sample in this precision.
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Convert an `f64` constant (golden ratio, tolerances, ...) into `Self`.
    fn cst(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable")
    }
}

impl Real for f64 {
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

impl Real for f32 {
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}
