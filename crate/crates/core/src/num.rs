//! Scalar abstraction: every numeric module is generic over [`Real`],
//! with `f64` as the concrete type used by the harness and CLI.

use std::fmt::{Debug, Display, LowerExp};
use std::num::ParseFloatError;
use std::str::FromStr;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use rand::distributions::uniform::SampleUniform;
use rand::Rng;
use rand_distr::StandardNormal;

/// Floating-point scalar: f32 or f64.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + SampleUniform
    + FromStr<Err = ParseFloatError>
    + Display
    + LowerExp
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Draw from the standard normal distribution.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Draw uniformly from `[0, 1)`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Lift an `f64` constant into this scalar type.
    fn of(value: f64) -> Self {
        Self::from_f64(value).expect("constant representable as Real")
    }
}

impl Real for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen()
    }
}

impl Real for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen()
    }
}
