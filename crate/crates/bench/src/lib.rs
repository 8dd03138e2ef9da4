//! Shared fixtures for the criterion benchmarks.

use curv_core::curvature::random_algebraic_curvature;
use curv_core::{AlgebraicCurvature, Rational};

pub const SEED: u64 = 0x5eed;

pub fn float_tensor(n: usize) -> AlgebraicCurvature<f64> {
    random_algebraic_curvature(SEED, n, 3).expect("valid dimension")
}

pub fn rational_tensor(n: usize) -> AlgebraicCurvature<Rational> {
    random_algebraic_curvature(SEED, n, 3).expect("valid dimension")
}
