//! Algebra of double forms and the curvature tensors built from them.
//!
//! The crate is organised bottom-up:
//!
//! - [`combinatorics`]: multi-indices, permutation signs, the generalized Kronecker delta.
//! - [`doubleform`]: dense `(p,q)` double forms in an orthonormal frame and their products,
//!   contractions and Hodge star.
//! - [`curvature`]: algebraic curvature tensors, the double-dual hierarchy `*R*_p`, the
//!   `(p,q)`-curvature tensors, Lovelock tensors, decompositions and p-curvatures.
//! - [`geometry`]: coordinate charts, derivative engines, frame curvature, covariant
//!   derivatives, divergence and the second Bianchi sum.
//! - [`verify`]: brute-force oracles and the registry of identity checks.
//!
//! Every algebraic routine is generic over [`Scalar`], so the same code runs in
//! double precision, in exact rational arithmetic and on dual numbers.

#![allow(clippy::needless_range_loop)]

pub mod combinatorics;
pub mod curvature;
pub mod doubleform;
pub mod dual;
pub mod error;
pub mod geometry;
pub mod random;
pub mod scalar;
pub mod verify;

pub use combinatorics::MultiIndex;
pub use curvature::{AlgebraicCurvature, CurvatureHierarchy, DecompositionResult};
pub use doubleform::DoubleForm;
pub use dual::Dual;
pub use error::{Error, Result};
pub use geometry::{FramedCurvature, MetricChart};
pub use scalar::{Rational, Real, Scalar};
pub use verify::{IdentityCheck, VerificationReport};

/// Largest ambient dimension a [`MultiIndex`] can describe.
pub const MAX_DIM: usize = 16;
