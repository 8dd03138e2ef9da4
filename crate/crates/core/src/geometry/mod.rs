//! Chart-based Riemannian geometry: metrics in coordinates, curvature in a moving
//! orthonormal frame, covariant derivatives, divergence and the second Bianchi sum.
//!
//! The moving frame is Gram–Schmidt of the coordinate basis in index order. Frame
//! quantities differentiated along the frame use dual numbers pushed through the
//! whole pipeline, or central differences as a cross-check.

mod catalog;
mod covariant;
mod engine;
mod fields;
mod pipeline;

pub use catalog::{
    perturbed_flat_polynomial, Expectations, MetricSpec, PolyTerm, PolynomialMetric, MAX_CHART_DIM,
    MODEL_NAMES,
};
pub use covariant::{
    bianchi_sum_d, bianchi_sum_of_family, covariant_derivative, divergence_delta,
    divergence_of_family, star_delta_star, star_delta_star_sign, DifferentiationMode,
};
pub use engine::{metric_derivatives, DerivativeEngine, MetricDerivs, DEFAULT_FD_STEP};
pub use fields::CurvatureField;

use serde::Serialize;
use serde_json::Value;

use crate::curvature::{AlgebraicCurvature, ALGEBRAIC_TOL};
use crate::dual::Dual;
use crate::error::{ensure, Result};
use crate::random::CurvRng;
use crate::scalar::Scalar;
use pipeline::{connection_from, framed, gram_schmidt, invert};

/// A metric on a coordinate chart together with the engine supplying its derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricChart {
    spec: MetricSpec,
    resolved: MetricSpec,
    engine: DerivativeEngine,
}

impl MetricSpec {
    /// Closed-form curvature tensor in the Gram–Schmidt frame, for constant-curvature
    /// models and products of them. Radii enter exactly (a finite double is a dyadic rational).
    pub fn exact_curvature<S: Scalar>(&self) -> Option<Result<AlgebraicCurvature<S>>> {
        let k = |radius: f64, sign: i64| {
            let r = S::from_f64(radius);
            S::from_i64(sign) / (r.clone() * r)
        };
        Some(match self {
            MetricSpec::Euclidean { n } => AlgebraicCurvature::flat(*n),
            MetricSpec::Sphere { n, radius } => AlgebraicCurvature::constant(*n, k(*radius, 1)),
            MetricSpec::Hyperbolic { n, radius } => {
                AlgebraicCurvature::constant(*n, k(*radius, -1))
            }
            MetricSpec::SpherePolar { radius } => AlgebraicCurvature::constant(2, k(*radius, 1)),
            MetricSpec::Product { factors } => {
                let parts: Option<Result<Vec<_>>> =
                    factors.iter().map(|f| f.exact_curvature()).collect();
                parts?.and_then(|p| AlgebraicCurvature::product(&p))
            }
            MetricSpec::Polynomial(_) | MetricSpec::PerturbedFlat { .. } => return None,
        })
    }
}

impl MetricChart {
    pub fn new(spec: MetricSpec, engine: DerivativeEngine) -> Result<Self> {
        spec.validate()?;
        engine.validate()?;
        let resolved = spec.resolve();
        Ok(MetricChart {
            spec,
            resolved,
            engine,
        })
    }

    pub fn from_config(config: &Value, engine: DerivativeEngine) -> Result<Self> {
        Self::new(MetricSpec::from_config(config)?, engine)
    }

    pub fn with_engine(&self, engine: DerivativeEngine) -> Result<Self> {
        Self::new(self.spec.clone(), engine)
    }

    pub fn n(&self) -> usize {
        self.spec.dim()
    }

    pub fn spec(&self) -> &MetricSpec {
        &self.spec
    }

    pub fn engine(&self) -> DerivativeEngine {
        self.engine
    }

    /// Always 3: every engine supplies third derivatives.
    pub fn max_order(&self) -> usize {
        3
    }

    pub fn expectations(&self) -> Option<Expectations> {
        self.spec.expectations()
    }

    pub fn sample_point(&self, rng: &mut CurvRng) -> Vec<f64> {
        self.spec.sample_point(rng)
    }

    /// `g_ij(x)`, rejected unless symmetric positive definite.
    pub fn metric(&self, x: &[f64]) -> Result<Vec<Vec<f64>>> {
        self.spec.check_point(x)?;
        let g = self.resolved.metric(x);
        gram_schmidt(&g)?;
        Ok(g)
    }

    pub fn derivatives(&self, x: &[f64], order: usize) -> Result<MetricDerivs<f64>> {
        metric_derivatives(&self.resolved, self.engine, x, order)
    }

    fn riemann_tolerance(&self) -> f64 {
        match self.engine {
            DerivativeEngine::FiniteDifference { .. } => 1e-5,
            _ => ALGEBRAIC_TOL,
        }
    }
}

/// Curvature at a point in the Gram–Schmidt frame.
#[derive(Debug, Clone, Serialize)]
pub struct FramedCurvature {
    pub point: Vec<f64>,
    /// Rows are the frame vectors in coordinates.
    pub frame: Vec<Vec<f64>>,
    #[serde(skip)]
    pub r: AlgebraicCurvature<f64>,
    /// `connection[c][a][b] = g(∇_{E_a}E_b, E_c)`.
    pub connection: Vec<Vec<Vec<f64>>>,
}

impl FramedCurvature {
    /// `max |Fᵀ g F − I|`.
    pub fn frame_defect(&self, g: &[Vec<f64>]) -> f64 {
        let n = g.len();
        let mut worst = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                let mut s = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        s += self.frame[a][i] * g[i][j] * self.frame[b][j];
                    }
                }
                worst = worst.max((s - if a == b { 1.0 } else { 0.0 }).abs());
            }
        }
        worst
    }
}

/// `Γ^k_ij` indexed `[k][i][j]`.
pub fn christoffel(chart: &MetricChart, x: &[f64]) -> Result<Vec<Vec<Vec<f64>>>> {
    let d = chart.derivatives(x, 2)?;
    let ginv = invert(&d.g)?;
    Ok(pipeline::christoffel_from(&d, &ginv))
}

pub fn riemann_at(chart: &MetricChart, x: &[f64]) -> Result<FramedCurvature> {
    let d = chart.derivatives(x, 2)?;
    let fr = framed(&d)?;
    let n = chart.n();
    let dframe: Vec<Vec<Vec<f64>>> = (0..n)
        .map(|i| -> Result<Vec<Vec<f64>>> {
            let g: Vec<Vec<Dual<f64>>> =
                d.g.iter()
                    .zip(&d.dg[i])
                    .map(|(r, s)| r.iter().zip(s).map(|(&a, &b)| Dual::new(a, b)).collect())
                    .collect();
            Ok(gram_schmidt(&g)?
                .iter()
                .map(|row| row.iter().map(|v| v.eps).collect())
                .collect())
        })
        .collect::<Result<_>>()?;
    let connection = connection_from(&d.g, &fr.frame, &dframe, &fr.gamma);
    let r = AlgebraicCurvature::with_tolerance(fr.r, chart.riemann_tolerance())?;
    let out = FramedCurvature {
        point: x.to_vec(),
        frame: fr.frame,
        r,
        connection,
    };
    let defect = out.frame_defect(&d.g);
    ensure!(
        defect <= 1e-10,
        Numeric,
        "frame is not orthonormal (defect {defect:e})"
    );
    Ok(out)
}
