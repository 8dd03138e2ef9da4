//! Model metrics, their JSON configuration and closed-form expectations.

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{ensure, Error, Result};
use crate::random::{seeded, CurvRng};
use crate::scalar::Real;

/// Largest chart dimension accepted by the geometry layer.
pub const MAX_CHART_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub i: usize,
    pub j: usize,
    pub monomial: Vec<u32>,
    pub value: f64,
}

/// `g_ij = δ_ij + ε Σ value·x^monomial`, each term added to both `(i,j)` and `(j,i)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialMetric {
    pub n: usize,
    pub epsilon: f64,
    pub coefficients: Vec<PolyTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum MetricSpec {
    Euclidean {
        n: usize,
    },
    /// Stereographic chart, `g = 4r⁴/(r²+|x|²)² δ`.
    Sphere {
        n: usize,
        radius: f64,
    },
    /// Poincaré ball, `g = 4r⁴/(r²−|x|²)² δ`.
    Hyperbolic {
        n: usize,
        radius: f64,
    },
    /// Round 2-sphere in polar coordinates `(θ, φ)`.
    SpherePolar {
        radius: f64,
    },
    Product {
        factors: Vec<MetricSpec>,
    },
    Polynomial(PolynomialMetric),
    /// Seeded random polynomial perturbation of the flat metric.
    PerturbedFlat {
        n: usize,
        seed: u64,
        epsilon: f64,
        degree: u32,
    },
}

pub const MODEL_NAMES: &[(&str, &str)] = &[
    ("euclidean", "params: n"),
    ("sphere", "params: n, radius=1 (stereographic chart)"),
    (
        "hyperbolic",
        "params: n, radius=1 (Poincaré ball, sampled in |x| <= radius/2)",
    ),
    (
        "sphere_polar",
        "params: radius=1 (n = 2, coordinates (theta, phi))",
    ),
    ("product", "params: factors = [model configs]"),
    (
        "perturbed_flat",
        "params: n, seed=0, epsilon=0.05, degree=2",
    ),
    (
        "polynomial_metric",
        "top-level key: {n, epsilon, coefficients: [{i, j, monomial, value}]}",
    ),
];

fn param_usize(params: &Value, key: &str, default: Option<usize>) -> Result<usize> {
    match params.get(key) {
        Some(v) => v
            .as_u64()
            .map(|v| v as usize)
            .ok_or_else(|| Error::Config(format!("param `{key}` must be a non-negative integer"))),
        None => default.ok_or_else(|| Error::Config(format!("missing param `{key}`"))),
    }
}

fn param_f64(params: &Value, key: &str, default: f64) -> Result<f64> {
    match params.get(key) {
        Some(v) => v
            .as_f64()
            .ok_or_else(|| Error::Config(format!("param `{key}` must be a number"))),
        None => Ok(default),
    }
}

impl MetricSpec {
    /// Parses `{"model": name, "params": {...}}` or `{"polynomial_metric": {...}}`.
    pub fn from_config(v: &Value) -> Result<Self> {
        if let Some(poly) = v.get("polynomial_metric") {
            let p: PolynomialMetric = serde_json::from_value(poly.clone())
                .map_err(|e| Error::Config(format!("polynomial_metric: {e}")))?;
            let spec = MetricSpec::Polynomial(p);
            spec.validate()?;
            return Ok(spec);
        }
        let name = v.get("model").and_then(Value::as_str).ok_or_else(|| {
            Error::Config("expected a `model` name or a `polynomial_metric` object".into())
        })?;
        let empty = Value::Object(Default::default());
        let params = v.get("params").unwrap_or(&empty);
        let spec = match name {
            "euclidean" => MetricSpec::Euclidean {
                n: param_usize(params, "n", None)?,
            },
            "sphere" => MetricSpec::Sphere {
                n: param_usize(params, "n", None)?,
                radius: param_f64(params, "radius", 1.0)?,
            },
            "hyperbolic" => MetricSpec::Hyperbolic {
                n: param_usize(params, "n", None)?,
                radius: param_f64(params, "radius", 1.0)?,
            },
            "sphere_polar" => MetricSpec::SpherePolar {
                radius: param_f64(params, "radius", 1.0)?,
            },
            "product" => {
                let factors = params
                    .get("factors")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Config("product needs params.factors = [...]".into()))?;
                MetricSpec::Product {
                    factors: factors
                        .iter()
                        .map(MetricSpec::from_config)
                        .collect::<Result<_>>()?,
                }
            }
            "perturbed_flat" => MetricSpec::PerturbedFlat {
                n: param_usize(params, "n", None)?,
                seed: param_usize(params, "seed", Some(0))? as u64,
                epsilon: param_f64(params, "epsilon", 0.05)?,
                degree: param_usize(params, "degree", Some(2))? as u32,
            },
            other => return Err(Error::UnknownModel(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn dim(&self) -> usize {
        match self {
            MetricSpec::Euclidean { n }
            | MetricSpec::Sphere { n, .. }
            | MetricSpec::Hyperbolic { n, .. }
            | MetricSpec::PerturbedFlat { n, .. } => *n,
            MetricSpec::SpherePolar { .. } => 2,
            MetricSpec::Product { factors } => factors.iter().map(MetricSpec::dim).sum(),
            MetricSpec::Polynomial(p) => p.n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        ensure!(
            (1..=MAX_CHART_DIM).contains(&n),
            Config,
            "chart dimension {n} outside 1..={MAX_CHART_DIM}"
        );
        match self {
            MetricSpec::Sphere { radius, .. }
            | MetricSpec::Hyperbolic { radius, .. }
            | MetricSpec::SpherePolar { radius } => {
                ensure!(
                    radius.is_finite() && *radius > 0.0,
                    Config,
                    "radius must be positive, got {radius}"
                );
            }
            MetricSpec::Product { factors } => {
                ensure!(
                    !factors.is_empty(),
                    Config,
                    "product needs at least one factor"
                );
                for f in factors {
                    f.validate()?;
                }
            }
            MetricSpec::Polynomial(p) => {
                ensure!(p.epsilon.is_finite(), Config, "epsilon must be finite");
                for t in &p.coefficients {
                    ensure!(
                        t.i < p.n && t.j < p.n,
                        Config,
                        "coefficient index ({},{}) outside dimension {}",
                        t.i,
                        t.j,
                        p.n
                    );
                    ensure!(
                        t.monomial.len() == p.n,
                        Config,
                        "monomial needs {} exponents, got {}",
                        p.n,
                        t.monomial.len()
                    );
                    ensure!(
                        t.value.is_finite(),
                        Config,
                        "coefficient value must be finite"
                    );
                    ensure!(
                        t.monomial.iter().sum::<u32>() <= 12,
                        Config,
                        "monomial degree above 12"
                    );
                }
            }
            MetricSpec::PerturbedFlat {
                epsilon, degree, ..
            } => {
                ensure!(epsilon.is_finite(), Config, "epsilon must be finite");
                ensure!(
                    *degree >= 1 && *degree <= 4,
                    Config,
                    "degree must be in 1..=4, got {degree}"
                );
            }
            MetricSpec::Euclidean { .. } => {}
        }
        Ok(())
    }

    pub fn name(&self) -> &'static str {
        match self {
            MetricSpec::Euclidean { .. } => "euclidean",
            MetricSpec::Sphere { .. } => "sphere",
            MetricSpec::Hyperbolic { .. } => "hyperbolic",
            MetricSpec::SpherePolar { .. } => "sphere_polar",
            MetricSpec::Product { .. } => "product",
            MetricSpec::Polynomial(_) => "polynomial_metric",
            MetricSpec::PerturbedFlat { .. } => "perturbed_flat",
        }
    }

    /// Replaces seeded perturbations by their explicit polynomial.
    pub fn resolve(&self) -> MetricSpec {
        match self {
            MetricSpec::PerturbedFlat {
                n,
                seed,
                epsilon,
                degree,
            } => MetricSpec::Polynomial(perturbed_flat_polynomial(*n, *seed, *epsilon, *degree)),
            MetricSpec::Product { factors } => MetricSpec::Product {
                factors: factors.iter().map(|f| f.resolve()).collect(),
            },
            other => other.clone(),
        }
    }

    /// Constant sectional curvature, when the model has one.
    pub fn constant_curvature(&self) -> Option<f64> {
        match self {
            MetricSpec::Euclidean { .. } => Some(0.0),
            MetricSpec::Sphere { radius, .. } | MetricSpec::SpherePolar { radius } => {
                Some(1.0 / (radius * radius))
            }
            MetricSpec::Hyperbolic { radius, .. } => Some(-1.0 / (radius * radius)),
            MetricSpec::Product { factors } if factors.len() == 1 => {
                factors[0].constant_curvature()
            }
            _ => None,
        }
    }

    /// A sample point inside the well-conditioned part of the chart.
    pub fn sample_point(&self, rng: &mut CurvRng) -> Vec<f64> {
        match self {
            MetricSpec::SpherePolar { .. } => {
                vec![rng.gen_range(0.6..2.5), rng.gen_range(0.0..6.2)]
            }
            MetricSpec::Product { factors } => {
                factors.iter().flat_map(|f| f.sample_point(rng)).collect()
            }
            _ => {
                let n = self.dim();
                let scale = match self {
                    MetricSpec::Sphere { radius, .. } | MetricSpec::Hyperbolic { radius, .. } => {
                        *radius
                    }
                    _ => 1.0,
                };
                let bound = 0.5 * scale / (n as f64).sqrt();
                (0..n).map(|_| rng.gen_range(-bound..bound)).collect()
            }
        }
    }

    /// Rejects points outside the chart domain.
    pub fn check_point(&self, x: &[f64]) -> Result<()> {
        ensure!(
            x.len() == self.dim(),
            Input,
            "point has {} coordinates, chart has {}",
            x.len(),
            self.dim()
        );
        ensure!(
            x.iter().all(|v| v.is_finite()),
            Input,
            "point has non-finite coordinates"
        );
        match self {
            MetricSpec::Hyperbolic { radius, .. } => {
                let s: f64 = x.iter().map(|v| v * v).sum();
                ensure!(
                    s < radius * radius,
                    Range,
                    "point outside the Poincaré ball"
                );
            }
            MetricSpec::SpherePolar { .. } => {
                ensure!(
                    x[0].sin().abs() > 1e-6,
                    Range,
                    "polar chart is singular at the poles"
                );
            }
            MetricSpec::Product { factors } => {
                let mut off = 0;
                for f in factors {
                    let m = f.dim();
                    f.check_point(&x[off..off + m])?;
                    off += m;
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// `g_ij(x)` for any real scalar type (floats or nested duals).
    pub fn metric<T: Real>(&self, x: &[T]) -> Vec<Vec<T>> {
        let n = self.dim();
        let mut g = vec![vec![T::zero(); n]; n];
        self.fill_metric(x, &mut g, 0);
        g
    }

    fn fill_metric<T: Real>(&self, x: &[T], g: &mut [Vec<T>], off: usize) {
        let n = self.dim();
        match self {
            MetricSpec::Euclidean { .. } => {
                for i in 0..n {
                    g[off + i][off + i] = T::one();
                }
            }
            MetricSpec::Sphere { radius, .. } | MetricSpec::Hyperbolic { radius, .. } => {
                let sigma = if matches!(self, MetricSpec::Sphere { .. }) {
                    1.0
                } else {
                    -1.0
                };
                let s = x
                    .iter()
                    .fold(T::zero(), |acc, v| acc + v.clone() * v.clone());
                let r2 = T::from_f64(radius * radius);
                let den = r2.clone() + T::from_f64(sigma) * s;
                let phi = T::from_f64(4.0) * r2.clone() * r2 / (den.clone() * den);
                for i in 0..n {
                    g[off + i][off + i] = phi.clone();
                }
            }
            MetricSpec::SpherePolar { radius } => {
                let r2 = T::from_f64(radius * radius);
                let s = x[0].sin();
                g[off][off] = r2.clone();
                g[off + 1][off + 1] = r2 * s.clone() * s;
            }
            MetricSpec::Product { factors } => {
                let mut o = 0;
                for f in factors {
                    let m = f.dim();
                    f.fill_metric(&x[o..o + m], g, off + o);
                    o += m;
                }
            }
            MetricSpec::Polynomial(p) => {
                for i in 0..n {
                    g[off + i][off + i] = T::one();
                }
                let eps = T::from_f64(p.epsilon);
                for t in &p.coefficients {
                    let mut v = T::from_f64(t.value) * eps.clone();
                    for (k, &e) in t.monomial.iter().enumerate() {
                        for _ in 0..e {
                            v = v * x[k].clone();
                        }
                    }
                    g[off + t.i][off + t.j] = g[off + t.i][off + t.j].clone() + v.clone();
                    if t.i != t.j {
                        g[off + t.j][off + t.i] = g[off + t.j][off + t.i].clone() + v;
                    }
                }
            }
            MetricSpec::PerturbedFlat { .. } => self.resolve().fill_metric(x, g, off),
        }
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in lexicographic order.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Coefficients uniform in `[-1, 1]` for every `i <= j` and monomial of degree `1..=degree`.
pub fn perturbed_flat_polynomial(
    n: usize,
    seed: u64,
    epsilon: f64,
    degree: u32,
) -> PolynomialMetric {
    let mut rng = seeded(seed);
    let mut coefficients = Vec::new();
    for i in 0..n {
        for j in i..n {
            for d in 1..=degree {
                for m in monomials(n, d) {
                    coefficients.push(PolyTerm {
                        i,
                        j,
                        monomial: m,
                        value: rng.gen_range(-1.0..1.0),
                    });
                }
            }
        }
    }
    PolynomialMetric {
        n,
        epsilon,
        coefficients,
    }
}

/// Closed-form values a model must reproduce.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expectations {
    pub scal: f64,
    /// Ricci eigenvalue per factor, as `(dimension, value)`.
    pub ricci_blocks: Vec<(usize, f64)>,
    pub h4: Option<f64>,
    /// `s_p` for `p = 0..=n−2` (constant curvature only).
    pub s_p: Option<Vec<f64>>,
    /// `T_4 = t4 · g` (constant curvature only, `n >= 4`).
    pub t4: Option<f64>,
    pub self_dual: Option<bool>,
    pub anti_self_dual: Option<bool>,
}

impl MetricSpec {
    /// Closed forms for constant-curvature models and products of them.
    pub fn expectations(&self) -> Option<Expectations> {
        let blocks: Vec<(usize, f64)> = match self {
            MetricSpec::Product { factors } => factors
                .iter()
                .map(|f| f.constant_curvature().map(|k| (f.dim(), k)))
                .collect::<Option<_>>()?,
            _ => vec![(self.dim(), self.constant_curvature()?)],
        };
        let n = self.dim();
        let nf = n as f64;
        let scal = blocks
            .iter()
            .map(|&(m, k)| k * (m * m.saturating_sub(1)) as f64)
            .sum::<f64>();
        let ricci_blocks = blocks
            .iter()
            .map(|&(m, k)| (m, k * (m as f64 - 1.0)))
            .collect::<Vec<_>>();
        let norm_r2: f64 = blocks
            .iter()
            .map(|&(m, k)| k * k * (m * m.saturating_sub(1) / 2) as f64)
            .sum();
        let norm_ric2: f64 = ricci_blocks.iter().map(|&(m, l)| m as f64 * l * l).sum();
        let h4 = (n >= 4).then(|| norm_r2 - norm_ric2 + scal * scal / 4.0);
        let constant = blocks.len() == 1 || blocks.iter().all(|&(_, k)| k == 0.0);
        let k = blocks[0].1;
        let s_p = constant.then(|| {
            (0..=n.saturating_sub(2))
                .map(|p| k * ((n - p) * (n - p - 1)) as f64)
                .collect()
        });
        let t4 = (constant && n >= 4)
            .then(|| k * k * (nf - 1.0) * (nf - 2.0) * (nf - 3.0) * (nf - 4.0) / 4.0);
        let (self_dual, anti_self_dual) = if n == 4 {
            if constant {
                (Some(true), Some(k == 0.0))
            } else if blocks.len() == 2 && blocks[0].0 == 2 && blocks[1].0 == 2 {
                let (k1, k2) = (blocks[0].1, blocks[1].1);
                (Some(k1 == k2), Some(k1 == -k2))
            } else {
                (None, None)
            }
        } else {
            (None, None)
        };
        Some(Expectations {
            scal,
            ricci_blocks,
            h4,
            s_p,
            t4,
            self_dual,
            anti_self_dual,
        })
    }
}
