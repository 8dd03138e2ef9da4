//! Partial derivatives of the metric: closed forms, nested duals, finite differences.

use serde::{Deserialize, Serialize};

use super::catalog::{MetricSpec, PolynomialMetric};
use crate::dual::Dual;
use crate::error::{ensure, Error, Result};
use crate::scalar::Scalar;

/// Default base step of the finite-difference engine.
pub const DEFAULT_FD_STEP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "engine", rename_all = "snake_case")]
pub enum DerivativeEngine {
    Analytic,
    #[default]
    Dual,
    FiniteDifference {
        step: f64,
    },
}

impl DerivativeEngine {
    pub fn name(&self) -> &'static str {
        match self {
            DerivativeEngine::Analytic => "analytic",
            DerivativeEngine::Dual => "dual",
            DerivativeEngine::FiniteDifference { .. } => "finite_difference",
        }
    }

    pub fn parse(name: &str, step: Option<f64>) -> Result<Self> {
        let e = match name {
            "analytic" => DerivativeEngine::Analytic,
            "dual" => DerivativeEngine::Dual,
            "fd" | "finite_difference" => DerivativeEngine::FiniteDifference {
                step: step.unwrap_or(DEFAULT_FD_STEP),
            },
            other => {
                return Err(Error::Config(format!(
                    "unknown derivative engine `{other}`"
                )))
            }
        };
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<()> {
        if let DerivativeEngine::FiniteDifference { step } = self {
            check_step(*step)?;
        }
        Ok(())
    }
}

pub(crate) fn check_step(h: f64) -> Result<()> {
    ensure!(
        h.is_finite() && h >= 1e-7,
        Config,
        "finite-difference step {h:e} too small (minimum 1e-7)"
    );
    ensure!(
        h <= 1e-2,
        Config,
        "finite-difference step {h:e} too large (maximum 1e-2)"
    );
    Ok(())
}

/// `g`, `∂g`, `∂²g` and optionally `∂³g` at a point; derivative indices come first.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricDerivs<T> {
    pub g: Vec<Vec<T>>,
    pub dg: Vec<Vec<Vec<T>>>,
    pub ddg: Vec<Vec<Vec<Vec<T>>>>,
    /// Empty unless third derivatives were requested.
    pub dddg: Vec<Vec<Vec<Vec<Vec<T>>>>>,
}

impl<T: Scalar> MetricDerivs<T> {
    fn zeros(n: usize, order: usize) -> Self {
        let m = || vec![vec![T::zero(); n]; n];
        MetricDerivs {
            g: m(),
            dg: (0..n).map(|_| m()).collect(),
            ddg: (0..n).map(|_| (0..n).map(|_| m()).collect()).collect(),
            dddg: if order >= 3 {
                (0..n)
                    .map(|_| (0..n).map(|_| (0..n).map(|_| m()).collect()).collect())
                    .collect()
            } else {
                Vec::new()
            },
        }
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn order(&self) -> usize {
        if self.dddg.is_empty() {
            2
        } else {
            3
        }
    }
}

impl MetricDerivs<f64> {
    /// Moves the jet along `e_i` to first order: `g + ε∂_i g`, `∂g + ε∂_i∂g`, `∂²g + ε∂_i∂²g`.
    pub fn push(&self, i: usize) -> Result<MetricDerivs<Dual<f64>>> {
        ensure!(
            self.order() >= 3,
            Precondition,
            "pushing a metric jet needs third derivatives"
        );
        let lift2 = |a: &Vec<Vec<f64>>, b: &Vec<Vec<f64>>| -> Vec<Vec<Dual<f64>>> {
            a.iter()
                .zip(b)
                .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| Dual::new(x, y)).collect())
                .collect()
        };
        let n = self.n();
        Ok(MetricDerivs {
            g: lift2(&self.g, &self.dg[i]),
            dg: (0..n)
                .map(|j| lift2(&self.dg[j], &self.ddg[i][j]))
                .collect(),
            ddg: (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| lift2(&self.ddg[j][k], &self.dddg[i][j][k]))
                        .collect()
                })
                .collect(),
            dddg: Vec::new(),
        })
    }

    /// Largest absolute entry over all orders.
    pub fn max_abs(&self) -> f64 {
        let flat = self
            .g
            .iter()
            .flatten()
            .chain(self.dg.iter().flatten().flatten())
            .chain(self.ddg.iter().flatten().flatten().flatten())
            .chain(self.dddg.iter().flatten().flatten().flatten().flatten());
        flat.fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_difference(&self, other: &MetricDerivs<f64>) -> f64 {
        let mut worst = 0.0f64;
        let mut upd = |a: f64, b: f64| worst = worst.max((a - b).abs());
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                upd(self.g[a][b], other.g[a][b]);
                for i in 0..n {
                    upd(self.dg[i][a][b], other.dg[i][a][b]);
                    for j in 0..n {
                        upd(self.ddg[i][j][a][b], other.ddg[i][j][a][b]);
                        if !self.dddg.is_empty() && !other.dddg.is_empty() {
                            for k in 0..n {
                                upd(self.dddg[i][j][k][a][b], other.dddg[i][j][k][a][b]);
                            }
                        }
                    }
                }
            }
        }
        worst
    }
}

/// Metric jet up to `order` (2 or 3) with the chosen engine.
pub fn metric_derivatives(
    spec: &MetricSpec,
    engine: DerivativeEngine,
    x: &[f64],
    order: usize,
) -> Result<MetricDerivs<f64>> {
    ensure!(
        order == 2 || order == 3,
        Input,
        "derivative order must be 2 or 3, got {order}"
    );
    spec.check_point(x)?;
    let d = match engine {
        DerivativeEngine::Analytic => analytic(spec, x, order),
        DerivativeEngine::Dual => dual_engine(spec, x, order),
        DerivativeEngine::FiniteDifference { step } => {
            check_step(step)?;
            finite_difference(spec, x, order, step)
        }
    };
    let all_finite = d.g.iter().flatten().all(|v| v.is_finite())
        && d.ddg
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .all(|v| v.is_finite());
    ensure!(
        all_finite,
        Numeric,
        "metric derivatives are not finite at {x:?}"
    );
    Ok(d)
}

fn symmetrize_fill<T: Clone>(
    d: &mut MetricDerivs<T>,
    n: usize,
    order: usize,
    mut at: impl FnMut(&[usize]) -> Vec<Vec<T>>,
) {
    for i in 0..n {
        for j in i..n {
            if order >= 3 {
                for k in j..n {
                    let v = at(&[i, j, k]);
                    for (a, b, c) in [
                        (i, j, k),
                        (i, k, j),
                        (j, i, k),
                        (j, k, i),
                        (k, i, j),
                        (k, j, i),
                    ] {
                        d.dddg[a][b][c] = v.clone();
                    }
                }
            }
            let v = at(&[i, j]);
            d.ddg[i][j] = v.clone();
            d.ddg[j][i] = v;
        }
        d.dg[i] = at(&[i]);
    }
    d.g = at(&[]);
}

// ---------------------------------------------------------------------------
// Closed forms

fn analytic(spec: &MetricSpec, x: &[f64], order: usize) -> MetricDerivs<f64> {
    let n = spec.dim();
    let mut d = MetricDerivs::zeros(n, order);
    fill_analytic(spec, x, &mut d, 0, order);
    d
}

fn fill_analytic(
    spec: &MetricSpec,
    x: &[f64],
    d: &mut MetricDerivs<f64>,
    off: usize,
    order: usize,
) {
    let n = spec.dim();
    match spec {
        MetricSpec::Euclidean { .. } => {
            for i in 0..n {
                d.g[off + i][off + i] = 1.0;
            }
        }
        MetricSpec::Sphere { radius, .. } | MetricSpec::Hyperbolic { radius, .. } => {
            let sigma = if matches!(spec, MetricSpec::Sphere { .. }) {
                1.0
            } else {
                -1.0
            };
            let r2 = radius * radius;
            let u = r2 + sigma * x.iter().map(|v| v * v).sum::<f64>();
            let c = 4.0 * r2 * r2;
            let psi = c / (u * u);
            let psi1 = -2.0 * sigma * c / u.powi(3);
            let psi2 = 6.0 * c / u.powi(4);
            let psi3 = -24.0 * sigma * c / u.powi(5);
            let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
            for a in 0..n {
                let (aa, bb) = (off + a, off + a);
                d.g[aa][bb] = psi;
                for i in 0..n {
                    d.dg[off + i][aa][bb] = 2.0 * psi1 * x[i];
                    for j in 0..n {
                        d.ddg[off + i][off + j][aa][bb] =
                            4.0 * psi2 * x[i] * x[j] + 2.0 * psi1 * delta(i, j);
                        if order >= 3 {
                            for k in 0..n {
                                d.dddg[off + i][off + j][off + k][aa][bb] =
                                    8.0 * psi3 * x[i] * x[j] * x[k]
                                        + 4.0
                                            * psi2
                                            * (delta(i, k) * x[j]
                                                + delta(j, k) * x[i]
                                                + delta(i, j) * x[k]);
                            }
                        }
                    }
                }
            }
        }
        MetricSpec::SpherePolar { radius } => {
            let r2 = radius * radius;
            let (s, c) = x[0].sin_cos();
            let (t0, t1) = (off, off + 1);
            d.g[t0][t0] = r2;
            d.g[t1][t1] = r2 * s * s;
            // d/dθ of sin²θ: sin2θ, 2cos2θ, −4sin2θ
            d.dg[t0][t1][t1] = r2 * 2.0 * s * c;
            d.ddg[t0][t0][t1][t1] = r2 * 2.0 * (2.0 * x[0]).cos();
            if order >= 3 {
                d.dddg[t0][t0][t0][t1][t1] = -r2 * 4.0 * (2.0 * x[0]).sin();
            }
        }
        MetricSpec::Product { factors } => {
            let mut o = 0;
            for f in factors {
                let m = f.dim();
                fill_analytic(f, &x[o..o + m], d, off + o, order);
                o += m;
            }
        }
        MetricSpec::Polynomial(p) => fill_polynomial(p, x, d, off, order),
        MetricSpec::PerturbedFlat { .. } => fill_analytic(&spec.resolve(), x, d, off, order),
    }
}

/// `∂^α x^m` where `α` counts how often each variable is differentiated.
fn monomial_derivative(m: &[u32], x: &[f64], alpha: &[u32]) -> f64 {
    let mut v = 1.0;
    for k in 0..m.len() {
        if alpha[k] > m[k] {
            return 0.0;
        }
        for t in 0..alpha[k] {
            v *= (m[k] - t) as f64;
        }
        v *= x[k].powi((m[k] - alpha[k]) as i32);
    }
    v
}

fn fill_polynomial(
    p: &PolynomialMetric,
    x: &[f64],
    d: &mut MetricDerivs<f64>,
    off: usize,
    order: usize,
) {
    let n = p.n;
    for i in 0..n {
        d.g[off + i][off + i] += 1.0;
    }
    let add = |i: usize, j: usize, slot: &mut dyn FnMut(usize, usize, f64), v: f64| {
        slot(off + i, off + j, v);
        if i != j {
            slot(off + j, off + i, v);
        }
    };
    for t in &p.coefficients {
        let c = p.epsilon * t.value;
        let mut alpha = vec![0u32; n];
        add(
            t.i,
            t.j,
            &mut |a, b, v| d.g[a][b] += v,
            c * monomial_derivative(&t.monomial, x, &alpha),
        );
        for u in 0..n {
            alpha[u] += 1;
            let v1 = c * monomial_derivative(&t.monomial, x, &alpha);
            add(t.i, t.j, &mut |a, b, v| d.dg[off + u][a][b] += v, v1);
            for w in 0..n {
                alpha[w] += 1;
                let v2 = c * monomial_derivative(&t.monomial, x, &alpha);
                add(
                    t.i,
                    t.j,
                    &mut |a, b, v| d.ddg[off + u][off + w][a][b] += v,
                    v2,
                );
                if order >= 3 {
                    for z in 0..n {
                        alpha[z] += 1;
                        let v3 = c * monomial_derivative(&t.monomial, x, &alpha);
                        add(
                            t.i,
                            t.j,
                            &mut |a, b, v| d.dddg[off + u][off + w][off + z][a][b] += v,
                            v3,
                        );
                        alpha[z] -= 1;
                    }
                }
                alpha[w] -= 1;
            }
            alpha[u] -= 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Nested dual numbers

type D3 = Dual<Dual<Dual<f64>>>;

fn dual_point(x: &[f64], k: usize, l: usize, m: usize) -> Vec<D3> {
    let ind = |b: bool| if b { 1.0 } else { 0.0 };
    x.iter()
        .enumerate()
        .map(|(i, &xi)| {
            Dual::new(
                Dual::new(Dual::new(xi, ind(i == m)), Dual::new(ind(i == l), 0.0)),
                Dual::new(Dual::new(ind(i == k), 0.0), Dual::constant(0.0)),
            )
        })
        .collect()
}

fn dual_engine(spec: &MetricSpec, x: &[f64], order: usize) -> MetricDerivs<f64> {
    let n = spec.dim();
    let resolved = spec.resolve();
    let mut d = MetricDerivs::zeros(n, order);
    let eval =
        |k: usize, l: usize, m: usize| -> Vec<Vec<D3>> { resolved.metric(&dual_point(x, k, l, m)) };
    let pick = |g: &Vec<Vec<D3>>, f: &dyn Fn(&D3) -> f64| -> Vec<Vec<f64>> {
        g.iter().map(|row| row.iter().map(f).collect()).collect()
    };
    for i in 0..n {
        for j in i..n {
            if order >= 3 {
                for k in j..n {
                    let v = pick(&eval(i, j, k), &|z| z.eps.eps.eps);
                    for (a, b, c) in [
                        (i, j, k),
                        (i, k, j),
                        (j, i, k),
                        (j, k, i),
                        (k, i, j),
                        (k, j, i),
                    ] {
                        d.dddg[a][b][c] = v.clone();
                    }
                }
            }
            let v = pick(&eval(i, j, 0), &|z| z.eps.eps.re);
            d.ddg[i][j] = v.clone();
            d.ddg[j][i] = v;
        }
        let g = eval(i, 0, 0);
        d.dg[i] = pick(&g, &|z| z.eps.re.re);
        if i == 0 {
            d.g = pick(&g, &|z| z.re.re.re);
        }
    }
    d
}

// ---------------------------------------------------------------------------
// Finite differences

fn fd_nested(
    f: &dyn Fn(&[f64]) -> Vec<Vec<f64>>,
    x: &[f64],
    dirs: &[usize],
    h: f64,
) -> Vec<Vec<f64>> {
    if dirs.is_empty() {
        return f(x);
    }
    let central = |step: f64| -> Vec<Vec<f64>> {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[dirs[0]] += step;
        xm[dirs[0]] -= step;
        let a = fd_nested(f, &xp, &dirs[1..], h);
        let b = fd_nested(f, &xm, &dirs[1..], h);
        a.iter()
            .zip(&b)
            .map(|(ra, rb)| {
                ra.iter()
                    .zip(rb)
                    .map(|(u, v)| (u - v) / (2.0 * step))
                    .collect()
            })
            .collect()
    };
    let coarse = central(h);
    let fine = central(h / 2.0);
    // One Richardson step removes the h² term.
    fine.iter()
        .zip(&coarse)
        .map(|(rf, rc)| {
            rf.iter()
                .zip(rc)
                .map(|(u, v)| (4.0 * u - v) / 3.0)
                .collect()
        })
        .collect()
}

/// Step for a derivative of total order `k`, balancing truncation against rounding.
pub(crate) fn fd_step(base: f64, k: usize) -> f64 {
    base.powf(3.0 / (k as f64 + 2.0))
}

fn finite_difference(spec: &MetricSpec, x: &[f64], order: usize, base: f64) -> MetricDerivs<f64> {
    let n = spec.dim();
    let resolved = spec.resolve();
    let f = |y: &[f64]| resolved.metric(y);
    let mut d = MetricDerivs::zeros(n, order);
    symmetrize_fill(&mut d, n, order, |dirs| {
        fd_nested(&f, x, dirs, fd_step(base, dirs.len().max(1)))
    });
    d
}
