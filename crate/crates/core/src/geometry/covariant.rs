//! Covariant derivatives of frame fields, divergence and the second Bianchi sum.

use serde::{Deserialize, Serialize};

use super::engine::{check_step, DEFAULT_FD_STEP};
use super::fields::CurvatureField;
use super::pipeline::{connection_from, framed};
use super::MetricChart;
use crate::combinatorics::MultiIndex;
use crate::curvature::AlgebraicCurvature;
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Result};

/// How field components are differentiated along the frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum DifferentiationMode {
    /// Dual numbers pushed through the whole pipeline (needs third metric derivatives).
    #[default]
    Dual,
    /// Central differences of the field with one Richardson step.
    FiniteDifference { step: f64 },
}

impl DifferentiationMode {
    pub fn fd() -> Self {
        DifferentiationMode::FiniteDifference {
            step: DEFAULT_FD_STEP,
        }
    }
}

/// Field values, frame, Christoffel symbols and coordinate derivatives of field and frame.
struct Jet {
    value: DoubleForm<f64>,
    frame: Vec<Vec<f64>>,
    g: Vec<Vec<f64>>,
    gamma: Vec<Vec<Vec<f64>>>,
    dvalue: Vec<DoubleForm<f64>>,
    dframe: Vec<Vec<Vec<f64>>>,
}

fn eval_f64(
    chart: &MetricChart,
    field: &CurvatureField,
    x: &[f64],
) -> Result<(DoubleForm<f64>, Vec<Vec<f64>>)> {
    let d = chart.derivatives(x, 2)?;
    let fr = framed(&d)?;
    let t = field.eval(&AlgebraicCurvature::new_unchecked(fr.r))?;
    Ok((t, fr.frame))
}

fn jet(
    chart: &MetricChart,
    field: &CurvatureField,
    x: &[f64],
    mode: DifferentiationMode,
) -> Result<Jet> {
    let n = chart.n();
    match mode {
        DifferentiationMode::Dual => {
            let d = chart.derivatives(x, 3)?;
            let base = framed(&d)?;
            let value = field.eval(&AlgebraicCurvature::new_unchecked(base.r.clone()))?;
            let mut dvalue = Vec::with_capacity(n);
            let mut dframe = Vec::with_capacity(n);
            for i in 0..n {
                let pushed = framed(&d.push(i)?)?;
                let t = field.eval(&AlgebraicCurvature::new_unchecked(pushed.r))?;
                dvalue.push(t.map(|v| v.eps));
                dframe.push(
                    pushed
                        .frame
                        .iter()
                        .map(|row| row.iter().map(|v| v.eps).collect())
                        .collect(),
                );
            }
            Ok(Jet {
                value,
                frame: base.frame,
                g: d.g,
                gamma: base.gamma,
                dvalue,
                dframe,
            })
        }
        DifferentiationMode::FiniteDifference { step } => {
            check_step(step)?;
            let d = chart.derivatives(x, 2)?;
            let base = framed(&d)?;
            let value = field.eval(&AlgebraicCurvature::new_unchecked(base.r.clone()))?;
            let mut dvalue = Vec::with_capacity(n);
            let mut dframe = Vec::with_capacity(n);
            for i in 0..n {
                let shifted = |h: f64| -> Result<(DoubleForm<f64>, Vec<Vec<f64>>)> {
                    let mut xs = x.to_vec();
                    xs[i] += h;
                    eval_f64(chart, field, &xs)
                };
                let central = |h: f64| -> Result<(DoubleForm<f64>, Vec<Vec<f64>>)> {
                    let (tp, fp) = shifted(h)?;
                    let (tm, fm) = shifted(-h)?;
                    let s = 1.0 / (2.0 * h);
                    let df = fp
                        .iter()
                        .zip(&fm)
                        .map(|(a, b)| a.iter().zip(b).map(|(u, v)| (u - v) * s).collect())
                        .collect();
                    Ok(((tp - tm).scale(&s), df))
                };
                let (t1, f1) = central(step)?;
                let (t2, f2) = central(step / 2.0)?;
                let third = 1.0 / 3.0;
                dvalue.push((t2.scale(&4.0) - t1).scale(&third));
                dframe.push(
                    f2.iter()
                        .zip(&f1)
                        .map(|(a, b): (&Vec<f64>, &Vec<f64>)| {
                            a.iter()
                                .zip(b)
                                .map(|(u, v)| (4.0 * u - v) * third)
                                .collect()
                        })
                        .collect(),
                );
            }
            Ok(Jet {
                value,
                frame: base.frame,
                g: d.g,
                gamma: base.gamma,
                dvalue,
                dframe,
            })
        }
    }
}

/// `∇_{E_a}T` for every frame direction `a`.
pub fn covariant_derivative(
    chart: &MetricChart,
    field: &CurvatureField,
    x: &[f64],
    mode: DifferentiationMode,
) -> Result<Vec<DoubleForm<f64>>> {
    let j = jet(chart, field, x, mode)?;
    let n = chart.n();
    let omega = connection_from(&j.g, &j.frame, &j.dframe, &j.gamma);
    let t = &j.value;
    let (rows, cols) = (t.row_basis(), t.col_basis());
    let mut out = Vec::with_capacity(n);
    for a in 0..n {
        // E_a(T_IJ) = Σ_i F_a^i ∂_i T_IJ
        let mut w = DoubleForm::zeros(n, t.p(), t.q())?;
        for (i, dt) in j.dvalue.iter().enumerate() {
            let f = j.frame[a][i];
            if f != 0.0 {
                w = w + dt.scale(&f);
            }
        }
        for (ri, ii) in rows.iter().enumerate() {
            for (ci, jj) in cols.iter().enumerate() {
                let mut corr = 0.0;
                let (xs, ys) = (ii.to_vec(), jj.to_vec());
                for s in 0..xs.len() {
                    let mut zs = xs.clone();
                    for c in 0..n {
                        let om = omega[c][a][xs[s]];
                        if om != 0.0 {
                            zs[s] = c;
                            corr += om * t.component(&zs, &ys);
                        }
                    }
                }
                for s in 0..ys.len() {
                    let mut zs = ys.clone();
                    for c in 0..n {
                        let om = omega[c][a][ys[s]];
                        if om != 0.0 {
                            zs[s] = c;
                            corr += om * t.component(&xs, &zs);
                        }
                    }
                }
                let v = *w.get(ri, ci) - corr;
                w.set(ri, ci, v);
            }
        }
        out.push(w);
    }
    Ok(out)
}

/// `(δT)(x₂…x_p; y) = −Σ_a (∇_aT)(E_a, x₂…; y)` from the family `{∇_aT}`.
pub fn divergence_of_family(nabla: &[DoubleForm<f64>]) -> Result<DoubleForm<f64>> {
    ensure!(
        !nabla.is_empty(),
        Input,
        "empty covariant derivative family"
    );
    let t = &nabla[0];
    let (n, p, q) = (t.n(), t.p(), t.q());
    ensure!(
        nabla.len() == n,
        Input,
        "family has {} members, expected {n}",
        nabla.len()
    );
    ensure!(p >= 1, Degree, "divergence needs p >= 1");
    DoubleForm::from_fn(n, p - 1, q, |ii, jj| {
        let ys = jj.to_vec();
        let mut acc = 0.0;
        for (a, w) in nabla.iter().enumerate() {
            if ii.contains(a) {
                continue;
            }
            let mut xs = vec![a];
            xs.extend(ii.iter());
            acc -= w.component(&xs, &ys);
        }
        acc
    })
}

/// `(DT)(x₁…x_{p+1}; y) = Σ_j (−1)^{j+1} (∇_{x_j}T)(x₁…x̂_j…; y)` from the family `{∇_aT}`.
pub fn bianchi_sum_of_family(nabla: &[DoubleForm<f64>]) -> Result<DoubleForm<f64>> {
    ensure!(
        !nabla.is_empty(),
        Input,
        "empty covariant derivative family"
    );
    let t = &nabla[0];
    let (n, p, q) = (t.n(), t.p(), t.q());
    ensure!(
        nabla.len() == n,
        Input,
        "family has {} members, expected {n}",
        nabla.len()
    );
    ensure!(p < n, Degree, "second Bianchi sum needs p+1 <= n");
    DoubleForm::from_fn(n, p + 1, q, |kk, jj| {
        let kk = kk.to_vec();
        let mut acc = 0.0;
        for (s, &a) in kk.iter().enumerate() {
            let mut rest = kk.clone();
            rest.remove(s);
            let v = *nabla[a].at(&MultiIndex::new(&rest, n).expect("sorted subset"), jj);
            acc += if s % 2 == 0 { v } else { -v };
        }
        acc
    })
}

pub fn divergence_delta(
    chart: &MetricChart,
    field: &CurvatureField,
    x: &[f64],
    mode: DifferentiationMode,
) -> Result<DoubleForm<f64>> {
    divergence_of_family(&covariant_derivative(chart, field, x, mode)?)
}

pub fn bianchi_sum_d(
    chart: &MetricChart,
    field: &CurvatureField,
    x: &[f64],
    mode: DifferentiationMode,
) -> Result<DoubleForm<f64>> {
    bianchi_sum_of_family(&covariant_derivative(chart, field, x, mode)?)
}

/// `∗δ∗T`, with `∗T` differentiated as a field of its own.
pub fn star_delta_star(
    chart: &MetricChart,
    field: &CurvatureField,
    x: &[f64],
    mode: DifferentiationMode,
) -> Result<DoubleForm<f64>> {
    let starred = CurvatureField::Star(Box::new(field.clone()));
    Ok(divergence_delta(chart, &starred, x, mode)?.hodge_star())
}

/// Sign `ε` with `∗δ∗ = ε·D` on `(p,q)` forms in dimension `n`, for the conventions of this module.
pub fn star_delta_star_sign(n: usize, p: usize) -> f64 {
    if (n + p).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}
