use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Map, Value};

use curv_core::combinatorics::basis;
use curv_core::curvature::{d_of_n, duality_defect};
use curv_core::geometry::{riemann_at, DerivativeEngine, MetricChart, MetricSpec};
use curv_core::{AlgebraicCurvature, DoubleForm, Error, Rational, Result, Scalar};

/// Scalars as JSON: numbers for floats, exact `"num/den"` strings for rationals.
pub trait Emit: Scalar {
    fn emit(&self) -> Value;
}

impl Emit for f64 {
    fn emit(&self) -> Value {
        json!(self)
    }
}

impl Emit for Rational {
    fn emit(&self) -> Value {
        Value::String(self.to_string())
    }
}

fn grid<S: Emit>(w: &DoubleForm<S>) -> Value {
    let rows: Vec<Value> = (0..w.rows())
        .map(|i| Value::Array((0..w.cols()).map(|j| w.get(i, j).emit()).collect()))
        .collect();
    json!({ "bidegree": [w.p(), w.q()], "rows": rows })
}

#[derive(Serialize)]
pub struct Report {
    version: u32,
    model: Value,
    name: &'static str,
    n: usize,
    mode: &'static str,
    engine: Option<&'static str>,
    point: Vec<f64>,
    /// Frame vectors in coordinates (float mode).
    frame: Option<Vec<Vec<f64>>>,
    /// Multi-index labels per degree; grid rows and columns follow this order.
    basis: BTreeMap<usize, Vec<Vec<usize>>>,
    curvature: Map<String, Value>,
}

/// Inline JSON, a JSON file, or the shorthand `name[:key=value,...]`.
pub fn parse_model(arg: &str) -> Result<Value> {
    let text = arg.trim();
    if text.starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::Config(format!("model JSON: {e}")));
    }
    let path = std::path::Path::new(text);
    if path.is_file() {
        let body = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        return serde_json::from_str(&body)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())));
    }
    let (name, rest) = text.split_once(':').unwrap_or((text, ""));
    let mut params = Map::new();
    for kv in rest.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("expected key=value, got `{kv}`")))?;
        let v = v.trim();
        let value = if let Ok(i) = v.parse::<u64>() {
            json!(i)
        } else if let Ok(f) = v.parse::<f64>() {
            json!(f)
        } else {
            return Err(Error::Config(format!("param `{k}` is not a number: `{v}`")));
        };
        params.insert(k.trim().to_string(), value);
    }
    Ok(json!({ "model": name, "params": params }))
}

fn base_point(spec: &MetricSpec) -> Vec<f64> {
    match spec {
        MetricSpec::SpherePolar { .. } => vec![std::f64::consts::FRAC_PI_2, 0.0],
        _ => vec![0.0; spec.dim()],
    }
}

fn curvature_fields<S: Emit>(r: &AlgebraicCurvature<S>) -> Result<Map<String, Value>> {
    let n = r.n();
    let h = r.hierarchy()?;
    let mut m = Map::new();
    m.insert("riemann".into(), grid(r.form()));
    m.insert("ricci".into(), grid(&h.ric));
    m.insert("scal".into(), h.scal.emit());
    m.insert("einstein".into(), grid(&h.einstein));
    if let Some(a) = &h.schouten {
        m.insert("schouten".into(), grid(a));
    }
    let dd: Vec<Value> = h
        .ddstar
        .iter()
        .enumerate()
        .map(|(p, w)| json!({ "p": p, "grid": grid(w) }))
        .collect();
    m.insert("ddstar".into(), Value::Array(dd));
    // s_p on the planes spanned by the first p frame vectors
    let mut sp = Vec::new();
    for p in 0..=n - 2 {
        let frame: Vec<Vec<S>> = (0..p)
            .map(|i| {
                (0..n)
                    .map(|k| if k == i { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();
        sp.push(json!({ "p": p, "plane": (0..p).collect::<Vec<_>>(), "value": r.p_curvature(&frame)?.emit() }));
    }
    m.insert("s_p".into(), Value::Array(sp));
    let mut lovelock = Vec::new();
    let mut gb = Vec::new();
    for q in 1..=n / 2 {
        if 2 * q < n {
            lovelock.push(json!({ "q": q, "grid": grid(&r.lovelock(q)?) }));
        }
        gb.push(json!({ "q": q, "value": r.gauss_bonnet(q)?.emit() }));
    }
    m.insert("lovelock".into(), Value::Array(lovelock));
    m.insert("gauss_bonnet".into(), Value::Array(gb));
    if n >= 4 {
        m.insert("h4".into(), r.h4_closed_form().emit());
    }
    if n >= 3 {
        let d = r.decompose()?;
        m.insert(
            "decomposition_norm_sq".into(),
            json!({ "omega0": (d.omega0.clone() * d.omega0).emit(), "omega1": d.omega1.norm_sq().emit(), "omega2": d.omega2.norm_sq().emit() }),
        );
    }
    if n >= 4 && n.is_multiple_of(2) {
        let w = &h.ddstar[n / 2];
        m.insert(
            "duality".into(),
            json!({
                "p": n / 2,
                "self_dual_defect": duality_defect(w, 1)?.emit(),
                "anti_self_dual_defect": duality_defect(w, -1)?.emit(),
            }),
        );
    }
    if let Ok(d) = d_of_n(n) {
        m.insert("d_of_n".into(), json!(d));
    }
    Ok(m)
}

pub fn run(model: &str, rational: bool, point: Option<&[f64]>, engine: &str) -> Result<Report> {
    let config = parse_model(model)?;
    let engine = DerivativeEngine::parse(engine, None)?;
    let chart = MetricChart::from_config(&config, engine)?;
    let spec = chart.spec().clone();
    let n = chart.n();
    let x = point
        .map(<[f64]>::to_vec)
        .unwrap_or_else(|| base_point(&spec));
    if x.len() != n {
        return Err(Error::Config(format!(
            "point has {} coordinates, model dimension is {n}",
            x.len()
        )));
    }
    if n < 2 {
        return Err(Error::Config("curvature needs n >= 2".into()));
    }
    let labels = (0..=n)
        .map(|p| (p, basis(n, p).iter().map(|i| i.to_vec()).collect()))
        .collect();
    let (frame, curvature, mode, engine) = if rational {
        let r = spec.exact_curvature::<Rational>().ok_or_else(|| {
            Error::Config(format!(
                "rational mode needs a closed-form model (euclidean, sphere, hyperbolic, sphere_polar or products of these), got `{}`",
                spec.name()
            ))
        })??;
        spec.check_point(&x)?;
        (None, curvature_fields(&r)?, "rational", None)
    } else {
        let fc = riemann_at(&chart, &x)?;
        (
            Some(fc.frame.clone()),
            curvature_fields(&fc.r)?,
            "float",
            Some(engine.name()),
        )
    };
    Ok(Report {
        version: 1,
        model: config,
        name: spec.name(),
        n,
        mode,
        engine,
        point: x,
        frame,
        basis: labels,
        curvature,
    })
}
