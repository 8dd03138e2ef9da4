use std::collections::BTreeSet;

use serde_json::Value;

use crate::doubleform::DoubleForm;
use crate::error::{ensure, Result};
use crate::scalar::Scalar;

/// Outcome of one check run: the worst residual seen and whether every residual was exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    pub residual: f64,
    pub exact_zero: bool,
    pub inputs: Value,
    pub dims: Vec<usize>,
}

/// Running maximum of residuals.
///
/// Float residuals between two values are relative to `max(1, |a|, |b|)`; exact
/// residuals are absolute and additionally tracked for exact vanishing.
#[derive(Debug, Default)]
pub(crate) struct Acc {
    worst: f64,
    nonzero: bool,
    dims: BTreeSet<usize>,
    cases: usize,
}

impl Acc {
    pub fn new() -> Self {
        Acc::default()
    }

    pub fn dim(&mut self, n: usize) -> &mut Self {
        self.dims.insert(n);
        self
    }

    fn record(&mut self, r: f64, zero: bool) {
        self.cases += 1;
        if !zero {
            self.nonzero = true;
        }
        if r.is_nan() {
            self.worst = f64::INFINITY;
        } else if r > self.worst {
            self.worst = r;
        }
    }

    pub fn forms<S: Scalar>(&mut self, a: &DoubleForm<S>, b: &DoubleForm<S>) -> Result<()> {
        ensure!(
            a.n() == b.n() && a.bidegree() == b.bidegree(),
            Degree,
            "compared forms differ in shape"
        );
        let d = a.try_sub(b)?;
        let scale = if S::EXACT {
            1.0
        } else {
            a.max_abs().max(b.max_abs()).max(1.0)
        };
        self.record(d.max_abs() / scale, d.is_zero());
        Ok(())
    }

    pub fn scalars<S: Scalar>(&mut self, a: &S, b: &S) {
        let d = a.clone() - b.clone();
        let scale = if S::EXACT {
            1.0
        } else {
            a.abs_f64().max(b.abs_f64()).max(1.0)
        };
        self.record(d.abs_f64() / scale, d.is_zero());
    }

    /// A defect that should vanish, measured against `scale`.
    pub fn defect<S: Scalar>(&mut self, d: &DoubleForm<S>, scale: f64) {
        let s = if S::EXACT { 1.0 } else { scale.max(1.0) };
        self.record(d.max_abs() / s, d.is_zero());
    }

    /// A plain nonnegative residual computed in floats.
    pub fn value(&mut self, r: f64) {
        self.record(r, r == 0.0);
    }

    /// `observed >= threshold`, recorded as the shortfall.
    pub fn at_least(&mut self, observed: f64, threshold: f64) {
        self.value((threshold - observed).max(0.0));
    }

    /// A boolean condition (`true` records zero).
    pub fn holds(&mut self, ok: bool) {
        self.value(if ok { 0.0 } else { 1.0 });
    }

    pub fn finish(self, mut inputs: Value) -> Result<Measure> {
        ensure!(self.cases > 0, Precondition, "check recorded no cases");
        if let Value::Object(map) = &mut inputs {
            map.insert("cases".into(), Value::from(self.cases));
        }
        Ok(Measure {
            residual: self.worst,
            exact_zero: !self.nonzero,
            inputs,
            dims: self.dims.into_iter().collect(),
        })
    }
}
