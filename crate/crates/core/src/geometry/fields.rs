//! Tensor fields built pointwise from the curvature tensor.

use std::fmt;

use crate::curvature::AlgebraicCurvature;
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Error, Result};
use crate::scalar::Scalar;

/// A `(p,p)` double form determined by `R` at each point, expressed in the moving frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvatureField {
    Metric,
    Riemann,
    Ricci,
    /// `Scal` as a `(0,0)` form.
    Scal,
    /// `Scal·g`.
    ScalMetric,
    Einstein,
    Schouten,
    DdStar(usize),
    Lovelock(usize),
    Pq(usize, usize),
    /// `∗(g^{n−p−1} Ric)` of bidegree `(p,p)`.
    StarMetricRicci(usize),
    /// `∗(g^{n−p} Scal)` of bidegree `(p,p)`.
    StarMetricScal(usize),
    /// `∗(g^{n−p−1} A)` of bidegree `(p,p)`.
    StarMetricSchouten(usize),
    Star(Box<CurvatureField>),
}

impl CurvatureField {
    pub fn eval<S: Scalar>(&self, r: &AlgebraicCurvature<S>) -> Result<DoubleForm<S>> {
        let n = r.n();
        let star_g = |w: DoubleForm<S>, p: usize| -> Result<DoubleForm<S>> {
            let k = n
                .checked_sub(p + w.p())
                .ok_or_else(|| Error::Range(format!("p={p} too large for n={n}")))?;
            Ok(w.metric_power_times(k)?.hodge_star())
        };
        match self {
            CurvatureField::Metric => DoubleForm::metric(n),
            CurvatureField::Riemann => Ok(r.form().clone()),
            CurvatureField::Ricci => Ok(r.ricci()),
            CurvatureField::Scal => DoubleForm::scalar(n, r.scal()),
            CurvatureField::ScalMetric => Ok(r.metric().scale(&r.scal())),
            CurvatureField::Einstein => Ok(r.einstein()),
            CurvatureField::Schouten => r.schouten(),
            CurvatureField::DdStar(p) => r.dd_star_p(*p),
            CurvatureField::Lovelock(q) => r.lovelock(*q),
            CurvatureField::Pq(p, q) => r.pq_curvature(*p, *q),
            CurvatureField::StarMetricRicci(p) => {
                ensure!(*p >= 1 && *p < n, Range, "star_g_ric needs 1 <= p <= n-1");
                star_g(r.ricci(), *p)
            }
            CurvatureField::StarMetricScal(p) => {
                ensure!(*p <= n, Range, "star_g_scal needs p <= n");
                star_g(DoubleForm::scalar(n, r.scal())?, *p)
            }
            CurvatureField::StarMetricSchouten(p) => {
                ensure!(
                    *p >= 1 && *p < n,
                    Range,
                    "star_g_schouten needs 1 <= p <= n-1"
                );
                star_g(r.schouten()?, *p)
            }
            CurvatureField::Star(inner) => Ok(inner.eval(r)?.hodge_star()),
        }
    }

    /// Parses names such as `riemann`, `ddstar_2`, `lovelock_1`, `pq_1_2`, `star(ricci)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("star(").and_then(|t| t.strip_suffix(')')) {
            return Ok(CurvatureField::Star(Box::new(Self::parse(inner)?)));
        }
        let parts: Vec<&str> = s.split('_').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::Input(format!("field `{s}` needs a numeric suffix")))
        };
        Ok(match parts[0] {
            "metric" | "g" => CurvatureField::Metric,
            "riemann" | "r" => CurvatureField::Riemann,
            "ricci" | "ric" => CurvatureField::Ricci,
            "scal" if parts.len() == 1 => CurvatureField::Scal,
            "scalg" => CurvatureField::ScalMetric,
            "einstein" => CurvatureField::Einstein,
            "schouten" => CurvatureField::Schouten,
            "ddstar" => CurvatureField::DdStar(num(1)?),
            "lovelock" => CurvatureField::Lovelock(num(1)?),
            "pq" => CurvatureField::Pq(num(1)?, num(2)?),
            "stargric" => CurvatureField::StarMetricRicci(num(1)?),
            "stargscal" => CurvatureField::StarMetricScal(num(1)?),
            "stargschouten" => CurvatureField::StarMetricSchouten(num(1)?),
            _ => return Err(Error::Input(format!("unknown field `{s}`"))),
        })
    }

    /// Spanning-set label (as returned by `spanning_set`) to field.
    pub fn from_spanning_label(label: &str, p: usize) -> Result<Self> {
        Ok(match label {
            l if l.starts_with("ddstar_") => CurvatureField::DdStar(p),
            "scal_g" => CurvatureField::ScalMetric,
            "star_g_ric" => CurvatureField::StarMetricRicci(p),
            "star_g_scal" => CurvatureField::StarMetricScal(p),
            "star_g_schouten" => CurvatureField::StarMetricSchouten(p),
            other => return Err(Error::Input(format!("unknown spanning label `{other}`"))),
        })
    }
}

impl fmt::Display for CurvatureField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvatureField::Metric => write!(f, "metric"),
            CurvatureField::Riemann => write!(f, "riemann"),
            CurvatureField::Ricci => write!(f, "ricci"),
            CurvatureField::Scal => write!(f, "scal"),
            CurvatureField::ScalMetric => write!(f, "scalg"),
            CurvatureField::Einstein => write!(f, "einstein"),
            CurvatureField::Schouten => write!(f, "schouten"),
            CurvatureField::DdStar(p) => write!(f, "ddstar_{p}"),
            CurvatureField::Lovelock(q) => write!(f, "lovelock_{q}"),
            CurvatureField::Pq(p, q) => write!(f, "pq_{p}_{q}"),
            CurvatureField::StarMetricRicci(p) => write!(f, "stargric_{p}"),
            CurvatureField::StarMetricScal(p) => write!(f, "stargscal_{p}"),
            CurvatureField::StarMetricSchouten(p) => write!(f, "stargschouten_{p}"),
            CurvatureField::Star(inner) => write!(f, "star({inner})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in [
            "riemann",
            "ddstar_2",
            "lovelock_1",
            "pq_1_2",
            "star(ricci)",
            "stargscal_3",
            "scal",
            "scalg",
        ] {
            assert_eq!(CurvatureField::parse(s).unwrap().to_string(), s);
        }
        assert!(CurvatureField::parse("ddstar").is_err());
        assert!(CurvatureField::parse("weyl").is_err());
    }

    #[test]
    fn spanning_fields_match_spanning_set() {
        let r = crate::curvature::random_algebraic_curvature::<crate::Rational>(3, 5, 2).unwrap();
        let case = crate::curvature::SpanningCase {
            weyl_harmonic: true,
            scal_constant: true,
        };
        for p in 1..=3 {
            for (label, w) in r.spanning_set(p, case).unwrap() {
                let f = CurvatureField::from_spanning_label(&label, p).unwrap();
                assert_eq!(f.eval(&r).unwrap(), w, "{label}");
            }
        }
    }
}
