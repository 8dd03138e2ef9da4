use super::{ratio, AlgebraicCurvature};
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Result};
use crate::scalar::{factorial, Scalar};

impl<S: Scalar> AlgebraicCurvature<S> {
    fn check_p(&self, p: usize) -> Result<()> {
        let n = self.n();
        ensure!(
            p + 2 <= n,
            Range,
            "double dual degree p={p} outside 0..={}",
            n as i64 - 2
        );
        Ok(())
    }

    /// `*R*_p = *(g^{n−p−2} R)/(n−p−2)!`.
    pub fn dd_star_p(&self, p: usize) -> Result<DoubleForm<S>> {
        self.check_p(p)?;
        let k = self.n() - p - 2;
        let w = self.form().metric_power_times(k)?.hodge_star();
        Ok(w.scale(&(S::one() / factorial(k))))
    }

    /// `c^{n−p−2}(*R)/(n−p−2)!`.
    pub fn dd_star_by_contraction(&self, p: usize) -> Result<DoubleForm<S>> {
        self.check_p(p)?;
        let k = self.n() - p - 2;
        let w = self.form().hodge_star().contract_times(k)?;
        Ok(w.scale(&(S::one() / factorial(k))))
    }

    /// `g^{p−2}R/(p−2)! − g^{p−1}Ric/(p−1)! + ½ g^p Scal/p!` with `g^{−1} = 0`.
    pub fn dd_star_expansion(&self, p: usize) -> Result<DoubleForm<S>> {
        self.check_p(p)?;
        let n = self.n();
        let scal = self.scal();
        let mut acc =
            DoubleForm::metric_power(n, p)?.scale(&(scal / (factorial::<S>(p) * S::from_i64(2))));
        if p >= 1 {
            let t = self
                .ricci()
                .metric_power_times(p - 1)?
                .scale(&(S::one() / factorial(p - 1)));
            acc = acc - t;
        }
        if p >= 2 {
            let t = self
                .form()
                .metric_power_times(p - 2)?
                .scale(&(S::one() / factorial(p - 2)));
            acc = acc + t;
        }
        Ok(acc)
    }

    /// `R − g·Ric + ¼ g² Scal`.
    pub fn ruse_lanczos_2(&self) -> Result<DoubleForm<S>> {
        let n = self.n();
        ensure!(
            n >= 4,
            Dimension,
            "the degree-2 double dual needs n >= 4, got {n}"
        );
        let g_ric = self.ricci().metric_power_times(1)?;
        let g2_scal = DoubleForm::metric_power(n, 2)?.scale(&(self.scal() * ratio(1, 4)));
        Ok(self.form().clone() - g_ric + g2_scal)
    }

    pub fn hierarchy(&self) -> Result<CurvatureHierarchy<S>> {
        CurvatureHierarchy::new(self.clone())
    }
}

/// `R` together with `*R*_p` for `0 <= p <= n−2` and the classical derived tensors.
#[derive(Debug, Clone)]
pub struct CurvatureHierarchy<S> {
    pub r: AlgebraicCurvature<S>,
    pub ddstar: Vec<DoubleForm<S>>,
    pub ric: DoubleForm<S>,
    pub scal: S,
    pub einstein: DoubleForm<S>,
    pub traceless_ric: DoubleForm<S>,
    /// `None` for `n < 3`.
    pub schouten: Option<DoubleForm<S>>,
    /// Trace-free part of `R`; `None` for `n < 3`.
    pub weyl: Option<DoubleForm<S>>,
}

impl<S: Scalar> CurvatureHierarchy<S> {
    pub fn new(r: AlgebraicCurvature<S>) -> Result<Self> {
        let n = r.n();
        let ddstar = (0..=n - 2)
            .map(|p| r.dd_star_p(p))
            .collect::<Result<Vec<_>>>()?;
        let (schouten, weyl) = if n >= 3 {
            (Some(r.schouten()?), Some(r.decompose()?.omega2))
        } else {
            (None, None)
        };
        Ok(CurvatureHierarchy {
            ric: r.ricci(),
            scal: r.scal(),
            einstein: r.einstein(),
            traceless_ric: r.traceless_ricci(),
            schouten,
            weyl,
            ddstar,
            r,
        })
    }

    pub fn n(&self) -> usize {
        self.r.n()
    }
}

#[cfg(test)]
mod tests {
    use super::super::random_algebraic_curvature;
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(v: i64) -> Q {
        <Q as Scalar>::from_i64(v)
    }

    #[test]
    fn constant_curvature_hierarchy() {
        for n in 4..=7 {
            let r = AlgebraicCurvature::<Q>::constant(n, q(1)).unwrap();
            for p in 0..=n - 2 {
                let expect = crate::doubleform::normalized_metric_power::<Q>(n, p)
                    .unwrap()
                    .scale(&(q(((n - p) * (n - p - 1)) as i64) * ratio::<Q>(1, 2)));
                assert_eq!(r.dd_star_p(p).unwrap(), expect, "n={n} p={p}");
            }
        }
        let r4 = AlgebraicCurvature::<Q>::constant(4, q(1)).unwrap();
        assert_eq!(&r4.dd_star_p(2).unwrap(), r4.form());
        let r5 = AlgebraicCurvature::<Q>::constant(5, q(1)).unwrap();
        assert_eq!(r5.dd_star_p(0).unwrap().as_scalar().unwrap(), q(10));
    }

    #[test]
    fn routes_agree_on_random_tensors() {
        for n in 2..=7 {
            let r = random_algebraic_curvature::<Q>(n as u64, n, 2).unwrap();
            for p in 0..=n - 2 {
                let d = r.dd_star_p(p).unwrap();
                assert_eq!(d, r.dd_star_by_contraction(p).unwrap(), "n={n} p={p}");
                assert_eq!(d, r.dd_star_expansion(p).unwrap(), "n={n} p={p}");
            }
            assert_eq!(
                r.dd_star_p(0).unwrap().as_scalar().unwrap(),
                r.scal() * ratio::<Q>(1, 2)
            );
            if n >= 3 {
                assert_eq!(r.dd_star_p(1).unwrap(), r.einstein());
            }
            if n >= 4 {
                assert_eq!(r.ruse_lanczos_2().unwrap(), r.dd_star_p(2).unwrap());
            }
        }
    }

    #[test]
    fn trace_relation() {
        let r = random_algebraic_curvature::<Q>(1, 6, 3).unwrap();
        for p in 1..=4 {
            let lhs = r.dd_star_p(p).unwrap().contraction().unwrap();
            let rhs = r.dd_star_p(p - 1).unwrap().scale(&q(6 - p as i64 - 1));
            assert_eq!(lhs, rhs);
        }
        let s4 = AlgebraicCurvature::<Q>::constant(4, q(1)).unwrap();
        assert_eq!(
            s4.dd_star_p(2).unwrap().contraction().unwrap(),
            s4.metric().scale(&q(3))
        );
    }

    #[test]
    fn hierarchy_is_symmetric_and_bianchi() {
        let r = random_algebraic_curvature::<Q>(2, 6, 2).unwrap();
        let h = r.hierarchy().unwrap();
        assert_eq!(h.ddstar.len(), 5);
        for d in &h.ddstar {
            assert!(d.symmetry_defect().unwrap().is_zero());
            if d.p() >= 1 && d.p() < 6 {
                assert!(d.first_bianchi_sum().unwrap().is_zero());
            }
        }
        assert!(r.dd_star_p(5).is_err());
        assert!(AlgebraicCurvature::<Q>::constant(3, q(1))
            .unwrap()
            .ruse_lanczos_2()
            .is_err());
    }
}
