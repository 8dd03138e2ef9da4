use super::{ratio, AlgebraicCurvature};
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Result};
use crate::scalar::Scalar;

/// Frame orthonormality tolerance (Gram matrix against the identity).
pub const FRAME_TOL: f64 = 1e-10;

/// Case flags of the uniqueness classification for divergence-free `R`-linear forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanningCase {
    pub weyl_harmonic: bool,
    pub scal_constant: bool,
}

pub fn check_orthonormal<S: Scalar>(frame: &[Vec<S>], n: usize) -> Result<()> {
    for v in frame {
        ensure!(
            v.len() == n,
            Input,
            "frame vector of length {} in dimension {n}",
            v.len()
        );
    }
    for (i, a) in frame.iter().enumerate() {
        for (j, b) in frame.iter().enumerate().skip(i) {
            let dot = a
                .iter()
                .zip(b)
                .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
            let target = if i == j { S::one() } else { S::zero() };
            let err = dot - target;
            ensure!(
                err.is_negligible(FRAME_TOL),
                Precondition,
                "frame not orthonormal: <e{i},e{j}> off by {:e}",
                err.abs_f64()
            );
        }
    }
    Ok(())
}

impl<S: Scalar> AlgebraicCurvature<S> {
    /// `s_p(P) = 2 *R*_p(e_1..e_p; e_1..e_p)`.
    pub fn p_curvature(&self, frame: &[Vec<S>]) -> Result<S> {
        check_orthonormal(frame, self.n())?;
        let d = self.dd_star_p(frame.len())?;
        Ok(d.evaluate(frame, frame)? * S::from_i64(2))
    }

    /// `Scal − 2 Σ_i Ric(e_i,e_i) + 2 Σ_{i<j} K(e_i,e_j)` for `2 <= p <= n−2`.
    pub fn p_curvature_formula(&self, frame: &[Vec<S>]) -> Result<S> {
        let (n, p) = (self.n(), frame.len());
        ensure!(
            p >= 2 && p + 2 <= n,
            Range,
            "formula route needs 2 <= p <= n-2, got p={p}"
        );
        check_orthonormal(frame, n)?;
        let ric = self.ricci();
        let two = S::from_i64(2);
        let mut acc = self.scal();
        for (i, e) in frame.iter().enumerate() {
            acc =
                acc - ric.evaluate(std::slice::from_ref(e), std::slice::from_ref(e))? * two.clone();
            for f in &frame[i + 1..] {
                acc = acc + self.sectional(e, f)? * two.clone();
            }
        }
        Ok(acc)
    }

    /// `C_p = (Scal − s_p)/2`.
    pub fn cp_curvature(&self, frame: &[Vec<S>]) -> Result<S> {
        Ok((self.scal() - self.p_curvature(frame)?) * ratio(1, 2))
    }

    /// `Σ_{i≠j} s_2(e_i,e_j) / ((n−2)(n−3))` over the standard basis.
    pub fn scal_from_s2(&self) -> Result<S> {
        let n = self.n();
        ensure!(n >= 4, Dimension, "averaging s_2 needs n >= 4, got {n}");
        let e = |i: usize| -> Vec<S> {
            (0..n)
                .map(|k| if k == i { S::one() } else { S::zero() })
                .collect()
        };
        let mut acc = S::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc = acc + self.p_curvature(&[e(i), e(j)])?;
                }
            }
        }
        Ok(acc * ratio(1, ((n - 2) * (n - 3)) as i64))
    }

    /// The spanning set of divergence-free `R`-linear `(p,p)` forms for the given case.
    pub fn spanning_set(
        &self,
        p: usize,
        case: SpanningCase,
    ) -> Result<Vec<(String, DoubleForm<S>)>> {
        let n = self.n();
        ensure!(
            p >= 1 && p + 2 <= n,
            Range,
            "spanning set needs 1 <= p <= n-2, got p={p}"
        );
        let mut out = vec![(format!("ddstar_{p}"), self.dd_star_p(p)?)];
        let scal_term = || -> Result<DoubleForm<S>> {
            Ok(DoubleForm::metric_power(n, n - p)?
                .scale(&self.scal())
                .hodge_star())
        };
        if p == 1 {
            if case.scal_constant {
                out.push(("scal_g".into(), self.metric().scale(&self.scal())));
            }
            return Ok(out);
        }
        match (case.weyl_harmonic, case.scal_constant) {
            (false, false) => {}
            (true, true) => {
                out.push((
                    "star_g_ric".into(),
                    self.ricci().metric_power_times(n - p - 1)?.hodge_star(),
                ));
                out.push(("star_g_scal".into(), scal_term()?));
            }
            (true, false) => {
                out.push((
                    "star_g_schouten".into(),
                    self.schouten()?.metric_power_times(n - p - 1)?.hodge_star(),
                ));
            }
            (false, true) => out.push(("star_g_scal".into(), scal_term()?)),
        }
        Ok(out)
    }
}

/// `∗w − sign·w` reduced to its largest entry; `w` must have middle degree `n = 2p`.
pub fn duality_defect<S: Scalar>(w: &DoubleForm<S>, sign: i8) -> Result<S> {
    ensure!(
        w.p() == w.q(),
        Degree,
        "duality needs a (p,p) form, got {:?}",
        w.bidegree()
    );
    ensure!(
        w.n() == 2 * w.p(),
        Dimension,
        "duality needs n = 2p, got n={} p={}",
        w.n(),
        w.p()
    );
    ensure!(sign == 1 || sign == -1, Input, "sign must be +1 or -1");
    let target = if sign > 0 { w.clone() } else { -w.clone() };
    Ok((w.hodge_star() - target).max_abs_entry())
}

#[cfg(test)]
mod tests {
    use super::super::random_algebraic_curvature;
    use super::*;
    use crate::random::{random_orthonormal_frame, seeded};
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(v: i64) -> Q {
        <Q as Scalar>::from_i64(v)
    }

    fn e<S: Scalar>(n: usize, i: usize) -> Vec<S> {
        (0..n)
            .map(|k| if k == i { S::one() } else { S::zero() })
            .collect()
    }

    #[test]
    fn sphere_p_curvatures() {
        let mut rng = seeded(1);
        for n in 4..=7 {
            let r = AlgebraicCurvature::<f64>::constant(n, 1.0).unwrap();
            for p in 0..=n - 2 {
                let frame = random_orthonormal_frame(n, p, &mut rng);
                let s = r.p_curvature(&frame).unwrap();
                assert!((s - ((n - p) * (n - p - 1)) as f64).abs() < 1e-10);
                if p >= 2 {
                    assert!((r.p_curvature_formula(&frame).unwrap() - s).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn product_of_spheres_planes() {
        let s2 = AlgebraicCurvature::<Q>::constant(2, q(1)).unwrap();
        let r = AlgebraicCurvature::product(&[s2.clone(), s2]).unwrap();
        assert_eq!(r.p_curvature(&[e(4, 0), e(4, 1)]).unwrap(), q(2));
        assert_eq!(r.p_curvature(&[e(4, 0), e(4, 2)]).unwrap(), q(0));
        assert_eq!(r.p_curvature_formula(&[e(4, 0), e(4, 2)]).unwrap(), q(0));
        assert_eq!(r.cp_curvature(&[e(4, 0), e(4, 1)]).unwrap(), q(1));
    }

    #[test]
    fn routes_agree_on_random_frames() {
        let mut rng = seeded(2);
        for n in 4..=6 {
            let r = random_algebraic_curvature::<f64>(n as u64, n, 3).unwrap();
            for p in 2..=n - 2 {
                let frame = random_orthonormal_frame(n, p, &mut rng);
                let a = r.p_curvature(&frame).unwrap();
                let b = r.p_curvature_formula(&frame).unwrap();
                assert!((a - b).abs() < 1e-10 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn non_orthonormal_frame_rejected() {
        let r = AlgebraicCurvature::<f64>::constant(4, 1.0).unwrap();
        let frame = vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.5, 1.0, 0.0, 0.0]];
        assert!(r.p_curvature(&frame).is_err());
    }

    #[test]
    fn scal_from_s2_matches() {
        let s4 = AlgebraicCurvature::<Q>::constant(4, q(1)).unwrap();
        assert_eq!(s4.scal_from_s2().unwrap(), q(12));
        for n in [5, 6] {
            let r = random_algebraic_curvature::<Q>(n as u64, n, 3).unwrap();
            assert_eq!(r.scal_from_s2().unwrap(), r.scal());
        }
    }

    #[test]
    fn duality_witnesses() {
        let s4 = AlgebraicCurvature::<Q>::constant(4, q(1)).unwrap();
        assert!(duality_defect(&s4.dd_star_p(2).unwrap(), 1)
            .unwrap()
            .is_zero());
        let s2 = AlgebraicCurvature::<Q>::constant(2, q(1)).unwrap();
        let h2 = AlgebraicCurvature::<Q>::constant(2, q(-1)).unwrap();
        let sh = AlgebraicCurvature::product(&[s2.clone(), h2]).unwrap();
        assert!(duality_defect(&sh.dd_star_p(2).unwrap(), -1)
            .unwrap()
            .is_zero());
        let ss = AlgebraicCurvature::product(&[s2.clone(), s2]).unwrap();
        assert!(duality_defect(&ss.dd_star_p(2).unwrap(), 1)
            .unwrap()
            .is_zero());
        assert!(
            duality_defect(&ss.dd_star_p(2).unwrap(), -1)
                .unwrap()
                .to_f64()
                > 0.1
        );
        assert!(duality_defect(&s4.ricci(), 1).is_err());
    }

    #[test]
    fn spanning_sets() {
        let r = AlgebraicCurvature::<Q>::constant(5, q(1)).unwrap();
        let not = SpanningCase {
            weyl_harmonic: false,
            scal_constant: false,
        };
        let both = SpanningCase {
            weyl_harmonic: true,
            scal_constant: true,
        };
        assert_eq!(r.spanning_set(1, not).unwrap().len(), 1);
        assert_eq!(r.spanning_set(1, both).unwrap().len(), 2);
        assert_eq!(r.spanning_set(2, not).unwrap().len(), 1);
        let b = r.spanning_set(2, both).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|(_, w)| w.bidegree() == (2, 2)));
        let c = SpanningCase {
            weyl_harmonic: true,
            scal_constant: false,
        };
        assert_eq!(r.spanning_set(3, c).unwrap().len(), 2);
        assert!(r.spanning_set(4, both).is_err());
    }
}
