use super::{ratio, AlgebraicCurvature, ALGEBRAIC_TOL};
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Error, Result};
use crate::scalar::{factorial, Scalar};

/// `R = ω₂ + g·ω₁ + g²·ω₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct RiemannDecomposition<S> {
    pub omega0: S,
    pub omega1: DoubleForm<S>,
    pub omega2: DoubleForm<S>,
}

/// Trace-free components of a symmetric Bianchi `(k,k)` form: `w = Σ_i g^{k−i} ω_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionResult<S> {
    pub n: usize,
    pub degree: usize,
    /// `omegas[i]` is the `(i,i)` component; components with `i > min(k, n−k)` vanish
    /// for dimensional reasons and are not stored.
    pub omegas: Vec<DoubleForm<S>>,
}

impl<S: Scalar> DecompositionResult<S> {
    pub fn reconstruct(&self) -> Result<DoubleForm<S>> {
        let mut acc = DoubleForm::zeros(self.n, self.degree, self.degree)?;
        for (i, w) in self.omegas.iter().enumerate() {
            acc = acc + w.metric_power_times(self.degree - i)?;
        }
        Ok(acc)
    }

    /// Largest entry among `c(ω_i)` for `i >= 1`.
    pub fn trace_defect(&self) -> S {
        let mut worst = S::zero();
        for w in self.omegas.iter().skip(1) {
            let d = w.contraction().expect("degree >= 1").max_abs_entry();
            if d.abs_f64() > worst.abs_f64() || (worst.is_zero() && !d.is_zero()) {
                worst = d;
            }
        }
        worst
    }
}

/// `c^m(g^a ω) = Π_{j<m} (a−j)(n−2i−a+1+j) · g^{a−m} ω` for trace-free `ω` of degree `i`.
fn contraction_coefficient(n: usize, i: usize, a: usize, m: usize) -> i64 {
    (0..m)
        .map(|j| (a as i64 - j as i64) * (n as i64 - 2 * i as i64 - a as i64 + 1 + j as i64))
        .product()
}

/// Top-down solve of the triangular system given by repeated contraction.
pub fn decompose_general<S: Scalar>(w: &DoubleForm<S>) -> Result<DecompositionResult<S>> {
    let (n, k) = (w.n(), w.p());
    ensure!(
        w.p() == w.q(),
        Degree,
        "decomposition needs a (k,k) form, got {:?}",
        w.bidegree()
    );
    let tol = ALGEBRAIC_TOL * w.max_abs().max(1.0);
    ensure!(
        w.symmetry_defect()?.is_negligible(tol),
        Precondition,
        "form is not symmetric"
    );
    if k >= 1 && k < n {
        let b = w.first_bianchi_sum()?.max_abs_entry();
        ensure!(
            b.is_negligible(tol),
            Precondition,
            "form violates the first Bianchi identity"
        );
    }
    let top = k.min(n - k);
    let mut omegas: Vec<DoubleForm<S>> = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let mut t = w.contract_times(k - i)?;
        for (j, om) in omegas.iter().enumerate() {
            let c = contraction_coefficient(n, j, k - j, k - i);
            t = t - om.metric_power_times(i - j)?.scale(&S::from_i64(c));
        }
        let d = contraction_coefficient(n, i, k - i, k - i);
        if d == 0 {
            return Err(Error::Range(format!(
                "singular system at component {i} (n={n}, k={k})"
            )));
        }
        omegas.push(t.scale(&ratio(1, d)));
    }
    Ok(DecompositionResult {
        n,
        degree: k,
        omegas,
    })
}

impl<S: Scalar> AlgebraicCurvature<S> {
    /// Closed-form split into Weyl, trace-free Ricci and scalar parts.
    pub fn decompose(&self) -> Result<RiemannDecomposition<S>> {
        let n = self.n() as i64;
        let omega0 = self.scal() * ratio(1, 2 * n * (n - 1));
        let omega1 = if n >= 3 {
            self.traceless_ricci().scale(&ratio(1, n - 2))
        } else {
            DoubleForm::zeros(self.n(), 1, 1)?
        };
        let g2w0 = DoubleForm::metric_power(self.n(), 2)?.scale(&omega0);
        let omega2 = self.form().clone() - omega1.metric_power_times(1)? - g2w0;
        Ok(RiemannDecomposition {
            omega0,
            omega1,
            omega2,
        })
    }

    /// `g^{p−2}ω₂/(p−2)! − (n−p−1) g^{p−1}ω₁/(p−1)! + (n−p)(n−p−1) g^p ω₀/p!`.
    pub fn same_weyl_expansion(&self, p: usize) -> Result<DoubleForm<S>> {
        let n = self.n();
        ensure!(p + 2 <= n, Range, "p={p} outside 0..={}", n as i64 - 2);
        let d = self.decompose()?;
        let c0 = S::from_i64(((n - p) * (n - p - 1)) as i64) * d.omega0 / factorial(p);
        let mut acc = DoubleForm::metric_power(n, p)?.scale(&c0);
        if p >= 1 {
            let c1 = S::from_i64((n - p - 1) as i64) / factorial(p - 1);
            acc = acc - d.omega1.metric_power_times(p - 1)?.scale(&c1);
        }
        if p >= 2 {
            acc = acc
                + d.omega2
                    .metric_power_times(p - 2)?
                    .scale(&(S::one() / factorial(p - 2)));
        }
        Ok(acc)
    }

    /// `R^{(p,q)}` rebuilt from the trace-free components `ω_i` of `R^q`:
    /// `Σ_i (−1)^i (n−p−i)!/(p−i)! g^{p−i} ω_i / (n−2q−p)!`.
    pub fn pq_curvature_from_components(&self, p: usize, q: usize) -> Result<DoubleForm<S>> {
        let n = self.n();
        ensure!(
            q >= 1 && p + 2 * q <= n,
            Range,
            "(p,q)=({p},{q}) out of range for n={n}"
        );
        let dec = decompose_general(&self.riemann_power(q)?)?;
        let mut acc = DoubleForm::zeros(n, p, p)?;
        for (i, om) in dec.omegas.iter().enumerate().take(p + 1) {
            let sign = if i % 2 == 0 { S::one() } else { -S::one() };
            let c = sign * factorial::<S>(n - p - i) / factorial(p - i);
            acc = acc + om.metric_power_times(p - i)?.scale(&c);
        }
        Ok(acc.scale(&(S::one() / factorial(n - 2 * q - p))))
    }

    /// Which trace-free components of `R^q` enter `R^{(p,q)}` with a nonzero coefficient.
    pub fn effective_components(n: usize, p: usize, q: usize) -> Vec<usize> {
        (0..=(2 * q).min(n.saturating_sub(2 * q)))
            .filter(|&i| i <= p)
            .collect()
    }
}

/// Inverts `D2 = *R*_2`: `R = D2 − g·c(D2)/(n−3) + g²·c²(D2)/(2(n−2)(n−3))`.
pub fn invert_from_ddstar2<S: Scalar>(d2: &DoubleForm<S>) -> Result<AlgebraicCurvature<S>> {
    let n = d2.n();
    ensure!(
        d2.bidegree() == (2, 2),
        Degree,
        "expected a (2,2) form, got {:?}",
        d2.bidegree()
    );
    ensure!(n >= 4, Dimension, "inversion needs n >= 4, got {n}");
    let n = n as i64;
    let c1 = d2.contraction()?;
    let c2 = c1.contraction()?.as_scalar()?;
    let r = d2.clone() - c1.metric_power_times(1)?.scale(&ratio(1, n - 3))
        + DoubleForm::metric_power(d2.n(), 2)?.scale(&(c2 * ratio(1, 2 * (n - 2) * (n - 3))));
    Ok(AlgebraicCurvature::new_unchecked(r))
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
    fn constant_curvature_is_pure_trace() {
        let r = AlgebraicCurvature::<Q>::constant(5, q(3)).unwrap();
        let d = r.decompose().unwrap();
        assert_eq!(d.omega0, ratio(3, 2));
        assert!(d.omega1.is_zero());
        assert!(d.omega2.is_zero());
    }

    #[test]
    fn product_of_spheres_has_weyl_only() {
        let s2 = AlgebraicCurvature::<Q>::constant(2, q(1)).unwrap();
        let r = AlgebraicCurvature::product(&[s2.clone(), s2]).unwrap();
        let d = r.decompose().unwrap();
        assert!(d.omega1.is_zero());
        assert!(!d.omega2.is_zero());
    }

    #[test]
    fn general_matches_closed_form() {
        for n in 3..=7 {
            let r = random_algebraic_curvature::<Q>(n as u64, n, 3).unwrap();
            let d = r.decompose().unwrap();
            let g = decompose_general(r.form()).unwrap();
            assert_eq!(g.omegas[0].as_scalar().unwrap(), d.omega0);
            assert_eq!(g.omegas[1], d.omega1);
            if n >= 4 {
                assert_eq!(g.omegas[2], d.omega2);
            } else {
                assert!(d.omega2.is_zero());
            }
            assert_eq!(g.reconstruct().unwrap(), *r.form());
            assert!(g.trace_defect().is_zero());
        }
    }

    #[test]
    fn decomposition_of_riemann_square() {
        for n in [5, 6, 7, 8] {
            let r = random_algebraic_curvature::<Q>(40 + n as u64, n, 2).unwrap();
            let r2 = r.riemann_power(2).unwrap();
            let d = decompose_general(&r2).unwrap();
            assert_eq!(d.omegas.len(), 4.min(n - 4) + 1);
            assert_eq!(d.reconstruct().unwrap(), r2);
            assert!(d.trace_defect().is_zero());
            for p in 0..=n - 4 {
                assert_eq!(
                    r.pq_curvature_from_components(p, 2).unwrap(),
                    r.pq_curvature(p, 2).unwrap()
                );
            }
        }
    }

    #[test]
    fn same_weyl() {
        for n in 4..=6 {
            let r = random_algebraic_curvature::<Q>(50 + n as u64, n, 3).unwrap();
            for p in 0..=n - 2 {
                assert_eq!(r.same_weyl_expansion(p).unwrap(), r.dd_star_p(p).unwrap());
            }
            let d2 = AlgebraicCurvature::new_unchecked(r.dd_star_p(2).unwrap());
            assert_eq!(
                d2.decompose().unwrap().omega2,
                r.decompose().unwrap().omega2
            );
        }
    }

    #[test]
    fn inversion_round_trip() {
        let s4 = AlgebraicCurvature::<Q>::constant(4, q(1)).unwrap();
        let d2 = s4.dd_star_p(2).unwrap();
        assert_eq!(d2.contraction().unwrap(), s4.metric().scale(&q(3)));
        assert_eq!(invert_from_ddstar2(&d2).unwrap(), s4);
        for n in 4..=7 {
            let r = random_algebraic_curvature::<Q>(60 + n as u64, n, 3).unwrap();
            assert_eq!(invert_from_ddstar2(&r.dd_star_p(2).unwrap()).unwrap(), r);
        }
        let s3 = DoubleForm::<Q>::zeros(3, 2, 2).unwrap();
        assert!(invert_from_ddstar2(&s3).is_err());
    }

    #[test]
    fn rejects_non_bianchi_input() {
        let mut rng = crate::random::seeded(1);
        let w = crate::random::random_symmetric_pp::<Q>(5, 2, &mut rng);
        assert!(matches!(decompose_general(&w), Err(Error::Precondition(_))));
    }
}
