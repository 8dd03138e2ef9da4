//! Algebraic curvature tensors and the hierarchy built on them.

mod decomposition;
mod hierarchy;
mod lovelock;
mod sectional;

pub use decomposition::{
    decompose_general, invert_from_ddstar2, DecompositionResult, RiemannDecomposition,
};
pub use hierarchy::CurvatureHierarchy;
pub use lovelock::{
    d_of_n, d_of_n_brute_force, effective_p_threshold, hereditary_coefficient,
    printed_hereditary_coefficient,
};
pub use sectional::{check_orthonormal, duality_defect, SpanningCase, FRAME_TOL};

use crate::doubleform::DoubleForm;
use crate::error::{ensure, Error, Result};
use crate::random::{random_kulkarni_sum, seeded};
use crate::scalar::Scalar;

/// Float tolerance used when validating symmetry and the first Bianchi identity.
pub const ALGEBRAIC_TOL: f64 = 1e-8;

/// A symmetric `(2,2)` double form satisfying the first Bianchi identity.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicCurvature<S> {
    form: DoubleForm<S>,
}

pub(crate) fn ratio<S: Scalar>(num: i64, den: i64) -> S {
    S::from_ratio(num, den)
}

fn relative_tol(w: &DoubleForm<impl Scalar>, tol: f64) -> f64 {
    tol * w.max_abs().max(1.0)
}

impl<S: Scalar> AlgebraicCurvature<S> {
    /// Validates symmetry and the first Bianchi identity (exact for rationals,
    /// relative tolerance [`ALGEBRAIC_TOL`] for floats).
    pub fn new(form: DoubleForm<S>) -> Result<Self> {
        Self::with_tolerance(form, ALGEBRAIC_TOL)
    }

    pub fn with_tolerance(form: DoubleForm<S>, tol: f64) -> Result<Self> {
        ensure!(
            form.bidegree() == (2, 2),
            Degree,
            "curvature tensor must be (2,2), got {:?}",
            form.bidegree()
        );
        ensure!(form.n() >= 2, Dimension, "curvature needs n >= 2");
        let tol = relative_tol(&form, tol);
        let sym = form.symmetry_defect()?;
        ensure!(
            sym.is_negligible(tol),
            Precondition,
            "not symmetric (defect {:e})",
            sym.abs_f64()
        );
        if form.n() == 2 {
            return Ok(AlgebraicCurvature { form });
        }
        let bianchi = form.first_bianchi_sum()?.max_abs_entry();
        ensure!(
            bianchi.is_negligible(tol),
            Precondition,
            "first Bianchi identity fails (defect {:e})",
            bianchi.abs_f64()
        );
        Ok(AlgebraicCurvature { form })
    }

    /// Skips validation; callers report the defects themselves.
    pub fn new_unchecked(form: DoubleForm<S>) -> Self {
        AlgebraicCurvature { form }
    }

    pub fn flat(n: usize) -> Result<Self> {
        Ok(AlgebraicCurvature {
            form: DoubleForm::zeros(n, 2, 2)?,
        })
    }

    /// Constant sectional curvature `k`: `R = (k/2) g²`.
    pub fn constant(n: usize, k: S) -> Result<Self> {
        ensure!(n >= 2, Dimension, "curvature needs n >= 2");
        let g2 = DoubleForm::metric_power(n, 2)?;
        Ok(AlgebraicCurvature {
            form: g2.scale(&(k / S::from_i64(2))),
        })
    }

    /// Block-diagonal tensor of a Riemannian product, factors in order.
    pub fn product(factors: &[AlgebraicCurvature<S>]) -> Result<Self> {
        ensure!(!factors.is_empty(), Input, "product of no factors");
        let n: usize = factors.iter().map(|f| f.n()).sum();
        let mut out = DoubleForm::zeros(n, 2, 2)?;
        let mut offset = 0;
        for f in factors {
            let m = f.n();
            for a in 0..m {
                for b in a + 1..m {
                    for c in 0..m {
                        for d in c + 1..m {
                            let v = f.form.component(&[a, b], &[c, d]);
                            let i = crate::MultiIndex::new(&[a + offset, b + offset], n)?;
                            let j = crate::MultiIndex::new(&[c + offset, d + offset], n)?;
                            out.set(i.rank(), j.rank(), v);
                        }
                    }
                }
            }
            offset += m;
        }
        Ok(AlgebraicCurvature { form: out })
    }

    pub fn n(&self) -> usize {
        self.form.n()
    }

    pub fn form(&self) -> &DoubleForm<S> {
        &self.form
    }

    pub fn into_form(self) -> DoubleForm<S> {
        self.form
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AlgebraicCurvature<T> {
        AlgebraicCurvature {
            form: self.form.map(f),
        }
    }

    pub fn symmetry_defect(&self) -> S {
        self.form.symmetry_defect().expect("(2,2) form")
    }

    pub fn bianchi_defect(&self) -> S {
        if self.n() == 2 {
            return S::zero();
        }
        self.form
            .first_bianchi_sum()
            .expect("(2,2) form")
            .max_abs_entry()
    }

    pub fn metric(&self) -> DoubleForm<S> {
        DoubleForm::metric(self.n()).expect("valid dimension")
    }

    /// `Ric = cR`.
    pub fn ricci(&self) -> DoubleForm<S> {
        self.form.contraction().expect("(2,2) form")
    }

    /// `Scal = c²R`.
    pub fn scal(&self) -> S {
        self.ricci()
            .contraction()
            .expect("(1,1) form")
            .as_scalar()
            .expect("scalar")
    }

    /// `½ Scal·g − Ric`.
    pub fn einstein(&self) -> DoubleForm<S> {
        let half_scal = self.scal() / S::from_i64(2);
        self.metric().scale(&half_scal) - self.ricci()
    }

    /// `Ric − (Scal/n) g`.
    pub fn traceless_ricci(&self) -> DoubleForm<S> {
        let mean = self.scal() / S::from_i64(self.n() as i64);
        self.ricci() - self.metric().scale(&mean)
    }

    /// Schouten tensor `A = (Ric − Scal/(2(n−1)) g)/(n−2)`; needs `n >= 3`.
    pub fn schouten(&self) -> Result<DoubleForm<S>> {
        let n = self.n() as i64;
        ensure!(n >= 3, Dimension, "Schouten tensor needs n >= 3, got {n}");
        let shift = self.scal() / S::from_i64(2 * (n - 1));
        Ok((self.ricci() - self.metric().scale(&shift)).scale(&ratio(1, n - 2)))
    }

    /// `R(x,y;x,y)`: the sectional curvature for an orthonormal pair.
    pub fn sectional(&self, x: &[S], y: &[S]) -> Result<S> {
        self.form
            .evaluate(&[x.to_vec(), y.to_vec()], &[x.to_vec(), y.to_vec()])
    }
}

impl<S: Scalar> TryFrom<DoubleForm<S>> for AlgebraicCurvature<S> {
    type Error = Error;
    fn try_from(form: DoubleForm<S>) -> Result<Self> {
        Self::new(form)
    }
}

/// `Σ_t h_t·h_t` over `terms` seeded random symmetric `(1,1)` forms with integer entries.
pub fn random_algebraic_curvature<S: Scalar>(
    seed: u64,
    n: usize,
    terms: usize,
) -> Result<AlgebraicCurvature<S>> {
    ensure!(n >= 2, Dimension, "curvature needs n >= 2, got {n}");
    ensure!(
        n <= crate::MAX_DIM,
        Dimension,
        "dimension {n} exceeds {}",
        crate::MAX_DIM
    );
    ensure!(terms >= 1, Input, "at least one term required");
    let mut rng = seeded(seed);
    Ok(AlgebraicCurvature::new_unchecked(random_kulkarni_sum(
        n, terms, &mut rng,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(v: i64) -> Rational {
        <Rational as Scalar>::from_i64(v)
    }

    #[test]
    fn sphere_ricci_scal_einstein() {
        let r = AlgebraicCurvature::<Rational>::constant(4, q(1)).unwrap();
        let g = r.metric();
        assert_eq!(r.ricci(), g.scale(&q(3)));
        assert_eq!(r.scal(), q(12));
        assert_eq!(r.einstein(), g.scale(&q(3)));
    }

    #[test]
    fn flat_is_zero() {
        let r = AlgebraicCurvature::<f64>::flat(5).unwrap();
        assert!(r.ricci().is_zero());
        assert_eq!(r.scal(), 0.0);
        assert!(r.einstein().is_zero());
    }

    #[test]
    fn product_of_two_spheres_is_einstein() {
        let s2 = AlgebraicCurvature::<Rational>::constant(2, q(1)).unwrap();
        let r = AlgebraicCurvature::product(&[s2.clone(), s2]).unwrap();
        assert_eq!(r.ricci(), r.metric());
        assert_eq!(r.scal(), q(4));
        assert!(AlgebraicCurvature::new(r.form().clone()).is_ok());
    }

    #[test]
    fn random_tensors_are_valid_and_deterministic() {
        for n in 2..=7 {
            let a = random_algebraic_curvature::<Rational>(9, n, 3).unwrap();
            assert!(AlgebraicCurvature::new(a.form().clone()).is_ok());
            let b = random_algebraic_curvature::<Rational>(9, n, 3).unwrap();
            assert_eq!(a, b);
        }
        let unit = DoubleForm::<f64>::metric(4).unwrap();
        let g2 = unit.exterior_product(&unit).unwrap();
        assert_eq!(
            g2,
            AlgebraicCurvature::constant(4, 2.0).unwrap().into_form()
        );
    }

    #[test]
    fn validation_rejects_generic_grids() {
        let mut rng = seeded(3);
        let w = crate::random::random_symmetric_pp::<Rational>(5, 2, &mut rng);
        assert!(matches!(
            AlgebraicCurvature::new(w),
            Err(Error::Precondition(_))
        ));
        let h = DoubleForm::<Rational>::metric(4).unwrap();
        assert!(matches!(AlgebraicCurvature::new(h), Err(Error::Degree(_))));
    }

    #[test]
    fn schouten_relation() {
        // Ric = (n−2)A + Scal/(2(n−1)) g
        let r = random_algebraic_curvature::<Rational>(4, 6, 3).unwrap();
        let a = r.schouten().unwrap();
        let shift = r.scal() * ratio::<Rational>(1, 10);
        assert_eq!(r.ricci(), a.scale(&q(4)) + r.metric().scale(&shift));
    }
}
