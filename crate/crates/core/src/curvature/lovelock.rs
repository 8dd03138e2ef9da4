use super::{ratio, AlgebraicCurvature};
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Result};
use crate::scalar::{factorial, Scalar};

/// Coefficient in `c R^{(p,q)} = k · R^{(p−1,q)}`; reduces to `n−p−1` when `q = 1`.
pub fn hereditary_coefficient(n: usize, p: usize, q: usize) -> i64 {
    n as i64 - 2 * q as i64 - p as i64 + 1
}

/// The coefficient `n−2q−p` as it appears in the printed hereditary relation.
pub fn printed_hereditary_coefficient(n: usize, p: usize, q: usize) -> i64 {
    hereditary_coefficient(n, p, q) - 1
}

/// `max_{2 <= 2q < n} min(2q, n−2q)` in closed form.
pub fn d_of_n(n: usize) -> Result<usize> {
    ensure!(n >= 4, Range, "d(n) needs n >= 4, got {n}");
    Ok(if n % 2 == 1 {
        (n - 1) / 2
    } else if n.is_multiple_of(4) {
        n / 2
    } else {
        (n - 2) / 2
    })
}

pub fn d_of_n_brute_force(n: usize) -> Result<usize> {
    ensure!(n >= 4, Range, "d(n) needs n >= 4, got {n}");
    Ok((1..)
        .map(|q| 2 * q)
        .take_while(|&t| t < n)
        .map(|t| t.min(n - t))
        .max()
        .unwrap_or(0))
}

/// Smallest `p` at which every trace-free component of `R^q` reaches `R^{(p,q)}`.
pub fn effective_p_threshold(n: usize, q: usize) -> Result<usize> {
    ensure!(
        q >= 1 && 2 * q < n,
        Range,
        "need 2 <= 2q < n, got n={n} q={q}"
    );
    Ok((2 * q).min(n - 2 * q))
}

impl<S: Scalar> AlgebraicCurvature<S> {
    fn check_pq(&self, p: usize, q: usize) -> Result<()> {
        let n = self.n();
        ensure!(q >= 1 && 2 * q <= n, Range, "q={q} outside 1..={}", n / 2);
        ensure!(
            p + 2 * q <= n,
            Range,
            "p={p} outside 0..={} for q={q}",
            n - 2 * q
        );
        Ok(())
    }

    /// `R^q`, the `q`-fold exterior power.
    pub fn riemann_power(&self, q: usize) -> Result<DoubleForm<S>> {
        let n = self.n();
        ensure!(2 * q <= n, Range, "R^{q} needs 2q <= n, got n={n}");
        let mut acc = DoubleForm::scalar(n, S::one())?;
        for _ in 0..q {
            acc = acc.exterior_product(self.form())?;
        }
        Ok(acc)
    }

    /// `R^{(p,q)} = *(g^{n−2q−p} R^q)/(n−2q−p)!`.
    pub fn pq_curvature(&self, p: usize, q: usize) -> Result<DoubleForm<S>> {
        self.check_pq(p, q)?;
        let k = self.n() - 2 * q - p;
        let w = self.riemann_power(q)?.metric_power_times(k)?.hodge_star();
        Ok(w.scale(&(S::one() / factorial(k))))
    }

    /// `c^{n−2q−p}(*R^q)/(n−2q−p)!`.
    pub fn pq_curvature_by_contraction(&self, p: usize, q: usize) -> Result<DoubleForm<S>> {
        self.check_pq(p, q)?;
        let k = self.n() - 2 * q - p;
        let w = self.riemann_power(q)?.hodge_star().contract_times(k)?;
        Ok(w.scale(&(S::one() / factorial(k))))
    }

    /// `Σ_r (−1)^r/r! · g^{p−2q+r}/(p−2q+r)! · c^r(R^q)` over `max(0,2q−p) <= r <= 2q`.
    pub fn pq_curvature_alternating(&self, p: usize, q: usize) -> Result<DoubleForm<S>> {
        self.check_pq(p, q)?;
        let rq = self.riemann_power(q)?;
        let mut acc = DoubleForm::zeros(self.n(), p, p)?;
        let mut cr = rq.contract_times((2 * q).saturating_sub(p))?;
        for r in (2 * q).saturating_sub(p)..=2 * q {
            let k = p + r - 2 * q;
            let coeff =
                S::from_i64(if r % 2 == 0 { 1 } else { -1 }) / (factorial::<S>(r) * factorial(k));
            acc = acc + cr.metric_power_times(k)?.scale(&coeff);
            if r < 2 * q {
                cr = cr.contraction()?;
            }
        }
        Ok(acc)
    }

    /// `T_{2q} = c^{2q}R^q/(2q)! · g − c^{2q−1}R^q/(2q−1)!`, with `T_0 = g`.
    pub fn lovelock(&self, q: usize) -> Result<DoubleForm<S>> {
        let n = self.n();
        if q == 0 {
            return DoubleForm::metric(n);
        }
        ensure!(2 * q <= n, Range, "T_{} needs 2q <= n, got n={n}", 2 * q);
        let top = self.riemann_power(q)?.contract_times(2 * q - 1)?;
        let full = top.contraction()?.as_scalar()?;
        let g = DoubleForm::metric(n)?;
        Ok(g.scale(&(full / factorial(2 * q))) - top.scale(&(S::one() / factorial(2 * q - 1))))
    }

    /// `T_4 = ½ c²(R∘*R*_2)·g − 2 c(R∘*R*_2)`.
    pub fn lovelock4_via_composition(&self) -> Result<DoubleForm<S>> {
        let n = self.n();
        ensure!(
            n >= 4,
            Dimension,
            "T_4 via composition needs n >= 4, got {n}"
        );
        let rd = self.form().composition(&self.ruse_lanczos_2()?)?;
        let c1 = rd.contraction()?;
        let c2 = c1.contraction()?.as_scalar()?;
        Ok(DoubleForm::metric(n)?.scale(&(c2 * ratio(1, 2))) - c1.scale(&S::from_i64(2)))
    }

    /// Entrywise `c³(R²) − 12 c(R∘*R*_2)`.
    pub fn cubic_contraction_lemma_defect(&self) -> Result<DoubleForm<S>> {
        let lhs = self.riemann_power(2)?.contract_times(3)?;
        let rd = self.form().composition(&self.ruse_lanczos_2()?)?;
        Ok(lhs - rd.contraction()?.scale(&S::from_i64(12)))
    }

    /// Entrywise `c(R∘(g·h)) − ι_h R − Ric∘h`.
    pub fn iota_lemma_defect(&self, h: &DoubleForm<S>) -> Result<DoubleForm<S>> {
        ensure!(
            h.bidegree() == (1, 1),
            Degree,
            "h must be (1,1), got {:?}",
            h.bidegree()
        );
        let lhs = self
            .form()
            .composition(&h.metric_power_times(1)?)?
            .contraction()?;
        let rhs = self.form().interior_iota(h)? + self.ricci().composition(h)?;
        Ok(lhs - rhs)
    }

    /// Gauss–Bonnet scalar `R^{(0,q)}`.
    pub fn gauss_bonnet(&self, q: usize) -> Result<S> {
        self.pq_curvature(0, q)?.as_scalar()
    }

    /// `|R|² − |Ric|² + ¼ Scal²`.
    pub fn h4_closed_form(&self) -> S {
        let ric = self.ricci();
        let scal = self.scal();
        self.form().norm_sq() - ric.norm_sq() + scal.clone() * scal * ratio(1, 4)
    }

    /// `⟨R, *R*_2⟩`.
    pub fn h4_inner(&self) -> Result<S> {
        self.form().inner_product(&self.ruse_lanczos_2()?)
    }

    /// Left-hand side `Σ_q α_q R^{(p,q)}` of the parent Lovelock equation; `α_0` multiplies `g^p/p!`.
    pub fn parent_lovelock_lhs(&self, p: usize, alphas: &[S]) -> Result<DoubleForm<S>> {
        let n = self.n();
        let mut acc = DoubleForm::zeros(n, p, p)?;
        for (q, a) in alphas.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = if q == 0 {
                crate::doubleform::normalized_metric_power(n, p)?
            } else {
                self.pq_curvature(p, q)?
            };
            acc = acc + term.scale(a);
        }
        Ok(acc)
    }
}
