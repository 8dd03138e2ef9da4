//! Registry entries for the differential claims, evaluated numerically on metric charts.

use serde_json::json;

use super::acc::{Acc, Measure};
use super::{CheckDef, Ctx, Kind, FLOAT};
use crate::curvature::{duality_defect, SpanningCase};
use crate::doubleform::{normalized_metric_power, DoubleForm};
use crate::error::Result;
use crate::geometry::{
    bianchi_sum_d, christoffel, covariant_derivative, divergence_delta, metric_derivatives,
    riemann_at, star_delta_star, star_delta_star_sign, CurvatureField, DerivativeEngine,
    DifferentiationMode, MetricChart, MetricSpec, DEFAULT_FD_STEP,
};
use crate::random::{derive_seed, seeded, CurvRng};

const DUAL: DifferentiationMode = DifferentiationMode::Dual;

fn def(
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    tolerance: f64,
    run: super::RunFn,
) -> CheckDef {
    CheckDef {
        id,
        description,
        anchor,
        modes: FLOAT,
        kind: Kind::Asserted,
        tolerance,
        run,
    }
}

fn sphere(n: usize, radius: f64) -> MetricSpec {
    MetricSpec::Sphere { n, radius }
}

fn hyperbolic(n: usize, radius: f64) -> MetricSpec {
    MetricSpec::Hyperbolic { n, radius }
}

fn product(factors: Vec<MetricSpec>) -> MetricSpec {
    MetricSpec::Product { factors }
}

fn perturbed(n: usize, seed: u64) -> MetricSpec {
    MetricSpec::PerturbedFlat {
        n,
        seed,
        epsilon: 0.05,
        degree: 3,
    }
}

/// Models exercised by the catalog-wide checks.
fn catalog() -> Vec<MetricSpec> {
    vec![
        MetricSpec::Euclidean { n: 3 },
        sphere(4, 1.0),
        sphere(5, 2.0),
        hyperbolic(4, 1.0),
        MetricSpec::SpherePolar { radius: 1.5 },
        product(vec![sphere(2, 1.0), sphere(2, 1.0)]),
        product(vec![sphere(2, 1.0), hyperbolic(2, 1.0)]),
        product(vec![sphere(2, 1.0), sphere(3, 1.0)]),
        perturbed(4, 11),
    ]
}

fn chart(spec: MetricSpec) -> Result<MetricChart> {
    MetricChart::new(spec, DerivativeEngine::Dual)
}

fn rng(ctx: &Ctx, label: &str) -> CurvRng {
    seeded(derive_seed(ctx.seed, label))
}

pub(super) fn checks() -> Vec<CheckDef> {
    vec![
        def(
            "geometry.engine_consistency",
            "analytic, dual and finite-difference metric derivatives up to order 3 agree on every catalog model, relative to the largest analytic entry",
            "∂g, ∂²g, ∂³g from closed forms, dual numbers and central differences",
            1e-6,
            engine_consistency,
        ),
        def(
            "geometry.christoffel_polar",
            "polar S²(r): Γ^θ_φφ = −sinθ cosθ and Γ^φ_θφ = cotθ; Euclidean Γ = 0",
            "Γ^k_ij = ½ g^{kl}(∂_i g_jl + ∂_j g_il − ∂_l g_ij)",
            1e-10,
            christoffel_polar,
        ),
        def(
            "geometry.sphere_riemann",
            "framed R = k g²/2 on S^n(r) and H^n(r), k = ±1/r², n = 2..6",
            "constant curvature k: R = (k/2) g²",
            1e-8,
            sphere_riemann,
        ),
        def(
            "geometry.riemann_algebraic",
            "framed R is symmetric and satisfies the first Bianchi identity on every catalog model and sampled point",
            "𝔅R = 0, R symmetric",
            1e-8,
            riemann_algebraic,
        ),
        def(
            "geometry.model_expectations",
            "Scal, Ricci blocks, h₄, s_p, T₄ and duality flags match the catalog closed forms",
            "constant curvature and product closed forms",
            1e-8,
            model_expectations,
        ),
        def(
            "geometry.metric_parallel",
            "∇g = 0 on every catalog model",
            "metric compatibility of the Levi-Civita connection",
            1e-8,
            metric_parallel,
        ),
        def(
            "geometry.sphere_locally_symmetric",
            "∇R = 0 on S⁴(1), H⁴(1) and S²(1)×S²(1)",
            "locally symmetric spaces have ∇R = 0",
            1e-8,
            sphere_locally_symmetric,
        ),
        def(
            "geometry.modes_agree",
            "∇(*R*_2) by dual numbers and by finite differences agree on perturbed-flat, n = 4",
            "∇_{E_a}T by forward-mode and by central differences",
            1e-6,
            modes_agree,
        ),
        def(
            "geometry.divergence_ddstar",
            "δ(*R*_p) = 0 for 1 <= p <= n−2 on perturbed-flat, n = 4, 5, three seeds, five points each",
            "δ(*R*_p) = 0",
            1e-6,
            divergence_ddstar,
        ),
        def(
            "geometry.divergence_lovelock4",
            "δT₄ = 0 on perturbed-flat, n = 5, three seeds, five points each",
            "δT_{2q} = 0",
            1e-6,
            divergence_lovelock4,
        ),
        def(
            "geometry.second_bianchi",
            "DR = 0 on perturbed-flat, n = 4, 5",
            "DR = 0",
            1e-6,
            second_bianchi,
        ),
        def(
            "geometry.ddstar2_not_codazzi",
            "|D(*R*_2)| >= 1e−3 on at least one generic sample while δ(*R*_2) = 0; residual is the shortfall",
            "*R*_2 is divergence free but not Codazzi in general",
            1e-6,
            ddstar2_not_codazzi,
        ),
        def(
            "geometry.star_delta_star",
            "*δ*T = (−1)^{n+p} DT for T ∈ {*R*_2, Ric, Schouten} on perturbed-flat, n = 4, 5; equals (−1)^p D at n = 4",
            "*δ* = ±D on (p,p) forms",
            1e-6,
            star_delta_star_check,
        ),
        def(
            "geometry.codazzi_equivalence",
            "|δT| and |D(*T)| vanish together: both small for *R*_1, *R*_2, T₄; both large for Ric and g Scal",
            "T divergence free ⟺ *T Codazzi",
            1e-6,
            codazzi_equivalence,
        ),
        def(
            "geometry.einstein_divergence_free",
            "δ(Einstein) = 0 while δ(Ric) ≠ 0 on perturbed-flat, n = 4",
            "contracted second Bianchi identity",
            1e-6,
            einstein_divergence_free,
        ),
        def(
            "geometry.scal_gradient",
            "δ(g Scal) = −∇Scal on perturbed-flat, n = 4",
            "δ(g Scal) = −d Scal",
            1e-6,
            scal_gradient,
        ),
        def(
            "geometry.cotton",
            "c(DA) = 0 on perturbed-flat; DA = 0 and Scal constant on S⁵(1); DA ≠ 0 generically",
            "Cotton tensor DA is trace free",
            1e-8,
            cotton,
        ),
        def(
            "geometry.spanning_sets",
            "every tensor of the case b) spanning set has δ = 0 on S⁵(1) and S²(1)×S³(1); case a) is a singleton",
            "divergence-free R-linear (p,p) forms: spanning sets by case",
            1e-6,
            spanning_sets,
        ),
    ]
}

fn engine_consistency(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    for spec in catalog() {
        acc.dim(spec.dim());
        for _ in 0..2 {
            let x = spec.sample_point(&mut rng);
            let a = metric_derivatives(&spec, DerivativeEngine::Analytic, &x, 3)?;
            let d = metric_derivatives(&spec, DerivativeEngine::Dual, &x, 3)?;
            let f = metric_derivatives(
                &spec,
                DerivativeEngine::FiniteDifference {
                    step: DEFAULT_FD_STEP,
                },
                &x,
                3,
            )?;
            let scale = a.max_abs().max(1.0);
            acc.value(a.max_difference(&d) / scale);
            acc.value(a.max_difference(&f) / scale);
        }
    }
    acc.finish(json!({ "models": catalog().iter().map(|m| m.name()).collect::<Vec<_>>(), "points": 2, "fd_step": DEFAULT_FD_STEP }))
}

fn christoffel_polar(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(2).dim(3);
    let c = chart(MetricSpec::SpherePolar { radius: 1.5 })?;
    for th in [0.7f64, 1.2, 2.0] {
        let g = christoffel(&c, &[th, 0.3])?;
        acc.value((g[0][1][1] + th.sin() * th.cos()).abs());
        acc.value((g[1][0][1] - th.cos() / th.sin()).abs());
        acc.value((g[1][1][0] - th.cos() / th.sin()).abs());
        acc.value(g[0][0][0].abs() + g[1][1][1].abs() + g[1][0][0].abs());
    }
    let e = chart(MetricSpec::Euclidean { n: 3 })?;
    let worst = christoffel(&e, &[0.1, 0.2, 0.3])?
        .iter()
        .flatten()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    acc.value(worst);
    acc.finish(json!({ "model": "sphere_polar(1.5)", "theta": [0.7, 1.2, 2.0] }))
}

fn sphere_riemann(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    for n in 2..=6 {
        acc.dim(n);
        for (spec, k) in [
            (sphere(n, 1.0), 1.0),
            (sphere(n, 2.0), 0.25),
            (hyperbolic(n, 1.0), -1.0),
        ] {
            let c = chart(spec)?;
            let x = c.sample_point(&mut rng);
            let r = riemann_at(&c, &x)?.r;
            acc.forms(r.form(), &DoubleForm::metric_power(n, 2)?.scale(&(k / 2.0)))?;
        }
    }
    acc.finish(json!({ "n": "2..=6", "models": ["sphere(1)", "sphere(2)", "hyperbolic(1)"] }))
}

fn riemann_algebraic(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    for spec in catalog() {
        acc.dim(spec.dim());
        let c = chart(spec)?;
        for _ in 0..3 {
            let x = c.sample_point(&mut rng);
            let r = riemann_at(&c, &x)?.r;
            let scale = r.form().max_abs();
            acc.defect(&(r.form().clone() - r.form().transpose()), scale);
            if r.n() >= 3 {
                acc.defect(&r.form().first_bianchi_sum()?, scale);
            }
        }
    }
    acc.finish(json!({ "models": catalog().len(), "points": 3 }))
}

fn model_expectations(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    for spec in catalog() {
        let Some(e) = spec.expectations() else {
            continue;
        };
        let n = spec.dim();
        acc.dim(n);
        let c = chart(spec)?;
        let x = c.sample_point(&mut rng);
        let r = riemann_at(&c, &x)?.r;
        acc.scalars(&r.scal(), &e.scal);
        let ric = r.ricci();
        let mut expect = DoubleForm::zeros(n, 1, 1)?;
        let mut offset = 0;
        for &(m, l) in &e.ricci_blocks {
            for i in offset..offset + m {
                expect.set(i, i, l);
            }
            offset += m;
        }
        acc.forms(&ric, &expect)?;
        if let Some(h4) = e.h4 {
            acc.scalars(&r.gauss_bonnet(2)?, &h4);
        }
        if let Some(s) = &e.s_p {
            for (p, v) in s.iter().enumerate() {
                acc.forms(
                    &r.dd_star_p(p)?,
                    &normalized_metric_power::<f64>(n, p)?.scale(&(v / 2.0)),
                )?;
            }
        }
        if let Some(t4) = e.t4 {
            if n >= 5 {
                acc.forms(&r.lovelock(2)?, &r.metric().scale(&t4))?;
            }
        }
        let d2 = if n == 4 { Some(r.dd_star_p(2)?) } else { None };
        for (flag, sign) in [(e.self_dual, 1i8), (e.anti_self_dual, -1)] {
            if let (Some(flag), Some(d2)) = (flag, &d2) {
                let defect = duality_defect(d2, sign)?.abs();
                if flag {
                    acc.value(defect);
                } else {
                    acc.at_least(defect, 0.1);
                }
            }
        }
    }
    acc.finish(json!({ "models": "catalog models with closed forms" }))
}

fn max_family(family: &[DoubleForm<f64>]) -> f64 {
    family.iter().fold(0.0, |m, w| m.max(w.max_abs()))
}

fn metric_parallel(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    for spec in catalog() {
        acc.dim(spec.dim());
        let c = chart(spec)?;
        let x = c.sample_point(&mut rng);
        acc.value(max_family(&covariant_derivative(
            &c,
            &CurvatureField::Metric,
            &x,
            DUAL,
        )?));
    }
    acc.finish(json!({ "models": catalog().len(), "points": 1 }))
}

fn sphere_locally_symmetric(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    acc.dim(4);
    for spec in [
        sphere(4, 1.0),
        hyperbolic(4, 1.0),
        product(vec![sphere(2, 1.0), sphere(2, 1.0)]),
    ] {
        let c = chart(spec)?;
        let x = c.sample_point(&mut rng);
        acc.value(max_family(&covariant_derivative(
            &c,
            &CurvatureField::Riemann,
            &x,
            DUAL,
        )?));
    }
    acc.finish(json!({ "models": ["sphere(1)", "hyperbolic(1)", "sphere(1)xsphere(1)"] }))
}

fn modes_agree(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    acc.dim(4);
    let c = MetricChart::new(perturbed(4, 3), DerivativeEngine::Analytic)?;
    for _ in 0..2 {
        let x = c.sample_point(&mut rng);
        let a = covariant_derivative(&c, &CurvatureField::DdStar(2), &x, DUAL)?;
        let b = covariant_derivative(
            &c,
            &CurvatureField::DdStar(2),
            &x,
            DifferentiationMode::fd(),
        )?;
        for (u, v) in a.iter().zip(&b) {
            acc.value((u.clone() - v.clone()).max_abs());
        }
    }
    acc.finish(json!({ "model": "perturbed_flat(seed=3, eps=0.05, degree=3)", "points": 2, "fd_step": 1e-4 }))
}

const SEEDS: [u64; 3] = [1, 2, 3];
const POINTS: usize = 5;

/// Perturbed-flat charts over [`SEEDS`] with [`POINTS`] sample points each.
fn generic_samples(ctx: &Ctx, n: usize) -> Result<Vec<(MetricChart, Vec<f64>)>> {
    let mut out = Vec::new();
    for s in SEEDS {
        let c = chart(perturbed(
            n,
            derive_seed(ctx.seed, &format!("metric/{n}/{s}")),
        ))?;
        let mut rng = rng(ctx, &format!("points/{n}/{s}"));
        for _ in 0..POINTS {
            out.push((c.clone(), c.sample_point(&mut rng)));
        }
    }
    Ok(out)
}

fn divergence_ddstar(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in [4, 5] {
        acc.dim(n);
        for (c, x) in generic_samples(ctx, n)? {
            for p in 1..=n - 2 {
                acc.value(divergence_delta(&c, &CurvatureField::DdStar(p), &x, DUAL)?.max_abs());
            }
        }
    }
    acc.finish(json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "n": [4, 5], "seeds": 3, "points": POINTS }))
}

fn divergence_lovelock4(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(5);
    for (c, x) in generic_samples(ctx, 5)? {
        acc.value(divergence_delta(&c, &CurvatureField::Lovelock(2), &x, DUAL)?.max_abs());
    }
    acc.finish(json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "n": 5, "seeds": 3, "points": POINTS }))
}

fn second_bianchi(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in [4, 5] {
        acc.dim(n);
        for (c, x) in generic_samples(ctx, n)?.into_iter().step_by(POINTS) {
            acc.value(bianchi_sum_d(&c, &CurvatureField::Riemann, &x, DUAL)?.max_abs());
        }
    }
    acc.finish(json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "n": [4, 5], "seeds": 3, "points": 1 }))
}

fn ddstar2_not_codazzi(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    let mut best = 0.0f64;
    for n in [4, 5] {
        acc.dim(n);
        for (c, x) in generic_samples(ctx, n)?.into_iter().step_by(POINTS) {
            best = best.max(bianchi_sum_d(&c, &CurvatureField::DdStar(2), &x, DUAL)?.max_abs());
            acc.value(divergence_delta(&c, &CurvatureField::DdStar(2), &x, DUAL)?.max_abs());
        }
    }
    acc.at_least(best, 1e-3);
    acc.finish(json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "threshold": 1e-3, "max_norm": best }))
}

fn star_delta_star_check(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in [4, 5] {
        acc.dim(n);
        for (c, x) in generic_samples(ctx, n)?.into_iter().step_by(POINTS) {
            for (field, p) in [
                (CurvatureField::DdStar(2), 2),
                (CurvatureField::Ricci, 1),
                (CurvatureField::Schouten, 1),
            ] {
                let lhs = star_delta_star(&c, &field, &x, DUAL)?;
                let rhs = bianchi_sum_d(&c, &field, &x, DUAL)?.scale(&star_delta_star_sign(n, p));
                acc.value((lhs - rhs).max_abs());
            }
        }
    }
    acc.finish(
        json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "n": [4, 5], "sign": "(-1)^(n+p)" }),
    )
}

fn codazzi_equivalence(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(5);
    let samples = generic_samples(ctx, 5)?;
    let (c, x) = &samples[0];
    let fields = [
        (CurvatureField::DdStar(1), true),
        (CurvatureField::DdStar(2), true),
        (CurvatureField::Lovelock(2), true),
        (CurvatureField::Ricci, false),
        (CurvatureField::ScalMetric, false),
    ];
    for (field, free) in fields {
        let div = divergence_delta(c, &field, x, DUAL)?.max_abs();
        let starred = CurvatureField::Star(Box::new(field));
        let codazzi = bianchi_sum_d(c, &starred, x, DUAL)?.max_abs();
        if free {
            acc.value(div);
            acc.value(codazzi);
        } else {
            acc.at_least(div, 1e-4);
            acc.at_least(codazzi, 1e-4);
        }
    }
    acc.finish(
        json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "n": 5, "large_threshold": 1e-4 }),
    )
}

fn einstein_divergence_free(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    for (c, x) in generic_samples(ctx, 4)?.into_iter().step_by(POINTS) {
        acc.value(divergence_delta(&c, &CurvatureField::Einstein, &x, DUAL)?.max_abs());
        acc.at_least(
            divergence_delta(&c, &CurvatureField::Ricci, &x, DUAL)?.max_abs(),
            1e-4,
        );
    }
    acc.finish(json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "n": 4, "seeds": 3 }))
}

fn scal_gradient(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    for (c, x) in generic_samples(ctx, 4)?.into_iter().step_by(POINTS) {
        let d = divergence_delta(&c, &CurvatureField::ScalMetric, &x, DUAL)?;
        let grad = covariant_derivative(&c, &CurvatureField::Scal, &x, DUAL)?;
        for (b, g) in grad.iter().enumerate() {
            acc.value((d.get(0, b) + g.as_scalar()?).abs());
        }
        acc.at_least(max_family(&grad), 1e-4);
    }
    acc.finish(json!({ "model": "perturbed_flat(eps=0.05, degree=3)", "n": 4, "seeds": 3 }))
}

fn cotton(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4).dim(5);
    let mut generic = 0.0f64;
    for (c, x) in generic_samples(ctx, 4)?.into_iter().step_by(POINTS) {
        let da = bianchi_sum_d(&c, &CurvatureField::Schouten, &x, DUAL)?;
        generic = generic.max(da.max_abs());
        acc.value(da.contraction()?.max_abs());
    }
    acc.at_least(generic, 1e-4);
    let s = chart(sphere(5, 1.0))?;
    let mut rng = rng(ctx, "sphere");
    let x = s.sample_point(&mut rng);
    acc.value(bianchi_sum_d(&s, &CurvatureField::Schouten, &x, DUAL)?.max_abs());
    acc.value(max_family(&covariant_derivative(
        &s,
        &CurvatureField::Scal,
        &x,
        DUAL,
    )?));
    acc.finish(json!({ "models": ["perturbed_flat(eps=0.05, degree=3)", "sphere(1)"], "generic_threshold": 1e-4 }))
}

fn spanning_sets(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "points");
    let mut acc = Acc::new();
    acc.dim(5);
    let case_a = SpanningCase {
        weyl_harmonic: false,
        scal_constant: false,
    };
    let case_b = SpanningCase {
        weyl_harmonic: true,
        scal_constant: true,
    };
    let mut sizes = Vec::new();
    for spec in [
        sphere(5, 1.0),
        product(vec![sphere(2, 1.0), sphere(3, 1.0)]),
    ] {
        let c = chart(spec)?;
        let x = c.sample_point(&mut rng);
        let r = riemann_at(&c, &x)?.r;
        for p in 1..=3 {
            acc.holds(r.spanning_set(p, case_a)?.len() == 1);
            let set = r.spanning_set(p, case_b)?;
            sizes.push(set.len());
            for (label, w) in set {
                let field = CurvatureField::from_spanning_label(&label, p)?;
                acc.forms(&field.eval(&r)?, &w)?;
                acc.value(divergence_delta(&c, &field, &x, DUAL)?.max_abs());
            }
        }
    }
    acc.finish(json!({ "models": ["sphere(1) n=5", "sphere(1)xsphere(1) 2+3"], "p": "1..=3", "case_b_sizes": sizes }))
}
