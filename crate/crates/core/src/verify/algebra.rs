//! Registry entries for the algebraic identities (any scalar mode).

#![allow(clippy::extra_unused_type_parameters)]

use serde_json::json;

use super::acc::{Acc, Measure};
use super::oracle::{oracle_dd_star_p, oracle_pq_curvature};
use super::{CheckDef, Ctx, Kind, Mode, RunFn, EXACT, FLOAT};
use crate::combinatorics::{binomial, generalized_delta, permutation_sign, MultiIndex};
use crate::curvature::{
    d_of_n, d_of_n_brute_force, decompose_general, duality_defect, effective_p_threshold,
    hereditary_coefficient, invert_from_ddstar2, printed_hereditary_coefficient,
    random_algebraic_curvature, AlgebraicCurvature, DecompositionResult,
};
use crate::doubleform::{normalized_metric_power, DoubleForm};
use crate::error::Result;
use crate::random::{
    derive_seed, random_form, random_orthonormal_frame, random_symmetric, seeded, CurvRng,
};
use crate::scalar::{factorial, Rational, Scalar};

macro_rules! generic {
    ($f:ident) => {
        (|ctx: &Ctx| match ctx.mode {
            Mode::Float => $f::<f64>(ctx),
            Mode::Rational => $f::<Rational>(ctx),
        }) as RunFn
    };
}

fn def(id: &'static str, description: &'static str, anchor: &'static str, run: RunFn) -> CheckDef {
    CheckDef {
        id,
        description,
        anchor,
        modes: EXACT,
        kind: Kind::Asserted,
        tolerance: 1e-10,
        run,
    }
}

fn rng(ctx: &Ctx, label: &str) -> CurvRng {
    seeded(derive_seed(ctx.seed, label))
}

fn rand_r<S: Scalar>(ctx: &Ctx, n: usize, k: usize) -> Result<AlgebraicCurvature<S>> {
    random_algebraic_curvature(derive_seed(ctx.seed, &format!("R/{n}/{k}")), n, 3)
}

fn sphere<S: Scalar>(n: usize) -> Result<AlgebraicCurvature<S>> {
    AlgebraicCurvature::constant(n, S::one())
}

fn basis_vec<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    (0..n)
        .map(|k| if k == i { S::one() } else { S::zero() })
        .collect()
}

fn int<S: Scalar>(v: i64) -> S {
    S::from_i64(v)
}

pub(super) fn checks() -> Vec<CheckDef> {
    let mut v = vec![
        // combinatorics
        def(
            "combinatorics.rank_unrank",
            "rank/unrank of strictly increasing multi-indices round-trip; C(n,p) labels per degree, n <= 10",
            "MultiIndex: unrank(rank(I)) = I",
            generic!(rank_unrank),
        ),
        def(
            "combinatorics.generalized_delta",
            "generalized Kronecker delta equals the signed permutation sum on seeded random index tuples",
            "δ^{i₁…i_k}_{j₁…j_k} = det[δ^{i_a}_{j_b}]",
            generic!(delta_vs_permutations),
        ),
        // doubleform
        def(
            "doubleform.metric_powers",
            "g^k equals k! times the identity grid and the k-fold exterior product of g, n <= 7",
            "g^k = k! · Id on Λ^k",
            generic!(metric_powers),
        ),
        def(
            "doubleform.exterior_associative",
            "exterior product of random double forms is associative, n = 5",
            "(ω θ) ψ = ω (θ ψ)",
            generic!(exterior_associative),
        ),
        def(
            "doubleform.exterior_commutation",
            "ω θ = (−1)^{pr+qs} θ ω for random (p,q) and (r,s) forms, n = 5",
            "graded commutativity of the exterior product of double forms",
            generic!(exterior_commutation),
        ),
        def(
            "doubleform.double_star",
            "** ω = (−1)^{p(n−p)+q(n−q)} ω on random forms, n <= 6",
            "Hodge star applied to both factors",
            generic!(double_star),
        ),
        def(
            "doubleform.star_isometry",
            "⟨*a, *b⟩ = ⟨a, b⟩ on random forms, n <= 6",
            "* is an isometry",
            generic!(star_isometry),
        ),
        def(
            "doubleform.contraction_commutation",
            "c(g ω) − g c(ω) = (n−p−q) ω on random forms, n <= 6",
            "c g − g c = (n−p−q) Id",
            generic!(contraction_commutation),
        ),
        def(
            "doubleform.contraction_star_metric",
            "c^r ω = *(g^r *ω) on random (p,p) forms, n <= 6",
            "c^r = * g^r *",
            generic!(contraction_star_metric),
        ),
        def(
            "doubleform.iota_adjoint",
            "⟨ι_h ω, θ⟩ = ⟨ω, h θ⟩ on 100 random (h, ω, θ), n = 5",
            "ι_h is the adjoint of exterior multiplication by h",
            generic!(iota_adjoint),
        ),
        def(
            "doubleform.greub_vanstone",
            "(g k)∘(g h) = g (k∘h) + k h for random symmetric h, k, n = 5",
            "Greub–Vanstone identity for composition of (1,1) forms",
            generic!(greub_vanstone),
        ),
        def(
            "doubleform.kulkarni_bianchi",
            "h k satisfies the first Bianchi identity for symmetric h, k; a random (2,2) grid does not",
            "𝔅(h k) = 0 for symmetric (1,1) forms",
            generic!(kulkarni_bianchi),
        ),
        // hierarchy
        def(
            "hierarchy.oracle_dd_star",
            "*R*_p by the index-free route equals the literal generalized-delta sum; n ∈ {4,5,6}, all p <= n−2, 20 random tensors",
            "*R*_p components = ¼ Σ δ^{ab i₁…i_p}_{cd j₁…j_p} R_abcd",
            generic!(oracle_dd_star),
        ),
        def(
            "hierarchy.oracle_pq",
            "R^{(p,2)} equals the literal double generalized-delta sum; n = 5, p ∈ {0,1}, 5 random tensors",
            "R^{(p,q)} components = ((2q)!)^{−2} Σ δ^{A i…}_{B j…} R^q_{(A,B)}",
            generic!(oracle_pq),
        ),
        def(
            "hierarchy.oracle_sphere",
            "literal sum gives *R*_0 = 6 on S⁴(1) and 0 on flat R",
            "*R*_0 = ¼ Σ δ^{ab}_{cd} R_abcd = Scal/2",
            generic!(oracle_sphere),
        ),
        def(
            "hierarchy.contraction_route",
            "*(g^{n−p−2} R)/(n−p−2)! = c^{n−p−2}(*R)/(n−p−2)!, n = 2..7, all p",
            "*R*_p = c^{n−p−2}(*R)/(n−p−2)!",
            generic!(contraction_route),
        ),
        def(
            "hierarchy.expansion_route",
            "*R*_p = g^{p−2}R/(p−2)! − g^{p−1}Ric/(p−1)! + ½ g^p Scal/p!, n = 2..7, all p",
            "*R*_p = g^{p−2}R/(p−2)! − g^{p−1}Ric/(p−1)! + ½ g^p Scal/p!",
            generic!(expansion_route),
        ),
        def(
            "hierarchy.ruse_lanczos",
            "*R*_2 = R − g Ric + ¼ g² Scal, n = 4..7",
            "*R*_2 = R − g Ric + ¼ g² Scal",
            generic!(ruse_lanczos),
        ),
        def(
            "hierarchy.trace_relation",
            "c(*R*_p) = (n−p−1) *R*_{p−1}, n = 3..7, 1 <= p <= n−2",
            "c(*R*_p) = (n−p−1) *R*_{p−1}",
            generic!(trace_relation),
        ),
        def(
            "hierarchy.low_degrees",
            "*R*_0 = Scal/2 and *R*_1 = Einstein tensor, n = 3..7",
            "*R*_1 = ½ Scal g − Ric",
            generic!(low_degrees),
        ),
        def(
            "hierarchy.symmetric_bianchi",
            "every *R*_p is symmetric and satisfies the first Bianchi identity, n = 4..7",
            "*R*_p is a symmetric (p,p) form with 𝔅 = 0",
            generic!(symmetric_bianchi),
        ),
        def(
            "hierarchy.vanishing",
            "for 2 <= p <= n−2: *R*_p = 0 on flat R and *R*_p ≠ 0 on random nonzero R, n = 4..7",
            "*R*_p = 0 ⟺ R = 0 for 2 <= p <= n−2",
            generic!(vanishing),
        ),
        def(
            "hierarchy.same_weyl",
            "*R*_p = g^{p−2}ω₂/(p−2)! − (n−p−1)g^{p−1}ω₁/(p−1)! + (n−p)(n−p−1)g^pω₀/p!, n = 4..7",
            "*R*_p from the components of R = ω₂ + g ω₁ + g² ω₀",
            generic!(same_weyl),
        ),
        def(
            "hierarchy.decomposition",
            "R and R² reconstruct from their trace-free components; each ω_i is trace free, n = 4..6",
            "orthogonal decomposition ω = Σ g^{k−i} ω_i with c ω_i = 0",
            generic!(decomposition),
        ),
        def(
            "hierarchy.inversion_roundtrip",
            "R = D − g c(D)/(n−3) + g² c²(D)/(2(n−2)(n−3)) with D = *R*_2; 100 random tensors, n = 4..7",
            "*R*_2 determines R",
            generic!(inversion_roundtrip),
        ),
        def(
            "hierarchy.inversion_sphere4",
            "S⁴(1): D = g²/2 gives g²/2 − 3g² + 3g² = g²/2 = R",
            "*R*_2 determines R (S⁴ computation)",
            generic!(inversion_sphere4),
        ),
        def(
            "hierarchy.constant_curvature_table",
            "S^n(1), n = 4..7: Scal = n(n−1), Einstein = (n−1)(n−2)/2·g, s_p = (n−p)(n−p−1); T₄ = (n−1)!/(4(n−5)!)·g for n = 5,6; h₄(S⁴) = 6, h₄(S⁵) = 30",
            "constant curvature: *R*_p = (k/2)(n−p)(n−p−1) g^p/p!, T_{2q} = (k/2)^q (n−1)!/(n−2q−1)! g",
            generic!(constant_curvature_table),
        ),
        // sectional
        def(
            "sectional.scal_from_s2",
            "Σ_{i≠j} s₂(e_i,e_j) = (n−2)(n−3) Scal on random tensors, n = 4..7",
            "averaging s₂ over an orthonormal basis recovers Scal",
            generic!(scal_from_s2),
        ),
        def(
            "sectional.product_planes",
            "S²(1)×S²(1): s₂ = 0 on mixed planes, s₂ = 2 on factor planes; C₂ = (Scal − s₂)/2",
            "s_p(P) = 2 *R*_p(P,P)",
            generic!(product_planes),
        ),
        CheckDef {
            modes: FLOAT,
            ..def(
                "sectional.p_curvature_routes",
                "s_p(P) = 2 *R*_p(P,P) equals Scal − 2ΣRic(e_i,e_i) + 2Σ_{i<j}K(e_i,e_j) on 100 random orthonormal frames, n = 4..7",
                "s_p = Scal − 2 Σ Ric(e_i,e_i) + 2 Σ K(e_i,e_j)",
                p_curvature_routes,
            )
        },
        // duality
        def(
            "duality.self_dual_s4",
            "*R*_2 on S⁴(1) is self-dual",
            "n = 2p: *R*_p self-dual ⟺ Einstein",
            generic!(self_dual_s4),
        ),
        def(
            "duality.self_dual_s2xs2",
            "*R*_2 on S²(1)×S²(1) is self-dual",
            "n = 2p: *R*_p self-dual ⟺ Einstein",
            generic!(self_dual_s2xs2),
        ),
        def(
            "duality.anti_self_dual_s2xh2",
            "*R*_2 on S²(1)×H²(1) is anti-self-dual",
            "n = 2p: *R*_p anti-self-dual ⟺ conformally flat with Scal = 0",
            generic!(anti_self_dual_s2xh2),
        ),
        def(
            "duality.wrong_sign_s2xs2",
            "anti-self-dual defect of *R*_2 on S²(1)×S²(1) exceeds 0.1",
            "n = 2p duality is sign-sensitive",
            generic!(wrong_sign_s2xs2),
        ),
        // lovelock
        def(
            "lovelock.pq_routes",
            "R^{(p,q)}: *(g^{n−2q−p}R^q)/(n−2q−p)! = c^{n−2q−p}(*R^q)/(n−2q−p)! = alternating contraction sum, n = 4..7",
            "R^{(p,q)} = Σ_r (−1)^r g^{p−2q+r} c^r(R^q)/(r!(p−2q+r)!)",
            generic!(pq_routes),
        ),
        def(
            "lovelock.pq_special_cases",
            "R^{(p,1)} = *R*_p, R^{(1,q)} = T_{2q}, R^{(0,q)} = Gauss–Bonnet scalar, n = 4..7",
            "R^{(p,1)} = *R*_p and R^{(1,q)} = T_{2q}",
            generic!(pq_special_cases),
        ),
        def(
            "lovelock.hereditary",
            "c R^{(p,q)} = (n−2q−p+1) R^{(p−1,q)} for (n,q,p) ∈ {(5,2,1),(6,2,1),(6,2,2)} and q = 1, n = 4..7",
            "hereditary contraction of R^{(p,q)}",
            generic!(hereditary),
        ),
        def(
            "lovelock.parents_contract",
            "c^{p−1} R^{(p,q)} = Π_{j=2..p}(n−2q−j+1) T_{2q}, n = 5..7",
            "R^{(p,q)} are parents of T_{2q}",
            generic!(parents_contract),
        ),
        def(
            "lovelock.h4_three_routes",
            "R^{(0,2)} = |R|² − |Ric|² + ¼Scal² = ⟨R, *R*_2⟩ on 100 random tensors, n = 4..6",
            "h₄ = ⟨R, *R*_2⟩ = |R|² − |Ric|² + ¼ Scal²",
            generic!(h4_three_routes),
        ),
        def(
            "lovelock.iota_lemma",
            "c(R∘(g h)) = ι_h R + Ric∘h on 50 random (R, h), n = 5, 6",
            "c(R∘(g h)) = ι_h R + Ric∘h",
            generic!(iota_lemma),
        ),
        def(
            "lovelock.greub_vanstone",
            "Greub–Vanstone identity on 50 random symmetric pairs, n = 5, 6",
            "(g k)∘(g h) = g (k∘h) + k h",
            generic!(greub_vanstone_50),
        ),
        def(
            "lovelock.cubic_contraction",
            "c³(R²) = 12 c(R∘*R*_2) on 50 random tensors, n = 5, 6",
            "c³R² = 12 c(R∘*R*_2)",
            generic!(cubic_contraction),
        ),
        def(
            "lovelock.t4_composition",
            "T₄ = ½ c²(R∘*R*_2) g − 2 c(R∘*R*_2) equals c⁴R²/24 g − c³R²/6 on 50 random tensors, n = 5, 6",
            "T₄ via composition with *R*_2",
            generic!(t4_composition),
        ),
        def(
            "lovelock.component_expansion",
            "R^{(p,q)} assembled from the trace-free components of R^q equals R^{(p,q)}, n = 4..7",
            "R^{(p,q)} = Σ_i coefficients · g^{p−i} ω_i",
            generic!(component_expansion),
        ),
        def(
            "lovelock.d_of_n",
            "closed form of d(n) = max_{2<=2q<n} min(2q, n−2q) matches brute force, n = 4..12",
            "d(n) = (n−1)/2, n/2 or (n−2)/2 by n mod 4",
            generic!(d_of_n_check),
        ),
        def(
            "lovelock.effective_threshold",
            "all trace-free components of R^q reach R^{(p,q)} iff p >= min(2q, n−2q), by a Lefschetz test on g^{n−p−i}ω_i, n = 4..12",
            "components of R^q survive in R^{(p,q)} iff p >= min(2q, n−2q)",
            generic!(effective_threshold),
        ),
    ];
    let mut reported = vec![
        CheckDef {
            kind: Kind::Reported,
            ..def(
                "reported.hereditary_printed_coefficient",
                "relative residual of c R^{(p,q)} = (n−2q−p) R^{(p−1,q)} (printed coefficient); the corrected coefficient n−2q−p+1 is asserted in lovelock.hereditary",
                "hereditary contraction of R^{(p,q)} (printed coefficient)",
                generic!(hereditary_printed),
            )
        },
        CheckDef {
            kind: Kind::Reported,
            ..def(
                "reported.inversion_printed_g",
                "the printed last term g·c²(*R*_2)/(2(n−2)(n−3)) is a (1,1) form; residual is the size of the (2,2) term g²·c²(*R*_2)/(2(n−2)(n−3)) it has to supply",
                "*R*_2 determines R (printed metric factor)",
                generic!(inversion_printed),
            )
        },
    ];
    v.append(&mut reported);
    v
}

/// A check whose optimized side is deliberately perturbed; it must fail.
pub(super) fn corrupt_check() -> CheckDef {
    def(
        "harness.self_test_corrupt",
        "oracle comparison with one entry of *R*_1 perturbed by 1/1000; must fail",
        "harness self-test",
        generic!(corrupted),
    )
}

// ---------------------------------------------------------------------------

fn rank_unrank<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in 1..=10 {
        acc.dim(n);
        for p in 0..=n {
            let all = MultiIndex::all(n, p);
            acc.holds(all.len() == binomial(n, p));
            for (k, i) in all.iter().enumerate() {
                acc.holds(i.rank() == k && MultiIndex::unrank(n, p, k)? == *i);
            }
        }
    }
    acc.finish(json!({ "n": "1..=10" }))
}

fn delta_vs_permutations<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    use rand::Rng;
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..k {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    let mut rng = rng(ctx, "tuples");
    let mut acc = Acc::new();
    for _ in 0..200 {
        let k = rng.gen_range(0..=4);
        let up: Vec<usize> = (0..k).map(|_| rng.gen_range(0..5)).collect();
        let low: Vec<usize> = (0..k).map(|_| rng.gen_range(0..5)).collect();
        let brute: i64 = perms(k)
            .iter()
            .filter(|s| (0..k).all(|a| up[a] == low[s[a]]))
            .map(|s| permutation_sign(s) as i64)
            .sum();
        acc.holds(generalized_delta(&up, &low)? == brute);
    }
    acc.finish(json!({ "samples": 200, "max_len": 4, "values": "0..5" }))
}

fn metric_powers<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in 1..=7 {
        acc.dim(n);
        let g = DoubleForm::<S>::metric(n)?;
        let mut prod = DoubleForm::<S>::scalar(n, S::one())?;
        for k in 0..=n {
            let id = normalized_metric_power::<S>(n, k)?.scale(&factorial(k));
            acc.forms(&DoubleForm::metric_power(n, k)?, &id)?;
            acc.forms(&prod, &id)?;
            if k < n {
                prod = prod.exterior_product(&g)?;
            }
        }
    }
    acc.finish(json!({ "n": "1..=7" }))
}

fn exterior_associative<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "forms");
    let mut acc = Acc::new();
    acc.dim(5);
    for (a, b, c) in [
        ((1, 1), (1, 2), (2, 1)),
        ((2, 1), (1, 1), (1, 1)),
        ((1, 0), (2, 2), (1, 1)),
    ] {
        let x = random_form::<S>(5, a.0, a.1, &mut rng);
        let y = random_form::<S>(5, b.0, b.1, &mut rng);
        let z = random_form::<S>(5, c.0, c.1, &mut rng);
        acc.forms(
            &x.exterior_product(&y)?.exterior_product(&z)?,
            &x.exterior_product(&y.exterior_product(&z)?)?,
        )?;
    }
    acc.finish(json!({ "n": 5 }))
}

fn exterior_commutation<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "forms");
    let mut acc = Acc::new();
    acc.dim(5);
    for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (0, 1)] {
        for (r, s) in [(1, 1), (2, 1), (1, 0), (2, 2)] {
            if p + r > 5 || q + s > 5 {
                continue;
            }
            let a = random_form::<S>(5, p, q, &mut rng);
            let b = random_form::<S>(5, r, s, &mut rng);
            let ab = a.exterior_product(&b)?;
            let ba = b.exterior_product(&a)?;
            let even = (p * r + q * s) % 2 == 0;
            acc.forms(&ab, &if even { ba } else { -ba })?;
        }
    }
    acc.finish(json!({ "n": 5 }))
}

fn double_star<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "forms");
    let mut acc = Acc::new();
    for n in 1..=6 {
        acc.dim(n);
        for p in 0..=n {
            for q in 0..=n {
                let w = random_form::<S>(n, p, q, &mut rng);
                let even = (p * (n - p) + q * (n - q)) % 2 == 0;
                acc.forms(
                    &w.hodge_star().hodge_star(),
                    &if even { w.clone() } else { -w },
                )?;
            }
        }
    }
    acc.finish(json!({ "n": "1..=6" }))
}

fn star_isometry<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "forms");
    let mut acc = Acc::new();
    for n in 2..=6 {
        acc.dim(n);
        for (p, q) in [(1, 1), (2, 1), (2, 2), (0, 2)] {
            let a = random_form::<S>(n, p, q, &mut rng);
            let b = random_form::<S>(n, p, q, &mut rng);
            acc.scalars(
                &a.inner_product(&b)?,
                &a.hodge_star().inner_product(&b.hodge_star())?,
            );
        }
    }
    acc.finish(json!({ "n": "2..=6" }))
}

fn contraction_commutation<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "forms");
    let mut acc = Acc::new();
    for n in 2..=6 {
        acc.dim(n);
        for p in 1..n {
            for q in 1..n {
                let w = random_form::<S>(n, p, q, &mut rng);
                let lhs = w.metric_power_times(1)?.contraction()?
                    - w.contraction()?.metric_power_times(1)?;
                acc.forms(&lhs, &w.scale(&int(n as i64 - p as i64 - q as i64)))?;
            }
        }
    }
    acc.finish(json!({ "n": "2..=6" }))
}

fn contraction_star_metric<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "forms");
    let mut acc = Acc::new();
    for n in 2..=6 {
        acc.dim(n);
        for p in 1..=n {
            let w = random_form::<S>(n, p, p, &mut rng);
            for r in 1..=p {
                let starred = w.hodge_star().metric_power_times(r)?.hodge_star();
                acc.forms(&w.contract_times(r)?, &starred)?;
            }
        }
    }
    acc.finish(json!({ "n": "2..=6" }))
}

fn iota_adjoint<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "forms");
    let mut acc = Acc::new();
    acc.dim(5);
    for _ in 0..100 {
        let h = random_symmetric::<S>(5, &mut rng);
        let w = random_form::<S>(5, 3, 2, &mut rng);
        let v = random_form::<S>(5, 2, 1, &mut rng);
        acc.scalars(
            &w.interior_iota(&h)?.inner_product(&v)?,
            &w.inner_product(&h.exterior_product(&v)?)?,
        );
    }
    acc.finish(json!({ "n": 5, "samples": 100 }))
}

fn gv_defect<S: Scalar>(
    h: &DoubleForm<S>,
    k: &DoubleForm<S>,
) -> Result<(DoubleForm<S>, DoubleForm<S>)> {
    let lhs = k
        .metric_power_times(1)?
        .composition(&h.metric_power_times(1)?)?;
    let rhs = k.composition(h)?.metric_power_times(1)? + k.exterior_product(h)?;
    Ok((lhs, rhs))
}

fn greub_vanstone<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "sym");
    let mut acc = Acc::new();
    acc.dim(5);
    for _ in 0..20 {
        let h = random_symmetric::<S>(5, &mut rng);
        let k = random_symmetric::<S>(5, &mut rng);
        let (l, r) = gv_defect(&h, &k)?;
        acc.forms(&l, &r)?;
    }
    acc.finish(json!({ "n": 5, "samples": 20 }))
}

fn kulkarni_bianchi<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "sym");
    let mut acc = Acc::new();
    for n in 3..=6 {
        acc.dim(n);
        let h = random_symmetric::<S>(n, &mut rng);
        let k = random_symmetric::<S>(n, &mut rng);
        let hk = h.exterior_product(&k)?;
        acc.defect(&hk.first_bianchi_sum()?, hk.max_abs());
        let w = random_form::<S>(n, 2, 2, &mut rng);
        acc.holds(!w.first_bianchi_sum()?.is_negligible(1e-12));
    }
    acc.finish(json!({ "n": "3..=6" }))
}

fn oracle_dd_star<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in 4..=6 {
        acc.dim(n);
        for k in 0..20 {
            let r = rand_r::<S>(ctx, n, k)?;
            for p in 0..=n - 2 {
                acc.forms(&r.dd_star_p(p)?, &oracle_dd_star_p(&r, p)?)?;
            }
        }
    }
    acc.finish(json!({ "n": [4, 5, 6], "tensors": 20, "p": "0..=n-2" }))
}

fn oracle_pq<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(5);
    for k in 0..5 {
        let r = rand_r::<S>(ctx, 5, k)?;
        for p in 0..=1 {
            acc.forms(&r.pq_curvature(p, 2)?, &oracle_pq_curvature(&r, p, 2)?)?;
        }
        acc.scalars(
            &oracle_pq_curvature(&r, 0, 2)?.as_scalar()?,
            &r.gauss_bonnet(2)?,
        );
        acc.forms(&oracle_pq_curvature(&r, 2, 1)?, &oracle_dd_star_p(&r, 2)?)?;
    }
    let s5 = sphere::<S>(5)?;
    acc.forms(
        &oracle_pq_curvature(&s5, 1, 2)?,
        &s5.metric().scale(&int(6)),
    )?;
    acc.finish(json!({ "n": 5, "q": 2, "p": [0, 1], "tensors": 5 }))
}

fn oracle_sphere<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4).dim(5);
    acc.scalars(
        &oracle_dd_star_p(&sphere::<S>(4)?, 0)?.as_scalar()?,
        &int(6),
    );
    let flat = AlgebraicCurvature::<S>::flat(5)?;
    for p in 0..=3 {
        acc.defect(&oracle_dd_star_p(&flat, p)?, 1.0);
    }
    acc.finish(json!({ "models": ["S4(1)", "flat n=5"] }))
}

fn for_random<S: Scalar>(
    ctx: &Ctx,
    dims: std::ops::RangeInclusive<usize>,
    count: usize,
    mut f: impl FnMut(&mut Acc, &AlgebraicCurvature<S>) -> Result<()>,
) -> Result<Acc> {
    let mut acc = Acc::new();
    for n in dims {
        acc.dim(n);
        for k in 0..count {
            f(&mut acc, &rand_r::<S>(ctx, n, k)?)?;
        }
    }
    Ok(acc)
}

fn contraction_route<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 2..=7, 2, |acc, r| {
        for p in 0..=r.n() - 2 {
            acc.forms(&r.dd_star_p(p)?, &r.dd_star_by_contraction(p)?)?;
        }
        Ok(())
    })?
    .finish(json!({ "n": "2..=7", "tensors": 2 }))
}

fn expansion_route<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 2..=7, 2, |acc, r| {
        for p in 0..=r.n() - 2 {
            acc.forms(&r.dd_star_p(p)?, &r.dd_star_expansion(p)?)?;
        }
        Ok(())
    })?
    .finish(json!({ "n": "2..=7", "tensors": 2 }))
}

fn ruse_lanczos<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=7, 3, |acc, r| {
        acc.forms(&r.dd_star_p(2)?, &r.ruse_lanczos_2()?)
    })?
    .finish(json!({ "n": "4..=7", "tensors": 3 }))
}

fn trace_relation<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 3..=7, 2, |acc, r| {
        let n = r.n();
        for p in 1..=n - 2 {
            let lhs = r.dd_star_p(p)?.contraction()?;
            acc.forms(&lhs, &r.dd_star_p(p - 1)?.scale(&int((n - p - 1) as i64)))?;
        }
        Ok(())
    })?
    .finish(json!({ "n": "3..=7", "tensors": 2 }))
}

fn low_degrees<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 3..=7, 2, |acc, r| {
        acc.scalars(
            &r.dd_star_p(0)?.as_scalar()?,
            &(r.scal() * S::from_ratio(1, 2)),
        );
        acc.forms(&r.dd_star_p(1)?, &r.einstein())
    })?
    .finish(json!({ "n": "3..=7", "tensors": 2 }))
}

fn symmetric_bianchi<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=7, 1, |acc, r| {
        for p in 1..=r.n() - 2 {
            let d = r.dd_star_p(p)?;
            acc.forms(&d, &d.transpose())?;
            acc.defect(&d.first_bianchi_sum()?, d.max_abs());
        }
        Ok(())
    })?
    .finish(json!({ "n": "4..=7", "tensors": 1 }))
}

fn vanishing<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut acc = for_random::<S>(ctx, 4..=7, 2, |acc, r| {
        for p in 2..=r.n() - 2 {
            acc.holds(!r.dd_star_p(p)?.is_negligible(1e-9));
        }
        Ok(())
    })?;
    for n in 4..=7 {
        let flat = AlgebraicCurvature::<S>::flat(n)?;
        for p in 2..=n - 2 {
            acc.defect(&flat.dd_star_p(p)?, 1.0);
        }
    }
    acc.finish(json!({ "n": "4..=7", "tensors": 2 }))
}

fn same_weyl<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=7, 2, |acc, r| {
        for p in 0..=r.n() - 2 {
            acc.forms(&r.dd_star_p(p)?, &r.same_weyl_expansion(p)?)?;
        }
        Ok(())
    })?
    .finish(json!({ "n": "4..=7", "tensors": 2 }))
}

fn check_decomposition<S: Scalar>(
    acc: &mut Acc,
    w: &DoubleForm<S>,
    d: &DecompositionResult<S>,
) -> Result<()> {
    acc.forms(w, &d.reconstruct()?)?;
    acc.scalars(&d.trace_defect(), &S::zero());
    Ok(())
}

fn decomposition<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=6, 1, |acc, r| {
        check_decomposition(acc, r.form(), &decompose_general(r.form())?)?;
        let r2 = r.riemann_power(2)?;
        check_decomposition(acc, &r2, &decompose_general(&r2)?)?;
        let d = r.decompose()?;
        let rebuilt = d.omega2.clone()
            + d.omega1.metric_power_times(1)?
            + DoubleForm::metric_power(r.n(), 2)?.scale(&d.omega0);
        acc.forms(r.form(), &rebuilt)
    })?
    .finish(json!({ "n": "4..=6", "tensors": 1 }))
}

fn inversion_roundtrip<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for k in 0..100 {
        let n = 4 + k % 4;
        acc.dim(n);
        let r = rand_r::<S>(ctx, n, k)?;
        acc.forms(invert_from_ddstar2(&r.dd_star_p(2)?)?.form(), r.form())?;
    }
    acc.finish(json!({ "n": "4..=7", "tensors": 100 }))
}

fn inversion_sphere4<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    let s4 = sphere::<S>(4)?;
    let d = s4.dd_star_p(2)?;
    let g2 = DoubleForm::<S>::metric_power(4, 2)?;
    acc.forms(&d, &g2.scale(&S::from_ratio(1, 2)))?;
    let c1 = d.contraction()?;
    acc.forms(&c1, &s4.metric().scale(&int(3)))?;
    // g·c(D)/(n−3) = 3g² and g²·c²(D)/(2·2·1) = 3g²
    acc.forms(&c1.metric_power_times(1)?, &g2.scale(&int(3)))?;
    let c2 = c1.contraction()?.as_scalar()?;
    acc.scalars(&(c2 * S::from_ratio(1, 4)), &int(3));
    acc.forms(invert_from_ddstar2(&d)?.form(), s4.form())?;
    acc.finish(json!({ "model": "S4(1)" }))
}

fn constant_curvature_table<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in 4..=7 {
        acc.dim(n);
        let r = sphere::<S>(n)?;
        let ni = n as i64;
        acc.scalars(&r.scal(), &int(ni * (ni - 1)));
        acc.forms(
            &r.einstein(),
            &r.metric().scale(&S::from_ratio((ni - 1) * (ni - 2), 2)),
        )?;
        for p in 0..=n - 2 {
            let frame: Vec<Vec<S>> = (0..p).map(|i| basis_vec(n, i)).collect();
            let expect = int(((n - p) * (n - p - 1)) as i64);
            acc.scalars(&r.p_curvature(&frame)?, &expect);
            let dd = normalized_metric_power::<S>(n, p)?.scale(&(expect * S::from_ratio(1, 2)));
            acc.forms(&r.dd_star_p(p)?, &dd)?;
        }
        if n == 5 || n == 6 {
            // (k/2)^q (n−1)!/(n−2q−1)! at k = 1, q = 2
            let closed = factorial::<S>(n - 1) / (factorial::<S>(n - 5) * int(4));
            acc.forms(&r.lovelock(2)?, &r.metric().scale(&closed))?;
        }
    }
    acc.scalars(&sphere::<S>(4)?.h4_closed_form(), &int(6));
    acc.scalars(&sphere::<S>(5)?.gauss_bonnet(2)?, &int(30));
    acc.finish(json!({ "model": "S^n(1)", "n": "4..=7", "t4_s5": 6, "t4_s6": 30, "h4_s4": 6, "h4_s5": 30 }))
}

fn scal_from_s2<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=7, 2, |acc, r| {
        acc.scalars(&r.scal_from_s2()?, &r.scal());
        Ok(())
    })?
    .finish(json!({ "n": "4..=7", "tensors": 2 }))
}

fn product_planes<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    let s2 = sphere::<S>(2)?;
    let r = AlgebraicCurvature::product(&[s2.clone(), s2])?;
    let e = |i| basis_vec::<S>(4, i);
    for (a, b, expect) in [
        (0, 1, 2),
        (2, 3, 2),
        (0, 2, 0),
        (0, 3, 0),
        (1, 2, 0),
        (1, 3, 0),
    ] {
        acc.scalars(&r.p_curvature(&[e(a), e(b)])?, &int(expect));
        acc.scalars(&r.cp_curvature(&[e(a), e(b)])?, &int((4 - expect) / 2));
    }
    acc.finish(json!({ "model": "S2(1)xS2(1)" }))
}

fn s2xs2<S: Scalar>() -> Result<AlgebraicCurvature<S>> {
    let s2 = sphere::<S>(2)?;
    AlgebraicCurvature::product(&[s2.clone(), s2])
}

fn self_dual_s4<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    acc.scalars(
        &duality_defect(&sphere::<S>(4)?.dd_star_p(2)?, 1)?,
        &S::zero(),
    );
    acc.finish(json!({ "model": "S4(1)", "sign": 1 }))
}

fn self_dual_s2xs2<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    acc.scalars(
        &duality_defect(&s2xs2::<S>()?.dd_star_p(2)?, 1)?,
        &S::zero(),
    );
    acc.finish(json!({ "model": "S2(1)xS2(1)", "sign": 1 }))
}

fn anti_self_dual_s2xh2<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    let r = AlgebraicCurvature::product(&[
        sphere::<S>(2)?,
        AlgebraicCurvature::constant(2, -S::one())?,
    ])?;
    acc.scalars(&duality_defect(&r.dd_star_p(2)?, -1)?, &S::zero());
    acc.finish(json!({ "model": "S2(1)xH2(1)", "sign": -1 }))
}

fn wrong_sign_s2xs2<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(4);
    let d = duality_defect(&s2xs2::<S>()?.dd_star_p(2)?, -1)?.abs_f64();
    acc.at_least(d, 0.1);
    acc.finish(json!({ "model": "S2(1)xS2(1)", "sign": -1, "threshold": 0.1, "defect": d }))
}

fn pq_routes<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=7, 1, |acc, r| {
        let n = r.n();
        for q in 1..=n / 2 {
            for p in 0..=n - 2 * q {
                let a = r.pq_curvature(p, q)?;
                acc.forms(&a, &r.pq_curvature_by_contraction(p, q)?)?;
                acc.forms(&a, &r.pq_curvature_alternating(p, q)?)?;
            }
        }
        Ok(())
    })?
    .finish(json!({ "n": "4..=7", "tensors": 1 }))
}

fn pq_special_cases<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=7, 1, |acc, r| {
        let n = r.n();
        for p in 0..=n - 2 {
            acc.forms(&r.pq_curvature(p, 1)?, &r.dd_star_p(p)?)?;
        }
        for q in 1..=n / 2 {
            if 2 * q < n {
                acc.forms(&r.pq_curvature(1, q)?, &r.lovelock(q)?)?;
            }
            let full = r.riemann_power(q)?.contract_times(2 * q)?.as_scalar()? / factorial(2 * q);
            acc.scalars(&r.gauss_bonnet(q)?, &full);
        }
        Ok(())
    })?
    .finish(json!({ "n": "4..=7", "tensors": 1 }))
}

fn hereditary_cases() -> Vec<(usize, usize, usize)> {
    let mut cases = vec![(5, 2, 1), (6, 2, 1), (6, 2, 2)];
    for n in 4..=7 {
        for p in 1..=n - 2 {
            cases.push((n, 1, p));
        }
    }
    cases
}

fn hereditary_with<S: Scalar>(ctx: &Ctx, coeff: fn(usize, usize, usize) -> i64) -> Result<Acc> {
    let mut acc = Acc::new();
    for (k, (n, q, p)) in hereditary_cases().into_iter().enumerate() {
        acc.dim(n);
        let r = rand_r::<S>(ctx, n, k)?;
        let lhs = r.pq_curvature(p, q)?.contraction()?;
        acc.forms(&lhs, &r.pq_curvature(p - 1, q)?.scale(&int(coeff(n, p, q))))?;
    }
    Ok(acc)
}

fn hereditary<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    hereditary_with::<S>(ctx, hereditary_coefficient)?.finish(
        json!({ "cases": "(5,2,1),(6,2,1),(6,2,2) and q=1, n=4..=7", "coefficient": "n-2q-p+1" }),
    )
}

fn hereditary_printed<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    hereditary_with::<S>(ctx, printed_hereditary_coefficient)?.finish(
        json!({ "cases": "(5,2,1),(6,2,1),(6,2,2) and q=1, n=4..=7", "coefficient": "n-2q-p" }),
    )
}

fn parents_contract<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 5..=7, 1, |acc, r| {
        let n = r.n();
        for q in 1..=n / 2 {
            if 2 * q >= n {
                continue;
            }
            for p in 2..=n - 2 * q {
                let lhs = r.pq_curvature(p, q)?.contract_times(p - 1)?;
                let k: i64 = (2..=p)
                    .map(|j| n as i64 - 2 * q as i64 - j as i64 + 1)
                    .product();
                acc.forms(&lhs, &r.lovelock(q)?.scale(&int(k)))?;
            }
        }
        Ok(())
    })?
    .finish(json!({ "n": "5..=7", "tensors": 1 }))
}

fn h4_three_routes<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for k in 0..100 {
        let n = 4 + k % 3;
        acc.dim(n);
        let r = rand_r::<S>(ctx, n, k)?;
        let h = r.h4_closed_form();
        acc.scalars(&r.gauss_bonnet(2)?, &h);
        acc.scalars(&r.h4_inner()?, &h);
    }
    acc.finish(json!({ "n": "4..=6", "tensors": 100 }))
}

fn lemma_loop<S: Scalar>(
    ctx: &Ctx,
    mut f: impl FnMut(&mut Acc, &AlgebraicCurvature<S>, &mut CurvRng) -> Result<()>,
) -> Result<Measure> {
    let mut acc = Acc::new();
    let mut rng = rng(ctx, "lemma");
    for k in 0..50 {
        let n = 5 + k % 2;
        acc.dim(n);
        let r = rand_r::<S>(ctx, n, k)?;
        f(&mut acc, &r, &mut rng)?;
    }
    acc.finish(json!({ "n": [5, 6], "tensors": 50 }))
}

fn iota_lemma<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    lemma_loop::<S>(ctx, |acc, r, rng| {
        let h = random_symmetric::<S>(r.n(), rng);
        let d = r.iota_lemma_defect(&h)?;
        acc.defect(&d, r.form().max_abs() * h.max_abs());
        Ok(())
    })
}

fn greub_vanstone_50<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    lemma_loop::<S>(ctx, |acc, r, rng| {
        let h = random_symmetric::<S>(r.n(), rng);
        let k = random_symmetric::<S>(r.n(), rng);
        let (l, rr) = gv_defect(&h, &k)?;
        acc.forms(&l, &rr)
    })
}

fn cubic_contraction<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    lemma_loop::<S>(ctx, |acc, r, _| {
        let d = r.cubic_contraction_lemma_defect()?;
        acc.defect(&d, r.form().max_abs().powi(2));
        Ok(())
    })
}

fn t4_composition<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    lemma_loop::<S>(ctx, |acc, r, _| {
        acc.forms(&r.lovelock4_via_composition()?, &r.lovelock(2)?)
    })
}

fn component_expansion<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    for_random::<S>(ctx, 4..=7, 1, |acc, r| {
        let n = r.n();
        for q in 1..=n / 2 {
            for p in 0..=n - 2 * q {
                acc.forms(
                    &r.pq_curvature_from_components(p, q)?,
                    &r.pq_curvature(p, q)?,
                )?;
            }
        }
        Ok(())
    })?
    .finish(json!({ "n": "4..=7", "tensors": 1 }))
}

fn d_of_n_check<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in 4..=12 {
        acc.dim(n);
        acc.holds(d_of_n(n)? == d_of_n_brute_force(n)?);
    }
    acc.finish(json!({ "n": "4..=12" }))
}

/// `e_I ⊗ e_J` with disjoint `I`, `J`: a trace-free `(i,i)` form.
fn primitive<S: Scalar>(n: usize, i: usize) -> Result<DoubleForm<S>> {
    let a = MultiIndex::new(&(0..i).collect::<Vec<_>>(), n)?;
    let b = MultiIndex::new(&(i..2 * i).collect::<Vec<_>>(), n)?;
    let mut w = DoubleForm::zeros(n, i, i)?;
    w.set(a.rank(), b.rank(), S::one());
    Ok(w)
}

fn effective_threshold<S: Scalar>(_: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for n in 4..=12 {
        acc.dim(n);
        for q in 1..n {
            if 2 * q >= n {
                break;
            }
            // components ω_i of R^q exist for i <= min(2q, n−2q); ω_i enters R^{(p,q)}
            // through *(g^{n−2q−p} g^{2q−i} ω_i), nonzero iff g^{n−p−i} ω_i ≠ 0
            let top = (2 * q).min(n - 2 * q);
            let survives = |p: usize, i: usize| -> Result<bool> {
                if p < i {
                    return Ok(false);
                }
                let w = primitive::<S>(n, i)?;
                Ok(!w.metric_power_times(n - p - i)?.is_zero())
            };
            let mut brute = None;
            for p in 0..=n - 2 * q {
                let mut all = true;
                for i in 0..=top {
                    all &= survives(p, i)?;
                }
                if all {
                    brute = Some(p);
                    break;
                }
            }
            acc.holds(brute == Some(effective_p_threshold(n, q)?));
        }
    }
    acc.finish(json!({ "n": "4..=12" }))
}

fn inversion_printed<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    for k in 0..8 {
        let n = 4 + k % 4;
        acc.dim(n);
        let r = rand_r::<S>(ctx, n, k)?;
        let d = r.dd_star_p(2)?;
        let c2 = d.contract_times(2)?.as_scalar()?;
        let needed = DoubleForm::metric_power(n, 2)?
            .scale(&(c2 * S::from_ratio(1, (2 * (n - 2) * (n - 3)) as i64)));
        let scale = r.form().max_abs();
        let s = if S::EXACT { 1.0 } else { scale.max(1.0) };
        acc.value(needed.max_abs() / s);
    }
    acc.finish(json!({ "n": "4..=7", "tensors": 8 }))
}

fn corrupted<S: Scalar>(ctx: &Ctx) -> Result<Measure> {
    let mut acc = Acc::new();
    acc.dim(5);
    let r = rand_r::<S>(ctx, 5, 0)?;
    let mut fast = r.dd_star_p(1)?;
    let v = fast.get(0, 0).clone() + S::from_ratio(1, 1000);
    fast.set(0, 0, v);
    acc.forms(&fast, &oracle_dd_star_p(&r, 1)?)?;
    acc.finish(json!({ "n": 5, "p": 1, "perturbation": 0.001 }))
}

fn p_curvature_routes(ctx: &Ctx) -> Result<Measure> {
    let mut rng = rng(ctx, "frames");
    let mut acc = Acc::new();
    for k in 0..100 {
        let n = 4 + k % 4;
        acc.dim(n);
        let r = rand_r::<f64>(ctx, n, k)?;
        let p = 2 + k % (n - 3);
        let frame = random_orthonormal_frame(n, p, &mut rng);
        acc.scalars(&r.p_curvature(&frame)?, &r.p_curvature_formula(&frame)?);
    }
    acc.finish(json!({ "n": "4..=7", "frames": 100 }))
}
