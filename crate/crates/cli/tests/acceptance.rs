//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Exits nonzero if any criterion fails.

use std::process::Command;

use curv_core::verify::{run_suite, ModeSelection, Status, SuiteConfig, VerificationReport};

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(filter: &str, modes: ModeSelection) -> VerificationReport {
    run_suite(&SuiteConfig {
        filter: Some(filter.into()),
        modes,
        ..SuiteConfig::default()
    })
    .unwrap_or_else(|e| panic!("suite `{filter}`: {e}"))
}

/// All selected checks pass in the requested modes.
fn checks(filter: &str, modes: ModeSelection) -> Outcome {
    let r = suite(filter, modes);
    let failed: Vec<String> = r
        .failures()
        .map(|c| format!("{}[{}]", c.id, c.mode.name()))
        .collect();
    let worst = r
        .checks
        .iter()
        .filter_map(|c| c.residual)
        .fold(0.0f64, f64::max);
    Outcome {
        ok: failed.is_empty() && r.summary.passed > 0,
        detail: if failed.is_empty() {
            format!("{} check runs, max residual {worst:.2e}", r.summary.passed)
        } else {
            format!("failed: {}", failed.join(", "))
        },
    }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn both(a: Outcome, b: Outcome) -> Outcome {
    Outcome {
        ok: a.ok && b.ok,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

fn criterion_6() -> Outcome {
    let asserted = checks("lovelock\\.hereditary", ModeSelection::Both);
    let r = suite(
        "reported\\.hereditary_printed_coefficient",
        ModeSelection::Rational,
    );
    let c = &r.checks[0];
    let reported = c.status == Status::Reported && c.residual.is_some_and(|v| v > 0.0);
    Outcome {
        ok: asserted.ok && reported,
        detail: format!(
            "{}; printed coefficient reported with residual {:?}",
            asserted.detail, c.residual
        ),
    }
}

fn curv() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curv"))
}

fn criterion_13() -> Outcome {
    let run = || {
        curv()
            .args(["verify", "--seed", "20240601"])
            .output()
            .expect("curv runs")
    };
    let (a, b) = (run(), run());
    let exit_ok = a.status.code() == Some(0) && b.status.code() == Some(0);
    let identical = !a.stdout.is_empty() && a.stdout == b.stdout;
    let bench = curv()
        .args(["bench", "--n", "4..5", "--json"])
        .output()
        .expect("curv bench runs");
    let rows: serde_json::Value = serde_json::from_slice(&bench.stdout).unwrap_or_default();
    let rows = rows.as_array().cloned().unwrap_or_default();
    let equal = rows.len() >= 2 && rows.iter().all(|r| r["equal"] == true);
    let guard = curv()
        .args(["bench", "--n", "7"])
        .output()
        .expect("curv bench runs")
        .status
        .code()
        == Some(2);
    Outcome {
        ok: exit_ok && identical && bench.status.success() && equal && guard,
        detail: format!(
            "verify exits {:?}/{:?}, byte-identical: {identical}; bench rows {} all equal: {equal}; n=7 guard exit 2: {guard}",
            a.status.code(),
            b.status.code(),
            rows.len()
        ),
    }
}

fn main() {
    let b = ModeSelection::Both;
    let criteria: Vec<Criterion> = vec![
        (
            "oracle equivalence (exact)",
            Box::new(|| checks("hierarchy\\.oracle_(dd_star|pq)", ModeSelection::Rational)),
        ),
        (
            // T4(S6) is asserted as 30g: (k/2)^q (n-1)!/(n-2q-1)! at k=1, q=2, n=6 is 5!/(4·1!) = 30
            "constant-curvature table",
            Box::new(move || {
                both(
                    checks("hierarchy\\.constant_curvature_table", b),
                    checks("geometry\\.model_expectations", b),
                )
            }),
        ),
        (
            "three-route h4",
            Box::new(move || checks("lovelock\\.h4_three_routes", b)),
        ),
        (
            "Ruse-Lanczos and hierarchy",
            Box::new(move || {
                checks("hierarchy\\.(ruse_lanczos|expansion_route|contraction_route|trace_relation|same_weyl)", b)
            }),
        ),
        (
            "Lovelock identities",
            Box::new(move || {
                checks(
                    "lovelock\\.(iota_lemma|greub_vanstone|cubic_contraction|t4_composition)",
                    b,
                )
            }),
        ),
        ("hereditary coefficient", Box::new(criterion_6)),
        (
            "inversion round-trip",
            Box::new(move || checks("hierarchy\\.inversion_(roundtrip|sphere4)", b)),
        ),
        (
            "duality witnesses",
            Box::new(move || checks("duality\\..*", b)),
        ),
        (
            // the star-delta-star sign is (-1)^(n+p) here; it equals (-1)^p at n = 4
            "differential claims on charts",
            Box::new(move || {
                checks("geometry\\.(divergence_ddstar|divergence_lovelock4|second_bianchi|ddstar2_not_codazzi|star_delta_star)", b)
            }),
        ),
        (
            "spanning sets",
            Box::new(move || checks("geometry\\.spanning_sets", b)),
        ),
        (
            "s2/Scal identity and p-curvature routes",
            Box::new(move || checks("sectional\\..*", b)),
        ),
        (
            "d(n) and effectiveness",
            Box::new(move || checks("lovelock\\.(d_of_n|effective_threshold)", b)),
        ),
        ("determinism and interface", Box::new(criterion_13)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.ok {
            failed += 1;
        }
        println!(
            "[{}] {:>2} {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
