use std::hint::black_box;
use std::time::Instant;

use serde::Serialize;

use curv_core::curvature::random_algebraic_curvature;
use curv_core::verify::oracle::{
    oracle_dd_star_p, oracle_pq_curvature, ORACLE_DD_MAX_N, ORACLE_PQ_MAX_N,
};
use curv_core::{AlgebraicCurvature, DoubleForm, Error, Rational, Result};

const SEED: u64 = 0x5eed;
const MIN_N: usize = 4;

#[derive(Debug, Serialize)]
pub struct Row {
    pub quantity: &'static str,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// Exact equality of oracle and optimized route, checked in rational arithmetic.
    pub equal: bool,
    pub oracle_ms: f64,
    pub optimized_ms: f64,
}

/// `"5"`, `"4..6"` or `"4..=6"` (both inclusive).
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("expected N or LO..HI, got `{s}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim_start_matches('=')
                .trim()
                .parse()
                .map_err(|_| bad())?,
        ),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    if hi > ORACLE_DD_MAX_N {
        return Err(Error::CostGuard(format!(
            "bench is limited to n <= {ORACLE_DD_MAX_N}, got {hi}"
        )));
    }
    if lo < MIN_N {
        return Err(Error::Config(format!("bench needs n >= {MIN_N}, got {lo}")));
    }
    Ok((lo, hi))
}

/// Mean wall time in milliseconds over enough repetitions to fill roughly 50 ms.
fn time_ms(mut f: impl FnMut() -> Result<DoubleForm<f64>>) -> Result<f64> {
    let start = Instant::now();
    black_box(f()?);
    let once = start.elapsed().as_secs_f64();
    let reps = ((0.05 / once.max(1e-7)) as usize).clamp(1, 1000);
    let start = Instant::now();
    for _ in 0..reps {
        black_box(f()?);
    }
    Ok(start.elapsed().as_secs_f64() * 1e3 / reps as f64)
}

pub fn run(lo: usize, hi: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in lo..=hi {
        let exact: AlgebraicCurvature<Rational> = random_algebraic_curvature(SEED, n, 3)?;
        let float: AlgebraicCurvature<f64> = random_algebraic_curvature(SEED, n, 3)?;
        for p in 1..=n - 2 {
            let equal = oracle_dd_star_p(&exact, p)? == exact.dd_star_p(p)?;
            rows.push(Row {
                quantity: "ddstar_p",
                n,
                p,
                q: 1,
                equal,
                oracle_ms: time_ms(|| oracle_dd_star_p(&float, p))?,
                optimized_ms: time_ms(|| float.dd_star_p(p))?,
            });
        }
        if n <= ORACLE_PQ_MAX_N {
            for p in 0..=(n - 4).min(1) {
                let equal = oracle_pq_curvature(&exact, p, 2)? == exact.pq_curvature(p, 2)?;
                rows.push(Row {
                    quantity: "pq_curvature",
                    n,
                    p,
                    q: 2,
                    equal,
                    oracle_ms: time_ms(|| oracle_pq_curvature(&float, p, 2))?,
                    optimized_ms: time_ms(|| float.pq_curvature(p, 2))?,
                });
            }
        }
    }
    Ok(rows)
}

pub fn table(rows: &[Row]) -> String {
    let mut out = format!(
        "{:<14} {:>2} {:>2} {:>2} {:>6} {:>12} {:>12} {:>9}\n",
        "quantity", "n", "p", "q", "equal", "oracle_ms", "optimized_ms", "speedup"
    );
    for r in rows {
        out += &format!(
            "{:<14} {:>2} {:>2} {:>2} {:>6} {:>12.4} {:>12.4} {:>9.1}\n",
            r.quantity,
            r.n,
            r.p,
            r.q,
            r.equal,
            r.oracle_ms,
            r.optimized_ms,
            r.oracle_ms / r.optimized_ms.max(1e-9)
        );
    }
    out
}
