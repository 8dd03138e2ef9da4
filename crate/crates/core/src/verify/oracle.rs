//! Brute-force reference values by literal index sums over generalized Kronecker deltas.
//!
//! Nothing here uses the double-form products, contractions or stars; only component
//! lookups and [`generalized_delta`]. Terms whose delta vanishes because an index repeats
//! are skipped before the delta is evaluated.

use crate::combinatorics::generalized_delta;
use crate::curvature::AlgebraicCurvature;
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Result};
use crate::scalar::{factorial, Scalar};

/// Largest dimension accepted by [`oracle_dd_star_p`].
pub const ORACLE_DD_MAX_N: usize = 6;
/// Largest dimension accepted by [`oracle_pq_curvature`] for `q >= 2`.
pub const ORACLE_PQ_MAX_N: usize = 5;

/// All tuples of `len` distinct values in `0..n` that avoid `exclude`, in lexicographic order.
fn distinct_tuples(n: usize, len: usize, exclude: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(
        n: usize,
        len: usize,
        exclude: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !exclude.contains(&v) && !cur.contains(&v) {
                cur.push(v);
                rec(n, len, exclude, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, len, exclude, &mut cur, &mut out);
    out
}

fn concat(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().chain(b).copied().collect()
}

fn signed<S: Scalar>(d: i64, v: S) -> S {
    match d {
        0 => S::zero(),
        1 => v,
        -1 => -v,
        k => S::from_i64(k) * v,
    }
}

/// `(*R*_p)_{I,J} = ¼ Σ_{a,b,c,d} δ^{ab I}_{cd J} R_abcd`.
pub fn oracle_dd_star_p<S: Scalar>(r: &AlgebraicCurvature<S>, p: usize) -> Result<DoubleForm<S>> {
    let n = r.n();
    ensure!(
        n <= ORACLE_DD_MAX_N,
        CostGuard,
        "oracle_dd_star_p limited to n <= {ORACLE_DD_MAX_N}, got {n}"
    );
    ensure!(p + 2 <= n, Range, "p={p} outside 0..={}", n as i64 - 2);
    let rf = r.form();
    let quarter = S::from_ratio(1, 4);
    let mut err = None;
    let out = DoubleForm::from_fn(n, p, p, |ii, jj| {
        let (iv, jv) = (ii.to_vec(), jj.to_vec());
        let uppers = distinct_tuples(n, 2, &iv);
        let lowers = distinct_tuples(n, 2, &jv);
        let mut acc = S::zero();
        for ab in &uppers {
            let up = concat(ab, &iv);
            for cd in &lowers {
                match generalized_delta(&up, &concat(cd, &jv)) {
                    Ok(0) => {}
                    Ok(d) => acc = acc + signed(d, rf.component(ab, cd)),
                    Err(e) => err = Some(e),
                }
            }
        }
        acc * quarter.clone()
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `R^q` components `4^{−q} Σ δ^{a}_{I} δ^{b}_{J} Π_l R_{a_{2l−1}a_{2l}b_{2l−1}b_{2l}}` for unsorted `I`, `J`.
fn gauss_kronecker_component<S: Scalar>(
    r: &AlgebraicCurvature<S>,
    q: usize,
    xs: &[usize],
    ys: &[usize],
) -> Result<S> {
    let n = r.n();
    let rf = r.form();
    let mut acc = S::zero();
    // δ^{a}_{I} vanishes unless a is a rearrangement of I.
    let perms_x = distinct_tuples(n, 2 * q, &[])
        .into_iter()
        .filter(|a| a.iter().all(|v| xs.contains(v)));
    let perms_y: Vec<Vec<usize>> = distinct_tuples(n, 2 * q, &[])
        .into_iter()
        .filter(|b| b.iter().all(|v| ys.contains(v)))
        .collect();
    for a in perms_x {
        let da = generalized_delta(&a, xs)?;
        if da == 0 {
            continue;
        }
        for b in &perms_y {
            let db = generalized_delta(b, ys)?;
            if db == 0 {
                continue;
            }
            let mut prod = S::one();
            for l in 0..q {
                prod = prod * rf.component(&a[2 * l..2 * l + 2], &b[2 * l..2 * l + 2]);
                if prod.is_zero() {
                    break;
                }
            }
            acc = acc + signed(da * db, prod);
        }
    }
    let four_q = (0..q).fold(S::one(), |acc, _| acc * S::from_i64(4));
    Ok(acc / four_q)
}

/// `R^{(p,q)}_{I,J} = ((2q)!)^{−2} Σ_{|A|=|B|=2q} δ^{A I}_{B J} R^q_{(A,B)}`, with `R^q` also by index sums.
pub fn oracle_pq_curvature<S: Scalar>(
    r: &AlgebraicCurvature<S>,
    p: usize,
    q: usize,
) -> Result<DoubleForm<S>> {
    let n = r.n();
    let limit = if q <= 1 {
        ORACLE_DD_MAX_N
    } else {
        ORACLE_PQ_MAX_N
    };
    ensure!(
        n <= limit,
        CostGuard,
        "oracle_pq_curvature limited to n <= {limit} for q={q}, got {n}"
    );
    ensure!(
        q >= 1 && 2 * q + p <= n,
        Range,
        "need q >= 1 and p + 2q <= n, got n={n} p={p} q={q}"
    );
    let norm = factorial::<S>(2 * q) * factorial::<S>(2 * q);
    let mut err = None;
    // R^q on sorted indices; unsorted lookups only permute and sign these.
    let rq = DoubleForm::from_fn(n, 2 * q, 2 * q, |a, b| {
        gauss_kronecker_component(r, q, &a.to_vec(), &b.to_vec()).unwrap_or_else(|e| {
            err = Some(e);
            S::zero()
        })
    })?;
    if let Some(e) = err.take() {
        return Err(e);
    }
    let out = DoubleForm::from_fn(n, p, p, |ii, jj| {
        let (iv, jv) = (ii.to_vec(), jj.to_vec());
        let uppers = distinct_tuples(n, 2 * q, &iv);
        let lowers = distinct_tuples(n, 2 * q, &jv);
        let mut acc = S::zero();
        for a in &uppers {
            let up = concat(a, &iv);
            for b in &lowers {
                let d = match generalized_delta(&up, &concat(b, &jv)) {
                    Ok(d) => d,
                    Err(e) => {
                        err = Some(e);
                        0
                    }
                };
                if d == 0 {
                    continue;
                }
                acc = acc + signed(d, rq.component(a, b));
            }
        }
        acc / norm.clone()
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::random_algebraic_curvature;
    use crate::scalar::Rational;
    use crate::Error;

    type Q = Rational;

    #[test]
    fn sphere_scalar_and_flat() {
        let s4 = AlgebraicCurvature::<Q>::constant(4, Q::from_i64(1)).unwrap();
        assert_eq!(
            oracle_dd_star_p(&s4, 0).unwrap().as_scalar().unwrap(),
            Q::from_i64(6)
        );
        let flat = AlgebraicCurvature::<Q>::flat(5).unwrap();
        assert!(oracle_dd_star_p(&flat, 2).unwrap().is_zero());
    }

    #[test]
    fn matches_index_free_routes() {
        for n in [4, 5] {
            let r = random_algebraic_curvature::<Q>(n as u64, n, 2).unwrap();
            for p in 0..=n - 2 {
                assert_eq!(
                    oracle_dd_star_p(&r, p).unwrap(),
                    r.dd_star_p(p).unwrap(),
                    "n={n} p={p}"
                );
            }
        }
        let r = random_algebraic_curvature::<Q>(11, 5, 2).unwrap();
        for p in 0..=1 {
            assert_eq!(
                oracle_pq_curvature(&r, p, 2).unwrap(),
                r.pq_curvature(p, 2).unwrap()
            );
        }
        assert_eq!(
            oracle_pq_curvature(&r, 0, 2).unwrap().as_scalar().unwrap(),
            r.gauss_bonnet(2).unwrap()
        );
        assert_eq!(
            oracle_pq_curvature(&r, 2, 1).unwrap(),
            oracle_dd_star_p(&r, 2).unwrap()
        );
        let s5 = AlgebraicCurvature::<Q>::constant(5, Q::from_i64(1)).unwrap();
        assert_eq!(
            oracle_pq_curvature(&s5, 1, 2).unwrap(),
            s5.metric().scale(&Q::from_i64(6))
        );
    }

    #[test]
    fn cost_guards() {
        let r = random_algebraic_curvature::<f64>(1, 7, 1).unwrap();
        assert!(matches!(oracle_dd_star_p(&r, 1), Err(Error::CostGuard(_))));
        let r6 = random_algebraic_curvature::<f64>(1, 6, 1).unwrap();
        assert!(matches!(
            oracle_pq_curvature(&r6, 0, 2),
            Err(Error::CostGuard(_))
        ));
        assert!(oracle_pq_curvature(&r6, 1, 1).is_ok());
    }
}
