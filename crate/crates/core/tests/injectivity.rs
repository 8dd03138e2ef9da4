//! Rank tests on a spanning set of algebraic curvature tensors: products `h·k` of
//! elementary symmetric `(1,1)` forms.

use curv_core::{AlgebraicCurvature, DoubleForm, Rational, Scalar};

type Q = Rational;

fn elementary(n: usize) -> Vec<DoubleForm<Q>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut h = DoubleForm::zeros(n, 1, 1).unwrap();
            h.set(i, j, Q::one());
            h.set(j, i, Q::one());
            out.push(h);
        }
    }
    out
}

fn kulkarni_products(n: usize) -> Vec<DoubleForm<Q>> {
    let e = elementary(n);
    let mut out = Vec::new();
    for a in 0..e.len() {
        for b in a..e.len() {
            out.push(e[a].exterior_product(&e[b]).unwrap());
        }
    }
    out
}

fn rank(rows: Vec<Vec<Q>>) -> usize {
    let mut m = rows;
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = Q::one() / m[r][c].clone();
        let pivot_row: Vec<Q> = m[r].iter().map(|v| v.clone() * inv.clone()).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
    }
    r
}

fn vector(w: &DoubleForm<Q>) -> Vec<Q> {
    w.coeffs().to_vec()
}

#[test]
fn kulkarni_products_span_curvature_space() {
    for n in 3..=5 {
        assert_eq!(
            rank(kulkarni_products(n).iter().map(vector).collect()),
            n * n * (n * n - 1) / 12,
            "n={n}"
        );
    }
}

/// `g^k·w = 0` forces `w = 0` on algebraic curvature tensors for `k <= n−4`.
#[test]
fn metric_multiplication_cancels() {
    for n in 4..=6 {
        let span = kulkarni_products(n);
        let dim = rank(span.iter().map(vector).collect());
        for k in 1..=n - 4 {
            let images = span
                .iter()
                .map(|w| vector(&w.metric_power_times(k).unwrap()))
                .collect();
            assert_eq!(rank(images), dim, "n={n} k={k}");
        }
    }
}

/// `*R*_p = 0` forces `R = 0` for `2 <= p <= n−2`.
#[test]
fn double_dual_is_injective() {
    for n in 4..=6 {
        let span = kulkarni_products(n);
        let dim = rank(span.iter().map(vector).collect());
        for p in 2..=n - 2 {
            let images = span
                .iter()
                .map(|w| {
                    vector(
                        &AlgebraicCurvature::new_unchecked(w.clone())
                            .dd_star_p(p)
                            .unwrap(),
                    )
                })
                .collect();
            assert_eq!(rank(images), dim, "n={n} p={p}");
        }
        // p = 1 and p = 0 only see Ricci and Scal
        let einstein = span
            .iter()
            .map(|w| {
                vector(
                    &AlgebraicCurvature::new_unchecked(w.clone())
                        .dd_star_p(1)
                        .unwrap(),
                )
            })
            .collect();
        assert!(rank(einstein) < dim);
    }
}
