//! From a metric jet to curvature in an orthonormal frame, for any real scalar.

use super::engine::MetricDerivs;
use crate::doubleform::DoubleForm;
use crate::error::{ensure, Result};
use crate::scalar::Real;

/// Frame-level geometry at one point: frame rows in coordinates, `Γ^k_ij`, and `R` in the frame.
#[derive(Debug, Clone)]
pub(crate) struct Framed<T> {
    pub frame: Vec<Vec<T>>,
    pub gamma: Vec<Vec<Vec<T>>>,
    pub r: DoubleForm<T>,
}

/// Gauss–Jordan inverse with partial pivoting.
pub(crate) fn invert<T: Real>(g: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let n = g.len();
    let mut a: Vec<Vec<T>> = g.to_vec();
    let mut inv: Vec<Vec<T>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect();
    let scale = g
        .iter()
        .flatten()
        .map(|v| v.abs_f64())
        .fold(0.0, f64::max)
        .max(1e-300);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].abs_f64().total_cmp(&a[y][col].abs_f64()))
            .expect("non-empty range");
        ensure!(
            a[piv][col].abs_f64() > 1e-13 * scale,
            Numeric,
            "metric is singular"
        );
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].clone() / d.clone();
            inv[col][j] = inv[col][j].clone() / d.clone();
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col].clone();
                for j in 0..n {
                    a[row][j] = a[row][j].clone() - f.clone() * a[col][j].clone();
                    inv[row][j] = inv[row][j].clone() - f.clone() * inv[col][j].clone();
                }
            }
        }
    }
    Ok(inv)
}

/// `Γ^k_ij = ½ g^{kl}(∂_i g_jl + ∂_j g_il − ∂_l g_ij)`, indexed `[k][i][j]`.
pub(crate) fn christoffel_from<T: Real>(d: &MetricDerivs<T>, ginv: &[Vec<T>]) -> Vec<Vec<Vec<T>>> {
    let n = d.n();
    let half = T::from_ratio(1, 2);
    let mut out = vec![vec![vec![T::zero(); n]; n]; n];
    for i in 0..n {
        for j in i..n {
            let lower: Vec<T> = (0..n)
                .map(|l| {
                    (d.dg[i][j][l].clone() + d.dg[j][i][l].clone() - d.dg[l][i][j].clone())
                        * half.clone()
                })
                .collect();
            for k in 0..n {
                let v = (0..n).fold(T::zero(), |acc, l| {
                    acc + ginv[k][l].clone() * lower[l].clone()
                });
                out[k][i][j] = v.clone();
                out[k][j][i] = v;
            }
        }
    }
    out
}

/// Orthonormal rows by Gram–Schmidt of the coordinate basis `e_0, e_1, …` in that order.
pub(crate) fn gram_schmidt<T: Real>(g: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let n = g.len();
    let dot = |u: &[T], v: &[T]| -> T {
        let mut acc = T::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc = acc + u[i].clone() * g[i][j].clone() * v[j].clone();
            }
        }
        acc
    };
    let mut frame: Vec<Vec<T>> = Vec::with_capacity(n);
    for a in 0..n {
        let mut v: Vec<T> = (0..n)
            .map(|k| if k == a { T::one() } else { T::zero() })
            .collect();
        for f in &frame {
            let c = dot(&v, f);
            for k in 0..n {
                v[k] = v[k].clone() - c.clone() * f[k].clone();
            }
        }
        let nn = dot(&v, &v);
        ensure!(
            nn.to_f64() > 1e-14,
            Numeric,
            "metric is not positive definite (Gram–Schmidt pivot {:e})",
            nn.to_f64()
        );
        let inv = T::one() / nn.sqrt();
        frame.push(v.into_iter().map(|x| x * inv.clone()).collect());
    }
    Ok(frame)
}

/// Coordinate `R_abcd` with `R(e_a,e_b;e_c,e_d)` the sectional numerator, flattened `[((a·n+b)·n+c)·n+d]`.
fn coordinate_riemann<T: Real>(d: &MetricDerivs<T>, gamma: &[Vec<Vec<T>>]) -> Vec<T> {
    let n = d.n();
    let half = T::from_ratio(1, 2);
    // Γ_{f,ad} = g_fe Γ^e_ad
    let mut low = vec![vec![vec![T::zero(); n]; n]; n];
    for f in 0..n {
        for a in 0..n {
            for b in 0..n {
                low[f][a][b] = (0..n).fold(T::zero(), |acc, e| {
                    acc + d.g[f][e].clone() * gamma[e][a][b].clone()
                });
            }
        }
    }
    let mut out = vec![T::zero(); n * n * n * n];
    let idx = |a: usize, b: usize, c: usize, e: usize| ((a * n + b) * n + c) * n + e;
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                for e in c + 1..n {
                    let second = (d.ddg[b][c][a][e].clone() + d.ddg[a][e][b][c].clone()
                        - d.ddg[a][c][b][e].clone()
                        - d.ddg[b][e][a][c].clone())
                        * half.clone();
                    let mut quad = T::zero();
                    for f in 0..n {
                        quad = quad + gamma[f][b][c].clone() * low[f][a][e].clone()
                            - gamma[f][b][e].clone() * low[f][a][c].clone();
                    }
                    let v = second + quad;
                    out[idx(a, b, c, e)] = v.clone();
                    out[idx(b, a, c, e)] = -v.clone();
                    out[idx(a, b, e, c)] = -v.clone();
                    out[idx(b, a, e, c)] = v;
                }
            }
        }
    }
    out
}

/// `R(F_a,F_b;F_c,F_d)` as a `(2,2)` double form.
fn frame_riemann<T: Real>(coord: &[T], frame: &[Vec<T>]) -> Result<DoubleForm<T>> {
    let n = frame.len();
    // contract one slot at a time: out[a..][rest] = Σ_i F[a][i] in[i][rest]
    let mut cur = coord.to_vec();
    let block = n * n * n;
    for _ in 0..4 {
        let mut next = vec![T::zero(); cur.len()];
        for a in 0..n {
            for i in 0..n {
                let f = &frame[a][i];
                if f.is_zero() {
                    continue;
                }
                for rest in 0..block {
                    let v = &cur[i * block + rest];
                    if !v.is_zero() {
                        next[rest * n + a] = next[rest * n + a].clone() + f.clone() * v.clone();
                    }
                }
            }
        }
        // each pass rotates the contracted slot to the back, so four passes restore the order
        cur = next;
    }
    DoubleForm::from_fn(n, 2, 2, |x, y| {
        cur[((x.get(0) * n + x.get(1)) * n + y.get(0)) * n + y.get(1)].clone()
    })
}

/// Full pipeline on a metric jet of order ≥ 2.
pub(crate) fn framed<T: Real>(d: &MetricDerivs<T>) -> Result<Framed<T>> {
    let ginv = invert(&d.g)?;
    let gamma = christoffel_from(d, &ginv);
    let frame = gram_schmidt(&d.g)?;
    let coord = coordinate_riemann(d, &gamma);
    let r = frame_riemann(&coord, &frame)?;
    Ok(Framed { frame, gamma, r })
}

/// `ω^c_{ab} = g(∇_{F_a}F_b, F_c)` from the frame, its coordinate derivatives `dframe[i]` and `Γ`.
pub(crate) fn connection_from(
    g: &[Vec<f64>],
    frame: &[Vec<f64>],
    dframe: &[Vec<Vec<f64>>],
    gamma: &[Vec<Vec<f64>>],
) -> Vec<Vec<Vec<f64>>> {
    let n = g.len();
    let mut out = vec![vec![vec![0.0; n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            // v^k = Σ_i F_a^i (∂_i F_b^k + Σ_j F_b^j Γ^k_ij)
            let mut v = vec![0.0; n];
            for i in 0..n {
                let fa = frame[a][i];
                if fa == 0.0 {
                    continue;
                }
                for k in 0..n {
                    let mut t = dframe[i][b][k];
                    for j in 0..n {
                        t += frame[b][j] * gamma[k][i][j];
                    }
                    v[k] += fa * t;
                }
            }
            for c in 0..n {
                let mut s = 0.0;
                for k in 0..n {
                    for l in 0..n {
                        s += v[k] * g[k][l] * frame[c][l];
                    }
                }
                out[c][a][b] = s;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_frame() {
        let g = vec![
            vec![2.0, 0.5, 0.0],
            vec![0.5, 1.0, 0.1],
            vec![0.0, 0.1, 3.0],
        ];
        let inv = invert(&g).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v: f64 = (0..3).map(|k| g[i][k] * inv[k][j]).sum();
                assert!((v - if i == j { 1.0 } else { 0.0 }).abs() < 1e-14);
            }
        }
        let f = gram_schmidt(&g).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let v: f64 = (0..3)
                    .flat_map(|i| (0..3).map(move |j| (i, j)))
                    .map(|(i, j)| f[a][i] * g[i][j] * f[b][j])
                    .sum();
                assert!((v - if a == b { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
        assert_eq!(f[0][1], 0.0);
        let bad = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
        assert!(gram_schmidt(&bad).is_err());
        assert!(invert(&[vec![1.0, 1.0], vec![1.0, 1.0]]).is_err());
    }
}
