//! Dense `(p,q)` double forms in an orthonormal frame.
//!
//! A double form of bidegree `(p,q)` over `R^n` is stored as a
//! `C(n,p) x C(n,q)` grid indexed by the ranks of increasing multi-indices.
//! The exterior product carries no factorial normalization, so `g^k` has grid
//! `k! * Id` and a constant-curvature tensor is `R = (K/2) g^2`.

use std::ops::{Add, Neg, Sub};

use crate::combinatorics::{
    basis, binomial, check_dim, complement_sign, permutation_sign, rank_bits, shuffle_sign_bits,
    subsets_of_size, MultiIndex,
};
use crate::error::{ensure, Error, Result};
use crate::scalar::{factorial, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct DoubleForm<S> {
    n: usize,
    p: usize,
    q: usize,
    coeffs: Vec<S>,
}

fn sign_scalar<S: Scalar>(sign: i8, v: S) -> S {
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// `(sign(I, K\I), rank(I), rank(K\I))` for every `I ⊂ K` of size `k`.
fn splits(kbits: u32, k: usize, n: usize) -> Vec<(i8, usize, usize)> {
    subsets_of_size(kbits, k)
        .into_iter()
        .map(|ib| {
            let rest = kbits & !ib;
            (
                shuffle_sign_bits(ib, rest),
                rank_bits(ib, n),
                rank_bits(rest, n),
            )
        })
        .collect()
}

impl<S: Scalar> DoubleForm<S> {
    pub fn zeros(n: usize, p: usize, q: usize) -> Result<Self> {
        check_dim(n)?;
        ensure!(
            p <= n && q <= n,
            Degree,
            "bidegree ({p},{q}) exceeds dimension {n}"
        );
        let len = binomial(n, p) * binomial(n, q);
        Ok(DoubleForm {
            n,
            p,
            q,
            coeffs: vec![S::zero(); len],
        })
    }

    pub fn from_grid(n: usize, p: usize, q: usize, coeffs: Vec<S>) -> Result<Self> {
        let mut w = Self::zeros(n, p, q)?;
        ensure!(
            coeffs.len() == w.coeffs.len(),
            Dimension,
            "grid of {} entries for a ({p},{q}) form in dimension {n} (expected {})",
            coeffs.len(),
            w.coeffs.len()
        );
        w.coeffs = coeffs;
        Ok(w)
    }

    pub fn from_fn(
        n: usize,
        p: usize,
        q: usize,
        mut f: impl FnMut(&MultiIndex, &MultiIndex) -> S,
    ) -> Result<Self> {
        let mut w = Self::zeros(n, p, q)?;
        let cols = w.cols();
        for (r, i) in basis(n, p).iter().enumerate() {
            for (c, j) in basis(n, q).iter().enumerate() {
                w.coeffs[r * cols + c] = f(i, j);
            }
        }
        Ok(w)
    }

    /// The `(0,0)` form with value `s`.
    pub fn scalar(n: usize, s: S) -> Result<Self> {
        Self::from_grid(n, 0, 0, vec![s])
    }

    /// The metric `g` as a `(1,1)` form: identity grid.
    pub fn metric(n: usize) -> Result<Self> {
        Self::identity(n, 1, S::one())
    }

    /// `g^k`, whose grid is `k! * Id` in degree `(k,k)`.
    pub fn metric_power(n: usize, k: usize) -> Result<Self> {
        Self::identity(n, k, factorial(k))
    }

    fn identity(n: usize, k: usize, diag: S) -> Result<Self> {
        let mut w = Self::zeros(n, k, k)?;
        let cols = w.cols();
        for r in 0..w.rows() {
            w.coeffs[r * cols + r] = diag.clone();
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }
    pub fn rows(&self) -> usize {
        binomial(self.n, self.p)
    }
    pub fn cols(&self) -> usize {
        binomial(self.n, self.q)
    }
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }
    pub fn row_basis(&self) -> &'static [MultiIndex] {
        basis(self.n, self.p)
    }
    pub fn col_basis(&self) -> &'static [MultiIndex] {
        basis(self.n, self.q)
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.coeffs[row * self.cols() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: S) {
        let cols = self.cols();
        self.coeffs[row * cols + col] = v;
    }

    pub fn at(&self, i: &MultiIndex, j: &MultiIndex) -> &S {
        self.get(i.rank(), j.rank())
    }

    /// Value on basis vectors listed in any order: `w(e_{xs}; e_{ys})`.
    ///
    /// Zero when an index repeats; otherwise the sorted entry times the sorting signs.
    pub fn component(&self, xs: &[usize], ys: &[usize]) -> S {
        debug_assert_eq!(xs.len(), self.p);
        debug_assert_eq!(ys.len(), self.q);
        let sx = permutation_sign(xs);
        let sy = permutation_sign(ys);
        if sx == 0 || sy == 0 {
            return S::zero();
        }
        let bx = xs.iter().fold(0u32, |b, &i| b | (1 << i));
        let by = ys.iter().fold(0u32, |b, &i| b | (1 << i));
        let v = self
            .get(rank_bits(bx, self.n), rank_bits(by, self.n))
            .clone();
        sign_scalar(sx * sy, v)
    }

    /// Scalar value of a `(0,0)` form.
    pub fn as_scalar(&self) -> Result<S> {
        ensure!(
            self.p == 0 && self.q == 0,
            Degree,
            "({},{}) form is not a scalar",
            self.p,
            self.q
        );
        Ok(self.coeffs[0].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DoubleForm<T> {
        DoubleForm {
            n: self.n,
            p: self.p,
            q: self.q,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        ensure!(
            self.n == other.n && self.p == other.p && self.q == other.q,
            Dimension,
            "{what}: ({},{}) form in dimension {} vs ({},{}) form in dimension {}",
            self.p,
            self.q,
            self.n,
            other.p,
            other.q,
            other.n
        );
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        DoubleForm {
            n: self.n,
            p: self.p,
            q: self.q,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    /// Swaps the two factors: `(p,q) -> (q,p)`.
    pub fn transpose(&self) -> Self {
        let mut t = DoubleForm {
            n: self.n,
            p: self.q,
            q: self.p,
            coeffs: vec![S::zero(); self.coeffs.len()],
        };
        let (rows, cols) = (self.rows(), self.cols());
        for r in 0..rows {
            for c in 0..cols {
                t.coeffs[c * rows + r] = self.coeffs[r * cols + c].clone();
            }
        }
        t
    }

    /// Largest entry of `w - transpose(w)`; requires `p = q`.
    pub fn symmetry_defect(&self) -> Result<S> {
        ensure!(
            self.p == self.q,
            Degree,
            "symmetry needs p = q, got ({},{})",
            self.p,
            self.q
        );
        let diff = self.try_sub(&self.transpose())?;
        Ok(diff.max_abs_entry())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|v| v.is_zero())
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|v| v.is_negligible(tol))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|v| v.abs_f64()).fold(0.0, f64::max)
    }

    /// Entry of largest magnitude, returned as an exact scalar (absolute value).
    pub fn max_abs_entry(&self) -> S {
        let mut best = S::zero();
        let mut best_abs = -1.0;
        for v in &self.coeffs {
            let a = v.abs_f64();
            if a > best_abs || (best.is_zero() && !v.is_zero()) {
                best_abs = a;
                best = if v.to_f64() < 0.0 {
                    -v.clone()
                } else {
                    v.clone()
                };
            }
        }
        best
    }

    pub fn norm_sq(&self) -> S {
        self.coeffs
            .iter()
            .fold(S::zero(), |acc, v| acc + v.clone() * v.clone())
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    /// `<a,b> = Σ_{I,J} a_{IJ} b_{IJ}` over increasing multi-indices.
    pub fn inner_product(&self, other: &Self) -> Result<S> {
        self.same_shape(other, "inner product")?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    /// Exterior product acting on both factors independently.
    pub fn exterior_product(&self, other: &Self) -> Result<Self> {
        ensure!(
            self.n == other.n,
            Dimension,
            "product of forms over {} and {}",
            self.n,
            other.n
        );
        let n = self.n;
        let (p, q) = (self.p + other.p, self.q + other.q);
        ensure!(
            p <= n && q <= n,
            Degree,
            "product degree ({p},{q}) exceeds dimension {n}"
        );
        let mut out = Self::zeros(n, p, q)?;
        let cols = out.cols();
        let row_splits: Vec<_> = basis(n, p)
            .iter()
            .map(|k| splits(k.bits(), self.p, n))
            .collect();
        let col_splits: Vec<_> = basis(n, q)
            .iter()
            .map(|l| splits(l.bits(), self.q, n))
            .collect();
        let (acols, bcols) = (self.cols(), other.cols());
        for (r, rs) in row_splits.iter().enumerate() {
            for (c, cs) in col_splits.iter().enumerate() {
                let mut acc = S::zero();
                for &(si, ri, rk) in rs {
                    for &(sj, cj, cl) in cs {
                        let a = &self.coeffs[ri * acols + cj];
                        if a.is_zero() {
                            continue;
                        }
                        let b = &other.coeffs[rk * bcols + cl];
                        if b.is_zero() {
                            continue;
                        }
                        acc = acc + sign_scalar(si * sj, a.clone() * b.clone());
                    }
                }
                out.coeffs[r * cols + c] = acc;
            }
        }
        Ok(out)
    }

    /// `g^k · w`, using that `g^k` is `k!` times the identity grid.
    pub fn metric_power_times(&self, k: usize) -> Result<Self> {
        let n = self.n;
        let (p, q) = (self.p + k, self.q + k);
        ensure!(
            p <= n && q <= n,
            Degree,
            "g^{k} times a ({},{}) form exceeds dimension {n}",
            self.p,
            self.q
        );
        if k == 0 {
            return Ok(self.clone());
        }
        let fact: S = factorial(k);
        let mut out = Self::zeros(n, p, q)?;
        let cols = out.cols();
        let scols = self.cols();
        for (r, kk) in basis(n, p).iter().enumerate() {
            for (c, ll) in basis(n, q).iter().enumerate() {
                let common = kk.bits() & ll.bits();
                let mut acc = S::zero();
                for m in subsets_of_size(common, k) {
                    let (kr, lr) = (kk.bits() & !m, ll.bits() & !m);
                    let v = &self.coeffs[rank_bits(kr, n) * scols + rank_bits(lr, n)];
                    if v.is_zero() {
                        continue;
                    }
                    let s = shuffle_sign_bits(m, kr) * shuffle_sign_bits(m, lr);
                    acc = acc + sign_scalar(s, v.clone());
                }
                out.coeffs[r * cols + c] = acc * fact.clone();
            }
        }
        Ok(out)
    }

    /// Contraction `c`: trace of one argument from each factor.
    pub fn contraction(&self) -> Result<Self> {
        ensure!(
            self.p >= 1 && self.q >= 1,
            Degree,
            "cannot contract a ({},{}) form",
            self.p,
            self.q
        );
        let n = self.n;
        let mut out = Self::zeros(n, self.p - 1, self.q - 1)?;
        let cols = out.cols();
        let scols = self.cols();
        for (r, i) in basis(n, self.p - 1).iter().enumerate() {
            for (c, j) in basis(n, self.q - 1).iter().enumerate() {
                let (ib, jb) = (i.bits(), j.bits());
                let mut acc = S::zero();
                for k in 0..n {
                    let kb = 1u32 << k;
                    if ib & kb != 0 || jb & kb != 0 {
                        continue;
                    }
                    let v = &self.coeffs[rank_bits(ib | kb, n) * scols + rank_bits(jb | kb, n)];
                    if v.is_zero() {
                        continue;
                    }
                    let s = shuffle_sign_bits(kb, ib) * shuffle_sign_bits(kb, jb);
                    acc = acc + sign_scalar(s, v.clone());
                }
                out.coeffs[r * cols + c] = acc;
            }
        }
        Ok(out)
    }

    /// `c^r`.
    pub fn contract_times(&self, r: usize) -> Result<Self> {
        let mut w = self.clone();
        for _ in 0..r {
            w = w.contraction()?;
        }
        Ok(w)
    }

    /// Hodge star applied to each factor: `(n-p, n-q)` form.
    pub fn hodge_star(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n, n - self.p, n - self.q).expect("complementary degree");
        let cols = out.cols();
        let scols = self.cols();
        let col_info: Vec<(i8, usize)> = basis(n, self.q)
            .iter()
            .map(|j| {
                let (s, jc) = complement_sign(j);
                (s, jc.rank())
            })
            .collect();
        for (r, i) in basis(n, self.p).iter().enumerate() {
            let (si, ic) = complement_sign(i);
            let ic = ic.rank();
            for (c, &(sj, jc)) in col_info.iter().enumerate() {
                out.coeffs[ic * cols + jc] =
                    sign_scalar(si * sj, self.coeffs[r * scols + c].clone());
            }
        }
        out
    }

    /// Interior product `ι_h` by a `(1,1)` form; adjoint to `w -> h·w`.
    pub fn interior_iota(&self, h: &Self) -> Result<Self> {
        ensure!(
            h.n == self.n,
            Dimension,
            "ι_h with h over {} and w over {}",
            h.n,
            self.n
        );
        ensure!(
            h.p == 1 && h.q == 1,
            Degree,
            "ι_h needs a (1,1) form, got ({},{})",
            h.p,
            h.q
        );
        ensure!(
            self.p >= 1 && self.q >= 1,
            Degree,
            "ι_h of a ({},{}) form",
            self.p,
            self.q
        );
        let n = self.n;
        let mut out = Self::zeros(n, self.p - 1, self.q - 1)?;
        let cols = out.cols();
        let scols = self.cols();
        for (r, i) in basis(n, self.p - 1).iter().enumerate() {
            for (c, j) in basis(n, self.q - 1).iter().enumerate() {
                let (ib, jb) = (i.bits(), j.bits());
                let mut acc = S::zero();
                for k in (0..n).filter(|k| ib & (1 << k) == 0) {
                    let kb = 1u32 << k;
                    let row = rank_bits(ib | kb, n);
                    let sk = shuffle_sign_bits(kb, ib);
                    for l in (0..n).filter(|l| jb & (1 << l) == 0) {
                        let hv = h.get(k, l);
                        if hv.is_zero() {
                            continue;
                        }
                        let lb = 1u32 << l;
                        let v = &self.coeffs[row * scols + rank_bits(jb | lb, n)];
                        if v.is_zero() {
                            continue;
                        }
                        let s = sk * shuffle_sign_bits(lb, jb);
                        acc = acc + sign_scalar(s, hv.clone() * v.clone());
                    }
                }
                out.coeffs[r * cols + c] = acc;
            }
        }
        Ok(out)
    }

    /// Interior product `i_a` by an `(r,r)` form, the adjoint of `w -> a·w`.
    ///
    /// Computed as `±*(a·(*w))`; the sign `(-1)^{(p-r)(n-p)+(q-r)(n-q)}` is `+1`
    /// whenever `p = q`.
    pub fn adjoint_interior(&self, a: &Self) -> Result<Self> {
        ensure!(
            a.n == self.n,
            Dimension,
            "i_a with a over {} and w over {}",
            a.n,
            self.n
        );
        ensure!(
            a.p == a.q,
            Degree,
            "i_a needs an (r,r) form, got ({},{})",
            a.p,
            a.q
        );
        let r = a.p;
        ensure!(
            self.p >= r && self.q >= r,
            Degree,
            "i_a with a of degree ({r},{r}) on a ({},{}) form",
            self.p,
            self.q
        );
        let n = self.n;
        let out = a.exterior_product(&self.hodge_star())?.hodge_star();
        let exponent = (self.p - r) * (n - self.p) + (self.q - r) * (n - self.q);
        Ok(if exponent.is_multiple_of(2) {
            out
        } else {
            -out
        })
    }

    /// Composition product: the grid matrix product `(a∘b)_{IJ} = Σ_K a_{IK} b_{KJ}`.
    pub fn composition(&self, other: &Self) -> Result<Self> {
        ensure!(
            self.n == other.n,
            Dimension,
            "composition over {} and {}",
            self.n,
            other.n
        );
        ensure!(
            self.q == other.p,
            Dimension,
            "composition of ({},{}) with ({},{})",
            self.p,
            self.q,
            other.p,
            other.q
        );
        let mut out = Self::zeros(self.n, self.p, other.q)?;
        let (rows, inner, cols) = (self.rows(), self.cols(), other.cols());
        for r in 0..rows {
            for k in 0..inner {
                let a = &self.coeffs[r * inner + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let b = &other.coeffs[k * cols + c];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.coeffs[r * cols + c];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    /// First Bianchi sum `𝔅w`: moves one second-factor argument into the first factor.
    ///
    /// `(𝔅w)(x_1..x_{p+1}; y_1..y_{q-1}) = Σ_j (-1)^{j+1} w(x_1..x̂_j..x_{p+1}; x_j, y_1..y_{q-1})`.
    pub fn first_bianchi_sum(&self) -> Result<Self> {
        ensure!(
            self.q >= 1,
            Degree,
            "Bianchi sum of a ({},{}) form",
            self.p,
            self.q
        );
        ensure!(
            self.p < self.n,
            Degree,
            "Bianchi sum would raise degree {} past {}",
            self.p,
            self.n
        );
        let n = self.n;
        let mut out = Self::zeros(n, self.p + 1, self.q - 1)?;
        let cols = out.cols();
        let scols = self.cols();
        for (r, kk) in basis(n, self.p + 1).iter().enumerate() {
            for (c, ll) in basis(n, self.q - 1).iter().enumerate() {
                let lb = ll.bits();
                let mut acc = S::zero();
                for (j, x) in kk.iter().enumerate() {
                    let xb = 1u32 << x;
                    if lb & xb != 0 {
                        continue;
                    }
                    let v =
                        &self.coeffs[rank_bits(kk.bits() & !xb, n) * scols + rank_bits(lb | xb, n)];
                    if v.is_zero() {
                        continue;
                    }
                    let s = shuffle_sign_bits(xb, lb) * if j % 2 == 0 { 1 } else { -1 };
                    acc = acc + sign_scalar(s, v.clone());
                }
                out.coeffs[r * cols + c] = acc;
            }
        }
        Ok(out)
    }

    /// `w(x_1..x_p; y_1..y_q)` for arbitrary vectors given in frame components.
    pub fn evaluate(&self, xs: &[Vec<S>], ys: &[Vec<S>]) -> Result<S> {
        ensure!(
            xs.len() == self.p && ys.len() == self.q,
            Input,
            "({},{}) form evaluated on {} and {} vectors",
            self.p,
            self.q,
            xs.len(),
            ys.len()
        );
        for v in xs.iter().chain(ys) {
            ensure!(
                v.len() == self.n,
                Input,
                "vector of length {} in dimension {}",
                v.len(),
                self.n
            );
        }
        let minors = |vs: &[Vec<S>], deg: usize| -> Vec<S> {
            basis(self.n, deg)
                .iter()
                .map(|i| {
                    let m: Vec<Vec<S>> = vs
                        .iter()
                        .map(|v| i.iter().map(|k| v[k].clone()).collect())
                        .collect();
                    determinant(m)
                })
                .collect()
        };
        let dx = minors(xs, self.p);
        let dy = minors(ys, self.q);
        let cols = self.cols();
        let mut acc = S::zero();
        for (r, a) in dx.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, b) in dy.iter().enumerate() {
                let w = &self.coeffs[r * cols + c];
                if w.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc + w.clone() * a.clone() * b.clone();
            }
        }
        Ok(acc)
    }
}

/// Determinant by Gaussian elimination (largest-magnitude pivot).
pub fn determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let k = m.len();
    let mut det = S::one();
    for col in 0..k {
        let pivot = (col..k)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].abs_f64().total_cmp(&m[b][col].abs_f64()));
        let Some(pr) = pivot else {
            return S::zero();
        };
        if pr != col {
            m.swap(pr, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det = det * pv.clone();
        for r in col + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() / pv.clone();
            for c in col..k {
                let t = m[col][c].clone() * f.clone();
                m[r][c] = m[r][c].clone() - t;
            }
        }
    }
    det
}

impl<S: Scalar> Add for &DoubleForm<S> {
    type Output = DoubleForm<S>;
    /// Panics on shape mismatch; use [`DoubleForm::try_add`] for a checked sum.
    fn add(self, rhs: Self) -> DoubleForm<S> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Sub for &DoubleForm<S> {
    type Output = DoubleForm<S>;
    fn sub(self, rhs: Self) -> DoubleForm<S> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Add for DoubleForm<S> {
    type Output = DoubleForm<S>;
    fn add(self, rhs: Self) -> DoubleForm<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for DoubleForm<S> {
    type Output = DoubleForm<S>;
    fn sub(self, rhs: Self) -> DoubleForm<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for DoubleForm<S> {
    type Output = DoubleForm<S>;
    fn neg(self) -> DoubleForm<S> {
        self.map(|v| -v.clone())
    }
}

/// `g^k / k!`: the identity grid in degree `(k,k)`.
pub fn normalized_metric_power<S: Scalar>(n: usize, k: usize) -> Result<DoubleForm<S>> {
    DoubleForm::identity(n, k, S::one())
}

impl<S: Scalar> DoubleForm<S> {
    /// Checked variant of scalar multiplication by an integer ratio.
    pub fn scale_ratio(&self, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Numeric("division by zero".into()));
        }
        Ok(self.scale(&S::from_ratio(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_form, random_symmetric, seeded};
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(v: i64) -> Q {
        <Q as Scalar>::from_i64(v)
    }

    #[test]
    fn metric_squared_on_unit_biplane_is_two() {
        let g = DoubleForm::<f64>::metric(4).unwrap();
        let g2 = g.exterior_product(&g).unwrap();
        assert_eq!(g2.component(&[0, 1], &[0, 1]), 2.0);
        assert_eq!(g2.component(&[1, 0], &[0, 1]), -2.0);
        assert_eq!(g2.component(&[0, 1], &[0, 2]), 0.0);
    }

    #[test]
    fn unit_scalar_is_identity_for_product() {
        let mut rng = seeded(1);
        let w = random_form::<Q>(5, 2, 3, &mut rng);
        let one = DoubleForm::scalar(5, q(1)).unwrap();
        assert_eq!(one.exterior_product(&w).unwrap(), w);
        assert_eq!(w.exterior_product(&one).unwrap(), w);
    }

    #[test]
    fn metric_powers_match_repeated_products() {
        for n in 1..=6 {
            let g = DoubleForm::<Q>::metric(n).unwrap();
            let mut acc = DoubleForm::scalar(n, q(1)).unwrap();
            for k in 0..=n {
                assert_eq!(acc, DoubleForm::metric_power(n, k).unwrap(), "n={n} k={k}");
                let normalized = acc.scale(&(q(1) / factorial::<Q>(k)));
                assert_eq!(normalized, normalized_metric_power(n, k).unwrap());
                if k < n {
                    acc = g.exterior_product(&acc).unwrap();
                }
            }
        }
    }

    #[test]
    fn metric_power_times_matches_general_product() {
        let mut rng = seeded(2);
        for n in 3..=6 {
            for (p, qd) in [(0, 0), (1, 1), (2, 2), (1, 2), (2, 1), (3, 1)] {
                if p > n || qd > n {
                    continue;
                }
                let w = random_form::<Q>(n, p, qd, &mut rng);
                for k in 0..=(n - p.max(qd)) {
                    let gk = DoubleForm::<Q>::metric_power(n, k).unwrap();
                    assert_eq!(
                        w.metric_power_times(k).unwrap(),
                        gk.exterior_product(&w).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn contraction_examples() {
        for n in 2..=7 {
            let g = DoubleForm::<Q>::metric(n).unwrap();
            assert_eq!(g.contraction().unwrap().as_scalar().unwrap(), q(n as i64));
            let g2 = DoubleForm::<Q>::metric_power(n, 2).unwrap();
            assert_eq!(g2.contraction().unwrap(), g.scale(&q(2 * (n as i64 - 1))));
        }
        let s = DoubleForm::<f64>::scalar(3, 1.0).unwrap();
        assert!(matches!(s.contraction(), Err(Error::Degree(_))));
    }

    #[test]
    fn commutation_rule_exact() {
        // c(g·w) - g·c(w) = (n-p-q) w
        let mut rng = seeded(3);
        for n in 2..=7 {
            for p in 0..n {
                for qd in 0..n {
                    if p + qd > n + 1 {
                        continue;
                    }
                    let w = random_form::<Q>(n, p, qd, &mut rng);
                    let lhs = w.metric_power_times(1).unwrap().contraction().unwrap();
                    let rhs = if p >= 1 && qd >= 1 {
                        lhs.clone() - w.contraction().unwrap().metric_power_times(1).unwrap()
                    } else {
                        lhs.clone()
                    };
                    let coeff = n as i64 - p as i64 - qd as i64;
                    assert_eq!(rhs, w.scale(&q(coeff)), "n={n} p={p} q={qd}");
                }
            }
        }
    }

    #[test]
    fn star_of_metric_powers() {
        for n in 1..=6 {
            for p in 0..=n {
                let a = normalized_metric_power::<Q>(n, p).unwrap().hodge_star();
                assert_eq!(a, normalized_metric_power(n, n - p).unwrap());
            }
        }
    }

    #[test]
    fn double_star_sign() {
        let mut rng = seeded(4);
        for n in 1..=6 {
            for p in 0..=n {
                for qd in 0..=n {
                    let w = random_form::<Q>(n, p, qd, &mut rng);
                    let ss = w.hodge_star().hodge_star();
                    let even = (p * (n - p) + qd * (n - qd)) % 2 == 0;
                    assert_eq!(ss, if even { w.clone() } else { -w.clone() });
                }
            }
        }
    }

    #[test]
    fn star_is_an_isometry() {
        let mut rng = seeded(5);
        for n in 2..=6 {
            let a = random_form::<Q>(n, 2, 1, &mut rng);
            let b = random_form::<Q>(n, 2, 1, &mut rng);
            assert_eq!(
                a.inner_product(&b).unwrap(),
                a.hodge_star().inner_product(&b.hodge_star()).unwrap()
            );
        }
    }

    #[test]
    fn inner_product_examples() {
        let g = DoubleForm::<Q>::metric(5).unwrap();
        assert_eq!(g.inner_product(&g).unwrap(), q(5));
        let r = DoubleForm::<Q>::metric_power(4, 2)
            .unwrap()
            .scale(&Q::from_ratio(1, 2));
        assert_eq!(r.inner_product(&r).unwrap(), q(6));
        let h = DoubleForm::<Q>::metric(4).unwrap();
        assert!(h.inner_product(&r).is_err());
    }

    #[test]
    fn iota_reduces_to_contraction_and_trace() {
        let mut rng = seeded(6);
        let g = DoubleForm::<Q>::metric(5).unwrap();
        let w = random_form::<Q>(5, 2, 3, &mut rng);
        assert_eq!(w.interior_iota(&g).unwrap(), w.contraction().unwrap());
        let h = random_symmetric::<Q>(5, &mut rng);
        let trace = (0..5).fold(q(0), |acc, i| acc + h.get(i, i).clone());
        assert_eq!(g.interior_iota(&h).unwrap().as_scalar().unwrap(), trace);
    }

    #[test]
    fn iota_and_interior_are_adjoint() {
        let mut rng = seeded(7);
        for _ in 0..100 {
            let n = 5;
            let h = random_symmetric::<Q>(n, &mut rng);
            let w = random_form::<Q>(n, 3, 2, &mut rng);
            let v = random_form::<Q>(n, 2, 1, &mut rng);
            let lhs = w.interior_iota(&h).unwrap().inner_product(&v).unwrap();
            let rhs = w.inner_product(&h.exterior_product(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
        for n in 4..=6 {
            for (p, qd, r) in [
                (2, 1, 1),
                (2, 2, 1),
                (3, 2, 1),
                (3, 3, 2),
                (2, 2, 2),
                (3, 1, 1),
            ] {
                let a = random_form::<Q>(n, r, r, &mut rng);
                let w = random_form::<Q>(n, p, qd, &mut rng);
                let v = random_form::<Q>(n, p - r, qd - r, &mut rng);
                let lhs = w.adjoint_interior(&a).unwrap().inner_product(&v).unwrap();
                let rhs = w.inner_product(&a.exterior_product(&v).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "n={n} p={p} q={qd} r={r}");
            }
        }
    }

    #[test]
    fn interior_by_metric_power_is_signed_contraction() {
        // c^r = ± *g^r*, with + whenever p = q.
        let mut rng = seeded(8);
        for n in 2..=6 {
            for p in 1..=n {
                for qd in 1..=n {
                    let w = random_form::<Q>(n, p, qd, &mut rng);
                    for r in 1..=p.min(qd) {
                        let gr = DoubleForm::<Q>::metric_power(n, r).unwrap();
                        let c = w.contract_times(r).unwrap();
                        assert_eq!(w.adjoint_interior(&gr).unwrap(), c);
                        let raw = gr.exterior_product(&w.hodge_star()).unwrap().hodge_star();
                        let even = ((p - r) * (n - p) + (qd - r) * (n - qd)) % 2 == 0;
                        assert_eq!(raw, if even { c.clone() } else { -c.clone() });
                        if p == qd {
                            assert!(even);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_examples() {
        let g = DoubleForm::<Q>::metric(4).unwrap();
        assert_eq!(g.composition(&g).unwrap(), g);
        let g2 = DoubleForm::<Q>::metric_power(4, 2).unwrap();
        assert_eq!(g2.composition(&g2).unwrap(), g2.scale(&q(2)));
        assert!(g.composition(&g2).is_err());
    }

    #[test]
    fn greub_vanstone_identity() {
        let mut rng = seeded(9);
        for _ in 0..20 {
            let n = 5;
            let h = random_symmetric::<Q>(n, &mut rng);
            let k = random_symmetric::<Q>(n, &mut rng);
            let lhs = k
                .metric_power_times(1)
                .unwrap()
                .composition(&h.metric_power_times(1).unwrap())
                .unwrap();
            let rhs = k.composition(&h).unwrap().metric_power_times(1).unwrap()
                + k.exterior_product(&h).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bianchi_sum_examples() {
        let mut rng = seeded(10);
        for k in 1..=3 {
            let gk = DoubleForm::<Q>::metric_power(5, k).unwrap();
            assert!(gk.first_bianchi_sum().unwrap().is_zero());
        }
        for _ in 0..10 {
            let h = random_symmetric::<Q>(5, &mut rng);
            let r = h.exterior_product(&h).unwrap();
            assert!(r.first_bianchi_sum().unwrap().is_zero());
        }
        let w = random_form::<Q>(5, 2, 2, &mut rng);
        assert!(!w.first_bianchi_sum().unwrap().is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let n = 4;
        let e = |i: usize| -> Vec<f64> { (0..n).map(|k| if k == i { 1.0 } else { 0.0 }).collect() };
        let g = DoubleForm::<f64>::metric(n).unwrap();
        for i in 0..n {
            for j in 0..n {
                let v = g.evaluate(&[e(i)], &[e(j)]).unwrap();
                assert_eq!(v, if i == j { 1.0 } else { 0.0 });
            }
        }
        let half_g2 = normalized_metric_power::<f64>(n, 2).unwrap();
        assert_eq!(half_g2.evaluate(&[e(0), e(1)], &[e(0), e(1)]).unwrap(), 1.0);
        // Sectional curvature of R = k g²/2 on a rotated orthonormal pair.
        let k = 0.7;
        let r = half_g2.scale(&k);
        let (c, s) = (0.6, 0.8);
        let x = vec![c, s, 0.0, 0.0];
        let y = vec![-s, c, 0.0, 0.0];
        let z = vec![0.0, 0.0, 1.0, 0.0];
        assert!(
            (r.evaluate(&[x.clone(), y.clone()], &[x.clone(), y])
                .unwrap()
                - k)
                .abs()
                < 1e-14
        );
        assert!((r.evaluate(&[x.clone(), z.clone()], &[x, z]).unwrap() - k).abs() < 1e-14);
    }

    #[test]
    fn transpose_and_norm() {
        let g = DoubleForm::<Q>::metric(4).unwrap();
        assert_eq!(g.transpose(), g);
        let mut rng = seeded(11);
        let h = random_form::<Q>(4, 1, 1, &mut rng);
        let k = random_form::<Q>(4, 1, 1, &mut rng);
        assert_eq!(
            h.exterior_product(&k).unwrap().transpose(),
            h.transpose().exterior_product(&k.transpose()).unwrap()
        );
        assert_eq!(DoubleForm::<f64>::zeros(4, 2, 1).unwrap().norm(), 0.0);
        assert!(DoubleForm::<f64>::zeros(4, 5, 1).is_err());
    }

    #[test]
    fn degree_overflow_is_an_error() {
        let g3 = DoubleForm::<f64>::metric_power(4, 3).unwrap();
        let g2 = DoubleForm::<f64>::metric_power(4, 2).unwrap();
        assert!(matches!(g3.exterior_product(&g2), Err(Error::Degree(_))));
        assert!(g3.metric_power_times(2).is_err());
    }

    #[test]
    fn determinant_small_cases() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(determinant(m), q(5));
        let singular = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert_eq!(determinant(singular), 0.0);
        assert_eq!(determinant::<f64>(vec![]), 1.0);
    }
}
