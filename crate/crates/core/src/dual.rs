//! Forward-mode dual numbers, nestable for higher derivatives.
//!
//! `Dual<f64>` carries one directional derivative. `Dual<Dual<Dual<f64>>>`
//! carries three independent infinitesimals, and the coefficient of
//! `e1*e2*e3` of a result is a third mixed partial.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::{Real, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual<T> {
    pub re: T,
    pub eps: T,
}

impl<T: Scalar> Dual<T> {
    pub fn new(re: T, eps: T) -> Self {
        Dual { re, eps }
    }

    pub fn constant(re: T) -> Self {
        Dual { re, eps: T::zero() }
    }

    pub fn variable(re: T) -> Self {
        Dual { re, eps: T::one() }
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dual::new(self.re + rhs.re, self.eps + rhs.eps)
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Dual::new(self.re - rhs.re, self.eps - rhs.eps)
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let eps = self.re.clone() * rhs.eps + self.eps * rhs.re.clone();
        Dual::new(self.re * rhs.re, eps)
    }
}

impl<T: Scalar> Div for Dual<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let re = self.re.clone() / rhs.re.clone();
        let eps = (self.eps - re.clone() * rhs.eps) / rhs.re;
        Dual::new(re, eps)
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual::new(-self.re, -self.eps)
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    const EXACT: bool = T::EXACT;

    fn zero() -> Self {
        Dual::constant(T::zero())
    }
    fn one() -> Self {
        Dual::constant(T::one())
    }
    fn from_i64(v: i64) -> Self {
        Dual::constant(T::from_i64(v))
    }
    fn from_f64(v: f64) -> Self {
        Dual::constant(T::from_f64(v))
    }
    fn to_f64(&self) -> f64 {
        self.re.to_f64()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }
}

impl<T: Real> Real for Dual<T> {
    fn sqrt(&self) -> Self {
        let root = self.re.sqrt();
        let eps = self.eps.clone() / (T::from_i64(2) * root.clone());
        Dual::new(root, eps)
    }
    fn sin(&self) -> Self {
        Dual::new(self.re.sin(), self.eps.clone() * self.re.cos())
    }
    fn cos(&self) -> Self {
        Dual::new(self.re.cos(), -(self.eps.clone() * self.re.sin()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_derivative_of_rational_function() {
        // f(x) = x^2 / (1 + x), f'(x) = (x^2 + 2x) / (1 + x)^2
        let x = Dual::variable(2.0);
        let f = x * x / (Dual::one() + x);
        assert!((f.re - 4.0 / 3.0).abs() < 1e-15);
        assert!((f.eps - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn nested_duals_give_third_derivative() {
        // f(x) = x^5, f''' = 60 x^2
        type D3 = Dual<Dual<Dual<f64>>>;
        let x0 = 1.5;
        let inner = Dual::variable(x0);
        let mid = Dual::new(inner, Dual::constant(1.0));
        let x: D3 = Dual::new(mid, Dual::constant(Dual::constant(1.0)));
        let f = x * x * x * x * x;
        assert!((f.eps.eps.eps - 60.0 * x0 * x0).abs() < 1e-12);
        assert!((f.re.re.eps - 5.0 * x0.powi(4)).abs() < 1e-12);
        assert!((f.re.eps.eps - 20.0 * x0.powi(3)).abs() < 1e-12);
    }

    #[test]
    fn transcendental_rules() {
        let x = Dual::variable(0.3f64);
        assert!((x.sin().eps - 0.3f64.cos()).abs() < 1e-15);
        assert!((x.cos().eps + 0.3f64.sin()).abs() < 1e-15);
        assert!((x.sqrt().eps - 0.5 / 0.3f64.sqrt()).abs() < 1e-15);
    }
}
