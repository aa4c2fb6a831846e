//! Schwartz functions on the real line as finite Hermite expansions.
//!
//! A [`SchwartzFn`] stores coefficients `a_n` of `f = Σ a_n h_n`. The set of
//! such expansions is closed under differentiation, multiplication by `x`
//! and the Fourier transform, and each of those acts on coefficients by a
//! banded (tridiagonal or diagonal) map, so none of them needs quadrature.

pub(crate) mod json;
pub(crate) mod operator;
mod polynomial;
mod random;
mod seminorm;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::hermite::{self, SQRT_2PI};

pub use json::SCHWARTZ_BASIS_TAG;
pub use operator::{LinearOp, SchwartzOperator};
pub use polynomial::Polynomial;
pub use random::{random_coeffs, random_schwartz};
pub use seminorm::{seminorm, seminorm_scan_radius, SEMINORM_GRID_POINTS};

/// Trailing coefficients at or below this magnitude are dropped.
pub const TRIM_TOLERANCE: f64 = 1e-14;

/// Relative tolerance used by [`SchwartzFn::approx_eq`].
pub const EQ_TOLERANCE: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `(-i)^n`, exactly.
pub fn neg_i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// `i^n`, exactly.
pub fn i_pow(n: usize) -> Complex64 {
    neg_i_pow((4 - n % 4) % 4)
}

/// Multiplies by a power of `±i` without rounding.
pub(crate) fn rotate(c: Complex64, by: Complex64) -> Complex64 {
    if by.im == 0.0 {
        if by.re > 0.0 {
            c
        } else {
            -c
        }
    } else if by.im > 0.0 {
        Complex64::new(-c.im, c.re)
    } else {
        Complex64::new(c.im, -c.re)
    }
}

/// The pair `(k, n)` naming the seminorm `sup_x |x|^k |f^{(n)}(x)|`.
/// Serialized as `[k, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct SeminormIndex {
    pub k: u32,
    pub n: u32,
}

impl SeminormIndex {
    pub const fn new(k: u32, n: u32) -> Self {
        Self { k, n }
    }
}

impl fmt::Display for SeminormIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k, self.n)
    }
}

impl From<(u32, u32)> for SeminormIndex {
    fn from((k, n): (u32, u32)) -> Self {
        Self { k, n }
    }
}

impl From<SeminormIndex> for (u32, u32) {
    fn from(idx: SeminormIndex) -> Self {
        (idx.k, idx.n)
    }
}

/// A Schwartz function `Σ_{n ≤ degree} a_n h_n`.
///
/// Always canonical: at least one coefficient, and the trailing one is
/// nonzero unless the function is zero. `PartialEq` is exact; use
/// [`approx_eq`](Self::approx_eq) for the tolerance-aware comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwartzFn {
    coeffs: Vec<Complex64>,
}

impl Default for SchwartzFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl SchwartzFn {
    pub fn from_coeffs(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() <= TRIM_TOLERANCE) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        if coeffs.len() == 1 && coeffs[0].norm() <= TRIM_TOLERANCE {
            coeffs[0] = ZERO;
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![ZERO] }
    }

    /// `h_n`.
    pub fn basis(n: usize) -> Self {
        let mut coeffs = vec![ZERO; n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    /// `e^{-πx²} = 2^{-1/4} h_0`.
    pub fn gaussian() -> Self {
        Self {
            coeffs: vec![Complex64::new(2f64.powf(-0.25), 0.0)],
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient `a_n`, zero past the degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        hermite::eval_series(&self.coeffs, x)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|n| self.coeff(n) + other.coeff(n)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|n| self.coeff(n) - other.coeff(n)).collect())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f'`, via `h_n' = √(2π) (√(n/2) h_{n-1} - √((n+1)/2) h_{n+1})`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + 1;
        let out = (0..len)
            .map(|m| {
                let up = ((m + 1) as f64 / 2.0).sqrt() * self.coeff(m + 1);
                let down = if m > 0 {
                    (m as f64 / 2.0).sqrt() * self.coeff(m - 1)
                } else {
                    ZERO
                };
                (up - down) * SQRT_2PI
            })
            .collect();
        Self::from_coeffs(out)
    }

    /// `f^{(order)}`.
    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |f, _| f.derivative())
    }

    /// `x·f`, via `x h_n = (√(n/2) h_{n-1} + √((n+1)/2) h_{n+1}) / √(2π)`.
    pub fn mul_by_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + 1;
        let out = (0..len)
            .map(|m| {
                let up = ((m + 1) as f64 / 2.0).sqrt() * self.coeff(m + 1);
                let down = if m > 0 {
                    (m as f64 / 2.0).sqrt() * self.coeff(m - 1)
                } else {
                    ZERO
                };
                (up + down) / SQRT_2PI
            })
            .collect();
        Self::from_coeffs(out)
    }

    /// `p·f`, Horner's scheme over [`mul_by_x`](Self::mul_by_x).
    pub fn mul_by_poly(&self, p: &Polynomial) -> Self {
        let mut acc = Self::zero();
        for &c in p.coeffs().iter().rev() {
            acc = acc.mul_by_x().add(&self.scale(Complex64::new(c, 0.0)));
        }
        acc
    }

    /// `(F f)(ξ) = ∫ e^{-2πixξ} f(x) dx`: multiplies `a_n` by `(-i)^n`.
    pub fn fourier(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, &a)| rotate(a, neg_i_pow(n)))
                .collect(),
        }
    }

    /// Inverse transform: multiplies `a_n` by `i^n`.
    pub fn inverse_fourier(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, &a)| rotate(a, i_pow(n)))
                .collect(),
        }
    }

    pub fn seminorm(&self, idx: SeminormIndex) -> f64 {
        seminorm(self, idx)
    }

    /// Bilinear pairing `∫ f g = Σ a_n b_n` (no conjugation).
    pub fn pairing(&self, other: &Self) -> Complex64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `∫ conj(f) g = Σ conj(a_n) b_n`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest coefficient modulus.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Coefficientwise equality within `1e-12 · (1 + max norm)`.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.approx_eq_tol(other, EQ_TOLERANCE)
    }

    pub fn approx_eq_tol(&self, other: &Self, tol: f64) -> bool {
        let scale = 1.0 + self.max_norm().max(other.max_norm());
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|n| (self.coeff(n) - other.coeff(n)).norm() <= tol * scale)
    }

    /// Largest coefficientwise difference.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|n| (self.coeff(n) - other.coeff(n)).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &SchwartzFn {
    type Output = SchwartzFn;
    fn add(self, rhs: Self) -> SchwartzFn {
        SchwartzFn::add(self, rhs)
    }
}

impl Sub for &SchwartzFn {
    type Output = SchwartzFn;
    fn sub(self, rhs: Self) -> SchwartzFn {
        SchwartzFn::sub(self, rhs)
    }
}

impl Neg for &SchwartzFn {
    type Output = SchwartzFn;
    fn neg(self) -> SchwartzFn {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
