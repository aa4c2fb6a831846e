//! Linear maps on Schwartz functions.
//!
//! [`SchwartzOperator`] is the common currency of the certificate falsifier,
//! the distributional adjoint and the density extension. Implementors that
//! act on coefficients through a finite band also report that band and a
//! bound on their column sums; the adjoint needs both to act on
//! distributions whose coefficients are only available one at a time.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{random_schwartz, Polynomial, SchwartzFn};
use crate::error::{Error, Result};

pub trait SchwartzOperator: Send + Sync {
    fn apply(&self, f: &SchwartzFn) -> SchwartzFn;

    fn label(&self) -> String;

    /// Half-width `b` of the coefficient band: `(A f)_m` only involves `a_n`
    /// with `|m - n| ≤ b`. `None` for dense actions.
    fn bandwidth(&self) -> Option<usize> {
        None
    }

    /// `(K, q)` with `Σ_m |A_{mn}| ≤ K (1+n)^q` for every column `n`.
    fn column_growth(&self) -> Option<(f64, f64)> {
        None
    }
}

/// Spot-checks additivity and homogeneity on `pairs` random inputs.
pub fn check_linearity(op: &dyn SchwartzOperator, pairs: usize, seed: u64, degree: usize) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..pairs {
        let f = random_schwartz(&mut rng, degree);
        let g = random_schwartz(&mut rng, degree);
        let c = Complex64::new(rand::Rng::random_range(&mut rng, -2.0..2.0), rand::Rng::random_range(&mut rng, -2.0..2.0));
        let af = op.apply(&f);
        let ag = op.apply(&g);
        let sum = op.apply(&f.add(&g));
        let scaled = op.apply(&f.scale(c));
        let scale = 1.0 + af.max_norm().max(ag.max_norm()).max(sum.max_norm()) * (1.0 + c.norm());
        worst = worst
            .max(sum.max_diff(&af.add(&ag)) / scale)
            .max(scaled.max_diff(&af.scale(c)) / scale);
    }
    if worst > 1e-9 {
        return Err(Error::NonLinear {
            label: op.label(),
            residual: worst,
        });
    }
    Ok(())
}

/// The built-in banded operators, serializable as `{"op": "...", ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum LinearOp {
    Identity,
    /// Multiplication by the complex constant `[re, im]`.
    Scale { c: [f64; 2] },
    Fourier,
    InverseFourier,
    Derivative,
    MulX,
    MulPoly { poly: Polynomial },
    /// `ops[0]` is applied first.
    Compose { ops: Vec<LinearOp> },
}

impl LinearOp {
    pub fn scale(c: Complex64) -> Self {
        LinearOp::Scale { c: [c.re, c.im] }
    }

    /// `second ∘ first`.
    pub fn then(self, second: LinearOp) -> Self {
        LinearOp::Compose {
            ops: vec![self, second],
        }
    }

    /// `(bandwidth, K, q)`.
    fn band(&self) -> (usize, f64, f64) {
        match self {
            LinearOp::Identity | LinearOp::Fourier | LinearOp::InverseFourier => (0, 1.0, 0.0),
            LinearOp::Scale { c } => (0, Complex64::new(c[0], c[1]).norm(), 0.0),
            LinearOp::Derivative => (1, 2.0 * PI.sqrt(), 0.5),
            LinearOp::MulX => (1, 1.0 / PI.sqrt(), 0.5),
            LinearOp::MulPoly { poly } => {
                let k = poly
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c.abs() * PI.powf(-(j as f64) / 2.0) * (1.0 + j as f64).powf(j as f64 / 2.0))
                    .sum();
                (poly.degree(), k, poly.degree() as f64 / 2.0)
            }
            LinearOp::Compose { ops } => ops.iter().fold((0, 1.0, 0.0), |(b1, k1, q1), op| {
                let (b2, k2, q2) = op.band();
                (b1 + b2, k1 * k2 * (1.0 + b1 as f64).powf(q2), q1 + q2)
            }),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            LinearOp::Scale { c } => c.iter().all(|v| v.is_finite()),
            LinearOp::MulPoly { poly } => poly.is_finite(),
            LinearOp::Compose { ops } => ops.iter().all(LinearOp::is_finite),
            _ => true,
        }
    }
}

impl SchwartzOperator for LinearOp {
    fn apply(&self, f: &SchwartzFn) -> SchwartzFn {
        match self {
            LinearOp::Identity => f.clone(),
            LinearOp::Scale { c } => f.scale(Complex64::new(c[0], c[1])),
            LinearOp::Fourier => f.fourier(),
            LinearOp::InverseFourier => f.inverse_fourier(),
            LinearOp::Derivative => f.derivative(),
            LinearOp::MulX => f.mul_by_x(),
            LinearOp::MulPoly { poly } => f.mul_by_poly(poly),
            LinearOp::Compose { ops } => ops.iter().fold(f.clone(), |g, op| op.apply(&g)),
        }
    }

    fn label(&self) -> String {
        match self {
            LinearOp::Identity => "identity".into(),
            LinearOp::Scale { c } => format!("scale({}{:+}i)", c[0], c[1]),
            LinearOp::Fourier => "fourier".into(),
            LinearOp::InverseFourier => "inverse_fourier".into(),
            LinearOp::Derivative => "derivative".into(),
            LinearOp::MulX => "mul_x".into(),
            LinearOp::MulPoly { poly } => format!("mul_poly{:?}", poly.coeffs()),
            LinearOp::Compose { ops } => ops.iter().map(|o| o.label()).collect::<Vec<_>>().join(" ; "),
        }
    }

    fn bandwidth(&self) -> Option<usize> {
        Some(self.band().0)
    }

    fn column_growth(&self) -> Option<(f64, f64)> {
        let (_, k, q) = self.band();
        Some((k, q))
    }
}
