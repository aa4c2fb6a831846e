//! Reference computations that do not go through the Hermite machinery:
//! composite trapezoid sums, Richardson-extrapolated differences and dense
//! grid maxima.

use num_complex::Complex64;
use rayon::prelude::*;

/// Composite trapezoid rule for `∫_a^b f` with `intervals` equal steps.
///
/// For integrands that are analytic and negligible at both ends this is
/// spectrally accurate.
pub fn trapezoid(f: impl Fn(f64) -> Complex64, a: f64, b: f64, intervals: usize) -> Complex64 {
    let h = (b - a) / intervals as f64;
    let mut acc = 0.5 * (f(a) + f(b));
    for i in 1..intervals {
        acc += f(a + h * i as f64);
    }
    acc * h
}

/// Trapezoid nodes and weights on `[a, b]`.
pub fn trapezoid_grid(a: f64, b: f64, intervals: usize) -> (Vec<f64>, Vec<f64>) {
    let h = (b - a) / intervals as f64;
    let nodes = (0..=intervals).map(|i| a + h * i as f64).collect();
    let weights = (0..=intervals)
        .map(|i| if i == 0 || i == intervals { 0.5 * h } else { h })
        .collect();
    (nodes, weights)
}

/// Tensor trapezoid rule for `∫∫ k(x, y) f(x) g(y) dx dy` over `[a, b]²`.
pub fn trapezoid_2d(
    kernel: impl Fn(f64, f64) -> Complex64 + Sync,
    f: impl Fn(f64) -> Complex64,
    g: impl Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    intervals: usize,
) -> Complex64 {
    let (nodes, weights) = trapezoid_grid(a, b, intervals);
    let fx: Vec<Complex64> = nodes.iter().zip(&weights).map(|(&x, &w)| f(x) * w).collect();
    let gy: Vec<Complex64> = nodes.iter().zip(&weights).map(|(&y, &w)| g(y) * w).collect();
    fx.par_iter()
        .zip(nodes.par_iter())
        .map(|(&fxw, &x)| {
            let inner: Complex64 = gy.iter().zip(&nodes).map(|(&gyw, &y)| kernel(x, y) * gyw).sum();
            fxw * inner
        })
        .sum()
}

/// `f'(x)` by central differences with step `h0 / 2^j`, `j < levels`,
/// extrapolated in `h²` through a Neville tableau.
pub fn richardson_derivative(f: impl Fn(f64) -> Complex64, x: f64, h0: f64, levels: usize) -> Complex64 {
    let mut prev: Vec<Complex64> = Vec::new();
    for j in 0..levels {
        let h = h0 / f64::powi(2.0, j as i32);
        let mut row = vec![(f(x + h) - f(x - h)) / (2.0 * h)];
        let mut factor = 4.0;
        for m in 1..=j {
            let r = row[m - 1];
            row.push(r + (r - prev[m - 1]) / (factor - 1.0));
            factor *= 4.0;
        }
        prev = row;
    }
    *prev.last().expect("at least one level")
}

/// `max_i |g(x_i)|` over `points` equally spaced nodes of `[-radius, radius]`.
pub fn grid_max(g: impl Fn(f64) -> f64 + Sync, radius: f64, points: usize) -> f64 {
    let step = 2.0 * radius / (points - 1) as f64;
    (0..points)
        .into_par_iter()
        .map(|i| g(-radius + step * i as f64).abs())
        .reduce(|| 0.0, f64::max)
}
