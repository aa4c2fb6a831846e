//! Estimator for `p_{k,n}(f) = sup_x |x|^k |f^{(n)}(x)|`.
//!
//! `f^{(n)}` is built exactly in coefficients. The objective is scanned on a
//! uniform grid over `[-R, R]`, where `R` is the turning point of the highest
//! basis function in `x^k f^{(n)}`; past `R` every term decays like a Gaussian.
//! The strongest local maxima of the scan are then polished by golden-section
//! search. Every returned value is attained by the function, so the result
//! never exceeds the true supremum.

use std::f64::consts::PI;

use super::{SchwartzFn, SeminormIndex};

pub const SEMINORM_GRID_POINTS: usize = 4096;

// Peaks below this fraction of the grid maximum are not refined.
const REFINE_FLOOR: f64 = 0.5;
const MAX_REFINED_PEAKS: usize = 16;
const GOLDEN_REL_STEP: f64 = 1e-6;

/// Half-width of the scanned interval for a function of the given degree.
pub fn seminorm_scan_radius(degree: usize, idx: SeminormIndex) -> f64 {
    let top = degree as f64 + idx.n as f64 + idx.k as f64;
    ((2.0 * top + 1.0) / PI).sqrt()
}

pub fn seminorm(f: &SchwartzFn, idx: SeminormIndex) -> f64 {
    if f.is_zero() {
        return 0.0;
    }
    let d = f.nth_derivative(idx.n as usize);
    if d.is_zero() {
        return 0.0;
    }
    let k = idx.k as i32;
    let objective = |x: f64| x.abs().powi(k) * d.eval(x).norm();

    let r = seminorm_scan_radius(f.degree(), idx);
    let m = SEMINORM_GRID_POINTS;
    let step = 2.0 * r / (m - 1) as f64;
    let xs: Vec<f64> = (0..m).map(|j| -r + step * j as f64).collect();
    let vals: Vec<f64> = xs.iter().map(|&x| objective(x)).collect();
    let grid_max = vals.iter().copied().fold(0.0, f64::max);
    if grid_max == 0.0 {
        return 0.0;
    }

    let mut peaks: Vec<usize> = (0..m)
        .filter(|&j| {
            let left = j == 0 || vals[j] >= vals[j - 1];
            let right = j + 1 == m || vals[j] >= vals[j + 1];
            left && right && vals[j] >= REFINE_FLOOR * grid_max
        })
        .collect();
    peaks.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
    peaks.truncate(MAX_REFINED_PEAKS);

    let mut best = grid_max;
    for j in peaks {
        let lo = xs[j.saturating_sub(1)];
        let hi = xs[(j + 1).min(m - 1)];
        best = best.max(golden_max(&objective, lo, hi));
    }
    best
}

/// Largest value seen while golden-section searching `[lo, hi]` for a maximum.
fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut best = f(lo).max(f(hi));
    let mut a = hi - inv_phi * (hi - lo);
    let mut b = lo + inv_phi * (hi - lo);
    let mut fa = f(a);
    let mut fb = f(b);
    best = best.max(fa).max(fb);
    while hi - lo > GOLDEN_REL_STEP * lo.abs().max(hi.abs()).max(1.0) {
        if fa >= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
            best = best.max(fa);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
            best = best.max(fb);
        }
    }
    best
}
