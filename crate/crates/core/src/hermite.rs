//! Hermite functions adapted to the `e^{-2πixξ}` Fourier convention.
//!
//! The basis is `h_n(x) = (2π)^{1/4} ψ_n(√(2π) x)`, where `ψ_n` is the
//! standard L²-orthonormal Hermite function with Gaussian factor `e^{-t²/2}`.
//! With this scaling `h_0(x) = 2^{1/4} e^{-πx²}` and every `h_n` is an
//! eigenfunction of the Fourier transform with eigenvalue `(-i)^n`.
//!
//! Evaluation runs the three-term recurrence on mantissas that exclude the
//! Gaussian factor, rescaling by powers of two whenever they grow, and
//! applies `e^{log_scale - t²/2}` only at the end. This keeps `n` in the
//! thousands and `|x|` up to 50 free of overflow.
//!
//! The quadrature rules integrate `p(x) e^{-2πx²}` exactly for polynomials of
//! degree `2·order - 1`, the natural weight for products of two basis functions.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// `√(2π)`, the scale between the `x` variable and the classical `t` variable.
pub const SQRT_2PI: f64 = 2.506_628_274_631_000_2;

/// Largest supported rule order. Beyond this the unweighted weights
/// `w_i e^{2πx_i²}` leave the double range at the outermost nodes.
pub const MAX_RULE_ORDER: usize = 320;

/// `2^{1/4}`, the value of `h_0(0)`.
pub const H0_AT_ZERO: f64 = 1.189_207_115_002_721;

const RESCALE: f64 = 18_446_744_073_709_551_616.0; // 2^64
const INV_RESCALE: f64 = 1.0 / RESCALE;
const LN_RESCALE: f64 = 44.361_419_555_836_5; // 64 ln 2

/// Degree of a basis function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HermiteIndex(pub usize);

impl HermiteIndex {
    pub fn degree(self) -> usize {
        self.0
    }

    pub fn eval(self, x: f64) -> f64 {
        eval_hermite(self.0, x)
    }
}

/// Runs the recurrence for `ψ_0..ψ_nmax` at `t` and hands `(k, mantissa,
/// log_scale)` to `visit`, where `ψ_k(t) = mantissa · e^{log_scale - t²/2}`.
#[inline]
fn sweep_psi(nmax: usize, t: f64, mut visit: impl FnMut(usize, f64, f64)) {
    let mut log_scale = 0.0;
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    visit(0, cur, log_scale);
    for k in 0..nmax {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * t * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            prev *= INV_RESCALE;
            cur *= INV_RESCALE;
            log_scale += LN_RESCALE;
        }
        visit(k + 1, cur, log_scale);
    }
}

/// Calls `visit(n, h_n(x))` for `n = 0..=nmax`.
#[inline]
pub fn for_each_hermite(nmax: usize, x: f64, mut visit: impl FnMut(usize, f64)) {
    let t = SQRT_2PI * x;
    let half_t2 = 0.5 * t * t;
    let norm = (2.0 * PI).powf(0.25);
    let mut current_scale = f64::NAN;
    let mut factor = 0.0;
    sweep_psi(nmax, t, |k, mantissa, log_scale| {
        if log_scale != current_scale {
            current_scale = log_scale;
            factor = norm * (log_scale - half_t2).exp();
        }
        visit(k, mantissa * factor);
    });
}

/// `h_n(x)`.
pub fn eval_hermite(n: usize, x: f64) -> f64 {
    let mut out = 0.0;
    for_each_hermite(n, x, |k, v| {
        if k == n {
            out = v;
        }
    });
    out
}

/// `[h_0(x), …, h_nmax(x)]`.
pub fn hermite_values(nmax: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(nmax + 1);
    for_each_hermite(nmax, x, |_, v| out.push(v));
    out
}

/// `Σ a_n h_n(x)`.
pub fn eval_series(coeffs: &[Complex64], x: f64) -> Complex64 {
    if coeffs.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for_each_hermite(coeffs.len() - 1, x, |k, v| acc += coeffs[k] * v);
    acc
}

/// `h_n(0)`, from `ψ_n(0) = -√((n-1)/n) ψ_{n-2}(0)`.
pub fn hermite_at_zero(n: usize) -> f64 {
    if n % 2 == 1 {
        return 0.0;
    }
    let mut v = H0_AT_ZERO;
    let mut k = 2;
    while k <= n {
        v *= -(((k - 1) as f64) / k as f64).sqrt();
        k += 2;
    }
    v
}

/// Gauss rule for the weight `e^{-2πx²}` on the real line.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    // weights[i] * e^{2π nodes[i]²}, for integrands that carry their own Gaussian.
    unweighted: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weights for integrating `F` directly, `∫ F ≈ Σ w_i e^{2πx_i²} F(x_i)`.
    /// Exact when `F = p · e^{-2πx²}` with `deg p ≤ 2·order - 1`.
    pub fn unweighted_weights(&self) -> &[f64] {
        &self.unweighted
    }

    /// `∫ g(x) e^{-2πx²} dx`.
    pub fn integrate_weighted(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * g(x))
            .sum()
    }

    /// `∫ f(x) dx` for integrands that already contain the factor `e^{-2πx²}`.
    pub fn integrate(&self, f: impl Fn(f64) -> Complex64) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.unweighted)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }
}

/// `(ψ_n mantissa, ψ_{n-1} mantissa, log_scale)` at `t`; both mantissas
/// share the scale `e^{log_scale - t²/2}`.
fn psi_pair(n: usize, t: f64) -> (f64, f64, f64) {
    let mut log_scale = 0.0;
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * t * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            prev *= INV_RESCALE;
            cur *= INV_RESCALE;
            log_scale += LN_RESCALE;
        }
    }
    (cur, prev, log_scale)
}

fn build_rule(order: usize) -> QuadratureRule {
    let n = order;
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        let b = (k as f64 / 2.0).sqrt();
        jacobi[(k, k - 1)] = b;
        jacobi[(k - 1, k)] = b;
    }
    let mut roots: Vec<f64> = SymmetricEigen::new(jacobi).eigenvalues.iter().copied().collect();
    roots.sort_by(|a, b| a.total_cmp(b));

    let nf = n as f64;
    for t in roots.iter_mut() {
        for _ in 0..8 {
            let (p, q, _) = psi_pair(n, *t);
            let dp = (2.0 * nf).sqrt() * q - *t * p;
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            *t -= step;
            if step.abs() <= 1e-16 * (1.0 + t.abs()) {
                break;
            }
        }
    }
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let m = 0.5 * (roots[j] - roots[i]);
        roots[i] = -m;
        roots[j] = m;
    }
    if n % 2 == 1 {
        roots[n / 2] = 0.0;
    }

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut unweighted = Vec::with_capacity(n);
    for &t in &roots {
        let (_, q, scale) = psi_pair(n, t);
        // Gauss weight for e^{-t²}: e^{-t²} / (n ψ_{n-1}(t)²), with the Gaussian cancelled.
        let lambda = 1.0 / (nf * q * q * (2.0 * scale).exp());
        let w = lambda / SQRT_2PI;
        nodes.push(t / SQRT_2PI);
        weights.push(w);
        unweighted.push(w * (t * t).exp());
    }
    QuadratureRule {
        nodes,
        weights,
        unweighted,
    }
}

fn rule_cache() -> &'static Mutex<HashMap<usize, Arc<QuadratureRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QuadratureRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss–Hermite rule of the given order, rescaled to the weight `e^{-2πx²}`.
/// Rules are built once and shared.
pub fn gauss_rule(order: usize) -> Result<Arc<QuadratureRule>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if order > MAX_RULE_ORDER {
        return Err(Error::OrderOverflow {
            requested: order,
            max: MAX_RULE_ORDER,
        });
    }
    if let Some(rule) = rule_cache().lock().unwrap().get(&order) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(build_rule(order));
    rule_cache()
        .lock()
        .unwrap()
        .entry(order)
        .or_insert_with(|| Arc::clone(&rule));
    Ok(rule)
}

/// Coefficients `a_n = ∫ f h_n`, `n = 0..=degree`, by quadrature.
///
/// `f` is the full function, not a factor of it: each node contributes
/// `w_i e^{2πx_i²} f(x_i) h_n(x_i)`, so the result is exact whenever
/// `f = p · e^{-πx²}` with `deg p + degree ≤ 2·order - 1`.
pub fn project(
    f: impl Fn(f64) -> Complex64,
    degree: usize,
    rule: &QuadratureRule,
) -> Result<Vec<Complex64>> {
    if rule.order() < degree + 1 {
        return Err(Error::RuleTooSmall {
            order: rule.order(),
            degree,
            needed: degree + 1,
        });
    }
    let mut out = vec![Complex64::new(0.0, 0.0); degree + 1];
    for (&x, &w) in rule.nodes.iter().zip(&rule.unweighted) {
        let fx = f(x) * w;
        if fx == Complex64::new(0.0, 0.0) {
            continue;
        }
        for_each_hermite(degree, x, |k, h| out[k] += fx * h);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn h0_at_zero_is_fourth_root_of_two() {
        assert!((eval_hermite(0, 0.0) - 2f64.powf(0.25)).abs() < 1e-15);
        assert!((eval_hermite(0, 0.0) - 1.189_207_12).abs() < 1e-8);
    }

    #[test]
    fn h0_normalization_by_fine_trapezoid() {
        // ∫ (c e^{-πx²})² = 1 fixes c; trapezoid is spectrally accurate here.
        let step = 1e-3;
        let s: f64 = (-8000..=8000)
            .map(|i| {
                let x = i as f64 * step;
                (-2.0 * PI * x * x).exp()
            })
            .sum::<f64>()
            * step;
        let c = 1.0 / s.sqrt();
        assert!((eval_hermite(0, 0.0) - c).abs() < 1e-12);
    }

    #[test]
    fn odd_functions_vanish_at_origin() {
        for n in (1..40).step_by(2) {
            assert_eq!(eval_hermite(n, 0.0), 0.0);
        }
    }

    #[test]
    fn zero_values_match_recurrence() {
        for n in 0..200 {
            let a = hermite_at_zero(n);
            let b = eval_hermite(n, 0.0);
            assert!((a - b).abs() < 1e-13, "n = {n}: {a} vs {b}");
        }
    }

    #[test]
    fn no_overflow_on_extreme_domain() {
        for &n in &[0, 1, 100, 1000, 2048] {
            for &x in &[-50.0, -20.0, -3.0, 0.0, 0.7, 12.0, 50.0] {
                let v = eval_hermite(n, x);
                assert!(v.is_finite(), "h_{n}({x}) = {v}");
                // Cramér: |ψ_n| ≤ π^{-1/4}
                assert!(v.abs() <= H0_AT_ZERO * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn order_one_rule() {
        let r = gauss_rule(1).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - FRAC_1_SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn order_two_second_moment() {
        let r = gauss_rule(2).unwrap();
        let m2 = r.integrate_weighted(|x| x * x);
        assert!((m2 - FRAC_1_SQRT_2 / (4.0 * PI)).abs() < 1e-14);
    }

    #[test]
    fn weights_sum_to_gaussian_mass() {
        for order in [1, 2, 3, 7, 20, 64, 150, MAX_RULE_ORDER] {
            let r = gauss_rule(order).unwrap();
            let s: f64 = r.weights().iter().sum();
            assert!((s - FRAC_1_SQRT_2).abs() < 1e-13, "order {order}: {s}");
            assert!(r.weights().iter().all(|&w| w > 0.0));
            assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn moments_exact_to_full_degree() {
        // ∫ x^{2j} e^{-2πx²} = (2j-1)!! / (4π)^j / √2
        let order = 12;
        let r = gauss_rule(order).unwrap();
        let mut dfact = 1.0;
        for j in 0..order {
            if j > 0 {
                dfact *= (2 * j - 1) as f64;
            }
            let exact = dfact / (4.0 * PI).powi(j as i32) * FRAC_1_SQRT_2;
            let got = r.integrate_weighted(|x| x.powi(2 * j as i32));
            assert!(((got - exact) / exact).abs() < 1e-13, "j = {j}");
            let odd = r.integrate_weighted(|x| x.powi(2 * j as i32 + 1));
            assert!(odd.abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(gauss_rule(0), Err(Error::ZeroOrder)));
        assert!(matches!(
            gauss_rule(MAX_RULE_ORDER + 1),
            Err(Error::OrderOverflow { .. })
        ));
    }

    #[test]
    fn gram_matrix_is_identity() {
        let r = gauss_rule(80).unwrap();
        let nmax = 64;
        let table: Vec<Vec<f64>> = r.nodes().iter().map(|&x| hermite_values(nmax, x)).collect();
        for m in 0..=nmax {
            for n in 0..=nmax {
                let g: f64 = table
                    .iter()
                    .zip(r.unweighted_weights())
                    .map(|(h, w)| w * h[m] * h[n])
                    .sum();
                let expect = if m == n { 1.0 } else { 0.0 };
                assert!((g - expect).abs() < 1e-12, "({m},{n}): {g}");
            }
        }
    }

    #[test]
    fn project_basis_function() {
        let r = gauss_rule(40).unwrap();
        let a = project(|x| eval_hermite(3, x).into(), 5, &r).unwrap();
        for (k, c) in a.iter().enumerate() {
            let e = if k == 3 { 1.0 } else { 0.0 };
            assert!((c - e).norm() < 1e-12);
        }
    }

    #[test]
    fn project_x_times_h0() {
        let r = gauss_rule(8).unwrap();
        let a = project(|x| (x * eval_hermite(0, x)).into(), 2, &r).unwrap();
        let expect = (0.5f64).sqrt() / SQRT_2PI;
        assert!(a[0].norm() < 1e-12);
        assert!((a[1] - expect).norm() < 1e-12);
        assert!(a[2].norm() < 1e-12);
    }

    #[test]
    fn project_zero_and_small_rule() {
        let r = gauss_rule(6).unwrap();
        let a = project(|_| Complex64::new(0.0, 0.0), 4, &r).unwrap();
        assert!(a.iter().all(|c| c.norm() == 0.0));
        assert!(matches!(
            project(|_| Complex64::new(1.0, 0.0), 6, &r),
            Err(Error::RuleTooSmall { .. })
        ));
    }
}
