//! L² as Hermite coefficient sequences, Fourier multipliers and `H^s` norms.
//!
//! The Hermite functions are an orthonormal basis of L², so an L² function is
//! its coefficient sequence. [`L2Elem`] keeps a finite head of that sequence
//! and a bound on the ℓ² norm of the discarded tail; bounded operators
//! defined on finite expansions extend to all of L² by pushing that bound
//! through ([`extend_by_density`]).
//!
//! A multiplier `F^{-1} m(ξ) F` is exact on coefficients when `m` is a
//! polynomial. For other symbols the product `m · F f` is projected back onto
//! the basis by Gauss quadrature and the projection error is reported as an
//! aliasing residual, the change in the result when the projection degree
//! grows by [`ALIASING_PROBE_STEP`].

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::{gauss_rule, hermite_values, MAX_RULE_ORDER};
use crate::schwartz::json::{decode_coeffs, encode_coeffs};
use crate::schwartz::{neg_i_pow, random_schwartz, rotate, SchwartzFn, SchwartzOperator, SCHWARTZ_BASIS_TAG};

/// Extra projection degree used to measure aliasing.
pub const ALIASING_PROBE_STEP: usize = 16;

/// Extra quadrature order on top of `2 · proj_degree`.
pub const RULE_ORDER_MARGIN: usize = 32;

/// Largest `|s|` accepted for `⟨ξ⟩^s`; beyond it no input fits the quadrature.
pub const MAX_BRACKET_ORDER: f64 = 128.0;

const BOUND_CHECK_SAMPLES: usize = 100;

/// Truncated element of L² with a bound on what was cut off.
///
/// The true norm lies in `[‖coeffs‖, √(‖coeffs‖² + tail²)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct L2Elem {
    coeffs: Vec<Complex64>,
    tail: f64,
}

impl L2Elem {
    pub fn new(coeffs: Vec<Complex64>, tail: f64) -> Result<Self> {
        if !(tail >= 0.0 && tail.is_finite()) {
            return Err(Error::BadTail(tail));
        }
        let coeffs = if coeffs.is_empty() {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            coeffs
        };
        Ok(Self { coeffs, tail })
    }

    /// The L² class of a Schwartz function; nothing is truncated.
    pub fn from_schwartz(f: &SchwartzFn) -> Self {
        Self {
            coeffs: f.coeffs().to_vec(),
            tail: 0.0,
        }
    }

    /// Keeps `coeffs[..=degree]` and records the norm of the rest as the tail.
    pub fn truncate(coeffs: &[Complex64], degree: usize) -> Self {
        let keep = (degree + 1).min(coeffs.len()).max(1);
        let head = if coeffs.is_empty() {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            coeffs[..keep].to_vec()
        };
        let tail = coeffs.iter().skip(keep).map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        Self { coeffs: head, tail }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }

    /// Norm of the tracked coefficients.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Enclosure `(lower, upper)` of the true L² norm.
    pub fn norm_bounds(&self) -> (f64, f64) {
        let n = self.norm();
        (n, n.hypot(self.tail))
    }

    pub fn to_schwartz(&self) -> SchwartzFn {
        SchwartzFn::from_coeffs(self.coeffs.clone())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct L2Doc {
    basis: String,
    coeffs: Vec<[f64; 2]>,
    tail: f64,
}

impl L2Elem {
    /// `{"basis":"hermite-2pi","coeffs":[[re,im],...],"tail":number}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(&L2Doc {
            basis: SCHWARTZ_BASIS_TAG.into(),
            coeffs: encode_coeffs(&self.coeffs),
            tail: self.tail,
        })
        .expect("finite coefficients")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: L2Doc = serde_json::from_str(s)?;
        L2Elem::new(decode_coeffs(&doc.basis, &doc.coeffs)?, doc.tail)
    }
}

/// The Fourier transform on L²: a unimodular diagonal, so the tail bound is
/// carried over unchanged.
pub fn fourier_l2(v: &L2Elem) -> L2Elem {
    L2Elem {
        coeffs: v
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| rotate(c, neg_i_pow(n)))
            .collect(),
        tail: v.tail,
    }
}

/// Extends `op`, bounded by `bound` on finite expansions, to the truncated
/// element `v`.
///
/// The bound is first tested on random finite expansions. The finite part of
/// `v` is mapped exactly; the unseen tail contributes at most
/// `bound · v.tail()`, which becomes the tail of the result and must not
/// exceed `tol`.
pub fn extend_by_density(op: &dyn SchwartzOperator, bound: f64, v: &L2Elem, tol: f64) -> Result<L2Elem> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::BadTolerance(tol));
    }
    if !(bound >= 0.0 && bound.is_finite()) {
        return Err(Error::BoundViolated {
            label: op.label(),
            bound,
            observed: f64::NAN,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xb17e5);
    let degree = (v.coeffs.len() - 1).max(8);
    let mut worst: f64 = 0.0;
    for _ in 0..BOUND_CHECK_SAMPLES {
        let f = random_schwartz(&mut rng, degree);
        let norm = f.l2_norm();
        if norm > 0.0 {
            worst = worst.max(op.apply(&f).l2_norm() / norm);
        }
    }
    if worst > bound * (1.0 + 1e-9) + 1e-12 {
        return Err(Error::BoundViolated {
            label: op.label(),
            bound,
            observed: worst,
        });
    }
    let tail = bound * v.tail;
    if tail > tol {
        return Err(Error::ToleranceUnachievable { tail, tol });
    }
    let image = op.apply(&v.to_schwartz());
    Ok(L2Elem {
        coeffs: image.into_coeffs(),
        tail,
    })
}

type Symbol = dyn Fn(f64) -> Complex64 + Send + Sync;

/// A symbol `m(ξ)` with `|m(ξ)| ≤ K (1+|ξ|)^growth_degree`.
#[derive(Clone)]
pub struct Multiplier {
    symbol: Arc<Symbol>,
    growth_degree: usize,
    growth_constant: f64,
    label: String,
}

impl fmt::Debug for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multiplier")
            .field("label", &self.label)
            .field("growth_degree", &self.growth_degree)
            .field("growth_constant", &self.growth_constant)
            .finish()
    }
}

/// `±10^{e/10}` for `e = -30..=30`, and 0.
fn growth_probe_points() -> impl Iterator<Item = f64> {
    std::iter::once(0.0).chain((-30..=30).flat_map(|e| {
        let x = 10f64.powf(e as f64 / 10.0);
        [x, -x]
    }))
}

impl Multiplier {
    /// Wraps a symbol after spot-checking the declared polynomial growth on a
    /// log-spaced grid up to `|ξ| = 10³`: the ratio `|m(ξ)| / (1+|ξ|)^d` must
    /// be finite everywhere and may not rise by more than a factor 10 over
    /// the last decade.
    pub fn new(
        label: impl Into<String>,
        growth_degree: usize,
        symbol: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let label = label.into();
        let d = growth_degree as f64;
        let mut head: f64 = 0.0;
        let mut tail: f64 = 0.0;
        for xi in growth_probe_points() {
            let ratio = symbol(xi).norm() / (1.0 + xi.abs()).powf(d);
            if !ratio.is_finite() {
                return Err(Error::NotTemperate {
                    label,
                    reason: format!("non-finite value at ξ = {xi}"),
                });
            }
            if xi.abs() <= 100.0 {
                head = head.max(ratio);
            } else {
                tail = tail.max(ratio);
            }
        }
        if tail > 10.0 * head && tail > 0.0 {
            return Err(Error::NotTemperate {
                label,
                reason: format!("|m(ξ)|/(1+|ξ|)^{growth_degree} grows from {head:e} to {tail:e} past |ξ| = 100"),
            });
        }
        Ok(Self {
            symbol: Arc::new(symbol),
            growth_degree,
            growth_constant: head.max(tail),
            label,
        })
    }

    /// `m ≡ 1`.
    pub fn one() -> Self {
        Self::new("one", 0, |_| Complex64::new(1.0, 0.0)).expect("constant symbol")
    }

    /// `⟨ξ⟩^s = (1 + ξ²)^{s/2}`, for `|s| ≤ MAX_BRACKET_ORDER`.
    pub fn japanese_bracket(s: f64) -> Result<Self> {
        if s.is_nan() || s.abs() > MAX_BRACKET_ORDER {
            return Err(Error::Format(format!(
                "order {s} outside [-{MAX_BRACKET_ORDER}, {MAX_BRACKET_ORDER}]"
            )));
        }
        let growth = s.max(0.0).ceil() as usize;
        Self::new(format!("japanese_bracket:{s}"), growth, move |xi| {
            Complex64::new((1.0 + xi * xi).powf(s / 2.0), 0.0)
        })
    }

    /// `|2πξ|²`, the symbol of `-∂_x²`.
    pub fn laplacian_2pi() -> Self {
        Self::new("laplacian_2pi", 2, |xi| {
            let w = 2.0 * PI * xi;
            Complex64::new(w * w, 0.0)
        })
        .expect("polynomial symbol")
    }

    /// `2πiξ`, the symbol of `∂_x`.
    pub fn derivative() -> Self {
        Self::new("derivative", 1, |xi| Complex64::new(0.0, 2.0 * PI * xi)).expect("polynomial symbol")
    }

    /// Registry: `"one"`, `"laplacian_2pi"`, `"derivative"`, `"japanese_bracket:<s>"`.
    pub fn from_label(label: &str) -> Result<Self> {
        match label {
            "one" => Ok(Self::one()),
            "laplacian_2pi" => Ok(Self::laplacian_2pi()),
            "derivative" => Ok(Self::derivative()),
            _ => {
                let s = label
                    .strip_prefix("japanese_bracket:")
                    .and_then(|s| s.parse::<f64>().ok())
                    .ok_or_else(|| Error::UnknownMultiplier(label.to_string()))?;
                Self::japanese_bracket(s)
            }
        }
    }

    pub fn eval(&self, xi: f64) -> Complex64 {
        (self.symbol)(xi)
    }

    pub fn growth_degree(&self) -> usize {
        self.growth_degree
    }

    /// Largest `|m(ξ)| / (1+|ξ|)^d` seen on the probe grid.
    pub fn growth_constant(&self) -> f64 {
        self.growth_constant
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Regularity order `s` of `H^s`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SobolevIndex(pub f64);

impl SobolevIndex {
    pub fn multiplier(self) -> Result<Multiplier> {
        Multiplier::japanese_bracket(self.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierOutput {
    pub result: SchwartzFn,
    /// `‖P_d(m F f) - P_{d+16}(m F f)‖`, the sensitivity of the result to the
    /// projection degree `d`.
    pub aliasing_residual: f64,
}

/// `deg f + 2 · growth + 8`.
pub fn default_proj_degree(f_degree: usize, growth_degree: usize) -> usize {
    f_degree + 2 * growth_degree + 8
}

/// Quadrature projection of `m · g` onto degree `proj_degree`.
fn project_product(m: &Multiplier, g: &SchwartzFn, proj_degree: usize) -> Result<Vec<Complex64>> {
    let order = 2 * proj_degree + RULE_ORDER_MARGIN;
    let rule = gauss_rule(order)?;
    let top = proj_degree.max(g.degree());
    let mut out = vec![Complex64::new(0.0, 0.0); proj_degree + 1];
    for (&x, &w) in rule.nodes().iter().zip(rule.unweighted_weights()) {
        let h = hermite_values(top, x);
        let gx: Complex64 = g.coeffs().iter().zip(&h).map(|(a, hv)| a * hv).sum();
        let v = m.eval(x) * gx * w;
        for (o, hv) in out.iter_mut().zip(&h) {
            *o += v * hv;
        }
    }
    Ok(out)
}

/// `F^{-1} P[m · F f]`, with `P` the quadrature projection onto degree
/// `proj_degree`.
pub fn apply_multiplier(m: &Multiplier, f: &SchwartzFn, proj_degree: usize) -> Result<MultiplierOutput> {
    let required = f.degree() + m.growth_degree;
    if proj_degree < required {
        return Err(Error::InsufficientProjDegree {
            given: proj_degree,
            required,
        });
    }
    let probe = proj_degree + ALIASING_PROBE_STEP;
    let probe_order = 2 * probe + RULE_ORDER_MARGIN;
    if probe_order > MAX_RULE_ORDER {
        return Err(Error::OrderOverflow {
            requested: probe_order,
            max: MAX_RULE_ORDER,
        });
    }
    let g = f.fourier();
    let coarse = project_product(m, &g, proj_degree)?;
    let fine = project_product(m, &g, probe)?;
    let residual = fine
        .iter()
        .enumerate()
        .map(|(n, b)| (b - coarse.get(n).copied().unwrap_or_default()).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Ok(MultiplierOutput {
        result: SchwartzFn::from_coeffs(coarse).inverse_fourier(),
        aliasing_residual: residual,
    })
}

/// `Λ_s f = F^{-1} ⟨ξ⟩^s F f`.
pub fn lambda_s(s: f64, f: &SchwartzFn, proj_degree: usize) -> Result<MultiplierOutput> {
    apply_multiplier(&Multiplier::japanese_bracket(s)?, f, proj_degree)
}

/// `‖Λ_s f‖₂` together with the aliasing residual of `Λ_s f`, at the default
/// projection degree.
pub fn sobolev_norm_with_residual(f: &SchwartzFn, s: f64) -> Result<(f64, f64)> {
    let m = Multiplier::japanese_bracket(s)?;
    let out = apply_multiplier(&m, f, default_proj_degree(f.degree(), m.growth_degree))?;
    Ok((out.result.l2_norm(), out.aliasing_residual))
}

/// `‖f‖_{H^s} = ‖Λ_s f‖₂`.
pub fn sobolev_norm(f: &SchwartzFn, s: f64) -> Result<f64> {
    sobolev_norm_with_residual(f, s).map(|(n, _)| n)
}

/// `(Σ_{j ≤ k} ‖f^{(j)}‖²)^{1/2}`, from exact derivatives.
pub fn h_k_classical_norm(f: &SchwartzFn, k: usize) -> f64 {
    let mut d = f.clone();
    let mut acc = d.l2_norm().powi(2);
    for _ in 0..k {
        d = d.derivative();
        acc += d.l2_norm().powi(2);
    }
    acc.sqrt()
}

/// A multiplier at a fixed projection degree, as a (dense) operator on
/// Schwartz functions.
#[derive(Debug, Clone)]
pub struct MultiplierOp {
    pub multiplier: Multiplier,
    pub proj_degree: usize,
}

impl SchwartzOperator for MultiplierOp {
    fn apply(&self, f: &SchwartzFn) -> SchwartzFn {
        let degree = self
            .proj_degree
            .max(f.degree() + self.multiplier.growth_degree);
        // Degrees past the quadrature limit are a caller error on a trait with no error channel.
        apply_multiplier(&self.multiplier, f, degree)
            .expect("projection degree within the supported quadrature order")
            .result
    }

    fn label(&self) -> String {
        format!("multiplier({})@{}", self.multiplier.label, self.proj_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schwartz::{LinearOp, Polynomial};
    use rand::Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_l2(r: &mut ChaCha8Rng, len: usize) -> L2Elem {
        let coeffs = (0..len)
            .map(|_| Complex64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)))
            .collect();
        L2Elem::new(coeffs, 0.0).unwrap()
    }

    #[test]
    fn fourier_l2_is_an_isometry() {
        let mut r = rng(1);
        let v = random_l2(&mut r, 512);
        let fv = fourier_l2(&v);
        assert!((fv.norm() - v.norm()).abs() < 1e-14 * v.norm().max(1.0));
        let four = (0..4).fold(v.clone(), |w, _| fourier_l2(&w));
        assert_eq!(four, v);
        let g = L2Elem::from_schwartz(&SchwartzFn::gaussian());
        assert_eq!(fourier_l2(&g), g);
    }

    #[test]
    fn l2_elem_validation_and_json() {
        assert!(matches!(L2Elem::new(vec![], -1.0), Err(Error::BadTail(_))));
        assert!(matches!(L2Elem::new(vec![], f64::NAN), Err(Error::BadTail(_))));
        let v = L2Elem::new(vec![Complex64::new(1.0, 2.0)], 0.25).unwrap();
        let s = v.to_json();
        assert_eq!(s, r#"{"basis":"hermite-2pi","coeffs":[[1.0,2.0]],"tail":0.25}"#);
        assert_eq!(L2Elem::from_json(&s).unwrap(), v);
        assert!(L2Elem::from_json(r#"{"basis":"hermite-2pi","coeffs":[[1,0]]}"#).is_err());
        assert!(L2Elem::from_json(r#"{"basis":"hermite-2pi","coeffs":[[1,0]],"tail":-1}"#).is_err());
    }

    #[test]
    fn truncation_tracks_tail() {
        let coeffs: Vec<Complex64> = (0..10).map(|n| Complex64::new(0.5f64.powi(n), 0.0)).collect();
        let v = L2Elem::truncate(&coeffs, 3);
        assert_eq!(v.coeffs().len(), 4);
        let rest: f64 = (4..10).map(|n| 0.25f64.powi(n)).sum::<f64>().sqrt();
        assert!((v.tail() - rest).abs() < 1e-15);
        let (lo, hi) = v.norm_bounds();
        let full = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        assert!(lo <= full && full <= hi + 1e-15);
    }

    #[test]
    fn density_extension_of_fourier_and_identity() {
        let mut r = rng(2);
        let mut v = random_l2(&mut r, 40);
        v.tail = 1e-6;
        let out = extend_by_density(&LinearOp::Fourier, 1.0, &v, 1e-5).unwrap();
        assert_eq!(out.coeffs(), fourier_l2(&v).coeffs());
        assert_eq!(out.tail(), v.tail());
        let id = extend_by_density(&LinearOp::Identity, 1.0, &v, 1e-5).unwrap();
        assert_eq!(id.coeffs(), v.coeffs());
        assert!(matches!(
            extend_by_density(&LinearOp::Fourier, 1.0, &v, 1e-7),
            Err(Error::ToleranceUnachievable { .. })
        ));
        assert!(matches!(
            extend_by_density(&LinearOp::Derivative, 1.0, &v, 1.0),
            Err(Error::BoundViolated { .. })
        ));
        assert!(matches!(
            extend_by_density(&LinearOp::Identity, 1.0, &v, 0.0),
            Err(Error::BadTolerance(_))
        ));
    }

    #[test]
    fn density_extension_of_bounded_symbol() {
        // Geometric coefficients r^n describe an L² function with a closed-form tail.
        let ratio: f64 = 0.5;
        let full: Vec<Complex64> = (0..=40).map(|n| Complex64::new(ratio.powi(n), 0.0)).collect();
        let coarse = L2Elem::truncate(&full, 20);
        let exact_tail = ratio.powi(21) / (1.0 - ratio * ratio).sqrt();
        let coarse = L2Elem::new(coarse.coeffs().to_vec(), exact_tail).unwrap();

        let op = MultiplierOp {
            multiplier: Multiplier::japanese_bracket(-2.0).unwrap(),
            proj_degree: 80,
        };
        let bound = 1.0;
        let out = extend_by_density(&op, bound, &coarse, 1e-3).unwrap();
        // Oracle: the same operator on twice the truncation degree.
        let reference = op.apply(&SchwartzFn::from_coeffs(full));
        let diff = out.to_schwartz().sub(&reference).l2_norm();
        assert!(diff <= bound * exact_tail + 1e-10, "{diff} vs {exact_tail}");
        assert_eq!(out.tail(), bound * exact_tail);
    }

    #[test]
    fn multiplier_registry() {
        assert_eq!(Multiplier::from_label("one").unwrap().label(), "one");
        assert_eq!(Multiplier::from_label("laplacian_2pi").unwrap().growth_degree(), 2);
        let jb = Multiplier::from_label("japanese_bracket:1.5").unwrap();
        assert_eq!(jb.growth_degree(), 2);
        assert!((jb.eval(1.0).re - 2f64.powf(0.75)).abs() < 1e-15);
        assert_eq!(Multiplier::from_label("japanese_bracket:-2").unwrap().growth_degree(), 0);
        assert!(matches!(Multiplier::from_label("heat"), Err(Error::UnknownMultiplier(_))));
        assert!(Multiplier::from_label("japanese_bracket:x").is_err());
        assert!(Multiplier::from_label("japanese_bracket:1e300").is_err());
        assert!(Multiplier::from_label("japanese_bracket:NaN").is_err());
    }

    #[test]
    fn temperate_growth_is_spot_checked() {
        assert!(matches!(
            Multiplier::new("exp", 3, |xi: f64| Complex64::new(xi.abs().exp(), 0.0)),
            Err(Error::NotTemperate { .. })
        ));
        assert!(matches!(
            Multiplier::new("cubic-declared-linear", 1, |xi: f64| Complex64::new(xi.powi(3), 0.0)),
            Err(Error::NotTemperate { .. })
        ));
        assert!(matches!(
            Multiplier::new("pole", 0, |xi: f64| Complex64::new(1.0 / xi, 0.0)),
            Err(Error::NotTemperate { .. })
        ));
        assert!(Multiplier::new("cubic", 3, |xi: f64| Complex64::new(xi.powi(3), 0.0)).is_ok());
    }

    #[test]
    fn multiplier_identity_and_derivatives() {
        let mut r = rng(3);
        for d in [0, 5, 16, 24] {
            let f = random_schwartz(&mut r, d);
            let one = apply_multiplier(&Multiplier::one(), &f, d + 8).unwrap();
            assert!(one.result.max_diff(&f) < 1e-12);
            let der = apply_multiplier(&Multiplier::derivative(), &f, d + 1).unwrap();
            assert!(der.result.max_diff(&f.derivative()) < 1e-9);
            let lap = apply_multiplier(&Multiplier::laplacian_2pi(), &f, d + 2).unwrap();
            let minus_f2 = -&f.nth_derivative(2);
            assert!(lap.result.max_diff(&minus_f2) < 1e-8);
        }
    }

    #[test]
    fn multiplier_preconditions() {
        let f = SchwartzFn::basis(10);
        assert!(matches!(
            apply_multiplier(&Multiplier::laplacian_2pi(), &f, 11),
            Err(Error::InsufficientProjDegree { given: 11, required: 12 })
        ));
        assert!(matches!(
            apply_multiplier(&Multiplier::one(), &f, 200),
            Err(Error::OrderOverflow { .. })
        ));
    }

    #[test]
    fn polynomial_symbols_match_ladder() {
        let mut r = rng(4);
        let p = [0.5, -1.0, 0.25, 0.1, -0.05];
        // m(ξ) = Σ p_j ξ^j acts as F^{-1} p(ξ) F, i.e. p(D) with D = (1/2πi) ∂_x,
        // which equals F^{-1} (mul_by_poly) F on coefficients.
        let m = Multiplier::new("poly4", 4, move |xi| {
            Complex64::new(p.iter().rev().fold(0.0, |acc, c| acc * xi + c), 0.0)
        })
        .unwrap();
        for d in [0, 8, 24] {
            let f = random_schwartz(&mut r, d);
            let ladder = f.fourier().mul_by_poly(&Polynomial::new(p.to_vec())).inverse_fourier();
            let quad = apply_multiplier(&m, &f, d + 4).unwrap();
            assert!(quad.result.max_diff(&ladder) < 1e-9);
        }
    }

    #[test]
    fn lambda_identities() {
        let mut r = rng(5);
        for _ in 0..5 {
            let f = random_schwartz(&mut r, 12);
            let l0 = lambda_s(0.0, &f, 20).unwrap();
            assert!(l0.result.max_diff(&f) < 1e-12);
            let l2 = lambda_s(2.0, &f, 14).unwrap();
            let expect = f.add(&f.nth_derivative(2).scale(Complex64::new(-1.0 / (4.0 * PI * PI), 0.0)));
            assert!(l2.result.max_diff(&expect) < 1e-8 * (1.0 + expect.max_norm()));
        }
    }

    #[test]
    fn sobolev_norm_basics() {
        let mut r = rng(6);
        let f = random_schwartz(&mut r, 10);
        assert!((sobolev_norm(&f, 0.0).unwrap() - f.l2_norm()).abs() < 1e-10);
        let s = [-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0];
        let norms: Vec<f64> = s.iter().map(|&s| sobolev_norm(&f, s).unwrap()).collect();
        assert!(norms.windows(2).all(|w| w[0] <= w[1]), "{norms:?}");
        assert_eq!(h_k_classical_norm(&SchwartzFn::zero(), 3), 0.0);
        assert_eq!(h_k_classical_norm(&f, 0), f.l2_norm());
    }
}
