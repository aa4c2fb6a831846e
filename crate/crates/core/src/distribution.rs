//! Tempered distributions as functionals on Hermite coefficients.
//!
//! A distribution `u` is stored through its values on the basis,
//! `c_n = u(h_n)`, so that `u(f) = Σ c_n a_n` for `f = Σ a_n h_n`. Finite
//! coefficient vectors cover the images of Schwartz and L² functions; an
//! oracle `n ↦ c_n` with a polynomial growth bound covers the rest (the Dirac
//! delta, the constant function one, and anything derived from them).
//!
//! Operators are extended by duality, `(A^T u)(f) = u(A f)`. On coefficients
//! `A^T` is the plain transpose of `A`'s matrix, which for a banded `A` needs
//! only finitely many `c_m` per output coefficient.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::{hermite_at_zero, H0_AT_ZERO};
use crate::schwartz::json::{decode_coeffs, encode_coeffs};
use crate::schwartz::operator::check_linearity;
use crate::schwartz::{neg_i_pow, rotate, LinearOp, Polynomial, SchwartzFn, SchwartzOperator, SCHWARTZ_BASIS_TAG};

/// Oracle growth bounds are checked on `n = 0..=GROWTH_CHECK_LIMIT`.
pub const GROWTH_CHECK_LIMIT: usize = 4096;

pub const DELTA_LABEL: &str = "delta";
pub const CONST_ONE_LABEL: &str = "const_one";

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

type CoeffFn = dyn Fn(usize) -> Complex64 + Send + Sync;

/// A distribution known through `n ↦ u(h_n)` and a bound
/// `|u(h_n)| ≤ growth_c · (1+n)^growth_p`.
#[derive(Clone)]
pub struct OracleDist {
    coeff_at: Arc<CoeffFn>,
    growth_c: f64,
    growth_p: f64,
    label: String,
}

impl OracleDist {
    pub fn coeff(&self, n: usize) -> Complex64 {
        (self.coeff_at)(n)
    }

    pub fn growth(&self) -> (f64, f64) {
        (self.growth_c, self.growth_p)
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

#[derive(Clone)]
pub enum TemperedDist {
    Finite(Vec<Complex64>),
    Oracle(OracleDist),
}

impl fmt::Debug for TemperedDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemperedDist::Finite(c) => f.debug_tuple("Finite").field(c).finish(),
            TemperedDist::Oracle(o) => f
                .debug_struct("Oracle")
                .field("label", &o.label)
                .field("growth_c", &o.growth_c)
                .field("growth_p", &o.growth_p)
                .finish(),
        }
    }
}

impl TemperedDist {
    pub fn zero() -> Self {
        TemperedDist::Finite(vec![ZERO])
    }

    pub fn finite(coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            return Self::zero();
        }
        TemperedDist::Finite(coeffs)
    }

    /// Wraps a coefficient oracle after checking its growth bound up to
    /// [`GROWTH_CHECK_LIMIT`].
    pub fn oracle(
        label: impl Into<String>,
        growth_c: f64,
        growth_p: f64,
        coeff_at: impl Fn(usize) -> Complex64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let dist = TemperedDist::Oracle(OracleDist {
            coeff_at: Arc::new(coeff_at),
            growth_c,
            growth_p,
            label: label.into(),
        });
        dist.check_growth(GROWTH_CHECK_LIMIT)?;
        Ok(dist)
    }

    fn oracle_unchecked(
        label: String,
        growth: (f64, f64),
        coeff_at: impl Fn(usize) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        TemperedDist::Oracle(OracleDist {
            coeff_at: Arc::new(coeff_at),
            growth_c: growth.0,
            growth_p: growth.1,
            label,
        })
    }

    /// Named built-in oracles: `"delta"`, `"const_one"`.
    pub fn builtin(label: &str) -> Result<Self> {
        match label {
            DELTA_LABEL => Ok(delta()),
            CONST_ONE_LABEL => Ok(constant_one()),
            other => Err(Error::UnknownDistribution(other.to_string())),
        }
    }

    /// `u(h_n)`.
    pub fn coeff(&self, n: usize) -> Complex64 {
        match self {
            TemperedDist::Finite(c) => c.get(n).copied().unwrap_or(ZERO),
            TemperedDist::Oracle(o) => o.coeff(n),
        }
    }

    pub fn finite_coeffs(&self) -> Option<&[Complex64]> {
        match self {
            TemperedDist::Finite(c) => Some(c),
            TemperedDist::Oracle(_) => None,
        }
    }

    /// `(C, p)` with `|u(h_n)| ≤ C (1+n)^p`. For finite vectors `p = 0` and
    /// `C` is the largest coefficient.
    pub fn growth(&self) -> (f64, f64) {
        match self {
            TemperedDist::Finite(c) => (c.iter().map(|z| z.norm()).fold(0.0, f64::max), 0.0),
            TemperedDist::Oracle(o) => o.growth(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            TemperedDist::Finite(c) => format!("finite[{}]", c.len()),
            TemperedDist::Oracle(o) => o.label.clone(),
        }
    }

    pub fn check_growth(&self, limit: usize) -> Result<()> {
        let (c, p) = self.growth();
        for n in 0..=limit {
            let value = self.coeff(n).norm();
            let bound = c * (1.0 + n as f64).powf(p);
            if value.is_nan() || value > bound * (1.0 + 1e-12) {
                return Err(Error::GrowthViolated {
                    label: self.label(),
                    n,
                    value,
                    bound,
                });
            }
        }
        Ok(())
    }

    /// `u(f) = Σ_{n ≤ deg f} u(h_n) a_n`.
    pub fn apply(&self, f: &SchwartzFn) -> Complex64 {
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(n, a)| self.coeff(n) * a)
            .sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (TemperedDist::Finite(a), TemperedDist::Finite(b)) => {
                let len = a.len().max(b.len());
                TemperedDist::Finite((0..len).map(|n| self.coeff(n) + other.coeff(n)).collect())
            }
            _ => {
                let (u, v) = (self.clone(), other.clone());
                let ((c1, p1), (c2, p2)) = (u.growth(), v.growth());
                TemperedDist::oracle_unchecked(
                    format!("{} + {}", u.label(), v.label()),
                    (c1 + c2, p1.max(p2)),
                    move |n| u.coeff(n) + v.coeff(n),
                )
            }
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        match self {
            TemperedDist::Finite(a) => TemperedDist::Finite(a.iter().map(|c| c * s).collect()),
            TemperedDist::Oracle(o) => {
                let o = o.clone();
                TemperedDist::oracle_unchecked(
                    format!("({s})·{}", o.label),
                    (o.growth_c * s.norm(), o.growth_p),
                    move |n| o.coeff(n) * s,
                )
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// `max_{n ≤ upto} |u(h_n) - v(h_n)|`.
    pub fn max_diff(&self, other: &Self, upto: usize) -> f64 {
        (0..=upto)
            .map(|n| (self.coeff(n) - other.coeff(n)).norm())
            .fold(0.0, f64::max)
    }

    /// Largest index carrying a coefficient, or `upto` for oracles.
    pub fn span(&self, upto: usize) -> usize {
        match self {
            TemperedDist::Finite(c) => c.len() - 1,
            TemperedDist::Oracle(_) => upto,
        }
    }
}

/// `M_g(f) = ∫ g f`, the bilinear embedding of a Schwartz function.
pub fn embed_schwartz(g: &SchwartzFn) -> TemperedDist {
    TemperedDist::Finite(g.coeffs().to_vec())
}

/// The distribution of an L² function given by its Hermite coefficients.
pub fn embed_l2(v: &[Complex64]) -> TemperedDist {
    TemperedDist::finite(v.to_vec())
}

/// `δ(f) = f(0)`: `c_n = h_n(0)`.
pub fn delta() -> TemperedDist {
    TemperedDist::oracle_unchecked(DELTA_LABEL.into(), (H0_AT_ZERO, 0.0), |n| {
        Complex64::new(hermite_at_zero(n), 0.0)
    })
}

/// `f ↦ ∫ f`: `c_n = ∫ h_n = (F h_n)(0) = (-i)^n h_n(0)`, real and zero for odd `n`.
pub fn constant_one() -> TemperedDist {
    TemperedDist::oracle_unchecked(CONST_ONE_LABEL.into(), (H0_AT_ZERO, 0.0), |n| {
        rotate(Complex64::new(hermite_at_zero(n), 0.0), neg_i_pow(n))
    })
}

/// `u ↦ u ∘ A` for a banded linear `A` on Schwartz space.
#[derive(Clone)]
pub struct DistOperator {
    op: Arc<dyn SchwartzOperator>,
    bandwidth: usize,
    growth: (f64, f64),
    label: String,
}

impl fmt::Debug for DistOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DistOperator")
            .field("label", &self.label)
            .field("bandwidth", &self.bandwidth)
            .finish()
    }
}

/// The transpose `A^T`, `(A^T u)(f) = u(A f)`.
///
/// `A` must be linear (spot-checked) and banded; dense actions are rejected
/// because the transpose of an oracle would need infinitely many terms.
pub fn adjoint_map(op: Arc<dyn SchwartzOperator>) -> Result<DistOperator> {
    let bandwidth = op
        .bandwidth()
        .ok_or_else(|| Error::UnboundedBandwidth(op.label()))?;
    check_linearity(op.as_ref(), 10, 0xad_101e, 12)?;
    let growth = op.column_growth().unwrap_or((f64::INFINITY, f64::INFINITY));
    let label = format!("adjoint({})", op.label());
    Ok(DistOperator {
        op,
        bandwidth,
        growth,
        label,
    })
}

impl DistOperator {
    fn builtin(op: LinearOp, label: &str) -> Self {
        let bandwidth = op.bandwidth().expect("built-in operators are banded");
        let growth = op.column_growth().expect("built-in operators are banded");
        DistOperator {
            op: Arc::new(op),
            bandwidth,
            growth,
            label: label.into(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn operator(&self) -> &Arc<dyn SchwartzOperator> {
        &self.op
    }

    /// `u ∘ A`.
    pub fn apply(&self, u: &TemperedDist) -> TemperedDist {
        let b = self.bandwidth;
        match u {
            TemperedDist::Finite(c) => {
                let out_len = c.len() + b;
                let out = (0..out_len)
                    .map(|n| transpose_entry(self.op.as_ref(), b, n, |m| c.get(m).copied().unwrap_or(ZERO)))
                    .collect();
                TemperedDist::Finite(out)
            }
            TemperedDist::Oracle(o) => {
                let (c, p) = o.growth();
                let (k, q) = self.growth;
                let growth = (c * k * (1.0 + b as f64).powf(p), p + q);
                let op = Arc::clone(&self.op);
                let parent = o.clone();
                TemperedDist::oracle_unchecked(format!("{}({})", self.label, o.label), growth, move |n| {
                    transpose_entry(op.as_ref(), b, n, |m| parent.coeff(m))
                })
            }
        }
    }

    /// `u ↦ self(other(u))`. This is the adjoint of `A_self` followed by
    /// `A_other`, since `(u ∘ A_other) ∘ A_self = u ∘ (A_other ∘ A_self)`.
    pub fn compose(&self, other: &DistOperator) -> DistOperator {
        let composed = Composed {
            first: Arc::clone(&self.op),
            second: Arc::clone(&other.op),
        };
        let (k1, q1) = self.growth;
        let (k2, q2) = other.growth;
        DistOperator {
            op: Arc::new(composed),
            bandwidth: self.bandwidth + other.bandwidth,
            growth: (k1 * k2 * (1.0 + self.bandwidth as f64).powf(q2), q1 + q2),
            label: format!("{} ∘ {}", self.label, other.label),
        }
    }
}

/// `(A^T c)_n = Σ_{|m-n| ≤ b} c_m (A h_n)_m`.
fn transpose_entry(op: &dyn SchwartzOperator, b: usize, n: usize, c: impl Fn(usize) -> Complex64) -> Complex64 {
    let column = op.apply(&SchwartzFn::basis(n));
    let lo = n.saturating_sub(b);
    let hi = (n + b).min(column.degree());
    (lo..=hi).map(|m| c(m) * column.coeff(m)).sum()
}

struct Composed {
    first: Arc<dyn SchwartzOperator>,
    second: Arc<dyn SchwartzOperator>,
}

impl SchwartzOperator for Composed {
    fn apply(&self, f: &SchwartzFn) -> SchwartzFn {
        self.second.apply(&self.first.apply(f))
    }

    fn label(&self) -> String {
        format!("{} ; {}", self.first.label(), self.second.label())
    }

    fn bandwidth(&self) -> Option<usize> {
        Some(self.first.bandwidth()? + self.second.bandwidth()?)
    }
}

/// `(F u)(f) = u(F f)`; `F` is diagonal, so `c_n ↦ (-i)^n c_n`.
pub fn fourier_dist(u: &TemperedDist) -> TemperedDist {
    match u {
        TemperedDist::Finite(c) => TemperedDist::Finite(
            c.iter()
                .enumerate()
                .map(|(n, &z)| rotate(z, neg_i_pow(n)))
                .collect(),
        ),
        TemperedDist::Oracle(o) => {
            let o = o.clone();
            TemperedDist::oracle_unchecked(format!("fourier({})", o.label), o.growth(), move |n| {
                rotate(o.coeff(n), neg_i_pow(n))
            })
        }
    }
}

/// The Fourier transform on distributions as a [`DistOperator`].
pub fn fourier_operator() -> DistOperator {
    DistOperator::builtin(LinearOp::Fourier, "fourier")
}

/// `u'(f) = -u(f')`.
pub fn derivative_operator() -> DistOperator {
    DistOperator::builtin(
        LinearOp::Derivative.then(LinearOp::scale(Complex64::new(-1.0, 0.0))),
        "derivative",
    )
}

/// `(p u)(f) = u(p f)`.
pub fn mul_poly_operator(p: &Polynomial) -> DistOperator {
    DistOperator::builtin(
        LinearOp::MulPoly { poly: p.clone() },
        &format!("mul_poly{:?}", p.coeffs()),
    )
}

pub fn derivative_dist(u: &TemperedDist) -> TemperedDist {
    derivative_operator().apply(u)
}

pub fn mul_poly_dist(u: &TemperedDist, p: &Polynomial) -> TemperedDist {
    mul_poly_operator(p).apply(u)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteDoc {
    kind: String,
    basis: String,
    coeffs: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OracleDoc {
    kind: String,
    oracle: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyDoc {
    Finite(FiniteDoc),
    Oracle(OracleDoc),
}

const DIST_KIND: &str = "distribution";

impl TemperedDist {
    /// Finite vectors use the Schwartz schema plus `"kind":"distribution"`;
    /// built-in oracles serialize as `{"kind":"distribution","oracle":label}`.
    /// Derived oracles have no document form.
    pub fn to_json(&self) -> Result<String> {
        match self {
            TemperedDist::Finite(c) => Ok(serde_json::to_string(&FiniteDoc {
                kind: DIST_KIND.into(),
                basis: SCHWARTZ_BASIS_TAG.into(),
                coeffs: encode_coeffs(c),
            })?),
            TemperedDist::Oracle(o) if o.label == DELTA_LABEL || o.label == CONST_ONE_LABEL => {
                Ok(serde_json::to_string(&OracleDoc {
                    kind: DIST_KIND.into(),
                    oracle: o.label.clone(),
                })?)
            }
            TemperedDist::Oracle(o) => Err(Error::Format(format!(
                "derived oracle `{}` has no document form",
                o.label
            ))),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: AnyDoc = serde_json::from_str(s)
            .map_err(|e| Error::Format(format!("not a distribution document: {e}")))?;
        match doc {
            AnyDoc::Finite(d) => {
                if d.kind != DIST_KIND {
                    return Err(Error::Format(format!("kind `{}` is not `{DIST_KIND}`", d.kind)));
                }
                Ok(TemperedDist::Finite(decode_coeffs(&d.basis, &d.coeffs)?))
            }
            AnyDoc::Oracle(d) => {
                if d.kind != DIST_KIND {
                    return Err(Error::Format(format!("kind `{}` is not `{DIST_KIND}`", d.kind)));
                }
                TemperedDist::builtin(&d.oracle)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schwartz::random_schwartz;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn delta_evaluates_at_origin() {
        let mut r = rng(1);
        for d in [0, 1, 5, 17, 32] {
            let f = random_schwartz(&mut r, d);
            assert!((delta().apply(&f) - f.eval(0.0)).norm() < 1e-13);
        }
        assert!((delta().apply(&SchwartzFn::gaussian()) - 1.0).norm() < 1e-15);
        assert_eq!(delta().apply(&SchwartzFn::basis(1)), c(0.0));
    }

    #[test]
    fn constant_one_integrates() {
        // ∫ e^{-πx²} = 1
        assert!((constant_one().apply(&SchwartzFn::gaussian()) - 1.0).norm() < 1e-12);
        assert_eq!(constant_one().coeff(3), c(0.0));
    }

    #[test]
    fn builtin_growth_bounds_hold() {
        delta().check_growth(GROWTH_CHECK_LIMIT).unwrap();
        constant_one().check_growth(GROWTH_CHECK_LIMIT).unwrap();
    }

    #[test]
    fn oracle_constructor_checks_growth() {
        assert!(TemperedDist::oracle("ones", 1.0, 0.0, |_| c(1.0)).is_ok());
        let err = TemperedDist::oracle("linear", 1.0, 0.5, |n| c(n as f64)).unwrap_err();
        assert!(matches!(err, Error::GrowthViolated { .. }));
    }

    #[test]
    fn embeddings() {
        let b2 = SchwartzFn::basis(2);
        assert_eq!(embed_schwartz(&b2).apply(&b2), c(1.0));
        assert_eq!(embed_schwartz(&SchwartzFn::zero()).apply(&b2), c(0.0));
        let g = SchwartzFn::gaussian();
        assert!((embed_schwartz(&g).apply(&g) - std::f64::consts::FRAC_1_SQRT_2).norm() < 1e-12);
        assert_eq!(TemperedDist::zero().apply(&g), c(0.0));
        let mut r = rng(2);
        let f = random_schwartz(&mut r, 9);
        let h = random_schwartz(&mut r, 6);
        assert_eq!(embed_schwartz(&f).apply(&h), f.pairing(&h));
    }

    #[test]
    fn adjoint_of_identity_and_fourier() {
        let mut r = rng(3);
        let u = embed_schwartz(&random_schwartz(&mut r, 10));
        let id = adjoint_map(Arc::new(LinearOp::Identity)).unwrap();
        assert_eq!(id.apply(&u).finite_coeffs(), u.finite_coeffs());

        let four = adjoint_map(Arc::new(LinearOp::Fourier)).unwrap();
        let f = random_schwartz(&mut r, 14);
        assert_eq!(four.apply(&u).apply(&f), u.apply(&f.fourier()));
        let fd = four.apply(&delta());
        assert_eq!(fd.apply(&f), delta().apply(&f.fourier()));
    }

    #[test]
    fn adjoint_is_contravariant() {
        let mut r = rng(4);
        let a = LinearOp::Derivative;
        let b = LinearOp::MulPoly {
            poly: Polynomial::new(vec![1.0, 0.0, -0.5]),
        };
        let ta = adjoint_map(Arc::new(a.clone())).unwrap();
        let tb = adjoint_map(Arc::new(b.clone())).unwrap();
        let tba = adjoint_map(Arc::new(a.then(b))).unwrap();
        for _ in 0..20 {
            let u = embed_schwartz(&random_schwartz(&mut r, 12));
            let f = random_schwartz(&mut r, 12);
            let lhs = ta.apply(&tb.apply(&u)).apply(&f);
            let rhs = tba.apply(&u).apply(&f);
            assert!((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
            let composed = ta.compose(&tb).apply(&u).apply(&f);
            assert!((composed - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn adjoint_rejects_dense_and_nonlinear() {
        struct Dense;
        impl SchwartzOperator for Dense {
            fn apply(&self, f: &SchwartzFn) -> SchwartzFn {
                f.clone()
            }
            fn label(&self) -> String {
                "dense".into()
            }
        }
        assert!(matches!(adjoint_map(Arc::new(Dense)), Err(Error::UnboundedBandwidth(_))));

        struct Conj;
        impl SchwartzOperator for Conj {
            fn apply(&self, f: &SchwartzFn) -> SchwartzFn {
                SchwartzFn::from_coeffs(f.coeffs().iter().map(|z| z.conj()).collect())
            }
            fn label(&self) -> String {
                "conj".into()
            }
            fn bandwidth(&self) -> Option<usize> {
                Some(0)
            }
        }
        assert!(matches!(adjoint_map(Arc::new(Conj)), Err(Error::NonLinear { .. })));
    }

    #[test]
    fn fourier_on_distributions() {
        let mut r = rng(5);
        let f = random_schwartz(&mut r, 20);
        let lhs = fourier_dist(&embed_schwartz(&f));
        let rhs = embed_schwartz(&f.fourier());
        assert!(lhs.max_diff(&rhs, 25) < 1e-13);
        let four = (0..4).fold(lhs.clone(), |u, _| fourier_dist(&u));
        assert_eq!(four.finite_coeffs(), fourier_dist(&embed_schwartz(&f)).finite_coeffs());
        assert_eq!(fourier_dist(&delta()).growth(), delta().growth());
    }

    #[test]
    fn fourier_of_delta_is_integral() {
        let mut r = rng(6);
        for _ in 0..5 {
            let f = random_schwartz(&mut r, 16);
            let lhs = fourier_dist(&delta()).apply(&f);
            let rhs = constant_one().apply(&f);
            assert!((lhs - rhs).norm() < 1e-13);
        }
    }

    #[test]
    fn derivative_on_distributions() {
        let mut r = rng(7);
        let g = random_schwartz(&mut r, 15);
        let lhs = derivative_dist(&embed_schwartz(&g));
        let rhs = embed_schwartz(&g.derivative());
        assert!(lhs.max_diff(&rhs, 20) < 1e-11);

        // δ'(h_0) = -h_0'(0) = 0, δ'(h_1) = -h_1'(0)
        let d1 = derivative_dist(&delta());
        let expect = -SchwartzFn::basis(1).derivative().eval(0.0);
        assert!((d1.apply(&SchwartzFn::basis(1)) - expect).norm() < 1e-12);

        assert!(derivative_dist(&TemperedDist::zero())
            .finite_coeffs()
            .unwrap()
            .iter()
            .all(|z| z.norm() == 0.0));
    }

    #[test]
    fn derivative_growth_bound_holds() {
        let d = derivative_dist(&delta());
        let (cc, p) = d.growth();
        assert!((p - 0.5).abs() < 1e-15);
        d.check_growth(GROWTH_CHECK_LIMIT).unwrap();
        assert!(cc.is_finite());
    }

    #[test]
    fn polynomial_multiplication_on_distributions() {
        let mut r = rng(8);
        let g = random_schwartz(&mut r, 11);
        let p = Polynomial::new(vec![0.5, -1.0, 2.0]);
        let lhs = mul_poly_dist(&embed_schwartz(&g), &p);
        let rhs = embed_schwartz(&g.mul_by_poly(&p));
        assert!(lhs.max_diff(&rhs, 16) < 1e-11);

        let xd = mul_poly_dist(&delta(), &Polynomial::x());
        for _ in 0..5 {
            let f = random_schwartz(&mut r, 12);
            assert!(xd.apply(&f).norm() < 1e-13);
        }
        let u = embed_schwartz(&g);
        let one = mul_poly_dist(&u, &Polynomial::constant(1.0));
        assert_eq!(one.max_diff(&u, 16), 0.0);
    }

    #[test]
    fn commutator_is_identity() {
        let mut r = rng(9);
        let x = Polynomial::x();
        for _ in 0..10 {
            let u = embed_schwartz(&random_schwartz(&mut r, 14));
            let lhs = derivative_dist(&mul_poly_dist(&u, &x)).sub(&mul_poly_dist(&derivative_dist(&u), &x));
            assert!(lhs.max_diff(&u, 20) < 1e-10);
        }
    }

    #[test]
    fn json_forms() {
        let u = embed_schwartz(&SchwartzFn::from_real(&[1.0, 0.5]));
        let s = u.to_json().unwrap();
        assert_eq!(
            s,
            r#"{"kind":"distribution","basis":"hermite-2pi","coeffs":[[1.0,0.0],[0.5,0.0]]}"#
        );
        assert_eq!(TemperedDist::from_json(&s).unwrap().finite_coeffs(), u.finite_coeffs());
        let d = TemperedDist::from_json(r#"{"kind":"distribution","oracle":"delta"}"#).unwrap();
        assert_eq!(d.label(), "delta");
        assert_eq!(d.to_json().unwrap(), r#"{"kind":"distribution","oracle":"delta"}"#);
        assert!(TemperedDist::from_json(r#"{"kind":"distribution","oracle":"heaviside"}"#).is_err());
        assert!(TemperedDist::from_json(r#"{"kind":"schwartz","basis":"hermite-2pi","coeffs":[[1,0]]}"#).is_err());
        assert!(TemperedDist::from_json(r#"{"basis":"hermite-2pi","coeffs":[[1,0]]}"#).is_err());
        assert!(derivative_dist(&delta()).to_json().is_err());
    }
}
