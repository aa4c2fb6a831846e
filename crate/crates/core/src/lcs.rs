//! Seminorm families, finite-sup balls and continuity certificates.
//!
//! A linear map `A` on Schwartz space is continuous exactly when every output
//! seminorm is dominated by a constant times a finite sup of input seminorms.
//! [`BoundCertificate`] records such a claim; [`validate_certificate`] tries
//! to refute it on seeded random test functions. A clean report is evidence,
//! not proof.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schwartz::operator::check_linearity;
use crate::schwartz::{random_schwartz, seminorm, SchwartzFn, SchwartzOperator, SeminormIndex};

/// Values within this distance of a ball's radius are flagged as boundary cases.
pub const BOUNDARY_BAND: f64 = 1e-12;

/// Slack on the certified inequality, `lhs ≤ C · sup · (1 + CERT_SLACK)`.
pub const CERT_SLACK: f64 = 1e-8;

/// Smallest radius reported by [`von_neumann_radius`].
pub const RADIUS_FLOOR: f64 = 1e-9;

const MAX_RECORDED_VIOLATIONS: usize = 64;

type Evaluator = dyn Fn(SeminormIndex, &SchwartzFn) -> f64 + Send + Sync;

/// A family of seminorms indexed by [`SeminormIndex`].
#[derive(Clone)]
pub struct SeminormFamily {
    description: String,
    evaluator: Arc<Evaluator>,
}

impl fmt::Debug for SeminormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeminormFamily")
            .field("description", &self.description)
            .finish_non_exhaustive()
    }
}

impl SeminormFamily {
    pub fn new(
        description: impl Into<String>,
        evaluator: impl Fn(SeminormIndex, &SchwartzFn) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            description: description.into(),
            evaluator: Arc::new(evaluator),
        }
    }

    /// `p_{k,n}(f) = sup |x|^k |f^{(n)}(x)|` over `(k, n) ∈ ℕ²`.
    pub fn schwartz() -> Self {
        Self::new("sup |x|^k |f^(n)(x)|, (k, n) in N x N", |idx, f| seminorm(f, idx))
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn eval(&self, idx: SeminormIndex, f: &SchwartzFn) -> f64 {
        (self.evaluator)(idx, f)
    }

    pub fn finset_sup(&self, f: &SchwartzFn, indices: &BTreeSet<SeminormIndex>) -> Result<f64> {
        if indices.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        Ok(indices.iter().map(|&i| self.eval(i, f)).fold(0.0, f64::max))
    }

    /// Largest violation of subadditivity and of absolute homogeneity over the
    /// given `(f, g, c)` triples, `(subadditivity excess, homogeneity defect)`.
    pub fn axiom_defects(
        &self,
        idx: SeminormIndex,
        samples: &[(SchwartzFn, SchwartzFn, Complex64)],
    ) -> (f64, f64) {
        samples
            .par_iter()
            .map(|(f, g, c)| {
                let pf = self.eval(idx, f);
                let pg = self.eval(idx, g);
                let sum = self.eval(idx, &f.add(g));
                let scaled = self.eval(idx, &f.scale(*c));
                let sub = (sum - pf - pg).max(0.0);
                let hom = (scaled - c.norm() * pf).abs() / (1.0 + c.norm());
                (sub, hom)
            })
            .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)))
    }
}

/// `max_{i ∈ indices} p_i(f)`.
pub fn finset_sup(f: &SchwartzFn, indices: &BTreeSet<SeminormIndex>) -> Result<f64> {
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    Ok(indices.iter().map(|&i| seminorm(f, i)).fold(0.0, f64::max))
}

/// `{f : p_i(f) < r for every i ∈ indices}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisBall {
    indices: BTreeSet<SeminormIndex>,
    radius: f64,
}

impl BasisBall {
    pub fn new(indices: impl IntoIterator<Item = SeminormIndex>, radius: f64) -> Result<Self> {
        let indices: BTreeSet<_> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::BadRadius(radius));
        }
        Ok(Self { indices, radius })
    }

    pub fn indices(&self) -> &BTreeSet<SeminormIndex> {
        &self.indices
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallMembership {
    pub inside: bool,
    pub sup: f64,
    /// `|sup - radius| ≤ BOUNDARY_BAND`; the strict inequality is decided by
    /// floating-point noise there.
    pub near_boundary: bool,
}

pub fn ball_membership(f: &SchwartzFn, ball: &BasisBall) -> BallMembership {
    let sup = finset_sup(f, &ball.indices).expect("ball indices are nonempty");
    BallMembership {
        inside: sup < ball.radius,
        sup,
        near_boundary: (sup - ball.radius).abs() <= BOUNDARY_BAND,
    }
}

pub fn in_ball(f: &SchwartzFn, ball: &BasisBall) -> bool {
    ball_membership(f, ball).inside
}

/// `p_out(A f) ≤ C · max_{i ∈ inputs} p_i(f)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bound {
    pub out: SeminormIndex,
    #[serde(rename = "in")]
    pub inputs: BTreeSet<SeminormIndex>,
    #[serde(rename = "C")]
    pub c: f64,
}

/// `{"bounds":[{"out":[k,n],"in":[[k,n],...],"C":number}]}`
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCertificate {
    bounds: Vec<Bound>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    bounds: Vec<Bound>,
}

impl<'de> Deserialize<'de> for BoundCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = CertificateDoc::deserialize(d)?;
        BoundCertificate::new(doc.bounds).map_err(serde::de::Error::custom)
    }
}

impl BoundCertificate {
    pub fn new(bounds: Vec<Bound>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::EmptyCertificate);
        }
        for b in &bounds {
            if b.inputs.is_empty() {
                return Err(Error::EmptyIndexSet);
            }
            if !(b.c >= 0.0 && b.c.is_finite()) {
                return Err(Error::BadConstant { out: b.out, c: b.c });
            }
        }
        Ok(Self { bounds })
    }

    /// One bound `out ↦ (inputs, c)`.
    pub fn single(
        out: SeminormIndex,
        inputs: impl IntoIterator<Item = SeminormIndex>,
        c: f64,
    ) -> Result<Self> {
        Self::new(vec![Bound {
            out,
            inputs: inputs.into_iter().collect(),
            c,
        }])
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate constants are finite")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub out: SeminormIndex,
    pub trial: usize,
    /// `p_out(A f)`
    pub lhs: f64,
    /// `C · max_i p_i(f)`
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub out: SeminormIndex,
    #[serde(rename = "C")]
    pub c: f64,
    /// Largest observed `p_out(A f) / max_i p_i(f)`, the empirical constant.
    pub max_ratio: f64,
    pub violations: usize,
    pub first_violation: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub op: String,
    pub seed: u64,
    pub trials: usize,
    pub max_degree: usize,
    pub per_index: Vec<IndexReport>,
    /// The first violations found, at most 64.
    pub violations: Vec<Violation>,
    pub total_violations: usize,
}

impl CertificateReport {
    pub fn is_clean(&self) -> bool {
        self.total_violations == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report is finite or null")
    }
}

/// Random test functions for the falsifier: degree uniform in
/// `0..=max_degree`, coefficients from [`random_schwartz`].
pub fn falsifier_samples(trials: usize, max_degree: usize, seed: u64) -> Vec<SchwartzFn> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let degree = rng.random_range(0..=max_degree);
            random_schwartz(&mut rng, degree)
        })
        .collect()
}

/// Tries to refute `cert` for `op` on `trials` seeded random test functions.
pub fn validate_certificate(
    op: &dyn SchwartzOperator,
    cert: &BoundCertificate,
    trials: usize,
    max_degree: usize,
    seed: u64,
) -> Result<CertificateReport> {
    check_linearity(op, 10, seed ^ 0x5eed_11ea, max_degree.max(4))?;

    let input_indices: BTreeSet<SeminormIndex> =
        cert.bounds.iter().flat_map(|b| b.inputs.iter().copied()).collect();
    let samples = falsifier_samples(trials, max_degree, seed);

    // Per trial and bound: (p_out(A f), max_i p_i(f)).
    let measured: Vec<Vec<(f64, f64)>> = samples
        .par_iter()
        .map(|f| {
            let image = op.apply(f);
            let inputs: Vec<(SeminormIndex, f64)> =
                input_indices.iter().map(|&i| (i, seminorm(f, i))).collect();
            cert.bounds
                .iter()
                .map(|b| {
                    let sup = inputs
                        .iter()
                        .filter(|(i, _)| b.inputs.contains(i))
                        .map(|&(_, v)| v)
                        .fold(0.0, f64::max);
                    (seminorm(&image, b.out), sup)
                })
                .collect()
        })
        .collect();

    let mut per_index: Vec<IndexReport> = cert
        .bounds
        .iter()
        .map(|b| IndexReport {
            out: b.out,
            c: b.c,
            max_ratio: 0.0,
            violations: 0,
            first_violation: None,
        })
        .collect();
    let mut violations = Vec::new();
    let mut total = 0;
    for (trial, row) in measured.iter().enumerate() {
        for ((b, rep), &(lhs, sup)) in cert.bounds.iter().zip(per_index.iter_mut()).zip(row) {
            let ratio = if sup > 0.0 {
                lhs / sup
            } else if lhs > 0.0 {
                f64::INFINITY
            } else {
                0.0
            };
            rep.max_ratio = rep.max_ratio.max(ratio);
            let rhs = b.c * sup;
            if lhs > rhs * (1.0 + CERT_SLACK) {
                rep.violations += 1;
                rep.first_violation.get_or_insert(trial);
                total += 1;
                if violations.len() < MAX_RECORDED_VIOLATIONS {
                    violations.push(Violation {
                        out: b.out,
                        trial,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }

    Ok(CertificateReport {
        op: op.label(),
        seed,
        trials,
        max_degree,
        per_index,
        violations,
        total_violations: total,
    })
}

/// Witness radius for a finite sample: `r = (1 + 1e-9) · max_f max_i p_i(f)`,
/// floored at `1e-9`, so every sample lies in the ball of radius `r`.
pub fn von_neumann_radius(samples: &[SchwartzFn], indices: &BTreeSet<SeminormIndex>) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let worst = samples
        .par_iter()
        .map(|f| finset_sup(f, indices).expect("indices are nonempty"))
        .reduce(|| 0.0, f64::max);
    Ok(((1.0 + 1e-9) * worst).max(RADIUS_FLOOR))
}
