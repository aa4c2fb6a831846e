//! End-to-end checks of the library's identities against independent
//! oracles. Each check is deterministic (fixed seeds) and returns a
//! [`CheckOutcome`]; [`run_all`] drives them in order.

pub mod oracle;

use std::f64::consts::PI;
use std::fmt;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::distribution::{delta, derivative_dist, embed_schwartz, fourier_dist, mul_poly_dist, TemperedDist};
use crate::hermite::{eval_hermite, hermite_values};
use crate::lcs::{validate_certificate, BoundCertificate, SeminormFamily};
use crate::schwartz::{neg_i_pow, random_coeffs, random_schwartz, LinearOp, Polynomial, SchwartzFn, SeminormIndex};
use crate::sobolev::{
    apply_multiplier, default_proj_degree, extend_by_density, fourier_l2, lambda_s, sobolev_norm, L2Elem,
    Multiplier,
};

use oracle::{grid_max, richardson_derivative, trapezoid, trapezoid_2d, trapezoid_grid};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {}: {} ({:.2} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Observed-versus-allowed bookkeeping for a single check.
struct Tally {
    parts: Vec<String>,
    ok: bool,
}

impl Tally {
    fn new() -> Self {
        Self {
            parts: Vec::new(),
            ok: true,
        }
    }

    /// Records `observed ≤ tol`.
    fn le(&mut self, what: &str, observed: f64, tol: f64) -> &mut Self {
        let pass = observed <= tol;
        self.ok &= pass;
        self.parts.push(format!("{what} {observed:.2e} {} {tol:.0e}", if pass { "≤" } else { ">" }));
        self
    }

    fn holds(&mut self, what: &str, pass: bool) -> &mut Self {
        self.ok &= pass;
        self.parts.push(format!("{what}: {}", if pass { "yes" } else { "no" }));
        self
    }

    fn note(&mut self, what: String) -> &mut Self {
        self.parts.push(what);
        self
    }

    fn finish(&self, id: u8, name: &'static str, elapsed: Duration) -> CheckOutcome {
        CheckOutcome {
            id,
            name,
            passed: self.ok,
            detail: self.parts.join("; "),
            elapsed,
        }
    }
}

type CheckFn = fn(&mut Tally, Instant);

/// The criteria in order: id, name, body.
const CHECKS: [(u8, &str, CheckFn); 10] = [
    (1, "fourier eigenstructure", fourier_eigenstructure),
    (2, "plancherel", plancherel),
    (3, "fourier symmetry", fourier_symmetry),
    (4, "duality law", duality_law),
    (5, "delta identities", delta_identities),
    (6, "lambda_2 and laplacian", lambda_two),
    (7, "h0 equals l2", h0_is_l2),
    (8, "density extension", density_extension),
    (9, "certificate falsifier", certificate_falsifier),
    (10, "seminorm estimator", seminorm_estimator),
];

pub fn check_ids() -> impl Iterator<Item = (u8, &'static str)> {
    CHECKS.iter().map(|&(id, name, _)| (id, name))
}

/// Runs one criterion; `None` for an unknown id.
pub fn run(id: u8) -> Option<CheckOutcome> {
    let &(id, name, body) = CHECKS.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let mut tally = Tally::new();
    body(&mut tally, start);
    Some(tally.finish(id, name, start.elapsed()))
}

pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS.iter().map(|c| run(c.0).expect("listed id")).collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Trapezoid of `∫ e^{-2πixξ} h_n(x) dx` on `[-10, 10]` with step 0.05,
/// against `(-i)^n h_n(ξ)`.
fn fourier_eigenstructure(t: &mut Tally, start: Instant) {
    const NMAX: usize = 24;
    let (nodes, weights) = trapezoid_grid(-10.0, 10.0, 400);
    let table: Vec<Vec<f64>> = nodes.iter().map(|&x| hermite_values(NMAX, x)).collect();
    let mut worst: f64 = 0.0;
    for j in 0..20 {
        let xi = -3.0 + 6.0 * j as f64 / 19.0;
        let mut integrals = [Complex64::default(); NMAX + 1];
        for ((&x, &w), h) in nodes.iter().zip(&weights).zip(&table) {
            let kernel = Complex64::from_polar(w, -2.0 * PI * x * xi);
            for (acc, &hv) in integrals.iter_mut().zip(h) {
                *acc += kernel * hv;
            }
        }
        for (n, v) in integrals.iter().enumerate() {
            let expect = neg_i_pow(n) * eval_hermite(n, xi);
            worst = worst.max((v - expect).norm());
        }
    }
    t.le("max |err| over n ≤ 24, 20 ξ in [-3,3]", worst, 1e-8);
    t.le("seconds", start.elapsed().as_secs_f64(), 10.0);
}

/// Coefficient Plancherel on 1000 inputs, plus a grid cross-check of both
/// norms for low degree.
fn plancherel(t: &mut Tally, start: Instant) {
    let mut r = rng(2);
    let samples: Vec<SchwartzFn> = (0..1000)
        .map(|_| {
            let d = r.random_range(0..=256);
            random_schwartz(&mut r, d)
        })
        .collect();
    let worst = samples
        .iter()
        .map(|f| (f.fourier().l2_norm() - f.l2_norm()).abs())
        .fold(0.0, f64::max);
    t.le("max |‖Ff‖ - ‖f‖| on 1000 inputs, degree ≤ 256", worst, 1e-13);
    t.le("seconds", start.elapsed().as_secs_f64(), 5.0);

    let grid_worst = samples[..10]
        .par_iter()
        .map(|f| {
            let f = SchwartzFn::from_coeffs(f.coeffs().iter().take(25).copied().collect());
            let g = f.fourier();
            let nf = trapezoid(|x| c64(f.eval(x).norm_sqr()), -10.0, 10.0, 2000).re;
            let ng = trapezoid(|x| c64(g.eval(x).norm_sqr()), -10.0, 10.0, 2000).re;
            (nf - ng).abs()
        })
        .reduce(|| 0.0, f64::max);
    t.le("grid |∫|f|² - ∫|Ff|²| at degree ≤ 24", grid_worst, 1e-10);
}

/// Bilinear symmetry in coefficients and against the double integral.
fn fourier_symmetry(t: &mut Tally, _: Instant) {
    let mut r = rng(3);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let (df, dg) = (r.random_range(0..=64), r.random_range(0..=64));
        let f = random_schwartz(&mut r, df);
        let g = random_schwartz(&mut r, dg);
        worst = worst.max((f.fourier().pairing(&g) - f.pairing(&g.fourier())).norm());
    }
    t.le("max |⟨Ff,g⟩ - ⟨f,Fg⟩| on 1000 pairs", worst, 1e-13);

    let mut quad_worst: f64 = 0.0;
    for _ in 0..3 {
        let f = random_schwartz(&mut r, 8);
        let g = random_schwartz(&mut r, 8);
        let double = trapezoid_2d(
            |x, y| Complex64::from_polar(1.0, -2.0 * PI * x * y),
            |x| f.eval(x),
            |y| g.eval(y),
            -8.0,
            8.0,
            320,
        );
        quad_worst = quad_worst.max((double - f.fourier().pairing(&g)).norm());
    }
    t.le("degree-8 double integral vs ⟨Ff,g⟩", quad_worst, 1e-7);
}

fn random_dist(r: &mut ChaCha8Rng) -> TemperedDist {
    if r.random_bool(0.2) {
        delta()
    } else {
        let d = r.random_range(0..=24);
        TemperedDist::finite(random_coeffs(r, d))
    }
}

fn random_poly(r: &mut ChaCha8Rng) -> Polynomial {
    let d = r.random_range(0..=3);
    Polynomial::new((0..=d).map(|_| r.random_range(-1.0..1.0)).collect())
}

/// `(T u)(f) = u(A f)` for the three built-in transposes, and `F M_f = M_{Ff}`.
fn duality_law(t: &mut Tally, _: Instant) {
    let mut r = rng(4);
    let mut worst = [0.0f64; 3];
    for _ in 0..500 {
        let u = random_dist(&mut r);
        let d = r.random_range(0..=24);
        let f = random_schwartz(&mut r, d);
        let p = random_poly(&mut r);
        let cases = [
            (fourier_dist(&u).apply(&f), u.apply(&f.fourier())),
            (derivative_dist(&u).apply(&f), u.apply(&(-&f.derivative()))),
            (mul_poly_dist(&u, &p).apply(&f), u.apply(&f.mul_by_poly(&p))),
        ];
        for (w, (lhs, rhs)) in worst.iter_mut().zip(cases) {
            *w = w.max((lhs - rhs).norm());
        }
    }
    t.le("fourier_dist", worst[0], 1e-13);
    t.le("derivative_dist", worst[1], 1e-13);
    t.le("mul_poly_dist", worst[2], 1e-13);

    let mut embed_worst: f64 = 0.0;
    for _ in 0..100 {
        let d = r.random_range(0..=64);
        let f = random_schwartz(&mut r, d);
        let lhs = fourier_dist(&embed_schwartz(&f));
        let rhs = embed_schwartz(&f.fourier());
        embed_worst = embed_worst.max(lhs.max_diff(&rhs, d + 1));
    }
    t.le("F M_f vs M_{Ff} coefficientwise", embed_worst, 1e-13);
}

/// `δ(f) = f(0)`, `(Fδ)(f) = ∫ f` and `δ'(f) = -f'(0)` against grid oracles.
fn delta_identities(t: &mut Tally, _: Instant) {
    let mut r = rng(5);
    let d0 = delta();
    let fd = fourier_dist(&d0);
    let dd = derivative_dist(&d0);
    let mut worst = [0.0f64; 3];
    for _ in 0..100 {
        let deg = r.random_range(0..=32);
        let f = random_schwartz(&mut r, deg);
        worst[0] = worst[0].max((d0.apply(&f) - f.eval(0.0)).norm());
        let integral = trapezoid(|x| f.eval(x), -12.0, 12.0, 1200);
        worst[1] = worst[1].max((fd.apply(&f) - integral).norm());
        let slope = richardson_derivative(|x| f.eval(x), 0.0, 0.1, 7);
        worst[2] = worst[2].max((dd.apply(&f) + slope).norm());
    }
    t.le("|δ(f) - f(0)|", worst[0], 1e-12);
    t.le("|Fδ(f) - trapezoid ∫f|", worst[1], 1e-8);
    t.le("|δ'(f) + Richardson f'(0)|", worst[2], 1e-8);
}

/// `Λ_2 = 1 - (2π)^{-2} ∂²` and `|2πξ|² = -∂²`, relative to the sup of the
/// expected coefficients.
fn lambda_two(t: &mut Tally, _: Instant) {
    let mut r = rng(6);
    let lap = Multiplier::laplacian_2pi();
    let mut worst = [0.0f64; 2];
    let mut residual: f64 = 0.0;
    for _ in 0..100 {
        let deg = r.random_range(0..=16);
        let f = random_schwartz(&mut r, deg);
        let f2 = f.nth_derivative(2);
        let expect = f.sub(&f2.scale(c64(1.0 / (4.0 * PI * PI))));
        let out = lambda_s(2.0, &f, default_proj_degree(deg, 2)).expect("degree within range");
        residual = residual.max(out.aliasing_residual);
        worst[0] = worst[0].max(out.result.max_diff(&expect) / expect.max_norm().max(f64::MIN_POSITIVE));
        let minus_f2 = -&f2;
        let got = apply_multiplier(&lap, &f, default_proj_degree(deg, 2)).expect("degree within range");
        worst[1] = worst[1].max(got.result.max_diff(&minus_f2) / minus_f2.max_norm().max(1.0));
    }
    t.le("Λ_2 f vs f - (2π)^-2 f'' (relative)", worst[0], 1e-8);
    t.le("|2πξ|² vs -f'' (relative)", worst[1], 1e-8);
    t.note(format!("max aliasing residual {residual:.1e}"));
}

fn h0_is_l2(t: &mut Tally, _: Instant) {
    let mut r = rng(7);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let deg = r.random_range(0..=32);
        let f = random_schwartz(&mut r, deg);
        let s = sobolev_norm(&f, 0.0).expect("degree within range");
        worst = worst.max((s - f.l2_norm()).abs());
    }
    t.le("max |‖f‖_{H^0} - ‖f‖₂| on 100 inputs", worst, 1e-10);
}

/// Exact extension of `F` and of `2·id`, and projection tails of
/// `e^{-x²} cos x`.
fn density_extension(t: &mut Tally, _: Instant) {
    let mut r = rng(8);
    let mut exact = true;
    let mut tails = true;
    for _ in 0..20 {
        let len = r.random_range(1..=64);
        let tail = r.random_range(0.0..1e-6);
        let v = L2Elem::new(random_coeffs(&mut r, len - 1), tail).expect("valid tail");
        let fv = extend_by_density(&LinearOp::Fourier, 1.0, &v, 1e-5).expect("bounded");
        exact &= fv.coeffs() == fourier_l2(&v).coeffs();
        tails &= fv.tail() == v.tail();
        let doubled = extend_by_density(&LinearOp::scale(c64(2.0)), 2.0, &v, 1e-5).expect("bounded");
        tails &= doubled.tail() == 2.0 * v.tail();
    }
    t.holds("F extension equals fourier_l2 bit for bit", exact);
    t.holds("tail scales by M", tails);

    // Coefficients of g = e^{-x²} cos x up to degree 160 by trapezoid.
    const TOP: usize = 160;
    let (nodes, weights) = trapezoid_grid(-12.0, 12.0, 4800);
    let mut coeffs = vec![0.0f64; TOP + 1];
    for (&x, &w) in nodes.iter().zip(&weights) {
        let g = (-x * x).exp() * x.cos() * w;
        for (c, h) in coeffs.iter_mut().zip(hermite_values(TOP, x)) {
            *c += g * h;
        }
    }
    let norm_sq = 0.5 * (PI / 2.0).sqrt() * (1.0 + (-0.5f64).exp());
    let captured: f64 = coeffs.iter().map(|c| c * c).sum();
    t.le("|Σ a_n² - ‖g‖²|", (captured - norm_sq).abs(), 1e-12);
    let tail_at = |n: usize| coeffs[n + 1..].iter().map(|c| c * c).sum::<f64>().sqrt();
    let seq: Vec<f64> = [8, 16, 32, 64].iter().map(|&n| tail_at(n)).collect();
    t.holds("tails at N = 8, 16, 32, 64 strictly decrease", seq.windows(2).all(|w| w[1] < w[0]));
    t.note(format!("tails {}", seq.iter().map(|v| format!("{v:.1e}")).collect::<Vec<_>>().join(", ")));
}

/// Identity certificate has ratio 1; `p_00(f') ≤ p_00(f)` is refuted;
/// `p_00(Ff) ≤ 4 max(p_00, p_20)(f)`, from `∫|f| ≤ 2 p_00 + 2 p_20`, survives.
fn certificate_falsifier(t: &mut Tally, _: Instant) {
    let idx = |k, n| SeminormIndex { k, n };
    let mut ratio_err: f64 = 0.0;
    for (k, n) in [(0, 0), (1, 0), (0, 1), (2, 1)] {
        let cert = BoundCertificate::single(idx(k, n), [idx(k, n)], 1.0).expect("valid certificate");
        let rep = validate_certificate(&LinearOp::Identity, &cert, 200, 16, 9).expect("linear operator");
        ratio_err = ratio_err.max((rep.per_index[0].max_ratio - 1.0).abs());
        ratio_err = ratio_err.max(rep.total_violations as f64);
    }
    t.le("identity |max_ratio - 1|", ratio_err, 1e-6);

    let cert = BoundCertificate::single(idx(0, 0), [idx(0, 0)], 1.0).expect("valid certificate");
    let rep = validate_certificate(&LinearOp::Derivative, &cert, 10_000, 16, 9).expect("linear operator");
    match rep.per_index[0].first_violation {
        Some(trial) => {
            t.holds("derivative certificate refuted", true);
            t.note(format!(
                "first violation at trial {trial}, {} of 10000 violate, empirical constant {:.3}",
                rep.total_violations, rep.per_index[0].max_ratio
            ));
        }
        None => {
            t.holds("derivative certificate refuted", false);
        }
    }

    let cert = BoundCertificate::single(idx(0, 0), [idx(0, 0), idx(2, 0)], 4.0).expect("valid certificate");
    let rep = validate_certificate(&LinearOp::Fourier, &cert, 1000, 16, 10).expect("linear operator");
    t.holds("fourier certificate with C = 4 survives 1000 trials", rep.is_clean());
}

/// Estimator against a 10⁶-point grid on `[-8, 8]`, and the seminorm axioms.
fn seminorm_estimator(t: &mut Tally, _: Instant) {
    let mut r = rng(10);
    let mut worst: f64 = 0.0;
    let mut cases = Vec::new();
    for _ in 0..50 {
        let deg = r.random_range(0..=12);
        let f = random_schwartz(&mut r, deg);
        let i = SeminormIndex {
            k: r.random_range(0..=3),
            n: r.random_range(0..=2),
        };
        cases.push((f, i));
    }
    for (f, i) in &cases {
        let fd = f.nth_derivative(i.n as usize);
        let k = i.k as i32;
        let brute = grid_max(|x| x.abs().powi(k) * fd.eval(x).norm(), 8.0, 1_000_000);
        let est = f.seminorm(*i);
        worst = worst.max((est - brute).abs() / brute);
    }
    t.le("max relative gap to 10⁶-point grid", worst, 1e-2);

    let fam = SeminormFamily::schwartz();
    let mut sub: f64 = 0.0;
    let mut hom: f64 = 0.0;
    for (f, i) in &cases {
        let g = random_schwartz(&mut r, 12);
        let c = Complex64::new(r.random_range(-3.0..3.0), r.random_range(-3.0..3.0));
        let (pf, pg) = (fam.eval(*i, f), fam.eval(*i, &g));
        let scale = (pf + pg).max(f64::MIN_POSITIVE);
        sub = sub.max((fam.eval(*i, &f.add(&g)) - pf - pg).max(0.0) / scale);
        let pcf = fam.eval(*i, &f.scale(c));
        hom = hom.max((pcf - c.norm() * pf).abs() / (c.norm() * pf).max(f64::MIN_POSITIVE));
    }
    t.le("subadditivity excess (relative)", sub, 1e-8);
    t.le("homogeneity defect (relative)", hom, 1e-8);
}
