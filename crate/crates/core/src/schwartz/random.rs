use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::SchwartzFn;

/// `degree + 1` i.i.d. complex Gaussian coefficients, the `n`-th scaled by
/// `(1+n)^{-2}`.
pub fn random_coeffs<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> Vec<Complex64> {
    (0..=degree)
        .map(|n| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im) / ((1 + n) as f64).powi(2)
        })
        .collect()
}

/// Random test function of exactly the given degree (up to trimming).
pub fn random_schwartz<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> SchwartzFn {
    SchwartzFn::from_coeffs(random_coeffs(rng, degree))
}
