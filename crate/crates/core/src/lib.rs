//! Schwartz functions, tempered distributions and Sobolev norms on the real
//! line, computed on expansions in the Hermite functions that diagonalize the
//! Fourier transform `(F u)(ξ) = ∫ e^{-2πixξ} u(x) dx`.
//!
//! - [`hermite`]: basis evaluation and Gauss rules for the weight `e^{-2πx²}`.
//! - [`schwartz`]: [`SchwartzFn`], its seminorms, derivative, polynomial
//!   multiplication, pairing and exact Fourier transform.
//! - [`lcs`]: finite seminorm sups, balls, bound certificates and a seeded
//!   certificate falsifier.
//! - [`distribution`]: [`TemperedDist`] as coefficient functionals, the
//!   Dirac delta and operators extended by duality.
//! - [`sobolev`]: L² coefficient sequences, Fourier multipliers, `Λ_s` and
//!   `H^s` norms.
//! - [`checks`]: end-to-end property checks with independent oracles, shared
//!   by the acceptance tests and the `selftest` command.

pub mod checks;
pub mod distribution;
pub mod error;
pub mod hermite;
pub mod lcs;
pub mod schwartz;
pub mod sobolev;

pub use distribution::{DistOperator, TemperedDist};
pub use error::{Error, Result};
pub use hermite::{eval_hermite, gauss_rule, project, QuadratureRule};
pub use lcs::{BasisBall, BoundCertificate, CertificateReport, SeminormFamily};
pub use schwartz::{LinearOp, Polynomial, SchwartzFn, SchwartzOperator, SeminormIndex};
pub use sobolev::{L2Elem, Multiplier, SobolevIndex};
