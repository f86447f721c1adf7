//! Cognitive diagnosis models with binary and partial attribute mastery.
//!
//! This crate implements two families of restricted latent class models for
//! diagnostic assessment data:
//!
//! * classical cognitive diagnosis models (CDMs) with binary attribute
//!   profiles — DINA and the saturated GDINA — fitted by a conjugate Gibbs
//!   sampler, and
//! * their partial-mastery extensions (PM-DINA, PM-GDINA), where each subject
//!   carries continuous mastery scores in `[0,1]` whose probit transforms
//!   follow a multivariate Gaussian (a Gaussian copula population model).
//!   These are fitted by a data-augmented Gibbs sampler that introduces
//!   per-item working profiles and truncated-normal auxiliary variables.
//!
//! The crate is organized around the pipeline of the `pmcdm` binary:
//!
//! * [`model`] — response functions, copula transforms, mixture weights and
//!   likelihoods; pure functions, no sampling or I/O.
//! * [`simulate`] — synthetic data generation under all four model kinds,
//!   including the built-in 20-item Q-matrix designs and a condition grid
//!   for recovery studies.
//! * [`sampler`] — the Gibbs samplers, chain configuration and posterior
//!   summaries.
//! * [`diagnostics`] — recovery metrics (MAE/RMSE, AMCR, ARSE), the
//!   covariance and scatter diagnostics for the binary-mastery assumption,
//!   Gelman-Rubin convergence statistics and AIC/BIC model comparison.
//! * [`io`] — CSV matrix ingestion, summary documents and chain archives.

pub mod diagnostics;
pub mod error;
pub mod io;
pub mod model;
pub(crate) mod rngutil;
pub mod sampler;
pub mod simulate;

pub use error::{Error, Result};
