//! Pool-based multi-objective Bayesian optimization.
//!
//! `seqpareto` implements a sequential decision-making loop for expensive
//! multi-objective experiments simulated against a finite candidate pool:
//! independent Gaussian-process surrogates per objective, a Monte-Carlo
//! batch expected-hypervolume-improvement (qEHVI) acquisition function,
//! and nearest-pool projection of continuous candidates onto real,
//! pre-measured design points. Alongside the optimizer it ships the
//! space-filling baselines (Latin hypercube, low-discrepancy uniform
//! design, sphere packing), an NSGA-II baseline with shared pool
//! semantics, and the GD/IGD/HV/PHV/data-usage metric suite used to
//! score all of them against a pool's true Pareto front.
//!
//! The crate is organized by role:
//!
//! * [`core`] — domain types, dominance, Pareto-front extraction,
//!   input normalization.
//! * [`surrogate`] — per-objective SE-kernel GP regression with
//!   marginal-likelihood hyperparameter fitting.
//! * [`acquisition`] — box decomposition, HVI/qHVI, the qEHVI
//!   Monte-Carlo estimator and its maximizer.
//! * [`metrics`] — GD, IGD, hypervolume, proportional hypervolume,
//!   data usage.
//! * [`doe`] — one-shot space-filling designs plus pool projection.
//! * [`campaign`] — the sequential optimization loop, stopping rules,
//!   and checkpointing.
//! * [`baselines`] — NSGA-II.
//! * [`data`] — CSV pool ingestion and synthetic benchmark pools.
//! * [`quasirandom`] — scrambled Halton sequences and the normal
//!   inverse CDF used for quasi-Monte-Carlo sampling.

pub mod acquisition;
pub mod baselines;
pub mod campaign;
pub mod core;
pub mod data;
pub mod doe;
mod error;
pub mod metrics;
pub mod quasirandom;
pub mod surrogate;

pub use error::{Error, Result};
