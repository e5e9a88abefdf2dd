//! Lifting finite self maps of `A = K⟦X⟧/𝔞` to the ambient power series
//! ring.
//!
//! Every search here (parameters, coset adjusters) enumerates explicit
//! candidates and accepts the first one whose dimension conditions verify
//! exactly, so nothing is returned unchecked.

mod avoid;
mod candidates;
mod lift;
mod minimal;
mod presentation;
mod sop;
mod verify;

pub use avoid::{coset_avoid, Avoidance};
pub use lift::{lift_map, LiftCertificate, TraceStep};
pub use minimal::{minimal_presentation, MinimalPresentation};
pub use presentation::{is_finite_map, Presentation, SelfMapOnA};
pub use sop::{strong_sop, SopCertificate};
pub use verify::{verify_lift, CheckOutcome, VerificationReport};

use thiserror::Error;

use crate::exec::Execution;
use crate::invariants::InvariantError;
use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("graded mode needs images of one common degree; {0}")]
    NotGraded(String),
    #[error("map is ill-defined: image of generator `{generator}` is `{image}`, not in the ideal")]
    IllDefinedMap { generator: String, image: String },
    #[error("map is not finite: the images generate an ideal of dimension {dimension}")]
    NotFinite { dimension: i64 },
    #[error("search exhausted at step {step} after {attempts} candidates")]
    SearchExhausted { step: usize, attempts: usize },
    #[error("variable `{variable}` cannot be eliminated polynomially from `{generator}`")]
    NoPolynomialElimination { variable: String, generator: String },
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
}

/// Search knobs shared by every stage; `Default` gives the documented
/// defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub seed: u64,
    /// Candidates examined per search step before giving up.
    pub max_attempts: usize,
    /// Largest coefficient size in the deterministic sweep.
    pub coeff_bound: u64,
    /// Largest multiplier degree in coset adjusters.
    pub adjuster_degree_cap: u32,
    /// Sweep candidates per step before switching to seeded random ones.
    pub sweep_budget: usize,
    pub execution: Execution,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            seed: 0,
            max_attempts: 10_000,
            coeff_bound: 3,
            adjuster_degree_cap: 2,
            sweep_budget: 2_000,
            execution: Execution::default(),
        }
    }
}

#[cfg(test)]
mod testutil;
