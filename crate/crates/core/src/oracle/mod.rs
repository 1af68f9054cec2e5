//! Exhaustive and randomized checks of the combinatorial lemmas.
//!
//! Searches run over abstract action profiles of `Z_p x Z_q` rather than raw
//! permutations; topological inputs are explicit [`AxiomSet`] flags.

mod group;
mod profile;
mod verify;

use thiserror::Error;

use crate::perm::PermError;

pub use group::{subgroups_of_product, GroupElement, ProductGroup, Subgroup};
pub use profile::{enumerate_action_profiles, rejection_tally, ActionProfile, AxiomSet, OrbitType};
pub use verify::{
    check_orbits_lemma, involutions, verify_3cycle_consequences, verify_d2_lemma,
    verify_fixed_vertex_lemma, verify_orbits_lemma, verify_pq_lemma, verify_pq_lemma_with,
    VerificationReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("n = {n} is outside the exhaustive range: {reason}")]
    OutOfRange { n: usize, reason: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}
