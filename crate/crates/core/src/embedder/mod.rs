//! Symbolic vertex placements for the converse direction: for an admitted
//! `(n, G)`, put the vertices of `K_n` on the fixed circles and generic
//! orbits of a finite rotation group and check the hypotheses under which
//! the edges can be added equivariantly.

mod hypotheses;
mod model;
mod plan;

use thiserror::Error;

use crate::classifier::{ClassifierError, GroupId};
use crate::perm::PermError;

pub use hypotheses::{check_edge_hypotheses, HypothesisResult, HypothesisVerdict};
pub use model::{CircleId, Locus, SymmetryModel};
pub use plan::{
    choose_arcs, induced_generators, plan_embedding, relations_hold, Arc, EmbeddingPlan, Subcase,
    SubcaseKind,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("{group} is not admitted: {reason}")]
    NotAdmitted { group: GroupId, reason: String },
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
    #[error("malformed plan: {0}")]
    Malformed(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}
