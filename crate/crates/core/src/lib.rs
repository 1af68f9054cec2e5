//! Topological symmetry groups of complete graphs `K_{4r+3}` in `S^3`.
//!
//! - [`perm`]: permutations, cycle types, orbits, concrete product actions.
//! - [`realizability`]: which cycle types are induced by finite-order
//!   orientation-preserving diffeomorphisms.
//! - [`classifier`]: the groups that occur for `n ≡ 3 (mod 4)`.
//! - [`oracle`]: exhaustive checks of the supporting lemmas.
//! - [`embedder`]: symbolic vertex placements for the converse construction.

pub mod classifier;
pub mod embedder;
pub mod oracle;
pub mod perm;
pub mod realizability;

pub use classifier::{admits, enumerate_tsg, AdmitsWitness, ClassifierError, GroupId};
pub use perm::{CycleType, PermError, Permutation};
pub use realizability::{check, Condition, RealizabilityVerdict};
