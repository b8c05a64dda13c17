//! Block substitutions, their fixed points, and the morphisms that commute
//! with them.
//!
//! Words are finite sequences over a small alphabet ([`Word`]). A k-block
//! substitution ([`BlockSubstitution`]) rewrites aligned length-k blocks; a
//! morphism ([`Morphism`]) rewrites single letters. The crate generates fixed
//! points, checks commutation between the two kinds of map, solves the word
//! equations that describe all commuting block maps, and measures prefixes
//! of infinite words.

pub mod analysis;
pub mod catalog;
pub mod conjugacy;
pub mod error;
pub mod generation;
pub mod substitution;
pub mod word;
pub mod wordeq;

pub use analysis::{ComplexityProfile, FrequencyEstimate, PeriodicityVerdict, Transform};
pub use catalog::{lookup, CatalogValue, NamedObject};
pub use conjugacy::{check_commute, CommutationReport, Hypothesis, TransferReport};
pub use error::{Error, Result};
pub use generation::{generate_prefix, GenerationScheme, Recurrence};
pub use substitution::{BlockSubstitution, Morphism, RuleSet};
pub use word::{Alphabet, FactorSet, Symbol, Word};
pub use wordeq::{enumerate_solutions, Assignment, SearchBounds, WordEquationSystem};
