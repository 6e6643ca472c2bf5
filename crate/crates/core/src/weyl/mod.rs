//! Parameter transformation groups: affine maps, generator words, orbit
//! criteria with witnesses, word synthesis and the orthogonality table.
//!
//! Words compose right to left: `s0 s1` applies `s1` first.

mod affine;
mod generators;
mod orbit;
mod ortho;
mod synth;
mod word;

use thiserror::Error;

use crate::catalog::{CatalogError, FamilyId};

pub use affine::AffineMap;
pub use generators::{
    compose_word, generator_catalog, generators, verify_group_relation, Generator, GeneratorRole,
};
pub use orbit::{
    criterion, hypotheses_hold, orbit_decide, orbit_decide_with_bound, HypothesisStatus,
    OrbitVerdict, Witness, PIII_SUM_NOTE,
};
pub use ortho::{cross_family_verdict, OrthoVerdict, Orthogonality};
pub use synth::{
    generator_word, linear_group_order, NoWordReason, SynthesisMethod, WordResult, WordSearch,
};
pub use word::{Factor, Word};

/// Generator applications explored by the bounded word search.
pub const DEFAULT_WORD_BOUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("family {0} has no parameter transformations")]
    NoGenerators(FamilyId),
    #[error("family {family} has no generator {letter:?}")]
    UnknownLetter { family: FamilyId, letter: String },
    #[error("malformed word {word:?}: {message}")]
    WordSyntax { word: String, message: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
