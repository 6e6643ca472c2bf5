//! Exact classification of the Painlevé families: Morley rank and degree
//! strata, Bäcklund parameter orbits, orthogonality verdicts, and symbolic
//! plus numeric verification of the underlying identities.

pub mod catalog;
pub mod classify;
pub mod diffpoly;
pub mod exactnum;
pub mod numint;
pub mod weyl;
