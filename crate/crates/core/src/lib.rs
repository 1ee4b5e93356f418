//! Łukasiewicz fuzzy ALC with graded general concept inclusions.
//!
//! - [`degree`]: exact rational truth degrees and the Łukasiewicz connectives.
//! - [`concept`], [`syntax`]: concept/axiom ASTs and their s-expression syntax.
//! - [`interp`]: finite fuzzy interpretations, evaluation and model checking.
//! - [`pcp`]: Post correspondence instances and bounded solvers.
//! - [`reduction`]: compilation of an RPCP instance into an ontology.
//! - [`canonical`]: the truncated canonical model and end-to-end verification.
//! - [`cli`]: the `lukalc` command-line front end.

pub mod canonical;
pub mod cli;
pub mod concept;
pub mod degree;
pub mod interp;
pub mod pcp;
pub mod reduction;
pub mod syntax;

pub use concept::{Axiom, Concept, KnowledgeBase};
pub use degree::Degree;
pub use interp::FuzzyInterpretation;
pub use pcp::PcpInstance;
