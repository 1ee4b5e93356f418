//! Finite fuzzy interpretations: semantics, satisfaction checking and a
//! bounded model finder.

mod eval;
mod model;
mod search;

pub use eval::{
    check_axiom, check_kb, check_kb_scoped, eval_concept, eval_gci, find_witness, AxiomCheck,
    AxiomReport, EvalError, Evaluator, KbReport,
};
pub use model::{ElementId, FuzzyInterpretation, ModelError};
pub use search::{grid_search, SearchError, DEFAULT_MAX_ENUM};
