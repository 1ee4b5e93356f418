//! Bounded exhaustive model search.
//!
//! Finds a model only among interpretations with a fixed domain size and
//! degrees on a fixed grid. A miss says nothing about satisfiability.

use num_bigint::BigInt;
use thiserror::Error;

use super::eval::check_kb;
use super::model::{ElementId, FuzzyInterpretation};
use crate::concept::KnowledgeBase;
use crate::degree::Degree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("domain size and grid denominator must both be at least 1")]
    BadBounds,
    #[error("enumeration cap of {0} interpretations reached without a model")]
    LimitExceeded(u64),
    #[error(transparent)]
    Eval(#[from] super::eval::EvalError),
}

pub const DEFAULT_MAX_ENUM: u64 = 1_000_000;

enum Slot {
    Concept(usize, ElementId),
    Role(usize, ElementId, ElementId),
}

/// Next injective assignment of `m` individuals into `n` elements in
/// lexicographic order, or `false` when exhausted.
fn next_injection(assign: &mut [usize], n: usize) -> bool {
    let m = assign.len();
    for pos in (0..m).rev() {
        let used: Vec<usize> = assign[..pos].to_vec();
        let mut cand = assign[pos] + 1;
        while cand < n && used.contains(&cand) {
            cand += 1;
        }
        if cand < n {
            assign[pos] = cand;
            let mut taken = used;
            taken.push(cand);
            let mut next = 0;
            for slot in assign.iter_mut().skip(pos + 1) {
                while taken.contains(&next) {
                    next += 1;
                }
                *slot = next;
                taken.push(next);
            }
            return true;
        }
    }
    false
}

/// Odometer step over `values`, last position fastest.
fn advance(values: &mut [usize], max: usize) -> bool {
    for v in values.iter_mut().rev() {
        if *v < max {
            *v += 1;
            return true;
        }
        *v = 0;
    }
    false
}

/// Searches interpretations over `n` elements `e0..` whose concept and role
/// degrees all lie in `{0, 1/k, ..., 1}`, returning the first model of `kb`
/// in lexicographic enumeration order.
///
/// Enumeration order: individual assignments (most significant), then
/// concept values by name and element, then role values by name and pair.
/// Only names occurring in `kb` are assigned.
pub fn grid_search(
    kb: &KnowledgeBase,
    n: usize,
    k: u32,
    max_enum: u64,
) -> Result<Option<FuzzyInterpretation>, SearchError> {
    if n == 0 || k == 0 {
        return Err(SearchError::BadBounds);
    }
    let sig = kb.signature();
    if sig.individuals.len() > n {
        return Ok(None);
    }
    let grid: Vec<Degree> = (0..=k)
        .map(|j| Degree::new(BigInt::from(j), BigInt::from(k)).expect("grid point in [0,1]"))
        .collect();
    let elems: Vec<ElementId> = (0..n).map(ElementId).collect();
    let mut slots = Vec::new();
    for c in 0..sig.concepts.len() {
        slots.extend(elems.iter().map(|&e| Slot::Concept(c, e)));
    }
    for r in 0..sig.roles.len() {
        for &x in &elems {
            slots.extend(elems.iter().map(|&y| Slot::Role(r, x, y)));
        }
    }

    let mut injection: Vec<usize> = (0..sig.individuals.len()).collect();
    let mut enumerated: u64 = 0;
    loop {
        let mut base = FuzzyInterpretation::new((0..n).map(|i| format!("e{i}")))
            .expect("nonempty distinct domain");
        for (name, &e) in sig.individuals.iter().zip(&injection) {
            base.map_individual(name, ElementId(e))
                .expect("assignment is injective");
        }
        let mut values = vec![0usize; slots.len()];
        loop {
            if enumerated >= max_enum {
                return Err(SearchError::LimitExceeded(max_enum));
            }
            enumerated += 1;
            let mut m = base.clone();
            for (slot, &v) in slots.iter().zip(&values) {
                match *slot {
                    Slot::Concept(c, e) => m.set_concept(&sig.concepts[c], e, grid[v].clone()),
                    Slot::Role(r, x, y) => m.set_role(&sig.roles[r], x, y, grid[v].clone()),
                }
            }
            if check_kb(&m, kb)?.satisfied() {
                return Ok(Some(m));
            }
            if !advance(&mut values, k as usize) {
                break;
            }
        }
        if !next_injection(&mut injection, n) {
            return Ok(None);
        }
    }
}
