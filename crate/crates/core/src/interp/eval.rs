//! Concept evaluation, axiom satisfaction and witnesses.

use std::collections::HashMap;
use std::rc::Rc;

use thiserror::Error;

use super::model::{ElementId, FuzzyInterpretation};
use crate::concept::{Axiom, Concept, KnowledgeBase};
use crate::degree::{self, Degree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("element #{0} is not in the domain")]
    UnknownElement(usize),
    #[error("individual `{0}` is not mapped to a domain element")]
    UnmappedIndividual(String),
    #[error("witnesses exist only for concepts with a top-level quantifier")]
    NotQuantified,
}

/// Evaluates concepts over the whole domain at once, memoizing each
/// distinct subconcept.
pub struct Evaluator<'m> {
    model: &'m FuzzyInterpretation,
    cache: HashMap<Concept, Rc<Vec<Degree>>>,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m FuzzyInterpretation) -> Self {
        Evaluator {
            model,
            cache: HashMap::new(),
        }
    }

    pub fn model(&self) -> &'m FuzzyInterpretation {
        self.model
    }

    /// Values of `c` at every element, indexed by domain order.
    pub fn values(&mut self, c: &Concept) -> Rc<Vec<Degree>> {
        if let Some(v) = self.cache.get(c) {
            return Rc::clone(v);
        }
        let m = self.model;
        let n = m.len();
        let v: Vec<Degree> = match c {
            Concept::Top => vec![Degree::one(); n],
            Concept::Bottom => vec![Degree::zero(); n],
            Concept::Atomic(a) => m.elements().map(|e| m.concept_value(a, e)).collect(),
            Concept::And(l, r) | Concept::Or(l, r) => {
                let (l, r) = (self.values(l), self.values(r));
                let op = if matches!(c, Concept::And(..)) {
                    degree::tnorm
                } else {
                    degree::tconorm
                };
                l.iter().zip(r.iter()).map(|(a, b)| op(a, b)).collect()
            }
            Concept::Not(x) => self.values(x).iter().map(degree::negation).collect(),
            Concept::Scale(k, x) => self.values(x).iter().map(|a| degree::scale(k, a)).collect(),
            // Pairs with role degree 0 contribute 0 to the supremum and 1 to
            // the infimum, so only stored successors need visiting.
            Concept::Exists(role, x) => {
                let inner = self.values(x);
                m.elements()
                    .map(|e| {
                        m.successors(role, e)
                            .map(|(y, r)| degree::tnorm(r, &inner[y.0]))
                            .fold(Degree::zero(), Ord::max)
                    })
                    .collect()
            }
            Concept::Forall(role, x) => {
                let inner = self.values(x);
                m.elements()
                    .map(|e| {
                        m.successors(role, e)
                            .map(|(y, r)| degree::implication(r, &inner[y.0]))
                            .fold(Degree::one(), Ord::min)
                    })
                    .collect()
            }
        };
        let v = Rc::new(v);
        self.cache.insert(c.clone(), Rc::clone(&v));
        v
    }

    pub fn eval(&mut self, c: &Concept, x: ElementId) -> Result<Degree, EvalError> {
        if x.0 >= self.model.len() {
            return Err(EvalError::UnknownElement(x.0));
        }
        Ok(self.values(c)[x.0].clone())
    }

    /// `inf_x (lhs(x) => rhs(x))` over `scope`, or over the whole domain.
    pub fn gci_value(
        &mut self,
        lhs: &Concept,
        rhs: &Concept,
        scope: Option<&[ElementId]>,
    ) -> Degree {
        let l = self.values(lhs);
        let r = self.values(rhs);
        let at = |e: ElementId| degree::implication(&l[e.0], &r[e.0]);
        match scope {
            None => self.model.elements().map(at).fold(Degree::one(), Ord::min),
            Some(xs) => xs.iter().copied().map(at).fold(Degree::one(), Ord::min),
        }
    }

    pub fn check_axiom(
        &mut self,
        ax: &Axiom,
        scope: Option<&[ElementId]>,
    ) -> Result<AxiomCheck, EvalError> {
        let m = self.model;
        let ind = |name: &str| {
            m.individual(name)
                .ok_or_else(|| EvalError::UnmappedIndividual(name.to_string()))
        };
        let value = match ax {
            Axiom::Gci { lhs, rhs, .. } => self.gci_value(lhs, rhs, scope),
            Axiom::ConceptAssertion {
                individual,
                concept,
                ..
            } => {
                let e = ind(individual)?;
                self.values(concept)[e.0].clone()
            }
            Axiom::RoleAssertion {
                first,
                second,
                role,
                ..
            } => m.role_value(role, ind(first)?, ind(second)?),
        };
        Ok(AxiomCheck {
            satisfied: &value >= ax.grade(),
            value,
        })
    }
}

/// Outcome of checking one axiom: the evaluated degree and whether it
/// reaches the axiom's grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub satisfied: bool,
    pub value: Degree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub satisfied: bool,
    pub value: Degree,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KbReport {
    pub entries: Vec<AxiomReport>,
}

impl KbReport {
    pub fn satisfied(&self) -> bool {
        self.entries.iter().all(|r| r.satisfied)
    }

    pub fn violations(&self) -> impl Iterator<Item = &AxiomReport> {
        self.entries.iter().filter(|r| !r.satisfied)
    }

    pub fn get(&self, axiom: &Axiom) -> Option<&AxiomReport> {
        self.entries.iter().find(|r| &r.axiom == axiom)
    }
}

pub fn eval_concept(
    model: &FuzzyInterpretation,
    c: &Concept,
    x: ElementId,
) -> Result<Degree, EvalError> {
    Evaluator::new(model).eval(c, x)
}

pub fn eval_gci(model: &FuzzyInterpretation, lhs: &Concept, rhs: &Concept) -> Degree {
    Evaluator::new(model).gci_value(lhs, rhs, None)
}

pub fn check_axiom(model: &FuzzyInterpretation, ax: &Axiom) -> Result<AxiomCheck, EvalError> {
    Evaluator::new(model).check_axiom(ax, None)
}

pub fn check_kb(model: &FuzzyInterpretation, kb: &KnowledgeBase) -> Result<KbReport, EvalError> {
    check_kb_scoped(model, kb, None)
}

/// Like [`check_kb`], but GCI infima range only over `scope` when given.
pub fn check_kb_scoped(
    model: &FuzzyInterpretation,
    kb: &KnowledgeBase,
    scope: Option<&[ElementId]>,
) -> Result<KbReport, EvalError> {
    let mut ev = Evaluator::new(model);
    let mut entries = Vec::with_capacity(kb.len());
    for ax in kb.axioms() {
        let AxiomCheck { satisfied, value } = ev.check_axiom(ax, scope)?;
        entries.push(AxiomReport {
            axiom: ax.clone(),
            satisfied,
            value,
        });
    }
    Ok(KbReport { entries })
}

/// An element attaining the supremum (for `some`) or infimum (for `all`) at
/// `x`. Ties go to the first element in domain order.
pub fn find_witness(
    model: &FuzzyInterpretation,
    c: &Concept,
    x: ElementId,
) -> Result<ElementId, EvalError> {
    if x.0 >= model.len() {
        return Err(EvalError::UnknownElement(x.0));
    }
    let (role, inner, is_exists) = match c {
        Concept::Exists(r, inner) => (r, inner, true),
        Concept::Forall(r, inner) => (r, inner, false),
        _ => return Err(EvalError::NotQuantified),
    };
    let mut ev = Evaluator::new(model);
    let vals = ev.values(inner);
    let candidate = |y: ElementId| {
        let r = model.role_value(role, x, y);
        if is_exists {
            degree::tnorm(&r, &vals[y.0])
        } else {
            degree::implication(&r, &vals[y.0])
        }
    };
    let mut best = ElementId(0);
    let mut best_val = candidate(best);
    for y in model.elements().skip(1) {
        let v = candidate(y);
        let better = if is_exists {
            v > best_val
        } else {
            v < best_val
        };
        if better {
            best = y;
            best_val = v;
        }
    }
    Ok(best)
}
