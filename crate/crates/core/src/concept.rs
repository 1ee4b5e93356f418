//! Concepts, axioms and knowledge bases.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::degree::Degree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AstError {
    #[error("scale factor must be at least 1")]
    ZeroScale,
    #[error("empty name")]
    EmptyName,
    #[error("`{0}` is a reserved word and cannot be used as a name")]
    ReservedName(String),
    #[error("invalid character in name `{0}`")]
    InvalidName(String),
    #[error("axiom grade {0} lies outside (0, 1]")]
    GradeOutOfRange(Degree),
}

/// Words that cannot serve as concept, role or individual names.
pub const RESERVED: &[&str] = &[
    "top", "bot", "and", "or", "not", "some", "all", "scale", "impl", "iff", "min", "max", "gci",
    "instance", "related",
];

pub fn validate_name(name: &str) -> Result<(), AstError> {
    if name.is_empty() {
        return Err(AstError::EmptyName);
    }
    if RESERVED.contains(&name) {
        return Err(AstError::ReservedName(name.to_string()));
    }
    let ok = name
        .chars()
        .all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '\'' | '.'));
    let leading_ok = name.chars().next().is_some_and(|c| !c.is_ascii_digit());
    if !ok || !leading_ok || name.ends_with(':') {
        return Err(AstError::InvalidName(name.to_string()));
    }
    Ok(())
}

/// An Ł-ALC concept. `Scale(n, C)` stands for the `n`-fold disjunction of `C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Concept {
    Top,
    Bottom,
    Atomic(String),
    And(Box<Concept>, Box<Concept>),
    Or(Box<Concept>, Box<Concept>),
    Not(Box<Concept>),
    Exists(String, Box<Concept>),
    Forall(String, Box<Concept>),
    Scale(BigUint, Box<Concept>),
}

impl Concept {
    pub fn atomic(name: impl Into<String>) -> Concept {
        Concept::Atomic(name.into())
    }

    pub fn and(lhs: Concept, rhs: Concept) -> Concept {
        Concept::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Concept, rhs: Concept) -> Concept {
        Concept::Or(Box::new(lhs), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(arg: Concept) -> Concept {
        Concept::Not(Box::new(arg))
    }

    pub fn exists(role: impl Into<String>, arg: Concept) -> Concept {
        Concept::Exists(role.into(), Box::new(arg))
    }

    pub fn forall(role: impl Into<String>, arg: Concept) -> Concept {
        Concept::Forall(role.into(), Box::new(arg))
    }

    /// `n * C`; `scale(1, C)` is `C` itself.
    pub fn scale(n: BigUint, arg: Concept) -> Result<Concept, AstError> {
        if n.is_zero() {
            Err(AstError::ZeroScale)
        } else if n.is_one() {
            Ok(arg)
        } else {
            Ok(Concept::Scale(n, Box::new(arg)))
        }
    }

    /// `C -> D`, i.e. `not C or D`.
    pub fn implies(lhs: Concept, rhs: Concept) -> Concept {
        Concept::or(Concept::not(lhs), rhs)
    }

    /// `C <-> D`, i.e. `(C -> D) and (D -> C)`.
    pub fn iff(lhs: Concept, rhs: Concept) -> Concept {
        Concept::and(
            Concept::implies(lhs.clone(), rhs.clone()),
            Concept::implies(rhs, lhs),
        )
    }

    /// `min{C, D}` as `C and (C -> D)`.
    pub fn min(lhs: Concept, rhs: Concept) -> Concept {
        Concept::and(lhs.clone(), Concept::implies(lhs, rhs))
    }

    /// `max{C, D}` as `(C -> D) -> D`.
    pub fn max(lhs: Concept, rhs: Concept) -> Concept {
        Concept::implies(Concept::implies(lhs, rhs.clone()), rhs)
    }

    /// Nesting depth of quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Concept::Top | Concept::Bottom | Concept::Atomic(_) => 0,
            Concept::And(l, r) | Concept::Or(l, r) => {
                l.quantifier_depth().max(r.quantifier_depth())
            }
            Concept::Not(c) | Concept::Scale(_, c) => c.quantifier_depth(),
            Concept::Exists(_, c) | Concept::Forall(_, c) => 1 + c.quantifier_depth(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Concept::Top | Concept::Bottom | Concept::Atomic(_) => 1,
            Concept::And(l, r) | Concept::Or(l, r) => 1 + l.size() + r.size(),
            Concept::Not(c)
            | Concept::Scale(_, c)
            | Concept::Exists(_, c)
            | Concept::Forall(_, c) => 1 + c.size(),
        }
    }

    pub fn collect_names<'a>(&'a self, concepts: &mut Vec<&'a str>, roles: &mut Vec<&'a str>) {
        match self {
            Concept::Top | Concept::Bottom => {}
            Concept::Atomic(a) => concepts.push(a),
            Concept::And(l, r) | Concept::Or(l, r) => {
                l.collect_names(concepts, roles);
                r.collect_names(concepts, roles);
            }
            Concept::Not(c) | Concept::Scale(_, c) => c.collect_names(concepts, roles),
            Concept::Exists(role, c) | Concept::Forall(role, c) => {
                roles.push(role);
                c.collect_names(concepts, roles);
            }
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_concept(self))
    }
}

/// A graded axiom. Grades lie in `(0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Axiom {
    Gci {
        lhs: Concept,
        rhs: Concept,
        grade: Degree,
    },
    ConceptAssertion {
        individual: String,
        concept: Concept,
        grade: Degree,
    },
    RoleAssertion {
        first: String,
        second: String,
        role: String,
        grade: Degree,
    },
}

fn check_grade(grade: &Degree) -> Result<(), AstError> {
    if grade.is_zero() {
        Err(AstError::GradeOutOfRange(grade.clone()))
    } else {
        Ok(())
    }
}

impl Axiom {
    pub fn gci(lhs: Concept, rhs: Concept, grade: Degree) -> Result<Axiom, AstError> {
        check_grade(&grade)?;
        Ok(Axiom::Gci { lhs, rhs, grade })
    }

    pub fn concept_assertion(
        individual: impl Into<String>,
        concept: Concept,
        grade: Degree,
    ) -> Result<Axiom, AstError> {
        check_grade(&grade)?;
        Ok(Axiom::ConceptAssertion {
            individual: individual.into(),
            concept,
            grade,
        })
    }

    pub fn role_assertion(
        first: impl Into<String>,
        second: impl Into<String>,
        role: impl Into<String>,
        grade: Degree,
    ) -> Result<Axiom, AstError> {
        check_grade(&grade)?;
        Ok(Axiom::RoleAssertion {
            first: first.into(),
            second: second.into(),
            role: role.into(),
            grade,
        })
    }

    pub fn grade(&self) -> &Degree {
        match self {
            Axiom::Gci { grade, .. }
            | Axiom::ConceptAssertion { grade, .. }
            | Axiom::RoleAssertion { grade, .. } => grade,
        }
    }

    pub fn is_gci(&self) -> bool {
        matches!(self, Axiom::Gci { .. })
    }

    pub fn quantifier_depth(&self) -> usize {
        match self {
            Axiom::Gci { lhs, rhs, .. } => lhs.quantifier_depth().max(rhs.quantifier_depth()),
            Axiom::ConceptAssertion { concept, .. } => concept.quantifier_depth(),
            Axiom::RoleAssertion { .. } => 0,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_axiom(self))
    }
}

/// A TBox of GCIs and an ABox of assertions, each kept in insertion order
/// without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    tbox: Vec<Axiom>,
    abox: Vec<Axiom>,
    seen: HashSet<Axiom>,
}

/// Names occurring anywhere in a knowledge base, sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    pub concepts: Vec<String>,
    pub roles: Vec<String>,
    pub individuals: Vec<String>,
}

impl KnowledgeBase {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an axiom to the TBox or ABox; returns `false` if it was already present.
    pub fn insert(&mut self, axiom: Axiom) -> bool {
        if !self.seen.insert(axiom.clone()) {
            return false;
        }
        if axiom.is_gci() {
            self.tbox.push(axiom);
        } else {
            self.abox.push(axiom);
        }
        true
    }

    pub fn tbox(&self) -> &[Axiom] {
        &self.tbox
    }

    pub fn abox(&self) -> &[Axiom] {
        &self.abox
    }

    /// TBox axioms first, then ABox axioms.
    pub fn axioms(&self) -> impl Iterator<Item = &Axiom> {
        self.tbox.iter().chain(self.abox.iter())
    }

    pub fn len(&self) -> usize {
        self.tbox.len() + self.abox.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, axiom: &Axiom) -> bool {
        self.seen.contains(axiom)
    }

    pub fn quantifier_depth(&self) -> usize {
        self.axioms()
            .map(Axiom::quantifier_depth)
            .max()
            .unwrap_or(0)
    }

    pub fn signature(&self) -> Signature {
        let mut concepts = Vec::new();
        let mut roles = Vec::new();
        let mut individuals = Vec::new();
        for ax in self.axioms() {
            match ax {
                Axiom::Gci { lhs, rhs, .. } => {
                    lhs.collect_names(&mut concepts, &mut roles);
                    rhs.collect_names(&mut concepts, &mut roles);
                }
                Axiom::ConceptAssertion {
                    individual,
                    concept,
                    ..
                } => {
                    individuals.push(individual.as_str());
                    concept.collect_names(&mut concepts, &mut roles);
                }
                Axiom::RoleAssertion {
                    first,
                    second,
                    role,
                    ..
                } => {
                    individuals.push(first);
                    individuals.push(second);
                    roles.push(role);
                }
            }
        }
        let finish = |mut v: Vec<&str>| {
            v.sort_unstable();
            v.dedup();
            v.into_iter().map(str::to_string).collect()
        };
        Signature {
            concepts: finish(concepts),
            roles: finish(roles),
            individuals: finish(individuals),
        }
    }
}

impl FromIterator<Axiom> for KnowledgeBase {
    fn from_iter<I: IntoIterator<Item = Axiom>>(iter: I) -> Self {
        let mut kb = KnowledgeBase::new();
        for ax in iter {
            kb.insert(ax);
        }
        kb
    }
}

impl Extend<Axiom> for KnowledgeBase {
    fn extend<I: IntoIterator<Item = Axiom>>(&mut self, iter: I) {
        for ax in iter {
            self.insert(ax);
        }
    }
}
