//! Finite fuzzy interpretations and the `.fim` model file format.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::degree::{Degree, DegreeError};

/// Index of a domain element, in domain order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("domain must be nonempty")]
    EmptyDomain,
    #[error("duplicate domain element `{0}`")]
    DuplicateElement(String),
    #[error("unknown domain element `{0}`")]
    UnknownElement(String),
    #[error("individuals `{0}` and `{1}` denote the same element `{2}`")]
    NotInjective(String, String, String),
    #[error("individual `{0}` is mapped twice")]
    DuplicateIndividual(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// A finite fuzzy interpretation. Unlisted concept and role values are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyInterpretation {
    domain: Vec<String>,
    index: HashMap<String, ElementId>,
    concepts: BTreeMap<String, BTreeMap<ElementId, Degree>>,
    roles: BTreeMap<String, BTreeMap<ElementId, BTreeMap<ElementId, Degree>>>,
    individuals: BTreeMap<String, ElementId>,
    interior_depth: Option<usize>,
}

impl FuzzyInterpretation {
    pub fn new<S: Into<String>>(domain: impl IntoIterator<Item = S>) -> Result<Self, ModelError> {
        let domain: Vec<String> = domain.into_iter().map(Into::into).collect();
        if domain.is_empty() {
            return Err(ModelError::EmptyDomain);
        }
        let mut index = HashMap::with_capacity(domain.len());
        for (i, name) in domain.iter().enumerate() {
            if index.insert(name.clone(), ElementId(i)).is_some() {
                return Err(ModelError::DuplicateElement(name.clone()));
            }
        }
        Ok(FuzzyInterpretation {
            domain,
            index,
            concepts: BTreeMap::new(),
            roles: BTreeMap::new(),
            individuals: BTreeMap::new(),
            interior_depth: None,
        })
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = ElementId> {
        (0..self.domain.len()).map(ElementId)
    }

    pub fn element(&self, name: &str) -> Option<ElementId> {
        self.index.get(name).copied()
    }

    pub fn element_name(&self, e: ElementId) -> &str {
        &self.domain[e.0]
    }

    fn resolve(&self, name: &str) -> Result<ElementId, ModelError> {
        self.element(name)
            .ok_or_else(|| ModelError::UnknownElement(name.to_string()))
    }

    pub fn set_concept(&mut self, name: &str, e: ElementId, value: Degree) {
        assert!(e.0 < self.domain.len(), "element out of range");
        if value.is_zero() {
            if let Some(row) = self.concepts.get_mut(name) {
                row.remove(&e);
                if row.is_empty() {
                    self.concepts.remove(name);
                }
            }
        } else {
            self.concepts
                .entry(name.to_string())
                .or_default()
                .insert(e, value);
        }
    }

    pub fn set_role(&mut self, name: &str, from: ElementId, to: ElementId, value: Degree) {
        assert!(
            from.0 < self.domain.len() && to.0 < self.domain.len(),
            "element out of range"
        );
        if value.is_zero() {
            if let Some(rows) = self.roles.get_mut(name) {
                if let Some(row) = rows.get_mut(&from) {
                    row.remove(&to);
                    if row.is_empty() {
                        rows.remove(&from);
                    }
                }
                if rows.is_empty() {
                    self.roles.remove(name);
                }
            }
        } else {
            let rows = self.roles.entry(name.to_string()).or_default();
            rows.entry(from).or_default().insert(to, value);
        }
    }

    /// Maps an individual, enforcing the unique name assumption.
    pub fn map_individual(&mut self, name: &str, e: ElementId) -> Result<(), ModelError> {
        assert!(e.0 < self.domain.len(), "element out of range");
        if self.individuals.contains_key(name) {
            return Err(ModelError::DuplicateIndividual(name.to_string()));
        }
        if let Some((other, _)) = self.individuals.iter().find(|(_, &x)| x == e) {
            return Err(ModelError::NotInjective(
                other.clone(),
                name.to_string(),
                self.domain[e.0].clone(),
            ));
        }
        self.individuals.insert(name.to_string(), e);
        Ok(())
    }

    pub fn concept_value(&self, name: &str, e: ElementId) -> Degree {
        self.concepts
            .get(name)
            .and_then(|row| row.get(&e))
            .cloned()
            .unwrap_or_else(Degree::zero)
    }

    pub fn role_value(&self, name: &str, from: ElementId, to: ElementId) -> Degree {
        self.roles
            .get(name)
            .and_then(|rows| rows.get(&from))
            .and_then(|row| row.get(&to))
            .cloned()
            .unwrap_or_else(Degree::zero)
    }

    /// Nonzero `(successor, degree)` pairs of `from` under `role`, in domain order.
    pub fn successors<'a>(
        &'a self,
        role: &str,
        from: ElementId,
    ) -> impl Iterator<Item = (ElementId, &'a Degree)> + 'a {
        self.roles
            .get(role)
            .and_then(|rows| rows.get(&from))
            .into_iter()
            .flat_map(|row| row.iter().map(|(&y, d)| (y, d)))
    }

    pub fn individual(&self, name: &str) -> Option<ElementId> {
        self.individuals.get(name).copied()
    }

    pub fn individuals(&self) -> impl Iterator<Item = (&str, ElementId)> {
        self.individuals.iter().map(|(n, &e)| (n.as_str(), e))
    }

    pub fn concept_names(&self) -> impl Iterator<Item = &str> {
        self.concepts.keys().map(String::as_str)
    }

    pub fn role_names(&self) -> impl Iterator<Item = &str> {
        self.roles.keys().map(String::as_str)
    }

    /// Depth below which GCIs are checked when the model is a truncated tree.
    pub fn interior_depth(&self) -> Option<usize> {
        self.interior_depth
    }

    pub fn set_interior_depth(&mut self, depth: Option<usize>) {
        self.interior_depth = depth;
    }

    /// Renames every domain element; `rename` must be injective.
    pub fn renamed(&self, mut rename: impl FnMut(&str) -> String) -> Result<Self, ModelError> {
        let mut out = self.clone();
        out.domain = self.domain.iter().map(|n| rename(n)).collect();
        out.index.clear();
        for (i, name) in out.domain.iter().enumerate() {
            if out.index.insert(name.clone(), ElementId(i)).is_some() {
                return Err(ModelError::DuplicateElement(name.clone()));
            }
        }
        Ok(out)
    }

    /// Serializes to the `.fim` format. Only nonzero entries are written.
    pub fn to_fim(&self) -> String {
        let mut out = String::from("domain:");
        for e in &self.domain {
            out.push(' ');
            out.push_str(e);
        }
        out.push('\n');
        if let Some(d) = self.interior_depth {
            let _ = writeln!(out, "interior-depth: {d}");
        }
        for (name, e) in &self.individuals {
            let _ = writeln!(out, "individual: {name} -> {}", self.domain[e.0]);
        }
        for (name, row) in &self.concepts {
            for (e, d) in row {
                let _ = writeln!(out, "concept: {name} {} {d}", self.domain[e.0]);
            }
        }
        for (name, rows) in &self.roles {
            for (x, row) in rows {
                for (y, d) in row {
                    let _ = writeln!(
                        out,
                        "role: {name} {} {} {d}",
                        self.domain[x.0], self.domain[y.0]
                    );
                }
            }
        }
        out
    }

    /// Parses the `.fim` format:
    ///
    /// ```text
    /// domain: e0 e1 e2
    /// individual: a -> e0
    /// concept: A e0 1/100
    /// role: R1 e0 e1 1
    /// ```
    ///
    /// The `domain:` line must come before any other entry. An optional
    /// `interior-depth: d` line marks a depth-truncated tree model.
    pub fn from_fim(text: &str) -> Result<Self, ModelError> {
        let mut model: Option<FuzzyInterpretation> = None;
        let mut interior = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fail = |message: String| ModelError::Format { line, message };
            let (key, rest) = content
                .split_once(':')
                .ok_or_else(|| fail(format!("expected `key: ...`, found `{content}`")))?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let degree = |s: &str| {
                s.parse::<Degree>()
                    .map_err(|e: DegreeError| fail(format!("{e}")))
            };
            if key.trim() == "domain" {
                if model.is_some() {
                    return Err(fail("duplicate `domain:` line".into()));
                }
                model = Some(
                    FuzzyInterpretation::new(fields.iter().copied())
                        .map_err(|e| fail(e.to_string()))?,
                );
                continue;
            }
            let m = model
                .as_mut()
                .ok_or_else(|| fail("`domain:` must come first".into()))?;
            let elem =
                |m: &FuzzyInterpretation, s: &str| m.resolve(s).map_err(|e| fail(e.to_string()));
            match (key.trim(), fields.as_slice()) {
                ("interior-depth", [d]) => {
                    let d = d
                        .parse::<usize>()
                        .map_err(|_| fail(format!("bad depth `{d}`")))?;
                    interior = Some(d);
                }
                ("individual", [name, "->", e]) => {
                    let e = elem(m, e)?;
                    m.map_individual(name, e).map_err(|e| fail(e.to_string()))?;
                }
                ("concept", [name, e, d]) => {
                    let e = elem(m, e)?;
                    let d = degree(d)?;
                    m.set_concept(name, e, d);
                }
                ("role", [name, x, y, d]) => {
                    let x = elem(m, x)?;
                    let y = elem(m, y)?;
                    let d = degree(d)?;
                    m.set_role(name, x, y, d);
                }
                (k, _) => return Err(fail(format!("malformed `{k}` entry"))),
            }
        }
        let mut m = model.ok_or(ModelError::Format {
            line: text.lines().count().max(1),
            message: "missing `domain:` line".into(),
        })?;
        m.interior_depth = interior;
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn defaults_to_zero() {
        let m = FuzzyInterpretation::new(["e0", "e1"]).unwrap();
        assert!(m.concept_value("A", ElementId(0)).is_zero());
        assert!(m.role_value("R", ElementId(0), ElementId(1)).is_zero());
    }

    #[test]
    fn unique_name_assumption() {
        let mut m = FuzzyInterpretation::new(["e0", "e1"]).unwrap();
        m.map_individual("a", ElementId(0)).unwrap();
        assert!(matches!(
            m.map_individual("b", ElementId(0)),
            Err(ModelError::NotInjective(..))
        ));
        assert!(matches!(
            m.map_individual("a", ElementId(1)),
            Err(ModelError::DuplicateIndividual(_))
        ));
    }

    #[test]
    fn rejects_bad_domains() {
        assert_eq!(
            FuzzyInterpretation::new(Vec::<String>::new()),
            Err(ModelError::EmptyDomain)
        );
        assert!(matches!(
            FuzzyInterpretation::new(["x", "x"]),
            Err(ModelError::DuplicateElement(_))
        ));
    }

    #[test]
    fn fim_roundtrip() {
        let text = "domain: e0 e1\nindividual: a -> e0\nconcept: A e0 1/100\nrole: R1 e0 e1 1\n";
        let m = FuzzyInterpretation::from_fim(text).unwrap();
        assert_eq!(m.concept_value("A", ElementId(0)), d("1/100"));
        assert!(m.role_value("R1", ElementId(0), ElementId(1)).is_one());
        assert_eq!(m.individual("a"), Some(ElementId(0)));
        assert_eq!(m.to_fim(), text);
    }

    #[test]
    fn fim_errors() {
        let e = FuzzyInterpretation::from_fim("concept: A e0 1").unwrap_err();
        assert!(matches!(e, ModelError::Format { line: 1, .. }));
        let e = FuzzyInterpretation::from_fim("domain: e0\nconcept: A e9 1").unwrap_err();
        assert!(matches!(e, ModelError::Format { line: 2, .. }));
        let e = FuzzyInterpretation::from_fim("domain: e0\nconcept: A e0 3/2").unwrap_err();
        assert!(matches!(e, ModelError::Format { line: 2, .. }));
        let e = FuzzyInterpretation::from_fim("# nothing\n").unwrap_err();
        assert!(matches!(e, ModelError::Format { .. }));
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut m = FuzzyInterpretation::new(["e0"]).unwrap();
        m.set_concept("A", ElementId(0), d("1/2"));
        m.set_concept("A", ElementId(0), Degree::zero());
        assert_eq!(m.to_fim(), "domain: e0\n");
    }
}
