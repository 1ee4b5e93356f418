//! The prefix-tree canonical model of the reduction, truncated at a finite
//! depth, together with the homomorphism construction into other models and
//! an end-to-end check of the solution/unsatisfiability correspondence.
//!
//! Nodes are index sequences over `1..=p`, written `eps` for the root and
//! dotted otherwise (`2.1.1.3`). Domain order is breadth-first, then
//! lexicographic. Every reduction concept has quantifier depth 1, so values
//! at interior nodes (length `< depth`) are exact; GCIs are checked only
//! there because frontier nodes have no successors.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::concept::{Axiom, Concept, KnowledgeBase};
use crate::degree::Degree;
use crate::interp::{
    check_kb_scoped, ElementId, EvalError, Evaluator, FuzzyInterpretation, KbReport,
};
use crate::pcp::{
    dotted, encode_word, prepend_encode, solve_rpcp, PcpError, PcpInstance, SolveOutcome,
};
use crate::reduction::{
    build_kb, build_kb_prime, coefficient, prime_axiom, role_name, ReductionConfig, A,
    CONCEPT_NAMES, INDIVIDUAL, V, V1, V2, W, W1, W2,
};

pub const DEFAULT_MAX_NODES: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("canonical model would have {nodes} nodes, above the cap of {cap}")]
    NodeLimit { nodes: String, cap: usize },
    #[error("name `{0}` is outside the reduction vocabulary")]
    Vocabulary(String),
    #[error("interior-node checking needs quantifier depth <= 1, found {0}")]
    QuantifierDepth(usize),
    #[error("element `{0}` is not a tree node name (`eps` or a dotted index path)")]
    NotANode(String),
    #[error("individual `{INDIVIDUAL}` is not mapped in the target model")]
    MissingIndividual,
    #[error("no degree-1 {role}-successor of element `{element}` (image of node {node})")]
    NoSuccessor {
        node: String,
        role: String,
        element: String,
    },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Pcp(#[from] PcpError),
}

/// `eps` for the root, otherwise the dotted path.
pub fn node_name(seq: &[usize]) -> String {
    if seq.is_empty() {
        "eps".to_string()
    } else {
        dotted(seq)
    }
}

pub fn parse_node_name(name: &str) -> Option<Vec<usize>> {
    if name == "eps" {
        return Some(Vec::new());
    }
    name.split('.')
        .map(|p| {
            p.parse::<usize>()
                .ok()
                .filter(|&i| i >= 1 && !p.starts_with('+'))
        })
        .collect()
}

/// All sequences of length `<= depth` over `1..=p`, breadth-first then
/// lexicographic.
fn tree_nodes(p: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut nodes = vec![Vec::new()];
    let mut level_start = 0;
    for _ in 0..depth {
        let level_end = nodes.len();
        for n in level_start..level_end {
            for i in 1..=p {
                let mut child = nodes[n].clone();
                child.push(i);
                nodes.push(child);
            }
        }
        level_start = level_end;
    }
    nodes
}

fn node_count(p: usize, depth: usize) -> BigUint {
    (0..=depth).map(|j| BigUint::from(p).pow(j as u32)).sum()
}

#[derive(Debug, Clone)]
pub struct CanonicalModel {
    instance: PcpInstance,
    depth: usize,
    config: ReductionConfig,
    nodes: Vec<Vec<usize>>,
    model: FuzzyInterpretation,
}

impl CanonicalModel {
    pub fn instance(&self) -> &PcpInstance {
        &self.instance
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn config(&self) -> &ReductionConfig {
        &self.config
    }

    pub fn model(&self) -> &FuzzyInterpretation {
        &self.model
    }

    pub fn into_model(self) -> FuzzyInterpretation {
        self.model
    }

    /// Node sequences in domain order; `nodes()[k]` is element `k`.
    pub fn nodes(&self) -> &[Vec<usize>] {
        &self.nodes
    }

    pub fn element(&self, seq: &[usize]) -> Option<ElementId> {
        if seq.len() > self.depth || seq.iter().any(|&i| i == 0 || i > self.instance.len()) {
            return None;
        }
        self.model.element(&node_name(seq))
    }

    pub fn value(&self, concept: &str, seq: &[usize]) -> Option<Degree> {
        self.element(seq)
            .map(|e| self.model.concept_value(concept, e))
    }

    /// Elements at depth `< self.depth`.
    pub fn interior(&self) -> Vec<ElementId> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, s)| s.len() < self.depth)
            .map(|(k, _)| ElementId(k))
            .collect()
    }
}

/// Materializes every node of length `<= depth` with its exact values.
pub fn build_canonical(
    inst: &PcpInstance,
    depth: usize,
    cfg: &ReductionConfig,
    max_nodes: usize,
) -> Result<CanonicalModel, CanonicalError> {
    if depth == 0 {
        return Err(CanonicalError::ZeroDepth);
    }
    let count = node_count(inst.len(), depth);
    if count > BigUint::from(max_nodes) {
        return Err(CanonicalError::NodeLimit {
            nodes: count.to_string(),
            cap: max_nodes,
        });
    }
    let s = inst.alphabet_size();
    let nodes = tree_nodes(inst.len(), depth);
    let mut model =
        FuzzyInterpretation::new(nodes.iter().map(|n| node_name(n))).expect("distinct node names");
    model.set_interior_depth(Some(depth));
    model
        .map_individual(INDIVIDUAL, ElementId(0))
        .expect("first individual");
    model.set_concept(A, ElementId(0), cfg.epsilon().clone());

    // V and W at the parent are needed for V1, W1 and the prepend step.
    let mut vw: Vec<(Degree, Degree)> = Vec::with_capacity(nodes.len());
    vw.push((Degree::zero(), Degree::zero()));
    let p = inst.len();
    for (k, seq) in nodes.iter().enumerate().skip(1) {
        let e = ElementId(k);
        // parent index: breadth-first layout puts the parent at (k - 1) / p
        let parent = (k - 1) / p;
        let last = *seq.last().expect("non-root");
        let (v, w) = inst.pair(last);
        let (pv, pw) = vw[parent].clone();
        let val_v = prepend_encode(v, &pv, s)?;
        let val_w = prepend_encode(w, &pw, s)?;
        model.set_concept(V, e, val_v.clone());
        model.set_concept(W, e, val_w.clone());
        model.set_concept(V1, e, pv.div_int(&coefficient(inst, v.len())));
        model.set_concept(W1, e, pw.div_int(&coefficient(inst, w.len())));
        model.set_concept(V2, e, encode_word(v, s)?);
        model.set_concept(W2, e, encode_word(w, s)?);
        let exponent: usize = seq
            .iter()
            .map(|&j| {
                let (vj, wj) = inst.pair(j);
                vj.len().max(wj.len())
            })
            .sum();
        model.set_concept(A, e, cfg.epsilon().div_int(&coefficient(inst, exponent)));
        let parent_e = ElementId(parent);
        model.set_role(&role_name(last), parent_e, e, Degree::one());
        vw.push((val_v, val_w));
    }
    Ok(CanonicalModel {
        instance: inst.clone(),
        depth,
        config: cfg.clone(),
        nodes,
        model,
    })
}

fn check_vocabulary(kb: &KnowledgeBase, p: usize) -> Result<(), CanonicalError> {
    let sig = kb.signature();
    if let Some(c) = sig
        .concepts
        .iter()
        .find(|c| !CONCEPT_NAMES.contains(&c.as_str()))
    {
        return Err(CanonicalError::Vocabulary(c.clone()));
    }
    if let Some(r) = sig
        .roles
        .iter()
        .find(|r| !(1..=p).any(|i| role_name(i) == **r))
    {
        return Err(CanonicalError::Vocabulary(r.clone()));
    }
    if let Some(a) = sig.individuals.iter().find(|a| a.as_str() != INDIVIDUAL) {
        return Err(CanonicalError::Vocabulary(a.clone()));
    }
    Ok(())
}

/// Checks `kb` against the canonical model with GCI infima over interior
/// nodes only.
pub fn check_canonical(m: &CanonicalModel, kb: &KnowledgeBase) -> Result<KbReport, CanonicalError> {
    check_vocabulary(kb, m.instance.len())?;
    let qd = kb.quantifier_depth();
    if qd > 1 {
        return Err(CanonicalError::QuantifierDepth(qd));
    }
    Ok(check_kb_scoped(&m.model, kb, Some(&m.interior()))?)
}

/// Elements of a tree-shaped model whose node path is shorter than `depth`.
pub fn interior_scope(
    model: &FuzzyInterpretation,
    depth: usize,
) -> Result<Vec<ElementId>, CanonicalError> {
    let mut out = Vec::new();
    for e in model.elements() {
        let name = model.element_name(e);
        let seq =
            parse_node_name(name).ok_or_else(|| CanonicalError::NotANode(name.to_string()))?;
        if seq.len() < depth {
            out.push(e);
        }
    }
    Ok(out)
}

/// The map from tree nodes into a target model, in canonical domain order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: Vec<(Vec<usize>, ElementId)>,
}

impl Homomorphism {
    pub fn get(&self, seq: &[usize]) -> Option<ElementId> {
        self.map.iter().find(|(s, _)| s == seq).map(|&(_, e)| e)
    }
}

/// First place where the target model disagrees with the canonical values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub node: Vec<usize>,
    pub element: String,
    pub name: String,
    pub expected: Degree,
    pub actual: Degree,
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "node {} (element `{}`): {} expected {}, found {}",
            node_name(&self.node),
            self.element,
            self.name,
            self.expected,
            self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomomorphismOutcome {
    Verified(Homomorphism),
    Counterexample(CounterexampleReport),
}

/// Builds `g` from tree nodes of length `<= depth` into `target`: the root
/// goes to the individual `a`, and `g(mu i)` is the first element in domain
/// order with `Ri(g(mu), y) = 1`. Each node is then checked to carry the
/// canonical values of all seven concept names, and each edge to have role
/// degree 1.
pub fn build_homomorphism(
    target: &FuzzyInterpretation,
    inst: &PcpInstance,
    cfg: &ReductionConfig,
    depth: usize,
) -> Result<HomomorphismOutcome, CanonicalError> {
    let canonical = build_canonical(inst, depth, cfg, node_count_usize(inst.len(), depth))?;
    let root = target
        .individual(INDIVIDUAL)
        .ok_or(CanonicalError::MissingIndividual)?;
    let mut map: Vec<(Vec<usize>, ElementId)> = Vec::with_capacity(canonical.nodes.len());
    map.push((Vec::new(), root));
    let mut k = 0;
    while k < map.len() {
        let (seq, g) = map[k].clone();
        let here = canonical.element(&seq).expect("node exists");
        for name in CONCEPT_NAMES {
            let expected = canonical.model.concept_value(name, here);
            let actual = target.concept_value(name, g);
            if expected != actual {
                return Ok(HomomorphismOutcome::Counterexample(CounterexampleReport {
                    node: seq,
                    element: target.element_name(g).to_string(),
                    name: name.to_string(),
                    expected,
                    actual,
                }));
            }
        }
        if seq.len() < depth {
            for i in 1..=inst.len() {
                let role = role_name(i);
                let child = target
                    .successors(&role, g)
                    .find(|(_, d)| d.is_one())
                    .map(|(y, _)| y)
                    .ok_or_else(|| CanonicalError::NoSuccessor {
                        node: node_name(&seq),
                        role: role.clone(),
                        element: target.element_name(g).to_string(),
                    })?;
                let mut next = seq.clone();
                next.push(i);
                let actual = target.role_value(&role, g, child);
                if !actual.is_one() {
                    return Ok(HomomorphismOutcome::Counterexample(CounterexampleReport {
                        node: next,
                        element: target.element_name(child).to_string(),
                        name: role,
                        expected: Degree::one(),
                        actual,
                    }));
                }
                map.push((next, child));
            }
        }
        k += 1;
    }
    Ok(HomomorphismOutcome::Verified(Homomorphism { map }))
}

fn node_count_usize(p: usize, depth: usize) -> usize {
    usize::try_from(node_count(p, depth)).unwrap_or(usize::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Verdict {
    /// A solution exists within the depth, and the canonical model violates
    /// the extra GCI for its last index at the image of its parent node.
    Solved {
        depth: usize,
        sequence: Vec<usize>,
        axiom_index: usize,
        violated_axiom: Axiom,
        /// Value of the violated axiom's right-hand side at `g(parent)`.
        value: Degree,
        /// Infimum over all interior nodes.
        gci_value: Degree,
    },
    /// No solution up to `depth`, and the truncated canonical model satisfies
    /// the extended ontology. Not a proof of unsolvability.
    ConsistentToDepth { depth: usize, report: KbReport },
}

impl Verdict {
    pub fn is_solved(&self) -> bool {
        matches!(self, Verdict::Solved { .. })
    }

    /// `verdict=solved|consistent-to-depth depth=<d> [sequence=<dotted>] [value=<p/q>]`
    pub fn summary(&self) -> String {
        match self {
            Verdict::Solved {
                depth,
                sequence,
                value,
                ..
            } => format!(
                "verdict=solved depth={depth} sequence={} value={value}",
                dotted(sequence)
            ),
            Verdict::ConsistentToDepth { depth, .. } => {
                format!("verdict=consistent-to-depth depth={depth}")
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Solved {
                sequence,
                axiom_index,
                violated_axiom,
                value,
                gci_value,
                ..
            } => {
                let parent = &sequence[..sequence.len() - 1];
                writeln!(f, "RPCP solution found: {}", dotted(sequence))?;
                writeln!(
                    f,
                    "V and W coincide at node {}, so the extended ontology has no witnessed model.",
                    node_name(sequence)
                )?;
                writeln!(f, "violated axiom #{axiom_index}: {violated_axiom}")?;
                writeln!(
                    f,
                    "  right-hand side at node {}: {value}",
                    node_name(parent)
                )?;
                write!(f, "  axiom value over interior nodes: {gci_value}")
            }
            Verdict::ConsistentToDepth { depth, report } => {
                writeln!(f, "no RPCP solution of length <= {depth}")?;
                writeln!(
                    f,
                    "the canonical model truncated at depth {depth} satisfies all {} axioms of the extended ontology on its interior nodes",
                    report.entries.len()
                )?;
                write!(
                    f,
                    "this is not a proof of unsolvability: solutions longer than {depth} are not ruled out"
                )
            }
        }
    }
}

/// Caps shared by the verification pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
    pub max_explored: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: DEFAULT_MAX_NODES,
            max_explored: crate::pcp::DEFAULT_MAX_EXPLORED,
        }
    }
}

/// Builds the canonical model to `depth`, checks it against `O` and `O'`,
/// and reconciles the result with a bounded RPCP search.
pub fn verify_theorem(
    inst: &PcpInstance,
    depth: usize,
    cfg: &ReductionConfig,
    limits: Limits,
) -> Result<Verdict, CanonicalError> {
    let m = build_canonical(inst, depth, cfg, limits.max_nodes)?;
    let base = check_canonical(&m, &build_kb(inst, cfg))?;
    if let Some(bad) = base.violations().next() {
        return Err(CanonicalError::Inconsistent(format!(
            "canonical model violates {} (value {})",
            bad.axiom, bad.value
        )));
    }
    let report = check_canonical(&m, &build_kb_prime(inst, cfg))?;

    // First node, in domain order, where V and W coincide.
    let coincide = m.nodes.iter().enumerate().skip(1).find_map(|(k, seq)| {
        let e = ElementId(k);
        (m.model.concept_value(V, e) == m.model.concept_value(W, e)).then(|| seq.clone())
    });
    let solver = solve_rpcp(inst, depth, limits.max_explored)?;

    match (solver, coincide) {
        (SolveOutcome::Solved(seq), Some(node)) if seq == node => {
            let g = match build_homomorphism(m.model(), inst, cfg, depth)? {
                HomomorphismOutcome::Verified(g) => g,
                HomomorphismOutcome::Counterexample(c) => {
                    return Err(CanonicalError::Inconsistent(format!(
                        "canonical model does not map onto itself: {c}"
                    )))
                }
            };
            let axiom_index = *seq.last().expect("nonempty solution");
            let violated_axiom = prime_axiom(axiom_index);
            let Axiom::Gci { rhs, .. } = &violated_axiom else {
                unreachable!("prime axioms are GCIs")
            };
            let parent = g.get(&seq[..seq.len() - 1]).expect("parent is mapped");
            let value = Evaluator::new(m.model()).eval(rhs, parent)?;
            let entry = report.get(&violated_axiom).ok_or_else(|| {
                CanonicalError::Inconsistent("extra axiom missing from report".into())
            })?;
            if value.is_one() || entry.satisfied {
                return Err(CanonicalError::Inconsistent(format!(
                    "solution {} found but axiom #{axiom_index} holds",
                    dotted(&seq)
                )));
            }
            Ok(Verdict::Solved {
                depth,
                sequence: seq,
                axiom_index,
                violated_axiom,
                value,
                gci_value: entry.value.clone(),
            })
        }
        (SolveOutcome::NotFoundUpTo(_), None) => {
            if let Some(bad) = report.violations().next() {
                return Err(CanonicalError::Inconsistent(format!(
                    "no solution up to depth {depth}, yet {} has value {}",
                    bad.axiom, bad.value
                )));
            }
            Ok(Verdict::ConsistentToDepth { depth, report })
        }
        (solver, node) => Err(CanonicalError::Inconsistent(format!(
            "solver returned {solver:?} but V = W first at {:?}",
            node.map(|n| node_name(&n))
        ))),
    }
}

/// `not (V <-> W)`.
pub fn distinguisher() -> Concept {
    Concept::not(Concept::iff(Concept::atomic(V), Concept::atomic(W)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcp::{to_rpcp, Word};

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    fn cfg() -> ReductionConfig {
        ReductionConfig::default()
    }

    fn classic_rpcp() -> PcpInstance {
        to_rpcp(&PcpInstance::from_strs(2, &[("1", "111"), ("12111", "12"), ("12", "2")]).unwrap())
    }

    #[test]
    fn node_names() {
        assert_eq!(node_name(&[]), "eps");
        assert_eq!(node_name(&[2, 1, 1, 3]), "2.1.1.3");
        assert_eq!(parse_node_name("eps"), Some(vec![]));
        assert_eq!(parse_node_name("2.1.1.3"), Some(vec![2, 1, 1, 3]));
        assert_eq!(parse_node_name("0.1"), None);
        assert_eq!(parse_node_name("e0"), None);
    }

    #[test]
    fn tree_order() {
        let nodes = tree_nodes(2, 2);
        let names: Vec<String> = nodes.iter().map(|n| node_name(n)).collect();
        assert_eq!(names, vec!["eps", "1", "2", "1.1", "1.2", "2.1", "2.2"]);
    }

    #[test]
    fn single_pair_values() {
        let inst = PcpInstance::from_strs(2, &[("1", "2")]).unwrap();
        let m = build_canonical(&inst, 1, &cfg(), DEFAULT_MAX_NODES).unwrap();
        assert_eq!(m.nodes().len(), 2);
        let at = |c: &str| m.value(c, &[1]).unwrap();
        assert_eq!(at(V), d("1/3"));
        assert_eq!(at(W), d("2/3"));
        assert_eq!(at(V2), d("1/3"));
        assert_eq!(at(W2), d("2/3"));
        assert_eq!(at(V1), Degree::zero());
        assert_eq!(at(W1), Degree::zero());
        assert_eq!(at(A), d("1/300"));
    }

    #[test]
    fn root_values() {
        let m = build_canonical(&classic_rpcp(), 2, &cfg(), DEFAULT_MAX_NODES).unwrap();
        for c in [V, W, V1, V2, W1, W2] {
            assert!(m.value(c, &[]).unwrap().is_zero());
        }
        assert_eq!(m.value(A, &[]).unwrap(), d("1/100"));
        assert_eq!(m.model().individual(INDIVIDUAL), Some(ElementId(0)));
    }

    #[test]
    fn classic_node_two() {
        let m = build_canonical(&classic_rpcp(), 4, &cfg(), DEFAULT_MAX_NODES).unwrap();
        assert_eq!(m.value(V, &[2]).unwrap(), d("124/243"));
        assert_eq!(
            m.value(V, &[2]).unwrap(),
            encode_word(&Word::from("11121"), 2).unwrap()
        );
        assert_eq!(m.nodes().len(), 121);
        assert_eq!(m.interior().len(), 40);
    }

    #[test]
    fn node_cap() {
        assert!(matches!(
            build_canonical(&classic_rpcp(), 4, &cfg(), 100),
            Err(CanonicalError::NodeLimit { .. })
        ));
        assert_eq!(
            build_canonical(&classic_rpcp(), 0, &cfg(), 100).unwrap_err(),
            CanonicalError::ZeroDepth
        );
    }

    #[test]
    fn check_rejects_foreign_vocabulary_and_deep_kbs() {
        let m = build_canonical(&classic_rpcp(), 2, &cfg(), DEFAULT_MAX_NODES).unwrap();
        let kb = crate::syntax::parse_kb("tbox: (gci B top)").unwrap();
        assert_eq!(
            check_canonical(&m, &kb),
            Err(CanonicalError::Vocabulary("B".into()))
        );
        let kb = crate::syntax::parse_kb("tbox: (gci top (all R9 A))").unwrap();
        assert_eq!(
            check_canonical(&m, &kb),
            Err(CanonicalError::Vocabulary("R9".into()))
        );
        let kb = crate::syntax::parse_kb("tbox: (gci top (all R1 (all R1 A)))").unwrap();
        assert_eq!(
            check_canonical(&m, &kb),
            Err(CanonicalError::QuantifierDepth(2))
        );
    }

    #[test]
    fn homomorphism_identity() {
        let inst = classic_rpcp();
        let m = build_canonical(&inst, 3, &cfg(), DEFAULT_MAX_NODES).unwrap();
        let HomomorphismOutcome::Verified(g) =
            build_homomorphism(m.model(), &inst, &cfg(), 3).unwrap()
        else {
            panic!("expected a verified map");
        };
        for (k, (seq, e)) in g.map.iter().enumerate() {
            assert_eq!(&m.nodes()[k], seq);
            assert_eq!(e.0, k);
        }
    }

    #[test]
    fn homomorphism_missing_successor() {
        let inst = classic_rpcp();
        let m = build_canonical(&inst, 2, &cfg(), DEFAULT_MAX_NODES).unwrap();
        let mut target = m.model().clone();
        target.set_role("R2", ElementId(0), ElementId(2), Degree::new(1, 2).unwrap());
        assert!(matches!(
            build_homomorphism(&target, &inst, &cfg(), 2),
            Err(CanonicalError::NoSuccessor { .. })
        ));
        let bare = FuzzyInterpretation::new(["x"]).unwrap();
        assert_eq!(
            build_homomorphism(&bare, &inst, &cfg(), 1),
            Err(CanonicalError::MissingIndividual)
        );
    }

    #[test]
    fn verdicts() {
        let one = PcpInstance::from_strs(1, &[("1", "1")]).unwrap();
        let v = verify_theorem(&one, 1, &cfg(), Limits::default()).unwrap();
        assert!(matches!(&v, Verdict::Solved { sequence, .. } if sequence == &vec![1]));

        let none = PcpInstance::from_strs(2, &[("1", "2")]).unwrap();
        let v = verify_theorem(&none, 6, &cfg(), Limits::default()).unwrap();
        assert!(matches!(v, Verdict::ConsistentToDepth { depth: 6, .. }));
        assert_eq!(v.summary(), "verdict=consistent-to-depth depth=6");
        assert!(v.to_string().contains("not a proof"));
    }

    #[test]
    fn classic_verdict() {
        let v = verify_theorem(&classic_rpcp(), 4, &cfg(), Limits::default()).unwrap();
        let Verdict::Solved {
            sequence,
            axiom_index,
            value,
            gci_value,
            ..
        } = &v
        else {
            panic!("expected solved, got {v:?}");
        };
        assert_eq!(sequence, &vec![2, 1, 1, 3]);
        assert_eq!(*axiom_index, 3);
        assert!(!value.is_one());
        assert!(gci_value <= value);
        assert!(v
            .summary()
            .starts_with("verdict=solved depth=4 sequence=2.1.1.3 value="));
    }

    #[test]
    fn interior_scope_from_names() {
        let m = build_canonical(&classic_rpcp(), 2, &cfg(), DEFAULT_MAX_NODES).unwrap();
        assert_eq!(interior_scope(m.model(), 2).unwrap(), m.interior());
        let other = FuzzyInterpretation::new(["e0"]).unwrap();
        assert!(matches!(
            interior_scope(&other, 1),
            Err(CanonicalError::NotANode(_))
        ));
    }
}
