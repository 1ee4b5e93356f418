//! Compiles an RPCP instance into the ontology `O` (always satisfiable) and
//! its extension `O'`, which is witnessed-satisfiable exactly when the
//! instance has no solution.
//!
//! Vocabulary: concepts `V W V1 V2 W1 W2 A`, roles `R1..Rp`, individual `a`.

use num_bigint::BigUint;
use thiserror::Error;

use crate::concept::{Axiom, Concept, KnowledgeBase};
use crate::degree::{negation, Degree};
use crate::pcp::{encode_word, PcpInstance};

pub const V: &str = "V";
pub const W: &str = "W";
pub const V1: &str = "V1";
pub const V2: &str = "V2";
pub const W1: &str = "W1";
pub const W2: &str = "W2";
pub const A: &str = "A";
pub const INDIVIDUAL: &str = "a";

/// The seven concept names, in the order used by reports.
pub const CONCEPT_NAMES: [&str; 7] = [V, W, V1, V2, W1, W2, A];

pub fn role_name(i: usize) -> String {
    format!("R{i}")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("epsilon grade must lie strictly between 0 and 1, got {0}")]
    Epsilon(Degree),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionConfig {
    epsilon: Degree,
}

impl ReductionConfig {
    pub fn new(epsilon: Degree) -> Result<Self, ConfigError> {
        if epsilon.is_zero() || epsilon.is_one() {
            return Err(ConfigError::Epsilon(epsilon));
        }
        Ok(ReductionConfig { epsilon })
    }

    /// Lower bound for `A` at the root individual.
    pub fn epsilon(&self) -> &Degree {
        &self.epsilon
    }
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig {
            epsilon: Degree::new(1, 100).expect("1/100"),
        }
    }
}

fn atom(n: &str) -> Concept {
    Concept::atomic(n)
}

fn gci(lhs: Concept, rhs: Concept, grade: Degree) -> Axiom {
    Axiom::gci(lhs, rhs, grade).expect("reduction grades are positive")
}

fn scaled(n: &BigUint, c: Concept) -> Concept {
    Concept::scale(n.clone(), c).expect("coefficient is a positive power")
}

/// `(s+1)^k`.
pub fn coefficient(inst: &PcpInstance, k: usize) -> BigUint {
    inst.base().pow(k as u32)
}

/// The eleven axioms for pair `i` (1-based), in listing order.
pub fn build_tbox_i(inst: &PcpInstance, i: usize) -> Vec<Axiom> {
    let s = inst.alphabet_size();
    let (v, w) = inst.pair(i);
    let r = role_name(i);
    let cv = coefficient(inst, v.len());
    let cw = coefficient(inst, w.len());
    let cm = coefficient(inst, v.len().max(w.len()));
    let ev = encode_word(v, s).expect("validated instance");
    let ew = encode_word(w, s).expect("validated instance");
    let one = Degree::one;
    let all = |c: Concept| Concept::forall(r.as_str(), c);
    let some = |c: Concept| Concept::exists(r.as_str(), c);
    vec![
        gci(Concept::Top, some(Concept::Top), one()),
        gci(atom(V), scaled(&cv, all(atom(V1))), one()),
        gci(scaled(&cv, some(atom(V1))), atom(V), one()),
        gci(atom(W), scaled(&cw, all(atom(W1))), one()),
        gci(scaled(&cw, some(atom(W1))), atom(W), one()),
        gci(Concept::Top, all(atom(V2)), ev.clone()),
        gci(Concept::Top, all(Concept::not(atom(V2))), negation(&ev)),
        gci(Concept::Top, all(atom(W2)), ew.clone()),
        gci(Concept::Top, all(Concept::not(atom(W2))), negation(&ew)),
        gci(atom(A), scaled(&cm, all(atom(A))), one()),
        gci(scaled(&cm, some(atom(A))), atom(A), one()),
    ]
}

/// `V = V1 or V2` and `W = W1 or W2`, each as two inclusions.
fn base_tbox() -> Vec<Axiom> {
    let mut out = Vec::with_capacity(4);
    for (x, x1, x2) in [(V, V1, V2), (W, W1, W2)] {
        let sum = Concept::or(atom(x1), atom(x2));
        out.push(gci(atom(x), sum.clone(), Degree::one()));
        out.push(gci(sum, atom(x), Degree::one()));
    }
    out
}

fn abox(cfg: &ReductionConfig) -> Vec<Axiom> {
    let ca =
        |c: Concept, g: Degree| Axiom::concept_assertion(INDIVIDUAL, c, g).expect("positive grade");
    vec![
        ca(Concept::not(atom(V)), Degree::one()),
        ca(Concept::not(atom(W)), Degree::one()),
        ca(atom(A), cfg.epsilon.clone()),
        ca(Concept::not(atom(A)), negation(&cfg.epsilon)),
    ]
}

/// `top <= all Ri.(not (V <-> W) or not A)`.
pub fn prime_axiom(i: usize) -> Axiom {
    let body = Concept::or(
        Concept::not(Concept::iff(atom(V), atom(W))),
        Concept::not(atom(A)),
    );
    gci(
        Concept::Top,
        Concept::forall(role_name(i), body),
        Degree::one(),
    )
}

/// The ontology `O`: base TBox, the per-pair TBoxes, and the ABox.
pub fn build_kb(inst: &PcpInstance, cfg: &ReductionConfig) -> KnowledgeBase {
    let mut kb: KnowledgeBase = base_tbox().into_iter().collect();
    for i in 1..=inst.len() {
        kb.extend(build_tbox_i(inst, i));
    }
    kb.extend(abox(cfg));
    kb
}

/// `O` plus one [`prime_axiom`] per pair.
pub fn build_kb_prime(inst: &PcpInstance, cfg: &ReductionConfig) -> KnowledgeBase {
    let mut kb: KnowledgeBase = base_tbox().into_iter().collect();
    for i in 1..=inst.len() {
        kb.extend(build_tbox_i(inst, i));
    }
    kb.extend((1..=inst.len()).map(prime_axiom));
    kb.extend(abox(cfg));
    kb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_kb, print_axiom, print_kb};

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    fn single() -> PcpInstance {
        PcpInstance::from_strs(2, &[("1", "2")]).unwrap()
    }

    #[test]
    fn tbox_i_shapes() {
        let t = build_tbox_i(&single(), 1);
        assert_eq!(t.len(), 11);
        let printed: Vec<String> = t.iter().map(print_axiom).collect();
        assert_eq!(printed[0], "(gci top (some R1 top) 1)");
        assert_eq!(printed[1], "(gci V (scale 3 (all R1 V1)) 1)");
        assert_eq!(printed[2], "(gci (scale 3 (some R1 V1)) V 1)");
        assert_eq!(printed[5], "(gci top (all R1 V2) 1/3)");
        assert_eq!(printed[6], "(gci top (all R1 (not V2)) 2/3)");
        assert_eq!(printed[7], "(gci top (all R1 W2) 2/3)");
        assert_eq!(printed[8], "(gci top (all R1 (not W2)) 1/3)");
        assert_eq!(printed[9], "(gci A (scale 3 (all R1 A)) 1)");
    }

    #[test]
    fn kb_counts() {
        let cfg = ReductionConfig::default();
        assert_eq!(build_kb(&single(), &cfg).len(), 19);
        let two = PcpInstance::from_strs(2, &[("1", "2"), ("21", "1")]).unwrap();
        let kb = build_kb(&two, &cfg);
        let kbp = build_kb_prime(&two, &cfg);
        assert_eq!(kb.len(), 4 + 22 + 4);
        assert_eq!(kbp.len(), kb.len() + 2);
        assert!(kb.axioms().all(|ax| kbp.contains(ax)));
    }

    #[test]
    fn prime_axiom_text() {
        assert_eq!(
            print_axiom(&prime_axiom(2)),
            "(gci top (all R2 (or (not (iff V W)) (not A))) 1)"
        );
    }

    #[test]
    fn grades_in_range_and_roundtrip() {
        let inst =
            PcpInstance::from_strs(2, &[("1", "111"), ("12111", "12"), ("12", "2")]).unwrap();
        let kb = build_kb_prime(&inst, &ReductionConfig::default());
        assert!(kb.axioms().all(|ax| !ax.grade().is_zero()));
        let text = print_kb(&kb);
        let back = parse_kb(&text).unwrap();
        assert_eq!(back, kb);
        assert_eq!(print_kb(&back), text);
    }

    #[test]
    fn abox_uses_epsilon() {
        let cfg = ReductionConfig::new(d("1/9")).unwrap();
        let kb = build_kb(&single(), &cfg);
        let grades: Vec<String> = kb.abox().iter().map(|a| a.grade().to_string()).collect();
        assert_eq!(grades, vec!["1", "1", "1/9", "8/9"]);
        assert!(ReductionConfig::new(Degree::one()).is_err());
        assert!(ReductionConfig::new(Degree::zero()).is_err());
    }
}
