//! Shared generators and independent oracles for the integration tests.
//!
//! The oracles here deliberately avoid the library's own helpers: degrees are
//! computed on raw `BigRational`s, quantifiers scan the full domain, and PCP
//! checks build plain strings.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

use lukalc::concept::Concept;
use lukalc::degree::Degree;
use lukalc::interp::{ElementId, FuzzyInterpretation};
use lukalc::pcp::{PcpInstance, Word};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn deg(n: i64, d: i64) -> Degree {
    Degree::new(n, d).expect("degree in range")
}

/// Degrees with denominators up to `max_den`, endpoints included.
pub fn degree_strategy(max_den: i64) -> impl Strategy<Value = Degree> {
    (1..=max_den).prop_flat_map(|d| (0..=d).prop_map(move |n| deg(n, d)))
}

pub fn random_degree(rng: &mut impl Rng, max_den: i64) -> Degree {
    let d = rng.gen_range(1..=max_den);
    deg(rng.gen_range(0..=d), d)
}

pub fn concept_strategy(
    concepts: &'static [&'static str],
    roles: &'static [&'static str],
) -> impl Strategy<Value = Concept> {
    let leaf = prop_oneof![
        Just(Concept::Top),
        Just(Concept::Bottom),
        proptest::sample::select(concepts).prop_map(Concept::atomic),
    ];
    leaf.prop_recursive(4, 32, 2, move |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Concept::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Concept::or(a, b)),
            inner.clone().prop_map(Concept::not),
            (proptest::sample::select(roles), inner.clone())
                .prop_map(|(r, c)| Concept::exists(r, c)),
            (proptest::sample::select(roles), inner.clone())
                .prop_map(|(r, c)| Concept::forall(r, c)),
            (2u32..6, inner.clone())
                .prop_map(|(n, c)| Concept::scale(BigUint::from(n), c).unwrap()),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Concept::iff(a, b)),
        ]
    })
}

/// A model over `n` elements with every listed concept and role assigned
/// uniformly from the grid `{0, 1/k, ..., 1}`.
pub fn model_strategy(
    n: usize,
    k: i64,
    concepts: &'static [&'static str],
    roles: &'static [&'static str],
) -> impl Strategy<Value = FuzzyInterpretation> {
    let cells = concepts.len() * n + roles.len() * n * n;
    proptest::collection::vec(0..=k, cells).prop_map(move |vals| {
        let mut m = FuzzyInterpretation::new((0..n).map(|i| format!("e{i}"))).unwrap();
        let mut it = vals.into_iter();
        for c in concepts {
            for x in 0..n {
                m.set_concept(c, ElementId(x), deg(it.next().unwrap(), k));
            }
        }
        for r in roles {
            for x in 0..n {
                for y in 0..n {
                    m.set_role(r, ElementId(x), ElementId(y), deg(it.next().unwrap(), k));
                }
            }
        }
        m
    })
}

fn clamp01(x: BigRational) -> BigRational {
    if x < BigRational::zero() {
        BigRational::zero()
    } else if x > BigRational::one() {
        BigRational::one()
    } else {
        x
    }
}

/// Direct transcription of the semantics: quantifiers range over the whole
/// domain, with no use of stored successor lists or caching.
pub fn reference_eval(m: &FuzzyInterpretation, c: &Concept, x: usize) -> BigRational {
    let one = BigRational::one;
    match c {
        Concept::Top => one(),
        Concept::Bottom => BigRational::zero(),
        Concept::Atomic(a) => m.concept_value(a, ElementId(x)).value().clone(),
        Concept::And(a, b) => clamp01(reference_eval(m, a, x) + reference_eval(m, b, x) - one()),
        Concept::Or(a, b) => clamp01(reference_eval(m, a, x) + reference_eval(m, b, x)),
        Concept::Not(a) => one() - reference_eval(m, a, x),
        Concept::Scale(n, a) => {
            clamp01(BigRational::from_integer(BigInt::from(n.clone())) * reference_eval(m, a, x))
        }
        Concept::Exists(r, a) => (0..m.len())
            .map(|y| {
                let rv = m.role_value(r, ElementId(x), ElementId(y)).value().clone();
                clamp01(rv + reference_eval(m, a, y) - one())
            })
            .max()
            .unwrap_or_else(BigRational::zero),
        Concept::Forall(r, a) => (0..m.len())
            .map(|y| {
                let rv = m.role_value(r, ElementId(x), ElementId(y)).value().clone();
                clamp01(one() - rv + reference_eval(m, a, y))
            })
            .min()
            .unwrap_or_else(one),
    }
}

/// Random instance over `{1..s}` with `1..=max_pairs` pairs of nonempty
/// words of length `<= max_len`.
pub fn random_instance(
    rng: &mut impl Rng,
    s: u32,
    max_pairs: usize,
    max_len: usize,
) -> PcpInstance {
    let p = rng.gen_range(1..=max_pairs);
    let mut word = || {
        Word(
            (0..rng.gen_range(1..=max_len))
                .map(|_| rng.gen_range(1..=s))
                .collect::<Vec<_>>(),
        )
    };
    let pairs = (0..p).map(|_| (word(), word())).collect();
    PcpInstance::new(s, pairs).unwrap()
}

fn text(w: &Word) -> String {
    w.symbols().iter().map(|c| format!("{c},")).collect()
}

/// `v_{i1}..v_{ik} == w_{i1}..w_{ik}`, built as strings.
pub fn forward_equal(inst: &PcpInstance, seq: &[usize]) -> bool {
    let v: String = seq.iter().map(|&i| text(&inst.pairs()[i - 1].0)).collect();
    let w: String = seq.iter().map(|&i| text(&inst.pairs()[i - 1].1)).collect();
    v == w
}

/// `v_{ik}..v_{i1} == w_{ik}..w_{i1}`, built as strings.
pub fn reverse_equal(inst: &PcpInstance, seq: &[usize]) -> bool {
    let v: String = seq
        .iter()
        .rev()
        .map(|&i| text(&inst.pairs()[i - 1].0))
        .collect();
    let w: String = seq
        .iter()
        .rev()
        .map(|&i| text(&inst.pairs()[i - 1].1))
        .collect();
    v == w
}

/// Every nonempty sequence over `1..=p` of length `<= max_len`, shortest
/// first, lexicographic within a length.
pub fn all_sequences(p: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|s| {
                (1..=p).map(move |i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Unpruned exhaustive RPCP search.
pub fn brute_rpcp(inst: &PcpInstance, max_len: usize) -> Option<Vec<usize>> {
    all_sequences(inst.len(), max_len)
        .into_iter()
        .find(|s| reverse_equal(inst, s))
}

pub fn brute_pcp(inst: &PcpInstance, max_len: usize) -> Option<Vec<usize>> {
    all_sequences(inst.len(), max_len)
        .into_iter()
        .find(|s| forward_equal(inst, s))
}

/// `sum_j v[j] / (s+1)^j` accumulated term by term.
pub fn encode_oracle(symbols: &[u32], s: u32) -> BigRational {
    let base = BigInt::from(s + 1);
    let mut scale = BigInt::one();
    let mut acc = BigRational::zero();
    for &c in symbols {
        scale *= &base;
        acc += BigRational::new(BigInt::from(c), scale.clone());
    }
    acc
}

pub fn classic() -> PcpInstance {
    PcpInstance::from_strs(2, &[("1", "111"), ("12111", "12"), ("12", "2")]).unwrap()
}
