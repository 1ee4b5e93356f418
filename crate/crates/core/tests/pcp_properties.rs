mod common;

use common::{
    brute_pcp, brute_rpcp, encode_oracle, forward_equal, q, random_instance, reverse_equal,
};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lukalc::pcp::{
    encode_word, palindrome, prepend_encode, solve_pcp, solve_rpcp, to_rpcp, PcpInstance,
    SolveOutcome, Word, DEFAULT_MAX_EXPLORED,
};

fn word(s: u32, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(1..=s, 1..=max_len).prop_map(Word)
}

fn instance() -> impl Strategy<Value = PcpInstance> {
    (2u32..=3, 1usize..=3).prop_flat_map(|(s, p)| {
        proptest::collection::vec((word(s, 3), word(s, 3)), p)
            .prop_map(move |pairs| PcpInstance::new(s, pairs).unwrap())
    })
}

fn instance_and_sequence() -> impl Strategy<Value = (PcpInstance, Vec<usize>)> {
    instance().prop_flat_map(|inst| {
        let p = inst.len();
        (Just(inst), proptest::collection::vec(1..=p, 1..=6))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn palindrome_reverses_solutions((inst, seq) in instance_and_sequence()) {
        prop_assert_eq!(forward_equal(&inst, &seq), reverse_equal(&to_rpcp(&inst), &seq));
        let (v, w) = inst.concat_forward(&seq);
        let (rv, rw) = to_rpcp(&inst).concat_reverse(&seq);
        prop_assert_eq!(palindrome(&v), rv);
        prop_assert_eq!(palindrome(&w), rw);
    }

    #[test]
    fn palindrome_laws(a in word(4, 6), b in word(4, 6)) {
        prop_assert_eq!(palindrome(&palindrome(&a)), a.clone());
        prop_assert_eq!(palindrome(&a.concat(&b)), palindrome(&b).concat(&palindrome(&a)));
    }

    #[test]
    fn encoding_matches_series(w in word(9, 8), s_extra in 0u32..3) {
        let s = 9 + s_extra;
        prop_assert_eq!(encode_word(&w, s).unwrap().into_rational(), encode_oracle(w.symbols(), s));
    }

    #[test]
    fn prepend_is_concatenation(a in word(3, 4), b in word(3, 4)) {
        let tail = encode_word(&b, 3).unwrap();
        prop_assert_eq!(prepend_encode(&a, &tail, 3).unwrap(), encode_word(&a.concat(&b), 3).unwrap());
    }

    #[test]
    fn text_roundtrip(inst in instance()) {
        let back = PcpInstance::parse(&inst.to_string()).unwrap();
        prop_assert_eq!(back, inst);
    }
}

#[test]
fn solvers_agree_with_brute_force_and_reversal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let inst = random_instance(&mut rng, 2, 3, 3);
        let pcp = solve_pcp(&inst, 5, DEFAULT_MAX_EXPLORED).unwrap();
        let rpcp = solve_rpcp(&to_rpcp(&inst), 5, DEFAULT_MAX_EXPLORED).unwrap();
        let brute = brute_pcp(&inst, 5);
        assert_eq!(pcp.solution(), brute.as_deref(), "{inst}");
        assert_eq!(rpcp.solution(), brute.as_deref(), "{inst}");
        assert_eq!(
            solve_rpcp(&inst, 5, DEFAULT_MAX_EXPLORED)
                .unwrap()
                .solution(),
            brute_rpcp(&inst, 5).as_deref()
        );
    }
}

#[test]
fn encoding_is_injective_with_gap() {
    // all nonempty words over {1,2} of length <= 4
    let mut words = Vec::new();
    for len in 1..=4u32 {
        for code in 0..(1u32 << len) {
            words.push(Word((0..len).map(|j| 1 + ((code >> j) & 1)).collect()));
        }
    }
    let mut codes: Vec<BigRational> = words
        .iter()
        .map(|w| encode_word(w, 2).unwrap().into_rational())
        .collect();
    codes.sort();
    let min_gap = codes.windows(2).map(|p| &p[1] - &p[0]).min().unwrap();
    assert!(min_gap > BigRational::from_integer(0.into()));
    assert!(min_gap >= q(1, 81));
}

#[test]
fn classic_instance() {
    let inst = common::classic();
    assert_eq!(
        solve_pcp(&inst, 4, DEFAULT_MAX_EXPLORED).unwrap(),
        SolveOutcome::Solved(vec![2, 1, 1, 3])
    );
    assert_eq!(
        solve_rpcp(&to_rpcp(&inst), 4, DEFAULT_MAX_EXPLORED).unwrap(),
        SolveOutcome::Solved(vec![2, 1, 1, 3])
    );
    assert_eq!(
        solve_pcp(&inst, 3, DEFAULT_MAX_EXPLORED).unwrap(),
        SolveOutcome::NotFoundUpTo(3)
    );
}

#[test]
fn solver_cap_reports_limit() {
    let inst = PcpInstance::from_strs(2, &[("1", "1"), ("2", "2")]).unwrap();
    assert!(solve_pcp(&inst, 3, 1).unwrap().solution().is_some());
    // v always outgrows w while staying a consistent prefix: never pruned, never solved
    let hard = PcpInstance::from_strs(2, &[("11", "1"), ("111", "11")]).unwrap();
    assert!(solve_pcp(&hard, 30, 10).is_err());
}

#[test]
fn large_alphabet_words_are_dotted() {
    let inst = PcpInstance::parse("12 1\n10.2 12\n").unwrap();
    assert_eq!(inst.pair(1).0, Word(vec![10, 2]));
    assert_eq!(inst.to_string(), "12 1\n10.2 12\n");
    assert!(PcpInstance::parse("2 1\n13 1\n").is_err());
    assert!(PcpInstance::parse("2 2\n1 1\n").is_err());
}
