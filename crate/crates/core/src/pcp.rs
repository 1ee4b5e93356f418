//! Post correspondence instances, the palindrome transform, base-(s+1)
//! word encodings and bounded brute-force solvers.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::degree::Degree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PcpError {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("instance has no pairs")]
    NoPairs,
    #[error("pair {0}: words must be nonempty (empty list entries are not supported)")]
    EmptyWord(usize),
    #[error("symbol {symbol} is outside the alphabet 1..={s}")]
    SymbolOutOfRange { symbol: u32, s: u32 },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("search cap of {0} explored sequences reached")]
    LimitExceeded(u64),
    #[error("max length must be at least 1")]
    ZeroLength,
}

/// A word over `{1, ..., s}`, stored as symbol values.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    fn check(&self, s: u32) -> Result<(), PcpError> {
        match self.0.iter().find(|&&c| c == 0 || c > s) {
            Some(&symbol) => Err(PcpError::SymbolOutOfRange { symbol, s }),
            None => Ok(()),
        }
    }

    /// Digit string for `s <= 9`, dot-separated symbols otherwise.
    pub fn render(&self, s: u32) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        if s <= 9 {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    /// Accepts `12111` or `1.2.11`. When `s > 9` symbols are always
    /// dot-separated, so `12` is the single symbol twelve.
    pub fn parse(text: &str, s: u32) -> Option<Word> {
        if text.is_empty() {
            return Some(Word::empty());
        }
        if s > 9 || text.contains('.') {
            text.split('.')
                .map(|p| p.parse::<u32>().ok().filter(|_| !p.starts_with('+')))
                .collect::<Option<Vec<_>>>()
                .map(Word)
        } else {
            text.chars()
                .map(|c| c.to_digit(10))
                .collect::<Option<Vec<_>>>()
                .map(Word)
        }
    }
}

impl From<&str> for Word {
    /// Panics on non-digit input; meant for literals.
    fn from(text: &str) -> Word {
        Word::parse(text, 9).unwrap_or_else(|| panic!("invalid word literal `{text}`"))
    }
}

/// Character reversal.
pub fn palindrome(v: &Word) -> Word {
    Word(v.0.iter().rev().copied().collect())
}

/// An instance: two equally long lists of nonempty words over `{1..s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcpInstance {
    s: u32,
    pairs: Vec<(Word, Word)>,
}

impl PcpInstance {
    pub fn new(s: u32, pairs: Vec<(Word, Word)>) -> Result<Self, PcpError> {
        if s == 0 {
            return Err(PcpError::EmptyAlphabet);
        }
        if pairs.is_empty() {
            return Err(PcpError::NoPairs);
        }
        for (i, (v, w)) in pairs.iter().enumerate() {
            if v.is_empty() || w.is_empty() {
                return Err(PcpError::EmptyWord(i + 1));
            }
            v.check(s)?;
            w.check(s)?;
        }
        Ok(PcpInstance { s, pairs })
    }

    /// Convenience constructor from digit strings.
    pub fn from_strs(s: u32, pairs: &[(&str, &str)]) -> Result<Self, PcpError> {
        let pairs = pairs
            .iter()
            .map(|&(v, w)| {
                let parse = |t: &str| {
                    Word::parse(t, s).ok_or(PcpError::Format {
                        line: 0,
                        message: format!("bad word `{t}`"),
                    })
                };
                Ok((parse(v)?, parse(w)?))
            })
            .collect::<Result<Vec<_>, PcpError>>()?;
        Self::new(s, pairs)
    }

    pub fn alphabet_size(&self) -> u32 {
        self.s
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    /// Pair `i`, 1-based.
    pub fn pair(&self, i: usize) -> &(Word, Word) {
        &self.pairs[i - 1]
    }

    /// `s + 1`, the encoding base.
    pub fn base(&self) -> BigUint {
        BigUint::from(self.s) + 1u32
    }

    /// Parses the `.pcp` format: a header `s p`, then `p` lines `v w`.
    pub fn parse(text: &str) -> Result<Self, PcpError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let fail = |line, message: String| PcpError::Format { line, message };
        let (hline, header) = lines
            .next()
            .ok_or_else(|| fail(1, "missing header `s p`".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let [s, p] = nums.as_slice() else {
            return Err(fail(hline, format!("expected `s p`, found `{header}`")));
        };
        let s: u32 = s
            .parse()
            .map_err(|_| fail(hline, format!("bad alphabet size `{s}`")))?;
        let p: usize = p
            .parse()
            .map_err(|_| fail(hline, format!("bad pair count `{p}`")))?;
        let mut pairs = Vec::with_capacity(p);
        for (line, l) in lines.by_ref().take(p) {
            let ws: Vec<&str> = l.split_whitespace().collect();
            let [v, w] = ws.as_slice() else {
                return Err(fail(line, format!("expected two words, found `{l}`")));
            };
            let word =
                |t: &str| Word::parse(t, s).ok_or_else(|| fail(line, format!("bad word `{t}`")));
            pairs.push((word(v)?, word(w)?));
        }
        if pairs.len() != p {
            return Err(fail(
                text.lines().count(),
                format!("expected {p} pairs, found {}", pairs.len()),
            ));
        }
        if let Some((line, l)) = lines.next() {
            return Err(fail(line, format!("unexpected trailing line `{l}`")));
        }
        Self::new(s, pairs)
    }

    /// Concatenation `v_{i1} ... v_{ik}` and the same for `w` (1-based indices).
    pub fn concat_forward(&self, seq: &[usize]) -> (Word, Word) {
        let mut v = Vec::new();
        let mut w = Vec::new();
        for &i in seq {
            let (a, b) = self.pair(i);
            v.extend_from_slice(&a.0);
            w.extend_from_slice(&b.0);
        }
        (Word(v), Word(w))
    }

    /// Concatenation `v_{ik} ... v_{i1}` and the same for `w`.
    pub fn concat_reverse(&self, seq: &[usize]) -> (Word, Word) {
        let mut v = Vec::new();
        let mut w = Vec::new();
        for &i in seq.iter().rev() {
            let (a, b) = self.pair(i);
            v.extend_from_slice(&a.0);
            w.extend_from_slice(&b.0);
        }
        (Word(v), Word(w))
    }
}

impl fmt::Display for PcpInstance {
    /// The `.pcp` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.s, self.pairs.len())?;
        for (v, w) in &self.pairs {
            writeln!(f, "{} {}", v.render(self.s), w.render(self.s))?;
        }
        Ok(())
    }
}

/// Applies [`palindrome`] to every word; maps PCP solutions to RPCP solutions.
pub fn to_rpcp(inst: &PcpInstance) -> PcpInstance {
    PcpInstance {
        s: inst.s,
        pairs: inst
            .pairs
            .iter()
            .map(|(v, w)| (palindrome(v), palindrome(w)))
            .collect(),
    }
}

/// `0.v` in base `s + 1`: `sum_j v[j] * (s+1)^-j`. The empty word encodes to 0.
pub fn encode_word(v: &Word, s: u32) -> Result<Degree, PcpError> {
    if s == 0 {
        return Err(PcpError::EmptyAlphabet);
    }
    v.check(s)?;
    let base = BigInt::from(s) + 1u32;
    let mut num = BigInt::zero();
    for &c in &v.0 {
        num = num * &base + BigInt::from(c);
    }
    let den = base.pow(v.len() as u32);
    Ok(Degree::from_rational(BigRational::new(num, den)).expect("zero-free encoding below 1"))
}

/// `encode(prefix) + (s+1)^-|prefix| * tail`, which equals
/// `encode(prefix ++ tail_word)` when `tail = encode(tail_word)`.
pub fn prepend_encode(prefix: &Word, tail: &Degree, s: u32) -> Result<Degree, PcpError> {
    let head = encode_word(prefix, s)?;
    let shift = (BigUint::from(s) + 1u32).pow(prefix.len() as u32);
    Ok(head
        .checked_add(&tail.div_int(&shift))
        .expect("tail below 1 keeps the sum below 1"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// 1-based pair indices.
    Solved(Vec<usize>),
    NotFoundUpTo(usize),
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&[usize]> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            SolveOutcome::NotFoundUpTo(_) => None,
        }
    }
}

pub const DEFAULT_MAX_EXPLORED: u64 = 10_000_000;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Reverse,
}

/// Breadth-first search in shortest-then-lexicographic order. Sequences
/// whose top and bottom words already disagree on their common part are
/// pruned, since no extension can repair them.
fn solve(
    inst: &PcpInstance,
    max_len: usize,
    max_explored: u64,
    dir: Direction,
) -> Result<SolveOutcome, PcpError> {
    if max_len == 0 {
        return Err(PcpError::ZeroLength);
    }
    // (sequence, unmatched overhang, overhang belongs to top)
    let mut queue: VecDeque<(Vec<usize>, Vec<u32>, bool)> = VecDeque::new();
    queue.push_back((Vec::new(), Vec::new(), true));
    let mut explored: u64 = 0;
    while let Some((seq, over, top)) = queue.pop_front() {
        if seq.len() == max_len {
            continue;
        }
        for i in 1..=inst.len() {
            explored += 1;
            if explored > max_explored {
                return Err(PcpError::LimitExceeded(max_explored));
            }
            let (v, w) = inst.pair(i);
            // Forward appends words on the right; reverse prepends them on
            // the left, which is appending to the reversed strings.
            let (mut t, mut b): (Vec<u32>, Vec<u32>) = if top {
                (over.clone(), Vec::new())
            } else {
                (Vec::new(), over.clone())
            };
            match dir {
                Direction::Forward => {
                    t.extend_from_slice(&v.0);
                    b.extend_from_slice(&w.0);
                }
                Direction::Reverse => {
                    t.extend(v.0.iter().rev());
                    b.extend(w.0.iter().rev());
                }
            }
            let common = t.len().min(b.len());
            if t[..common] != b[..common] {
                continue;
            }
            let mut next = seq.clone();
            next.push(i);
            if t.len() == b.len() {
                return Ok(SolveOutcome::Solved(next));
            }
            let (over, top) = if t.len() > b.len() {
                (t[common..].to_vec(), true)
            } else {
                (b[common..].to_vec(), false)
            };
            queue.push_back((next, over, top));
        }
    }
    Ok(SolveOutcome::NotFoundUpTo(max_len))
}

/// Shortest (then lexicographically least) `i1..ik`, `k <= max_len`, with
/// `v_{i1}...v_{ik} = w_{i1}...w_{ik}`.
pub fn solve_pcp(
    inst: &PcpInstance,
    max_len: usize,
    max_explored: u64,
) -> Result<SolveOutcome, PcpError> {
    solve(inst, max_len, max_explored, Direction::Forward)
}

/// Like [`solve_pcp`] but with words concatenated right to left:
/// `v_{ik}...v_{i1} = w_{ik}...w_{i1}`.
pub fn solve_rpcp(
    inst: &PcpInstance,
    max_len: usize,
    max_explored: u64,
) -> Result<SolveOutcome, PcpError> {
    solve(inst, max_len, max_explored, Direction::Reverse)
}

/// Dotted form of a 1-based index sequence, e.g. `2.1.1.3`.
pub fn dotted(seq: &[usize]) -> String {
    seq.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(".")
}
