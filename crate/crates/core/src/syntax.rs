//! S-expression syntax for concepts and the `.flalc` knowledge-base format.
//!
//! ```text
//! tbox:
//!   (gci <concept> <concept> <degree>)
//! abox:
//!   (instance <ind> <concept> <degree>)
//!   (related <ind> <ind> <role> <degree>)
//! ```
//!
//! Degrees may be omitted and default to 1. `#` starts a comment.

use std::fmt::Write as _;

use num_bigint::BigUint;
use thiserror::Error;

use crate::concept::{validate_name, AstError, Axiom, Concept, KnowledgeBase};
use crate::degree::{Degree, DegreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub kind: SyntaxErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEof,
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("`{op}` expects {expected} argument(s), found {found}")]
    Arity {
        op: String,
        expected: &'static str,
        found: usize,
    },
    #[error("invalid scale count `{0}` (must be an integer >= 1)")]
    BadScale(String),
    #[error(transparent)]
    Name(#[from] AstError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error("axiom grade must lie in (0, 1]")]
    ZeroGrade,
    #[error("section `{0}` appears twice")]
    DuplicateSection(String),
    #[error("`{form}` is not allowed in section `{section}`")]
    WrongSection { form: String, section: String },
    #[error("axiom outside of any section")]
    NoSection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut chars = line.char_indices().peekable();
        let mut col = 0usize;
        while let Some((_, c)) = chars.next() {
            col += 1;
            let start = col;
            match c {
                '(' => out.push(Token {
                    tok: Tok::Open,
                    line: lineno + 1,
                    column: start,
                }),
                ')' => out.push(Token {
                    tok: Tok::Close,
                    line: lineno + 1,
                    column: start,
                }),
                c if c.is_whitespace() => {}
                c => {
                    let mut atom = String::from(c);
                    while let Some(&(_, n)) = chars.peek() {
                        if n.is_whitespace() || n == '(' || n == ')' {
                            break;
                        }
                        atom.push(n);
                        chars.next();
                        col += 1;
                    }
                    out.push(Token {
                        tok: Tok::Atom(atom),
                        line: lineno + 1,
                        column: start,
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
enum Sexp {
    Atom(String, usize, usize),
    List(Vec<Sexp>, usize, usize),
}

impl Sexp {
    fn pos(&self) -> (usize, usize) {
        match self {
            Sexp::Atom(_, l, c) | Sexp::List(_, l, c) => (*l, *c),
        }
    }

    fn err(&self, kind: SyntaxErrorKind) -> SyntaxError {
        let (line, column) = self.pos();
        SyntaxError { line, column, kind }
    }
}

struct Reader {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Reader {
    fn new(text: &str) -> Self {
        let lines = text.lines().count().max(1);
        let last_len = text.lines().last().map_or(0, |l| l.chars().count());
        Reader {
            tokens: tokenize(text),
            pos: 0,
            end: (lines, last_len + 1),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eof(&self) -> SyntaxError {
        SyntaxError {
            line: self.end.0,
            column: self.end.1,
            kind: SyntaxErrorKind::UnexpectedEof,
        }
    }

    fn read(&mut self) -> Result<Sexp, SyntaxError> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.eof())?;
        self.pos += 1;
        match tok.tok {
            Tok::Atom(a) => Ok(Sexp::Atom(a, tok.line, tok.column)),
            Tok::Close => Err(SyntaxError {
                line: tok.line,
                column: tok.column,
                kind: SyntaxErrorKind::Unexpected(")".into()),
            }),
            Tok::Open => {
                let mut items = Vec::new();
                loop {
                    match self.peek() {
                        None => return Err(self.eof()),
                        Some(Token {
                            tok: Tok::Close, ..
                        }) => {
                            self.pos += 1;
                            return Ok(Sexp::List(items, tok.line, tok.column));
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
        }
    }
}

fn name_of(s: &Sexp) -> Result<String, SyntaxError> {
    match s {
        Sexp::Atom(a, ..) => {
            validate_name(a).map_err(|e| s.err(e.into()))?;
            Ok(a.clone())
        }
        Sexp::List(..) => Err(s.err(SyntaxErrorKind::Unexpected("(".into()))),
    }
}

fn arity(
    head: &Sexp,
    op: &str,
    args: &[Sexp],
    ok: bool,
    expected: &'static str,
) -> Result<(), SyntaxError> {
    if ok {
        Ok(())
    } else {
        Err(head.err(SyntaxErrorKind::Arity {
            op: op.to_string(),
            expected,
            found: args.len(),
        }))
    }
}

fn concept_of(s: &Sexp) -> Result<Concept, SyntaxError> {
    match s {
        Sexp::Atom(a, ..) => match a.as_str() {
            "top" => Ok(Concept::Top),
            "bot" => Ok(Concept::Bottom),
            _ => Ok(Concept::Atomic(name_of(s)?)),
        },
        Sexp::List(items, ..) => {
            let (head, args) = items
                .split_first()
                .ok_or_else(|| s.err(SyntaxErrorKind::Unexpected("()".into())))?;
            let op = match head {
                Sexp::Atom(op, ..) => op.as_str(),
                Sexp::List(..) => return Err(head.err(SyntaxErrorKind::Unexpected("(".into()))),
            };
            let concepts = |xs: &[Sexp]| xs.iter().map(concept_of).collect::<Result<Vec<_>, _>>();
            let fold = |xs: Vec<Concept>, f: fn(Concept, Concept) -> Concept| {
                let mut it = xs.into_iter();
                let first = it.next().expect("arity checked");
                it.fold(first, f)
            };
            match op {
                "and" | "or" | "min" | "max" => {
                    arity(head, op, args, args.len() >= 2, "at least 2")?;
                    let f: fn(Concept, Concept) -> Concept = match op {
                        "and" => Concept::and,
                        "or" => Concept::or,
                        "min" => Concept::min,
                        _ => Concept::max,
                    };
                    Ok(fold(concepts(args)?, f))
                }
                "impl" | "iff" => {
                    arity(head, op, args, args.len() == 2, "2")?;
                    let l = concept_of(&args[0])?;
                    let r = concept_of(&args[1])?;
                    Ok(if op == "impl" {
                        Concept::implies(l, r)
                    } else {
                        Concept::iff(l, r)
                    })
                }
                "not" => {
                    arity(head, op, args, args.len() == 1, "1")?;
                    Ok(Concept::not(concept_of(&args[0])?))
                }
                "some" | "all" => {
                    arity(head, op, args, args.len() == 2, "2")?;
                    let role = name_of(&args[0])?;
                    let c = concept_of(&args[1])?;
                    Ok(if op == "some" {
                        Concept::exists(role, c)
                    } else {
                        Concept::forall(role, c)
                    })
                }
                "scale" => {
                    arity(head, op, args, args.len() == 2, "2")?;
                    let n = match &args[0] {
                        Sexp::Atom(t, ..) if t.bytes().all(|b| b.is_ascii_digit()) => {
                            t.parse::<BigUint>().ok()
                        }
                        _ => None,
                    };
                    let bad = || {
                        let text = match &args[0] {
                            Sexp::Atom(t, ..) => t.clone(),
                            Sexp::List(..) => "(...)".into(),
                        };
                        args[0].err(SyntaxErrorKind::BadScale(text))
                    };
                    let n = n.ok_or_else(bad)?;
                    Concept::scale(n, concept_of(&args[1])?).map_err(|_| bad())
                }
                _ => Err(head.err(SyntaxErrorKind::UnknownOperator(op.to_string()))),
            }
        }
    }
}

fn degree_of(s: &Sexp) -> Result<Degree, SyntaxError> {
    match s {
        Sexp::Atom(a, ..) => a.parse::<Degree>().map_err(|e| s.err(e.into())),
        Sexp::List(..) => Err(s.err(SyntaxErrorKind::Unexpected("(".into()))),
    }
}

fn grade_of(s: Option<&Sexp>) -> Result<Degree, SyntaxError> {
    match s {
        None => Ok(Degree::one()),
        Some(s) => {
            let d = degree_of(s)?;
            if d.is_zero() {
                Err(s.err(SyntaxErrorKind::ZeroGrade))
            } else {
                Ok(d)
            }
        }
    }
}

/// Parses one concept from text. Trailing tokens are an error.
pub fn parse_concept(text: &str) -> Result<Concept, SyntaxError> {
    let mut r = Reader::new(text);
    let s = r.read()?;
    let c = concept_of(&s)?;
    if let Some(t) = r.peek() {
        return Err(SyntaxError {
            line: t.line,
            column: t.column,
            kind: SyntaxErrorKind::Unexpected(match &t.tok {
                Tok::Atom(a) => a.clone(),
                Tok::Open => "(".into(),
                Tok::Close => ")".into(),
            }),
        });
    }
    Ok(c)
}

fn axiom_of(s: &Sexp, section: Option<&str>) -> Result<Axiom, SyntaxError> {
    let items = match s {
        Sexp::List(items, ..) if !items.is_empty() => items,
        _ => return Err(s.err(SyntaxErrorKind::Unexpected(print_sexp_head(s)))),
    };
    let (head, args) = items.split_first().expect("nonempty");
    let op = match head {
        Sexp::Atom(op, ..) => op.as_str(),
        Sexp::List(..) => return Err(head.err(SyntaxErrorKind::Unexpected("(".into()))),
    };
    let section = section.ok_or_else(|| s.err(SyntaxErrorKind::NoSection))?;
    let expected_section = match op {
        "gci" => "tbox",
        "instance" | "related" => "abox",
        _ => return Err(head.err(SyntaxErrorKind::UnknownOperator(op.to_string()))),
    };
    if section != expected_section {
        return Err(head.err(SyntaxErrorKind::WrongSection {
            form: op.to_string(),
            section: section.to_string(),
        }));
    }
    let ax = match op {
        "gci" => {
            arity(head, op, args, matches!(args.len(), 2 | 3), "2 or 3")?;
            Axiom::gci(
                concept_of(&args[0])?,
                concept_of(&args[1])?,
                grade_of(args.get(2))?,
            )
        }
        "instance" => {
            arity(head, op, args, matches!(args.len(), 2 | 3), "2 or 3")?;
            Axiom::concept_assertion(
                name_of(&args[0])?,
                concept_of(&args[1])?,
                grade_of(args.get(2))?,
            )
        }
        _ => {
            arity(head, op, args, matches!(args.len(), 3 | 4), "3 or 4")?;
            Axiom::role_assertion(
                name_of(&args[0])?,
                name_of(&args[1])?,
                name_of(&args[2])?,
                grade_of(args.get(3))?,
            )
        }
    };
    ax.map_err(|e| s.err(e.into()))
}

fn print_sexp_head(s: &Sexp) -> String {
    match s {
        Sexp::Atom(a, ..) => a.clone(),
        Sexp::List(..) => "()".into(),
    }
}

/// Parses a `.flalc` knowledge base.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase, SyntaxError> {
    let mut r = Reader::new(text);
    let mut kb = KnowledgeBase::new();
    let mut section: Option<&'static str> = None;
    let mut seen_tbox = false;
    let mut seen_abox = false;
    while !r.at_end() {
        let s = r.read()?;
        if let Sexp::Atom(a, ..) = &s {
            let (name, seen) = match a.as_str() {
                "tbox:" => ("tbox", &mut seen_tbox),
                "abox:" => ("abox", &mut seen_abox),
                _ => return Err(s.err(SyntaxErrorKind::Unexpected(a.clone()))),
            };
            if *seen {
                return Err(s.err(SyntaxErrorKind::DuplicateSection(name.to_string())));
            }
            *seen = true;
            section = Some(name);
            continue;
        }
        kb.insert(axiom_of(&s, section)?);
    }
    Ok(kb)
}

/// Recognizes the exact shape produced by [`Concept::iff`].
fn as_iff(c: &Concept) -> Option<(&Concept, &Concept)> {
    let Concept::And(l, r) = c else { return None };
    let (Concept::Or(nl, b), Concept::Or(nr, a2)) = (l.as_ref(), r.as_ref()) else {
        return None;
    };
    let (Concept::Not(a), Concept::Not(b2)) = (nl.as_ref(), nr.as_ref()) else {
        return None;
    };
    (a == a2 && b == b2).then_some((a.as_ref(), b.as_ref()))
}

fn write_concept(c: &Concept, out: &mut String) {
    if let Some((a, b)) = as_iff(c) {
        out.push_str("(iff ");
        write_concept(a, out);
        out.push(' ');
        write_concept(b, out);
        out.push(')');
        return;
    }
    match c {
        Concept::Top => out.push_str("top"),
        Concept::Bottom => out.push_str("bot"),
        Concept::Atomic(a) => out.push_str(a),
        Concept::And(l, r) | Concept::Or(l, r) => {
            out.push_str(if matches!(c, Concept::And(..)) {
                "(and "
            } else {
                "(or "
            });
            write_concept(l, out);
            out.push(' ');
            write_concept(r, out);
            out.push(')');
        }
        Concept::Not(x) => {
            out.push_str("(not ");
            write_concept(x, out);
            out.push(')');
        }
        Concept::Exists(role, x) | Concept::Forall(role, x) => {
            out.push_str(if matches!(c, Concept::Exists(..)) {
                "(some "
            } else {
                "(all "
            });
            out.push_str(role);
            out.push(' ');
            write_concept(x, out);
            out.push(')');
        }
        Concept::Scale(n, x) => {
            let _ = write!(out, "(scale {n} ");
            write_concept(x, out);
            out.push(')');
        }
    }
}

/// Canonical text of a concept. Only the biconditional is re-sugared; every
/// other macro prints in its expanded form.
pub fn print_concept(c: &Concept) -> String {
    let mut out = String::new();
    write_concept(c, &mut out);
    out
}

pub fn print_axiom(ax: &Axiom) -> String {
    match ax {
        Axiom::Gci { lhs, rhs, grade } => {
            format!(
                "(gci {} {} {})",
                print_concept(lhs),
                print_concept(rhs),
                grade
            )
        }
        Axiom::ConceptAssertion {
            individual,
            concept,
            grade,
        } => format!("(instance {individual} {} {grade})", print_concept(concept)),
        Axiom::RoleAssertion {
            first,
            second,
            role,
            grade,
        } => format!("(related {first} {second} {role} {grade})"),
    }
}

pub fn print_kb(kb: &KnowledgeBase) -> String {
    let mut out = String::from("tbox:\n");
    for ax in kb.tbox() {
        let _ = writeln!(out, "  {}", print_axiom(ax));
    }
    out.push_str("abox:\n");
    for ax in kb.abox() {
        let _ = writeln!(out, "  {}", print_axiom(ax));
    }
    out
}
