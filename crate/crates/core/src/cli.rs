//! Command-line front end.
//!
//! Exit codes: 0 success or satisfied, 1 definitive negative verdict,
//! 2 inconclusive (bound reached), 3 usage or format error. The last line
//! written to stdout is always a `key=value` summary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canonical::{self, interior_scope, verify_theorem, CanonicalError, Limits, Verdict};
use crate::degree::Degree;
use crate::interp::{self, check_kb_scoped, ElementId, FuzzyInterpretation, SearchError};
use crate::pcp::{self, dotted, to_rpcp, PcpError, PcpInstance, SolveOutcome, Word};
use crate::reduction::{build_kb, build_kb_prime, ReductionConfig};
use crate::syntax::{parse_concept, parse_kb, print_kb};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

const FORMATS: &str = "\
FILE FORMATS

Degrees are exact rationals `p/q` in lowest terms with 0 <= p <= q, or `0` / `1`.

Knowledge base (.flalc), `#` starts a comment, grades default to 1:
  tbox:
    (gci <concept> <concept> <degree>)
  abox:
    (instance <ind> <concept> <degree>)
    (related <ind> <ind> <role> <degree>)

Concepts:
  top | bot | NAME | (and C C ...) | (or C C ...) | (not C) | (some R C) | (all R C)
  | (scale N C) | (impl C D) | (iff C D) | (min C D ...) | (max C D ...)

Model (.fim), unlisted values are 0:
  domain: e0 e1 e2
  interior-depth: d          (optional; set by `canonical`)
  individual: a -> e0
  concept: A e0 1/100
  role: R1 e0 e1 1

Instance (.pcp): header `s p`, then p lines `v w`; words are digit strings
over 1..s, or `.`-separated symbols when s > 9.

SUMMARY LINE

The last stdout line is space-separated key=value pairs, e.g.
  verdict=solved depth=4 sequence=2.1.1.3 value=p/q

EXIT CODES

  0 success / satisfied   1 definitive negative verdict
  2 inconclusive bound    3 usage or format error";

#[derive(Debug, Parser)]
#[command(name = "lukalc", version, about = "Łukasiewicz fuzzy ALC toolkit", after_help = FORMATS)]
struct Cli {
    /// Seed for randomized generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on canonical-model nodes.
    #[arg(long, global = true, default_value_t = canonical::DEFAULT_MAX_NODES)]
    max_nodes: usize,
    /// Cap on enumerated interpretations / explored solver sequences.
    #[arg(long, global = true, default_value_t = interp::DEFAULT_MAX_ENUM)]
    max_enum: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search for a PCP (or, with --reverse, RPCP) solution up to a length bound.
    SolvePcp {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        reverse: bool,
    },
    /// Rewrite an instance, optionally reversing every word.
    Transform {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        pal: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compile an RPCP instance into a knowledge base.
    Compile {
        #[arg(long)]
        instance: PathBuf,
        /// Reverse every word first, so a PCP instance can be compiled directly.
        #[arg(long)]
        pal: bool,
        /// Emit the extended ontology.
        #[arg(long)]
        prime: bool,
        #[arg(long)]
        epsilon: Option<Degree>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the depth-truncated canonical model.
    Canonical {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        epsilon: Option<Degree>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a concept at one element of a model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        concept: String,
        #[arg(long)]
        at: String,
    },
    /// Check every axiom of a knowledge base against a model.
    Check {
        #[arg(long)]
        kb: PathBuf,
        #[arg(long)]
        model: PathBuf,
        /// Range GCIs only over tree nodes shorter than this depth.
        #[arg(long)]
        interior_depth: Option<usize>,
    },
    /// Compile, build the canonical model, check it, and solve, up to a depth.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        pal: bool,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        epsilon: Option<Degree>,
    },
    /// Exhaustively search small grid-valued models of a knowledge base.
    GridSearch {
        #[arg(long)]
        kb: PathBuf,
        /// Domain size.
        #[arg(long)]
        size: usize,
        /// Grid denominator; degrees range over {0, 1/k, ..., 1}.
        #[arg(long)]
        denominator: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a random instance (uses --seed).
    GenInstance {
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        #[arg(long, default_value_t = 3)]
        pairs: usize,
        #[arg(long, default_value_t = 3)]
        max_word_len: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Limit(String),
}

impl From<CanonicalError> for CliError {
    fn from(e: CanonicalError) -> Self {
        match e {
            CanonicalError::NodeLimit { .. } | CanonicalError::Pcp(PcpError::LimitExceeded(_)) => {
                CliError::Limit(e.to_string())
            }
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PcpError> for CliError {
    fn from(e: PcpError) -> Self {
        match e {
            PcpError::LimitExceeded(_) => CliError::Limit(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_err(path: &Path, e: impl ToString) -> CliError {
    CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn load_instance(path: &Path) -> Result<PcpInstance, CliError> {
    PcpInstance::parse(&read(path)?).map_err(|e| parse_err(path, e))
}

fn load_model(path: &Path) -> Result<FuzzyInterpretation, CliError> {
    FuzzyInterpretation::from_fim(&read(path)?).map_err(|e| parse_err(path, e))
}

fn config(epsilon: Option<Degree>) -> Result<ReductionConfig, CliError> {
    match epsilon {
        None => Ok(ReductionConfig::default()),
        Some(e) => ReductionConfig::new(e).map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn io_out(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let limits = Limits {
        max_nodes: cli.max_nodes,
        max_explored: cli.max_enum,
    };
    match cli.command {
        Command::SolvePcp {
            instance,
            max_len,
            reverse,
        } => {
            let inst = load_instance(&instance)?;
            let outcome = if reverse {
                pcp::solve_rpcp(&inst, max_len, cli.max_enum)?
            } else {
                pcp::solve_pcp(&inst, max_len, cli.max_enum)?
            };
            let kind = if reverse { "rpcp" } else { "pcp" };
            match outcome {
                SolveOutcome::Solved(seq) => {
                    let (v, _) = if reverse {
                        inst.concat_reverse(&seq)
                    } else {
                        inst.concat_forward(&seq)
                    };
                    writeln!(out, "{kind} solution: {}", dotted(&seq)).map_err(io_out)?;
                    writeln!(out, "common word: {}", v.render(inst.alphabet_size()))
                        .map_err(io_out)?;
                    writeln!(
                        out,
                        "result=solved problem={kind} sequence={} length={}",
                        dotted(&seq),
                        seq.len()
                    )
                    .map_err(io_out)?;
                    Ok(EXIT_OK)
                }
                SolveOutcome::NotFoundUpTo(k) => {
                    writeln!(
                        out,
                        "no {kind} solution of length <= {k} (not a proof of unsolvability)"
                    )
                    .map_err(io_out)?;
                    writeln!(out, "result=not-found problem={kind} max-len={k}").map_err(io_out)?;
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Transform {
            instance,
            pal,
            out: dest,
        } => {
            let inst = load_instance(&instance)?;
            let inst = if pal { to_rpcp(&inst) } else { inst };
            write(&dest, &inst.to_string())?;
            writeln!(
                out,
                "status=ok transform={} pairs={} out={}",
                if pal { "pal" } else { "identity" },
                inst.len(),
                dest.display()
            )
            .map_err(io_out)?;
            Ok(EXIT_OK)
        }
        Command::Compile {
            instance,
            pal,
            prime,
            epsilon,
            out: dest,
        } => {
            let cfg = config(epsilon)?;
            let inst = load_instance(&instance)?;
            let inst = if pal { to_rpcp(&inst) } else { inst };
            let kb = if prime {
                build_kb_prime(&inst, &cfg)
            } else {
                build_kb(&inst, &cfg)
            };
            write(&dest, &print_kb(&kb))?;
            writeln!(
                out,
                "status=ok ontology={} axioms={} out={}",
                if prime { "prime" } else { "base" },
                kb.len(),
                dest.display()
            )
            .map_err(io_out)?;
            Ok(EXIT_OK)
        }
        Command::Canonical {
            instance,
            depth,
            epsilon,
            out: dest,
        } => {
            let cfg = config(epsilon)?;
            let inst = load_instance(&instance)?;
            let m = canonical::build_canonical(&inst, depth, &cfg, cli.max_nodes)?;
            write(&dest, &m.model().to_fim())?;
            writeln!(
                out,
                "status=ok nodes={} depth={depth} out={}",
                m.nodes().len(),
                dest.display()
            )
            .map_err(io_out)?;
            Ok(EXIT_OK)
        }
        Command::Eval { model, concept, at } => {
            let m = load_model(&model)?;
            let c =
                parse_concept(&concept).map_err(|e| CliError::Usage(format!("--concept: {e}")))?;
            let e = m
                .element(&at)
                .ok_or_else(|| CliError::Usage(format!("--at: unknown element `{at}`")))?;
            let v = interp::eval_concept(&m, &c, e).map_err(|e| CliError::Usage(e.to_string()))?;
            writeln!(out, "value={v}").map_err(io_out)?;
            Ok(EXIT_OK)
        }
        Command::Check {
            kb,
            model,
            interior_depth,
        } => {
            let k = parse_kb(&read(&kb)?).map_err(|e| parse_err(&kb, e))?;
            let m = load_model(&model)?;
            let scope: Option<Vec<ElementId>> = match interior_depth.or(m.interior_depth()) {
                None => None,
                Some(d) => {
                    let qd = k.quantifier_depth();
                    if qd > 1 {
                        return Err(CanonicalError::QuantifierDepth(qd).into());
                    }
                    Some(interior_scope(&m, d)?)
                }
            };
            let report = check_kb_scoped(&m, &k, scope.as_deref())
                .map_err(|e| CliError::Usage(e.to_string()))?;
            for entry in &report.entries {
                writeln!(
                    out,
                    "{} {} value={}",
                    if entry.satisfied { "ok  " } else { "FAIL" },
                    entry.axiom,
                    entry.value
                )
                .map_err(io_out)?;
            }
            let violated = report.violations().count();
            let verdict = if violated == 0 {
                "satisfied"
            } else {
                "unsatisfied"
            };
            writeln!(
                out,
                "verdict={verdict} axioms={} violated={violated}",
                report.entries.len()
            )
            .map_err(io_out)?;
            Ok(if violated == 0 {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Verify {
            instance,
            pal,
            depth,
            epsilon,
        } => {
            let cfg = config(epsilon)?;
            let inst = load_instance(&instance)?;
            let inst = if pal { to_rpcp(&inst) } else { inst };
            let verdict = verify_theorem(&inst, depth, &cfg, limits)?;
            writeln!(out, "{verdict}").map_err(io_out)?;
            writeln!(out, "{}", verdict.summary()).map_err(io_out)?;
            Ok(match verdict {
                Verdict::Solved { .. } => EXIT_NEGATIVE,
                Verdict::ConsistentToDepth { .. } => EXIT_INCONCLUSIVE,
            })
        }
        Command::GridSearch {
            kb,
            size,
            denominator,
            out: dest,
        } => {
            let k = parse_kb(&read(&kb)?).map_err(|e| parse_err(&kb, e))?;
            match interp::grid_search(&k, size, denominator, cli.max_enum) {
                Ok(Some(m)) => {
                    match dest {
                        Some(dest) => write(&dest, &m.to_fim())?,
                        None => write!(out, "{}", m.to_fim()).map_err(io_out)?,
                    }
                    writeln!(out, "verdict=found size={size} denominator={denominator}")
                        .map_err(io_out)?;
                    Ok(EXIT_OK)
                }
                Ok(None) => {
                    writeln!(
                        out,
                        "no model on this grid (does not imply unsatisfiability)"
                    )
                    .map_err(io_out)?;
                    writeln!(
                        out,
                        "verdict=not-found size={size} denominator={denominator}"
                    )
                    .map_err(io_out)?;
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(e @ SearchError::LimitExceeded(_)) => Err(CliError::Limit(e.to_string())),
                Err(e) => Err(CliError::Usage(e.to_string())),
            }
        }
        Command::GenInstance {
            alphabet,
            pairs,
            max_word_len,
        } => {
            if alphabet == 0 || pairs == 0 || max_word_len == 0 {
                return Err(CliError::Usage(
                    "--alphabet, --pairs and --max-word-len must be at least 1".into(),
                ));
            }
            let inst = random_instance(
                &mut ChaCha8Rng::seed_from_u64(cli.seed),
                alphabet,
                pairs,
                max_word_len,
            );
            write!(out, "{inst}").map_err(io_out)?;
            writeln!(out, "status=ok seed={}", cli.seed).map_err(io_out)?;
            Ok(EXIT_OK)
        }
    }
}

/// A random instance with `pairs` pairs of words of length `1..=max_len`.
pub fn random_instance(
    rng: &mut impl Rng,
    alphabet: u32,
    pairs: usize,
    max_len: usize,
) -> PcpInstance {
    let word = |rng: &mut dyn rand::RngCore| {
        let len = rng.gen_range(1..=max_len);
        Word((0..len).map(|_| rng.gen_range(1..=alphabet)).collect())
    };
    let pairs = (0..pairs).map(|_| (word(rng), word(rng))).collect();
    PcpInstance::new(alphabet, pairs).expect("generated words are valid")
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let msg = e.render().to_string();
                    let first = msg.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(err, "{first}");
                    let _ = writeln!(out, "status=error kind=usage");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(CliError::Limit(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(out, "status=limit-exceeded");
            EXIT_INCONCLUSIVE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(out, "status=error kind=input");
            EXIT_USAGE
        }
    }
}
