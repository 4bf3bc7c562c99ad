//! The `braidmon` command line.
//!
//! Exit codes: 0 success, 1 negative answer (words differ, factorization
//! invalid, fingerprints distinguish, nothing found), 2 inconclusive or
//! budget exhausted, 64 usage error, 65 unreadable or malformed input file.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use braidmon_core::equivalence::{decide_equivalence, fingerprint_with_keys, EquivalenceBudget, EquivalenceVerdict};
use braidmon_core::factorization::{search_factorization, SearchLimits, SearchOutcome};
use braidmon_core::geometry::{
    branch_curve_invariants, check_consistency, hesse_dual_lines, intersection_lattice, ProjLine,
};
use braidmon_core::group::{enumerate_homs, group_order, simplify, zvk_presentation, FinitePresentation, HomQuery};
use braidmon_core::{canonical_form, equals, full_twist, BraidWord, Direction, Factorization};

use crate::formats::{self, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "braidmon",
    version,
    about = "Braid monodromy factorizations: normal forms, moves, equivalence, complement groups"
)]
struct Cli {
    /// `structured` prints one key=value pair per line.
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirectionArg {
    Left,
    Right,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Left => Direction::Left,
            DirectionArg::Right => Direction::Right,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Garside normal form of a braid word such as "1 -2 1".
    Nf {
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Whether two braid words are equal in the braid group.
    Eq {
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// The full twist (X_1 ⋯ X_{d-1})^d.
    Fulltwist { strands: usize },
    /// Checks a factorization file against its target.
    Validate { file: PathBuf },
    /// Applies one Hurwitz move and prints the resulting factorization.
    Move {
        file: PathBuf,
        /// One-based index of the left factor of the pair.
        index: usize,
        #[arg(value_enum)]
        direction: DirectionArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Conjugates every factor by one braid word.
    Conjugate {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        by: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Searches for a cuspidal factorization of the full twist with given exponents.
    Search {
        strands: usize,
        /// Comma-separated exponents, e.g. 3,1,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        profile: Vec<i64>,
        #[arg(long, default_value_t = 4)]
        max_conjugator_length: usize,
        #[arg(long, default_value_t = 5_000_000)]
        max_nodes: usize,
        #[arg(long, default_value_t = 4)]
        max_strands: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Invariants of a factorization under moves and simultaneous conjugation.
    Fingerprint {
        file: PathBuf,
        /// Also compute conjugacy keys, with this budget per factor.
        #[arg(long)]
        key_budget: Option<usize>,
    },
    /// Semi-decides whether two factorizations have the same type.
    Decide {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, default_value_t = 20_000)]
        max_states: usize,
        /// Default: twice the longest input factor normal form.
        #[arg(long)]
        max_factor_length: Option<usize>,
        #[arg(long, default_value_t = 2)]
        conjugator_length: usize,
        #[arg(long)]
        key_budget: Option<usize>,
    },
    /// Zariski–van Kampen presentation of a cuspidal factorization.
    Pi1 {
        file: PathBuf,
        /// Maximum number of generator eliminations.
        #[arg(long, default_value_t = 1_000)]
        simplify_budget: usize,
        #[arg(long)]
        no_simplify: bool,
    },
    /// Homomorphisms from a presented group to S_n.
    Homs {
        presentation: PathBuf,
        degree: usize,
        /// List every homomorphism rather than one per conjugacy class.
        #[arg(long)]
        all_conjugates: bool,
        #[arg(long)]
        epi: bool,
        #[arg(long)]
        transitive: bool,
        /// Generators must map to transpositions.
        #[arg(long)]
        transpositions: bool,
    },
    /// Order of a presented group by coset enumeration.
    Order {
        presentation: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
    },
    /// Intersection points of a line arrangement (default: the dual Hesse lines).
    Arrangement {
        /// One line per row as "a:b:c" over Q(mu).
        lines: Option<PathBuf>,
    },
    /// Branch-curve invariants for the m-canonical projection.
    Invariants { m: u64 },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Fail(i32, String);

impl From<FormatError> for Fail {
    fn from(e: FormatError) -> Self {
        Fail(EXIT_DATA, e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail(EXIT_USAGE, e.to_string())
}

fn data(e: impl std::fmt::Display) -> Fail {
    Fail(EXIT_DATA, e.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| data(format_args!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Factorization, Fail> {
    formats::parse_factorization(&read(path)?).map_err(|e| data(format_args!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<FinitePresentation, Fail> {
    formats::parse_presentation(&read(path)?).map_err(|e| data(format_args!("{}: {e}", path.display())))
}

fn word(strands: usize, s: &str) -> Result<BraidWord, Fail> {
    BraidWord::parse(strands, s).map_err(usage)
}

fn emit(f: &Factorization, output: Option<&Path>, out: &mut String) -> Result<(), Fail> {
    let text = formats::print_factorization(f);
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format_args!("{}: {e}", p.display()))),
        None => {
            out.push_str(&text);
            Ok(())
        }
    }
}

/// Runs the CLI on `args` (including the program name) without touching the
/// process streams.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = Output::default();
    match dispatch(cli, &mut out) {
        Ok(code) => out.code = code,
        Err(Fail(code, msg)) => {
            out.code = code;
            writeln!(out.stderr, "error: {msg}").unwrap();
        }
    }
    out
}

fn dispatch(cli: Cli, o: &mut Output) -> Result<i32, Fail> {
    let structured = cli.format == OutputFormat::Structured;
    let out = &mut o.stdout;
    match cli.command {
        Command::Nf { strands, word: w } => {
            let nf = canonical_form(&word(strands, &w)?);
            let factors: Vec<String> = nf.factor_words().iter().map(ToString::to_string).collect();
            if structured {
                writeln!(out, "strands={strands}\ninf={}\nsup={}", nf.inf(), nf.sup()).unwrap();
                for f in &factors {
                    writeln!(out, "factor={f}").unwrap();
                }
                writeln!(out, "word={}", nf.to_word()).unwrap();
            } else {
                let mut parts = vec![format!("D^{}", nf.inf())];
                parts.extend(factors);
                writeln!(out, "{}", parts.join(" | ")).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Eq { strands, left, right } => {
            let same = equals(&word(strands, &left)?, &word(strands, &right)?).map_err(usage)?;
            if structured {
                writeln!(out, "equal={same}").unwrap();
            } else {
                writeln!(out, "{}", if same { "equal" } else { "not equal" }).unwrap();
            }
            Ok(if same { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Fulltwist { strands } => {
            let w = full_twist(strands).map_err(usage)?;
            if structured {
                writeln!(out, "word={w}").unwrap();
            } else {
                writeln!(out, "{w}").unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Validate { file } => {
            let f = load(&file)?;
            let r = f.validate();
            let mut fields = vec![format!("product_ok={}", r.product_ok)];
            if structured {
                fields.push(format!("exponent_ok={}", r.exponent_ok));
            }
            if let Some(c) = r.counts {
                fields.extend([format!("n1={}", c.n1), format!("n2={}", c.n2), format!("n3={}", c.n3)]);
            }
            writeln!(out, "{}", fields.join(if structured { "\n" } else { " " })).unwrap();
            Ok(if r.is_valid() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Move { file, index, direction, output } => {
            let f = load(&file)?.hurwitz_move(index, direction.into()).map_err(usage)?;
            emit(&f, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Conjugate { file, by, output } => {
            let f = load(&file)?;
            let z = word(f.strands(), &by)?;
            emit(&f.conjugate_all(&z).map_err(usage)?, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Search { strands, profile, max_conjugator_length, max_nodes, max_strands, output } => {
            let limits = SearchLimits { max_conjugator_length, max_nodes, max_strands };
            match search_factorization(strands, &profile, limits).map_err(usage)? {
                SearchOutcome::Found(f) => {
                    if output.is_some() {
                        writeln!(out, "outcome=found").unwrap();
                    }
                    emit(&f, output.as_deref(), out)?;
                    Ok(EXIT_OK)
                }
                SearchOutcome::NoneWithinBounds => {
                    writeln!(out, "outcome=none_within_bounds").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
                SearchOutcome::BudgetExceeded { nodes } => {
                    writeln!(out, "outcome=budget_exceeded\nnodes={nodes}").unwrap();
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Fingerprint { file, key_budget } => {
            let f = load(&file)?;
            let fp = fingerprint_with_keys(&f, key_budget).map_err(data)?;
            out.push_str(&formats::print_fingerprint(&fp));
            Ok(EXIT_OK)
        }
        Command::Decide { left, right, max_states, max_factor_length, conjugator_length, key_budget } => {
            let (f1, f2) = (load(&left)?, load(&right)?);
            let budget = EquivalenceBudget {
                max_states,
                max_factor_nf_length: max_factor_length,
                conjugator_length_bound: conjugator_length,
                conjugacy_key_budget: key_budget,
            };
            let v = decide_equivalence(&f1, &f2, &budget).map_err(|e| match e {
                braidmon_core::Error::ZeroBudget => usage(e),
                e => data(e),
            })?;
            out.push_str(&formats::print_verdict(&v));
            Ok(match v {
                EquivalenceVerdict::Equivalent(_) => EXIT_OK,
                EquivalenceVerdict::Distinguished { .. } => EXIT_NEGATIVE,
                EquivalenceVerdict::Inconclusive { .. } => EXIT_INCONCLUSIVE,
            })
        }
        Command::Pi1 { file, simplify_budget, no_simplify } => {
            let p = zvk_presentation(&load(&file)?).map_err(data)?;
            let p = if no_simplify { p } else { simplify(&p, simplify_budget) };
            out.push_str(&formats::print_presentation(&p));
            Ok(EXIT_OK)
        }
        Command::Homs { presentation, degree, all_conjugates, epi, transitive, transpositions } => {
            let p = load_presentation(&presentation)?;
            let query = HomQuery {
                up_to_conjugacy: !all_conjugates,
                epi_only: epi,
                transitive_only: transitive,
                transpositions_only: transpositions,
                ..HomQuery::new(degree)
            };
            let homs = enumerate_homs(&p, &query).map_err(usage)?;
            let text = formats::print_homs(&homs);
            if structured {
                writeln!(out, "count={}", homs.len()).unwrap();
                for line in text.lines() {
                    writeln!(out, "hom={line}").unwrap();
                }
            } else {
                out.push_str(&text);
            }
            Ok(EXIT_OK)
        }
        Command::Order { presentation, max_cosets } => {
            if max_cosets == 0 {
                return Err(usage("--max-cosets must be positive"));
            }
            let p = load_presentation(&presentation)?;
            let order = group_order(&p, max_cosets);
            let shown = order.map_or_else(|| "unknown".to_string(), |n| n.to_string());
            if structured {
                writeln!(out, "order={shown}").unwrap();
            } else {
                writeln!(out, "{shown}").unwrap();
            }
            Ok(if order.is_some() { EXIT_OK } else { EXIT_INCONCLUSIVE })
        }
        Command::Arrangement { lines } => {
            let lines = match lines {
                None => hesse_dual_lines(),
                Some(path) => read(&path)?
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(|l| l.parse::<ProjLine>())
                    .collect::<Result<_, _>>()
                    .map_err(data)?,
            };
            let points = intersection_lattice(&lines).map_err(data)?;
            let text = formats::print_arrangement(&points);
            if structured {
                writeln!(out, "points={}", points.len()).unwrap();
                for line in text.lines() {
                    writeln!(out, "point={line}").unwrap();
                }
            } else {
                out.push_str(&text);
            }
            Ok(EXIT_OK)
        }
        Command::Invariants { m } => {
            let inv = branch_curve_invariants(m).map_err(usage)?;
            let report = check_consistency(&inv);
            if inv.below_range() {
                writeln!(o.stderr, "warning: m={m} is below 5, outside the range the construction covers").unwrap();
            }
            let out = &mut o.stdout;
            if structured {
                let opt = |x: &Option<_>| x.as_ref().map_or_else(String::new, ToString::to_string);
                writeln!(out, "m={m}\ndeg_f={}", opt(&inv.deg_f)).unwrap();
                writeln!(out, "d={}\ng={}\nkappa={}\nn1={}\ndelta={}", inv.d, inv.g, inv.kappa, inv.n1, inv.delta)
                    .unwrap();
                writeln!(out, "below_range={}", inv.below_range()).unwrap();
                for (name, ok) in report.checks() {
                    writeln!(out, "{name}={ok}").unwrap();
                }
            } else {
                out.push_str(&formats::print_invariants(&inv));
            }
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}
