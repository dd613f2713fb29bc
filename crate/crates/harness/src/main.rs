use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kkpoly::nilhecke::{c, c_recursive, c_subword_oracle, d};
use kkpoly::weyl::{bruhat_leq, bruhat_leq_subword};
use kkpoly::{CartanType, GroupElement, Kind, RootSystem, Word};
use kkpoly_harness::report::{combined, write_csv_all};
use kkpoly_harness::suites::{self, Budget};
use kkpoly_harness::VerificationReport;
use serde_json::json;

#[derive(Parser)]
#[command(name = "kkpoly", version, about = "Kostant-Kumar polynomials and Weyl group tools for types A, B, C")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct System {
    /// Root system type: A, B or C.
    #[arg(long = "type", value_parser = parse_kind)]
    kind: Kind,
    #[arg(long)]
    rank: usize,
}

impl System {
    fn cartan(&self) -> kkpoly::Result<CartanType> {
        CartanType::new(self.kind, self.rank)
    }
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: kkpoly::Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Rank,
    Subword,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Product,
    Recursive,
    Subword,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Suite {
    DistinctDw,
    Divisibility,
    BruhatRemarks,
    LengthLemmaA,
    LengthLemmaC,
    Distinguish,
    OrbitDim,
    BruhatOracles,
    ProductTable,
    WordIndependence,
    ParabolicStep,
    SupportDyer,
    DeltaRoundTrip,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots in enumeration order.
    Roots {
        #[command(flatten)]
        sys: System,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Describe a group element.
    Elem {
        #[command(flatten)]
        sys: System,
        /// Comma-separated signed images, e.g. "-3,-2,4,-1".
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Comma-separated simple reflection indices to compare against.
        #[arg(long)]
        word: Option<String>,
    },
    /// Print the rank matrix of an element.
    Rankmatrix {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Print only the strictly lower triangular part.
        #[arg(long)]
        strict: bool,
    },
    /// Decide v <= w in the Bruhat order.
    Bruhat {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_enum, default_value = "rank")]
        method: Method,
    },
    /// Coefficient of delta_v in x_w.
    Cwv {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, value_enum, default_value = "product")]
        oracle: Oracle,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The Kostant-Kumar polynomial d_w.
    Dw {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        sys: System,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest rank for the pairwise d_w sweep.
        #[arg(long, default_value_t = Budget::default().dw_rank)]
        max_rank: usize,
        /// Report elapsed_ms as 0 so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
        /// List passing cases in text output.
        #[arg(long)]
        verbose: bool,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<kkpoly::Error> for Failure {
    fn from(e: kkpoly::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(ct: CartanType, text: &str) -> kkpoly::Result<Word> {
    let letters = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| kkpoly::Error::Parse(format!("bad letter {s:?}"))))
        .collect::<kkpoly::Result<Vec<_>>>()?;
    Word::new(ct, letters)
}

fn run(cmd: Command) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Roots { sys, format } => {
            let rs = RootSystem::from_cartan(sys.cartan()?);
            let rows: Vec<_> = rs
                .positive_roots()
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let rc = rs.row_col(r).ok();
                    (i + 1, r.eps_string(), r.alpha_string(), rc)
                })
                .collect();
            if format == Format::Json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|(i, e, a, rc)| json!({"index": i, "eps": e, "alpha": a, "row_col": rc}))
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
            } else {
                for (i, e, a, rc) in rows {
                    match rc {
                        Some((r, c)) => writeln!(out, "{i:>3}  {e:<8} {a:<16} row={r} col={c}")?,
                        None => writeln!(out, "{i:>3}  {e:<8} {a}")?,
                    }
                }
            }
        }
        Command::Elem { sys, perm, word } => {
            let ct = sys.cartan()?;
            let w = GroupElement::parse(ct, &perm)?;
            writeln!(out, "element: {w}")?;
            writeln!(out, "{}", w.two_line())?;
            writeln!(out, "length: {}", w.length())?;
            writeln!(out, "reduced word: {}", w.reduced_word())?;
            if w.is_involution() {
                let supp = w.support(&RootSystem::from_cartan(ct))?;
                let names: Vec<String> = supp.iter().map(|r| r.eps_string()).collect();
                writeln!(out, "support: {{{}}}", names.join(", "))?;
            }
            if let Some(text) = word {
                let word = parse_word(ct, &text)?;
                let prod = GroupElement::from_word(ct, &word.letters)?;
                writeln!(out, "word product: {prod}")?;
                writeln!(out, "word reduced: {}", word.reduced)?;
                writeln!(out, "word matches: {}", prod == w)?;
            }
        }
        Command::Rankmatrix { sys, perm, strict } => {
            let w = GroupElement::parse(sys.cartan()?, &perm)?;
            let m = w.rank_matrix();
            let m = if strict { m.strict_lower() } else { m };
            write!(out, "{m}")?;
        }
        Command::Bruhat { sys, v, w, method } => {
            let ct = sys.cartan()?;
            let v = GroupElement::parse(ct, &v)?;
            let w = GroupElement::parse(ct, &w)?;
            let leq = match method {
                Method::Rank => bruhat_leq(&v, &w)?,
                Method::Subword => bruhat_leq_subword(&v, &w)?,
            };
            writeln!(out, "{leq}")?;
        }
        Command::Cwv { sys, w, v, oracle, format } => {
            let ct = sys.cartan()?;
            let w = GroupElement::parse(ct, &w)?;
            let v = GroupElement::parse(ct, &v)?;
            let f = match oracle {
                Oracle::Product => c(&w, &v)?,
                Oracle::Recursive => c_recursive(&w, &v)?,
                Oracle::Subword => c_subword_oracle(ct, &w.reduced_word(), &v)?,
            };
            if format == Format::Json {
                writeln!(out, "{}", f.to_json())?;
            } else {
                writeln!(out, "{f}")?;
            }
        }
        Command::Dw { sys, perm, format } => {
            let w = GroupElement::parse(sys.cartan()?, &perm)?;
            let p = d(&w)?;
            if format == Format::Json {
                writeln!(out, "{}", json!({"w": w.to_string(), "d": p.value.to_json()}))?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Command::Verify {
            suite,
            sys,
            format,
            jobs,
            max_rank,
            no_timing,
            verbose,
        } => {
            let ct = sys.cartan()?;
            let budget = Budget { dw_rank: max_rank };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut reports = pool.install(|| run_suites(suite, ct, budget))?;
            if no_timing {
                for r in &mut reports {
                    r.elapsed_ms = 0;
                }
            }
            match format {
                Format::Json => {
                    let v = if reports.len() == 1 {
                        reports[0].to_json()
                    } else {
                        combined("all", &reports)
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
                }
                Format::Csv => write_csv_all(&reports, &mut out).map_err(|e| Failure::Usage(e.to_string()))?,
                Format::Text => {
                    for r in &reports {
                        write!(out, "{}", r.to_text(verbose))?;
                    }
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn run_suites(suite: Suite, ct: CartanType, budget: Budget) -> kkpoly::Result<Vec<VerificationReport>> {
    let one = |s: Suite| -> kkpoly::Result<VerificationReport> {
        match s {
            Suite::DistinctDw => suites::distinct_dw(ct, budget),
            Suite::Divisibility => suites::divisibility(ct),
            Suite::BruhatRemarks => suites::bruhat_remarks(ct),
            Suite::LengthLemmaA => suites::length_lemma_a(ct),
            Suite::LengthLemmaC => suites::length_lemma_c(ct),
            Suite::Distinguish => suites::distinguish(ct),
            Suite::OrbitDim => suites::orbit_dims(ct),
            Suite::BruhatOracles => suites::bruhat_oracles(ct),
            Suite::ProductTable => suites::product_table(ct),
            Suite::WordIndependence => suites::word_independence(ct, None),
            Suite::ParabolicStep => suites::parabolic_step(ct),
            Suite::SupportDyer => suites::support_and_dyer(ct, None),
            Suite::DeltaRoundTrip => suites::delta_round_trip(ct),
            Suite::All => unreachable!("expanded by the caller"),
        }
    };
    if suite != Suite::All {
        return Ok(vec![one(suite)?]);
    }
    let applicable: &[Suite] = match ct.kind() {
        Kind::A => &[
            Suite::DistinctDw,
            Suite::LengthLemmaA,
            Suite::Distinguish,
            Suite::OrbitDim,
            Suite::BruhatOracles,
            Suite::SupportDyer,
        ],
        Kind::B => &[
            Suite::DistinctDw,
            Suite::Divisibility,
            Suite::BruhatRemarks,
            Suite::BruhatOracles,
            Suite::ParabolicStep,
            Suite::SupportDyer,
        ],
        Kind::C => &[
            Suite::DistinctDw,
            Suite::Divisibility,
            Suite::BruhatRemarks,
            Suite::LengthLemmaC,
            Suite::Distinguish,
            Suite::OrbitDim,
            Suite::BruhatOracles,
            Suite::ParabolicStep,
            Suite::SupportDyer,
        ],
    };
    applicable.iter().map(|&s| one(s)).collect()
}
