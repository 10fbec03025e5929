//! The `schultz` command line.
//!
//! Exit codes: 0 on success (for `verify`, every record matched), 1 when
//! `verify` found a mismatch, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::closed_forms::{closed_form, FamilyKind, TheoremId};
use crate::colouring::{chi_minus_colouring_with, colour_profile, SearchLimits};
use crate::graph::{generate, parse_graph, serialize_graph, FamilySpec, Graph};
use crate::polynomial::Polynomial;
use crate::schultz::{family_variant_polynomial, variant_polynomial, Variant};
use crate::verify::{verify, NRange};

#[derive(Debug, Parser)]
#[command(name = "schultz", version, about = "Chromatic Schultz polynomials and closed-form verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family graph as JSON.
    Gen {
        family: FamilyArg,
        /// `n`, or `a b` for complete-bipartite.
        #[arg(num_args = 1..=2, required = true)]
        params: Vec<usize>,
    },
    /// Compute a variant polynomial from its definition.
    Compute {
        #[arg(long)]
        variant: Variant,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Expand a closed form.
    ClosedForm {
        #[arg(long)]
        theorem: TheoremId,
        /// `n`, or the larger part `a` for bicliques.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print χ, the χ⁻ colouring and its class sizes.
    Chromatic {
        #[arg(long)]
        input: PathBuf,
    },
    /// Diff closed forms against the definition.
    Verify {
        /// A theorem id or `all`.
        #[arg(long)]
        theorem: String,
        /// Inclusive range `lo..hi`.
        #[arg(long)]
        n: NRange,
        /// Largest part size for bicliques (defaults to the top of the range).
        #[arg(long)]
        a_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
struct Source {
    #[arg(long, conflicts_with = "input", requires = "n")]
    family: Option<FamilyArg>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    #[arg(long, requires = "family")]
    b: Option<usize>,
    /// Graph file (JSON or `n m` edge list).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
}

enum Failure {
    Usage(String),
    Input(crate::Error),
    Io(std::io::Error),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn family_spec(family: FamilyArg, n: usize, b: Option<usize>) -> Result<FamilySpec, Failure> {
    let spec = match (family, b) {
        (FamilyArg::CompleteBipartite, Some(b)) => FamilySpec::complete_bipartite(n, b),
        (FamilyArg::CompleteBipartite, None) => {
            return Err(Failure::Usage("complete-bipartite needs --b".into()))
        }
        (_, Some(_)) => return Err(Failure::Usage("--b only applies to complete-bipartite".into())),
        (FamilyArg::Path, None) => FamilySpec::path(n),
        (FamilyArg::Cycle, None) => FamilySpec::cycle(n),
        (FamilyArg::Complete, None) => FamilySpec::complete(n),
    };
    Ok(spec?)
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

fn polynomial_json(p: &Polynomial) -> serde_json::Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Gen { family, params } => {
            let spec = match (family, params.as_slice()) {
                (FamilyArg::CompleteBipartite, &[a, b]) => family_spec(family, a, Some(b))?,
                (FamilyArg::CompleteBipartite, _) => {
                    return Err(Failure::Usage("gen complete-bipartite takes <a> <b>".into()))
                }
                (_, &[n]) => family_spec(family, n, None)?,
                _ => return Err(Failure::Usage("gen takes a single <n> for this family".into())),
            };
            writeln!(out, "{}", serialize_graph(&generate(spec)?))?;
        }
        Command::Compute { variant, source, json } => {
            let poly = match (source.family, source.input) {
                (Some(family), None) => {
                    let n = source.n.expect("clap enforces --n with --family");
                    family_variant_polynomial(family_spec(family, n, source.b)?, variant)?
                }
                (None, Some(path)) => {
                    variant_polynomial(&read_graph(&path)?, variant, &SearchLimits::from_env())?
                }
                _ => return Err(Failure::Usage("give either --family or --input".into())),
            };
            if json {
                let v = json!({ "variant": variant, "polynomial": polynomial_json(&poly) });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{poly}")?;
            }
        }
        Command::ClosedForm { theorem, n, b, json } => {
            let family = match theorem.family() {
                FamilyKind::Path => FamilyArg::Path,
                FamilyKind::Cycle => FamilyArg::Cycle,
                FamilyKind::Complete => FamilyArg::Complete,
                FamilyKind::CompleteBipartite => FamilyArg::CompleteBipartite,
            };
            let spec = family_spec(family, n, b)?;
            let poly = closed_form(theorem, spec)?;
            if json {
                let v = json!({
                    "theorem": theorem,
                    "params": spec,
                    "polynomial": polynomial_json(&poly),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{poly}")?;
            }
        }
        Command::Chromatic { input } => {
            let g = read_graph(&input)?;
            let c = chi_minus_colouring_with(&g, &SearchLimits::from_env())?;
            let zeta = serde_json::to_string(c.zeta()).expect("serializes");
            let theta = serde_json::to_string(&colour_profile(&c)).expect("serializes");
            writeln!(out, "chi: {}", c.colour_count())?;
            writeln!(out, "zeta: {zeta}")?;
            writeln!(out, "profile: {theta}")?;
        }
        Command::Verify { theorem, n, a_max, json } => {
            let ids = if theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse::<TheoremId>()?]
            };
            let report = verify(&ids, n, a_max)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

/// Runs the CLI on `args` (including the program name).
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let message = match f {
                Failure::Usage(m) => m,
                Failure::Input(e) => e.to_string(),
                Failure::Io(e) => e.to_string(),
            };
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}
