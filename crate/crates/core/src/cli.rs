//! The `gapvir` command line.
//!
//! Exit codes: 0 when the property holds or the verdict is positive, 1 when
//! it fails or is negative, 2 on input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{check_lie_axioms, vir_embedding_check, GapParam};
use crate::corpus::{check_example, examples};
use crate::cover::{j_membership, omega_min_l, pi_map, TensorInput};
use crate::error::{Error, Result};
use crate::mois::{check_module_axioms, classify_reducibility, iso_test, linkage_graph, validate_f, MoisSpec};
use crate::verma::{pbw_basis, singular_vectors, verma_verdict, HighestWeight, VermaVectorJson};

#[derive(Debug, Parser)]
#[command(name = "gapvir", version, about = "Exact computations for gap-p Virasoro algebras and their modules")]
struct Cli {
    /// Compact single-line JSON on stdout (DOT output is embedded as a string).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check conditions (I)-(III) on F.
    ValidateF { spec: PathBuf },
    /// Check the module axioms on a window of generators and basis vectors.
    Axioms {
        spec: PathBuf,
        #[arg(long, env = "GAPVIR_WINDOW", default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
        window: i64,
    },
    /// Linkage graph of the components; exit 0 when strongly connected.
    Linkage {
        spec: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Decide reducibility; exit 0 when reducible.
    Reducible { spec: PathBuf },
    /// Test two modules for isomorphism; exit 0 with a witness when isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Irreducibility verdict and graded dimensions of a Verma module.
    Verma {
        weight: PathBuf,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Singular vectors at one depth; exit 0 when there are any.
    Singular {
        weight: PathBuf,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Smallest l with ω_{m,n} vanishing on the window.
    Omega {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 6)]
        lmax: u32,
        #[arg(long, env = "GAPVIR_WINDOW", default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
        window: i64,
    },
    /// Membership of a tensor in J, with its image under π.
    Jtest { tensor: PathBuf },
    /// Lie axioms and the Virasoro embedding on a window.
    LieCheck {
        #[arg(long)]
        p: i64,
        #[arg(long, env = "GAPVIR_WINDOW", default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
        window: i64,
    },
    /// Recompute the verdicts of the five bundled example matrices.
    Examples,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

struct Output {
    body: serde_json::Value,
    text: Option<String>,
    positive: bool,
}

impl Output {
    fn json<T: Serialize>(value: &T, positive: bool) -> Result<Self> {
        Ok(Output { body: serde_json::to_value(value)?, text: None, positive })
    }
}

fn execute(command: Command) -> Result<Output> {
    match command {
        Command::ValidateF { spec } => {
            let spec: MoisSpec = read_json(&spec)?;
            let report = validate_f(&spec.f);
            Output::json(&report, report.is_valid())
        }
        Command::Axioms { spec, window } => {
            let spec: MoisSpec = read_json(&spec)?;
            spec.ensure_valid()?;
            let report = check_module_axioms(&spec, window)?;
            Output::json(&report, report.passed())
        }
        Command::Linkage { spec, dot } => {
            let spec: MoisSpec = read_json(&spec)?;
            let graph = linkage_graph(&spec.f);
            let mut out = Output::json(&graph, graph.strongly_connected)?;
            if dot {
                let rendered = graph.to_dot();
                out.body["dot"] = json!(rendered);
                out.text = Some(rendered);
            }
            Ok(out)
        }
        Command::Reducible { spec } => {
            let spec: MoisSpec = read_json(&spec)?;
            let verdict = classify_reducibility(&spec)?;
            Output::json(&verdict, verdict.is_reducible())
        }
        Command::Iso { a, b } => {
            let a: MoisSpec = read_json(&a)?;
            let b: MoisSpec = read_json(&b)?;
            let witness = iso_test(&a, &b)?;
            let positive = witness.is_some();
            Output::json(&json!({ "isomorphic": positive, "witness": witness }), positive)
        }
        Command::Verma { weight, depth } => {
            let lambda: HighestWeight = read_json(&weight)?;
            let verdict = verma_verdict(&lambda);
            let dims: Vec<usize> = (0..=depth as usize).map(|d| pbw_basis(d).len()).collect();
            let positive = verdict.irreducible;
            Output::json(&json!({ "verdict": verdict, "graded_dimensions": dims }), positive)
        }
        Command::Singular { weight, depth } => {
            let lambda: HighestWeight = read_json(&weight)?;
            let vectors = singular_vectors(&lambda, depth as usize)?;
            let rendered: Vec<VermaVectorJson<'_>> = vectors.iter().map(VermaVectorJson).collect();
            Output::json(&json!({ "depth": depth, "singular_vectors": rendered }), !vectors.is_empty())
        }
        Command::Omega { spec, m, n, lmax, window } => {
            let spec: MoisSpec = read_json(&spec)?;
            spec.ensure_valid()?;
            let l = omega_min_l(&spec, m, n, window, lmax)?;
            Output::json(&json!({ "m": m, "n": n, "window": window, "l_max": lmax, "min_l": l }), l.is_some())
        }
        Command::Jtest { tensor } => {
            let input: TensorInput = read_json(&tensor)?;
            input.spec.ensure_valid()?;
            let member = j_membership(&input.spec, &input.terms)?;
            let image = pi_map(&input.spec, &input.terms)?;
            let image: Vec<_> = image.iter().map(|(w, c)| json!({ "w": w, "coeff": c })).collect();
            Output::json(&json!({ "in_j": member, "pi": image }), member)
        }
        Command::LieCheck { p, window } => {
            let p = GapParam::new(p)?;
            let lie = check_lie_axioms(p, window);
            let embedding = vir_embedding_check(p, window);
            let positive = lie.passed() && embedding.passed();
            Output::json(&json!({ "lie": lie, "virasoro_embedding": embedding }), positive)
        }
        Command::Examples => {
            let outcomes: Vec<_> = examples()?.iter().map(check_example).collect();
            let positive = outcomes.iter().all(|o| o.matches);
            Output::json(&outcomes, positive)
        }
    }
}

/// Runs the command line, writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let compact = cli.json;
    let output = match execute(cli.command) {
        Ok(output) => output,
        Err(e) => {
            let _ = writeln!(err, "gapvir: {e}");
            return 2;
        }
    };
    let written = match (&output.text, compact) {
        (Some(text), false) => write!(out, "{text}"),
        (_, true) => writeln!(out, "{}", output.body),
        (None, false) => writeln!(out, "{:#}", output.body),
    };
    if written.is_err() {
        return 2;
    }
    if output.positive {
        0
    } else {
        1
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
