mod document;
mod error;
mod problem;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use implicax_core::arith::{Field, PolyRing};
use implicax_core::pipeline::{analyze_with, DEFAULT_CHECK_POINTS, DEFAULT_SEED};
use implicax_core::resultants::{bezout_matrix, kravitsky_pencil, sylvester_matrix, BinaryForm};
use implicax_core::{implicitize, Method, Options};

use document::{AnalyzeDoc, Document, ImplicitDoc, ResultantDoc, ResultantKind, Timing};
use error::CliError;
use problem::Problem;

#[derive(Parser)]
#[command(name = "implicax", version, about = "Implicit equations of rational curves and surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Problem file, text or JSON.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every random choice.
    #[arg(long, env = "IMPLICAX_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the implicit equation.
    Implicitize {
        #[command(flatten)]
        common: Common,
        /// Strand degree; defaults to the proven bound.
        #[arg(long)]
        nu: Option<u32>,
        /// det-complex, gcd-minors or resultant.
        #[arg(long, default_value = "det-complex")]
        method: Method,
        /// Number of random points for the evaluation check.
        #[arg(long, default_value_t = DEFAULT_CHECK_POINTS)]
        check_eval: usize,
        /// Accept a strand degree below the bound.
        #[arg(long)]
        allow_sub_bound: bool,
    },
    /// Report base locus diagnostics only.
    Analyze {
        #[command(flatten)]
        common: Common,
    },
    /// Build a resultant matrix and take its determinant.
    Resultant {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        kind: ResultantKind,
        /// Include the matrix in the output.
        #[arg(long)]
        emit_matrix: bool,
    },
}

fn load(path: &PathBuf) -> Result<Problem, CliError> {
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Problem::parse(&src)
}

fn elapsed(start: Instant) -> Timing {
    Timing {
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn resultant(problem: &Problem, kind: ResultantKind, emit_matrix: bool, start: Instant) -> Result<Document, CliError> {
    if problem.x_vars.len() != 2 {
        return Err(CliError::Problem {
            location: "x_vars".into(),
            message: "resultant matrices need binary forms (two variables)".into(),
        });
    }
    let polys = problem.polynomials()?;
    let want = if kind == ResultantKind::Kravitsky { 3 } else { 2 };
    if polys.len() != want {
        return Err(CliError::Problem {
            location: "polynomials".into(),
            message: format!("{kind} needs {want} polynomials, got {}", polys.len()),
        });
    }
    let degree = polys.iter().find_map(|p| p.homogeneous_degree().ok().flatten()).unwrap_or(1);
    let scalars = PolyRing::new(problem.field, Vec::<String>::new())?;
    let forms = polys
        .iter()
        .map(|p| {
            let d = if p.is_zero() { degree } else { p.degree() };
            BinaryForm::from_poly(p, d, &scalars)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = match kind {
        ResultantKind::Sylvester => sylvester_matrix(&forms[0], &forms[1])?,
        ResultantKind::Bezout => bezout_matrix(&forms[0], &forms[1])?,
        ResultantKind::Kravitsky => {
            let names = problem
                .t_vars
                .clone()
                .unwrap_or_else(|| (1..=3).map(|i| format!("T{i}")).collect());
            let t_ring = PolyRing::new(problem.field, names)?;
            kravitsky_pencil([&forms[0], &forms[1], &forms[2]], &t_ring)?
        }
    };
    let det = matrix.det();
    Ok(Document::Resultant(ResultantDoc {
        field: problem.field,
        kind,
        size: matrix.rows(),
        determinant: det.to_string(),
        matrix: emit_matrix.then(|| matrix.to_strings()),
        timing: elapsed(start),
    }))
}

fn run(command: &Command) -> Result<Document, CliError> {
    let start = Instant::now();
    match command {
        Command::Implicitize {
            common,
            nu,
            method,
            check_eval,
            allow_sub_bound,
        } => {
            let problem = load(&common.file)?;
            let p = problem.parameterization()?;
            let opts = Options {
                nu: *nu,
                method: *method,
                seed: common.seed,
                allow_sub_bound: *allow_sub_bound,
                check_points: *check_eval,
            };
            let r = implicitize(&p, &opts)?;
            for w in &r.warnings {
                eprintln!("warning: {w}");
            }
            let field: Field = p.field();
            Ok(Document::Implicitize(ImplicitDoc::new(field, r, *check_eval, common.seed, elapsed(start))))
        }
        Command::Analyze { common } => {
            let problem = load(&common.file)?;
            let p = problem.parameterization()?;
            let report = analyze_with(&p, p.n() <= 4, common.seed)?;
            Ok(Document::Analyze(AnalyzeDoc {
                field: p.field(),
                diagnostics: report,
                timing: elapsed(start),
            }))
        }
        Command::Resultant {
            common,
            kind,
            emit_matrix,
        } => {
            let problem = load(&common.file)?;
            resultant(&problem, *kind, *emit_matrix, start)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::Implicitize { common, .. } | Command::Analyze { common } | Command::Resultant { common, .. } => {
            common.format
        }
    };
    match run(&cli.command) {
        Ok(doc) => {
            match format {
                Format::Text => print!("{}", doc.to_text()),
                Format::Json => println!("{}", doc.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
