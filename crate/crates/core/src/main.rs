//! Command-line front end: parse a triangle, run constructions or seeded
//! verification suites, and emit report documents and SVG figures.
//!
//! Exit status contract: 0 = all checks pass, 1 = check failures,
//! 2 = input or usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use aurea::report::{parse_triangle, ErrorDocument, InputEcho, ReportDocument};
use aurea::verify::{run_suite, CheckKind, SamplerConfig, CONSTRUCTION_TOL};
use aurea::{constructions, svg, Error, Triangle};

#[derive(Parser)]
#[command(
    name = "aurea",
    version,
    about = "Golden-ratio constructions in arbitrary triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TriangleSource {
    /// Inline triangle: "x1,y1 x2,y2 x3,y3"
    #[arg(long, allow_hyphen_values = true)]
    triangle: Option<String>,

    /// Path to a file holding the same inline format
    #[arg(long)]
    input: Option<PathBuf>,
}

impl TriangleSource {
    fn load(&self) -> Result<(Triangle, [[f64; 2]; 3]), CliFailure> {
        let text = match (&self.triangle, &self.input) {
            (Some(inline), None) => inline.clone(),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| CliFailure::Io(format!("cannot read {}: {e}", path.display())))?,
            _ => unreachable!("clap enforces exactly one source"),
        };
        let t = parse_triangle(&text).map_err(CliFailure::Geometry)?;
        let echo = [
            [t.a().x, t.a().y],
            [t.b().x, t.b().y],
            [t.c().x, t.c().y],
        ];
        Ok((t, echo))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run construction 1-4 and print its report document
    Construct {
        /// Construction number
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
        #[command(flatten)]
        source: TriangleSource,
        /// Relative tolerance for judging the ratio against phi
        #[arg(long)]
        tol: Option<f64>,
        /// Also write the document to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the seeded verification suites
    Suite {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: u64,
        /// Comma-separated subset of lemma1,ptolemy,lemma3,construct1..4,identities
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
    },
    /// Render a construction figure as SVG
    Render {
        /// Construction number
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
        #[command(flatten)]
        source: TriangleSource,
        /// Output SVG path
        #[arg(long)]
        out: PathBuf,
    },
    /// Check one lemma over seeded samples
    Verify {
        /// Lemma number: 1 (diagonal ratio), 2 (Ptolemy), 3 (cevian/circumcircle)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        lemma: u8,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: u64,
    },
}

enum CliFailure {
    Geometry(Error),
    Io(String),
    Usage(String),
}

fn run(cli: Cli) -> Result<u8, CliFailure> {
    match cli.command {
        Command::Construct {
            id,
            source,
            tol,
            json,
        } => {
            let (t, echo) = source.load()?;
            let check_tol = tol.unwrap_or(CONSTRUCTION_TOL);
            let report = constructions::construct(&t, id).map_err(CliFailure::Geometry)?;
            let pass = report.deviation <= check_tol;
            let input = InputEcho {
                triangle: Some(echo),
                construction: Some(id),
                tolerance: Some(t.tolerance()),
                check_tolerance: Some(check_tol),
                ..Default::default()
            };
            let doc = ReportDocument::construction(input, report);
            let text = doc.to_json();
            println!("{text}");
            if let Some(path) = json {
                fs::write(&path, &text)
                    .map_err(|e| CliFailure::Io(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(if pass { 0 } else { 1 })
        }
        Command::Suite { seed, count, checks } => {
            let kinds = match &checks {
                None => CheckKind::ALL.to_vec(),
                Some(names) => {
                    let mut kinds = Vec::new();
                    for name in names {
                        kinds.push(CheckKind::parse(name).ok_or_else(|| {
                            CliFailure::Usage(format!("unknown check '{name}'"))
                        })?);
                    }
                    kinds
                }
            };
            let cfg = SamplerConfig::new(seed, count);
            let summary = run_suite(&cfg, &kinds);
            let pass = summary.pass;
            let input = InputEcho {
                seed: Some(seed),
                count: Some(count),
                checks: checks.clone(),
                ..Default::default()
            };
            let doc = ReportDocument::suite(input, summary);
            println!("{}", doc.to_json());
            Ok(if pass { 0 } else { 1 })
        }
        Command::Render { id, source, out } => {
            let (t, _) = source.load()?;
            let report = constructions::construct(&t, id).map_err(CliFailure::Geometry)?;
            let figure = svg::emit_svg(&report, &t);
            fs::write(&out, figure)
                .map_err(|e| CliFailure::Io(format!("cannot write {}: {e}", out.display())))?;
            Ok(0)
        }
        Command::Verify { lemma, seed, count } => {
            let kind = match lemma {
                1 => CheckKind::Lemma1,
                2 => CheckKind::Ptolemy,
                _ => CheckKind::Lemma3,
            };
            let cfg = SamplerConfig::new(seed, count);
            let summary = run_suite(&cfg, &[kind]);
            let pass = summary.pass;
            let input = InputEcho {
                seed: Some(seed),
                count: Some(count),
                lemma: Some(lemma),
                ..Default::default()
            };
            let doc = ReportDocument::suite(input, summary);
            println!("{}", doc.to_json());
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap prints help/version to stdout with success; everything
            // else is a usage error
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliFailure::Geometry(err)) => {
            println!("{}", ErrorDocument::from_error(&err).to_json());
            ExitCode::from(2)
        }
        Err(CliFailure::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliFailure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
