//! Command-line front end: construct, verify, certify, render, eq1.
//!
//! Exit codes: 0 on success, 1 when a computation ran but failed (a false
//! verdict, an excluded or unsatisfiable case), 2 for usage errors and
//! malformed input.

mod svg;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use tritile::certify::{certify_range_with, summarize, Certifier};
use tritile::field::rational::parse_fraction;
use tritile::field::PiAngle;
use tritile::tiling::{
    canonical_tiling, square_ladder_tiling, verify_tiling_shape, ShapeClass, Tiling,
};
use tritile::vertex::{eq1_evaluate, TrianglePair};

#[derive(Parser)]
#[command(
    name = "tritile",
    version,
    about = "Exact right-triangle tilings of regular polygons: construct, verify, certify, render"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Ngon,
    Square,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a tiling and print its JSON on stdout
    #[command(group(ArgGroup::new("which").required(true).args(["n", "ladder"])))]
    Construct {
        /// Target shape
        #[arg(long, value_enum)]
        shape: Shape,
        /// Number of sides for the regular n-gon (with --shape ngon)
        #[arg(long)]
        n: Option<u64>,
        /// Ladder steps for the unit square (with --shape square)
        #[arg(long)]
        ladder: Option<u64>,
    },
    /// Verify a tiling file against a similarity class
    #[command(group(ArgGroup::new("class").required(true).args(["alpha", "legs"])))]
    Verify {
        /// Path to a tiling JSON file, or - for stdin
        tiling: PathBuf,
        /// Acute angle as an exact fraction of pi, e.g. 1/5
        #[arg(long)]
        alpha: Option<String>,
        /// Leg ratio of the reference right triangle, e.g. 3 or 7/2
        #[arg(long)]
        legs: Option<String>,
    },
    /// Emit a uniqueness certificate for one n or a range
    #[command(group(ArgGroup::new("target").required(true).args(["n", "range"])))]
    Certify {
        #[arg(long)]
        n: Option<u64>,
        /// Inclusive range lo hi
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        range: Option<Vec<u64>>,
        /// Verify existence witnesses only up to this n
        #[arg(long, default_value_t = tritile::certify::DEFAULT_WITNESS_CAP)]
        witness_cap: u64,
    },
    /// Render a tiling file to SVG
    Render {
        /// Path to a tiling JSON file
        tiling: PathBuf,
        /// Output SVG path
        #[arg(short, long)]
        output: PathBuf,
        /// Decimal digits for coordinates
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(3..))]
        digits: u32,
    },
    /// Evaluate the fractional-part criterion at (n, k)
    Eq1 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
}

/// Ran-but-failed (exit 1) vs malformed input (exit 2).
enum Failure {
    Ran(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> ExitCode {
        match self {
            Failure::Ran(_) => ExitCode::from(1),
            Failure::Input(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Ran(m) | Failure::Input(m) => m,
        }
    }
}

fn input_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// Prints a line to stdout; a closed pipe downstream ends the process
/// quietly, Unix style.
fn emit(text: &str) -> Result<(), Failure> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{}", text) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Failure::Ran(format!("cannot write to stdout: {}", e))),
    }
}

fn ran_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Ran(e.to_string())
}

fn load_tiling(path: &PathBuf) -> Result<Tiling, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
            .map_err(|e| Failure::Input(format!("cannot read stdin: {}", e)))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {}", path.display(), e)))?
    };
    Tiling::from_json(&text)
        .map_err(|e| Failure::Input(format!("bad tiling file {}: {}", path.display(), e)))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Construct { shape, n, ladder } => {
            let tiling = match (shape, n, ladder) {
                (Shape::Ngon, Some(n), None) => {
                    if n < 3 {
                        return Err(Failure::Input("ngon needs --n at least 3".into()));
                    }
                    canonical_tiling(n)
                }
                (Shape::Square, None, Some(steps)) => {
                    if steps < 1 {
                        return Err(Failure::Input("--ladder must be at least 1".into()));
                    }
                    square_ladder_tiling(steps)
                }
                (Shape::Ngon, ..) => {
                    return Err(Failure::Input("--shape ngon takes --n, not --ladder".into()))
                }
                (Shape::Square, ..) => {
                    return Err(Failure::Input("--shape square takes --ladder, not --n".into()))
                }
            };
            emit(&tiling.to_json())
        }

        Command::Verify {
            tiling,
            alpha,
            legs,
        } => {
            let t = load_tiling(&tiling)?;
            let shape = match (alpha, legs) {
                (Some(a), None) => {
                    let coeff = parse_fraction(&a).map_err(input_err)?;
                    let pair = TrianglePair::from_alpha(PiAngle::new(coeff)).map_err(input_err)?;
                    ShapeClass::Angles(pair)
                }
                (None, Some(r)) => {
                    let ratio = parse_fraction(&r).map_err(input_err)?;
                    ShapeClass::from_leg_ratio(ratio).map_err(input_err)?
                }
                _ => unreachable!("clap enforces exactly one"),
            };
            let report = verify_tiling_shape(&t, &shape).map_err(ran_err)?;
            emit(&serde_json::to_string_pretty(&report).map_err(ran_err)?)?;
            if report.verdict {
                Ok(())
            } else {
                Err(Failure::Ran("verification verdict: false".into()))
            }
        }

        Command::Certify {
            n,
            range,
            witness_cap,
        } => {
            let certifier = Certifier::with_witness_cap(Some(witness_cap));
            match (n, range) {
                (Some(n), None) => {
                    let cert = certifier.certify(n).map_err(ran_err)?;
                    emit(&cert.to_json())
                }
                (None, Some(bounds)) => {
                    let (lo, hi) = (bounds[0], bounds[1]);
                    let certs = certify_range_with(lo, hi, &certifier).map_err(ran_err)?;
                    let s = summarize(&certs);
                    emit(&serde_json::to_string_pretty(&certs).map_err(ran_err)?)?;
                    eprintln!(
                        "{} certificates; {} eq1 eliminations, {} n6 traces, {} witnesses verified",
                        s.total, s.eliminated_by_eq1, s.n6_traces, s.witnesses_verified
                    );
                    Ok(())
                }
                _ => unreachable!("clap enforces exactly one"),
            }
        }

        Command::Render {
            tiling,
            output,
            digits,
        } => {
            let t = load_tiling(&tiling)?;
            let doc = svg::render_svg(&t, digits);
            fs::write(&output, doc)
                .map_err(|e| Failure::Ran(format!("cannot write {}: {}", output.display(), e)))?;
            eprintln!("wrote {}", output.display());
            Ok(())
        }

        Command::Eq1 { n, k } => {
            let witness = eq1_evaluate(n, k).map_err(ran_err)?;
            emit(&serde_json::to_string_pretty(&witness).map_err(ran_err)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors
            e.exit();
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}
