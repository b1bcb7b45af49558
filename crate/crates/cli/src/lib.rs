//! Command-line front end for [`pseudoeuclid`].
//!
//! The binary is a thin shell around [`run`]: arguments are parsed with clap,
//! every command produces a [`Report`], and the report is rendered as JSON or
//! CSV. Domain errors such as an inconsistent triangle are results, not
//! failures; they come back as a [`Diagnostic`] with exit code 0.

pub mod check;
pub mod parse;
pub mod random;
pub mod report;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pseudoeuclid::angle::circle_map_with;
use pseudoeuclid::geometry::segment_kind_with;
use pseudoeuclid::triangle::{solve_asa, solve_sas, solve_ssa_with, solve_sss_with};
use pseudoeuclid::{EquilateralHyperbola, ExtendedAngle, KleinIndex, PeError, Point, Tolerance, Triangle};

use parse::SampleRange;
use report::{
    ArmRow, ArmSamples, CircumReport, CoshRow, CoshSamples, SectorReport, SegmentReport, Solution, SolveReport,
};
pub use report::{Diagnostic, Format, Report};

/// Environment variable overriding the null-line tolerance.
pub const EPS_VAR: &str = "PSEUDOEUCLID_EPS";

#[derive(Debug, Parser)]
#[command(
    name = "pseudoeuclid",
    version,
    about = "Hyperbolic numbers and pseudo-Euclidean trigonometry"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sector of a point, or kind of a segment.
    Classify(ClassifyArgs),
    /// Solve a triangle from three of its elements.
    #[command(subcommand)]
    Solve(SolveCommand),
    /// The equilateral hyperbola through three points.
    Circumhyperbola(CircumArgs),
    /// Plot-ready samples of the extended functions.
    #[command(subcommand)]
    Sample(SampleCommand),
    /// Run the randomized identity suite.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ClassifyArgs {
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true, value_parser = parse::point)]
    pub point: Option<Point>,

    #[arg(long, num_args = 2, value_names = ["X1,Y1", "X2,Y2"], allow_hyphen_values = true, value_parser = parse::point)]
    pub segment: Option<Vec<Point>>,
}

/// Angles are written `<theta>,<k>` with `theta` a number or `atanh(r)` and
/// `k` one of `+1`, `+h`, `-1`, `-h`. Sides are signed square lengths.
#[derive(Debug, Subcommand)]
pub enum SolveCommand {
    /// Angle at P1, side opposite to it (D1) and side P1P2 (D3).
    Ssa {
        #[arg(long, allow_hyphen_values = true, value_parser = parse::angle)]
        theta1: ExtendedAngle,
        #[arg(long = "D1", allow_hyphen_values = true, value_parser = parse::finite)]
        d1: f64,
        #[arg(long = "D3", allow_hyphen_values = true, value_parser = parse::finite)]
        d3: f64,
    },
    /// Angles at P1 and P2 and the side P1P2 between them.
    Asa {
        #[arg(long, allow_hyphen_values = true, value_parser = parse::angle)]
        theta1: ExtendedAngle,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::angle)]
        theta2: ExtendedAngle,
        #[arg(long = "D3", allow_hyphen_values = true, value_parser = parse::finite)]
        d3: f64,
    },
    /// Angle at P1 and the two sides leaving it.
    Sas {
        #[arg(long, allow_hyphen_values = true, value_parser = parse::angle)]
        theta1: ExtendedAngle,
        #[arg(long = "D2", allow_hyphen_values = true, value_parser = parse::finite)]
        d2: f64,
        #[arg(long = "D3", allow_hyphen_values = true, value_parser = parse::finite)]
        d3: f64,
    },
    /// Three signed square sides `D1,D2,D3`.
    Sss {
        #[arg(long = "D", value_name = "D1,D2,D3", allow_hyphen_values = true, value_parser = parse::triple)]
        d: [f64; 3],
    },
}

#[derive(Debug, Args)]
pub struct CircumArgs {
    #[arg(long, num_args = 3, required = true, value_names = ["P1", "P2", "P3"], allow_hyphen_values = true, value_parser = parse::point)]
    pub vertices: Vec<Point>,
}

#[derive(Debug, Subcommand)]
pub enum SampleCommand {
    /// `cosh_e` and `sinh_e` along the unit circle, `cos φ / √|cos 2φ|`.
    CoshE {
        #[arg(long, value_name = "FROM:TO:N", allow_hyphen_values = true, value_parser = parse::range)]
        phi: SampleRange,
    },
    /// The four arms of `|x² − y²| = 1`.
    UnitHyperbolas {
        #[arg(long, value_name = "FROM:TO:N", allow_hyphen_values = true, value_parser = parse::range)]
        theta: SampleRange,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Instances per identity.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad parameters, reported with exit code 2.
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

/// Solver preconditions the caller got wrong become usage errors; everything
/// else is a property of the data and is reported as a diagnostic.
fn domain(e: PeError) -> Result<Report, CliError> {
    match e {
        PeError::InvalidInput(_) | PeError::NonFinite | PeError::OverflowingAngle => {
            Err(CliError::Usage(format!("{}: {e}", e.tag())))
        }
        _ => Ok(Report::Error(e.into())),
    }
}

/// Null-line tolerance from the value of [`EPS_VAR`], if set.
pub fn tolerance_from(value: Option<&str>) -> Result<Tolerance, CliError> {
    let Some(v) = value else {
        return Ok(Tolerance::DEFAULT);
    };
    let eps = parse::finite(v).map_err(|m| CliError::Usage(format!("{EPS_VAR}: {m}")))?;
    Tolerance::with_null(eps).map_err(|e| CliError::Usage(format!("{EPS_VAR}: {e}")))
}

pub fn run(command: &Command, tol: &Tolerance) -> Result<Report, CliError> {
    match command {
        Command::Classify(args) => Ok(classify(args, tol)),
        Command::Solve(cmd) => solve(cmd, tol),
        Command::Circumhyperbola(args) => circumhyperbola(&args.vertices, tol),
        Command::Sample(SampleCommand::CoshE { phi }) => Ok(Report::Cosh(sample_cosh(phi, tol))),
        Command::Sample(SampleCommand::UnitHyperbolas { theta }) => sample_arms(theta),
        Command::Check(args) => Ok(Report::Check(check::run_check(&check::identities(), args.seed, args.n))),
    }
}

fn classify(args: &ClassifyArgs, tol: &Tolerance) -> Report {
    match (&args.point, &args.segment) {
        (Some(p), _) => Report::Sector(SectorReport {
            sector: p.as_number().classify_sector_with(tol),
        }),
        (None, Some(seg)) => Report::Segment(SegmentReport {
            kind: segment_kind_with(seg[0], seg[1], tol),
        }),
        (None, None) => unreachable!("clap requires one of --point / --segment"),
    }
}

fn solutions(triangles: Vec<Triangle>) -> Result<Report, CliError> {
    let mut out = Vec::with_capacity(triangles.len());
    for triangle in triangles {
        match triangle.elements() {
            Ok(elements) => out.push(Solution { triangle, elements }),
            Err(e) => return domain(e),
        }
    }
    Ok(Report::Solve(SolveReport { solutions: out }))
}

fn solve(cmd: &SolveCommand, tol: &Tolerance) -> Result<Report, CliError> {
    let found = match *cmd {
        SolveCommand::Ssa { theta1, d1, d3 } => solve_ssa_with(theta1, d1, d3, tol),
        SolveCommand::Asa { theta1, theta2, d3 } => solve_asa(theta1, theta2, d3).map(|t| vec![t]),
        SolveCommand::Sas { theta1, d2, d3 } => solve_sas(theta1, d2, d3).map(|t| vec![t]),
        SolveCommand::Sss { d: [d1, d2, d3] } => solve_sss_with(d1, d2, d3, tol).map(|t| vec![t]),
    };
    match found {
        Ok(ts) => solutions(ts),
        Err(e) => domain(e),
    }
}

fn circumhyperbola(vertices: &[Point], tol: &Tolerance) -> Result<Report, CliError> {
    let t = match Triangle::new_with(vertices[0], vertices[1], vertices[2], tol) {
        Ok(t) => t,
        Err(e) => return domain(e),
    };
    match EquilateralHyperbola::circumscribed(&t) {
        Ok(hyperbola) => Ok(Report::Circum(CircumReport {
            residuals: [0, 1, 2].map(|i| hyperbola.residual(vertices[i])),
            hyperbola,
        })),
        Err(e) => domain(e),
    }
}

/// One row per `φ`; a gap record goes wherever `cos 2φ` changes sign between
/// neighbours, and replaces samples that land on a pole.
fn sample_cosh(range: &SampleRange, tol: &Tolerance) -> CoshSamples {
    let mut rows = Vec::with_capacity(range.n + 8);
    let mut last_sign = None;
    for phi in range.values() {
        let sign = (2.0 * phi).cos() > 0.0;
        if last_sign.is_some_and(|s| s != sign) && rows.last().is_some_and(Option::is_some) {
            rows.push(None);
        }
        last_sign = Some(sign);
        match circle_map_with(phi, tol) {
            Ok((cosh_e, sinh_e)) => rows.push(Some(CoshRow { phi, cosh_e, sinh_e })),
            Err(_) => {
                if rows.last().is_some_and(Option::is_some) {
                    rows.push(None);
                }
                last_sign = None;
            }
        }
    }
    CoshSamples { rows }
}

fn sample_arms(range: &SampleRange) -> Result<Report, CliError> {
    let mut rows = Vec::with_capacity(4 * range.n);
    for arm in KleinIndex::ALL {
        for theta in range.values() {
            let a = ExtendedAngle::new(theta, arm).map_err(|e| CliError::Usage(format!("theta {theta}: {e}")))?;
            let e = a.euler();
            rows.push(ArmRow {
                arm,
                theta,
                x: e.x,
                y: e.y,
            });
        }
    }
    Ok(Report::Arms(ArmSamples { rows }))
}
