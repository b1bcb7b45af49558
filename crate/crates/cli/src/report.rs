//! Command results and their JSON / CSV renderings.
//!
//! JSON reports deserialize back into the same types. CSV numbers carry 17
//! significant digits so they round-trip through `f64` as well.

use pseudoeuclid::{EquilateralHyperbola, KleinIndex, PeError, Sector, SegmentKind, Triangle, TriangleElements};
use serde::{Deserialize, Serialize};

use crate::check::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorReport {
    pub sector: Sector,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentReport {
    pub kind: SegmentKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub triangle: Triangle,
    pub elements: TriangleElements,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub solutions: Vec<Solution>,
}

/// A domain error reported as data: `{"error": "<tag>", "message": "..."}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub error: String,
    pub message: String,
}

impl From<PeError> for Diagnostic {
    fn from(e: PeError) -> Self {
        Diagnostic {
            error: e.tag().to_string(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircumReport {
    pub hyperbola: EquilateralHyperbola,
    /// `(Δx)² − (Δy)² − P` at each vertex.
    pub residuals: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoshRow {
    pub phi: f64,
    pub cosh_e: f64,
    pub sinh_e: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArmRow {
    pub arm: KleinIndex,
    pub theta: f64,
    pub x: f64,
    pub y: f64,
}

/// `None` entries are gap markers: the curve has a pole between the
/// neighbouring rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoshSamples {
    pub rows: Vec<Option<CoshRow>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArmSamples {
    pub rows: Vec<ArmRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Sector(SectorReport),
    Segment(SegmentReport),
    Solve(SolveReport),
    Circum(CircumReport),
    Cosh(CoshSamples),
    Arms(ArmSamples),
    Check(CheckReport),
    Error(Diagnostic),
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> String {
        let r = match self {
            Report::Sector(r) => serde_json::to_string(r),
            Report::Segment(r) => serde_json::to_string(r),
            Report::Solve(r) => serde_json::to_string(r),
            Report::Circum(r) => serde_json::to_string(r),
            Report::Cosh(r) => serde_json::to_string(r),
            Report::Arms(r) => serde_json::to_string(r),
            Report::Check(r) => serde_json::to_string(r),
            Report::Error(r) => serde_json::to_string(r),
        };
        r.expect("reports contain only finite numbers")
    }

    pub fn to_csv(&self) -> String {
        match self {
            Report::Sector(r) => csv_table(&["sector"], [vec![tag(r.sector)]]),
            Report::Segment(r) => csv_table(&["kind"], [vec![tag(r.kind)]]),
            Report::Solve(r) => csv_table(
                &[
                    "solution", "x1", "y1", "x2", "y2", "x3", "y3", "D1", "D2", "D3", "theta1", "k1", "theta2", "k2",
                    "theta3", "k3", "S",
                ],
                r.solutions.iter().enumerate().map(|(i, s)| {
                    let mut row = vec![i.to_string()];
                    for p in s.triangle.vertices() {
                        row.extend([num(p.x), num(p.y)]);
                    }
                    row.extend(s.elements.squares.map(num));
                    for a in s.elements.angles {
                        row.extend([num(a.theta()), a.k().as_str().to_string()]);
                    }
                    row.push(num(s.elements.area));
                    row
                }),
            ),
            Report::Circum(r) => {
                let h = &r.hyperbola;
                let mut row = vec![
                    num(h.center().x),
                    num(h.center().y),
                    num(h.square_semi_diameter()),
                    num(h.semi_diameter()),
                    tag(h.kind()),
                ];
                row.extend(r.residuals.map(num));
                csv_table(&["xc", "yc", "P", "p", "kind", "r1", "r2", "r3"], [row])
            }
            Report::Cosh(r) => csv_table(
                &["phi", "cosh_e", "sinh_e"],
                r.rows.iter().map(|row| match row {
                    Some(c) => vec![num(c.phi), num(c.cosh_e), num(c.sinh_e)],
                    None => vec![String::new(); 3],
                }),
            ),
            Report::Arms(r) => csv_table(
                &["arm", "theta", "x", "y"],
                r.rows
                    .iter()
                    .map(|a| vec![a.arm.as_str().to_string(), num(a.theta), num(a.x), num(a.y)]),
            ),
            Report::Check(r) => csv_table(
                &["identity", "max_residual", "tolerance", "pass"],
                r.identities.iter().map(|i| {
                    vec![
                        i.name.clone(),
                        num(i.max_residual),
                        num(i.tolerance),
                        i.pass.to_string(),
                    ]
                }),
            ),
            Report::Error(d) => csv_table(&["error", "message"], [vec![d.error.clone(), d.message.clone()]]),
        }
    }
}

/// The serde name of a unit enum variant.
fn tag<T: Serialize>(v: T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .expect("unit variant")
}
