//! Hyperbolic (split-complex) numbers and trigonometry of the pseudo-Euclidean plane.
//!
//! The plane carries the quadratic form `x² − y²`. Everything here is built on
//! [`HyperbolicNumber`] `z = x + h·y` with `h² = 1`:
//!
//! * [`hypnum`]: the number type, sectors, module and the four-sector polar transform.
//! * [`angle`]: extended `cosh_e` / `sinh_e` valid in every sector, indexed by the
//!   Klein four-group `{+1, +h, −1, −h}`.
//! * [`geometry`]: points, signed square distances, lines of the first and second
//!   kind, pseudo-orthogonality, segment axes and point-line distance.
//! * [`triangle`]: triangle elements, the laws of sines and cosines, the angle sum,
//!   canonical placement and the SSA / ASA / SAS / SSS solvers.
//! * [`hyperbola`]: equilateral hyperbolas as the analog of circles.
//! * [`euclid`]: the Euclidean counterparts, kept as an independent oracle.
//!
//! The crate is `no_std` and only needs `alloc` for the few operations returning
//! a variable number of points.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod math;

pub mod angle;
pub mod euclid;
pub mod geometry;
pub mod hyperbola;
pub mod hypnum;
pub mod triangle;

pub use angle::{circle_map, ExtendedAngle, KleinIndex, MAX_THETA};
pub use error::{PeError, Result};
pub use geometry::{LineDistance, Motion, PeLine, Point, SegmentKind};
pub use hyperbola::{Chord, ChordClass, EquilateralHyperbola, HyperbolaKind};
pub use hypnum::{HyperbolicNumber, Sector, SquareDistance};
pub use triangle::{CosineLawResiduals, Triangle, TriangleElements, TriangleKind};

/// Numerical tolerances shared by every classification in the crate.
///
/// `null` decides when a vector is on a null line: `|x² − y²| ≤ null · (x² + y²)`.
/// `geom` bounds residuals of geometric predicates (point on line, point on
/// hyperbola, pseudo-orthogonality), always scaled by the size of the inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub null: f64,
    pub geom: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        null: 1e-12,
        geom: 1e-9,
    };

    /// Same geometric tolerance, different null-line threshold.
    pub fn with_null(null: f64) -> Result<Tolerance> {
        if !null.is_finite() || null < 0.0 {
            return Err(PeError::InvalidInput("null-line tolerance must be finite and >= 0"));
        }
        Ok(Tolerance {
            null,
            ..Tolerance::DEFAULT
        })
    }

    /// True when the quadratic form `q` is negligible against the Euclidean norm `n2`.
    #[inline]
    pub(crate) fn is_null(&self, q: f64, n2: f64) -> bool {
        q.abs() <= self.null * n2
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}
