//! Euclidean counterparts of the pseudo-Euclidean invariants.
//!
//! Kept deliberately separate from the rest of the crate so tests can compare
//! the two geometries on identical inputs.

use crate::geometry::Point;
use crate::math;
use crate::{PeError, Result};

/// `cos` and `sin` of the angle from one vector to another.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanAngleValues {
    pub cos: f64,
    pub sin: f64,
}

/// Real and imaginary part of `v₂·v̄₁`, divided by `|v₁||v₂|`.
pub fn euclid_angle(v1: Point, v2: Point) -> Result<EuclideanAngleValues> {
    let r1 = math::sqrt(v1.x * v1.x + v1.y * v1.y);
    let r2 = math::sqrt(v2.x * v2.x + v2.y * v2.y);
    if r1 == 0.0 || r2 == 0.0 {
        return Err(PeError::InvalidInput("zero vector"));
    }
    let den = r1 * r2;
    Ok(EuclideanAngleValues {
        cos: (v1.x * v2.x + v1.y * v2.y) / den,
        sin: (v1.x * v2.y - v2.x * v1.y) / den,
    })
}

/// Gauss shoelace area of the triangle `p1 p2 p3`; positive when counter-clockwise.
pub fn euclid_signed_area(p1: Point, p2: Point, p3: Point) -> f64 {
    (p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y)) / 2.0
}
