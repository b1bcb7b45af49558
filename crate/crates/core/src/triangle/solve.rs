//! Triangle solutions from three elements, at least one of them a side.
//!
//! All solvers return canonical triangles (see [`Triangle::canonicalize`]):
//! `P₁ = (0, 0)`, `P₂ = (d₃, 0)` for `D₃ > 0` or `(0, −d₃)` for `D₃ < 0`.
//! Angles are interior angles of a counter-clockwise triangle, so their
//! `sinh_e` must be positive.

use alloc::vec::Vec;

use super::{canonical_p2, Triangle};
use crate::angle::ExtendedAngle;
use crate::geometry::Point;
use crate::hypnum::HyperbolicNumber;
use crate::math;
use crate::{PeError, Result, Tolerance};

fn check_side(d: f64, what: &'static str) -> Result<()> {
    if !d.is_finite() {
        Err(PeError::NonFinite)
    } else if d == 0.0 {
        Err(PeError::InvalidInput(what))
    } else {
        Ok(())
    }
}

fn check_interior(pair: (f64, f64)) -> Result<()> {
    if pair.1 > 0.0 {
        Ok(())
    } else {
        Err(PeError::InvalidInput("interior angles need sinh_e > 0"))
    }
}

/// Unit direction of side `P₁P₃` in the canonical frame, for the angle at `P₁`
/// given as its `(cosh_e, sinh_e)` pair.
fn first_ray(pair: (f64, f64), d3_sq: f64) -> HyperbolicNumber {
    let e = HyperbolicNumber { x: pair.0, y: pair.1 };
    if d3_sq > 0.0 {
        e
    } else {
        e.swap()
    }
}

/// Unit direction of side `P₂P₃` in the canonical frame, for the angle at `P₂`.
fn second_ray(pair: (f64, f64), d3_sq: f64) -> HyperbolicNumber {
    let (c, s) = pair;
    if d3_sq > 0.0 {
        HyperbolicNumber { x: -c, y: s }
    } else {
        HyperbolicNumber { x: s, y: -c }
    }
}

fn assemble(d3_sq: f64, p3: HyperbolicNumber) -> Result<Triangle> {
    let p2 = canonical_p2(d3_sq, math::sqrt(d3_sq.abs()));
    Triangle::new(Point::ORIGIN, Point::from(p2), Point::from(p3))
}

/// Two sides and the angle opposite to one of them: `θ₁`, `D₁`, `D₃`.
///
/// The law of cosines at `P₁` is a quadratic in `d₂`,
/// `σd₂² − 2d₃ cosh_e θ₁ d₂ + D₃ − D₁ = 0` with `σ = sign D₂` fixed by the arm
/// of `θ₁` and the sign of `D₃`. Zero, one or two positive roots give zero,
/// one or two triangles, sorted by increasing `d₂`.
pub fn solve_ssa(theta1: ExtendedAngle, d1_sq: f64, d3_sq: f64) -> Result<Vec<Triangle>> {
    solve_ssa_with(theta1, d1_sq, d3_sq, &Tolerance::DEFAULT)
}

pub fn solve_ssa_with(theta1: ExtendedAngle, d1_sq: f64, d3_sq: f64, tol: &Tolerance) -> Result<Vec<Triangle>> {
    check_side(d3_sq, "D3 must be nonzero")?;
    check_side(d1_sq, "D1 must be nonzero")?;
    let pair = theta1.pair();
    check_interior(pair)?;

    let d3 = math::sqrt(d3_sq.abs());
    let sigma = theta1.k().quadratic_sign() * d3_sq.signum();
    // d₂ = σd₃c ± √disc
    let b = sigma * d3 * pair.0;
    let rest = sigma * (d3_sq - d1_sq);
    let disc = b * b - rest;
    let scale = b * b + rest.abs();

    let roots: Vec<f64> = if disc.abs() <= tol.null * scale {
        alloc::vec![b]
    } else if disc < 0.0 {
        Vec::new()
    } else {
        // stable pair: the larger root by addition, the other from the product
        let big = b + b.signum() * math::sqrt(disc);
        if big == 0.0 {
            alloc::vec![math::sqrt(disc)]
        } else {
            alloc::vec![big, rest / big]
        }
    };

    let ray = first_ray(pair, d3_sq);
    let mut out: Vec<(f64, Triangle)> = Vec::new();
    for d2 in roots {
        if d2 <= 0.0 {
            continue;
        }
        match assemble(d3_sq, ray.scale(d2)) {
            Ok(t) => out.push((d2, t)),
            Err(PeError::DegenerateTriangle | PeError::NullSide) => {}
            Err(e) => return Err(e),
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out.into_iter().map(|(_, t)| t).collect())
}

/// Two angles and the side between them: `θ₁`, `θ₂`, `D₃`.
///
/// `P₃` is where the rays from `P₁` and `P₂` meet. The rays are carried as
/// `(cosh_e, sinh_e)` directions, so second-kind rays (`cosh_e = 0` on the
/// first axis) need no special case; the ray determinant is
/// `sinh_e θ₁ cosh_e θ₂ + cosh_e θ₁ sinh_e θ₂` for `D₃ > 0`.
pub fn solve_asa(theta1: ExtendedAngle, theta2: ExtendedAngle, d3_sq: f64) -> Result<Triangle> {
    check_side(d3_sq, "D3 must be nonzero")?;
    let (pair1, pair2) = (theta1.pair(), theta2.pair());
    let u1 = first_ray(pair1, d3_sq);
    let u2 = second_ray(pair2, d3_sq);
    let det = u1.cross(u2);
    if det.abs() <= Tolerance::DEFAULT.null * math::sqrt(u1.norm_sqr() * u2.norm_sqr()) {
        return Err(PeError::ParallelRays);
    }
    check_interior(pair1)?;
    check_interior(pair2)?;

    let v = canonical_p2(d3_sq, math::sqrt(d3_sq.abs()));
    let t = v.cross(u2) / det;
    let r = v.cross(u1) / det;
    if !(t > 0.0 && r > 0.0) {
        return Err(PeError::Inconsistent);
    }
    assemble(d3_sq, u1.scale(t))
}

/// Two sides and the angle between them: `θ₁`, `D₂`, `D₃`.
///
/// The sign of `D₂` is not free: it must be `sign(D₃)` on the `±1` arms and
/// `−sign(D₃)` on the `±h` arms.
pub fn solve_sas(theta1: ExtendedAngle, d2_sq: f64, d3_sq: f64) -> Result<Triangle> {
    place_sas(theta1.pair(), theta1.k().quadratic_sign(), d2_sq, d3_sq)
}

fn place_sas(pair: (f64, f64), quadratic: f64, d2_sq: f64, d3_sq: f64) -> Result<Triangle> {
    check_side(d2_sq, "D2 must be nonzero")?;
    check_side(d3_sq, "D3 must be nonzero")?;
    check_interior(pair)?;
    if d2_sq.signum() != quadratic * d3_sq.signum() {
        return Err(PeError::Inconsistent);
    }
    let d2 = math::sqrt(d2_sq.abs());
    assemble(d3_sq, first_ray(pair, d3_sq).scale(d2))
}

/// Three signed square sides.
///
/// `cosh_e θ₁ = (D₂ + D₃ − D₁) / (2d₂d₃)` and `sinh_e² θ₁ = cosh_e² θ₁ − sign(D₂D₃)`.
/// A non-positive `sinh_e²` means no real triangle.
pub fn solve_sss(d1_sq: f64, d2_sq: f64, d3_sq: f64) -> Result<Triangle> {
    solve_sss_with(d1_sq, d2_sq, d3_sq, &Tolerance::DEFAULT)
}

pub fn solve_sss_with(d1_sq: f64, d2_sq: f64, d3_sq: f64, tol: &Tolerance) -> Result<Triangle> {
    for (d, what) in [
        (d1_sq, "D1 must be nonzero"),
        (d2_sq, "D2 must be nonzero"),
        (d3_sq, "D3 must be nonzero"),
    ] {
        check_side(d, what)?;
    }
    let (d2, d3) = (math::sqrt(d2_sq.abs()), math::sqrt(d3_sq.abs()));
    let quadratic = d2_sq.signum() * d3_sq.signum();
    let c = (d2_sq + d3_sq - d1_sq) / (2.0 * d2 * d3);
    let s_sq = c * c - quadratic;
    if s_sq <= tol.null * (c * c + 1.0) {
        return Err(PeError::Inconsistent);
    }
    place_sas((c, math::sqrt(s_sq)), quadratic, d2_sq, d3_sq)
}
