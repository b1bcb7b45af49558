//! Equilateral hyperbolas `(x − x_c)² − (y − y_c)² = P`, the pseudo-Euclidean circles.

use alloc::vec::Vec;

use crate::angle::{ExtendedAngle, KleinIndex};
use crate::geometry::{segment_axis, PeLine, Point};
use crate::hypnum::HyperbolicNumber;
use crate::math;
use crate::triangle::Triangle;
use crate::{PeError, Result, Tolerance};

/// Kind of the tangent lines: second kind for `P > 0`, first kind for `P < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum HyperbolaKind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawHyperbola", into = "RawHyperbola"))]
pub struct EquilateralHyperbola {
    center: Point,
    square_semi_diameter: f64,
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct RawHyperbola {
    center: Point,
    #[serde(rename = "P")]
    square_semi_diameter: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<HyperbolaKind>,
}

#[cfg(feature = "serde")]
impl TryFrom<RawHyperbola> for EquilateralHyperbola {
    type Error = PeError;
    fn try_from(raw: RawHyperbola) -> Result<Self> {
        let h = EquilateralHyperbola::new(raw.center, raw.square_semi_diameter)?;
        if raw.kind.is_some_and(|k| k != h.kind()) {
            return Err(PeError::InvalidInput("hyperbola kind does not match the sign of P"));
        }
        Ok(h)
    }
}

#[cfg(feature = "serde")]
impl From<EquilateralHyperbola> for RawHyperbola {
    fn from(h: EquilateralHyperbola) -> Self {
        RawHyperbola {
            center: h.center,
            square_semi_diameter: h.square_semi_diameter,
            p: Some(h.semi_diameter()),
            kind: Some(h.kind()),
        }
    }
}

/// External chords join points of one arm, internal chords points of opposite arms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordClass {
    External,
    Internal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub a: Point,
    pub b: Point,
    pub class: ChordClass,
}

impl EquilateralHyperbola {
    pub fn new(center: Point, square_semi_diameter: f64) -> Result<EquilateralHyperbola> {
        if !center.is_finite() || !square_semi_diameter.is_finite() {
            return Err(PeError::NonFinite);
        }
        if square_semi_diameter == 0.0 {
            return Err(PeError::InvalidInput("P must be nonzero"));
        }
        Ok(EquilateralHyperbola {
            center,
            square_semi_diameter,
        })
    }

    /// `x² − y² = 1`, arms in the Right and Left sectors.
    pub fn unit() -> EquilateralHyperbola {
        EquilateralHyperbola {
            center: Point::ORIGIN,
            square_semi_diameter: 1.0,
        }
    }

    pub fn center(&self) -> Point {
        self.center
    }

    /// Signed square semi-diameter `P`.
    pub fn square_semi_diameter(&self) -> f64 {
        self.square_semi_diameter
    }

    /// `p = √|P|`.
    pub fn semi_diameter(&self) -> f64 {
        math::sqrt(self.square_semi_diameter.abs())
    }

    pub fn kind(&self) -> HyperbolaKind {
        if self.square_semi_diameter > 0.0 {
            HyperbolaKind::Second
        } else {
            HyperbolaKind::First
        }
    }

    /// The two Klein indices whose arms make up this hyperbola.
    pub fn arms(&self) -> [KleinIndex; 2] {
        match self.kind() {
            HyperbolaKind::Second => [KleinIndex::P1, KleinIndex::M1],
            HyperbolaKind::First => [KleinIndex::H, KleinIndex::MH],
        }
    }

    /// `(Δx)² − (Δy)² − P`.
    pub fn residual(&self, p: Point) -> f64 {
        self.center.vector_to(p).square_module() - self.square_semi_diameter
    }

    pub fn contains(&self, p: Point) -> bool {
        self.contains_with(p, &Tolerance::DEFAULT)
    }

    pub fn contains_with(&self, p: Point, tol: &Tolerance) -> bool {
        let scale = self.square_semi_diameter.abs() + self.center.vector_to(p).norm_sqr();
        self.residual(p).abs() <= tol.geom * scale
    }

    fn require(&self, p: Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(PeError::NotOnHyperbola)
        }
    }

    /// `center + p·k·exp(hθ)`.
    pub fn point_at(&self, arm: KleinIndex, theta: f64) -> Result<Point> {
        if !self.arms().contains(&arm) {
            return Err(PeError::InvalidInput("arm does not belong to this hyperbola"));
        }
        let e = ExtendedAngle::new(theta, arm)?.euler();
        Ok(self.center.offset(e.scale(self.semi_diameter())))
    }

    /// `n ≥ 2` points of one arm for `θ` evenly spaced over `[from, to]`.
    pub fn sample_arm(&self, arm: KleinIndex, from: f64, to: f64, n: usize) -> Result<Vec<Point>> {
        if n < 2 {
            return Err(PeError::InvalidInput("need at least two samples"));
        }
        let step = (to - from) / (n - 1) as f64;
        (0..n)
            .map(|i| {
                let theta = if i == n - 1 { to } else { from + step * i as f64 };
                self.point_at(arm, theta)
            })
            .collect()
    }

    /// Arm index and hyperbolic angle of a point on the curve.
    pub fn locate(&self, p: Point) -> Result<ExtendedAngle> {
        self.require(p)?;
        let v = self.center.vector_to(p);
        ExtendedAngle::from_point(v.x, v.y)
    }

    pub fn chord(&self, a: Point, b: Point) -> Result<Chord> {
        let (ka, kb) = (self.locate(a)?.k(), self.locate(b)?.k());
        let class = if ka == kb {
            ChordClass::External
        } else {
            ChordClass::Internal
        };
        Ok(Chord { a, b, class })
    }

    /// Square length of the internal chord from `θ₁` on the first arm to `θ₂`
    /// on the opposite arm. Always `≥ 4p²`, with equality only for diameters.
    pub fn diameter_square_length(&self, theta1: f64, theta2: f64) -> Result<f64> {
        let [near, far] = self.arms();
        let a = self.point_at(near, theta1)?;
        let b = self.point_at(far, theta2)?;
        Ok(a.vector_to(b).square_module().abs())
    }

    /// Normalized scalar product of `center → midpoint` with the chord; zero
    /// when the two are pseudo-orthogonal.
    pub fn midpoint_orthogonality_residual(&self, chord: &Chord) -> Result<f64> {
        self.require(chord.a)?;
        self.require(chord.b)?;
        let radius = self.center.vector_to(chord.a.midpoint(chord.b));
        let along = chord.a.vector_to(chord.b);
        if along.is_null() || radius.is_null() {
            return Err(PeError::NullDirection);
        }
        Ok(radius.scalar(along).abs() / math::sqrt(radius.norm_sqr() * along.norm_sqr()))
    }

    pub fn midpoint_orthogonality_check(&self, chord: &Chord) -> Result<bool> {
        Ok(self.midpoint_orthogonality_residual(chord)? <= Tolerance::DEFAULT.geom)
    }

    /// Tangent at `m`: direction `(Δy, Δx)` for the radius `(Δx, Δy)`.
    pub fn tangent_at(&self, m: Point) -> Result<PeLine> {
        self.require(m)?;
        let radius = self.center.vector_to(m);
        PeLine::new(m, radius.swap())
    }

    /// Angle at `center` from ray `center → a` to ray `center → b`.
    pub fn central_angle(&self, a: Point, b: Point) -> Result<ExtendedAngle> {
        self.require(a)?;
        self.require(b)?;
        vertex_angle(self.center, a, b)
    }

    /// Angle at `p` from ray `p → a` to ray `p → b`, for `p` strictly between
    /// `a` and `b` on their common arm. Its `θ` is half the central one.
    pub fn inscribed_angle(&self, a: Point, b: Point, p: Point) -> Result<ExtendedAngle> {
        let (la, lb, lp) = (self.locate(a)?, self.locate(b)?, self.locate(p)?);
        if a != b {
            if la.k() != lb.k() || lp.k() != la.k() {
                return Err(PeError::InvalidInput("points must lie on one arm"));
            }
            let (lo, hi) = (la.theta().min(lb.theta()), la.theta().max(lb.theta()));
            if !(lo < lp.theta() && lp.theta() < hi) {
                return Err(PeError::InvalidInput("vertex must lie between the chord ends"));
            }
        }
        vertex_angle(p, a, b)
    }

    /// Checks that, with one side of `t` a diameter, the other two sides are
    /// pseudo-orthogonal.
    pub fn thales_check(&self, t: &Triangle) -> Result<bool> {
        let v = t.vertices();
        for p in v {
            self.require(p)?;
        }
        let scale = self.semi_diameter();
        let through_center = |i: usize, j: usize| {
            let m = v[i].midpoint(v[j]);
            let off = self.center.vector_to(m);
            math::sqrt(off.norm_sqr()) <= Tolerance::DEFAULT.geom * (1.0 + scale)
        };
        let apex = [(1, 2, 0), (0, 2, 1), (0, 1, 2)]
            .into_iter()
            .find(|&(i, j, _)| through_center(i, j))
            .map(|(_, _, k)| k)
            .ok_or(PeError::NotADiameter)?;
        let (a, b) = match apex {
            0 => (v[1], v[2]),
            1 => (v[0], v[2]),
            _ => (v[0], v[1]),
        };
        let l1 = PeLine::through(v[apex], a)?;
        let l2 = PeLine::through(v[apex], b)?;
        Ok(l1.is_pseudo_orthogonal(&l2))
    }

    /// The hyperbola through the three vertices.
    ///
    /// The center is where two segment axes cross; `P = −D₁D₂D₃ / (16S²)`.
    pub fn circumscribed(t: &Triangle) -> Result<EquilateralHyperbola> {
        let [p1, p2, p3] = t.vertices();
        let center = segment_axis(p1, p2)?
            .intersection(&segment_axis(p1, p3)?)
            .map_err(|_| PeError::DegenerateTriangle)?;
        let [a, b, c] = t.square_sides();
        let s = t.area();
        EquilateralHyperbola::new(center, -(a * b * c) / (16.0 * s * s))
    }
}

/// Hyperbolic angle at `v` from `v → a` to `v → b`, from the scalar and
/// hyperbolic parts of `(b − v)·conj(a − v)`.
fn vertex_angle(v: Point, a: Point, b: Point) -> Result<ExtendedAngle> {
    let (ra, rb) = (v.vector_to(a), v.vector_to(b));
    if ra == HyperbolicNumber::ZERO || rb == HyperbolicNumber::ZERO {
        return Err(PeError::NullDirection);
    }
    ExtendedAngle::from_point(ra.scalar(rb), ra.cross(rb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn membership() {
        let u = EquilateralHyperbola::unit();
        assert!(u.contains(pt(1f64.cosh(), 1f64.sinh())));
        assert!(!u.contains(pt(1.0, 1.0)));
        let h = EquilateralHyperbola::new(pt(2.5, 1.5), 4.0).unwrap();
        assert!(h.contains(pt(5.0, 3.0)));
        assert!(EquilateralHyperbola::new(pt(0.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn sampling() {
        let u = EquilateralHyperbola::unit();
        let s = u.sample_arm(KleinIndex::P1, 0.0, 0.0, 2).unwrap();
        assert!(s.iter().all(|&p| p == pt(1.0, 0.0)));
        let f = EquilateralHyperbola::new(pt(1.0, 1.0), -9.0).unwrap();
        assert_eq!(f.sample_arm(KleinIndex::H, 0.0, 1.0, 2).unwrap()[0], pt(1.0, 4.0));
        let many = u.sample_arm(KleinIndex::M1, -3.0, 3.0, 100).unwrap();
        assert_eq!(many.len(), 100);
        assert!(many.iter().all(|&p| u.contains(p)));
        assert!(u.sample_arm(KleinIndex::H, 0.0, 1.0, 10).is_err());
        assert!(u.sample_arm(KleinIndex::P1, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn chords() {
        let u = EquilateralHyperbola::unit();
        let a = u.point_at(KleinIndex::P1, 0.3).unwrap();
        let b = u.point_at(KleinIndex::P1, -1.0).unwrap();
        let c = u.point_at(KleinIndex::M1, 0.2).unwrap();
        assert_eq!(u.chord(a, b).unwrap().class, ChordClass::External);
        assert_eq!(u.chord(a, c).unwrap().class, ChordClass::Internal);
        assert_eq!(u.chord(a, pt(3.0, 0.0)), Err(PeError::NotOnHyperbola));
    }

    #[test]
    fn diameters_are_shortest() {
        let h = EquilateralHyperbola::new(pt(0.0, 0.0), 4.0).unwrap();
        assert_relative_eq!(h.diameter_square_length(0.7, 0.7).unwrap(), 16.0, max_relative = 1e-14);
        assert!(h.diameter_square_length(0.7, 0.2).unwrap() > 16.0);
        assert_relative_eq!(
            h.diameter_square_length(1.5, 0.5).unwrap(),
            16.0 * 0.5f64.cosh().powi(2),
            max_relative = 1e-14
        );
    }

    #[test]
    fn midpoint_and_tangent() {
        let u = EquilateralHyperbola::unit();
        let a = u.point_at(KleinIndex::P1, 0.8).unwrap();
        let b = u.point_at(KleinIndex::P1, -0.8).unwrap();
        let chord = u.chord(a, b).unwrap();
        assert!(u.midpoint_orthogonality_check(&chord).unwrap());

        let m = pt(1f64.cosh(), 1f64.sinh());
        let t = u.tangent_at(m).unwrap();
        assert_relative_eq!(t.direction().x, 1f64.sinh(), max_relative = 1e-14);
        assert_relative_eq!(t.direction().y, 1f64.cosh(), max_relative = 1e-14);
        let radius = PeLine::through(u.center(), m).unwrap();
        assert!(t.is_pseudo_orthogonal(&radius));
    }

    #[test]
    fn inscribed_and_central() {
        let u = EquilateralHyperbola::unit();
        let a = u.point_at(KleinIndex::P1, -1.0).unwrap();
        let b = u.point_at(KleinIndex::P1, 1.0).unwrap();
        let p = u.point_at(KleinIndex::P1, 0.0).unwrap();
        let q = u.point_at(KleinIndex::P1, 0.5).unwrap();
        let central = u.central_angle(a, b).unwrap();
        let at_p = u.inscribed_angle(a, b, p).unwrap();
        let at_q = u.inscribed_angle(a, b, q).unwrap();
        assert_relative_eq!(central.theta(), 2.0, max_relative = 1e-14);
        assert_relative_eq!(at_p.theta(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(at_q.theta(), 1.0, max_relative = 1e-12);
        assert_eq!(u.inscribed_angle(a, a, p).unwrap().theta(), 0.0);
        let outside = u.point_at(KleinIndex::P1, 2.0).unwrap();
        assert!(u.inscribed_angle(a, b, outside).is_err());
    }

    #[test]
    fn thales() {
        let u = EquilateralHyperbola::unit();
        let a = pt(1f64.cosh(), 1f64.sinh());
        let b = pt(-1f64.cosh(), -1f64.sinh());
        let v = u.point_at(KleinIndex::P1, -0.4).unwrap();
        let t = Triangle::new(a, b, v).unwrap();
        assert!(u.thales_check(&t).unwrap());

        let w = u.point_at(KleinIndex::M1, -0.9).unwrap();
        let t = Triangle::new(a, w, v).unwrap();
        assert_eq!(u.thales_check(&t), Err(PeError::NotADiameter));
    }

    #[test]
    fn circumscribed_worked() {
        let t = Triangle::new(pt(0.0, 0.0), pt(5.0, 0.0), pt(5.0, 3.0)).unwrap();
        let h = EquilateralHyperbola::circumscribed(&t).unwrap();
        assert_eq!(h.center(), pt(2.5, 1.5));
        assert_eq!(h.square_semi_diameter(), 4.0);
        assert_eq!(h.semi_diameter(), 2.0);
        assert_eq!(h.kind(), HyperbolaKind::Second);
        for v in t.vertices() {
            assert_eq!(h.residual(v), 0.0);
        }
        let e = t.elements().unwrap();
        let [d1, d2, d3] = e.lengths;
        assert_eq!(d1 * d2 * d3 / (4.0 * e.area), 2.0);
    }
}
