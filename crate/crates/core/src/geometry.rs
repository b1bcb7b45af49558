//! Points, signed square distances and straight lines of the pseudo-Euclidean plane.

use crate::angle::{ExtendedAngle, KleinIndex};
use crate::hypnum::{HyperbolicNumber, SquareDistance};
use crate::math;
use crate::{PeError, Result, Tolerance};

/// A point of the plane. Differences of points are [`HyperbolicNumber`]s.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    /// # Panics
    /// If a coordinate is NaN or infinite.
    pub const fn new(x: f64, y: f64) -> Point {
        assert!(x.is_finite() && y.is_finite(), "point coordinates must be finite");
        Point { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Point> {
        HyperbolicNumber::try_new(x, y).map(Point::from)
    }

    #[inline]
    pub fn as_number(self) -> HyperbolicNumber {
        HyperbolicNumber { x: self.x, y: self.y }
    }

    /// `q − self`.
    #[inline]
    pub fn vector_to(self, q: Point) -> HyperbolicNumber {
        HyperbolicNumber {
            x: q.x - self.x,
            y: q.y - self.y,
        }
    }

    #[inline]
    pub fn offset(self, v: HyperbolicNumber) -> Point {
        Point {
            x: self.x + v.x,
            y: self.y + v.y,
        }
    }

    pub fn midpoint(self, q: Point) -> Point {
        Point {
            x: 0.5 * (self.x + q.x),
            y: 0.5 * (self.y + q.y),
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<HyperbolicNumber> for Point {
    fn from(z: HyperbolicNumber) -> Point {
        Point { x: z.x, y: z.y }
    }
}

/// Kind of a segment or line: first (`D > 0`), second (`D < 0`) or null.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum SegmentKind {
    First,
    Second,
    Null,
}

impl SegmentKind {
    pub fn of_vector(v: HyperbolicNumber, tol: &Tolerance) -> SegmentKind {
        if v.is_null_with(tol) {
            SegmentKind::Null
        } else if v.square_module() > 0.0 {
            SegmentKind::First
        } else {
            SegmentKind::Second
        }
    }

    /// First ↔ Second; Null stays Null.
    pub fn opposite(self) -> SegmentKind {
        match self {
            SegmentKind::First => SegmentKind::Second,
            SegmentKind::Second => SegmentKind::First,
            SegmentKind::Null => SegmentKind::Null,
        }
    }
}

/// `D = (Δx)² − (Δy)²` and `d = √|D|`; symmetric in its arguments.
pub fn square_distance(p: Point, q: Point) -> SquareDistance {
    SquareDistance::from_square(p.vector_to(q).square_module())
}

pub fn segment_kind(p: Point, q: Point) -> SegmentKind {
    segment_kind_with(p, q, &Tolerance::DEFAULT)
}

pub fn segment_kind_with(p: Point, q: Point, tol: &Tolerance) -> SegmentKind {
    SegmentKind::of_vector(p.vector_to(q), tol)
}

/// A straight line: anchor point and unit direction.
///
/// The direction is normalized onto the `+1` arm (first kind) or the `+h` arm
/// (second kind) of the unit hyperbolas, so its hyperbolic angle is the `θ` of
/// `(x − x₀) sinh θ − (y − y₀) cosh θ = 0` resp. the `θ'` of
/// `(x − x₀) cosh θ' − (y − y₀) sinh θ' = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawLine"))]
pub struct PeLine {
    anchor: Point,
    #[cfg_attr(feature = "serde", serde(rename = "dir"))]
    direction: HyperbolicNumber,
    kind: SegmentKind,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawLine {
    anchor: Point,
    dir: HyperbolicNumber,
    kind: SegmentKind,
}

#[cfg(feature = "serde")]
impl TryFrom<RawLine> for PeLine {
    type Error = PeError;
    fn try_from(raw: RawLine) -> Result<Self> {
        let line = PeLine::new(raw.anchor, raw.dir)?;
        if line.kind != raw.kind {
            return Err(PeError::InvalidInput("line kind does not match its direction"));
        }
        Ok(line)
    }
}

/// Result of [`PeLine::distance_from`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LineDistance {
    pub distance: SquareDistance,
    pub foot: Point,
}

impl PeLine {
    /// Line through `anchor` along `direction` (any non-null length).
    pub fn new(anchor: Point, direction: HyperbolicNumber) -> Result<PeLine> {
        PeLine::new_with(anchor, direction, &Tolerance::DEFAULT)
    }

    pub fn new_with(anchor: Point, direction: HyperbolicNumber, tol: &Tolerance) -> Result<PeLine> {
        if !anchor.is_finite() {
            return Err(PeError::NonFinite);
        }
        let angle = ExtendedAngle::from_point_with(direction.x, direction.y, tol)?;
        let (kind, arm) = if angle.k().is_real() {
            (SegmentKind::First, KleinIndex::P1)
        } else {
            (SegmentKind::Second, KleinIndex::H)
        };
        let direction = ExtendedAngle::new(angle.theta(), arm)?.euler();
        Ok(PeLine {
            anchor,
            direction,
            kind,
        })
    }

    /// Line through `anchor` with hyperbolic angle `theta`, measured from the
    /// x axis (first kind) or the y axis (second kind).
    pub fn from_angle(anchor: Point, theta: f64, kind: SegmentKind) -> Result<PeLine> {
        let arm = match kind {
            SegmentKind::First => KleinIndex::P1,
            SegmentKind::Second => KleinIndex::H,
            SegmentKind::Null => return Err(PeError::NullDirection),
        };
        let direction = ExtendedAngle::new(theta, arm)?.euler();
        if !anchor.is_finite() {
            return Err(PeError::NonFinite);
        }
        Ok(PeLine {
            anchor,
            direction,
            kind,
        })
    }

    pub fn through(p: Point, q: Point) -> Result<PeLine> {
        PeLine::through_with(p, q, &Tolerance::DEFAULT)
    }

    pub fn through_with(p: Point, q: Point, tol: &Tolerance) -> Result<PeLine> {
        PeLine::new_with(p, p.vector_to(q), tol)
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn direction(&self) -> HyperbolicNumber {
        self.direction
    }

    pub fn kind(&self) -> SegmentKind {
        self.kind
    }

    pub fn theta(&self) -> f64 {
        let d = self.direction;
        0.5 * (math::ln((d.x + d.y).abs()) - math::ln((d.x - d.y).abs()))
    }

    /// Left-hand side of the line equation evaluated at `p`.
    pub fn residual(&self, p: Point) -> f64 {
        let v = self.anchor.vector_to(p);
        v.x * self.direction.y - v.y * self.direction.x
    }

    /// `|residual| ≤ geom · (1 + |coordinates|)`.
    pub fn contains(&self, p: Point, tol: &Tolerance) -> bool {
        let scale = 1.0 + p.x.abs() + p.y.abs() + self.anchor.x.abs() + self.anchor.y.abs();
        let dir = self.direction.x.abs() + self.direction.y.abs();
        self.residual(p).abs() <= tol.geom * scale * dir
    }

    /// `(m, q)` of `y = m x + q`; `None` for a vertical line.
    pub fn slope_intercept(&self) -> Option<(f64, f64)> {
        if self.direction.x == 0.0 {
            return None;
        }
        let m = self.direction.y / self.direction.x;
        Some((m, self.anchor.y - m * self.anchor.x))
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.anchor.offset(self.direction.scale(t))
    }

    /// Scalar product of the two unit directions.
    pub fn direction_scalar(&self, other: &PeLine) -> f64 {
        self.direction.scalar(other.direction)
    }

    pub fn is_pseudo_orthogonal(&self, other: &PeLine) -> bool {
        self.is_pseudo_orthogonal_with(other, &Tolerance::DEFAULT)
    }

    pub fn is_pseudo_orthogonal_with(&self, other: &PeLine, tol: &Tolerance) -> bool {
        let (a, b) = (self.direction, other.direction);
        let scale = (a.x * b.x).abs() + (a.y * b.y).abs();
        a.scalar(b).abs() <= tol.geom * scale
    }

    /// The pseudo-orthogonal line through `p`: opposite kind, same angle.
    pub fn orthogonal_at(&self, p: Point) -> PeLine {
        PeLine {
            anchor: p,
            direction: self.direction.swap(),
            kind: self.kind.opposite(),
        }
    }

    pub fn intersection(&self, other: &PeLine) -> Result<Point> {
        let (d1, d2) = (self.direction, other.direction);
        let det = d1.cross(d2);
        if det.abs() <= Tolerance::DEFAULT.null * math::sqrt(d1.norm_sqr() * d2.norm_sqr()) {
            return Err(PeError::ParallelRays);
        }
        let t = self.anchor.vector_to(other.anchor).cross(d2) / det;
        Ok(self.point_at(t))
    }

    /// Square distance from `p` to the line, measured along the
    /// pseudo-orthogonal through `p`, together with its foot on the line.
    ///
    /// For a second-kind line the signed square distance to the foot is a
    /// maximum over the line; for a first-kind line a minimum.
    pub fn distance_from(&self, p: Point) -> LineDistance {
        let u = self.direction;
        let t = self.anchor.vector_to(p).scalar(u) / u.square_module();
        let foot = self.point_at(t);
        LineDistance {
            distance: square_distance(p, foot),
            foot,
        }
    }
}

/// Locus of points at equal square distance from `p1` and `p2`: the line
/// through the midpoint, pseudo-orthogonal to the segment.
pub fn segment_axis(p1: Point, p2: Point) -> Result<PeLine> {
    segment_axis_with(p1, p2, &Tolerance::DEFAULT)
}

/// From `(x₁ − x₂)(2x − x₁ − x₂) = (y₁ − y₂)(2y − y₁ − y₂)` the axis direction is
/// `(y₁ − y₂, x₁ − x₂)`, which needs no special case for horizontal or
/// vertical segments.
pub fn segment_axis_with(p1: Point, p2: Point, tol: &Tolerance) -> Result<PeLine> {
    let v = p1.vector_to(p2);
    if v.is_null_with(tol) {
        return Err(PeError::NullDirection);
    }
    PeLine::new_with(p1.midpoint(p2), v.swap(), tol)
}

/// Translation followed by a hyperbolic rotation with `k = ±1`:
/// `p ↦ r · (p + shift)`. These maps preserve every square distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Motion {
    shift: HyperbolicNumber,
    rotation: HyperbolicNumber,
}

impl Motion {
    pub const IDENTITY: Motion = Motion {
        shift: HyperbolicNumber::ZERO,
        rotation: HyperbolicNumber::ONE,
    };

    pub fn new(shift: HyperbolicNumber, rotation: ExtendedAngle) -> Result<Motion> {
        if !rotation.k().is_real() {
            return Err(PeError::InvalidInput("a motion rotates with k = +1 or -1"));
        }
        if !shift.is_finite() {
            return Err(PeError::NonFinite);
        }
        Ok(Motion {
            shift,
            rotation: rotation.euler(),
        })
    }

    /// `rotation` must have square module 1 up to rounding.
    pub(crate) fn from_parts(shift: HyperbolicNumber, rotation: HyperbolicNumber) -> Motion {
        debug_assert!((rotation.square_module() - 1.0).abs() < 1e-9);
        Motion { shift, rotation }
    }

    pub fn shift(&self) -> HyperbolicNumber {
        self.shift
    }

    pub fn rotation(&self) -> HyperbolicNumber {
        self.rotation
    }

    pub fn rotation_angle(&self) -> Result<ExtendedAngle> {
        ExtendedAngle::from_point(self.rotation.x, self.rotation.y)
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::from(self.rotation * (p.as_number() + self.shift))
    }

    pub fn inverse(&self) -> Motion {
        Motion {
            shift: -(self.rotation * self.shift),
            rotation: self.rotation.conjugate(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Motion::IDENTITY
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn square_distances() {
        let d = square_distance(pt(0.0, 0.0), pt(5.0, 3.0));
        assert_eq!((d.square, d.length), (16.0, 4.0));
        let d = square_distance(pt(0.0, 0.0), pt(3.0, 5.0));
        assert_eq!((d.square, d.length), (-16.0, 4.0));
        let d = square_distance(pt(1.0, 1.0), pt(2.0, 2.0));
        assert_eq!((d.square, d.length), (0.0, 0.0));
        let (p, q) = (pt(0.1, -7.3), pt(2.9, 4.4));
        assert_eq!(square_distance(p, q), square_distance(q, p));
    }

    #[test]
    fn kinds() {
        assert_eq!(segment_kind(pt(0.0, 0.0), pt(5.0, 3.0)), SegmentKind::First);
        assert_eq!(segment_kind(pt(0.0, 0.0), pt(0.0, 4.0)), SegmentKind::Second);
        assert_eq!(segment_kind(pt(0.0, 0.0), pt(2.0, 2.0)), SegmentKind::Null);
    }

    #[test]
    fn lines_through_points() {
        let l = PeLine::through(pt(0.0, 0.0), pt(2.0, 1.0)).unwrap();
        assert_eq!(l.kind(), SegmentKind::First);
        assert_relative_eq!(l.theta(), 0.5f64.atanh(), max_relative = 1e-15);
        let l = PeLine::through(pt(0.0, 0.0), pt(1.0, 2.0)).unwrap();
        assert_eq!(l.kind(), SegmentKind::Second);
        assert_relative_eq!(l.theta(), 0.5f64.atanh(), max_relative = 1e-15);
        assert_eq!(PeLine::through(pt(0.0, 0.0), pt(3.0, 3.0)), Err(PeError::NullDirection));
        // both points satisfy the line equation, also when traversed backwards
        let (p, q) = (pt(4.0, 1.0), pt(-2.0, -1.5));
        let l = PeLine::through(q, p).unwrap();
        assert!(l.contains(p, &Tolerance::DEFAULT) && l.contains(q, &Tolerance::DEFAULT));
        assert_eq!(l.direction().x.signum(), 1.0);
    }

    #[test]
    fn pseudo_orthogonality() {
        let x_axis = PeLine::through(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        let y_axis = PeLine::through(pt(0.0, 0.0), pt(0.0, 1.0)).unwrap();
        assert!(x_axis.is_pseudo_orthogonal(&y_axis));
        let s2 = PeLine::through(pt(0.0, 0.0), pt(1.0, 2.0)).unwrap();
        let s_half = PeLine::through(pt(3.0, 1.0), pt(5.0, 2.0)).unwrap();
        assert!(s2.is_pseudo_orthogonal(&s_half));
        let a = PeLine::from_angle(pt(0.0, 0.0), 0.3, SegmentKind::First).unwrap();
        let b = PeLine::from_angle(pt(1.0, 0.0), 0.7, SegmentKind::First).unwrap();
        assert!(!a.is_pseudo_orthogonal(&b));
    }

    #[test]
    fn orthogonal_line() {
        let l = PeLine::from_angle(pt(0.0, 0.0), 0.5, SegmentKind::First).unwrap();
        let o = l.orthogonal_at(pt(0.0, 0.0));
        assert_eq!(o.kind(), SegmentKind::Second);
        assert_relative_eq!(o.theta(), 0.5, max_relative = 1e-14);
        assert!(l.is_pseudo_orthogonal(&o));

        let x_axis = PeLine::through(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        let v = x_axis.orthogonal_at(pt(3.0, 0.0));
        assert!(v.contains(pt(3.0, -8.0), &Tolerance::DEFAULT));
        assert_eq!(v.slope_intercept(), None);

        let back = o.orthogonal_at(pt(1.0, 1.0));
        assert_eq!(back.direction(), l.direction());
    }

    #[test]
    fn axes() {
        let a = segment_axis(pt(0.0, 0.0), pt(5.0, 0.0)).unwrap();
        assert_eq!(a.slope_intercept(), None);
        assert!(a.contains(pt(2.5, 17.0), &Tolerance::DEFAULT));

        let a = segment_axis(pt(5.0, 0.0), pt(5.0, 3.0)).unwrap();
        assert_eq!(a.slope_intercept(), Some((0.0, 1.5)));

        let a = segment_axis(pt(0.0, 0.0), pt(4.0, 2.0)).unwrap();
        let (m, q) = a.slope_intercept().unwrap();
        assert_relative_eq!(m, 2.0, max_relative = 1e-15);
        assert_relative_eq!(q, -3.0, max_relative = 1e-15);
        assert!(a.contains(pt(2.0, 1.0), &Tolerance::DEFAULT));

        assert_eq!(segment_axis(pt(0.0, 0.0), pt(1.0, -1.0)), Err(PeError::NullDirection));
    }

    #[test]
    fn point_line_distances() {
        let l = PeLine::through(pt(0.0, 0.0), pt(1.0, 2.0)).unwrap();
        let r = l.distance_from(pt(1.0, 0.0));
        assert_relative_eq!(r.distance.square, 4.0 / 3.0, max_relative = 1e-14);
        assert_relative_eq!(r.distance.length, 2.0 / 3f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(r.foot.x, -1.0 / 3.0, max_relative = 1e-14);

        let r = l.distance_from(pt(2.0, 4.0));
        assert!(r.distance.length < 1e-14);

        let x_axis = PeLine::through(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        let r = x_axis.distance_from(pt(0.0, 1.0));
        assert_eq!(r.distance.square, -1.0);
        assert_eq!(r.distance.length, 1.0);
    }

    #[test]
    fn intersections() {
        let a = PeLine::through(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        let b = PeLine::through(pt(2.0, -1.0), pt(2.0, 5.0)).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), pt(2.0, 0.0));
        let c = PeLine::through(pt(0.0, 1.0), pt(1.0, 1.0)).unwrap();
        assert_eq!(a.intersection(&c), Err(PeError::ParallelRays));
    }

    #[test]
    fn motions() {
        let m = Motion::new(
            HyperbolicNumber::new(7.0, -2.0),
            ExtendedAngle::new(0.4, KleinIndex::M1).unwrap(),
        )
        .unwrap();
        let (p, q) = (pt(1.0, 2.0), pt(-3.0, 0.5));
        assert_relative_eq!(
            square_distance(m.apply(p), m.apply(q)).square,
            square_distance(p, q).square,
            max_relative = 1e-13
        );
        let back = m.inverse().apply(m.apply(p));
        assert_relative_eq!(back.x, p.x, max_relative = 1e-13);
        assert_relative_eq!(back.y, p.y, max_relative = 1e-13);
        assert!(Motion::new(HyperbolicNumber::ZERO, ExtendedAngle::new(0.0, KleinIndex::H).unwrap()).is_err());
    }
}
