//! Triangles: elements, trigonometric laws, angle sum and canonical placement.
//!
//! Vertices are kept counter-clockwise. With that orientation every interior
//! angle has `sinh_e θ > 0` and the three `sinh_e` share the numerator `2S`.

mod solve;

pub use solve::{solve_asa, solve_sas, solve_ssa, solve_ssa_with, solve_sss, solve_sss_with};

use crate::angle::{ExtendedAngle, KleinIndex};
use crate::geometry::{Motion, Point, SegmentKind};
use crate::hypnum::HyperbolicNumber;
use crate::math;
use crate::{PeError, Result, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawTriangle"))]
pub struct Triangle {
    vertices: [Point; 3],
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawTriangle {
    vertices: [Point; 3],
}

#[cfg(feature = "serde")]
impl TryFrom<RawTriangle> for Triangle {
    type Error = PeError;
    fn try_from(raw: RawTriangle) -> Result<Self> {
        let [a, b, c] = raw.vertices;
        Triangle::new(a, b, c)
    }
}

/// Sides, angles and area of a triangle.
///
/// Index `i` refers to vertex `Pᵢ₊₁` and to the side opposite to it.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TriangleElements {
    /// Signed square side lengths `Dᵢ`.
    #[cfg_attr(feature = "serde", serde(rename = "D"))]
    pub squares: [f64; 3],
    /// `dᵢ = √|Dᵢ|`.
    #[cfg_attr(feature = "serde", serde(rename = "d"))]
    pub lengths: [f64; 3],
    pub angles: [ExtendedAngle; 3],
    pub cosh_e: [f64; 3],
    pub sinh_e: [f64; 3],
    /// Pseudo-Euclidean area `S`.
    #[cfg_attr(feature = "serde", serde(rename = "S"))]
    pub area: f64,
}

/// Residuals of `Dᵢ = Dⱼ + Dₖ − 2dⱼdₖ cosh_e θᵢ` (`carnot`) and of
/// `dᵢ = |dⱼ cosh_e θₖ + dₖ cosh_e θⱼ|` (`projection`), per vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineLawResiduals {
    pub carnot: [f64; 3],
    pub projection: [f64; 3],
    /// Whether the expression inside `|…|` of the projection law was negative.
    /// It always carries the sign of `Dᵢ`.
    pub projection_negative: [bool; 3],
}

impl CosineLawResiduals {
    pub fn max_abs(&self) -> f64 {
        self.carnot
            .iter()
            .chain(self.projection.iter())
            .fold(0.0, |m, r| m.max(r.abs()))
    }
}

/// The two families split by the sign of `D₁D₂D₃`, named after the kind of
/// their circumscribed hyperbola.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum TriangleKind {
    /// `D₁D₂D₃ > 0`, circumscribed hyperbola with `P < 0`.
    First,
    /// `D₁D₂D₃ < 0`, circumscribed hyperbola with `P > 0`.
    Second,
}

/// `x₁(y₂ − y₃) + x₂(y₃ − y₁) + x₃(y₁ − y₂)`, twice the signed area.
#[inline]
fn twice_area(p: &[Point; 3]) -> f64 {
    p[0].x * (p[1].y - p[2].y) + p[1].x * (p[2].y - p[0].y) + p[2].x * (p[0].y - p[1].y)
}

impl Triangle {
    pub fn new(p1: Point, p2: Point, p3: Point) -> Result<Triangle> {
        Triangle::new_with(p1, p2, p3, &Tolerance::DEFAULT)
    }

    /// Validates the vertices and orders them counter-clockwise, swapping
    /// `p2` and `p3` when needed.
    pub fn new_with(p1: Point, p2: Point, p3: Point, tol: &Tolerance) -> Result<Triangle> {
        let mut vertices = [p1, p2, p3];
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(PeError::NonFinite);
        }
        let two_s = twice_area(&vertices);
        let (e2, e3) = (p1.vector_to(p3), p1.vector_to(p2));
        if !two_s.is_finite() || two_s.abs() <= tol.null * math::sqrt(e2.norm_sqr() * e3.norm_sqr()) {
            return Err(PeError::DegenerateTriangle);
        }
        for (a, b) in [(1, 2), (0, 2), (0, 1)] {
            if vertices[a].vector_to(vertices[b]).is_null_with(tol) {
                return Err(PeError::NullSide);
            }
        }
        if two_s < 0.0 {
            vertices.swap(1, 2);
        }
        Ok(Triangle { vertices })
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    /// `S`, positive for the stored orientation.
    pub fn area(&self) -> f64 {
        twice_area(&self.vertices) / 2.0
    }

    /// `Dᵢ`: side `P₂P₃`, `P₁P₃`, `P₁P₂`.
    pub fn square_sides(&self) -> [f64; 3] {
        let [p1, p2, p3] = self.vertices;
        [
            p2.vector_to(p3).square_module(),
            p1.vector_to(p3).square_module(),
            p1.vector_to(p2).square_module(),
        ]
    }

    pub fn side_kinds(&self) -> [SegmentKind; 3] {
        self.square_sides().map(|d| {
            if d > 0.0 {
                SegmentKind::First
            } else {
                SegmentKind::Second
            }
        })
    }

    pub fn kind(&self) -> TriangleKind {
        let [a, b, c] = self.square_sides();
        if a * b * c > 0.0 {
            TriangleKind::First
        } else {
            TriangleKind::Second
        }
    }

    pub fn elements(&self) -> Result<TriangleElements> {
        let [p1, p2, p3] = self.vertices;
        let squares = self.square_sides();
        let lengths = squares.map(|d| math::sqrt(d.abs()));
        let [d1, d2, d3] = lengths;

        // scalar / hyperbolic parts of v₂·ṽ₁ for the two sides leaving each vertex
        let (a12, a13, a23) = (p1.vector_to(p2), p1.vector_to(p3), p2.vector_to(p3));
        let parts = [
            (a12.scalar(a13), a12.cross(a13), d2 * d3),
            (-a23.scalar(a12), a12.cross(a23), d1 * d3),
            (a23.scalar(a13), a13.cross(a23), d1 * d2),
        ];

        let exact = Tolerance {
            null: 0.0,
            ..Tolerance::DEFAULT
        };
        let mut angles = [ExtendedAngle::ZERO; 3];
        let mut cosh_e = [0.0; 3];
        let mut sinh_e = [0.0; 3];
        for (i, &(dot, cross, den)) in parts.iter().enumerate() {
            angles[i] = ExtendedAngle::from_point_with(dot, cross, &exact)?;
            cosh_e[i] = dot / den;
            sinh_e[i] = cross / den;
        }
        Ok(TriangleElements {
            squares,
            lengths,
            angles,
            cosh_e,
            sinh_e,
            area: self.area(),
        })
    }

    /// `true` when `cosh_e θᵢ` vanishes, `i ∈ {0, 1, 2}`.
    pub fn is_right_angle_at(&self, i: usize) -> Result<bool> {
        self.is_right_angle_at_with(i, &Tolerance::DEFAULT)
    }

    pub fn is_right_angle_at_with(&self, i: usize, tol: &Tolerance) -> Result<bool> {
        if i > 2 {
            return Err(PeError::InvalidInput("vertex index must be 0, 1 or 2"));
        }
        Ok(self.elements()?.cosh_e[i].abs() <= tol.geom)
    }

    /// `(θ₁ + θ₂ + θ₃)_{k·k'·k''}`; always `(0)_{±1}` up to rounding.
    pub fn angle_sum(&self) -> Result<ExtendedAngle> {
        Ok(self.elements()?.angle_sum())
    }

    /// Moves `P₁` to the origin and `P₂` to `(d₃, 0)` when `D₃ > 0`, or to
    /// `(0, −d₃)` when `D₃ < 0`, with a translation and a `k = ±1` rotation.
    /// Orientation is preserved, so the image stays counter-clockwise.
    pub fn canonicalize(&self) -> Result<(Motion, Triangle)> {
        let [p1, p2, p3] = self.vertices;
        let v = p1.vector_to(p2);
        let d_sq = v.square_module();
        let d = math::sqrt(d_sq.abs());
        let target = canonical_p2(d_sq, d);
        // r·v = target, and r·r̃ = target·t̃arget / D₃ = 1
        let r = (target * v.conjugate()).scale(1.0 / d_sq);
        let motion = Motion::from_parts(-p1.as_number(), r);
        let image = Triangle::new(Point::ORIGIN, Point::from(target), motion.apply(p3))?;
        Ok((motion, image))
    }

    pub fn apply(&self, motion: &Motion) -> Result<Triangle> {
        let [a, b, c] = self.vertices.map(|p| motion.apply(p));
        Triangle::new(a, b, c)
    }

    pub fn law_of_sines_residual(&self) -> Result<f64> {
        Ok(self.elements()?.law_of_sines_residual())
    }

    pub fn law_of_cosines(&self) -> Result<CosineLawResiduals> {
        Ok(self.elements()?.law_of_cosines())
    }
}

/// Canonical `P₂` for a first side of signed square length `d_sq`.
pub(crate) fn canonical_p2(d_sq: f64, d: f64) -> HyperbolicNumber {
    if d_sq > 0.0 {
        HyperbolicNumber { x: d, y: 0.0 }
    } else {
        HyperbolicNumber { x: 0.0, y: -d }
    }
}

impl TriangleElements {
    /// Largest pairwise difference of `sinh_e θᵢ / dᵢ`.
    pub fn law_of_sines_residual(&self) -> f64 {
        let r: [f64; 3] = core::array::from_fn(|i| self.sinh_e[i] / self.lengths[i]);
        (r[0] - r[1]).abs().max((r[0] - r[2]).abs()).max((r[1] - r[2]).abs())
    }

    /// The common ratio `sinh_e θᵢ / dᵢ`, here taken at vertex 1.
    pub fn sine_ratio(&self) -> f64 {
        self.sinh_e[0] / self.lengths[0]
    }

    /// `dⱼdₖ sinh_e θᵢ` for each `i`; all three equal `2S`.
    pub fn area_products(&self) -> [f64; 3] {
        let d = self.lengths;
        [
            d[1] * d[2] * self.sinh_e[0],
            d[0] * d[2] * self.sinh_e[1],
            d[0] * d[1] * self.sinh_e[2],
        ]
    }

    pub fn law_of_cosines(&self) -> CosineLawResiduals {
        let (dd, d, c) = (self.squares, self.lengths, self.cosh_e);
        let mut out = CosineLawResiduals {
            carnot: [0.0; 3],
            projection: [0.0; 3],
            projection_negative: [false; 3],
        };
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            out.carnot[i] = dd[i] - (dd[j] + dd[k] - 2.0 * d[j] * d[k] * c[i]);
            let inner = d[j] * c[k] + d[k] * c[j];
            out.projection[i] = d[i] - inner.abs();
            out.projection_negative[i] = inner < 0.0;
        }
        out
    }

    pub fn angle_sum(&self) -> ExtendedAngle {
        let theta = self.angles.iter().map(|a| a.theta()).sum();
        let k = self.angles.iter().fold(KleinIndex::P1, |k, a| k * a.k());
        ExtendedAngle::unchecked(theta, k)
    }

    /// `−D₁D₂D₃ / (d₁d₂d₃)²`, the value `cosh_e` of the angle sum must take.
    pub fn angle_sum_cosh(&self) -> f64 {
        let [a, b, c] = self.squares;
        let [x, y, z] = self.lengths;
        -(a * b * c) / (x * x * y * y * z * z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn worked() -> Triangle {
        Triangle::new(pt(0.0, 0.0), pt(5.0, 0.0), pt(5.0, 3.0)).unwrap()
    }

    #[test]
    fn worked_elements() {
        let e = worked().elements().unwrap();
        assert_eq!(e.squares, [-9.0, 16.0, 25.0]);
        assert_eq!(e.lengths, [3.0, 4.0, 5.0]);
        assert_eq!(e.area, 7.5);
        assert_eq!(e.cosh_e, [1.25, 0.0, -0.75]);
        assert_eq!(e.sinh_e, [0.75, 1.0, 1.25]);
        assert_eq!(e.angles[0].k(), KleinIndex::P1);
        assert_eq!(e.angles[1].k(), KleinIndex::H);
        assert_eq!(e.angles[2].k(), KleinIndex::H);
        assert_eq!(e.area_products(), [15.0, 15.0, 15.0]);
    }

    #[test]
    fn second_example() {
        let e = Triangle::new(pt(0.0, 0.0), pt(5.0, 0.0), pt(3.0, 1.0))
            .unwrap()
            .elements()
            .unwrap();
        assert_eq!(e.squares, [3.0, 8.0, 25.0]);
        let r8 = 8f64.sqrt();
        assert_relative_eq!(e.sinh_e[0], 1.0 / r8, max_relative = 1e-15);
        assert_relative_eq!(e.cosh_e[0], 3.0 / r8, max_relative = 1e-15);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Triangle::new(pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 0.0)),
            Err(PeError::NullSide)
        );
        assert_eq!(
            Triangle::new(pt(0.0, 0.0), pt(1.0, 0.5), pt(2.0, 1.0)),
            Err(PeError::DegenerateTriangle)
        );
        assert_eq!(
            Triangle::new(pt(1.0, 0.0), pt(1.0, 0.0), pt(2.0, 5.0)),
            Err(PeError::DegenerateTriangle)
        );
    }

    #[test]
    fn clockwise_input_is_reordered() {
        let t = Triangle::new(pt(0.0, 0.0), pt(5.0, 3.0), pt(5.0, 0.0)).unwrap();
        assert_eq!(t.vertices(), worked().vertices());
    }

    #[test]
    fn laws_on_worked_triangle() {
        let t = worked();
        assert_eq!(t.law_of_sines_residual().unwrap(), 0.0);
        assert_eq!(t.elements().unwrap().sine_ratio(), 0.25);
        let r = t.law_of_cosines().unwrap();
        assert_eq!(r.carnot, [0.0; 3]);
        assert_eq!(r.projection, [0.0; 3]);
        assert_eq!(r.projection_negative, [true, false, false]);

        let big = Triangle::new(pt(0.0, 0.0), pt(10.0, 0.0), pt(10.0, 6.0)).unwrap();
        assert_eq!(big.elements().unwrap().sine_ratio(), 0.125);
        assert_eq!(big.law_of_sines_residual().unwrap(), 0.0);
    }

    #[test]
    fn right_angles() {
        let t = worked();
        assert!(t.is_right_angle_at(1).unwrap());
        assert!(!t.is_right_angle_at(0).unwrap());
        assert!(!t.is_right_angle_at(2).unwrap());
        let [d1, d2, d3] = t.square_sides();
        assert_eq!(d2, d1 + d3);
        assert!(t.is_right_angle_at(3).is_err());
        let g = Triangle::new(pt(0.0, 0.0), pt(4.0, 1.0), pt(1.0, 3.0)).unwrap();
        for i in 0..3 {
            assert!(!g.is_right_angle_at(i).unwrap());
        }
    }

    #[test]
    fn worked_angle_sum() {
        let s = worked().angle_sum().unwrap();
        assert!(s.theta().abs() < 1e-15);
        assert_eq!(s.k(), KleinIndex::P1);
        assert_eq!(worked().kind(), TriangleKind::Second);
    }

    #[test]
    fn canonical_placement() {
        let (m, c) = worked().canonicalize().unwrap();
        assert!(m.is_identity());
        assert_eq!(c, worked());

        let shifted = Triangle::new(pt(7.0, -2.0), pt(12.0, -2.0), pt(12.0, 1.0)).unwrap();
        let (_, c) = shifted.canonicalize().unwrap();
        assert_eq!(c, worked());

        // second-kind first side goes to the negative y axis
        let t = Triangle::new(pt(1.0, 1.0), pt(2.0, 5.0), pt(-3.0, 2.0)).unwrap();
        let (_, c) = t.canonicalize().unwrap();
        let [q1, q2, _] = c.vertices();
        assert_eq!(q1, Point::ORIGIN);
        assert_eq!(q2.x, 0.0);
        assert!(q2.y < 0.0);
        let (a, b) = (t.elements().unwrap(), c.elements().unwrap());
        for i in 0..3 {
            assert_relative_eq!(a.squares[i], b.squares[i], max_relative = 1e-12);
            assert_relative_eq!(a.angles[i].theta(), b.angles[i].theta(), epsilon = 1e-12);
            assert_eq!(a.angles[i].k(), b.angles[i].k());
        }
    }
}
