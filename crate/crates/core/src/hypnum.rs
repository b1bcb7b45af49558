//! The hyperbolic number `z = x + h·y`, `h² = 1`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::angle::{ExtendedAngle, KleinIndex};
use crate::math;
use crate::{PeError, Result, Tolerance};

/// A hyperbolic (split-complex) number.
///
/// Fields are public like any small numeric value type; the checked
/// constructors refuse NaN and infinities.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HyperbolicNumber {
    pub x: f64,
    pub y: f64,
}

/// Where a number sits relative to the null lines `y = ±x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sector {
    Right,
    Left,
    Up,
    Down,
    #[cfg_attr(feature = "serde", serde(rename = "null+"))]
    NullPlus,
    #[cfg_attr(feature = "serde", serde(rename = "null-"))]
    NullMinus,
    #[cfg_attr(feature = "serde", serde(rename = "origin"))]
    Origin,
}

impl Sector {
    /// Right, Left, Up or Down.
    pub fn is_open(self) -> bool {
        matches!(self, Sector::Right | Sector::Left | Sector::Up | Sector::Down)
    }

    /// Klein index of the unit-hyperbola arm crossing this sector.
    pub fn klein(self) -> Option<KleinIndex> {
        match self {
            Sector::Right => Some(KleinIndex::P1),
            Sector::Left => Some(KleinIndex::M1),
            Sector::Up => Some(KleinIndex::H),
            Sector::Down => Some(KleinIndex::MH),
            _ => None,
        }
    }
}

/// Signed square length `D` together with `d = √|D|`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SquareDistance {
    #[cfg_attr(feature = "serde", serde(rename = "D"))]
    pub square: f64,
    #[cfg_attr(feature = "serde", serde(rename = "d"))]
    pub length: f64,
}

impl SquareDistance {
    pub fn from_square(square: f64) -> SquareDistance {
        SquareDistance {
            square,
            length: math::sqrt(square.abs()),
        }
    }
}

impl HyperbolicNumber {
    pub const ZERO: HyperbolicNumber = HyperbolicNumber { x: 0.0, y: 0.0 };
    pub const ONE: HyperbolicNumber = HyperbolicNumber { x: 1.0, y: 0.0 };
    pub const H: HyperbolicNumber = HyperbolicNumber { x: 0.0, y: 1.0 };

    /// # Panics
    /// If either component is NaN or infinite. See [`Self::try_new`].
    #[inline]
    pub const fn new(x: f64, y: f64) -> HyperbolicNumber {
        assert!(
            x.is_finite() && y.is_finite(),
            "hyperbolic number components must be finite"
        );
        HyperbolicNumber { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<HyperbolicNumber> {
        if x.is_finite() && y.is_finite() {
            Ok(HyperbolicNumber { x, y })
        } else {
            Err(PeError::NonFinite)
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// `z̃ = x − h·y`.
    #[inline]
    pub fn conjugate(self) -> HyperbolicNumber {
        HyperbolicNumber { x: self.x, y: -self.y }
    }

    /// `z·z̃ = x² − y²`.
    ///
    /// Every signed square length in the crate goes through this one
    /// expression.
    #[inline]
    pub fn square_module(self) -> f64 {
        (self.x - self.y) * (self.x + self.y)
    }

    /// `√|z·z̃|`.
    #[inline]
    pub fn module(self) -> f64 {
        math::sqrt(self.square_module().abs())
    }

    /// Euclidean `x² + y²`, the scale used by every tolerance test.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Real part of `b·ã`: the pseudo-Euclidean scalar product `x₁x₂ − y₁y₂`.
    #[inline]
    pub fn scalar(self, other: HyperbolicNumber) -> f64 {
        self.x * other.x - self.y * other.y
    }

    /// Hyperbolic part of `b·ã` for `a = self`: `x₁y₂ − x₂y₁`.
    #[inline]
    pub fn cross(self, other: HyperbolicNumber) -> f64 {
        self.x * other.y - other.x * self.y
    }

    /// Components exchanged, i.e. `h·z`.
    #[inline]
    pub fn swap(self) -> HyperbolicNumber {
        HyperbolicNumber { x: self.y, y: self.x }
    }

    #[inline]
    pub fn scale(self, s: f64) -> HyperbolicNumber {
        HyperbolicNumber {
            x: self.x * s,
            y: self.y * s,
        }
    }

    pub fn is_null(self) -> bool {
        self.is_null_with(&Tolerance::DEFAULT)
    }

    /// On or numerically next to `y = ±x` (the origin included).
    pub fn is_null_with(self, tol: &Tolerance) -> bool {
        tol.is_null(self.square_module(), self.norm_sqr())
    }

    pub fn inverse(self) -> Result<HyperbolicNumber> {
        self.inverse_with(&Tolerance::DEFAULT)
    }

    /// `1/z = z̃ / (z·z̃)`.
    pub fn inverse_with(self, tol: &Tolerance) -> Result<HyperbolicNumber> {
        if self.is_null_with(tol) {
            return Err(PeError::NullDivisor);
        }
        let d = self.square_module();
        Ok(HyperbolicNumber {
            x: self.x / d,
            y: -self.y / d,
        })
    }

    pub fn checked_div(self, rhs: HyperbolicNumber) -> Result<HyperbolicNumber> {
        Ok(self * rhs.inverse()?)
    }

    pub fn classify_sector(self) -> Sector {
        self.classify_sector_with(&Tolerance::DEFAULT)
    }

    pub fn classify_sector_with(self, tol: &Tolerance) -> Sector {
        let HyperbolicNumber { x, y } = self;
        if x == 0.0 && y == 0.0 {
            return Sector::Origin;
        }
        if self.is_null_with(tol) {
            return if (x >= 0.0) == (y >= 0.0) {
                Sector::NullPlus
            } else {
                Sector::NullMinus
            };
        }
        if x.abs() > y.abs() {
            if x > 0.0 {
                Sector::Right
            } else {
                Sector::Left
            }
        } else if y > 0.0 {
            Sector::Up
        } else {
            Sector::Down
        }
    }

    pub fn to_polar(self) -> Result<(f64, ExtendedAngle)> {
        self.to_polar_with(&Tolerance::DEFAULT)
    }

    /// Radial coordinate and extended angle, so that
    /// `z = ρ · k · exp(hθ)` for the arm `k` of the sector holding `z`.
    pub fn to_polar_with(self, tol: &Tolerance) -> Result<(f64, ExtendedAngle)> {
        let angle = ExtendedAngle::from_point_with(self.x, self.y, tol)?;
        Ok((self.module(), angle))
    }

    pub fn from_polar(rho: f64, angle: ExtendedAngle) -> Result<HyperbolicNumber> {
        if !rho.is_finite() {
            return Err(PeError::NonFinite);
        }
        if rho <= 0.0 {
            return Err(PeError::NonPositiveRho);
        }
        Ok(angle.euler().scale(rho))
    }

    /// Multiplication by `k·exp(hθ)`. `module` is preserved for every `k`;
    /// `square_module` changes sign when `k = ±h`.
    pub fn rotate(self, angle: ExtendedAngle) -> HyperbolicNumber {
        self * angle.euler()
    }
}

impl Add for HyperbolicNumber {
    type Output = HyperbolicNumber;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        HyperbolicNumber {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl Sub for HyperbolicNumber {
    type Output = HyperbolicNumber;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        HyperbolicNumber {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

impl Neg for HyperbolicNumber {
    type Output = HyperbolicNumber;
    #[inline]
    fn neg(self) -> Self {
        HyperbolicNumber { x: -self.x, y: -self.y }
    }
}

impl Mul for HyperbolicNumber {
    type Output = HyperbolicNumber;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        HyperbolicNumber {
            x: self.x * rhs.x + self.y * rhs.y,
            y: self.x * rhs.y + rhs.x * self.y,
        }
    }
}

impl Mul<f64> for HyperbolicNumber {
    type Output = HyperbolicNumber;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl fmt::Display for HyperbolicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_sign_negative() {
            write!(f, "{} - h{}", self.x, -self.y)
        } else {
            write!(f, "{} + h{}", self.x, self.y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn z(x: f64, y: f64) -> HyperbolicNumber {
        HyperbolicNumber::new(x, y)
    }

    #[test]
    fn componentwise_algebra() {
        assert_eq!(z(1.0, 2.0) + z(3.0, -2.0), z(4.0, 0.0));
        let a = z(1.5, -7.25);
        assert_eq!(a + (-a), HyperbolicNumber::ZERO);
        assert_eq!(z(5.0, 3.0) + HyperbolicNumber::ZERO, z(5.0, 3.0));
        assert_eq!(z(5.0, 3.0) - z(1.0, 1.0), z(4.0, 2.0));
    }

    #[test]
    fn product_uses_h_squared_one() {
        assert_eq!(z(5.0, 3.0) * z(5.0, -3.0), z(16.0, 0.0));
        assert_eq!(HyperbolicNumber::H * HyperbolicNumber::H, HyperbolicNumber::ONE);
        let b = z(-2.5, 0.125);
        assert_eq!(HyperbolicNumber::ONE * b, b);
    }

    #[test]
    fn module_and_conjugate() {
        assert_eq!(z(5.0, 3.0).square_module(), 16.0);
        assert_eq!(z(5.0, 3.0).module(), 4.0);
        assert_eq!(z(3.0, 5.0).square_module(), -16.0);
        assert_eq!(z(3.0, 5.0).module(), 4.0);
        for t in [-3.5, 0.0, 1e-300, 7.0, 1e150] {
            assert_eq!(z(t, t).square_module(), 0.0);
        }
        let a = z(0.3, -9.0);
        assert_eq!(a.conjugate().conjugate(), a);
        assert_eq!(a * a.conjugate(), z(a.square_module(), 0.0));
    }

    #[test]
    fn inverse_off_and_on_null_lines() {
        assert_eq!(z(2.0, 0.0).inverse().unwrap(), z(0.5, 0.0));
        assert_eq!(z(5.0, 3.0).inverse().unwrap(), z(5.0 / 16.0, -3.0 / 16.0));
        assert_eq!(z(1.0, 1.0).inverse(), Err(PeError::NullDivisor));
        assert_eq!(z(-2.0, 2.0).inverse(), Err(PeError::NullDivisor));
        assert_eq!(HyperbolicNumber::ZERO.inverse(), Err(PeError::NullDivisor));
        // within 1e-12 of the bisector
        assert_eq!(z(1.0, 1.0 - 1e-14).inverse(), Err(PeError::NullDivisor));
        let loose = Tolerance::with_null(0.0).unwrap();
        assert!(z(1.0, 1.0 - 1e-14).inverse_with(&loose).is_ok());
    }

    #[test]
    fn sectors() {
        assert_eq!(z(5.0, 3.0).classify_sector(), Sector::Right);
        assert_eq!(z(-5.0, 3.0).classify_sector(), Sector::Left);
        assert_eq!(z(1.0, 3.0).classify_sector(), Sector::Up);
        assert_eq!(z(-1.0, -3.0).classify_sector(), Sector::Down);
        assert_eq!(z(2.0, 2.0).classify_sector(), Sector::NullPlus);
        assert_eq!(z(-2.0, -2.0).classify_sector(), Sector::NullPlus);
        assert_eq!(z(2.0, -2.0).classify_sector(), Sector::NullMinus);
        assert_eq!(z(0.0, 0.0).classify_sector(), Sector::Origin);
        assert_eq!(z(0.0, -4.0).classify_sector(), Sector::Down);
        assert_eq!(z(4.0, 0.0).classify_sector(), Sector::Right);
    }

    #[test]
    fn polar_on_each_arm() {
        let (c1, s1) = (1f64.cosh(), 1f64.sinh());
        let (rho, a) = z(c1, s1).to_polar().unwrap();
        assert_relative_eq!(rho, 1.0, max_relative = 1e-15);
        assert_relative_eq!(a.theta(), 1.0, max_relative = 1e-15);
        assert_eq!(a.k(), KleinIndex::P1);

        let (rho, a) = z(-s1, -c1).to_polar().unwrap();
        assert_relative_eq!(rho, 1.0, max_relative = 1e-15);
        assert_relative_eq!(a.theta(), 1.0, max_relative = 1e-15);
        assert_eq!(a.k(), KleinIndex::MH);

        assert_eq!(z(1.0, 1.0).to_polar(), Err(PeError::NullDirection));
        assert_eq!(HyperbolicNumber::ZERO.to_polar(), Err(PeError::NullDirection));
    }

    #[test]
    fn from_polar_cases() {
        let one = ExtendedAngle::new(0.0, KleinIndex::P1).unwrap();
        assert_eq!(HyperbolicNumber::from_polar(1.0, one).unwrap(), z(1.0, 0.0));
        let up = ExtendedAngle::new(0.0, KleinIndex::H).unwrap();
        assert_eq!(HyperbolicNumber::from_polar(2.0, up).unwrap(), z(0.0, 2.0));
        let a = ExtendedAngle::new(0.6f64.atanh(), KleinIndex::P1).unwrap();
        let p = HyperbolicNumber::from_polar(4.0, a).unwrap();
        assert_relative_eq!(p.x, 5.0, max_relative = 1e-14);
        assert_relative_eq!(p.y, 3.0, max_relative = 1e-14);
        assert_eq!(HyperbolicNumber::from_polar(0.0, one), Err(PeError::NonPositiveRho));
        assert_eq!(HyperbolicNumber::from_polar(-1.0, one), Err(PeError::NonPositiveRho));
    }

    #[test]
    fn rotation() {
        let id = ExtendedAngle::new(0.0, KleinIndex::P1).unwrap();
        assert_eq!(z(5.0, 3.0).rotate(id), z(5.0, 3.0));
        let h = ExtendedAngle::new(0.0, KleinIndex::H).unwrap();
        assert_eq!(z(1.0, 0.0).rotate(h), z(0.0, 1.0));
        let boost = ExtendedAngle::new(0.7, KleinIndex::P1).unwrap();
        assert_relative_eq!(z(5.0, 3.0).rotate(boost).module(), 4.0, max_relative = 1e-14);
        // k = h flips the sign of the square module but keeps the module
        let r = z(5.0, 3.0).rotate(ExtendedAngle::new(0.7, KleinIndex::H).unwrap());
        assert_relative_eq!(r.square_module(), -16.0, max_relative = 1e-13);
    }

    #[test]
    fn checked_constructor() {
        assert_eq!(HyperbolicNumber::try_new(f64::NAN, 0.0), Err(PeError::NonFinite));
        assert_eq!(HyperbolicNumber::try_new(0.0, f64::INFINITY), Err(PeError::NonFinite));
        assert!(HyperbolicNumber::try_new(1.0, -1.0).is_ok());
    }

    #[test]
    #[should_panic]
    fn new_rejects_nan() {
        let _ = HyperbolicNumber::new(f64::NAN, 1.0);
    }
}
