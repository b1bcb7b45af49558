//! Extended hyperbolic functions and Klein-indexed angles.
//!
//! A plain hyperbolic angle only reaches the right arm of `x² − y² = 1`. Pairing
//! it with `k ∈ {+1, +h, −1, −h}` reaches all four arms of `|x² − y²| = 1`, and
//! `(θ, k)` then behaves exactly like the unit-module numbers under
//! multiplication: angles add, indices multiply.

use core::fmt;
use core::ops::{Mul, Neg};

use crate::hypnum::HyperbolicNumber;
use crate::math;
use crate::{PeError, Result, Tolerance};

/// Largest admitted `|θ|`. `cosh(350)² ≈ 2.5e303`, so products of two extended
/// functions, as in the addition formulas, stay finite.
pub const MAX_THETA: f64 = 350.0;

/// Element of the Klein four-group `{+1, +h, −1, −h}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum KleinIndex {
    #[cfg_attr(feature = "serde", serde(rename = "+1"))]
    P1,
    #[cfg_attr(feature = "serde", serde(rename = "+h"))]
    H,
    #[cfg_attr(feature = "serde", serde(rename = "-1"))]
    M1,
    #[cfg_attr(feature = "serde", serde(rename = "-h"))]
    MH,
}

impl KleinIndex {
    pub const ALL: [KleinIndex; 4] = [KleinIndex::P1, KleinIndex::H, KleinIndex::M1, KleinIndex::MH];

    /// `+1` or `−1`: the arm lies in the Right or Left sector.
    pub fn is_real(self) -> bool {
        matches!(self, KleinIndex::P1 | KleinIndex::M1)
    }

    /// `cosh_e² − sinh_e²` on this arm.
    pub fn quadratic_sign(self) -> f64 {
        if self.is_real() {
            1.0
        } else {
            -1.0
        }
    }

    pub fn as_number(self) -> HyperbolicNumber {
        match self {
            KleinIndex::P1 => HyperbolicNumber { x: 1.0, y: 0.0 },
            KleinIndex::H => HyperbolicNumber { x: 0.0, y: 1.0 },
            KleinIndex::M1 => HyperbolicNumber { x: -1.0, y: 0.0 },
            KleinIndex::MH => HyperbolicNumber { x: 0.0, y: -1.0 },
        }
    }

    /// Every element is its own inverse.
    pub fn inverse(self) -> KleinIndex {
        self
    }

    pub fn as_str(self) -> &'static str {
        match self {
            KleinIndex::P1 => "+1",
            KleinIndex::H => "+h",
            KleinIndex::M1 => "-1",
            KleinIndex::MH => "-h",
        }
    }

    pub fn parse(s: &str) -> Option<KleinIndex> {
        match s.trim() {
            "+1" | "1" => Some(KleinIndex::P1),
            "+h" | "h" => Some(KleinIndex::H),
            "-1" => Some(KleinIndex::M1),
            "-h" => Some(KleinIndex::MH),
            _ => None,
        }
    }
}

impl Mul for KleinIndex {
    type Output = KleinIndex;

    fn mul(self, rhs: KleinIndex) -> KleinIndex {
        use KleinIndex::*;
        match (self, rhs) {
            (P1, k) | (k, P1) => k,
            (H, H) => P1,
            (H, M1) | (M1, H) => MH,
            (H, MH) | (MH, H) => M1,
            (M1, M1) => P1,
            (M1, MH) | (MH, M1) => H,
            (MH, MH) => P1,
        }
    }
}

impl fmt::Display for KleinIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The ordered pair `θ_k = (θ, k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawAngle"))]
pub struct ExtendedAngle {
    theta: f64,
    k: KleinIndex,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawAngle {
    theta: f64,
    k: KleinIndex,
}

#[cfg(feature = "serde")]
impl TryFrom<RawAngle> for ExtendedAngle {
    type Error = PeError;
    fn try_from(raw: RawAngle) -> Result<Self> {
        ExtendedAngle::new(raw.theta, raw.k)
    }
}

impl ExtendedAngle {
    pub const ZERO: ExtendedAngle = ExtendedAngle {
        theta: 0.0,
        k: KleinIndex::P1,
    };

    pub fn new(theta: f64, k: KleinIndex) -> Result<ExtendedAngle> {
        if !theta.is_finite() {
            return Err(PeError::NonFinite);
        }
        if theta.abs() > MAX_THETA {
            return Err(PeError::OverflowingAngle);
        }
        Ok(ExtendedAngle { theta, k })
    }

    /// For sums of already validated angles whose `cosh_e` is never evaluated.
    pub(crate) fn unchecked(theta: f64, k: KleinIndex) -> ExtendedAngle {
        ExtendedAngle { theta, k }
    }

    /// Angle on the Right arm.
    pub fn real(theta: f64) -> Result<ExtendedAngle> {
        ExtendedAngle::new(theta, KleinIndex::P1)
    }

    #[inline]
    pub fn theta(&self) -> f64 {
        self.theta
    }

    #[inline]
    pub fn k(&self) -> KleinIndex {
        self.k
    }

    pub fn cosh_e(&self) -> f64 {
        self.pair().0
    }

    pub fn sinh_e(&self) -> f64 {
        self.pair().1
    }

    /// `(cosh_e, sinh_e)`.
    pub fn pair(&self) -> (f64, f64) {
        let (c, s) = (math::cosh(self.theta), math::sinh(self.theta));
        match self.k {
            KleinIndex::P1 => (c, s),
            KleinIndex::M1 => (-c, -s),
            KleinIndex::H => (s, c),
            KleinIndex::MH => (-s, -c),
        }
    }

    /// `exp_e(hθ) = cosh_e θ + h sinh_e θ`, a point of `|x² − y²| = 1`.
    pub fn euler(&self) -> HyperbolicNumber {
        let (x, y) = self.pair();
        HyperbolicNumber { x, y }
    }

    pub fn from_point(x: f64, y: f64) -> Result<ExtendedAngle> {
        ExtendedAngle::from_point_with(x, y, &Tolerance::DEFAULT)
    }

    /// The angle of the direction `(x, y)`.
    ///
    /// `k` is `sign(x)·1` when `|x| > |y|` and `sign(y)·h` otherwise. On every
    /// arm `θ = ½ ln(|x + y| / |x − y|)`, which equals `atanh(y/x)` or
    /// `atanh(x/y)` without the cancellation in `1 − y/x`.
    pub fn from_point_with(x: f64, y: f64, tol: &Tolerance) -> Result<ExtendedAngle> {
        let z = HyperbolicNumber::try_new(x, y)?;
        if z.is_null_with(tol) {
            return Err(PeError::NullDirection);
        }
        let k = if x.abs() > y.abs() {
            if x > 0.0 {
                KleinIndex::P1
            } else {
                KleinIndex::M1
            }
        } else if y > 0.0 {
            KleinIndex::H
        } else {
            KleinIndex::MH
        };
        let theta = 0.5 * (math::ln((x + y).abs()) - math::ln((x - y).abs()));
        ExtendedAngle::new(theta, k)
    }

    /// `(θ + θ')_{k·k'}`.
    pub fn add(&self, other: &ExtendedAngle) -> Result<ExtendedAngle> {
        ExtendedAngle::new(self.theta + other.theta, self.k * other.k)
    }

    /// `(θ − θ')_{k·k'}`; each Klein element is its own inverse.
    pub fn sub(&self, other: &ExtendedAngle) -> Result<ExtendedAngle> {
        ExtendedAngle::new(self.theta - other.theta, self.k * other.k.inverse())
    }
}

impl Neg for ExtendedAngle {
    type Output = ExtendedAngle;
    fn neg(self) -> ExtendedAngle {
        ExtendedAngle {
            theta: -self.theta,
            k: self.k,
        }
    }
}

impl fmt::Display for ExtendedAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})_{}", self.theta, self.k)
    }
}

pub fn circle_map(phi: f64) -> Result<(f64, f64)> {
    circle_map_with(phi, &Tolerance::DEFAULT)
}

/// Central projection of the unit circle point at `phi` onto the unit
/// hyperbolas: `(cos φ, sin φ) / √|cos 2φ|`.
pub fn circle_map_with(phi: f64, tol: &Tolerance) -> Result<(f64, f64)> {
    if !phi.is_finite() {
        return Err(PeError::NonFinite);
    }
    let c2 = math::cos(2.0 * phi);
    if c2.abs() <= tol.null {
        return Err(PeError::NullDirection);
    }
    let r = math::sqrt(c2.abs());
    Ok((math::cos(phi) / r, math::sin(phi) / r))
}
