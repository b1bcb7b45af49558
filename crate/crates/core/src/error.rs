use core::fmt;

/// Everything that can go wrong in the algebra and the constructions built on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeError {
    /// A component or parameter was NaN or infinite.
    NonFinite,
    /// Division by a number lying on (or numerically near) a null line `y = ±x`.
    NullDivisor,
    /// A direction lies on a null line, or is the zero vector.
    NullDirection,
    /// Polar radius must be strictly positive.
    NonPositiveRho,
    /// `|θ|` exceeds [`crate::MAX_THETA`]; `cosh θ` would leave the safe range.
    OverflowingAngle,
    /// Three vertices are collinear or coincident.
    DegenerateTriangle,
    /// A triangle side is parallel to one of the bisectors.
    NullSide,
    /// The two rays of an angle-side-angle problem never meet.
    ParallelRays,
    /// The given elements do not describe any real triangle.
    Inconsistent,
    /// A point is not on the hyperbola it was claimed to be on.
    NotOnHyperbola,
    /// No side of the inscribed triangle passes through the hyperbola center.
    NotADiameter,
    /// Any other violated precondition.
    InvalidInput(&'static str),
}

impl PeError {
    /// Stable kebab-case tag, used by the CLI diagnostics.
    pub fn tag(&self) -> &'static str {
        match self {
            PeError::NonFinite => "non-finite",
            PeError::NullDivisor => "null-divisor",
            PeError::NullDirection => "null-direction",
            PeError::NonPositiveRho => "non-positive-rho",
            PeError::OverflowingAngle => "overflowing-angle",
            PeError::DegenerateTriangle => "degenerate-triangle",
            PeError::NullSide => "null-side",
            PeError::ParallelRays => "parallel-rays",
            PeError::Inconsistent => "inconsistent",
            PeError::NotOnHyperbola => "not-on-hyperbola",
            PeError::NotADiameter => "not-a-diameter",
            PeError::InvalidInput(_) => "invalid-input",
        }
    }
}

impl fmt::Display for PeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeError::NonFinite => f.write_str("non-finite value"),
            PeError::NullDivisor => f.write_str("divisor lies on a null line and has no inverse"),
            PeError::NullDirection => f.write_str("direction lies on a null line"),
            PeError::NonPositiveRho => f.write_str("radial coordinate must be positive"),
            PeError::OverflowingAngle => f.write_str("hyperbolic angle out of range"),
            PeError::DegenerateTriangle => f.write_str("vertices are collinear"),
            PeError::NullSide => f.write_str("triangle side parallel to a bisector"),
            PeError::ParallelRays => f.write_str("rays are parallel"),
            PeError::Inconsistent => f.write_str("no real triangle has these elements"),
            PeError::NotOnHyperbola => f.write_str("point is not on the hyperbola"),
            PeError::NotADiameter => f.write_str("no side is a diameter"),
            PeError::InvalidInput(why) => write!(f, "invalid input: {why}"),
        }
    }
}

impl core::error::Error for PeError {}

pub type Result<T> = core::result::Result<T, PeError>;
