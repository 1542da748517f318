use core::fmt;

use crate::quad::QuadInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An intermediate value left the `i128` range.
    Overflow,
    /// The radicand is below 2 or a perfect square.
    InvalidRadicand(i128),
    /// `egcd(0, 0)` has no defined gcd.
    ZeroGcd,
    /// Floor division by a non-positive divisor.
    NonPositiveDivisor(i128),
    /// A mixed system was given a coefficient below 1.
    NonPositiveCoefficient,
    /// The gcd precondition of a mixed system fails; the generators do not span 1.
    NotCoprime { modulus: i128, norm: i128 },
    /// A generator is zero or has a negative part.
    InvalidGenerator(QuadInt),
    /// The generator shape has no formula route for the requested operation.
    UnsupportedShape(&'static str),
    /// The target lies below the guaranteed-representable frontier.
    BelowFrontier { target: QuadInt, bound: QuadInt },
    /// The pair has no cone-shaped Frobenius set to verify.
    NoCone,
    /// An empty or inverted box.
    InvalidBox,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => f.write_str("integer overflow"),
            Error::InvalidRadicand(m) => {
                if *m < 2 {
                    write!(f, "m must be at least 2 (got {m})")
                } else {
                    write!(f, "m must not be a perfect square (got {m})")
                }
            }
            Error::ZeroGcd => f.write_str("gcd of (0, 0) is undefined"),
            Error::NonPositiveDivisor(d) => write!(f, "divisor must be positive (got {d})"),
            Error::NonPositiveCoefficient => {
                f.write_str("system coefficients a, b, c must be >= 1")
            }
            Error::NotCoprime { modulus, norm } => write!(
                f,
                "gcd({modulus}, {norm}) != 1: the generators do not span 1"
            ),
            Error::InvalidGenerator(g) => {
                write!(f, "generator {g} must be nonzero with nonnegative parts")
            }
            Error::UnsupportedShape(what) => write!(f, "unsupported generator shape: {what}"),
            Error::BelowFrontier { target, bound } => write!(
                f,
                "target {target} is below the frontier {bound}; use member_mixed instead"
            ),
            Error::NoCone => f.write_str("the Frobenius set of this pair is not a cone"),
            Error::InvalidBox => f.write_str("box bounds are inverted"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
