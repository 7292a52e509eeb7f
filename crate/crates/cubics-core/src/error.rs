//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong, from bad field constructions to
/// mathematically inconsistent inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` is not a prime number.
    NotPrime(u64),
    /// The supplied modulus polynomial factors over `F_p`.
    ReducibleModulus,
    /// Division by the zero element.
    DivisionByZero,
    /// Two elements from different field contexts were combined.
    CtxMismatch,
    /// A finite-field-only operation was applied to a rational context.
    RationalCtx,
    /// An enumeration would exceed the configured cap on `q^e`.
    CapExceeded { needed: u128, cap: u64 },
    /// Text input failed to parse; `pos` is a byte offset into the input.
    SyntaxError { pos: usize, msg: String },
    /// A parsed polynomial mixes degrees.
    NotHomogeneous,
    /// A constant literal does not denote an element of the field.
    BadFieldLiteral(String),
    /// The cubic has a singular point (printed as a witness).
    Singular(String),
    /// A form had the wrong degree for the requested operation.
    WrongDegree { expected: usize, got: usize },
    /// The given point does not lie on the curve.
    PointNotOnCurve,
    /// The form vanishes identically on the curve (is divisible by F).
    FormVanishesOnCurve,
    /// `forms_vanishing` supports degrees 1..=3 only.
    UnsupportedDegree(usize),
    /// A divisor's support does not lie on the curve.
    DivisorNotOnCurve,
    /// The requested point coincides with the base point P0.
    PointEqualsBase,
    /// An internal dimension came out wrong (invalid input or a bug).
    DimensionAnomaly { what: &'static str, expected: usize, got: usize },
    /// A determinant identity produced lambda = 0.
    LambdaZero,
    /// Weierstrass constructions require characteristic not 2 or 3.
    BadCharacteristic(u64),
    /// The point at infinity is not a valid input here.
    PointAtInfinity,
    /// A transported representation failed its determinant identity.
    IdentityFailure,
    /// The adjugate's rank profile on the curve is not the expected one.
    RankAnomaly(String),
    /// Class reduction returned the base point: the input matrix does not
    /// come from a non-effective bundle.
    EffectiveClass,
    /// Brute-force equivalence search is limited to q <= 3.
    FieldTooLarge(u64),
    /// The census supports q in {2, 3, 4, 5, 7}.
    UnsupportedField(u64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::CtxMismatch => write!(f, "elements belong to different fields"),
            Error::RationalCtx => write!(f, "operation requires a finite field"),
            Error::CapExceeded { needed, cap } => {
                write!(f, "enumeration size {needed} exceeds cap {cap}")
            }
            Error::SyntaxError { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::BadFieldLiteral(s) => write!(f, "bad field literal: {s}"),
            Error::Singular(witness) => write!(f, "cubic is singular at {witness}"),
            Error::WrongDegree { expected, got } => {
                write!(f, "expected degree {expected}, got {got}")
            }
            Error::PointNotOnCurve => write!(f, "point does not lie on the curve"),
            Error::FormVanishesOnCurve => write!(f, "form vanishes identically on the curve"),
            Error::UnsupportedDegree(d) => write!(f, "unsupported form degree {d}"),
            Error::DivisorNotOnCurve => write!(f, "divisor support is not on the curve"),
            Error::PointEqualsBase => write!(f, "point equals the base point"),
            Error::DimensionAnomaly { what, expected, got } => {
                write!(f, "{what}: expected dimension {expected}, got {got}")
            }
            Error::LambdaZero => write!(f, "determinant identity yields lambda = 0"),
            Error::BadCharacteristic(p) => {
                write!(f, "characteristic {p} not supported (needs p > 3)")
            }
            Error::PointAtInfinity => write!(f, "point at infinity is not allowed here"),
            Error::IdentityFailure => write!(f, "determinant identity failed after transport"),
            Error::RankAnomaly(s) => write!(f, "rank anomaly: {s}"),
            Error::EffectiveClass => {
                write!(f, "class reduces to the base point (effective bundle)")
            }
            Error::FieldTooLarge(q) => write!(f, "brute-force search infeasible for q = {q}"),
            Error::UnsupportedField(q) => write!(f, "census does not support q = {q}"),
        }
    }
}

impl core::error::Error for Error {}
