//! Exact arithmetic foundation: rationals, quadratic extensions, truncated
//! bivariate series, univariate polynomials and Sylvester resultants.
//!
//! Everything in this module is immutable after construction and every
//! operation is a pure function, so values can be shared freely across
//! threads.

pub mod poly;
pub mod quad;
pub mod rational;
pub mod series;

pub use poly::{determinant, resultant, sylvester_matrix, UniPoly};
pub use quad::Quad;
pub use rational::Rational;
pub use series::{time_rescale, vf_transform, Coeff, Field2, Series2};

use std::fmt;

/// Errors from exact-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Binary series operation across different truncation degrees.
    DegreeMismatch { left: u32, right: u32 },
    /// Substitution with a constant term outside translation mode.
    NonzeroConstantInSubstitution,
    /// Coordinate change whose linear part is singular.
    NonInvertibleLinearPart,
    /// Time reparametrization by a factor vanishing at the origin.
    ZeroConstantTimeFactor,
    /// Reciprocal of a series with zero constant term.
    NotAUnit,
    /// Resultant of two constant polynomials.
    ResultantOfConstants,
    /// Resultant involving the zero polynomial.
    ZeroPolynomial,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DegreeMismatch { left, right } => {
                write!(f, "series truncation degrees differ: {left} vs {right}")
            }
            AlgebraError::NonzeroConstantInSubstitution => {
                write!(f, "substituted series has a nonzero constant term")
            }
            AlgebraError::NonInvertibleLinearPart => {
                write!(f, "coordinate change has a non-invertible linear part")
            }
            AlgebraError::ZeroConstantTimeFactor => {
                write!(f, "time factor vanishes at the origin")
            }
            AlgebraError::NotAUnit => write!(f, "series has no reciprocal (zero constant term)"),
            AlgebraError::ResultantOfConstants => {
                write!(f, "resultant of two constant polynomials is undefined here")
            }
            AlgebraError::ZeroPolynomial => write!(f, "resultant of the zero polynomial"),
        }
    }
}

impl std::error::Error for AlgebraError {}
