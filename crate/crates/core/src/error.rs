//! Error type shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Errors reported by parsing, geometry and the numerical pipeline.
///
/// Variants split into two families: input errors (bad text, empty
/// support, a nonzero constant term) and hypothesis diagnostics
/// (`RootOnUnitCircle`, `InconsistentAcrossAngles`, …) which signal that
/// the polynomial violates the assumptions the criteria rely on rather
/// than a defect in the input syntax.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },

    #[error("nonzero constant term: mixed polynomials are normalized to c_(0,0) = 0")]
    NonzeroConstantTerm,

    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },

    #[error("empty support: the zero polynomial has no Newton boundary")]
    EmptySupport,

    #[error("not convenient: the Newton boundary must touch both coordinate axes")]
    NotConvenient,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous: found degrees {a} and {b}")]
    NotHomogeneous { a: u32, b: u32 },

    #[error(
        "root of the associated polynomial lies within {tol:.3e} of the unit circle \
         (|ς| = {modulus:.12}); the nonvanishing hypothesis fails"
    )]
    RootOnUnitCircle { modulus: f64, tol: f64 },

    #[error("root finding failed: {0}")]
    RootFindingFailed(String),

    #[error("function vanishes on the sampled circle of radius {radius:.6e}")]
    VanishesOnCircle { radius: f64 },

    #[error(
        "winding aliasing suspected (defect {defect:.4}, max step {max_step:.4} rad); \
         increase the sample count"
    )]
    AliasingSuspected { defect: f64, max_step: f64 },

    #[error("signed multiplicity disagrees across sampled angles at vertex {vertex}: {values:?}")]
    InconsistentAcrossAngles {
        vertex: usize,
        values: Vec<(String, i64)>,
    },

    #[error("vertex {vertex}: specialization degenerated at 20 sampled angles")]
    DegenerateAngles { vertex: usize },

    #[error("vertex {vertex}, angle {angle:.6}: {source}")]
    AtVertex {
        vertex: usize,
        angle: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("{0:?} is not a root of the polynomial")]
    NotARoot(Complex64),

    #[error("indeterminate sign: the Wirtinger moduli agree to within tolerance")]
    IndeterminateSign,

    #[error("invalid nested link spec: {0}")]
    InvalidSpec(String),
}

impl Error {
    /// True for diagnostics that indicate a hypothesis violation of the
    /// analyzed polynomial, as opposed to malformed input.
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(
            self,
            Error::NotConvenient
                | Error::RootOnUnitCircle { .. }
                | Error::InconsistentAcrossAngles { .. }
                | Error::DegenerateAngles { .. }
                | Error::AtVertex { .. }
        )
    }
}
