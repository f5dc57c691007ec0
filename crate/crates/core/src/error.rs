//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Rational division by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Inversion of the zero element of Q[sqrt(5)].
    #[error("cannot invert zero in Q[sqrt(5)]")]
    ZeroInversion,

    /// Malformed sequence expression text.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// A Fibonacci factor whose index would go below zero at i = 1.
    #[error("invalid shift at byte {offset}: F(i{shift:+}) needs shift >= -1 so the index stays non-negative from i = 1")]
    ShiftValidation { offset: usize, shift: i64 },

    /// Family parameters that do not describe a valid sequence expression.
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),

    /// A term of the sequence has a zero denominator (only reachable through
    /// F(i-1) in a denominator at i = 1, where F(0) = 0).
    #[error("a_{index} has a zero denominator")]
    ZeroDenominator { index: u64 },

    /// A sequence value outside [0, 1] where a probability is required.
    #[error("a_{index} = {value} is not a probability (outside [0, 1])")]
    InvalidProbability { index: u64, value: String },

    /// The urn construction would need to remove balls.
    #[error("urn not realizable at step {step}: {reason}")]
    NotRealizable { step: u64, reason: String },

    /// Constant recognition was asked to scan an enclosure wider than the
    /// unambiguity gate for the given bounds.
    #[error("enclosure width {width} fails the recognition gate {gate}")]
    EnclosureTooWide { width: String, gate: String },

    /// Two bounded constants fit the enclosure; the gate was too permissive.
    #[error("ambiguous recognition: {first} and {second} both fit the enclosure")]
    AmbiguousRecognition { first: String, second: String },

    /// A candidate exceeded the per-candidate size budget during a search.
    #[error("size budget exceeded at step {step}: values past {limit_bits} bits")]
    BudgetExceeded { step: u64, limit_bits: u64 },
}
