//! Exact-arithmetic engine for infinite-series identities over Fibonacci
//! numbers.
//!
//! Everything is built around one complement identity: for any real sequence
//! `a_1, a_2, ...`,
//!
//! ```text
//! 1 - a_1 a_2 ... a_n  =  (1 - a_1) + a_1 (1 - a_2) + ... + a_1 ... a_{n-1} (1 - a_n)
//! ```
//!
//! When the `a_i` are probabilities of drawing a blue ball from an urn, both
//! sides count the chance of seeing a red ball within `n` draws. Choosing
//! `a_i` as ratios of shifted Fibonacci numbers makes the left side telescope,
//! which turns the right side into a closed-form series.
//!
//! The crate provides:
//!
//! * [`numerics`] — big rationals, exact `Q[sqrt(5)]` arithmetic, Fibonacci
//!   generation, and certified decimal enclosures;
//! * [`dsl`] — a small grammar for sequences `a_i` built from shifted
//!   Fibonacci factors and integer constants;
//! * [`identity`] — exact partial products/sums, complement-identity
//!   verification, limit estimation, and identity reports;
//! * [`urn`] — integer urn compositions realizing a probability-valid
//!   sequence by ball additions only;
//! * [`sim`] — a reproducible Monte Carlo simulator of the draw-until-red
//!   process, used as an independent probabilistic cross-check;
//! * [`search`] — enumeration of parameterized sequence families and
//!   deduplicated identity discovery.

pub mod dsl;
pub mod error;
pub mod identity;
pub mod numerics;
pub mod search;
pub mod sim;
pub mod urn;

pub use dsl::{parse, FamilyParams, SequenceExpr};
pub use error::Error;
pub use identity::{
    derive_identity, estimate_limit, probability_check, recognize_constant,
    verify_complement_identity, DeriveConfig, IdentityReport, LimitClass, LimitConfig,
    LimitEstimate, PartialState, ProbabilityCheck, RecognitionBounds, VerificationRecord,
};
pub use numerics::{fib_binet, quad_approx, BigRational, Enclosure, FibCache, QuadraticValue};
pub use search::{search, Discovery, FamilyGrid, SearchConfig, SearchOutcome};
pub use sim::{compare_analytic, simulate, AnalyticComparison, SimConfig, SimResult};
pub use urn::{realize, UrnState, UrnTrace};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
