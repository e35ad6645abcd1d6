//! Exact computation in the Lagrange and Markoff spectra.
//!
//! Everything here is integer-exact: quadratic surds `(a + b√d)/c`, sums of
//! two surds (the natural value class of `λ_i = [b_i; b_{i+1}, …] + [0; b_{i-1}, …]`
//! for eventually periodic sequences), certified comparisons through adaptive
//! rational intervals, and the combinatorial machinery around maximal gaps of
//! the spectra: the gap endpoints `α_n*` and `β_n`, the block words `C_n(k)`,
//! pattern-avoidance minimality, pigeonhole repeats, and an admissibility
//! search over purely periodic sequences at bounded period.
//!
//! No floating point participates in any result; `f64` appears only as a
//! sound prefilter inside the admissibility search, with every survivor
//! re-checked exactly.
//!
//! The crate is organized as a library first; see `examples/` for runnable
//! demonstrations of each capability and `src/main.rs` for a thin CLI.

pub mod cf;
pub mod constructions;
pub mod exact;
pub mod report;
pub mod spectra;
pub mod verifiers;

pub use cf::{Mobius, PeriodicCF, Word};
pub use exact::{Interval, QuadSurd, Rational, SurdSum};
pub use spectra::{BiSeq, SpectrumResult, Witness};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("operands live in distinct quadratic fields (√{0} vs √{1}); lift to SurdSum first")]
    FieldMismatch(String, String),
    #[error("value generates a field of degree > 4; not supported")]
    FieldTooLarge,
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("letter {0} exceeds the alphabet bound 4 required here")]
    AlphabetTooLarge(u32),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
