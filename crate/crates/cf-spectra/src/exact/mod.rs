//! Exact representation and certified comparison of quadratic surds, sums of
//! surds, and adaptive-precision rational intervals.

mod interval;
mod quadsurd;
pub(crate) mod sqfree;
mod surdsum;

pub use interval::{decimal_string, Interval};
pub use quadsurd::QuadSurd;
pub use sqfree::squarefree_decompose;
pub use surdsum::SurdSum;

/// Arbitrary-precision rational; denominators are kept positive and reduced.
pub type Rational = num_rational::BigRational;
