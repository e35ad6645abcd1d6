//! Rational intervals certifying real values.
//!
//! Endpoints are exact rationals; an interval produced by any `refine` in this
//! crate is a sound enclosure of the value it certifies. Square roots are
//! bracketed with integer square roots at scaled precision, never binary
//! floating point.

use crate::exact::Rational;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Precondition("interval endpoints out of order".into()));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(v: Rational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from(BigInt::from(2))
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Sign of every point in the interval, if it does not straddle zero.
    pub fn definite_sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Interval {
        Interval {
            lo: &self.lo + r,
            hi: &self.hi + r,
        }
    }

    /// Multiply by an exact rational, flipping endpoints when negative.
    pub fn scale(&self, r: &Rational) -> Interval {
        let a = &self.lo * r;
        let b = &self.hi * r;
        if r.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    /// Enclosure of √d of width ≤ 2^(−bits): `[s, s+1]/2^bits` with
    /// `s = ⌊√(d·4^bits)⌋`, collapsing to a point for perfect squares.
    pub fn sqrt(d: &BigInt, bits: u64) -> Interval {
        assert!(!d.is_negative());
        let scaled: BigInt = d << (2 * bits);
        let s = scaled.sqrt();
        let denom: BigInt = BigInt::one() << bits;
        if &s * &s == scaled {
            return Interval::point(Rational::new(s, denom));
        }
        Interval {
            lo: Rational::new(s.clone(), denom.clone()),
            hi: Rational::new(s + BigInt::one(), denom),
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Decimal expansion of a rational, rounded toward zero, with `digits` places.
pub fn decimal_string(v: &Rational, digits: usize) -> String {
    let sign = if v.is_negative() { "-" } else { "" };
    let num = v.numer().abs();
    let den = v.denom().clone();
    let (int_part, rem) = num.div_rem(&den);
    let mut frac = String::with_capacity(digits);
    let mut r = rem;
    let ten = BigInt::from(10);
    for _ in 0..digits {
        r *= &ten;
        let (d, nr) = r.div_rem(&den);
        frac.push(char::from(b'0' + d.to_string().parse::<u8>().unwrap_or(0)));
        r = nr;
    }
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}
