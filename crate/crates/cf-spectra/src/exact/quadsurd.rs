//! Exact quadratic surds `(a + b√d)/c` in canonical form.
//!
//! Canonical means: `d` squarefree, `b = 0` whenever `d ∈ {0, 1}` (the
//! rational case keeps `d = 0`), `c > 0`, and `gcd(a, b, c) = 1`. Two surds
//! are equal as real numbers exactly when their canonical fields coincide,
//! so equality is structural.

use crate::exact::sqfree::squarefree_decompose;
use crate::exact::{Interval, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl QuadSurd {
    /// Canonicalize `(a + b√d)/c`. Errors if `c = 0` or `d < 0`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d.to_string()));
        }
        let (mut a, mut b, mut c) = (a, b, c);
        let (s, mut d) = squarefree_decompose(&d);
        b *= s;
        if d.is_one() {
            a += &b;
            b = BigInt::zero();
            d = BigInt::zero();
        }
        if d.is_zero() || b.is_zero() {
            // fold the (now integral) radical away entirely
            if d.is_zero() && !b.is_zero() {
                b = BigInt::zero(); // b·√0 = 0
            }
            d = BigInt::zero();
            if b.is_zero() {
                // nothing else
            }
        }
        if b.is_zero() {
            d = BigInt::zero();
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() && !g.is_zero() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        if a.is_zero() && b.is_zero() {
            c = BigInt::one();
        }
        Ok(QuadSurd { a, b, c, d })
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        QuadSurd {
            a: n.into(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        QuadSurd::new(r.numer().clone(), BigInt::zero(), r.denom().clone(), BigInt::zero())
            .expect("rational denominators are nonzero")
    }

    /// √d as a surd.
    pub fn sqrt_of<T: Into<BigInt>>(d: T) -> Result<Self> {
        QuadSurd::new(BigInt::zero(), BigInt::one(), BigInt::one(), d.into())
    }

    pub fn zero() -> Self {
        QuadSurd::from_int(0)
    }

    pub fn one() -> Self {
        QuadSurd::from_int(1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(Rational::new(self.a.clone(), self.c.clone()))
        } else {
            None
        }
    }

    pub fn rational_part(&self) -> Rational {
        Rational::new(self.a.clone(), self.c.clone())
    }

    /// Coefficient of √d as a rational.
    pub fn radical_coeff(&self) -> Rational {
        Rational::new(self.b.clone(), self.c.clone())
    }

    /// Galois conjugate `(a − b√d)/c`.
    pub fn conj(&self) -> Self {
        QuadSurd {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.d == other.d
    }

    /// Radicand shared by two operands, or an error if their fields differ.
    fn joint_d(&self, other: &Self) -> Result<BigInt> {
        if self.is_rational() {
            Ok(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::FieldMismatch(self.d.to_string(), other.d.to_string()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.joint_d(other)?;
        QuadSurd::new(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
            d,
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QuadSurd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.joint_d(other)?;
        QuadSurd::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &self.b * &other.a,
            &self.c * &other.c,
            d,
        )
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/((a + b√d)/c) = c(a − b√d)/(a² − b²d)
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        QuadSurd::new(&self.c * &self.a, -(&self.c * &self.b), norm, self.d.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    pub fn add_int(&self, n: &BigInt) -> Self {
        QuadSurd {
            a: &self.a + n * &self.c,
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        QuadSurd::new(&self.a * n, &self.b * n, self.c.clone(), self.d.clone())
            .expect("scaling keeps denominator nonzero")
    }

    /// Exact sign of `A + B√d` for integers A, B and squarefree d ≥ 0.
    fn sign_int_radical(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
        if b.is_zero() || d.is_zero() {
            return a.cmp(&BigInt::zero());
        }
        if a.is_zero() {
            return b.cmp(&BigInt::zero());
        }
        match (a.is_positive(), b.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            (true, false) => (a * a).cmp(&(b * b * d)),
            (false, true) => (b * b * d).cmp(&(a * a)),
        }
    }

    /// Exact sign relative to zero.
    pub fn sign(&self) -> Ordering {
        Self::sign_int_radical(&self.a, &self.b, &self.d)
    }

    /// Exact comparison within a shared field. For cross-field comparisons
    /// lift both sides to [`crate::exact::SurdSum`].
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering> {
        if self.same_field(other) {
            Ok(self.sub(other)?.sign())
        } else {
            let lhs = crate::exact::SurdSum::from_quadsurd(self);
            let rhs = crate::exact::SurdSum::from_quadsurd(other);
            Ok(lhs.compare(&rhs))
        }
    }

    /// Compare against an exact rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // sign of (a·qr − pr·c) + b·qr·√d, with r = pr/qr, qr > 0
        let pa = &self.a * r.denom() - r.numer() * &self.c;
        let pb = &self.b * r.denom();
        Self::sign_int_radical(&pa, &pb, &self.d)
    }

    /// Greatest integer ≤ value, computed from integer square-root bounds and
    /// verified by exact comparison; no floating point.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.div_floor(&self.c);
        }
        let b2d = &self.b * &self.b * &self.d;
        let s = b2d.sqrt();
        let t_lo = if self.b.is_positive() { s.clone() } else { -(&s + BigInt::one()) };
        let mut n = (&self.a + t_lo).div_floor(&self.c);
        // value lies in [(a+t_lo)/c, (a+t_lo+2)/c); adjust by exact comparison
        loop {
            let above = self.cmp_rational(&Rational::from(&n + BigInt::one()));
            if above != Ordering::Less {
                n += BigInt::one();
            } else {
                break;
            }
        }
        while self.cmp_rational(&Rational::from(n.clone())) == Ordering::Less {
            n -= BigInt::one();
        }
        n
    }

    /// Enclosure of width ≤ 2^(−bits); a point interval for rationals.
    pub fn refine(&self, bits: u64) -> Interval {
        if self.is_rational() {
            return Interval::point(self.rational_part());
        }
        // width of (b/c)·sqrt-interval is |b/c|·2^(-k); pick k to cover it
        let coeff = self.radical_coeff();
        let mag = coeff.numer().abs().div_ceil(coeff.denom());
        let extra = mag.bits() + 1;
        let k = bits + extra;
        let root = Interval::sqrt(&self.d, k);
        root.scale(&coeff).add_rational(&self.rational_part())
    }

    /// Integer coefficients (ascending degree, coprime, positive leading) of
    /// the minimal polynomial: degree 1 for rationals, else the quadratic
    /// `c²X² − 2acX + (a² − b²d)`.
    pub fn minpoly(&self) -> Vec<BigInt> {
        if self.is_rational() {
            // cX − a = 0
            let mut v = vec![-self.a.clone(), self.c.clone()];
            normalize_poly(&mut v);
            return v;
        }
        let c2 = &self.c * &self.c;
        let lin = BigInt::from(-2) * &self.a * &self.c;
        let cst = &self.a * &self.a - &self.b * &self.b * &self.d;
        let mut v = vec![cst, lin, c2];
        normalize_poly(&mut v);
        v
    }
}

/// Divide out the content and make the leading coefficient positive.
pub(crate) fn normalize_poly(coeffs: &mut Vec<BigInt>) {
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    let mut g = BigInt::zero();
    for c in coeffs.iter() {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in coeffs.iter_mut() {
            *c /= &g;
        }
    }
    if coeffs.last().is_some_and(|c| c.is_negative()) {
        for c in coeffs.iter_mut() {
            *c = -c.clone();
        }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({}))/{}", self.a, self.b, self.d, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(a: i64, b: i64, c: i64, d: i64) -> QuadSurd {
        QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    #[test]
    fn normalize_named_cases() {
        // common factor 2
        assert_eq!(qs(2, 2, 2, 5), qs(1, 1, 1, 5));
        // √4 = 2 folds into the rational part
        assert_eq!(qs(0, 1, 1, 4), qs(2, 0, 1, 0));
        // w0 = (−4 + √30)/4 is already canonical
        let w0 = qs(-4, 1, 4, 30);
        assert_eq!(w0.a(), &BigInt::from(-4));
        assert_eq!(w0.d(), &BigInt::from(30));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            QuadSurd::new(1.into(), 1.into(), 0.into(), 2.into()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn arithmetic_named_cases() {
        let phi_like = qs(1, 1, 2, 5); // (1+√5)/2
        assert_eq!(phi_like.add(&phi_like).unwrap(), qs(1, 1, 1, 5));
        // inv((−4+√30)/4) = (8+2√30)/7, and multiplying back gives 1
        let w0 = qs(-4, 1, 4, 30);
        let inv = w0.inv().unwrap();
        assert_eq!(inv, qs(8, 2, 7, 30));
        assert_eq!(w0.mul(&inv).unwrap(), QuadSurd::one());
        // √2·√2 = 2
        let r2 = QuadSurd::sqrt_of(2).unwrap();
        assert_eq!(r2.mul(&r2).unwrap(), QuadSurd::from_int(2));
    }

    #[test]
    fn mixed_fields_rejected() {
        let r2 = QuadSurd::sqrt_of(2).unwrap();
        let r3 = QuadSurd::sqrt_of(3).unwrap();
        assert!(matches!(r2.add(&r3), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn floor_named_cases() {
        assert_eq!(qs(1, 1, 2, 5).floor(), BigInt::from(1)); // (1+√5)/2 ≈ 1.618
        assert_eq!(QuadSurd::sqrt_of(2).unwrap().floor(), BigInt::one());
        assert_eq!(qs(-4, 1, 4, 30).floor(), BigInt::zero()); // 5 < √30 < 6
        assert_eq!(qs(-1, -1, 1, 2).floor(), BigInt::from(-3)); // −1−√2 ≈ −2.41
    }

    #[test]
    fn floor_bracket_property() {
        for (a, b, c, d) in [(3, 5, 7, 11), (-3, 5, 7, 11), (3, -5, 7, 11), (-9, -2, 5, 13)] {
            let x = qs(a, b, c, d);
            let n = x.floor();
            assert_ne!(x.cmp_rational(&Rational::from(n.clone())), Ordering::Less);
            assert_eq!(
                x.cmp_rational(&Rational::from(&n + BigInt::one())),
                Ordering::Less
            );
        }
    }

    #[test]
    fn sub_self_is_zero() {
        let x = qs(-4, 7, 9, 15);
        assert!(x.sub(&x).unwrap().is_zero());
    }

    #[test]
    fn minpoly_cases() {
        let r5 = QuadSurd::sqrt_of(5).unwrap();
        assert_eq!(r5.minpoly(), vec![BigInt::from(-5), BigInt::zero(), BigInt::one()]);
        let threehalf = qs(3, 0, 2, 0);
        assert_eq!(threehalf.minpoly(), vec![BigInt::from(-3), BigInt::from(2)]);
        // w0: 8x² + 16x − 7 = 0
        let w0 = qs(-4, 1, 4, 30);
        assert_eq!(
            w0.minpoly(),
            vec![BigInt::from(-7), BigInt::from(16), BigInt::from(8)]
        );
    }

    #[test]
    fn refine_width_and_membership() {
        let r5 = QuadSurd::sqrt_of(5).unwrap();
        let iv = r5.refine(10);
        assert!(iv.width() <= Rational::new(BigInt::one(), BigInt::from(1024)));
        // 2.2360679… lies inside
        let approx = Rational::new(BigInt::from(22360679u64), BigInt::from(10000000u64));
        assert!(iv.contains(&approx));
        let zero = QuadSurd::zero().refine(64);
        assert!(zero.width().is_zero());
    }
}
