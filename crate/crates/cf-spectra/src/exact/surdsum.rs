//! Exact sums of quadratic surds.
//!
//! A `SurdSum` is a rational linear combination `base + Σ c_i·√d_i` over
//! distinct squarefree radicands `d_i ≥ 2`. Distinct squarefree roots are
//! linearly independent over ℚ, so the representation is canonical and
//! equality is structural; comparison of unequal values terminates by
//! adaptive interval refinement. Values built as a sum of two continued
//! fraction tails live in a biquadratic field (at most radicands
//! `{d1, d2, squarefree(d1·d2)}`), which is where inversion and minimal
//! polynomials are defined; addition and comparison work for any radicands.

use crate::exact::quadsurd::normalize_poly;
use crate::exact::{Interval, QuadSurd, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdSum {
    base: Rational,
    /// radicand → coefficient; radicands squarefree ≥ 2, coefficients nonzero
    terms: BTreeMap<BigInt, Rational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum {
            base: Rational::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        SurdSum {
            base: r,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Self::from_rational(Rational::from(n.into()))
    }

    pub fn from_quadsurd(x: &QuadSurd) -> Self {
        let mut s = SurdSum {
            base: x.rational_part(),
            terms: BTreeMap::new(),
        };
        if !x.is_rational() {
            s.insert_term(x.d().clone(), x.radical_coeff());
        }
        s
    }

    /// The sum of two exact surds: the value class of `λ_i` for eventually
    /// periodic sequences. Degenerate cases (shared radicand, rational
    /// operands) collapse automatically.
    pub fn make(x: &QuadSurd, y: &QuadSurd) -> Self {
        let mut s = Self::from_quadsurd(x);
        s.add_assign(&Self::from_quadsurd(y));
        s
    }

    fn insert_term(&mut self, d: BigInt, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn radicands(&self) -> impl Iterator<Item = &BigInt> {
        self.terms.keys()
    }

    pub fn coeff(&self, d: &BigInt) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.base.clone())
        } else {
            None
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.base += &other.base;
        for (d, c) in &other.terms {
            self.insert_term(d.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.add_assign(other);
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SurdSum {
            base: -self.base.clone(),
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c.clone())).collect(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        let mut s = self.clone();
        s.base += r;
        s
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return SurdSum::zero();
        }
        SurdSum {
            base: &self.base * r,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), c * r)).collect(),
        }
    }

    /// Product; always representable (products of roots are again rational
    /// multiples of roots of the squarefree parts).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SurdSum::zero();
        out.base = &self.base * &other.base;
        for (d, c) in &other.terms {
            out.insert_term(d.clone(), &self.base * c);
        }
        for (d, c) in &self.terms {
            out.insert_term(d.clone(), &other.base * c);
        }
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                // √d1·√d2 = g·√(d1'·d2') with g = gcd(d1, d2)
                let g = d1.gcd(d2);
                let f = (d1 / &g) * (d2 / &g);
                let coeff = c1 * c2 * Rational::from(g);
                if f.is_one() {
                    out.base += coeff;
                } else {
                    out.insert_term(f, coeff);
                }
            }
        }
        out
    }

    /// Radicand closure `{d1, d2, d3}` under squarefree products, or an error
    /// when the value generates a field of degree > 4.
    fn field_closure(&self) -> Result<Vec<BigInt>> {
        let mut set: Vec<BigInt> = self.terms.keys().cloned().collect();
        loop {
            let mut added = false;
            let snapshot = set.clone();
            for (i, d1) in snapshot.iter().enumerate() {
                for d2 in snapshot.iter().skip(i + 1) {
                    let g = d1.gcd(d2);
                    let f = (d1 / &g) * (d2 / &g);
                    if !f.is_one() && !set.contains(&f) {
                        set.push(f.clone());
                        added = true;
                    }
                }
            }
            if set.len() > 3 {
                return Err(Error::FieldTooLarge);
            }
            if !added {
                break;
            }
        }
        set.sort();
        Ok(set)
    }

    /// The sign-flip conjugates of the value within its biquadratic field.
    fn conjugates(&self) -> Result<Vec<SurdSum>> {
        let closure = self.field_closure()?;
        if closure.is_empty() {
            return Ok(vec![self.clone()]);
        }
        // choose up to two generators; the third radicand is their product class
        let g1 = closure[0].clone();
        let g2 = closure.get(1).cloned();
        let sign_of = |d: &BigInt, e1: bool, e2: bool| -> bool {
            // character value on d: product of generator signs appearing in d
            if *d == g1 {
                e1
            } else if Some(d) == g2.as_ref() {
                e2
            } else {
                // d = squarefree(g1·g2)
                e1 ^ e2
            }
        };
        let n_chars = if g2.is_some() { 4 } else { 2 };
        let mut out = Vec::with_capacity(n_chars);
        for mask in 0..n_chars {
            let e1 = mask & 1 != 0;
            let e2 = mask & 2 != 0;
            let mut conj = SurdSum {
                base: self.base.clone(),
                terms: BTreeMap::new(),
            };
            for (d, c) in &self.terms {
                let flip = sign_of(d, e1, e2);
                conj.insert_term(d.clone(), if flip { -c.clone() } else { c.clone() });
            }
            out.push(conj);
        }
        Ok(out)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(SurdSum::from_rational(Rational::one() / r));
        }
        let conjs = self.conjugates()?;
        // u⁻¹ = (Π_{σ≠id} σu) / N(u) with N(u) = Π σu rational
        let mut prod = SurdSum::from_int(1);
        for c in conjs.iter().skip(1) {
            prod = prod.mul(c);
        }
        let norm = self.mul(&prod);
        let norm = norm
            .to_rational()
            .expect("norm over the conjugate orbit is rational");
        Ok(prod.scale(&(Rational::one() / norm)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer coefficients (ascending, coprime, positive leading) of the
    /// conjugate product `Π (X − σu)`; equals the minimal polynomial because
    /// the representation is canonical (degree 1, 2, or 4).
    pub fn minpoly(&self) -> Result<Vec<BigInt>> {
        let conjs = self.conjugates()?;
        // multiply (X − σu) symbolically with SurdSum coefficients
        let mut poly: Vec<SurdSum> = vec![SurdSum::from_int(1)];
        for c in &conjs {
            let mut next: Vec<SurdSum> = vec![SurdSum::zero(); poly.len() + 1];
            for (i, coeff) in poly.iter().enumerate() {
                next[i + 1].add_assign(coeff);
                let t = coeff.mul(&c.neg());
                next[i].add_assign(&t);
            }
            poly = next;
        }
        let rats: Vec<Rational> = poly
            .into_iter()
            .map(|c| c.to_rational().expect("conjugate product has rational coefficients"))
            .collect();
        let mut denom = BigInt::one();
        for r in &rats {
            denom = denom.lcm(r.denom());
        }
        let mut coeffs: Vec<BigInt> = rats
            .into_iter()
            .map(|r| r.numer() * (&denom / r.denom()))
            .collect();
        normalize_poly(&mut coeffs);
        Ok(coeffs)
    }

    /// Enclosure of width ≤ 2^(−bits), exact for rationals.
    pub fn refine(&self, bits: u64) -> Interval {
        if self.terms.is_empty() {
            return Interval::point(self.base.clone());
        }
        let mut mag = BigInt::one();
        for c in self.terms.values() {
            mag += c.numer().abs().div_ceil(c.denom());
        }
        let k = bits + mag.bits() + 1;
        let mut iv = Interval::point(self.base.clone());
        for (d, c) in &self.terms {
            iv = iv.add(&Interval::sqrt(d, k).scale(c));
        }
        debug_assert!(iv.width() <= Rational::new(BigInt::one(), BigInt::one() << bits));
        iv
    }

    /// Exact total order. Equality is decided structurally (distinct
    /// squarefree roots are ℚ-linearly independent); strict comparisons
    /// refine until the difference interval excludes zero, which the
    /// root-separation bound of the difference's minimal polynomial
    /// guarantees to happen at finite precision.
    pub fn compare(&self, other: &Self) -> Ordering {
        let diff = self.sub(other);
        if diff.is_zero() {
            return Ordering::Equal;
        }
        if let Some(r) = diff.to_rational() {
            return r.cmp(&Rational::zero());
        }
        let mut bits = 32u64;
        loop {
            let iv = diff.refine(bits);
            if let Some(sign) = iv.definite_sign() {
                return sign;
            }
            bits *= 2;
            assert!(bits < 1 << 24, "separation bound exceeded; nonzero value refused to separate");
        }
    }

    pub fn sign(&self) -> Ordering {
        self.compare(&SurdSum::zero())
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Collapse to a `QuadSurd` when at most one radicand is present.
    pub fn degenerate_to_quadsurd(&self) -> Option<QuadSurd> {
        match self.terms.len() {
            0 => Some(QuadSurd::from_rational(&self.base)),
            1 => {
                let (d, c) = self.terms.iter().next().unwrap();
                let denom = self.base.denom().lcm(c.denom());
                let a = self.base.numer() * (&denom / self.base.denom());
                let b = c.numer() * (&denom / c.denom());
                Some(QuadSurd::new(a, b, denom, d.clone()).expect("nonzero denominator"))
            }
            _ => None,
        }
    }

    /// Decimal string with `digits` places, correct by interval agreement.
    pub fn decimal(&self, digits: usize) -> String {
        use crate::exact::interval::decimal_string;
        let mut bits = (digits as u64) * 4 + 32;
        loop {
            let iv = self.refine(bits);
            let lo = decimal_string(iv.lo(), digits);
            let hi = decimal_string(iv.hi(), digits);
            if lo == hi {
                return lo;
            }
            bits *= 2;
            if bits > 1 << 22 {
                // value sits exactly on a digit boundary; report the midpoint
                return decimal_string(&iv.midpoint(), digits);
            }
        }
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.degenerate_to_quadsurd() {
            return write!(f, "{q}");
        }
        write!(f, "{}", self.base)?;
        for (d, c) in &self.terms {
            write!(f, " + {c}*sqrt({d})")?;
        }
        Ok(())
    }
}
