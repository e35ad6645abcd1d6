//! Finite and eventually periodic continued fractions.
//!
//! Evaluation goes through products of partial-quotient matrices
//! (determinant ±1 continuants), periodic tails solve their fixed-point
//! quadratic exactly, and expansion of a surd back to periodic form detects
//! the cycle on the exact surd state. The parity comparison rule decides
//! orderings purely combinatorially from the first differing partial
//! quotient.

mod text;

pub use text::parse_periodic_cf;
pub(crate) use text::Scanner;

use crate::exact::{QuadSurd, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A finite sequence of positive integer partial quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Precondition("partial quotients must be ≥ 1".into()));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `1^n`
    pub fn ones(n: usize) -> Self {
        Word(vec![1; n])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, k: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn rotated_left(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(1)
    }

    pub fn check_alphabet(&self, bound: u32) -> Result<()> {
        for &a in &self.0 {
            if a > bound {
                return Err(Error::AlphabetTooLarge(a));
            }
        }
        Ok(())
    }

    /// Smallest `p` with `w = (w[..p])^(len/p)`.
    pub fn primitive_root_len(&self) -> usize {
        let n = self.0.len();
        'outer: for p in 1..=n {
            if !n.is_multiple_of(p) {
                continue;
            }
            for i in p..n {
                if self.0[i] != self.0[i - p] {
                    continue 'outer;
                }
            }
            return p;
        }
        n
    }

    /// Does `pattern` occur as a (linear) factor?
    pub fn contains_factor(&self, pattern: &[u32]) -> bool {
        if pattern.is_empty() || self.0.len() < pattern.len() {
            return false;
        }
        self.0.windows(pattern.len()).any(|w| w == pattern)
    }

    /// Does `pattern` occur reading the word cyclically?
    pub fn contains_cyclic_factor(&self, pattern: &[u32]) -> bool {
        if pattern.is_empty() || self.0.is_empty() {
            return false;
        }
        let n = self.0.len();
        for start in 0..n {
            if (0..pattern.len()).all(|j| self.0[(start + j) % n] == pattern[j]) {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Integer Möbius map `t ↦ (p t + q)/(r t + s)`; products of partial-quotient
/// matrices have determinant ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mobius {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl Mobius {
    pub fn identity() -> Self {
        Mobius {
            p: BigInt::one(),
            q: BigInt::zero(),
            r: BigInt::zero(),
            s: BigInt::one(),
        }
    }

    pub fn of_letter(a: &BigInt) -> Self {
        Mobius {
            p: a.clone(),
            q: BigInt::one(),
            r: BigInt::one(),
            s: BigInt::zero(),
        }
    }

    pub fn of_word(w: &Word) -> Self {
        let mut m = Mobius::identity();
        for &a in w.letters() {
            m = m.compose(&Mobius::of_letter(&BigInt::from(a)));
        }
        m
    }

    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius {
            p: &self.p * &other.p + &self.q * &other.r,
            q: &self.p * &other.q + &self.q * &other.s,
            r: &self.r * &other.p + &self.s * &other.r,
            s: &self.r * &other.q + &self.s * &other.s,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn apply_surd(&self, t: &QuadSurd) -> Result<QuadSurd> {
        let num = t
            .scale_int(&self.p)
            .add(&QuadSurd::from_int(self.q.clone()))?;
        let den = t
            .scale_int(&self.r)
            .add(&QuadSurd::from_int(self.s.clone()))?;
        num.div(&den)
    }

    pub fn apply_rational(&self, t: &Rational) -> Rational {
        let num = &self.p * t.numer() + &self.q * t.denom();
        let den = &self.r * t.numer() + &self.s * t.denom();
        Rational::new(num, den)
    }

    /// Image of t → ∞, i.e. the convergent p/r.
    pub fn apply_infinity(&self) -> Rational {
        Rational::new(self.p.clone(), self.r.clone())
    }
}

/// Integer part plus preperiod and period words. An empty period is the
/// sentinel for a finite (rational) expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicCF {
    pub a0: BigInt,
    pub preperiod: Word,
    pub period: Word,
}

impl PeriodicCF {
    pub fn new<T: Into<BigInt>>(a0: T, preperiod: Word, period: Word) -> Self {
        PeriodicCF {
            a0: a0.into(),
            preperiod,
            period,
        }
    }

    pub fn finite<T: Into<BigInt>>(a0: T, word: Word) -> Self {
        PeriodicCF::new(a0, word, Word::empty())
    }

    pub fn purely_periodic<T: Into<BigInt>>(a0: T, period: Word) -> Self {
        PeriodicCF::new(a0, Word::empty(), period)
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Letter stream after `a0` (preperiod then period repeated), index 0-based.
    pub fn letter(&self, i: usize) -> Option<u32> {
        if i < self.preperiod.len() {
            return Some(self.preperiod.letters()[i]);
        }
        if self.period.is_empty() {
            return None;
        }
        let j = (i - self.preperiod.len()) % self.period.len();
        Some(self.period.letters()[j])
    }

    pub fn max_letter(&self) -> u32 {
        self.preperiod.max_letter().max(self.period.max_letter())
    }
}

impl fmt::Display for PeriodicCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.a0)?;
        if self.preperiod.is_empty() && self.period.is_empty() {
            return write!(f, "]");
        }
        write!(f, ";")?;
        if !self.preperiod.is_empty() {
            write!(f, "{}", self.preperiod)?;
            if !self.period.is_empty() {
                write!(f, ",")?;
            }
        }
        if !self.period.is_empty() {
            write!(f, "({})", self.period)?;
        }
        write!(f, "]")
    }
}

/// Exact value of the finite continued fraction `[a0; w]`.
pub fn eval_finite(a0: &BigInt, w: &Word) -> Rational {
    eval_finite_with_mobius(a0, w).0
}

/// The value together with the convergent Möbius product behind it.
pub fn eval_finite_with_mobius(a0: &BigInt, w: &Word) -> (Rational, Mobius) {
    let m = Mobius::of_letter(a0).compose(&Mobius::of_word(w));
    (m.apply_infinity(), m)
}

/// Successive convergents of `[a0; w]` including the empty truncation `a0`.
pub fn convergents(a0: &BigInt, w: &Word) -> Vec<Rational> {
    let mut m = Mobius::of_letter(a0);
    let mut out = vec![m.apply_infinity()];
    for &a in w.letters() {
        m = m.compose(&Mobius::of_letter(&BigInt::from(a)));
        out.push(m.apply_infinity());
    }
    out
}

/// Exact value of an eventually periodic continued fraction.
///
/// The periodic tail solves `t = M_period(t)`; the positive root is the one
/// exceeding 1, since a tail `[b; …]` with `b ≥ 1` always does. Finite
/// expansions (empty period sentinel) evaluate to their rational value.
pub fn eval_periodic(cf: &PeriodicCF) -> QuadSurd {
    if cf.is_finite() {
        return QuadSurd::from_rational(&eval_finite(&cf.a0, &cf.preperiod));
    }
    let m = Mobius::of_word(&cf.period);
    // r·t² + (s − p)·t − q = 0; the two roots have opposite signs, so the
    // +√Δ branch is the positive (and > 1) one.
    let delta = (&m.p + &m.s) * (&m.p + &m.s) - BigInt::from(4) * m.det();
    let tail = QuadSurd::new(&m.p - &m.s, BigInt::one(), BigInt::from(2) * &m.r, delta)
        .expect("period word is nonempty so r ≥ 1");
    debug_assert_eq!(
        tail.cmp_rational(&Rational::one()),
        Ordering::Greater,
        "periodic tail must exceed 1"
    );
    let head = Mobius::of_letter(&cf.a0).compose(&Mobius::of_word(&cf.preperiod));
    head.apply_surd(&tail)
        .expect("tail is irrational so the denominator never vanishes")
}

/// Expansion of an exact surd into its eventually periodic continued
/// fraction. Rationals produce a finite expansion with the empty-period
/// sentinel. Round trip: `eval_periodic(expand_surd(x)) = x`.
pub fn expand_surd(x: &QuadSurd) -> PeriodicCF {
    let a0 = x.floor();
    let mut letters: Vec<u32> = Vec::new();
    let mut seen: HashMap<QuadSurd, usize> = HashMap::new();
    let mut frac = x.sub(&QuadSurd::from_int(a0.clone())).expect("same field");
    loop {
        if frac.is_zero() {
            // rational: finite expansion
            return PeriodicCF::finite(a0, Word::new(letters).expect("letters ≥ 1"));
        }
        let state = frac.clone();
        if let Some(&start) = seen.get(&state) {
            let pre = Word::new(letters[..start].to_vec()).expect("letters ≥ 1");
            let per = Word::new(letters[start..].to_vec()).expect("letters ≥ 1");
            return PeriodicCF::new(a0, pre, per);
        }
        seen.insert(state, letters.len());
        let y = frac.inv().expect("nonzero fractional part");
        let a = y.floor();
        let au: u32 = a
            .to_string()
            .parse()
            .expect("partial quotients of a real in (0,1) inverse are ≥ 1 and modest");
        letters.push(au);
        frac = y.sub(&QuadSurd::from_int(a)).expect("same field");
    }
}

/// Minimal period (no smaller rotation-repeat divides it) and minimal
/// preperiod (trailing preperiod letters matching the period's rotation are
/// absorbed).
pub fn canonical_period(cf: &PeriodicCF) -> PeriodicCF {
    if cf.is_finite() {
        return cf.clone();
    }
    let root = cf.period.primitive_root_len();
    let mut per: Vec<u32> = cf.period.letters()[..root].to_vec();
    let mut pre: Vec<u32> = cf.preperiod.letters().to_vec();
    while let Some(&last) = pre.last() {
        if last == *per.last().expect("period nonempty") {
            pre.pop();
            per.rotate_right(1);
        } else {
            break;
        }
    }
    PeriodicCF::new(
        cf.a0.clone(),
        Word::new(pre).expect("letters ≥ 1"),
        Word::new(per).expect("letters ≥ 1"),
    )
}

/// A tail for the parity comparison: either a finite word or an eventually
/// periodic continuation; only its first letter participates.
#[derive(Debug, Clone)]
pub enum Tail<'a> {
    Word(&'a Word),
    Periodic(&'a PeriodicCF),
}

impl Tail<'_> {
    pub fn first_letter(&self) -> Result<u32> {
        match self {
            Tail::Word(w) => w
                .letters()
                .first()
                .copied()
                .ok_or_else(|| Error::Precondition("tail must be nonempty".into())),
            Tail::Periodic(cf) => {
                // a tail [b1; b2, …] carries its first letter as the integer part
                if cf.a0.is_positive() {
                    u32::try_from(cf.a0.clone())
                        .map_err(|_| Error::Precondition("tail head out of range".into()))
                } else {
                    Err(Error::Precondition("tail head must be ≥ 1".into()))
                }
            }
        }
    }

    fn max_letter(&self) -> u32 {
        match self {
            Tail::Word(w) => w.max_letter(),
            Tail::Periodic(cf) => {
                let head = u32::try_from(cf.a0.clone()).unwrap_or(u32::MAX);
                head.max(cf.max_letter())
            }
        }
    }
}

/// Ordering of `[a0; common, tail1, …]` versus `[a0; common, tail2, …]`
/// decided purely from the parity of `|common|` and the first letters of the
/// tails: for odd length the larger first letter wins, for even length it
/// loses. Letters must stay ≤ 4 (the regime in which the quantitative
/// comparison bounds are proved) and the first letters must differ.
pub fn compare_by_parity(common: &Word, tail1: &Tail, tail2: &Tail) -> Result<Ordering> {
    common.check_alphabet(4)?;
    let b = tail1.first_letter()?;
    let c = tail2.first_letter()?;
    for t in [tail1, tail2] {
        if t.max_letter() > 4 {
            return Err(Error::AlphabetTooLarge(t.max_letter()));
        }
    }
    if b == c {
        return Err(Error::Precondition(
            "parity comparison requires differing first tail letters".into(),
        ));
    }
    let first_cmp = b.cmp(&c);
    Ok(if common.len() % 2 == 1 {
        first_cmp
    } else {
        first_cmp.reverse()
    })
}

/// Ordering of the values `[0; s1…]` vs `[0; s2…]` for two letter streams that
/// differ somewhere within the provided slices; the continuation beyond the
/// slices does not matter once a difference is found.
pub fn compare_streams_by_parity(s1: &[u32], s2: &[u32]) -> Result<Ordering> {
    let n = s1.len().min(s2.len());
    for i in 0..n {
        if s1[i] != s2[i] {
            let common = Word::new(s1[..i].to_vec())?;
            let w1 = Word::new(vec![s1[i]])?;
            let w2 = Word::new(vec![s2[i]])?;
            return compare_by_parity(&common, &Tail::Word(&w1), &Tail::Word(&w2));
        }
    }
    Err(Error::Precondition(
        "streams agree on the compared window".into(),
    ))
}
