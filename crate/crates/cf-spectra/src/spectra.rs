//! λ values, Markoff value `M(B)`, Lagrange value `L(B)` for eventually
//! periodic bi-infinite sequences, Lagrange constants of quadratic
//! irrationals, and certified λ windows for non-periodic prefixes.
//!
//! `M(B) = sup λ_i(B)` is certified exactly: a window of the center plus two
//! periods each side is evaluated exactly, and every deeper index falls into
//! a residue class (phase and parity) whose members compare to the purely
//! periodic limit value with one fixed sign. That sign is computed by one
//! exact comparison at the class's shallowest member, so the supremum over
//! each class is either that member (approach from above), the limit value
//! (approach from below, not attained), or the shared constant. The result
//! is exact for every eventually periodic input, including suprema that are
//! limit values attained at no finite index.

use crate::cf::{eval_periodic, Mobius, PeriodicCF, Word};
use crate::exact::{Interval, QuadSurd, Rational, SurdSum};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::fmt;

/// Bi-infinite eventually periodic sequence `(overline(L), center, overline(R))`
/// with index 0 at the first center letter; `b_i` for `i < 0` extends the left
/// period, for `i ≥ |center|` the right period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeq {
    left: Word,
    center: Word,
    right: Word,
}

impl BiSeq {
    pub fn new(left: Word, center: Word, right: Word) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(BiSeq {
            left,
            center,
            right,
        })
    }

    pub fn purely_periodic(p: Word) -> Result<Self> {
        BiSeq::new(p.clone(), Word::empty(), p)
    }

    pub fn left(&self) -> &Word {
        &self.left
    }

    pub fn center(&self) -> &Word {
        &self.center
    }

    pub fn right(&self) -> &Word {
        &self.right
    }

    pub fn letter(&self, i: i64) -> u32 {
        let cl = self.center.len() as i64;
        if i < 0 {
            let n = self.left.len() as i64;
            self.left.letters()[i.rem_euclid(n) as usize]
        } else if i < cl {
            self.center.letters()[i as usize]
        } else {
            let n = self.right.len() as i64;
            self.right.letters()[((i - cl) % n) as usize]
        }
    }

    pub fn max_letter(&self) -> u32 {
        self.left
            .max_letter()
            .max(self.center.max_letter())
            .max(self.right.max_letter())
    }

    /// Mirror image: the reflection reads the sequence leftward.
    pub fn reflect(&self) -> BiSeq {
        BiSeq {
            left: self.right.reversed(),
            center: self.center.reversed(),
            right: self.left.reversed(),
        }
    }

    /// Same bi-infinite sequence with index 0 moved one step left (the last
    /// left-period letter joins the center).
    pub fn shift_left(&self) -> BiSeq {
        let n = self.left.len();
        let pulled = self.left.letters()[n - 1];
        let mut c = vec![pulled];
        c.extend_from_slice(self.center.letters());
        BiSeq {
            left: self.left.rotated_left(n - 1),
            center: Word::new(c).expect("letters ≥ 1"),
            right: self.right.clone(),
        }
    }

    /// Same sequence and indexing, with `m` right-period letters absorbed
    /// into the center (pure re-representation).
    pub fn absorb_right(&self, m: usize) -> BiSeq {
        let mut c = self.center.letters().to_vec();
        for k in 0..m {
            c.push(self.right.letters()[k % self.right.len()]);
        }
        BiSeq {
            left: self.left.clone(),
            center: Word::new(c).expect("letters ≥ 1"),
            right: self.right.rotated_left(m % self.right.len()),
        }
    }

    /// The period if the sequence is purely periodic: center empty and the
    /// left extension consistent with the right period across the junction.
    pub fn purely_periodic_word(&self) -> Option<Word> {
        if !self.center.is_empty() {
            return None;
        }
        let rl = self.right.len() as i64;
        let ll = self.left.len() as i64;
        let span = num_integer::lcm(rl, ll) + rl;
        for k in 1..=span {
            let expect = self.right.letters()[(-k).rem_euclid(rl) as usize];
            if self.letter(-k) != expect {
                return None;
            }
        }
        Some(self.right.clone())
    }

    /// `[b_i; b_{i+1}, b_{i+2}, …]` as an eventually periodic CF.
    pub fn right_tail(&self, i: i64) -> PeriodicCF {
        let cl = self.center.len() as i64;
        let rl = self.right.len() as i64;
        let j0 = (i + 1).max(cl);
        let pre: Vec<u32> = ((i + 1)..j0).map(|j| self.letter(j)).collect();
        let phase = ((j0 - cl) % rl) as usize;
        PeriodicCF::new(
            BigInt::from(self.letter(i)),
            Word::new(pre).expect("letters ≥ 1"),
            self.right.rotated_left(phase),
        )
    }

    /// `[0; b_{i−1}, b_{i−2}, …]` as an eventually periodic CF.
    pub fn left_tail(&self, i: i64) -> PeriodicCF {
        let ll = self.left.len() as i64;
        if i >= 1 {
            let pre: Vec<u32> = (0..i).rev().map(|j| self.letter(j)).collect();
            PeriodicCF::new(0, Word::new(pre).expect("letters ≥ 1"), self.left.reversed())
        } else {
            let r = (-i).rem_euclid(ll) as usize;
            PeriodicCF::new(0, Word::empty(), self.left.reversed().rotated_left(r))
        }
    }
}

impl fmt::Display for BiSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<({})|{}|({})>", self.left, self.center, self.right)
    }
}

impl std::str::FromStr for BiSeq {
    type Err = Error;

    /// Syntax: `<(L)|c1,c2,…|(R)>`; the center may be empty: `<(1)||(1)>`.
    fn from_str(s: &str) -> Result<BiSeq> {
        let mut sc = crate::cf::Scanner::new(s);
        sc.eat('<')?;
        sc.eat('(')?;
        let left = scan_letters(&mut sc)?;
        sc.eat(')')?;
        sc.eat('|')?;
        let center = if sc.peek() == Some('|') {
            Vec::new()
        } else {
            scan_letters(&mut sc)?
        };
        sc.eat('|')?;
        sc.eat('(')?;
        let right = scan_letters(&mut sc)?;
        sc.eat(')')?;
        sc.eat('>')?;
        if !sc.at_end() {
            return Err(sc.error("trailing input after bi-sequence"));
        }
        let mk = |v: Vec<u32>, sc: &crate::cf::Scanner| {
            Word::new(v).map_err(|e| Error::Parse {
                pos: sc.pos,
                msg: e.to_string(),
            })
        };
        BiSeq::new(mk(left, &sc)?, mk(center, &sc)?, mk(right, &sc)?)
    }
}

fn scan_letters(sc: &mut crate::cf::Scanner) -> Result<Vec<u32>> {
    let mut out = vec![sc.letter()?];
    loop {
        if sc.peek() == Some(',') {
            sc.eat(',')?;
            out.push(sc.letter()?);
        } else if sc.peek().is_some_and(|c| c.is_ascii_digit()) {
            // letters may also be space-separated
            out.push(sc.letter()?);
        } else {
            break;
        }
    }
    Ok(out)
}

/// Where a spectrum value is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Index(i64),
    Limit,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Index(i) => write!(f, "{i}"),
            Witness::Limit => write!(f, "limit"),
        }
    }
}

/// An exact supremum or limsup together with its certificate data.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    pub value: SurdSum,
    pub attained: bool,
    pub witness: Witness,
    /// number of indices evaluated exactly for the certificate
    pub certification_window: usize,
}

/// `λ_i(B) = [b_i; b_{i+1}, …] + [0; b_{i−1}, …]`, exact. (The split of the
/// integer part is immaterial: both orientations sum to
/// `b_i + [0; rightward] + [0; leftward]`.)
pub fn lambda_at(b: &BiSeq, i: i64) -> SurdSum {
    let right = eval_periodic(&b.right_tail(i));
    let left = eval_periodic(&b.left_tail(i));
    SurdSum::make(&right, &left)
}

/// λ at every offset of the purely periodic sequence `overline(p)`, as exact
/// surds in one quadratic field (the reversed tail shares the discriminant).
pub fn periodic_lambdas(p: &Word) -> Vec<QuadSurd> {
    let n = p.len();
    let mut out = Vec::with_capacity(n);
    for r in 0..n {
        let a0 = p.letters()[r];
        let right = PeriodicCF::purely_periodic(a0, p.rotated_left((r + 1) % n));
        let left = PeriodicCF::purely_periodic(0u32, p.reversed().rotated_left((n - r) % n));
        let rv = eval_periodic(&right);
        let lv = eval_periodic(&left);
        out.push(rv.add(&lv).expect("tails of a periodic word share one field"));
    }
    out
}

fn check_alphabet(b: &BiSeq) -> Result<()> {
    let m = b.max_letter();
    if m > 4 {
        return Err(Error::AlphabetTooLarge(m));
    }
    Ok(())
}

/// Limit values approached strictly from below by some residue class of one
/// tail; such a limit is a supremum candidate that no finite index attains.
fn below_limits(
    reps: &[(i64, SurdSum)],
    limits: &[SurdSum],
    phase_of: impl Fn(usize) -> usize,
) -> Vec<SurdSum> {
    let mut below = Vec::new();
    for (k, (_, lam)) in reps.iter().enumerate() {
        let lim = &limits[phase_of(k)];
        if lam.compare(lim) == Ordering::Less {
            below.push(lim.clone());
        }
    }
    below
}

/// Exact `M(B) = sup λ_i(B)` with certificate; see the module docs for the
/// certification argument. `pad` is the exact window in periods on each side
/// (values below 2 are raised to 2; the result is independent of `pad`).
pub fn m_value_windowed(b: &BiSeq, pad: usize) -> Result<SpectrumResult> {
    check_alphabet(b)?;
    let pad = pad.max(2) as i64;
    let cl = b.center().len() as i64;
    let rl = b.right().len() as i64;
    let ll = b.left().len() as i64;
    let w_r = pad * rl;
    let w_l = pad * ll;

    let mut window: Vec<(i64, SurdSum)> = Vec::with_capacity((w_l + cl + w_r) as usize);
    for i in -w_l..(cl + w_r) {
        window.push((i, lambda_at(b, i)));
    }
    let (mut best_i, mut best) = (window[0].0, window[0].1.clone());
    for (i, lam) in window.iter().skip(1) {
        match lam.compare(&best) {
            Ordering::Greater => {
                best_i = *i;
                best = lam.clone();
            }
            Ordering::Equal => {
                if i.abs() < best_i.abs() || (i.abs() == best_i.abs() && *i > best_i) {
                    best_i = *i;
                }
            }
            Ordering::Less => {}
        }
    }

    let r_limits: Vec<SurdSum> = periodic_lambdas(b.right())
        .iter()
        .map(SurdSum::from_quadsurd)
        .collect();
    let l_limits: Vec<SurdSum> = periodic_lambdas(b.left())
        .iter()
        .map(SurdSum::from_quadsurd)
        .collect();

    let t_r = num_integer::lcm(rl, 2);
    let right_reps: Vec<(i64, SurdSum)> = (0..t_r)
        .map(|r| {
            let i = cl + r;
            (i, window[(i + w_l) as usize].1.clone())
        })
        .collect();
    let right_below = below_limits(&right_reps, &r_limits, |k| k % rl as usize);

    let t_l = num_integer::lcm(ll, 2);
    let left_reps: Vec<(i64, SurdSum)> = (0..t_l)
        .map(|l| {
            let i = -1 - l;
            (i, window[(i + w_l) as usize].1.clone())
        })
        .collect();
    let left_below = below_limits(&left_reps, &l_limits, |k| {
        (-1i64 - k as i64).rem_euclid(ll) as usize
    });

    let mut value = best;
    let mut attained = true;
    let mut witness = Witness::Index(best_i);
    for lim in right_below.iter().chain(left_below.iter()) {
        if lim.compare(&value) == Ordering::Greater {
            value = lim.clone();
            attained = false;
            witness = Witness::Limit;
        }
    }

    Ok(SpectrumResult {
        value,
        attained,
        witness,
        certification_window: window.len(),
    })
}

/// Exact `M(B)` with the default certification window.
pub fn m_value(b: &BiSeq) -> Result<SpectrumResult> {
    m_value_windowed(b, 2)
}

/// Exact `L(B) = limsup_{i→∞} λ_i(B)`: the maximum of λ over one period of
/// the purely bi-periodic continuation of the right period; the witness is
/// the in-period offset. `attained` reports whether λ_i equals the limsup
/// infinitely often.
pub fn l_value(b: &BiSeq) -> Result<SpectrumResult> {
    check_alphabet(b)?;
    let rl = b.right().len() as i64;
    let cl = b.center().len() as i64;
    let r_limits: Vec<SurdSum> = periodic_lambdas(b.right())
        .iter()
        .map(SurdSum::from_quadsurd)
        .collect();
    let mut offset = 0usize;
    for p in 1..r_limits.len() {
        if r_limits[p].compare(&r_limits[offset]) == Ordering::Greater {
            offset = p;
        }
    }
    let value = r_limits[offset].clone();
    // λ_i = L infinitely often iff some residue class sits constantly at a
    // maximal phase limit
    let t_r = num_integer::lcm(rl, 2);
    let mut attained = false;
    for r in 0..t_r {
        let phase = (r % rl) as usize;
        if r_limits[phase].compare(&value) == Ordering::Equal {
            let lam = lambda_at(b, cl + r);
            if lam.compare(&r_limits[phase]) == Ordering::Equal {
                attained = true;
                break;
            }
        }
    }
    Ok(SpectrumResult {
        value,
        attained,
        witness: Witness::Index(offset as i64),
        certification_window: t_r as usize,
    })
}

/// Lagrange constant `μ(α)` of a quadratic irrational given by its eventually
/// periodic expansion: the limsup over the purely periodic continuation of
/// the canonical period (a preperiod cannot affect a limsup).
pub fn mu_quadratic(cf: &PeriodicCF) -> Result<SurdSum> {
    let canon = crate::cf::canonical_period(cf);
    if canon.period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let pure = BiSeq::purely_periodic(canon.period.clone())?;
    Ok(l_value(&pure)?.value)
}

/// Certified interval containing `λ_i` of every bi-infinite extension of
/// `prefix` that agrees on positions `i−slack … i+slack` (0-indexed), with
/// all letters ≤ 4. Width stays below `4·ε_slack = 2^(−slack+3)`.
pub fn lambda_window(prefix: &Word, i: usize, slack: usize) -> Result<Interval> {
    prefix.check_alphabet(4)?;
    if slack == 0 {
        return Err(Error::Precondition("slack must be ≥ 1".into()));
    }
    if i < slack || i + slack >= prefix.len() {
        return Err(Error::Precondition(format!(
            "slack {slack} exceeds the prefix margin at position {i} (len {})",
            prefix.len()
        )));
    }
    let letters = prefix.letters();
    let cylinder = |head: u32, tail: &[u32]| -> Interval {
        let mut m = Mobius::of_letter(&BigInt::from(head));
        for &a in tail {
            m = m.compose(&Mobius::of_letter(&BigInt::from(a)));
        }
        // continuations range over t ∈ (1, ∞)
        let at_one = m.apply_rational(&Rational::one());
        let at_inf = m.apply_infinity();
        let (lo, hi) = if at_one <= at_inf {
            (at_one, at_inf)
        } else {
            (at_inf, at_one)
        };
        Interval::new(lo, hi).expect("ordered endpoints")
    };
    let right = cylinder(letters[i], &letters[i + 1..=i + slack]);
    let left_letters: Vec<u32> = (i - slack..i).rev().map(|j| letters[j]).collect();
    let left = cylinder(0, &left_letters);
    Ok(right.add(&left))
}
