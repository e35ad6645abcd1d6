//! Executable versions of the combinatorial lemmas behind the gap analysis,
//! plus the admissibility decision procedure at bounded period.
//!
//! Each verifier either checks one concrete instance exactly or runs a
//! randomized/exhaustive suite and returns a [`SuiteReport`] listing any
//! counterexamples. Randomized suites take an explicit seed and are fully
//! reproducible. The admissibility search enumerates primitive necklaces
//! (Lyndon representatives) up to a period bound; exhaustion verdicts are
//! certificates only up to that bound, and the report says so.

use crate::cf::{compare_by_parity, eval_periodic, PeriodicCF, Tail, Word};
use crate::constructions::gbur_alpha_star;
use crate::exact::{QuadSurd, Rational, SurdSum};
use crate::spectra::{lambda_at, m_value, periodic_lambdas, BiSeq, Witness};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;

/// ε_n = 2^(−(n−1)).
pub fn epsilon(n: usize) -> Rational {
    if n >= 1 {
        Rational::new(BigInt::one(), BigInt::one() << (n - 1))
    } else {
        Rational::from(BigInt::from(2))
    }
}

/// δ_n = 5^(−2(n+2)).
pub fn delta(n: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(5).pow(2 * (n as u32 + 2)))
}

// ---------------------------------------------------------------------------
// pigeonhole repeats

/// Two equal blocks of length `2n+2` at same-parity positions (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepeatWitness {
    pub n1: usize,
    pub n2: usize,
    pub block_len: usize,
}

impl RepeatWitness {
    /// Letter-by-letter re-verification, independent of how the witness was
    /// found.
    pub fn verify(&self, w: &Word) -> bool {
        let letters = w.letters();
        if self.n1 == 0 || self.n1 >= self.n2 {
            return false;
        }
        if !(self.n2 - self.n1).is_multiple_of(2) {
            return false;
        }
        if self.n2 + self.block_len - 1 > letters.len() {
            return false;
        }
        (0..self.block_len).all(|i| letters[self.n1 - 1 + i] == letters[self.n2 - 1 + i])
    }
}

/// The word length that guarantees a repeat: `N(n) = (2n+2)(4^(2n+2) + 1)`.
pub fn repeat_bound(n: u32) -> u128 {
    let block = 2 * n as u128 + 2;
    block * (4u128.pow(2 * n + 2) + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Disjoint aligned blocks, as in the pigeonhole argument (1-based starts
    /// 1, L+1, 2L+1, …, all odd).
    Aligned,
    /// Full scan over all same-parity start pairs, smallest (n1, n2) first.
    Sliding,
}

/// Find a same-parity repeated block of length `2n+2` in a word over {1,…,4}
/// of length ≥ N(n).
pub fn find_repeat(w: &Word, n: u32, mode: ScanMode) -> Result<RepeatWitness> {
    w.check_alphabet(4)?;
    let needed = repeat_bound(n);
    if (w.len() as u128) < needed {
        return Err(Error::Precondition(format!(
            "word length {} is below N({n}) = {needed}; use find_repeat_best_effort",
            w.len()
        )));
    }
    let found = match mode {
        ScanMode::Aligned => scan_aligned(w, n),
        ScanMode::Sliding => scan_sliding(w, n),
    };
    found.ok_or_else(|| {
        Error::Precondition("pigeonhole guarantee violated: no repeat found".into())
    })
}

/// Sliding scan without the length guarantee; may come back empty.
pub fn find_repeat_best_effort(w: &Word, n: u32) -> Option<RepeatWitness> {
    scan_sliding(w, n)
}

fn scan_aligned(w: &Word, n: u32) -> Option<RepeatWitness> {
    let block = 2 * n as usize + 2;
    let letters = w.letters();
    let mut seen: std::collections::HashMap<&[u32], usize> = std::collections::HashMap::new();
    for j in 0..letters.len() / block {
        let start = j * block;
        let slice = &letters[start..start + block];
        match seen.get(slice) {
            Some(&first) => {
                return Some(RepeatWitness {
                    n1: first * block + 1,
                    n2: start + 1,
                    block_len: block,
                });
            }
            None => {
                seen.insert(slice, j);
            }
        }
    }
    None
}

fn scan_sliding(w: &Word, n: u32) -> Option<RepeatWitness> {
    let block = 2 * n as usize + 2;
    let letters = w.letters();
    if letters.len() < block {
        return None;
    }
    let last_start = letters.len() - block; // 0-based
    for a in 0..=last_start {
        let mut b = a + 2;
        while b <= last_start {
            if letters[a..a + block] == letters[b..b + block] {
                return Some(RepeatWitness {
                    n1: a + 1,
                    n2: b + 1,
                    block_len: block,
                });
            }
            b += 2;
        }
    }
    None
}

// ---------------------------------------------------------------------------
// surgery (block deletion/duplication) betweenness

/// Exact evaluation of `γ = [0;A,B,C]`, `γ¹ = [0;A,C]`, `γ² = [0;A,B,B,C]`.
#[derive(Debug, Clone)]
pub struct SurgeryReport {
    pub gamma: QuadSurd,
    pub gamma1: QuadSurd,
    pub gamma2: QuadSurd,
    /// `min(γ¹,γ²) < γ < max(γ¹,γ²)`
    pub betweenness: bool,
    /// `max(γ¹,γ²) > γ`
    pub surgery_improves: bool,
    /// some pair of the three values coincides (only possible when C = B^∞)
    pub degenerate: bool,
}

/// `B` must have even positive length; `C` is a tail written as `[0; …]` with
/// a nonempty period. Coincident values are reported as degenerate, never
/// mis-ordered.
pub fn surgery_check(a: &Word, b: &Word, c: &PeriodicCF) -> Result<SurgeryReport> {
    if b.is_empty() || !b.len().is_multiple_of(2) {
        return Err(Error::Precondition(
            "the duplicated block must have even positive length".into(),
        ));
    }
    if !c.a0.eq(&BigInt::from(0)) {
        return Err(Error::Precondition("the tail must be written as [0; …]".into()));
    }
    if c.period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let assemble = |blocks: &[&Word]| -> PeriodicCF {
        let mut pre: Vec<u32> = Vec::new();
        for w in blocks {
            pre.extend_from_slice(w.letters());
        }
        pre.extend_from_slice(c.preperiod.letters());
        PeriodicCF::new(0, Word::new(pre).expect("letters ≥ 1"), c.period.clone())
    };
    let gamma = eval_periodic(&assemble(&[a, b]));
    let gamma1 = eval_periodic(&assemble(&[a]));
    let gamma2 = eval_periodic(&assemble(&[a, b, b]));
    let c01 = gamma.cmp_exact(&gamma1)?;
    let c02 = gamma.cmp_exact(&gamma2)?;
    let c12 = gamma1.cmp_exact(&gamma2)?;
    let degenerate =
        c01 == Ordering::Equal || c02 == Ordering::Equal || c12 == Ordering::Equal;
    let (lo, hi) = if c12 == Ordering::Less {
        (&gamma1, &gamma2)
    } else {
        (&gamma2, &gamma1)
    };
    let betweenness = !degenerate
        && lo.cmp_exact(&gamma)? == Ordering::Less
        && gamma.cmp_exact(hi)? == Ordering::Less;
    let surgery_improves = !degenerate && hi.cmp_exact(&gamma)? == Ordering::Greater;
    Ok(SurgeryReport {
        gamma,
        gamma1,
        gamma2,
        betweenness,
        surgery_improves,
        degenerate,
    })
}

// ---------------------------------------------------------------------------
// two-sided comparison bounds

#[derive(Debug, Clone)]
pub struct CompBoundsReport {
    pub n: usize,
    pub diff_abs: SurdSum,
    pub above_delta: bool,
    pub below_epsilon: bool,
}

/// Exact check of `δ_n < |α − β| < ε_n` for `α = [a0; common, t1, t1, …]` and
/// `β = [a0; common, t2, t2, …]` (finite tails extended periodically, which
/// makes both values exact surds). Letters stay ≤ 4 and the tails differ at
/// their first letter.
pub fn comp_bounds_check(
    a0: &BigInt,
    common: &Word,
    t1: &Word,
    t2: &Word,
) -> Result<CompBoundsReport> {
    common.check_alphabet(4)?;
    t1.check_alphabet(4)?;
    t2.check_alphabet(4)?;
    if t1.is_empty() || t2.is_empty() {
        return Err(Error::Precondition("tails must be nonempty".into()));
    }
    if t1.letters()[0] == t2.letters()[0] {
        return Err(Error::Precondition(
            "tails must differ at their first letter".into(),
        ));
    }
    let n = common.len();
    let alpha = eval_periodic(&PeriodicCF::new(a0.clone(), common.clone(), t1.clone()));
    let beta = eval_periodic(&PeriodicCF::new(a0.clone(), common.clone(), t2.clone()));
    let diff_abs = SurdSum::from_quadsurd(&alpha)
        .sub(&SurdSum::from_quadsurd(&beta))
        .abs();
    let above_delta =
        diff_abs.compare(&SurdSum::from_rational(delta(n))) == Ordering::Greater;
    let below_epsilon =
        diff_abs.compare(&SurdSum::from_rational(epsilon(n))) == Ordering::Less;
    Ok(CompBoundsReport {
        n,
        diff_abs,
        above_delta,
        below_epsilon,
    })
}

// ---------------------------------------------------------------------------
// banned patterns

/// True iff the word (read cyclically, as a period) forces the Markoff value
/// to 1+√5 or above: a letter ≥ 3 or the pattern 2,1,2,1 / 1,2,1,2.
pub fn contains_banned(w: &Word) -> bool {
    w.max_letter() >= 3
        || w.contains_cyclic_factor(&[2, 1, 2, 1])
        || w.contains_cyclic_factor(&[1, 2, 1, 2])
}

// ---------------------------------------------------------------------------
// pattern-avoidance minimality

#[derive(Debug, Clone)]
pub struct MinAvoidingReport {
    pub len: usize,
    pub words_checked: u64,
    pub minimizer: Word,
    pub min_value: QuadSurd,
    /// every completion evaluated to ≥ w_0
    pub all_at_least_w0: bool,
    /// the minimizer is the length-L prefix of the periodic word 2,1,2,2,…
    pub minimizer_is_w0_prefix: bool,
}

/// Exhaustively check that every word over {1,2} of length `len` avoiding the
/// linear factor (2,1,2,1) completes to a value ≥ w_0 = [0;(2,1,2,2)].
///
/// Completions continue the periodic word 2,1,2,2,… from position `len+1`
/// (phase-aligned), so an avoiding prefix stays avoiding and the prefix of
/// w_0 itself completes to exactly w_0 — the expected strict minimizer.
pub fn min_avoiding_check(len: usize) -> Result<MinAvoidingReport> {
    if len < 4 {
        return Err(Error::Precondition("need len ≥ 4".into()));
    }
    if len > 28 {
        return Err(Error::Precondition("exhaustive scan capped at len 28".into()));
    }
    let w0_period = [2u32, 1, 2, 2];
    let w0 = eval_periodic(&PeriodicCF::purely_periodic(
        0,
        Word::new(w0_period.to_vec())?,
    ));
    let completion = Word::new(
        (0..4).map(|j| w0_period[(len + j) % 4]).collect::<Vec<_>>(),
    )?;
    let w0_prefix: Vec<u32> = (0..len).map(|i| w0_period[i % 4]).collect();

    let mut best: Option<(QuadSurd, Vec<u32>)> = None;
    let mut all_ok = true;
    let mut checked = 0u64;
    let mut letters = vec![1u32; len];
    'words: for mask in 0u64..(1u64 << len) {
        for (i, l) in letters.iter_mut().enumerate() {
            *l = 1 + ((mask >> i) & 1) as u32;
        }
        // linear factor scan for 2,1,2,1
        if letters.windows(4).any(|w| w == [2, 1, 2, 1]) {
            continue 'words;
        }
        checked += 1;
        let value = eval_periodic(&PeriodicCF::new(
            0,
            Word::new(letters.clone())?,
            completion.clone(),
        ));
        if value.cmp_exact(&w0)? == Ordering::Less {
            all_ok = false;
        }
        let replace = match &best {
            None => true,
            Some((b, bw)) => match value.cmp_exact(b)? {
                Ordering::Less => true,
                Ordering::Equal => letters < *bw,
                Ordering::Greater => false,
            },
        };
        if replace {
            best = Some((value, letters.clone()));
        }
    }
    let (min_value, min_word) = best.expect("at least the all-ones word avoids the pattern");
    let minimizer_is_w0_prefix = min_word == w0_prefix;
    Ok(MinAvoidingReport {
        len,
        words_checked: checked,
        minimizer: Word::new(min_word)?,
        min_value,
        all_at_least_w0: all_ok,
        minimizer_is_w0_prefix,
    })
}

// ---------------------------------------------------------------------------
// first-elements classification

#[derive(Debug, Clone)]
pub enum Classification {
    /// `x` and `y` carry the `1^(2n)…` prefix shapes and `β_n ≤ M ≤ α_(n+1)*`.
    Classified {
        n: u32,
        shape_matches: bool,
        range_matches: bool,
    },
    OutOfScope {
        reason: String,
    },
}

#[derive(Debug, Clone)]
pub struct ClassifyReport {
    pub m: SurdSum,
    pub x: QuadSurd,
    pub y: QuadSurd,
    pub outcome: Classification,
    /// the shape test and the value-range test name the same `n` (the
    /// equivalence holds on this instance)
    pub consistent: bool,
}

fn beta_n_from_zero(n: u32) -> QuadSurd {
    let mut per = vec![1u32; 2 * n as usize];
    per.push(2);
    let tail = eval_periodic(&PeriodicCF::purely_periodic(
        0,
        Word::new(per).expect("letters ≥ 1"),
    ));
    tail.scale_int(&2.into())
        .add(&QuadSurd::from_int(2))
        .expect("same field")
}

/// Count of leading 1s along a tail of `b` from `origin` (rightward from
/// origin+1 or leftward from origin−1), with the letter that follows; a
/// `None` letter means the ones never end.
fn leading_ones(b: &BiSeq, origin: i64, rightward: bool) -> (usize, Option<u32>) {
    let cap = b.center().len() + 2 * (b.left().len() + b.right().len()) + 8;
    for k in 0..cap {
        let i = if rightward {
            origin + 1 + k as i64
        } else {
            origin - 1 - (k as i64)
        };
        let l = b.letter(i);
        if l != 1 {
            return (k, Some(l));
        }
    }
    (cap, None)
}

/// Classify a sequence with `M(B) = λ_0(B)` and `b_0 = 2` by the shape of its
/// two tails `x ≤ y` around the maximum, and independently by where `M` falls
/// among the gap endpoints; both routes must name the same `n`.
///
/// The origin is taken at the witness index (reading the tails there is the
/// same as rotating the sequence until `λ_0 = M`, which the three-field
/// representation cannot always express directly).
pub fn firstelements_classify(b: &BiSeq) -> Result<ClassifyReport> {
    let m = m_value(b)?;
    let origin = match m.witness {
        Witness::Index(i) if m.attained => i,
        _ => {
            return Err(Error::Precondition(
                "classification needs M attained at a finite index".into(),
            ))
        }
    };
    let b0 = b.letter(origin);
    let x_val = eval_periodic(&b.right_tail(origin))
        .sub(&QuadSurd::from_int(b0))
        .expect("same field");
    let y_val = eval_periodic(&b.left_tail(origin));
    if b0 != 2 {
        return Ok(ClassifyReport {
            m: m.value,
            x: x_val,
            y: y_val,
            outcome: Classification::OutOfScope {
                reason: format!("b_0 = {b0} ≠ 2"),
            },
            consistent: true,
        });
    }
    // order the tails so x ≤ y
    let (x_forward, x_val, y_val) = if x_val.cmp_exact(&y_val)? != Ordering::Greater {
        (true, x_val, y_val)
    } else {
        (false, y_val, x_val)
    };
    let (ones_x, next_x) = leading_ones(b, origin, x_forward);
    let (ones_y, _) = leading_ones(b, origin, !x_forward);

    let shape_n = if ones_x % 2 == 0 && next_x == Some(2) && ones_y >= ones_x {
        Some((ones_x / 2) as u32)
    } else {
        None
    };
    let mut range_n = None;
    for n in 0..=24u32 {
        let lo = SurdSum::from_quadsurd(&beta_n_from_zero(n));
        let hi = gbur_alpha_star(n + 1)?;
        if m.value.compare(&lo) != Ordering::Less && m.value.compare(&hi) != Ordering::Greater {
            range_n = Some(n);
            break;
        }
    }
    let consistent = shape_n == range_n;
    let outcome = match (shape_n, range_n) {
        (Some(n), _) => Classification::Classified {
            n,
            shape_matches: true,
            range_matches: range_n == Some(n),
        },
        (None, Some(n)) => Classification::Classified {
            n,
            shape_matches: false,
            range_matches: true,
        },
        (None, None) => Classification::OutOfScope {
            reason: "neither the tail shapes nor the value range match any n".into(),
        },
    };
    Ok(ClassifyReport {
        m: m.value,
        x: x_val,
        y: y_val,
        outcome,
        consistent,
    })
}

// ---------------------------------------------------------------------------
// admissibility search

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum AdmissibilityVerdict {
    WitnessFound,
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    pub max_period: usize,
    pub alphabet_max: u32,
    /// banned-pattern pruning was applicable (target below 1+√5)
    pub pruned_by_pattern: bool,
    pub candidates_checked: u64,
    pub candidates_pruned: u64,
    pub verdict: AdmissibilityVerdict,
    /// period rotated so that λ_0 = M
    pub witness: Option<Word>,
}

/// Generate all Lyndon words (primitive necklace representatives) over
/// `{1,…,k}` of length ≤ `max_len`, in order of increasing content
/// lexicographically, grouped here by exact length via the callback.
fn for_each_lyndon(k: u32, max_len: usize, mut f: impl FnMut(&[u32])) {
    let mut w: Vec<u32> = vec![1];
    loop {
        f(&w);
        let m = w.len();
        while w.len() < max_len {
            let next = w[w.len() - m];
            w.push(next);
        }
        while let Some(&last) = w.last() {
            if last == k {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
}

/// Fast sound estimate of `M(overline(p))` via exact i128 continuant
/// matrices and one float square root per rotation. The absolute error is
/// far below 1e-8 for periods ≤ 22, so a 1e-4 acceptance margin never
/// discards a true witness.
fn m_estimate(p: &[u32]) -> f64 {
    let n = p.len();
    // prefix[i] = matrix of p[0..i]; suffix[i] = matrix of p[i..n]
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push([1i128, 0, 0, 1]);
    for &a in p {
        let m = prefix.last().unwrap();
        let a = a as i128;
        prefix.push([m[0] * a + m[1], m[0], m[2] * a + m[3], m[2]]);
    }
    let mut suffix = vec![[1i128, 0, 0, 1]; n + 1];
    for i in (0..n).rev() {
        let m = suffix[i + 1];
        let a = p[i] as i128;
        suffix[i] = [a * m[0] + m[2], a * m[1] + m[3], m[0], m[1]];
    }
    let full = &prefix[n];
    let mut best = f64::MIN;
    for r in 0..n {
        // rotation matrix = suffix[r] · prefix[r]
        let (s, pr) = (&suffix[r], &prefix[r]);
        let m = if r == 0 {
            *full
        } else {
            [
                s[0] * pr[0] + s[1] * pr[2],
                s[0] * pr[1] + s[1] * pr[3],
                s[2] * pr[0] + s[3] * pr[2],
                s[2] * pr[1] + s[3] * pr[3],
            ]
        };
        let (mp, mq, mr, ms) = (m[0] as f64, m[1] as f64, m[2] as f64, m[3] as f64);
        let disc = ((m[0] - m[3]) * (m[0] - m[3]) + 4 * m[1] * m[2]) as f64;
        let root = disc.sqrt();
        let t = ((mp - ms) + root) / (2.0 * mr);
        let u = ((mp - ms) + root) / (2.0 * mq);
        let lam = t + 1.0 / u;
        if lam > best {
            best = lam;
        }
    }
    best
}

/// Exact `M(overline(p))` with the rotation offset attaining it.
fn m_exact_periodic(p: &Word) -> (QuadSurd, usize) {
    let lambdas = periodic_lambdas(p);
    let mut best = 0usize;
    for r in 1..lambdas.len() {
        if lambdas[r].cmp_exact(&lambdas[best]).expect("same field") == Ordering::Greater {
            best = r;
        }
    }
    (lambdas[best].clone(), best)
}

/// Search all purely periodic sequences with primitive period ≤ `max_period`
/// over `{1,…,alphabet_max}` for one whose Markoff value equals `target`
/// exactly. The witness, if any, is reported with its period rotated so that
/// `λ_0 = M`, and is the lexicographically first one at the smallest period,
/// independent of worker count.
pub fn admissible_search(
    target: &SurdSum,
    max_period: usize,
    alphabet_max: u32,
) -> Result<AdmissibilityReport> {
    if alphabet_max == 0 || alphabet_max > 4 {
        return Err(Error::Precondition("alphabet bound must be 1…4".into()));
    }
    if max_period == 0 {
        return Err(Error::Precondition("max period must be ≥ 1".into()));
    }
    let one_plus_r5 = SurdSum::from_quadsurd(
        &QuadSurd::new(1.into(), 1.into(), 1.into(), 5.into()).expect("valid"),
    );
    let prune = target.compare(&one_plus_r5) == Ordering::Less;
    let target_f = {
        use num_traits::ToPrimitive;
        target.refine(80).midpoint().to_f64().unwrap_or(f64::NAN)
    };
    let use_estimate = max_period <= 22 && target_f.is_finite();

    let mut checked = 0u64;
    let mut pruned = 0u64;
    let mut witness: Option<Word> = None;

    // stream Lyndon words grouped by length; lengths ascend so the first
    // length with a witness wins
    let mut by_len: Vec<Vec<Vec<u32>>> = vec![Vec::new(); max_period + 1];
    for_each_lyndon(alphabet_max, max_period, |w| {
        by_len[w.len()].push(w.to_vec());
    });

    for words in by_len.iter().skip(1) {
        if words.is_empty() {
            continue;
        }
        let results: Vec<(u64, u64, Option<Vec<u32>>)> = words
            .par_chunks(1024)
            .map(|chunk| {
                let mut c = 0u64;
                let mut pr = 0u64;
                let mut found: Option<Vec<u32>> = None;
                for w in chunk {
                    let word = Word::new(w.clone()).expect("letters ≥ 1");
                    if prune && contains_banned(&word) {
                        pr += 1;
                        continue;
                    }
                    c += 1;
                    if use_estimate && (m_estimate(w) - target_f).abs() > 1e-4 {
                        continue;
                    }
                    let (m, offset) = m_exact_periodic(&word);
                    if SurdSum::from_quadsurd(&m).compare(target) == Ordering::Equal {
                        let rotated = word.rotated_left(offset);
                        let better = match &found {
                            None => true,
                            Some(prev) => w < prev,
                        };
                        if better {
                            found = Some(rotated.letters().to_vec());
                        }
                    }
                }
                (c, pr, found)
            })
            .collect();
        let mut best_this_len: Option<Vec<u32>> = None;
        for (c, pr, found) in results {
            checked += c;
            pruned += pr;
            if let Some(w) = found {
                let better = match &best_this_len {
                    None => true,
                    Some(prev) => w < *prev,
                };
                if better {
                    best_this_len = Some(w);
                }
            }
        }
        if let Some(w) = best_this_len {
            witness = Some(Word::new(w)?);
            break;
        }
    }

    Ok(AdmissibilityReport {
        max_period,
        alphabet_max,
        pruned_by_pattern: prune,
        candidates_checked: checked,
        candidates_pruned: pruned,
        verdict: if witness.is_some() {
            AdmissibilityVerdict::WitnessFound
        } else {
            AdmissibilityVerdict::Exhausted
        },
        witness,
    })
}

// ---------------------------------------------------------------------------
// randomized / exhaustive suites

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub lemma: String,
    pub parameters: serde_json::Value,
    pub trials: u64,
    pub failures: Vec<String>,
    pub status: String,
}

impl SuiteReport {
    fn finish(lemma: &str, parameters: serde_json::Value, trials: u64, failures: Vec<String>) -> Self {
        SuiteReport {
            lemma: lemma.into(),
            parameters,
            trials,
            status: if failures.is_empty() { "ok" } else { "failed" }.into(),
            failures,
        }
    }

    pub fn ok(&self) -> bool {
        self.status == "ok"
    }
}

fn random_word(rng: &mut ChaCha8Rng, len: usize, max: u32) -> Word {
    Word::new((0..len).map(|_| rng.gen_range(1..=max)).collect()).expect("letters ≥ 1")
}

/// δ_n < |α−β| < ε_n over random same-prefix pairs with differing tails.
pub fn run_comp_bounds_suite(n: usize, trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let common = random_word(&mut rng, n, 4);
        let a0 = BigInt::from(rng.gen_range(0..3));
        let len1 = rng.gen_range(1..=4);
        let len2 = rng.gen_range(1..=4);
        let mut t1 = random_word(&mut rng, len1, 4);
        let mut t2 = random_word(&mut rng, len2, 4);
        while t1.letters()[0] == t2.letters()[0] {
            t1 = random_word(&mut rng, len1, 4);
            t2 = random_word(&mut rng, len2, 4);
        }
        match comp_bounds_check(&a0, &common, &t1, &t2) {
            Ok(rep) if rep.above_delta && rep.below_epsilon => {}
            Ok(_) => failures.push(format!(
                "trial {t}: bounds violated for a0={a0} common={common} t1={t1} t2={t2}"
            )),
            Err(e) => failures.push(format!("trial {t}: {e}")),
        }
        if failures.len() > 16 {
            break;
        }
    }
    SuiteReport::finish(
        "comp-bounds",
        serde_json::json!({"n": n, "seed": seed}),
        trials,
        failures,
    )
}

/// Aligned pigeonhole repeats on random words of the guaranteed length, each
/// witness re-verified letter-by-letter and for parity.
pub fn run_repeat_suite(n: u32, trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = repeat_bound(n) as usize;
    let mut failures = Vec::new();
    for t in 0..trials {
        let w = random_word(&mut rng, len, 4);
        match find_repeat(&w, n, ScanMode::Aligned) {
            Ok(wit) => {
                if !wit.verify(&w) || wit.block_len != 2 * n as usize + 2 {
                    failures.push(format!("trial {t}: witness failed re-verification: {wit:?}"));
                } else if wit.n1 % 2 != 1 || wit.n2 % 2 != 1 {
                    failures.push(format!("trial {t}: aligned starts must be odd: {wit:?}"));
                }
            }
            Err(e) => failures.push(format!("trial {t}: {e}")),
        }
        if failures.len() > 16 {
            break;
        }
    }
    SuiteReport::finish(
        "pigeonhole-repeat",
        serde_json::json!({"n": n, "word_len": len, "seed": seed}),
        trials,
        failures,
    )
}

/// Betweenness and the surgery inequality over random (A, even B, C).
pub fn run_surgery_suite(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut degenerate = 0u64;
    for t in 0..trials {
        let (la, lb, lp, lq) = (
            rng.gen_range(0..4),
            2 * rng.gen_range(1..=2),
            rng.gen_range(1..=3),
            rng.gen_range(1..=3),
        );
        let a = random_word(&mut rng, la, 4);
        let b = random_word(&mut rng, lb, 4);
        let c = PeriodicCF::new(
            0,
            random_word(&mut rng, lp, 4),
            random_word(&mut rng, lq, 4),
        );
        match surgery_check(&a, &b, &c) {
            Ok(rep) if rep.degenerate => degenerate += 1,
            Ok(rep) if rep.betweenness && rep.surgery_improves => {}
            Ok(_) => failures.push(format!("trial {t}: mis-ordering for A={a} B={b} C={c}")),
            Err(e) => failures.push(format!("trial {t}: {e}")),
        }
        if failures.len() > 16 {
            break;
        }
    }
    SuiteReport::finish(
        "surgery-betweenness",
        serde_json::json!({"seed": seed, "degenerate": degenerate}),
        trials,
        failures,
    )
}

/// The parity rule agrees with exact evaluation on random instances.
pub fn run_parity_agreement_suite(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let (lc, l1, l2) = (
            rng.gen_range(0..6),
            rng.gen_range(1..=3),
            rng.gen_range(1..=3),
        );
        let common = random_word(&mut rng, lc, 4);
        let mut t1 = random_word(&mut rng, l1, 4);
        let mut t2 = random_word(&mut rng, l2, 4);
        while t1.letters()[0] == t2.letters()[0] {
            t1 = random_word(&mut rng, t1.len(), 4);
            t2 = random_word(&mut rng, t2.len(), 4);
        }
        let predicted = match compare_by_parity(&common, &Tail::Word(&t1), &Tail::Word(&t2)) {
            Ok(o) => o,
            Err(e) => {
                failures.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let lhs = eval_periodic(&PeriodicCF::new(0, common.clone(), t1.clone()));
        let rhs = eval_periodic(&PeriodicCF::new(0, common.clone(), t2.clone()));
        let actual = lhs.cmp_exact(&rhs).expect("comparable");
        if predicted != actual {
            failures.push(format!(
                "trial {t}: parity rule predicted {predicted:?}, exact order is {actual:?} (common={common}, t1={t1}, t2={t2})"
            ));
        }
        if failures.len() > 16 {
            break;
        }
    }
    SuiteReport::finish(
        "parity-agreement",
        serde_json::json!({"seed": seed}),
        trials,
        failures,
    )
}

/// Exhaustive contrapositive of the banned-pattern lemma: every periodic
/// sequence with primitive period ≤ `max_period` containing a banned pattern
/// or a letter ≥ 3 has `M ≥ 1+√5` exactly.
pub fn run_banned_contrapositive(max_period: usize) -> SuiteReport {
    let one_plus_r5 = SurdSum::from_quadsurd(
        &QuadSurd::new(1.into(), 1.into(), 1.into(), 5.into()).expect("valid"),
    );
    let mut failures = Vec::new();
    let mut trials = 0u64;
    for_each_lyndon(4, max_period, |w| {
        let word = Word::new(w.to_vec()).expect("letters ≥ 1");
        if !contains_banned(&word) {
            return;
        }
        trials += 1;
        let (m, _) = m_exact_periodic(&word);
        if SurdSum::from_quadsurd(&m).compare(&one_plus_r5) == Ordering::Less {
            failures.push(format!("period ({word}) is banned but M < 1+√5"));
        }
    });
    SuiteReport::finish(
        "banned-contrapositive",
        serde_json::json!({"max_period": max_period}),
        trials,
        failures,
    )
}

/// Wrapper turning [`min_avoiding_check`] into a report.
pub fn run_min_avoiding(len: usize) -> SuiteReport {
    match min_avoiding_check(len) {
        Ok(rep) => {
            let mut failures = Vec::new();
            if !rep.all_at_least_w0 {
                failures.push("some completion dipped below w_0".into());
            }
            if !rep.minimizer_is_w0_prefix {
                failures.push(format!("unexpected minimizer {}", rep.minimizer));
            }
            SuiteReport::finish(
                "avoidance-minimality",
                serde_json::json!({
                    "len": len,
                    "words_checked": rep.words_checked,
                    "minimizer": rep.minimizer.to_string(),
                }),
                rep.words_checked,
                failures,
            )
        }
        Err(e) => SuiteReport::finish(
            "avoidance-minimality",
            serde_json::json!({"len": len}),
            0,
            vec![e.to_string()],
        ),
    }
}

/// λ-window containment on random windows of random prefixes: the certified
/// interval contains λ of concrete periodic extensions agreeing on the slack
/// window.
pub fn run_lambda_window_suite(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let len = rng.gen_range(9..24);
        let prefix = random_word(&mut rng, len, 4);
        let i = rng.gen_range(2..len - 2);
        let slack = rng.gen_range(1..=i.min(len - 1 - i).min(6));
        let iv = match crate::spectra::lambda_window(&prefix, i, slack) {
            Ok(iv) => iv,
            Err(e) => {
                failures.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let ext_len = rng.gen_range(1..=3);
        let ext = random_word(&mut rng, ext_len, 4);
        let b = match BiSeq::new(ext.clone(), prefix.clone(), ext) {
            Ok(b) => b,
            Err(e) => {
                failures.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let li = lambda_at(&b, i as i64).refine(60);
        if !(iv.lo() <= li.lo() && li.hi() <= iv.hi()) {
            failures.push(format!(
                "trial {t}: window {iv} misses λ_{i} of an agreeing extension"
            ));
        }
        if failures.len() > 16 {
            break;
        }
    }
    SuiteReport::finish(
        "lambda-window",
        serde_json::json!({"seed": seed}),
        trials,
        failures,
    )
}

/// Named classification instances around the first two gaps.
pub fn run_firstelements_suite() -> SuiteReport {
    let mut failures = Vec::new();
    let mut trials = 0u64;

    // the 4-letter period realizing the first gap's left endpoint: n = 0
    trials += 1;
    let b = BiSeq::purely_periodic(Word::new(vec![2, 1, 2, 2]).expect("letters")).expect("period");
    match firstelements_classify(&b) {
        Ok(rep) => match rep.outcome {
            Classification::Classified { n: 0, .. } if rep.consistent => {}
            other => failures.push(format!("(2,1,2,2): unexpected outcome {other:?}")),
        },
        Err(e) => failures.push(format!("(2,1,2,2): {e}")),
    }

    // the eventually periodic sequence realizing the second gap's left
    // endpoint: n = 1, M = α_2*; the classifier reads the tails at the witness
    trials += 1;
    match crate::constructions::lemma_sequence(1) {
        Ok(b) => match firstelements_classify(&b) {
            Ok(rep) => {
                let ok = matches!(
                    rep.outcome,
                    Classification::Classified {
                        n: 1,
                        shape_matches: true,
                        range_matches: true
                    }
                ) && rep.consistent;
                if !ok {
                    failures.push(format!("lemma sequence: unexpected {:?}", rep.outcome));
                }
            }
            Err(e) => failures.push(format!("lemma sequence: {e}")),
        },
        Err(e) => failures.push(format!("lemma sequence: {e}")),
    }

    // a sequence with b_0 = 1 is out of the lemma's scope
    trials += 1;
    let b = BiSeq::purely_periodic(Word::ones(1)).expect("period");
    match firstelements_classify(&b) {
        Ok(rep) => {
            if !matches!(rep.outcome, Classification::OutOfScope { .. }) {
                failures.push("overline(1) should be out of scope".into());
            }
        }
        Err(e) => failures.push(format!("overline(1): {e}")),
    }

    SuiteReport::finish(
        "first-elements",
        serde_json::json!({}),
        trials,
        failures,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::theorem1_lambda0;
    use num_traits::ToPrimitive;

    fn word(letters: &[u32]) -> Word {
        Word::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn repeat_bound_values() {
        assert_eq!(repeat_bound(0), 34);
        assert_eq!(repeat_bound(1), 1028);
        assert_eq!(repeat_bound(2), 6 * (4u128.pow(6) + 1));
    }

    #[test]
    fn find_repeat_all_ones() {
        let w = Word::ones(34);
        let wit = find_repeat(&w, 0, ScanMode::Aligned).unwrap();
        assert_eq!(wit, RepeatWitness { n1: 1, n2: 3, block_len: 2 });
        assert!(wit.verify(&w));
        let wit = find_repeat(&w, 0, ScanMode::Sliding).unwrap();
        assert!(wit.verify(&w));
    }

    #[test]
    fn find_repeat_needs_length() {
        let w = Word::ones(33);
        assert!(find_repeat(&w, 0, ScanMode::Aligned).is_err());
        // best effort still finds one on the short word
        assert!(find_repeat_best_effort(&w, 0).is_some());
    }

    #[test]
    fn surgery_named_cases() {
        // A=(), B=(1,1), C=[0;2,(1,2)]
        let rep = surgery_check(
            &Word::empty(),
            &word(&[1, 1]),
            &PeriodicCF::new(0, word(&[2]), word(&[1, 2])),
        )
        .unwrap();
        assert!(rep.betweenness && rep.surgery_improves && !rep.degenerate);
        // A=(2), B=(1,2), C=[0;1,(2)]
        let rep = surgery_check(
            &word(&[2]),
            &word(&[1, 2]),
            &PeriodicCF::new(0, word(&[1]), word(&[2])),
        )
        .unwrap();
        assert!(rep.betweenness && rep.surgery_improves);
        // odd block rejected
        assert!(surgery_check(
            &Word::empty(),
            &word(&[1]),
            &PeriodicCF::new(0, word(&[1]), word(&[2]))
        )
        .is_err());
    }

    #[test]
    fn surgery_degenerate_when_tail_is_block_power() {
        // C = B^∞ makes all three values coincide
        let rep = surgery_check(
            &Word::empty(),
            &word(&[1, 2]),
            &PeriodicCF::new(0, Word::empty(), word(&[1, 2])),
        )
        .unwrap();
        assert!(rep.degenerate);
    }

    #[test]
    fn comp_bounds_named_case() {
        // common=(1), tails (1,…) vs (2,…): δ_1 = 5^-6 < |α−β| < ε_1 = 1
        let rep = comp_bounds_check(
            &BigInt::from(0),
            &word(&[1]),
            &word(&[1]),
            &word(&[2]),
        )
        .unwrap();
        assert!(rep.above_delta && rep.below_epsilon);
        assert_eq!(rep.n, 1);
        // letters above 4 rejected
        assert!(comp_bounds_check(&BigInt::from(0), &word(&[5]), &word(&[1]), &word(&[2])).is_err());
    }

    #[test]
    fn banned_patterns() {
        assert!(contains_banned(&word(&[2, 1, 2, 1])));
        assert!(!contains_banned(&word(&[1, 1, 2, 2])));
        assert!(contains_banned(&word(&[1, 2]))); // cyclic wrap
        assert!(contains_banned(&word(&[3])));
        assert!(!contains_banned(&word(&[2, 1, 2, 2])));
    }

    #[test]
    fn min_avoiding_small() {
        let rep = min_avoiding_check(4).unwrap();
        assert!(rep.all_at_least_w0);
        assert!(rep.minimizer_is_w0_prefix);
        assert_eq!(rep.minimizer, word(&[2, 1, 2, 2]));
        // the minimizing completion is exactly w_0
        let w0 = eval_periodic(&PeriodicCF::purely_periodic(0, word(&[2, 1, 2, 2])));
        assert_eq!(rep.min_value, w0);
        // L = 6 ends mid-period; the aligned completion keeps the value at w_0
        let rep = min_avoiding_check(6).unwrap();
        assert!(rep.all_at_least_w0);
        assert!(rep.minimizer_is_w0_prefix);
        assert_eq!(rep.min_value, w0);
    }

    #[test]
    fn suites_pass_at_small_scale() {
        assert!(run_comp_bounds_suite(2, 100, 7).ok());
        assert!(run_repeat_suite(0, 50, 7).ok());
        assert!(run_surgery_suite(100, 7).ok());
        assert!(run_parity_agreement_suite(200, 7).ok());
        assert!(run_lambda_window_suite(50, 7).ok());
        assert!(run_banned_contrapositive(4).ok());
        assert!(run_min_avoiding(5).ok());
    }

    #[test]
    fn admissible_finds_first_gap_witness() {
        let target = gbur_alpha_star(1).unwrap();
        let rep = admissible_search(&target, 4, 4).unwrap();
        assert_eq!(rep.verdict, AdmissibilityVerdict::WitnessFound);
        let w = rep.witness.unwrap();
        // the witness is the necklace (2,2,1,2), reported in a rotation with
        // λ_0 = M (two mirrored rotations qualify; the scan returns the first)
        let reference = word(&[2, 2, 1, 2]);
        assert!(
            (0..4).any(|k| w == reference.rotated_left(k)),
            "witness {w} is not a rotation of (2,2,1,2)"
        );
        let b = BiSeq::purely_periodic(w).unwrap();
        assert_eq!(lambda_at(&b, 0).compare(&target), Ordering::Equal);
    }

    #[test]
    fn admissible_finds_beta_witness() {
        let target = SurdSum::from_quadsurd(&crate::constructions::gbur_beta(2).unwrap());
        let rep = admissible_search(&target, 5, 4).unwrap();
        assert_eq!(rep.verdict, AdmissibilityVerdict::WitnessFound);
        let w = rep.witness.unwrap();
        let mut sorted = w.letters().to_vec();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn admissible_exhausts_small_second_gap() {
        // α_2* has no purely periodic witness at any period; check to 8
        let target = gbur_alpha_star(2).unwrap();
        let rep = admissible_search(&target, 8, 4).unwrap();
        assert_eq!(rep.verdict, AdmissibilityVerdict::Exhausted);
        assert!(rep.pruned_by_pattern);
    }

    #[test]
    fn admissible_lambda0_unpruned() {
        // the non-admissible point sits above 1+√5, so pruning must be off
        let target = theorem1_lambda0();
        let rep = admissible_search(&target, 6, 4).unwrap();
        assert!(!rep.pruned_by_pattern);
        assert_eq!(rep.verdict, AdmissibilityVerdict::Exhausted);
    }

    #[test]
    fn m_estimate_close_to_exact() {
        for p in [vec![2u32, 2, 1, 2], vec![1, 1, 2], vec![4, 3, 2, 1, 2], vec![1]] {
            let w = word(&p);
            let (m, _) = m_exact_periodic(&w);
            let est = m_estimate(&p);
            let exact = SurdSum::from_quadsurd(&m)
                .refine(60)
                .midpoint()
                .to_f64()
                .unwrap();
            assert!((est - exact).abs() < 1e-9, "period {w}");
        }
    }

    #[test]
    fn lyndon_enumeration_counts() {
        // primitive necklaces over 2 letters: 2,1,2,3,6,9,18,30 for len 1..=8
        let mut counts = [0usize; 9];
        for_each_lyndon(2, 8, |w| counts[w.len()] += 1);
        assert_eq!(&counts[1..], &[2, 1, 2, 3, 6, 9, 18, 30]);
        // over 4 letters, length ≤ 4: 4 + 6 + 20 + 60
        let mut counts = [0usize; 5];
        for_each_lyndon(4, 4, |w| counts[w.len()] += 1);
        assert_eq!(&counts[1..], &[4, 6, 20, 60]);
    }

    #[test]
    fn classify_pure_first_gap_period() {
        let b = BiSeq::purely_periodic(word(&[2, 1, 2, 2])).unwrap();
        let rep = firstelements_classify(&b).unwrap();
        match rep.outcome {
            Classification::Classified { n, shape_matches, range_matches } => {
                assert_eq!(n, 0);
                assert!(shape_matches && range_matches);
            }
            other => panic!("unexpected: {other:?}"),
        }
        assert!(rep.consistent);
    }

    #[test]
    fn classify_out_of_scope() {
        let b = BiSeq::purely_periodic(word(&[1])).unwrap();
        let rep = firstelements_classify(&b).unwrap();
        assert!(matches!(rep.outcome, Classification::OutOfScope { .. }));
    }
}
