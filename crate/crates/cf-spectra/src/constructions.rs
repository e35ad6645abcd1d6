//! The named gap-endpoint objects, built exactly: the endpoints `α_n*` and
//! `β_n` of the maximal gaps accumulating at `1+√5`, the block words `C_n(k)`
//! whose concatenation `ζ_n` realizes `α_n*` as a Lagrange constant, the
//! extremal triple `(w_0, x_0, y_0)`, and the non-admissible spectrum point
//! `λ_0 = [3;3,3,2,1,(1,2)] + [0;2,1,(1,2)]`.

use crate::cf::{eval_periodic, PeriodicCF, Word};
use crate::exact::{QuadSurd, SurdSum};
use crate::spectra::BiSeq;
use crate::{Error, Result};
use std::cmp::Ordering;

fn require_positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::Precondition("n must be ≥ 1".into()))
    } else {
        Ok(())
    }
}

/// `α_n* = 2 + [0; 1^(2n−2), (2,2,1,2)] + [0; 1^(2n−1), 2, 1^(2n−2), (2,2,1,2)]`.
///
/// Both summands live in ℚ(√30), so the sum collapses to a single surd;
/// `α_1* = 4√30/7 ≈ 3.1298432`.
pub fn gbur_alpha_star(n: u32) -> Result<SurdSum> {
    require_positive(n)?;
    let n = n as usize;
    let per = Word::new(vec![2, 2, 1, 2])?;
    let first = PeriodicCF::new(0, Word::ones(2 * n - 2), per.clone());
    let mut second_pre = Word::ones(2 * n - 1).letters().to_vec();
    second_pre.push(2);
    second_pre.extend(Word::ones(2 * n - 2).letters());
    let second = PeriodicCF::new(0, Word::new(second_pre)?, per);
    let sum = SurdSum::make(&eval_periodic(&first), &eval_periodic(&second));
    Ok(sum.add(&SurdSum::from_int(2)))
}

/// `β_n = 2 + 2·[0; (1^(2n), 2)]`, a single-field surd; `β_1 = √10`.
pub fn gbur_beta(n: u32) -> Result<QuadSurd> {
    require_positive(n)?;
    let mut per = Word::ones(2 * n as usize).letters().to_vec();
    per.push(2);
    let tail = eval_periodic(&PeriodicCF::purely_periodic(0, Word::new(per)?));
    tail.scale_int(&2.into()).add(&QuadSurd::from_int(2))
}

/// One exact gap `(α_n*, β_n)`.
#[derive(Debug, Clone)]
pub struct GapEndpointPair {
    pub n: u32,
    pub alpha_star: SurdSum,
    pub beta: QuadSurd,
}

impl GapEndpointPair {
    pub fn new(n: u32) -> Result<Self> {
        let alpha_star = gbur_alpha_star(n)?;
        let beta = gbur_beta(n)?;
        let beta_sum = SurdSum::from_quadsurd(&beta);
        if alpha_star.compare(&beta_sum) != Ordering::Less {
            return Err(Error::Precondition(format!(
                "gap ({n}) collapsed: alpha* must stay below beta"
            )));
        }
        Ok(GapEndpointPair {
            n,
            alpha_star,
            beta,
        })
    }

    pub fn gap_width(&self) -> SurdSum {
        SurdSum::from_quadsurd(&self.beta).sub(&self.alpha_star)
    }
}

/// The block word `C_n(k)` together with the in-block (0-based) positions of
/// the two marked letters:
/// `(2,1,2,2)^k · 1^(2n−2) · 2 · 1^(2n−1) · 2 · 1^(2n−2) · (2,2,1,2)^k`.
pub fn cnk_word(n: u32, k: u32) -> Result<(Word, usize, usize)> {
    require_positive(n)?;
    require_positive(k)?;
    let (n, k) = (n as usize, k as usize);
    let mut letters = Vec::with_capacity(8 * k + 6 * n - 3);
    for _ in 0..k {
        letters.extend_from_slice(&[2, 1, 2, 2]);
    }
    letters.extend(std::iter::repeat_n(1, 2 * n - 2));
    let star1 = letters.len();
    letters.push(2);
    letters.extend(std::iter::repeat_n(1, 2 * n - 1));
    let star2 = letters.len();
    letters.push(2);
    letters.extend(std::iter::repeat_n(1, 2 * n - 2));
    for _ in 0..k {
        letters.extend_from_slice(&[2, 2, 1, 2]);
    }
    Ok((Word::new(letters)?, star1, star2))
}

/// A finite prefix `C_n(1) C_n(2) … C_n(K)` with the global 0-based indices
/// of the second marked letter of every block.
#[derive(Debug, Clone)]
pub struct ZetaPrefix {
    pub word: Word,
    /// global index of the doubly-marked 2 in block k (entry k−1)
    pub starred: Vec<usize>,
}

pub fn zeta_prefix(n: u32, blocks: u32) -> Result<ZetaPrefix> {
    require_positive(n)?;
    require_positive(blocks)?;
    let mut letters: Vec<u32> = Vec::new();
    let mut starred = Vec::with_capacity(blocks as usize);
    for k in 1..=blocks {
        let (block, _, star2) = cnk_word(n, k)?;
        starred.push(letters.len() + star2);
        letters.extend_from_slice(block.letters());
    }
    Ok(ZetaPrefix {
        word: Word::new(letters)?,
        starred,
    })
}

/// The extremal triple: `w_0 = [0;(2,1,2,2)]`, `x_0 = [0;1^(2n),(2,2,1,2)]`,
/// `y_0 = [0;1^(2n+1),2,1^(2n),(2,2,1,2)]`; `2 + x_0 + y_0 = α_(n+1)*` exactly.
pub fn w0_x0_y0(n: u32) -> Result<(QuadSurd, QuadSurd, QuadSurd)> {
    require_positive(n)?;
    let n = n as usize;
    let w0 = eval_periodic(&PeriodicCF::purely_periodic(
        0,
        Word::new(vec![2, 1, 2, 2])?,
    ));
    let per = Word::new(vec![2, 2, 1, 2])?;
    let x0 = eval_periodic(&PeriodicCF::new(0, Word::ones(2 * n), per.clone()));
    let mut y_pre = Word::ones(2 * n + 1).letters().to_vec();
    y_pre.push(2);
    y_pre.extend(Word::ones(2 * n).letters());
    let y0 = eval_periodic(&PeriodicCF::new(0, Word::new(y_pre)?, per));
    Ok((w0, x0, y0))
}

/// The bi-infinite sequence whose `λ_0 = M` value is exactly `α_(n+1)*`:
/// `(overline(2,1,2,2), 1^(2n) 2 1^(2n+1) 2 1^(2n), overline(2,2,1,2))`.
pub fn lemma_sequence(n: u32) -> Result<BiSeq> {
    require_positive(n)?;
    let n = n as usize;
    let mut center = Word::ones(2 * n).letters().to_vec();
    center.push(2);
    center.extend(Word::ones(2 * n + 1).letters());
    center.push(2);
    center.extend(Word::ones(2 * n).letters());
    BiSeq::new(
        Word::new(vec![2, 1, 2, 2])?,
        Word::new(center)?,
        Word::new(vec![2, 2, 1, 2])?,
    )
}

/// Certified λ-intervals along a `ζ_n` prefix: for every interior position
/// the window uses the largest slack available up to `max_slack`. Rows are
/// `(index, interval)`; positions without at least one letter of margin on
/// both sides are skipped.
pub fn zeta_lambda_intervals(
    n: u32,
    blocks: u32,
    max_slack: usize,
) -> Result<Vec<(usize, crate::exact::Interval)>> {
    let z = zeta_prefix(n, blocks)?;
    let len = z.word.len();
    let mut rows = Vec::new();
    for i in 1..len.saturating_sub(1) {
        let slack = i.min(len - 1 - i).min(max_slack);
        if slack == 0 {
            continue;
        }
        rows.push((i, crate::spectra::lambda_window(&z.word, i, slack)?));
    }
    Ok(rows)
}

/// `λ_0 = [3;3,3,2,1,(1,2)] + [0;2,1,(1,2)]`: a Lagrange spectrum point that
/// is a left gap endpoint realized by no purely periodic sequence. Both tails
/// live in ℚ(√3), so the value collapses to `(62976 − 1498√3)/16357 ≈ 3.6914708`.
pub fn theorem1_lambda0() -> SurdSum {
    let per = Word::new(vec![1, 2]).expect("letters ≥ 1");
    let first = PeriodicCF::new(
        3,
        Word::new(vec![3, 3, 2, 1]).expect("letters ≥ 1"),
        per.clone(),
    );
    let second = PeriodicCF::new(0, Word::new(vec![2, 1]).expect("letters ≥ 1"), per);
    SurdSum::make(&eval_periodic(&first), &eval_periodic(&second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{m_value, Witness};
    use num_traits::ToPrimitive;

    fn qs(a: i64, b: i64, c: i64, d: i64) -> QuadSurd {
        QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    fn approx(s: &SurdSum) -> f64 {
        s.refine(80).midpoint().to_f64().unwrap()
    }

    #[test]
    fn alpha_star_1_closed_form() {
        let a1 = gbur_alpha_star(1).unwrap();
        // 2 + (2√30−8)/7 + (2√30−6)/7 = 4√30/7
        let expected = SurdSum::from_quadsurd(&qs(0, 4, 7, 30));
        assert_eq!(a1.compare(&expected), Ordering::Equal);
        assert!((approx(&a1) - 3.129_843_185_7).abs() < 1e-9);
    }

    #[test]
    fn alpha_star_equals_m_of_2212() {
        let a1 = gbur_alpha_star(1).unwrap();
        let b = BiSeq::purely_periodic(Word::new(vec![2, 2, 1, 2]).unwrap()).unwrap();
        let m = m_value(&b).unwrap();
        assert_eq!(a1.compare(&m.value), Ordering::Equal);
    }

    #[test]
    fn alpha_star_2_closed_form() {
        // oracle: 2 + (9−√30)/6 + (1140−2√30)/1785 = (14775 − 599√30)/3570
        let a2 = gbur_alpha_star(2).unwrap();
        let expected = SurdSum::from_quadsurd(&qs(14775, -599, 3570, 30));
        assert_eq!(a2.compare(&expected), Ordering::Equal);
        assert!((approx(&a2) - 3.219_647_585_6).abs() < 1e-9);
    }

    #[test]
    fn beta_closed_forms() {
        assert_eq!(gbur_beta(1).unwrap(), qs(0, 1, 1, 10)); // √10
        assert_eq!(gbur_beta(2).unwrap(), qs(0, 2, 5, 65)); // 2√65/5 ≈ 3.2249031
        let b2 = SurdSum::from_quadsurd(&gbur_beta(2).unwrap());
        assert!((approx(&b2) - 3.224_903_099_3).abs() < 1e-9);
    }

    #[test]
    fn gaps_are_ordered_chains() {
        // α_n* < β_n, α_n* increasing, and everything below 1+√5
        let one_plus_r5 = SurdSum::from_quadsurd(&qs(1, 1, 1, 5));
        let mut prev: Option<SurdSum> = None;
        for n in 1..=6 {
            let pair = GapEndpointPair::new(n).unwrap();
            let beta = SurdSum::from_quadsurd(&pair.beta);
            assert_eq!(pair.alpha_star.compare(&beta), Ordering::Less);
            assert_eq!(pair.alpha_star.compare(&one_plus_r5), Ordering::Less);
            if let Some(p) = prev {
                assert_eq!(p.compare(&pair.alpha_star), Ordering::Less);
            }
            prev = Some(pair.alpha_star.clone());
        }
    }

    #[test]
    fn cnk_shapes() {
        // n=2, k=1: length 4+2+1+3+1+2+4 = 17
        let (w, s1, s2) = cnk_word(2, 1).unwrap();
        assert_eq!(w.len(), 17);
        assert_eq!(
            w.letters(),
            &[2, 1, 2, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 2, 1, 2]
        );
        assert_eq!((s1, s2), (6, 10));
        assert_eq!(w.letters()[s1], 2);
        assert_eq!(w.letters()[s2], 2);
        // n=1, k=1: the 1-runs of length 2n−2 = 0 vanish, leaving adjacent 2s
        let (w, s1, s2) = cnk_word(1, 1).unwrap();
        assert_eq!(w.letters(), &[2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2]);
        assert_eq!((s1, s2), (4, 6));
        // n=2, k=2 starts with two copies of the opening block
        let (w, _, _) = cnk_word(2, 2).unwrap();
        assert!(w.letters().starts_with(&[2, 1, 2, 2, 2, 1, 2, 2, 1, 1]));
        assert_eq!(w.len(), 8 * 2 + 9);
    }

    #[test]
    fn zeta_prefix_lengths_and_stars() {
        // |C_2(k)| = 8k+9, so K=3 gives 17+25+33 = 75
        let z = zeta_prefix(2, 3).unwrap();
        assert_eq!(z.word.len(), 75);
        assert_eq!(z.starred.len(), 3);
        // stars recomputed by independent counting: 4k + 4n − 2 into block k
        let mut offset = 0;
        for k in 1..=3u32 {
            let expect = offset + 4 * k as usize + 4 * 2 - 2;
            assert_eq!(z.starred[(k - 1) as usize], expect);
            assert_eq!(z.word.letters()[expect], 2);
            offset += 8 * k as usize + 9;
        }
        let z1 = zeta_prefix(2, 1).unwrap();
        assert_eq!(z1.word.len(), 17);
    }

    #[test]
    fn triple_identity_and_w0() {
        let (w0, x0, _y0) = w0_x0_y0(1).unwrap();
        assert_eq!(w0, qs(-4, 1, 4, 30));
        // x_0 > w_0: first letters 1 vs 2 at even (empty) common prefix
        assert_eq!(x0.cmp_exact(&w0).unwrap(), Ordering::Greater);
        for n in 1..=4 {
            let (_, x0, y0) = w0_x0_y0(n).unwrap();
            let sum = SurdSum::make(&x0, &y0).add(&SurdSum::from_int(2));
            let target = gbur_alpha_star(n + 1).unwrap();
            assert_eq!(sum.compare(&target), Ordering::Equal, "n = {n}");
        }
    }

    #[test]
    fn lemma_sequence_realizes_alpha_star() {
        // M of (overline(2,1,2,2), 1,1,2,1,1,1,2,1,1, overline(2,2,1,2)) = α_2*
        let b = lemma_sequence(1).unwrap();
        let m = m_value(&b).unwrap();
        let a2 = gbur_alpha_star(2).unwrap();
        assert_eq!(m.value.compare(&a2), Ordering::Equal);
        assert!(m.attained);
        match m.witness {
            Witness::Index(i) => assert_eq!(b.letter(i), 2),
            Witness::Limit => panic!("attained"),
        }
    }

    #[test]
    fn lambda0_value() {
        let l0 = theorem1_lambda0();
        // collapses to a single surd over √3
        let q = l0.degenerate_to_quadsurd().expect("same field");
        assert_eq!(q, qs(62976, -1498, 16357, 3));
        assert!((approx(&l0) - 3.691_470_800).abs() < 1e-8);
        // it exceeds 1+√5
        let one_plus_r5 = SurdSum::from_quadsurd(&qs(1, 1, 1, 5));
        assert_eq!(l0.compare(&one_plus_r5), Ordering::Greater);
    }

    #[test]
    fn zero_n_rejected() {
        assert!(gbur_alpha_star(0).is_err());
        assert!(gbur_beta(0).is_err());
        assert!(cnk_word(0, 1).is_err());
        assert!(cnk_word(1, 0).is_err());
    }
}
