//! Artin action of `B_n` on the free group `F_n`.
//!
//! The action is faithful, so two braid words are equal exactly when their
//! automorphisms agree on every generator. This gives an equality test that
//! shares no code with the g-base solver.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter, Sign};

pub const DEFAULT_SYLLABLE_LIMIT: usize = 1_000_000;

/// A freely reduced word in `x_1..x_n`. Syllable `k` is `x_k`, `-k` is `x_k⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(k: usize) -> FreeWord {
        FreeWord(vec![k as i32])
    }

    pub fn syllables(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if s > 0 {
                write!(f, "x{s}")?;
            } else {
                write!(f, "x{}^-1", -s)?;
            }
        }
        Ok(())
    }
}

fn push_reduced(out: &mut Vec<i32>, s: i32) {
    if out.last() == Some(&-s) {
        out.pop();
    } else {
        out.push(s);
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(syllables: &[i32], strand_count: usize) -> Result<FreeWord> {
    let mut out = Vec::with_capacity(syllables.len());
    for &s in syllables {
        let index = s.unsigned_abs() as usize;
        if index == 0 || index > strand_count {
            return Err(Error::FreeGeneratorOutOfRange {
                index,
                strands: strand_count,
            });
        }
        push_reduced(&mut out, s);
    }
    Ok(FreeWord(out))
}

/// Image of `x_k` under one generator.
pub fn letter_image(letter: Letter, k: usize, strand_count: usize) -> Result<FreeWord> {
    if k == 0 || k > strand_count {
        return Err(Error::FreeGeneratorOutOfRange {
            index: k,
            strands: strand_count,
        });
    }
    let i = letter.index();
    if i == 0 || i >= strand_count {
        return Err(Error::GeneratorOutOfRange {
            index: i,
            strands: strand_count,
        });
    }
    let (xi, xj) = (i as i32, i as i32 + 1);
    let image = match (letter.sign(), k) {
        (Sign::Positive, k) if k == i => vec![xi, xj, -xi],
        (Sign::Positive, k) if k == i + 1 => vec![xi],
        (Sign::Negative, k) if k == i => vec![xj],
        (Sign::Negative, k) if k == i + 1 => vec![-xj, xi, xj],
        (_, k) => vec![k as i32],
    };
    Ok(FreeWord(image))
}

/// Evaluates the Artin action with a bound on intermediate image length.
#[derive(Debug, Clone, Copy)]
pub struct ArtinOracle {
    pub syllable_limit: usize,
}

impl Default for ArtinOracle {
    fn default() -> Self {
        ArtinOracle {
            syllable_limit: DEFAULT_SYLLABLE_LIMIT,
        }
    }
}

impl ArtinOracle {
    pub fn new(syllable_limit: usize) -> ArtinOracle {
        ArtinOracle { syllable_limit }
    }

    /// Image of `x_k` under `w`, substituting letter by letter from the left.
    pub fn word_image(&self, w: &BraidWord, k: usize) -> Result<FreeWord> {
        let n = w.strand_count();
        if k == 0 || k > n {
            return Err(Error::FreeGeneratorOutOfRange { index: k, strands: n });
        }
        let mut current = vec![k as i32];
        for &letter in w.letters() {
            let images: Vec<FreeWord> = (1..=n)
                .map(|j| letter_image(letter, j, n))
                .collect::<Result<_>>()?;
            let mut next = Vec::with_capacity(current.len() * 2);
            for &s in &current {
                let image = &images[s.unsigned_abs() as usize - 1].0;
                if s > 0 {
                    image.iter().for_each(|&t| push_reduced(&mut next, t));
                } else {
                    image.iter().rev().for_each(|&t| push_reduced(&mut next, -t));
                }
                if next.len() > self.syllable_limit {
                    return Err(Error::ResourceExceeded {
                        reached: next.len(),
                        limit: self.syllable_limit,
                    });
                }
            }
            current = next;
        }
        Ok(FreeWord(current))
    }

    /// Images of every generator.
    pub fn automorphism(&self, w: &BraidWord) -> Result<Vec<FreeWord>> {
        (1..=w.strand_count()).map(|k| self.word_image(w, k)).collect()
    }

    pub fn equal(&self, w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
        if w1.strand_count() != w2.strand_count() {
            return Err(Error::StrandMismatch {
                left: w1.strand_count(),
                right: w2.strand_count(),
            });
        }
        for k in 1..=w1.strand_count() {
            if self.word_image(w1, k)? != self.word_image(w2, k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn word_image(w: &BraidWord, k: usize) -> Result<FreeWord> {
    ArtinOracle::default().word_image(w, k)
}

pub fn oracle_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    ArtinOracle::default().equal(w1, w2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    fn fw(s: &[i32]) -> FreeWord {
        FreeWord(s.to_vec())
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(free_reduce(&[1, 2, -2, 1], 2).unwrap(), fw(&[1, 1]));
        assert_eq!(free_reduce(&[1, -1], 2).unwrap(), fw(&[]));
        assert_eq!(free_reduce(&[1, 2, -1], 2).unwrap(), fw(&[1, 2, -1]));
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3], 3).unwrap(), fw(&[3]));
        assert!(free_reduce(&[3], 2).is_err());
        assert!(free_reduce(&[0], 2).is_err());
    }

    #[test]
    fn letter_image_examples() {
        let s1 = Letter::positive(1);
        assert_eq!(letter_image(s1, 1, 2).unwrap(), fw(&[1, 2, -1]));
        assert_eq!(letter_image(s1, 2, 2).unwrap(), fw(&[1]));
        assert_eq!(letter_image(s1, 3, 3).unwrap(), fw(&[3]));
        assert_eq!(letter_image(s1.inverse(), 1, 2).unwrap(), fw(&[2]));
        assert_eq!(letter_image(s1.inverse(), 2, 2).unwrap(), fw(&[-2, 1, 2]));
        assert!(letter_image(s1, 0, 2).is_err());
        assert!(letter_image(Letter::positive(2), 1, 2).is_err());
    }

    #[test]
    fn word_image_examples() {
        assert_eq!(word_image(&word("", 3), 2).unwrap(), fw(&[2]));
        assert_eq!(word_image(&word("1 -1", 2), 1).unwrap(), fw(&[1]));
        assert_eq!(word_image(&word("-1 1", 2), 2).unwrap(), fw(&[2]));
        assert_eq!(word_image(&word("1 1", 2), 1).unwrap(), fw(&[1, 2, 1, -2, -1]));
    }

    #[test]
    fn letter_then_inverse_is_identity() {
        for n in 2..7 {
            for i in 1..n {
                for l in [Letter::positive(i), Letter::negative(i)] {
                    let w = BraidWord::new(n, vec![l, l.inverse()]).unwrap();
                    for k in 1..=n {
                        assert_eq!(word_image(&w, k).unwrap(), FreeWord::generator(k));
                    }
                }
            }
        }
    }

    #[test]
    fn relations_hold() {
        for n in 2usize..=8 {
            for i in 1..n {
                for j in 1..n {
                    let (a, b) = (i.to_string(), j.to_string());
                    if i.abs_diff(j) >= 2 {
                        assert!(oracle_equal(&word(&format!("{a} {b}"), n), &word(&format!("{b} {a}"), n)).unwrap());
                    }
                    if j == i + 1 {
                        assert!(oracle_equal(
                            &word(&format!("{a} {b} {a}"), n),
                            &word(&format!("{b} {a} {b}"), n)
                        )
                        .unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn distinguishes_nontrivial_words() {
        assert!(!oracle_equal(&word("1", 2), &word("", 2)).unwrap());
        assert!(!oracle_equal(&word("1", 2), &word("-1", 2)).unwrap());
        assert!(!oracle_equal(&word("1 2 -1 -2", 3), &word("", 3)).unwrap());
        assert!(oracle_equal(&word("1 3", 4), &word("3 1", 4)).unwrap());
        assert!(oracle_equal(&word("1 2 1", 3), &word("2 1 2", 3)).unwrap());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(matches!(
            oracle_equal(&word("1", 2), &word("1", 3)),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn syllable_ceiling() {
        let long = BraidWord::new(3, [1, -2].iter().cycle().take(40).map(|&k| Letter::from_signed(k).unwrap()).collect()).unwrap();
        let tight = ArtinOracle::new(50);
        assert!(matches!(tight.word_image(&long, 1), Err(Error::ResourceExceeded { limit: 50, .. })));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn free_reduce_idempotent_and_order_free(
                raw in proptest::collection::vec((1i32..5, any::<bool>()), 0..40),
                picks in proptest::collection::vec(any::<u32>(), 0..60),
            ) {
                let syllables: Vec<i32> = raw.iter().map(|&(g, inv)| if inv { -g } else { g }).collect();
                let once = free_reduce(&syllables, 4).unwrap();
                prop_assert_eq!(free_reduce(once.syllables(), 4).unwrap(), once.clone());
                // cancel pairs at arbitrary positions until none are left
                let mut work = syllables.clone();
                let mut picks = picks.into_iter();
                loop {
                    let spots: Vec<usize> = (0..work.len().saturating_sub(1))
                        .filter(|&k| work[k] == -work[k + 1])
                        .collect();
                    if spots.is_empty() {
                        break;
                    }
                    let k = spots[picks.next().unwrap_or(0) as usize % spots.len()];
                    work.drain(k..k + 2);
                }
                prop_assert_eq!(work, once.syllables().to_vec());
            }
        }
    }
}
