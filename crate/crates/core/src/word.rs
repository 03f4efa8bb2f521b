//! Braid words over the Artin generators of `B_n`.
//!
//! A word is a sequence of signed generator indices over an explicit strand
//! count. The text form is a space separated list of nonzero integers: `k`
//! stands for `σ_k` and `-k` for `σ_k⁻¹`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// One generator `σ_index^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: usize,
    sign: Sign,
}

impl Letter {
    /// Panics if `index` is zero.
    pub fn new(index: usize, sign: Sign) -> Letter {
        assert!(index >= 1, "generator index must be at least 1");
        Letter { index, sign }
    }

    pub fn positive(index: usize) -> Letter {
        Letter::new(index, Sign::Positive)
    }

    pub fn negative(index: usize) -> Letter {
        Letter::new(index, Sign::Negative)
    }

    /// Builds a letter from its signed integer form (`-2` is `σ₂⁻¹`).
    pub fn from_signed(value: i64) -> Option<Letter> {
        match value {
            0 => None,
            v if v > 0 => Some(Letter::positive(usize::try_from(v).ok()?)),
            v => Some(Letter::negative(usize::try_from(v.unsigned_abs()).ok()?)),
        }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    pub fn to_signed(self) -> i64 {
        self.index as i64 * i64::from(self.sign.as_i32())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// A word in the generators of `B_n` for a fixed `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if strand_count < 1 {
            return Err(Error::StrandCount(strand_count));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strand_count) {
            return Err(Error::GeneratorOutOfRange {
                index: bad.index(),
                strands: strand_count,
            });
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    pub fn identity(strand_count: usize) -> Result<BraidWord> {
        BraidWord::new(strand_count, Vec::new())
    }

    /// Parses whitespace separated nonzero integers. Blank text is the empty word.
    pub fn parse(text: &str, strand_count: usize) -> Result<BraidWord> {
        if strand_count < 1 {
            return Err(Error::StrandCount(strand_count));
        }
        let letters = text
            .split_whitespace()
            .map(|token| parse_token(token, strand_count))
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reverses the letters and flips every sign.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strand_count != other.strand_count {
            return Err(Error::StrandMismatch {
                left: self.strand_count,
                right: other.strand_count,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strand_count: self.strand_count,
            letters,
        })
    }

    /// The permutation of punctures induced by the word, sign blind.
    pub fn permutation(&self) -> Permutation {
        let mut position: Vec<usize> = (1..=self.strand_count).collect();
        for letter in &self.letters {
            let i = letter.index();
            for p in position.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        Permutation(position)
    }
}

fn parse_token(token: &str, strand_count: usize) -> Result<Letter> {
    let malformed = |reason: String| Error::MalformedWord {
        token: token.to_string(),
        reason,
    };
    let value: i64 = token
        .parse()
        .map_err(|_| malformed("not a decimal integer".into()))?;
    let letter = Letter::from_signed(value).ok_or_else(|| malformed("zero is not a generator".into()))?;
    if letter.index() > strand_count - 1 {
        return Err(malformed(format!(
            "|{value}| exceeds n-1 = {}",
            strand_count - 1
        )));
    }
    Ok(letter)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// A permutation of `{1..n}`; `images()[k-1]` is the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    /// Returns `None` unless `images` is a permutation of `1..=images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Image of `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &p)| p == k + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{}", k + 1, p)?;
        }
        f.write_str(")")
    }
}
