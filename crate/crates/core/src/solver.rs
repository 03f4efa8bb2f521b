//! Word problem: act on the standard g-base letter by letter, reducing after
//! every letter, and compare the resulting normal forms.

use crate::error::{Error, Result};
use crate::gbase::GBaseWord;
use crate::reduce::{reduce_links, ReduceStats};
use crate::twist::{apply_to_links, TwistStats};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LetterStats {
    pub twist: TwistStats,
    pub reduce: ReduceStats,
    pub output_length: usize,
}

impl LetterStats {
    pub fn links_visited(&self) -> usize {
        self.twist.links_visited + self.reduce.links_visited
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Processed {
    pub gbase: GBaseWord,
    pub letters: Vec<LetterStats>,
}

impl Processed {
    pub fn links_visited(&self) -> usize {
        self.letters.iter().map(LetterStats::links_visited).sum()
    }

    /// Longest list seen, including unreduced twist output.
    pub fn max_list_length(&self) -> usize {
        self.letters
            .iter()
            .map(|s| s.twist.pre_reduce_length)
            .chain(std::iter::once(self.gbase.len()))
            .max()
            .unwrap_or(0)
    }
}

pub fn process_word(w: &BraidWord) -> Result<Processed> {
    let n = w.strand_count();
    let mut links = GBaseWord::standard(n)?.into_links();
    let mut stats = Vec::with_capacity(w.len());
    for &letter in w.letters() {
        let (twisted, twist) = apply_to_links(&links, letter)?;
        let (reduced, reduce) = reduce_links(&twisted)?;
        stats.push(LetterStats {
            twist,
            reduce,
            output_length: reduced.len(),
        });
        links = reduced;
    }
    Ok(Processed {
        gbase: GBaseWord::from_links_unchecked(n, links),
        letters: stats,
    })
}

/// The reduced g-base only.
pub fn normal_form(w: &BraidWord) -> Result<GBaseWord> {
    process_word(w).map(|p| p.gbase)
}

pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strand_count() != w2.strand_count() {
        return Err(Error::StrandMismatch {
            left: w1.strand_count(),
            right: w2.strand_count(),
        });
    }
    let (a, b) = rayon::join(|| normal_form(w1), || normal_form(w2));
    Ok(a? == b?)
}

pub fn is_identity(w: &BraidWord) -> Result<bool> {
    Ok(normal_form(w)? == GBaseWord::standard(w.strand_count())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    fn nf(text: &str, n: usize) -> String {
        normal_form(&word(text, n)).unwrap().to_string()
    }

    #[test]
    fn traces_on_two_strands() {
        assert_eq!(nf("", 3), GBaseWord::standard(3).unwrap().to_string());
        assert_eq!(nf("1", 2), "(-1,0) (2,0) (-1,0) (2,1) (1,0) (-1,0)");
        assert_eq!(nf("-1", 2), "(-1,0) (1,1) (2,0) (-1,0) (1,0) (-1,0)");
        assert_eq!(nf("1 -1", 2), "(-1,0) (1,0) (-1,0) (2,0) (-1,0)");
    }

    #[test]
    fn equality_examples() {
        let eq = |a: &str, b: &str, n| words_equal(&word(a, n), &word(b, n)).unwrap();
        assert!(eq("1 2 1", "2 1 2", 3));
        assert!(eq("1 3", "3 1", 4));
        assert!(!eq("1", "-1", 2));
        assert!(matches!(
            words_equal(&word("1", 2), &word("1", 3)),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn identity_examples() {
        assert!(is_identity(&word("", 4)).unwrap());
        assert!(!is_identity(&word("1 2 -1 -2", 3)).unwrap());
        assert!(is_identity(&word("1 1 -1 -1", 2)).unwrap());
        assert!(is_identity(&word("", 1)).unwrap());
    }

    #[test]
    fn stats_are_recorded_per_letter() {
        let p = process_word(&word("1 2 -1", 3)).unwrap();
        assert_eq!(p.letters.len(), 3);
        assert!(p.links_visited() > 0);
        assert!(p.max_list_length() >= p.gbase.len());
        assert_eq!(p.letters.last().unwrap().output_length, p.gbase.len());
    }

    #[test]
    fn deterministic() {
        let w = word("1 -2 3 2 -1 -3 2 2", 4);
        assert_eq!(process_word(&w).unwrap(), process_word(&w).unwrap());
    }
}
