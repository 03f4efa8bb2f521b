//! Reduction of link lists to their normal form.
//!
//! Four deletion rules, each a homotopy of a single path:
//!
//! 1. two adjacent equal pass links cancel;
//! 2. a pass `(j,±1)` directly before the endpoint `(j,0)` is dropped;
//! 3. everything between an endpoint and the next separator is dropped;
//! 4. below-passes directly after a separator are dropped.
//!
//! The scan keeps the already reduced prefix as a stack, so after a deletion
//! the only link that needs another look is the new top. That is the
//! one-step retrace, and it keeps the work linear in the list length.

use crate::error::{Error, Result};
use crate::gbase::{validate, GBaseWord, Link, Position};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReduceStats {
    pub input_length: usize,
    /// Link examinations, counting each re-examination after a deletion.
    pub links_visited: usize,
    pub links_deleted: usize,
}

pub fn reduce(g: &GBaseWord) -> Result<GBaseWord> {
    reduce_with_stats(g).map(|(g, _)| g)
}

pub fn reduce_with_stats(g: &GBaseWord) -> Result<(GBaseWord, ReduceStats)> {
    validate(g.links(), g.strand_count(), false).map_err(Error::InvalidGBase)?;
    let (links, stats) = reduce_links(g.links())?;
    Ok((GBaseWord::from_links_unchecked(g.strand_count(), links), stats))
}

/// Reduces a structurally valid list. Callers guarantee validity.
pub(crate) fn reduce_links(input: &[Link]) -> Result<(Vec<Link>, ReduceStats)> {
    let mut stats = ReduceStats {
        input_length: input.len(),
        ..ReduceStats::default()
    };
    let mut out: Vec<Link> = Vec::with_capacity(input.len());

    for &link in input {
        stats.links_visited += 1;
        let Some(&top) = out.last() else {
            out.push(link);
            continue;
        };
        if link.is_separator() {
            if top.is_separator() {
                return Err(Error::Internal("adjacent separators".into()));
            }
            out.push(link);
            continue;
        }
        // rule 1
        if top == link {
            if link.position == Position::At {
                return Err(Error::Internal(format!("adjacent equal endpoints {link}")));
            }
            out.pop();
            stats.links_deleted += 2;
            stats.links_visited += 1;
            continue;
        }
        // rule 2
        if link.position == Position::At {
            while let Some(&prev) = out.last() {
                if prev.point == link.point && prev.position.is_pass() {
                    out.pop();
                    stats.links_deleted += 1;
                    stats.links_visited += 1;
                } else {
                    break;
                }
            }
            out.push(link);
            continue;
        }
        // rule 3
        if top.is_endpoint() {
            stats.links_deleted += 1;
            continue;
        }
        // rule 4
        if top.is_separator() && link.position == Position::Below {
            stats.links_deleted += 1;
            continue;
        }
        out.push(link);
    }
    Ok((out, stats))
}

/// Finds the first occurrence of `(i-1,e) (i,±1) (i,∓1) (i+1,e)` and returns
/// the index of its first link.
pub fn find_forbidden_sequence(links: &[Link]) -> Option<usize> {
    links.windows(4).position(|w| {
        let i = w[1].point;
        w[0].point == i - 1
            && w[3].point == i + 1
            && w[0].position == w[3].position
            && w[2].point == i
            && w[1].position.is_pass()
            && w[2].position == w[1].position.flip()
            && !w[0].is_separator()
    })
}
