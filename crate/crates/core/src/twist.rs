//! Action of one half-twist `σ_i^{±1}` on a link list.
//!
//! The twist is supported on a disk around the punctures `i` and `i+1`.
//! A maximal run of links on those two points is the part of a path inside
//! that disk: it is rotated by 180 degrees (points swap, positions flip) and
//! reattached to the rest of the path by a two-link prefix and postfix whose
//! shape depends on the twist direction and on which side the path enters
//! or leaves the disk.
//!
//! A run that starts right at the basepoint has no link telling which side it
//! enters from, so one of six homotopic detours through a below-pass is
//! inserted first. Detour links adjacent to a separator are removed again by
//! reduction.

use crate::error::{Error, Result};
use crate::gbase::{GBaseWord, Link, Position};
use crate::word::{Letter, Sign};

/// A maximal block `links[start..=end]` whose points are all `i` or `i+1`,
/// with the indices of its neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalRun {
    pub start: usize,
    pub end: usize,
    pub before: usize,
    pub after: usize,
}

impl LocalRun {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TwistStats {
    pub input_length: usize,
    pub links_visited: usize,
    pub links_inserted: usize,
    pub pre_reduce_length: usize,
}

/// The six detours for a run that follows a separator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UCase {
    /// `(i,0)`: enter from the left.
    EndAtLeft,
    /// `(i+1,0)`: enter from the right.
    EndAtRight,
    /// `(i,1) (i+1,_)`: over `i` heading right.
    OverLeftHeadingRight,
    /// `(i,1) (i-1,_)`: over `i` heading left, reached from below `i`.
    OverLeftHeadingLeft,
    /// `(i+1,1) (i+2,_)`: over `i+1` heading right, reached from below `i+1`.
    OverRightHeadingRight,
    /// `(i+1,1) (i,_)`: over `i+1` heading left.
    OverRightHeadingLeft,
}

impl UCase {
    /// Links to insert after the separator; the last `joins_run()` of them
    /// become part of the run.
    pub fn insertion(self, i: i32) -> Vec<Link> {
        match self {
            UCase::EndAtLeft | UCase::OverLeftHeadingRight => vec![Link::below(i - 1)],
            UCase::EndAtRight | UCase::OverRightHeadingLeft => vec![Link::below(i + 2)],
            UCase::OverLeftHeadingLeft => vec![Link::below(i - 1), Link::below(i)],
            UCase::OverRightHeadingRight => vec![Link::below(i + 2), Link::below(i + 1)],
        }
    }

    pub fn joins_run(self) -> usize {
        match self {
            UCase::OverLeftHeadingLeft | UCase::OverRightHeadingRight => 1,
            _ => 0,
        }
    }
}

/// Picks the detour for a run whose first link is `first`, followed in the
/// list by `second`.
pub fn classify_u_case(first: Link, second: Link, i: i32) -> Result<UCase> {
    let case = match (first.point - i, first.position) {
        (0, Position::At) => UCase::EndAtLeft,
        (1, Position::At) => UCase::EndAtRight,
        (0, Position::Above) if second.point == i + 1 => UCase::OverLeftHeadingRight,
        (0, Position::Above) if second.point == i - 1 => UCase::OverLeftHeadingLeft,
        (1, Position::Above) if second.point == i + 2 => UCase::OverRightHeadingRight,
        (1, Position::Above) if second.point == i => UCase::OverRightHeadingLeft,
        _ => {
            return Err(Error::Internal(format!(
                "no basepoint case for run starting {first} {second} under sigma_{i}"
            )))
        }
    };
    Ok(case)
}

fn check_index(g: &GBaseWord, i: usize) -> Result<()> {
    if i == 0 || i >= g.strand_count() {
        return Err(Error::GeneratorOutOfRange {
            index: i,
            strands: g.strand_count(),
        });
    }
    Ok(())
}

fn in_window(link: Link, i: i32) -> bool {
    link.point == i || link.point == i + 1
}

/// Maximal runs on points `i, i+1`, left to right.
pub fn find_local_runs(g: &GBaseWord, i: usize) -> Result<Vec<LocalRun>> {
    check_index(g, i)?;
    Ok(runs_in(g.links(), i as i32))
}

fn runs_in(links: &[Link], i: i32) -> Vec<LocalRun> {
    let mut runs = Vec::new();
    let mut k = 0;
    while k < links.len() {
        if !in_window(links[k], i) {
            k += 1;
            continue;
        }
        let start = k;
        while k + 1 < links.len() && in_window(links[k + 1], i) {
            k += 1;
        }
        runs.push(LocalRun {
            start,
            end: k,
            before: start - 1,
            after: k + 1,
        });
        k += 1;
    }
    runs
}

/// Relabels one link under the 180 degree rotation.
pub fn twist_link(link: Link, i: i32) -> Link {
    Link::new(2 * i + 1 - link.point, link.position.flip())
}

/// Rotates every link of the run in place.
pub fn twist_local(links: &mut [Link], run: &LocalRun, i: i32) {
    for link in &mut links[run.start..=run.end] {
        *link = twist_link(*link, i);
    }
}

/// The connector inserted between the link before a run and the twisted run.
pub fn prefix(before: Link, i: i32, sign: Sign) -> [Link; 2] {
    let from_left = before.point == i - 1;
    match (sign, from_left) {
        (Sign::Positive, true) => [Link::below(i), Link::below(i + 1)],
        (Sign::Positive, false) => [Link::above(i + 1), Link::above(i)],
        (Sign::Negative, true) => [Link::above(i), Link::above(i + 1)],
        (Sign::Negative, false) => [Link::below(i + 1), Link::below(i)],
    }
}

/// The connector inserted between the twisted run and the link after it.
pub fn postfix(after: Link, i: i32, sign: Sign) -> [Link; 2] {
    let to_left = after.point == i - 1;
    match (sign, to_left) {
        (Sign::Positive, true) => [Link::below(i + 1), Link::below(i)],
        (Sign::Positive, false) => [Link::above(i), Link::above(i + 1)],
        (Sign::Negative, true) => [Link::above(i + 1), Link::above(i)],
        (Sign::Negative, false) => [Link::below(i), Link::below(i + 1)],
    }
}

/// Inserts the basepoint detour for `run` in place. `run.before` must be a
/// separator; afterwards it points at the first inserted link.
pub fn preprocess_u_cases(links: &mut Vec<Link>, run: &mut LocalRun, i: i32) -> Result<UCase> {
    if !links[run.before].is_separator() {
        return Err(Error::Internal("basepoint case on a run not after a separator".into()));
    }
    let case = classify_u_case(links[run.start], links[run.start + 1], i)?;
    let inserted = case.insertion(i);
    let count = inserted.len();
    links.splice(run.start..run.start, inserted);
    run.before += 1;
    run.start += count - case.joins_run();
    run.end += count;
    run.after += count;
    Ok(case)
}

/// Inserts prefix and postfix around an already twisted run in place.
pub fn splice_prefix_postfix(links: &mut Vec<Link>, run: &mut LocalRun, i: i32, sign: Sign) {
    let pre = prefix(links[run.before], i, sign);
    let post = postfix(links[run.after], i, sign);
    links.splice(run.after..run.after, post);
    links.splice(run.start..run.start, pre);
    run.start += 2;
    run.end += 2;
    run.after += 4;
}

/// Applies `letter` to a reduced list; the result is not reduced.
///
/// Runs are taken from the input list, so links inserted for one run are
/// never picked up as a new run by the same application.
pub fn apply_letter(g: &GBaseWord, letter: Letter) -> Result<(GBaseWord, TwistStats)> {
    check_index(g, letter.index())?;
    let (links, stats) = apply_to_links(g.links(), letter)?;
    Ok((GBaseWord::from_links_unchecked(g.strand_count(), links), stats))
}

pub(crate) fn apply_to_links(input: &[Link], letter: Letter) -> Result<(Vec<Link>, TwistStats)> {
    let i = letter.index() as i32;
    let sign = letter.sign();
    let mut out = Vec::with_capacity(input.len() + input.len() / 2 + 8);
    let mut stats = TwistStats {
        input_length: input.len(),
        ..TwistStats::default()
    };

    let mut k = 0;
    while k < input.len() {
        let link = input[k];
        stats.links_visited += 1;
        if !in_window(link, i) {
            out.push(link);
            k += 1;
            continue;
        }
        let start = k;
        while in_window(input[k + 1], i) {
            k += 1;
            stats.links_visited += 1;
        }
        let end = k;
        let after = input[end + 1];
        let inserted_before = out.len();

        let mut before = *out.last().ok_or_else(|| Error::Internal("run at list start".into()))?;
        if before.is_separator() {
            let case = classify_u_case(input[start], input[start + 1], i)?;
            let detour = case.insertion(i);
            let (outside, joined) = detour.split_at(detour.len() - case.joins_run());
            out.extend_from_slice(outside);
            before = *out.last().expect("detour is nonempty");
            out.extend(prefix(before, i, sign));
            out.extend(joined.iter().map(|&l| twist_link(l, i)));
        } else {
            out.extend(prefix(before, i, sign));
        }
        out.extend(input[start..=end].iter().map(|&l| twist_link(l, i)));
        out.extend(postfix(after, i, sign));
        stats.links_inserted += out.len() - inserted_before - (end + 1 - start);
        k = end + 1;
    }
    stats.pre_reduce_length = out.len();
    Ok((out, stats))
}
