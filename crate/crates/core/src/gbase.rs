//! Link-list encoding of geometric bases of the punctured disk.
//!
//! The punctures `1..=n` sit on the horizontal axis, ordered left to right,
//! and the basepoint lies on the boundary below them. Each path of the base
//! is a sequence of links `(point, position)`: position `+1` passes just above
//! the puncture, `-1` just below it, and `0` ends there. All paths are stored
//! concatenated, each one opened by the separator `(-1,0)`, and the list is
//! closed by one more separator.
//!
//! Points `0` and `n+1` are virtual punctures beyond the ends of the axis.
//! They are only produced transiently by the twist engine, always as a
//! below-pass right after a separator, where reduction removes them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Position {
    Below,
    At,
    Above,
}

impl Position {
    pub fn from_i32(value: i32) -> Option<Position> {
        match value {
            -1 => Some(Position::Below),
            0 => Some(Position::At),
            1 => Some(Position::Above),
            _ => None,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Position::Below => -1,
            Position::At => 0,
            Position::Above => 1,
        }
    }

    pub fn flip(self) -> Position {
        match self {
            Position::Below => Position::Above,
            Position::At => Position::At,
            Position::Above => Position::Below,
        }
    }

    pub fn is_pass(self) -> bool {
        self != Position::At
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Link {
    pub point: i32,
    pub position: Position,
}

impl Link {
    pub const SEPARATOR: Link = Link {
        point: -1,
        position: Position::At,
    };

    pub const fn new(point: i32, position: Position) -> Link {
        Link { point, position }
    }

    pub const fn above(point: i32) -> Link {
        Link::new(point, Position::Above)
    }

    pub const fn below(point: i32) -> Link {
        Link::new(point, Position::Below)
    }

    pub const fn end(point: i32) -> Link {
        Link::new(point, Position::At)
    }

    pub fn is_separator(self) -> bool {
        self.point == -1
    }

    /// The terminal link `(j,0)` of a path.
    pub fn is_endpoint(self) -> bool {
        self.position == Position::At && self.point >= 0
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.point, self.position.as_i32())
    }
}

impl FromStr for Link {
    type Err = Error;

    fn from_str(token: &str) -> Result<Link> {
        let malformed = |reason: &str| Error::MalformedGBase {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let inner = token
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| malformed("expected `(point,position)`"))?;
        let (point, position) = inner
            .split_once(',')
            .ok_or_else(|| malformed("expected `(point,position)`"))?;
        let point: i32 = point.parse().map_err(|_| malformed("point is not an integer"))?;
        let position: i32 = position
            .parse()
            .map_err(|_| malformed("position is not an integer"))?;
        let position = Position::from_i32(position).ok_or_else(|| malformed("position out of range"))?;
        if point < -1 {
            return Err(malformed("point out of range"));
        }
        Ok(Link::new(point, position))
    }
}

/// A structural defect found by [`validate`], with the index of the link
/// where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    MissingLeadingSeparator,
    MissingTrailingSeparator,
    SeparatorPosition,
    PointOutOfRange,
    VirtualPoint,
    EmptyPath,
    PathWithoutEndpoint,
    SecondEndpoint,
    PathCount { found: usize, expected: usize },
    EndpointsNotPermutation,
    TrailingAfterEndpoint,
    BelowAfterSeparator,
    PassBeforeEndpoint,
    AdjacentEqual,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ViolationKind::*;
        let what = match &self.kind {
            MissingLeadingSeparator => "list must start with (-1,0)".to_string(),
            MissingTrailingSeparator => "list must end with (-1,0)".to_string(),
            SeparatorPosition => "point -1 requires position 0".to_string(),
            PointOutOfRange => "point out of range".to_string(),
            VirtualPoint => "virtual point 0 or n+1 not allowed here".to_string(),
            EmptyPath => "empty path between separators".to_string(),
            PathWithoutEndpoint => "path has no endpoint link".to_string(),
            SecondEndpoint => "path has more than one endpoint link".to_string(),
            PathCount { found, expected } => format!("{found} paths, expected {expected}"),
            EndpointsNotPermutation => "path endpoints are not a permutation of 1..n".to_string(),
            TrailingAfterEndpoint => "links after a path endpoint".to_string(),
            BelowAfterSeparator => "below-pass immediately after a separator".to_string(),
            PassBeforeEndpoint => "pass immediately before an endpoint at the same point".to_string(),
            AdjacentEqual => "two adjacent equal links".to_string(),
        };
        write!(f, "{what} (link {})", self.index)
    }
}

/// Checks the list conventions. Without `reduced_expected` a path may carry
/// pass links after its endpoint and virtual below-passes, as twist output does.
pub fn validate(links: &[Link], strand_count: usize, reduced_expected: bool) -> Result<(), Violation> {
    let fail = |index: usize, kind: ViolationKind| Err(Violation { index, kind });
    let n = strand_count as i32;

    for (index, link) in links.iter().enumerate() {
        if link.point == -1 && link.position != Position::At {
            return fail(index, ViolationKind::SeparatorPosition);
        }
        if link.point < -1 || link.point > n + 1 {
            return fail(index, ViolationKind::PointOutOfRange);
        }
        if (link.point == 0 || link.point == n + 1)
            && (reduced_expected || link.position != Position::Below)
        {
            return fail(index, ViolationKind::VirtualPoint);
        }
    }

    match links.first() {
        Some(l) if l.is_separator() => {}
        _ => return fail(0, ViolationKind::MissingLeadingSeparator),
    }

    let mut seen = vec![false; strand_count];
    let mut paths = 0usize;
    let mut start = 1;
    while start < links.len() {
        let Some(offset) = links[start..].iter().position(|l| l.is_separator()) else {
            return fail(links.len() - 1, ViolationKind::MissingTrailingSeparator);
        };
        let close = start + offset;
        let path = &links[start..close];
        if path.is_empty() {
            return fail(start, ViolationKind::EmptyPath);
        }
        let Some(end) = path.iter().position(|l| l.position == Position::At) else {
            return fail(close, ViolationKind::PathWithoutEndpoint);
        };
        if let Some(extra) = path[end + 1..].iter().position(|l| l.position == Position::At) {
            return fail(start + end + 1 + extra, ViolationKind::SecondEndpoint);
        }
        let endpoint = path[end].point as usize;
        if endpoint == 0 || endpoint > strand_count || std::mem::replace(&mut seen[endpoint - 1], true) {
            return fail(start + end, ViolationKind::EndpointsNotPermutation);
        }
        if reduced_expected {
            if end + 1 < path.len() {
                return fail(start + end + 1, ViolationKind::TrailingAfterEndpoint);
            }
            if path[0].position == Position::Below {
                return fail(start, ViolationKind::BelowAfterSeparator);
            }
            if end > 0 && path[end - 1].point == path[end].point {
                return fail(start + end - 1, ViolationKind::PassBeforeEndpoint);
            }
            if let Some(k) = path.windows(2).position(|w| w[0] == w[1]) {
                return fail(start + k, ViolationKind::AdjacentEqual);
            }
        }
        paths += 1;
        start = close + 1;
    }

    if paths != strand_count {
        return fail(
            links.len() - 1,
            ViolationKind::PathCount {
                found: paths,
                expected: strand_count,
            },
        );
    }
    Ok(())
}

/// An ordered g-base encoded as one concatenated link list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GBaseWord {
    strand_count: usize,
    links: Vec<Link>,
}

impl GBaseWord {
    /// The base of straight segments from the basepoint to each puncture.
    pub fn standard(strand_count: usize) -> Result<GBaseWord> {
        if strand_count < 1 {
            return Err(Error::StrandCount(strand_count));
        }
        let mut links = Vec::with_capacity(2 * strand_count + 1);
        links.push(Link::SEPARATOR);
        for j in 1..=strand_count as i32 {
            links.push(Link::end(j));
            links.push(Link::SEPARATOR);
        }
        Ok(GBaseWord {
            strand_count,
            links,
        })
    }

    /// Builds a list after checking the structural conventions; reduced
    /// form is not required.
    pub fn from_links(strand_count: usize, links: Vec<Link>) -> Result<GBaseWord> {
        if strand_count < 1 {
            return Err(Error::StrandCount(strand_count));
        }
        validate(&links, strand_count, false).map_err(Error::InvalidGBase)?;
        Ok(GBaseWord {
            strand_count,
            links,
        })
    }

    pub(crate) fn from_links_unchecked(strand_count: usize, links: Vec<Link>) -> GBaseWord {
        GBaseWord {
            strand_count,
            links,
        }
    }

    /// Parses space separated `(p,q)` tokens.
    pub fn parse(text: &str, strand_count: usize) -> Result<GBaseWord> {
        let links = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Link>>>()?;
        GBaseWord::from_links(strand_count, links)
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn into_links(self) -> Vec<Link> {
        self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn validate(&self, reduced_expected: bool) -> Result<(), Violation> {
        validate(&self.links, self.strand_count, reduced_expected)
    }

    /// The link runs between consecutive separators, in order.
    pub fn paths(&self) -> impl Iterator<Item = &[Link]> {
        let body = match self.links.len() {
            0 | 1 => &self.links[..0],
            len => &self.links[1..len - 1],
        };
        body.split(|l| l.is_separator())
    }

    /// Maps path ordinal `k` to the puncture where path `k` ends.
    pub fn endpoints_permutation(&self) -> Result<Permutation> {
        self.validate(false).map_err(Error::InvalidGBase)?;
        let images = self
            .paths()
            .map(|path| {
                path.iter()
                    .find(|l| l.position == Position::At)
                    .map(|l| l.point as usize)
                    .expect("validated path has an endpoint")
            })
            .collect();
        Permutation::from_images(images)
            .ok_or_else(|| Error::Internal("validated endpoints are not a permutation".into()))
    }
}

impl fmt::Display for GBaseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, link) in self.links.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{link}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FOUR_STRAND_EXAMPLE: &str =
        "(-1,0) (1,1) (2,0) (-1,0) (1,0) (-1,0) (4,0) (-1,0) (4,1) (3,0) (-1,0)";

    fn links(text: &str) -> Vec<Link> {
        text.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    fn kind(text: &str, n: usize, reduced: bool) -> Option<ViolationKind> {
        validate(&links(text), n, reduced).err().map(|v| v.kind)
    }

    #[test]
    fn standard_examples() {
        assert_eq!(
            GBaseWord::standard(2).unwrap().to_string(),
            "(-1,0) (1,0) (-1,0) (2,0) (-1,0)"
        );
        assert_eq!(GBaseWord::standard(1).unwrap().to_string(), "(-1,0) (1,0) (-1,0)");
        let four = GBaseWord::standard(4).unwrap();
        assert_eq!(four.links().iter().filter(|l| l.is_separator()).count(), 5);
        assert_eq!(four.endpoints_permutation().unwrap().images(), &[1, 2, 3, 4]);
        assert_eq!(GBaseWord::standard(0), Err(Error::StrandCount(0)));
    }

    #[test]
    fn standard_is_reduced_and_valid() {
        for n in 1..40 {
            let g = GBaseWord::standard(n).unwrap();
            assert_eq!(g.validate(true), Ok(()));
            assert!(g.endpoints_permutation().unwrap().is_identity());
        }
    }

    #[test]
    fn four_strand_example_round_trip() {
        let g = GBaseWord::parse(FOUR_STRAND_EXAMPLE, 4).unwrap();
        assert_eq!(g.validate(true), Ok(()));
        assert_eq!(g.to_string(), FOUR_STRAND_EXAMPLE);
        assert_eq!(g.endpoints_permutation().unwrap().images(), &[2, 1, 4, 3]);
    }

    #[test]
    fn rejects_below_after_separator_when_reduced() {
        let text = "(-1,0) (1,-1) (1,0) (-1,0)";
        assert_eq!(
            validate(&links(text), 1, true),
            Err(Violation {
                index: 1,
                kind: ViolationKind::BelowAfterSeparator
            })
        );
        assert_eq!(kind(text, 1, false), None);
    }

    #[test]
    fn rejects_repeated_endpoints() {
        assert_eq!(
            kind("(-1,0) (1,0) (-1,0) (1,0) (-1,0)", 2, false),
            Some(ViolationKind::EndpointsNotPermutation)
        );
    }

    #[test]
    fn structural_defects() {
        use ViolationKind::*;
        assert_eq!(kind("(1,0) (-1,0)", 1, false), Some(MissingLeadingSeparator));
        assert_eq!(kind("", 1, false), Some(MissingLeadingSeparator));
        assert_eq!(kind("(-1,0) (1,0)", 1, false), Some(MissingTrailingSeparator));
        assert_eq!(kind("(-1,0) (-1,0)", 1, false), Some(EmptyPath));
        assert_eq!(kind("(-1,0) (1,1) (-1,0)", 1, false), Some(PathWithoutEndpoint));
        assert_eq!(kind("(-1,0) (1,0) (2,0) (-1,0)", 2, false), Some(SecondEndpoint));
        assert_eq!(kind("(-1,0) (1,0) (-1,0)", 2, false), Some(PathCount { found: 1, expected: 2 }));
        assert_eq!(kind("(-1,1) (1,0) (-1,0)", 1, false), Some(SeparatorPosition));
        assert_eq!(kind("(-1,0) (5,1) (1,0) (-1,0)", 1, false), Some(PointOutOfRange));
        assert_eq!(kind("(-1,0) (0,1) (1,0) (-1,0)", 1, false), Some(VirtualPoint));
        assert_eq!(kind("(-1,0) (0,-1) (1,0) (-1,0)", 1, false), None);
        assert_eq!(kind("(-1,0) (0,-1) (1,0) (-1,0)", 1, true), Some(VirtualPoint));
    }

    #[test]
    fn reduced_form_defects() {
        use ViolationKind::*;
        assert_eq!(kind("(-1,0) (2,0) (1,1) (-1,0) (1,0) (-1,0)", 2, true), Some(TrailingAfterEndpoint));
        assert_eq!(kind("(-1,0) (2,0) (1,1) (-1,0) (1,0) (-1,0)", 2, false), None);
        assert_eq!(kind("(-1,0) (2,1) (2,0) (-1,0) (1,0) (-1,0)", 2, true), Some(PassBeforeEndpoint));
        assert_eq!(
            kind("(-1,0) (2,1) (2,1) (1,0) (-1,0) (2,0) (-1,0)", 2, true),
            Some(AdjacentEqual)
        );
    }

    #[test]
    fn link_token_errors() {
        assert!(matches!("(0,2)".parse::<Link>(), Err(Error::MalformedGBase { .. })));
        assert!("(1 ,0)".parse::<Link>().is_err());
        assert!("1,0".parse::<Link>().is_err());
        assert!("(a,0)".parse::<Link>().is_err());
        assert!("(-2,0)".parse::<Link>().is_err());
        assert_eq!("(3,-1)".parse::<Link>().unwrap(), Link::below(3));
    }

    #[test]
    fn parse_rejects_invalid_structure() {
        assert!(matches!(
            GBaseWord::parse("(-1,0) (1,0) (-1,0)", 2),
            Err(Error::InvalidGBase(_))
        ));
    }

    #[test]
    fn paths_split_between_separators() {
        let g = GBaseWord::parse(FOUR_STRAND_EXAMPLE, 4).unwrap();
        let paths: Vec<_> = g.paths().collect();
        assert_eq!(paths.len(), 4);
        assert_eq!(paths[0], &[Link::above(1), Link::end(2)]);
        assert_eq!(paths[3], &[Link::above(4), Link::end(3)]);
    }
}
