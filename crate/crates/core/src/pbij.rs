//! Partial bijections on `{1..n}` and their bracket notation.
//!
//! A [`PartialBijection`] is an injective partial self-map of the ground set
//! `{1, ..., n}`. Composition follows the permutation-group convention:
//! `f.compose(&g)` applies `g` first and then `f`.
//!
//! # Bracket notation
//!
//! Every partial bijection decomposes into chains and cycles. A chain
//! `d1 -> d2 -> ... -> dk` whose first point has no preimage and whose last
//! point has no image is written `[d1d2...dk]`; a point that is neither in the
//! domain nor in the range is the one-digit chain `[d]`. Points not mentioned
//! are fixed. Cycles of length two or more (only present in non
//! order-preserving maps) are written `(c1c2...cm)`. The empty map prints as
//! `0` and the identity as `i`.
//!
//! ```
//! use divcat_core::pbij::PartialBijection;
//!
//! let f: PartialBijection = PartialBijection::parse("[12][3]", 3).unwrap();
//! let g = PartialBijection::parse("[21][3]", 3).unwrap();
//! assert_eq!(f.compose(&g).unwrap().to_bracket().unwrap(), "[1][3]");
//! ```

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest ground set that the single-digit bracket text can describe.
pub const MAX_BRACKET_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbijError {
    #[error("ground-set sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("ground set must contain at least one point")]
    EmptyGroundSet,
    #[error("point {point} lies outside 1..={n}")]
    OutOfRange { point: usize, n: usize },
    #[error("point {0} is given two images")]
    NotFunctional(usize),
    #[error("point {0} is the image of two points")]
    NotInjective(usize),
    #[error("bracket text only covers ground sets up to {MAX_BRACKET_N}, got {0}")]
    TooLargeForText(usize),
}

/// What went wrong while reading bracket text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    UnclosedGroup,
    EmptyGroup,
    ShortCycle,
    RepeatedDigit(usize),
    DigitOutOfRange(usize),
    Ground(PbijError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty input"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnclosedGroup => write!(f, "unclosed group"),
            ParseErrorKind::EmptyGroup => write!(f, "empty group"),
            ParseErrorKind::ShortCycle => write!(f, "a cycle needs at least two digits"),
            ParseErrorKind::RepeatedDigit(d) => write!(f, "digit {d} appears twice"),
            ParseErrorKind::DigitOutOfRange(d) => write!(f, "digit {d} is out of range"),
            ParseErrorKind::Ground(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {text:?} at byte {position}: {kind}")]
pub struct ParseError {
    pub text: String,
    pub position: usize,
    pub kind: ParseErrorKind,
}

/// An injective partial map of `{1..n}` into itself.
///
/// Stored as an image table: `images[p - 1]` is the image of `p`, or `0`
/// when `p` is outside the domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    images: Vec<u32>,
}

/// One piece of the chain/cycle decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group {
    /// `[d1 ... dk]`: `d1 -> d2 -> ... -> dk`, `dk` has no image.
    Chain(Vec<usize>),
    /// `(c1 ... cm)`: `c1 -> c2 -> ... -> cm -> c1`, `m >= 2`.
    Cycle(Vec<usize>),
}

impl PartialBijection {
    /// The empty map on `{1..n}`.
    pub fn zero(n: usize) -> Result<Self, PbijError> {
        check_n(n)?;
        Ok(Self { images: vec![0; n] })
    }

    /// The identity on `{1..n}`.
    pub fn identity(n: usize) -> Result<Self, PbijError> {
        check_n(n)?;
        Ok(Self { images: (1..=n as u32).collect() })
    }

    /// The partial identity `1_A`.
    pub fn partial_identity<I>(n: usize, points: I) -> Result<Self, PbijError>
    where
        I: IntoIterator<Item = usize>,
    {
        Self::from_pairs(n, points.into_iter().map(|p| (p, p)))
    }

    /// Builds a map from `(a, b)` pairs read "a maps to b".
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, PbijError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_n(n)?;
        let mut images = vec![0u32; n];
        let mut hit = vec![false; n];
        for (a, b) in pairs {
            for p in [a, b] {
                if p == 0 || p > n {
                    return Err(PbijError::OutOfRange { point: p, n });
                }
            }
            if images[a - 1] != 0 {
                return Err(PbijError::NotFunctional(a));
            }
            if hit[b - 1] {
                return Err(PbijError::NotInjective(b));
            }
            images[a - 1] = b as u32;
            hit[b - 1] = true;
        }
        Ok(Self { images })
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `p`, if `p` is in the domain.
    pub fn apply(&self, p: usize) -> Option<usize> {
        match self.images.get(p.checked_sub(1)?) {
            Some(&b) if b != 0 => Some(b as usize),
            _ => None,
        }
    }

    /// The graph as `(a, f(a))` pairs, ascending in `a`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(a, &b)| (a + 1, b as usize))
    }

    pub fn domain(&self) -> Vec<usize> {
        self.pairs().map(|(a, _)| a).collect()
    }

    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.pairs().map(|(_, b)| b).collect();
        r.sort_unstable();
        r
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&b| b != 0).count()
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self, PbijError> {
        if self.n() != other.n() {
            return Err(PbijError::SizeMismatch { left: self.n(), right: other.n() });
        }
        let images = other
            .images
            .iter()
            .map(|&mid| if mid == 0 { 0 } else { self.images[mid as usize - 1] })
            .collect();
        Ok(Self { images })
    }

    pub fn invert(&self) -> Self {
        let mut images = vec![0u32; self.n()];
        for (a, b) in self.pairs() {
            images[b - 1] = a as u32;
        }
        Self { images }
    }

    /// True iff the map is a partial identity `1_A`.
    pub fn is_idempotent(&self) -> bool {
        self.pairs().all(|(a, b)| a == b)
    }

    /// True iff `a < b` in the domain implies `f(a) < f(b)`.
    pub fn is_order_preserving(&self) -> bool {
        self.pairs().map(|(_, b)| b).collect::<Vec<_>>().windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_identity(&self) -> bool {
        self.rank() == self.n() && self.is_idempotent()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Chain and cycle decomposition in canonical order: chains of two or
    /// more points by first point, then cycles by least point, then
    /// one-point chains ascending. Fixed points are omitted.
    pub fn groups(&self) -> Vec<Group> {
        let n = self.n();
        let mut has_preimage = vec![false; n];
        for (_, b) in self.pairs() {
            has_preimage[b - 1] = true;
        }
        let mut seen = vec![false; n];
        let mut long = Vec::new();
        let mut singles = Vec::new();
        for start in 1..=n {
            if has_preimage[start - 1] {
                continue;
            }
            let mut chain = vec![start];
            seen[start - 1] = true;
            let mut cur = start;
            while let Some(next) = self.apply(cur) {
                chain.push(next);
                seen[next - 1] = true;
                cur = next;
            }
            if chain.len() == 1 {
                singles.push(Group::Chain(chain));
            } else {
                long.push(Group::Chain(chain));
            }
        }
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start).expect("unvisited points lie on cycles");
            while cur != start {
                cycle.push(cur);
                seen[cur - 1] = true;
                cur = self.apply(cur).expect("unvisited points lie on cycles");
            }
            if cycle.len() > 1 {
                cycles.push(Group::Cycle(cycle));
            }
        }
        long.extend(cycles);
        long.extend(singles);
        long
    }

    /// Canonical bracket text. Fails for ground sets above nine points.
    pub fn to_bracket(&self) -> Result<String, PbijError> {
        if self.n() > MAX_BRACKET_N {
            return Err(PbijError::TooLargeForText(self.n()));
        }
        Ok(self.render_key())
    }

    /// Bracket text with points above nine rendered as the characters after
    /// `'9'`. Agrees with [`to_bracket`](Self::to_bracket) whenever that
    /// succeeds; used as a total sort key.
    pub fn render_key(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        if self.is_identity() {
            return "i".to_owned();
        }
        let digit = |p: usize| char::from_u32('0' as u32 + p as u32).unwrap_or('?');
        let mut out = String::new();
        for g in self.groups() {
            let (open, close, pts) = match &g {
                Group::Chain(p) => ('[', ']', p),
                Group::Cycle(p) => ('(', ')', p),
            };
            out.push(open);
            out.extend(pts.iter().map(|&p| digit(p)));
            out.push(close);
        }
        out
    }

    /// Reads bracket text over `{1..n}`. Group order is free.
    pub fn parse(text: &str, n: usize) -> Result<Self, ParseError> {
        let err = |position: usize, kind: ParseErrorKind| ParseError {
            text: text.to_owned(),
            position,
            kind,
        };
        if n == 0 || n > MAX_BRACKET_N {
            let e = if n == 0 { PbijError::EmptyGroundSet } else { PbijError::TooLargeForText(n) };
            return Err(err(0, ParseErrorKind::Ground(e)));
        }
        match text {
            "" => return Err(err(0, ParseErrorKind::Empty)),
            "0" => return Ok(Self::zero(n).expect("n checked")),
            "i" => return Ok(Self::identity(n).expect("n checked")),
            _ => {}
        }

        let mut used = vec![false; n];
        // images[p-1]: Some(Some(q)) maps to q, Some(None) explicitly undefined.
        let mut images: Vec<Option<Option<usize>>> = vec![None; n];
        let bytes = text.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let close = match bytes[pos] {
                b'[' => b']',
                b'(' => b')',
                _ => {
                    let c = text[pos..].chars().next().unwrap_or('?');
                    return Err(err(pos, ParseErrorKind::UnexpectedChar(c)));
                }
            };
            let open_at = pos;
            pos += 1;
            let mut digits = Vec::new();
            loop {
                let Some(&b) = bytes.get(pos) else {
                    return Err(err(open_at, ParseErrorKind::UnclosedGroup));
                };
                if b == close {
                    break;
                }
                if !b.is_ascii_digit() {
                    let c = text[pos..].chars().next().unwrap_or('?');
                    return Err(err(pos, ParseErrorKind::UnexpectedChar(c)));
                }
                let d = (b - b'0') as usize;
                if d == 0 || d > n {
                    return Err(err(pos, ParseErrorKind::DigitOutOfRange(d)));
                }
                if used[d - 1] {
                    return Err(err(pos, ParseErrorKind::RepeatedDigit(d)));
                }
                used[d - 1] = true;
                digits.push(d);
                pos += 1;
            }
            if digits.is_empty() {
                return Err(err(open_at, ParseErrorKind::EmptyGroup));
            }
            if close == b')' {
                if digits.len() < 2 {
                    return Err(err(open_at, ParseErrorKind::ShortCycle));
                }
                for (k, &d) in digits.iter().enumerate() {
                    images[d - 1] = Some(Some(digits[(k + 1) % digits.len()]));
                }
            } else {
                for w in digits.windows(2) {
                    images[w[0] - 1] = Some(Some(w[1]));
                }
                images[digits[digits.len() - 1] - 1] = Some(None);
            }
            pos += 1;
        }

        let pairs = images.iter().enumerate().filter_map(|(k, img)| match img {
            None => Some((k + 1, k + 1)),
            Some(Some(b)) => Some((k + 1, *b)),
            Some(None) => None,
        });
        Self::from_pairs(n, pairs).map_err(|e| err(0, ParseErrorKind::Ground(e)))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_key())
    }
}

impl Serialize for PartialBijection {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render_key())
    }
}

fn check_n(n: usize) -> Result<(), PbijError> {
    if n == 0 {
        Err(PbijError::EmptyGroundSet)
    } else {
        Ok(())
    }
}

/// Every injective partial self-map of `{1..n}`, in no particular order.
pub fn all_partial_bijections(n: usize) -> Result<Vec<PartialBijection>, PbijError> {
    check_n(n)?;
    let mut out = Vec::new();
    let mut images = vec![0u32; n];
    let mut used = vec![false; n];
    fill(0, &mut images, &mut used, &mut out);
    Ok(out)
}

fn fill(p: usize, images: &mut [u32], used: &mut [bool], out: &mut Vec<PartialBijection>) {
    if p == images.len() {
        out.push(PartialBijection { images: images.to_vec() });
        return;
    }
    images[p] = 0;
    fill(p + 1, images, used, out);
    for b in 0..images.len() {
        if !used[b] {
            used[b] = true;
            images[p] = b as u32 + 1;
            fill(p + 1, images, used, out);
            used[b] = false;
        }
    }
    images[p] = 0;
}

/// Every order-preserving partial bijection of `{1..n}`: one per pair of
/// equal-size domain and range subsets.
pub fn order_preserving_partial_bijections(n: usize) -> Result<Vec<PartialBijection>, PbijError> {
    check_n(n)?;
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        (0u64..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (1..=n).filter(|p| m >> (p - 1) & 1 == 1).collect())
            .collect()
    };
    let mut out = Vec::new();
    for k in 0..=n {
        let sets = subsets(k);
        for dom in &sets {
            for ran in &sets {
                out.push(
                    PartialBijection::from_pairs(n, dom.iter().copied().zip(ran.iter().copied()))
                        .expect("sorted subsets of equal size"),
                );
            }
        }
    }
    Ok(out)
}
