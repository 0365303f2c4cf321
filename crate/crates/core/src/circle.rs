//! The marked-point model of the closed circle.
//!
//! A point of the closure is either one of the `n` limit points `a_i` or a
//! marked point in the open interval `(a_i, a_{i+1})`. Marked points of one
//! interval are indexed by an integer offset that increases anticlockwise and
//! is unbounded in both directions, so every limit point is two-sided.
//! Interval indices are 1-based and cyclic modulo `n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The admissible subset with `n >= 2` limit points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircleModel {
    n: usize,
}

impl CircleModel {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewLimitPoints(n));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Successor of interval `i` in anticlockwise order (`n + 1 = 1`).
    pub fn next_interval(&self, i: usize) -> usize {
        i % self.n + 1
    }

    /// Predecessor of interval `i` (`0 = n`).
    pub fn prev_interval(&self, i: usize) -> usize {
        (i + self.n - 2) % self.n + 1
    }

    /// The limit point `a_{i+1}` closing interval `i` from above.
    pub fn upper_limit(&self, i: usize) -> CirclePoint {
        CirclePoint::Limit(self.next_interval(i))
    }

    pub fn check_interval(&self, i: usize) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::IntervalOutOfRange {
                index: i,
                n: self.n,
            })
        }
    }

    pub fn check_point(&self, p: CirclePoint) -> Result<()> {
        self.check_interval(p.interval())
    }

    pub fn check_arc(&self, a: &Arc) -> Result<()> {
        self.check_interval(a.lo().interval)?;
        self.check_interval(a.hi().interval)
    }

    /// Position of `p` on the circle cut open at `a_1`.
    pub fn linear_key(&self, p: CirclePoint) -> Result<LinearKey> {
        self.check_point(p)?;
        Ok(p.key())
    }

    /// All marked points with offsets in `[lo, hi]`, in linear order.
    pub fn window_points(&self, lo: i64, hi: i64) -> Vec<MarkedPoint> {
        (1..=self.n)
            .flat_map(|i| (lo..=hi).map(move |k| MarkedPoint::new(i, k)))
            .collect()
    }

    /// All arcs whose endpoint offsets lie in `[lo, hi]`, in canonical order.
    pub fn window_arcs(&self, lo: i64, hi: i64) -> Vec<Arc> {
        let points = self.window_points(lo, hi);
        let mut arcs = Vec::new();
        for (idx, &p) in points.iter().enumerate() {
            for &q in &points[idx + 1..] {
                if let ArcOrZero::Arc(a) = make_arc(p, q) {
                    arcs.push(a);
                }
            }
        }
        arcs
    }
}

/// Total order on the circle cut at `a_1`:
/// `a_1 < (1, k) < a_2 < (2, k) < ... < a_n < (n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearKey {
    interval: usize,
    marked: bool,
    offset: i64,
}

/// A point of the admissible subset itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPoint {
    pub interval: usize,
    pub offset: i64,
}

impl MarkedPoint {
    pub const fn new(interval: usize, offset: i64) -> Self {
        Self { interval, offset }
    }

    /// `z^(m)`: move `m` steps anticlockwise (clockwise for negative `m`).
    pub fn shift(self, m: i64) -> Self {
        Self::new(self.interval, self.offset + m)
    }

    pub fn succ(self) -> Self {
        self.shift(1)
    }

    pub fn pred(self) -> Self {
        self.shift(-1)
    }

    pub fn key(self) -> LinearKey {
        LinearKey {
            interval: self.interval,
            marked: true,
            offset: self.offset,
        }
    }
}

/// A point of the closure: a limit point or a marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CirclePoint {
    Limit(usize),
    Marked(MarkedPoint),
}

impl CirclePoint {
    pub const fn marked(interval: usize, offset: i64) -> Self {
        CirclePoint::Marked(MarkedPoint::new(interval, offset))
    }

    pub fn interval(self) -> usize {
        match self {
            CirclePoint::Limit(i) => i,
            CirclePoint::Marked(p) => p.interval,
        }
    }

    pub fn key(self) -> LinearKey {
        match self {
            CirclePoint::Limit(i) => LinearKey {
                interval: i,
                marked: false,
                offset: 0,
            },
            CirclePoint::Marked(p) => p.key(),
        }
    }

    pub fn as_marked(self) -> Option<MarkedPoint> {
        match self {
            CirclePoint::Marked(p) => Some(p),
            CirclePoint::Limit(_) => None,
        }
    }

    pub fn is_marked(self) -> bool {
        matches!(self, CirclePoint::Marked(_))
    }

    pub fn shift(self, m: i64) -> Result<Self> {
        match self {
            CirclePoint::Limit(i) => Err(Error::ShiftLimit(i)),
            CirclePoint::Marked(p) => Ok(CirclePoint::Marked(p.shift(m))),
        }
    }
}

impl From<MarkedPoint> for CirclePoint {
    fn from(p: MarkedPoint) -> Self {
        CirclePoint::Marked(p)
    }
}

impl Ord for CirclePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for CirclePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// True iff `x`, `y`, `z` are pairwise distinct and met in this order when
/// walking anticlockwise.
pub fn cyclic_lt3(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> bool {
    let (kx, ky, kz) = (x.key(), y.key(), z.key());
    (kx < ky && ky < kz) || (ky < kz && kz < kx) || (kz < kx && kx < ky)
}

/// `z^(m)` for a point of the closure; limit points cannot be shifted.
pub fn shift(p: CirclePoint, m: i64) -> Result<CirclePoint> {
    p.shift(m)
}

/// An arc: two marked points that are not equal or neighbours.
///
/// Stored with the endpoint of smaller linear key first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Arc {
    lo: MarkedPoint,
    hi: MarkedPoint,
}

/// Result of pairing two marked points: an arc, or the zero object when the
/// pair is trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcOrZero {
    Arc(Arc),
    Zero,
}

impl ArcOrZero {
    pub fn arc(self) -> Option<Arc> {
        match self {
            ArcOrZero::Arc(a) => Some(a),
            ArcOrZero::Zero => None,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, ArcOrZero::Zero)
    }
}

fn is_trivial_pair(p: MarkedPoint, q: MarkedPoint) -> bool {
    p.interval == q.interval && (p.offset - q.offset).abs() <= 1
}

pub fn make_arc(p: MarkedPoint, q: MarkedPoint) -> ArcOrZero {
    if is_trivial_pair(p, q) {
        return ArcOrZero::Zero;
    }
    let (lo, hi) = if p < q { (p, q) } else { (q, p) };
    ArcOrZero::Arc(Arc { lo, hi })
}

impl Arc {
    pub fn new(p: MarkedPoint, q: MarkedPoint) -> Result<Self> {
        make_arc(p, q)
            .arc()
            .ok_or_else(|| Error::TrivialArc(p.to_string(), q.to_string()))
    }

    pub fn lo(&self) -> MarkedPoint {
        self.lo
    }

    pub fn hi(&self) -> MarkedPoint {
        self.hi
    }

    pub fn endpoints(&self) -> [MarkedPoint; 2] {
        [self.lo, self.hi]
    }

    pub fn has_endpoint(&self, p: MarkedPoint) -> bool {
        self.lo == p || self.hi == p
    }

    /// The endpoint that is not `p`; `p` must be an endpoint.
    pub fn other(&self, p: MarkedPoint) -> MarkedPoint {
        if self.lo == p {
            self.hi
        } else {
            self.lo
        }
    }

    /// `Σ^m`: both endpoints move `m` steps clockwise.
    pub fn suspend(&self, m: i64) -> Arc {
        Arc {
            lo: self.lo.shift(-m),
            hi: self.hi.shift(-m),
        }
    }

    /// Strict interleaving of endpoints in cyclic order.
    pub fn crosses(&self, other: &Arc) -> bool {
        let inside = |p: MarkedPoint| self.lo < p && p < self.hi;
        let shares = other.has_endpoint(self.lo) || other.has_endpoint(self.hi);
        !shares && inside(other.lo) != inside(other.hi)
    }

    pub fn intervals(&self) -> (usize, usize) {
        (self.lo.interval, self.hi.interval)
    }

    pub fn max_abs_offset(&self) -> i64 {
        self.lo.offset.abs().max(self.hi.offset.abs())
    }
}

impl Ord for Arc {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lo, self.hi).cmp(&(other.lo, other.hi))
    }
}

impl PartialOrd for Arc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn cross(a: &Arc, b: &Arc) -> bool {
    a.crosses(b)
}

/// One of `(a,b)`, `[a,b)`, `(a,b]`, `[a,b]` taken anticlockwise from
/// `lower` to `upper`. Equal endpoints give the empty set unless both are
/// closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfOpenRegion {
    pub lower: CirclePoint,
    pub upper: CirclePoint,
    pub lower_open: bool,
    pub upper_open: bool,
}

impl HalfOpenRegion {
    /// `(lower, upper]`
    pub fn open_closed(lower: CirclePoint, upper: CirclePoint) -> Self {
        Self {
            lower,
            upper,
            lower_open: true,
            upper_open: false,
        }
    }

    /// `[lower, upper)`
    pub fn closed_open(lower: CirclePoint, upper: CirclePoint) -> Self {
        Self {
            lower,
            upper,
            lower_open: false,
            upper_open: true,
        }
    }

    pub fn open(lower: CirclePoint, upper: CirclePoint) -> Self {
        Self {
            lower,
            upper,
            lower_open: true,
            upper_open: true,
        }
    }

    pub fn closed(lower: CirclePoint, upper: CirclePoint) -> Self {
        Self {
            lower,
            upper,
            lower_open: false,
            upper_open: false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lower == self.upper && (self.lower_open || self.upper_open)
    }

    pub fn contains(&self, p: CirclePoint) -> bool {
        if self.lower == self.upper {
            return !self.is_empty() && p == self.lower;
        }
        (p == self.lower && !self.lower_open)
            || (p == self.upper && !self.upper_open)
            || cyclic_lt3(self.lower, p, self.upper)
    }
}

// Text syntax: `a<i>`, `<i>:<k>`, `[<i>:<k>,<j>:<l>]`.

impl fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.interval, self.offset)
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Limit(i) => write!(f, "a{i}"),
            CirclePoint::Marked(p) => p.fmt(f),
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

fn parse_index(s: &str, what: &str) -> Result<usize> {
    let i: usize = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} `{s}`")))?;
    if i == 0 {
        return Err(Error::Parse(format!("{what} must be at least 1")));
    }
    Ok(i)
}

impl FromStr for MarkedPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (i, k) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `<interval>:<offset>`, got `{s}`")))?;
        let interval = parse_index(i.trim(), "interval index")?;
        let offset = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad offset `{k}`")))?;
        Ok(MarkedPoint::new(interval, offset))
    }
}

impl FromStr for CirclePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix('a') {
            Some(rest) => Ok(CirclePoint::Limit(parse_index(rest, "limit index")?)),
            None => s.parse().map(CirclePoint::Marked),
        }
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[p,q]`, got `{s}`")))?;
        let (p, q) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected two endpoints in `{s}`")))?;
        let p: CirclePoint = p.parse()?;
        let q: CirclePoint = q.parse()?;
        match (p, q) {
            (CirclePoint::Marked(p), CirclePoint::Marked(q)) => Arc::new(p, q),
            (CirclePoint::Limit(i), _) | (_, CirclePoint::Limit(i)) => Err(Error::LimitEndpoint(i)),
        }
    }
}

impl From<CirclePoint> for String {
    fn from(p: CirclePoint) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for CirclePoint {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Arc> for String {
    fn from(a: Arc) -> String {
        a.to_string()
    }
}

impl TryFrom<String> for Arc {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parses `[1:0,3:0];[2:0,4:0]` (separators `;` or whitespace).
pub fn parse_arc_list(s: &str) -> Result<Vec<Arc>> {
    s.split(|c: char| c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(i: usize, k: i64) -> MarkedPoint {
        MarkedPoint::new(i, k)
    }

    fn cm(i: usize, k: i64) -> CirclePoint {
        CirclePoint::marked(i, k)
    }

    fn arc(s: &str) -> Arc {
        s.parse().unwrap()
    }

    #[test]
    fn model_rejects_single_limit_point() {
        assert_eq!(CircleModel::new(1), Err(Error::TooFewLimitPoints(1)));
        assert!(CircleModel::new(2).is_ok());
    }

    #[test]
    fn linear_key_examples() {
        let model = CircleModel::new(2).unwrap();
        let key = |p| model.linear_key(p).unwrap();
        assert!(key(CirclePoint::Limit(1)) < key(cm(1, -100)));
        assert!(key(cm(1, 3)) < key(CirclePoint::Limit(2)));
        assert!(!(key(cm(2, 0)) < key(cm(1, 99))));
        assert!(model.linear_key(CirclePoint::Limit(3)).is_err());
        assert!(model.linear_key(cm(0, 1)).is_err());
    }

    #[test]
    fn cyclic_order_examples() {
        assert!(cyclic_lt3(cm(1, 0), cm(1, 5), CirclePoint::Limit(2)));
        assert!(cyclic_lt3(cm(2, 0), CirclePoint::Limit(1), cm(1, 3)));
        assert!(!cyclic_lt3(cm(1, 0), cm(1, 0), CirclePoint::Limit(2)));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(cm(1, 0), 1).unwrap(), cm(1, 1));
        assert_eq!(shift(cm(2, 3), -5).unwrap(), cm(2, -2));
        assert_eq!(shift(CirclePoint::Limit(1), 1), Err(Error::ShiftLimit(1)));
    }

    #[test]
    fn make_arc_examples() {
        assert_eq!(make_arc(m(1, 0), m(1, 1)), ArcOrZero::Zero);
        assert_eq!(make_arc(m(1, 0), m(1, 0)), ArcOrZero::Zero);
        assert_eq!(make_arc(m(1, 0), m(1, -1)), ArcOrZero::Zero);
        let a = make_arc(m(1, 0), m(2, 0)).arc().unwrap();
        assert_eq!(a.to_string(), "[1:0,2:0]");
        assert_eq!(make_arc(m(2, 0), m(1, 0)), make_arc(m(1, 0), m(2, 0)));
    }

    #[test]
    fn cross_examples() {
        assert!(cross(&arc("[1:0,2:0]"), &arc("[1:1,2:2]")));
        assert!(!cross(&arc("[1:0,1:4]"), &arc("[1:1,1:3]")));
        assert!(cross(&arc("[1:0,1:4]"), &arc("[1:2,2:0]")));
        let a = arc("[1:0,2:0]");
        assert!(!cross(&a, &a));
        // sharing an endpoint is not a crossing
        assert!(!cross(&a, &arc("[1:0,2:5]")));
    }

    #[test]
    fn region_examples() {
        let r = HalfOpenRegion::open_closed(CirclePoint::Limit(1), cm(1, 0));
        assert!(r.contains(cm(1, -7)));
        assert!(r.contains(cm(1, 0)));
        assert!(!r.contains(cm(1, 1)));
        assert!(!r.contains(CirclePoint::Limit(1)));

        let empty = HalfOpenRegion::open_closed(CirclePoint::Limit(1), CirclePoint::Limit(1));
        assert!(empty.is_empty());
        for p in [
            cm(1, 0),
            cm(2, 4),
            CirclePoint::Limit(1),
            CirclePoint::Limit(2),
        ] {
            assert!(!empty.contains(p));
        }
        let point = HalfOpenRegion::closed(cm(1, 0), cm(1, 0));
        assert!(point.contains(cm(1, 0)));
        assert!(!point.contains(cm(1, 1)));

        // [1:2, a2) wraps nowhere; (2:0, 1:0) wraps through a1
        let wrap = HalfOpenRegion::open(cm(2, 0), cm(1, 0));
        assert!(wrap.contains(CirclePoint::Limit(1)));
        assert!(wrap.contains(cm(1, -3)));
        assert!(!wrap.contains(cm(1, 2)));
    }

    #[test]
    fn text_round_trip() {
        for s in ["a3", "2:-7", "1:0"] {
            assert_eq!(s.parse::<CirclePoint>().unwrap().to_string(), s);
        }
        assert_eq!(arc("[2:3, 1:0]").to_string(), "[1:0,2:3]");
        assert!("[1:0,1:1]".parse::<Arc>().is_err());
        assert!("[a1,2:0]".parse::<Arc>().is_err());
        assert!("0:1".parse::<CirclePoint>().is_err());
        let list = parse_arc_list("[1:0,3:0];[2:0,4:0]").unwrap();
        assert_eq!(list.len(), 2);
        let json = serde_json::to_string(&arc("[1:0,2:3]")).unwrap();
        assert_eq!(json, "\"[1:0,2:3]\"");
    }

    #[test]
    fn window_arcs_are_canonical_and_nontrivial() {
        let model = CircleModel::new(2).unwrap();
        let arcs = model.window_arcs(-1, 1);
        // 6 points, 15 pairs, 4 trivial neighbour pairs
        assert_eq!(arcs.len(), 11);
        assert!(arcs.windows(2).all(|w| w[0] < w[1]));
    }
}
