//! T-structures, named by decorated non-crossing partitions.
//!
//! A t-structure is a pair `(P, x)` of an exhaustive non-crossing partition
//! `P` of `[n]` and a decoration `x = (x_1, ..., x_n)` where `x_i` is the limit
//! point `a_i`, a marked point of interval `i`, or the limit point `a_{i+1}`.
//! The aisle consists of the arcs with both endpoints in
//! `⋃_{i ∈ B} (a_i, x_i]` for one block `B`.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arcs::{ArcObject, Construction, Triangle};
use crate::circle::{make_arc, Arc, ArcOrZero, CirclePoint, MarkedPoint};
use crate::error::{Error, Result};
use crate::noncrossing::{noncrossing_closure, Partition};

/// Position of a decoration entry inside the closed interval `[a_i, a_{i+1}]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecorationLevel {
    /// `a_i`: the aisle region of the interval is empty.
    Bottom,
    /// The marked point with this offset.
    At(i64),
    /// `a_{i+1}`: the aisle region is the whole interval.
    Top,
}

impl DecorationLevel {
    /// Whether the offset `k` lies in `(a_i, x_i]`.
    pub fn covers(self, k: i64) -> bool {
        match self {
            DecorationLevel::Bottom => false,
            DecorationLevel::At(m) => k <= m,
            DecorationLevel::Top => true,
        }
    }

    pub fn to_point(self, i: usize, n: usize) -> CirclePoint {
        match self {
            DecorationLevel::Bottom => CirclePoint::Limit(i),
            DecorationLevel::At(k) => CirclePoint::marked(i, k),
            DecorationLevel::Top => CirclePoint::Limit(i % n + 1),
        }
    }

    pub fn is_marked(self) -> bool {
        matches!(self, DecorationLevel::At(_))
    }

    fn shift(self, m: i64) -> Self {
        match self {
            DecorationLevel::At(k) => DecorationLevel::At(k + m),
            other => other,
        }
    }
}

/// Reads entry `i` of a decoration as a level of `[a_i, a_{i+1}]`.
pub fn decoration_level(i: usize, n: usize, p: CirclePoint) -> Result<DecorationLevel> {
    let bad = || Error::InvalidDecoration {
        index: i,
        value: p.to_string(),
    };
    match p {
        CirclePoint::Limit(j) if j == i => Ok(DecorationLevel::Bottom),
        CirclePoint::Limit(j) if j == i % n + 1 || j == i + 1 => Ok(DecorationLevel::Top),
        CirclePoint::Marked(m) if m.interval == i => Ok(DecorationLevel::At(m.offset)),
        _ => Err(bad()),
    }
}

/// A tuple `(x_1, ..., x_n)` of points of the closed circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decoration {
    pub entries: Vec<CirclePoint>,
}

impl Decoration {
    pub fn new(entries: Vec<CirclePoint>) -> Self {
        Self { entries }
    }

    pub fn from_levels(levels: &[DecorationLevel]) -> Self {
        let n = levels.len();
        Self {
            entries: levels
                .iter()
                .enumerate()
                .map(|(idx, l)| l.to_point(idx + 1, n))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn levels(&self) -> Result<Vec<DecorationLevel>> {
        let n = self.entries.len();
        self.entries
            .iter()
            .enumerate()
            .map(|(idx, &p)| decoration_level(idx + 1, n, p))
            .collect()
    }
}

impl FromStr for Decoration {
    type Err = Error;

    /// `1:0,a2,3:0`; `a<n+1>` is accepted for the top of interval `n`.
    fn from_str(s: &str) -> Result<Self> {
        let entries: Vec<CirclePoint> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(str::parse)
            .collect::<Result<_>>()?;
        let n = entries.len();
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(idx, p)| match p {
                CirclePoint::Limit(j) if idx + 1 == n && j == n + 1 => CirclePoint::Limit(1),
                other => other,
            })
            .collect();
        Ok(Self { entries })
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn compatible(partition: &Partition, i: usize, level: DecorationLevel) -> bool {
    match level {
        DecorationLevel::Bottom => partition.is_singleton(i),
        DecorationLevel::Top => partition.is_adjacency(i),
        DecorationLevel::At(_) => true,
    }
}

/// Compatibility of `x` with the exhaustive partition `P`: `a_i` is allowed
/// only for singletons `i`, `a_{i+1}` only for adjacencies.
pub fn validate_decoration(partition: &Partition, x: &Decoration) -> Result<bool> {
    check_decoration(partition, x).map(|r| r.is_ok())
}

/// Outer error: malformed input. Inner error: the first incompatible entry.
fn check_decoration(partition: &Partition, x: &Decoration) -> Result<Result<Vec<DecorationLevel>>> {
    let n = partition.n();
    if x.len() != n {
        return Err(Error::DecorationLength {
            expected: n,
            got: x.len(),
        });
    }
    if !partition.is_exhaustive() {
        return Err(Error::NotExhaustive(n));
    }
    let levels = match x.levels() {
        Ok(l) => l,
        Err(e) => return Ok(Err(e)),
    };
    for (idx, &level) in levels.iter().enumerate() {
        if !compatible(partition, idx + 1, level) {
            return Ok(Err(Error::InvalidDecoration {
                index: idx + 1,
                value: x.entries[idx].to_string(),
            }));
        }
    }
    Ok(Ok(levels))
}

/// A t-structure `(P, x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TStructureJson", into = "TStructureJson")]
pub struct TStructure {
    partition: Partition,
    levels: Vec<DecorationLevel>,
    // interval -> index of its block
    block_of: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TStructureJson {
    n: usize,
    partition: Vec<Vec<usize>>,
    decoration: Decoration,
}

impl TryFrom<TStructureJson> for TStructure {
    type Error = Error;

    fn try_from(raw: TStructureJson) -> Result<Self> {
        TStructure::new(Partition::new(raw.n, raw.partition)?, raw.decoration)
    }
}

impl From<TStructure> for TStructureJson {
    fn from(ts: TStructure) -> Self {
        TStructureJson {
            n: ts.n(),
            decoration: ts.decoration(),
            partition: ts.partition.blocks().to_vec(),
        }
    }
}

impl TStructure {
    pub fn new(partition: Partition, decoration: Decoration) -> Result<Self> {
        let levels = check_decoration(&partition, &decoration)??;
        Ok(Self::from_parts(partition, levels))
    }

    pub fn from_levels(partition: Partition, levels: Vec<DecorationLevel>) -> Result<Self> {
        Self::new(partition, Decoration::from_levels(&levels))
    }

    fn from_parts(partition: Partition, levels: Vec<DecorationLevel>) -> Self {
        let n = partition.n();
        let mut block_of = vec![usize::MAX; n + 1];
        for (idx, b) in partition.blocks().iter().enumerate() {
            for &e in b {
                block_of[e] = idx;
            }
        }
        Self {
            partition,
            levels,
            block_of,
        }
    }

    /// `(finest, (a_1, ..., a_n))`, the zero aisle.
    pub fn bottom(n: usize) -> Self {
        Self::from_parts(Partition::finest(n), vec![DecorationLevel::Bottom; n])
    }

    /// `({[n]}, (a_2, ..., a_1))`, the whole category as aisle.
    pub fn top(n: usize) -> Self {
        Self::from_parts(Partition::coarsest(n), vec![DecorationLevel::Top; n])
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn levels(&self) -> &[DecorationLevel] {
        &self.levels
    }

    /// Level of interval `i` (1-based).
    pub fn level(&self, i: usize) -> DecorationLevel {
        self.levels[i - 1]
    }

    pub fn decoration(&self) -> Decoration {
        Decoration::from_levels(&self.levels)
    }

    /// Every decoration moved `m` steps clockwise, the image under `Σ^m`.
    pub fn suspend(&self, m: i64) -> TStructure {
        Self::from_parts(
            self.partition.clone(),
            self.levels.iter().map(|l| l.shift(-m)).collect(),
        )
    }

    /// Whether the marked point lies in `(a_i, x_i]` of its interval.
    pub fn region_contains(&self, p: MarkedPoint) -> bool {
        self.level(p.interval).covers(p.offset)
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    pub fn aisle_contains(&self, a: &Arc) -> bool {
        let (lo, hi) = (a.lo(), a.hi());
        self.same_block(lo.interval, hi.interval)
            && self.region_contains(lo)
            && self.region_contains(hi)
    }
}

impl fmt::Display for TStructure {
    /// `1,3|2|4,5,6; 1:0,a2,3:0,4:0,a6,6:0`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}", self.partition, self.decoration())
    }
}

impl FromStr for TStructure {
    type Err = Error;

    /// JSON, or the compact form `<partition>; <decoration>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') && s.contains('"') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let (p, x) = s.split_once(';').ok_or_else(|| {
            Error::Parse(format!("expected `<partition>; <decoration>`, got `{s}`"))
        })?;
        let x: Decoration = x.parse()?;
        TStructure::new(Partition::parse_compact(x.len(), p)?, x)
    }
}

pub fn aisle_contains(ts: &TStructure, a: &Arc) -> bool {
    ts.aisle_contains(a)
}

/// The coaisle as `⋃_{i ∈ B'} [y_i, a_{i+1})` over blocks `B'` of the
/// Kreweras complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoaislePresentation {
    pub partition: Partition,
    pub bounds: Vec<CirclePoint>,
}

impl CoaislePresentation {
    fn lower(&self, i: usize) -> CirclePoint {
        self.bounds[i - 1]
    }

    /// Whether the marked point lies in `[y_i, a_{i+1})` of its interval.
    pub fn region_contains(&self, p: MarkedPoint) -> bool {
        match self.lower(p.interval) {
            CirclePoint::Limit(j) => j == p.interval,
            CirclePoint::Marked(y) => p.offset >= y.offset,
        }
    }

    pub fn contains(&self, a: &Arc) -> bool {
        let (lo, hi) = (a.lo(), a.hi());
        self.partition.same_block(lo.interval, hi.interval)
            && self.region_contains(lo)
            && self.region_contains(hi)
    }
}

/// `y_i = x_i^-` for marked `x_i`, `y_i = x_i` otherwise; blocks from the
/// Kreweras complement.
pub fn coaisle_presentation(ts: &TStructure) -> CoaislePresentation {
    let n = ts.n();
    let bounds = ts
        .levels
        .iter()
        .enumerate()
        .map(|(idx, l)| match *l {
            DecorationLevel::At(k) => CirclePoint::marked(idx + 1, k - 1),
            other => other.to_point(idx + 1, n),
        })
        .collect();
    let partition = ts
        .partition
        .kreweras()
        .expect("t-structure partitions are exhaustive");
    CoaislePresentation { partition, bounds }
}

pub fn coaisle_contains(ts: &TStructure, a: &Arc) -> bool {
    coaisle_presentation(ts).contains(a)
}

/// `{x_i^(-2), x_i}` for every marked `x_i`.
pub fn heart(ts: &TStructure) -> Vec<Arc> {
    ts.levels
        .iter()
        .enumerate()
        .filter_map(|(idx, l)| match *l {
            DecorationLevel::At(k) => Some(
                Arc::new(
                    MarkedPoint::new(idx + 1, k - 2),
                    MarkedPoint::new(idx + 1, k),
                )
                .expect("two steps apart"),
            ),
            _ => None,
        })
        .collect()
}

/// The smallest t-structure whose aisle contains `arcs`.
pub fn aisle_generated(arcs: &[Arc], n: usize) -> TStructure {
    let mut levels = vec![DecorationLevel::Bottom; n];
    for p in arcs.iter().flat_map(Arc::endpoints) {
        let slot = &mut levels[p.interval - 1];
        *slot = (*slot).max(DecorationLevel::At(p.offset));
    }
    let pairs: Vec<(usize, usize)> = arcs.iter().map(Arc::intervals).collect();
    let blocks = noncrossing_closure(n, 1..=n, pairs);
    TStructure::from_parts(Partition::from_canonical(n, blocks), levels)
}

/// Offsets of interval `i` strictly between two points, as an open range
/// with `None` for an unbounded side.
type OpenRange = (Option<i64>, Option<i64>);

/// Per-interval pieces of the open arc from `from` anticlockwise to `to`
/// (`from != to`).
fn side_ranges(from: MarkedPoint, to: MarkedPoint, i: usize) -> Vec<OpenRange> {
    let (fi, ti) = (from.interval, to.interval);
    if from < to {
        // no wrap past a_1
        if fi == i && ti == i {
            vec![(Some(from.offset), Some(to.offset))]
        } else if fi == i {
            vec![(Some(from.offset), None)]
        } else if ti == i {
            vec![(None, Some(to.offset))]
        } else if fi < i && i < ti {
            vec![(None, None)]
        } else {
            Vec::new()
        }
    } else if fi == i && ti == i {
        vec![(Some(from.offset), None), (None, Some(to.offset))]
    } else if fi == i {
        vec![(Some(from.offset), None)]
    } else if ti == i {
        vec![(None, Some(to.offset))]
    } else if i > fi || i < ti {
        vec![(None, None)]
    } else {
        Vec::new()
    }
}

fn range_meets_level((lower, upper): OpenRange, level: DecorationLevel) -> bool {
    let top = match level {
        DecorationLevel::Bottom => return false,
        DecorationLevel::At(m) => Some(m),
        DecorationLevel::Top => None,
    };
    let hi = match (upper.map(|u| u - 1), top) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    match (lower.map(|l| l + 1), hi) {
        (Some(lo), Some(hi)) => lo <= hi,
        _ => true,
    }
}

impl TStructure {
    fn region_meets_side(&self, block: &[usize], from: MarkedPoint, to: MarkedPoint) -> bool {
        block.iter().any(|&i| {
            side_ranges(from, to, i)
                .into_iter()
                .any(|r| range_meets_level(r, self.level(i)))
        })
    }

    /// Whether the region of `block` has points strictly on both sides of `t`.
    pub fn block_crosses(&self, block: &[usize], t: &Arc) -> bool {
        self.region_meets_side(block, t.lo(), t.hi())
            && self.region_meets_side(block, t.hi(), t.lo())
    }

    /// First point of the region of `block` met walking clockwise from `u`
    /// (`u` itself included).
    pub fn first_hit(&self, block: &[usize], u: MarkedPoint) -> Result<MarkedPoint> {
        let n = self.n();
        let j = u.interval;
        let in_block = |i: usize| block.binary_search(&i).is_ok();
        if in_block(j) {
            match self.level(j) {
                DecorationLevel::At(m) if u.offset <= m => return Ok(u),
                DecorationLevel::At(m) => return Ok(MarkedPoint::new(j, m)),
                DecorationLevel::Top => return Ok(u),
                DecorationLevel::Bottom => {}
            }
        }
        let mut i = j;
        for _ in 1..n {
            i = if i == 1 { n } else { i - 1 };
            if !in_block(i) {
                continue;
            }
            match self.level(i) {
                DecorationLevel::At(m) => return Ok(MarkedPoint::new(i, m)),
                DecorationLevel::Bottom => {}
                DecorationLevel::Top => {
                    return Err(Error::Internal(format!(
                        "walk from {u} entered the full interval {i} of block {block:?}"
                    )))
                }
            }
        }
        Err(Error::Internal(format!(
            "walk from {u} never met block {block:?}"
        )))
    }
}

/// The approximation triangle `Z -> T -> W -> Σ Z` with `Z` in the aisle and
/// `W` in the coaisle.
pub fn approx_triangle(ts: &TStructure, t: &Arc) -> Result<Triangle> {
    let (start, end) = (t.lo(), t.hi());
    let mut hits = Vec::new();
    for block in ts.partition.blocks() {
        if ts.block_crosses(block, t) {
            hits.push((ts.first_hit(block, start)?, ts.first_hit(block, end)?));
        }
    }
    // nearest to `start` in clockwise order first
    let start_key = start.key();
    hits.sort_by_key(|(z, _)| (z.key() > start_key, Reverse(z.key())));

    let mut z_pieces = Vec::with_capacity(hits.len());
    for &(z, z_prime) in &hits {
        match make_arc(z_prime, z) {
            ArcOrZero::Arc(a) => z_pieces.push(a),
            ArcOrZero::Zero => {
                log::debug!("trivial connecting pair {{{z_prime}, {z}}} for {t} dropped")
            }
        }
    }

    let mut w_pieces = Vec::with_capacity(hits.len() + 1);
    let mut left = start;
    for &(z, z_prime) in &hits {
        w_pieces.push(make_arc(left, z.pred()));
        left = z_prime.pred();
    }
    w_pieces.push(make_arc(left, end));

    Ok(Triangle {
        first: ArcObject::new(z_pieces),
        middle: ArcObject::single(*t),
        last: ArcObject::from_pieces(w_pieces),
        construction: Construction::Approximation,
    })
}

impl TStructure {
    /// Every `x_i` is marked or equals `a_i`.
    pub fn is_left_nondegenerate(&self) -> bool {
        self.levels.iter().all(|l| *l != DecorationLevel::Top)
    }

    /// Every `x_i` is marked or equals `a_{i+1}`.
    pub fn is_right_nondegenerate(&self) -> bool {
        self.levels.iter().all(|l| *l != DecorationLevel::Bottom)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.levels.iter().all(|l| l.is_marked())
    }

    pub fn is_bounded_above(&self) -> bool {
        self.partition == Partition::coarsest(self.n())
    }

    pub fn is_bounded_below(&self) -> bool {
        self.partition == Partition::finest(self.n())
    }

    /// Indices with a marked decoration.
    pub fn z_indices(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&i| self.level(i).is_marked())
            .collect()
    }

    pub fn equiv_class(&self) -> EquivClass {
        EquivClass {
            partition: self.partition.clone(),
            z_indices: self.z_indices(),
        }
    }
}

/// Same partition and same set of marked decoration indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EquivClass {
    pub partition: Partition,
    pub z_indices: Vec<usize>,
}

impl EquivClass {
    pub fn new(partition: Partition, mut z_indices: Vec<usize>) -> Result<Self> {
        z_indices.sort_unstable();
        z_indices.dedup();
        let n = partition.n();
        if !partition.is_exhaustive() {
            return Err(Error::NotExhaustive(n));
        }
        for i in 1..=n {
            let forced = !partition.is_singleton(i) && !partition.is_adjacency(i);
            if forced && z_indices.binary_search(&i).is_err() {
                return Err(Error::PreconditionViolated(format!(
                    "index {i} is neither a singleton nor an adjacency and must be marked"
                )));
            }
        }
        Ok(Self {
            partition,
            z_indices,
        })
    }

    /// A member: offset 0 on marked indices, the forced limit elsewhere.
    pub fn representative(&self) -> TStructure {
        let n = self.partition.n();
        let levels = (1..=n)
            .map(|i| {
                if self.z_indices.binary_search(&i).is_ok() {
                    DecorationLevel::At(0)
                } else if self.partition.is_singleton(i) {
                    DecorationLevel::Bottom
                } else {
                    DecorationLevel::Top
                }
            })
            .collect();
        TStructure::from_parts(self.partition.clone(), levels)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.z_indices.len() == self.partition.n()
    }
}

pub fn equiv_class(ts: &TStructure) -> EquivClass {
    ts.equiv_class()
}

pub fn equiv_eq(a: &TStructure, b: &TStructure) -> bool {
    a.equiv_class() == b.equiv_class()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(s: &str) -> TStructure {
        s.parse().unwrap()
    }

    fn arc(s: &str) -> Arc {
        s.parse().unwrap()
    }

    fn arcs(s: &str) -> ArcObject {
        ArcObject::new(crate::circle::parse_arc_list(s).unwrap())
    }

    #[test]
    fn decoration_validation() {
        let p = Partition::parse_compact(6, "1,3|2|4,5,6").unwrap();
        let x: Decoration = "1:0,a2,3:0,4:0,a6,6:0".parse().unwrap();
        assert_eq!(validate_decoration(&p, &x), Ok(true));
        let p2 = Partition::parse_compact(2, "1,2").unwrap();
        assert_eq!(
            validate_decoration(&p2, &"a1,2:0".parse().unwrap()),
            Ok(false)
        );
        assert_eq!(
            validate_decoration(&Partition::finest(2), &"a1,a2".parse().unwrap()),
            Ok(true)
        );
        assert_eq!(
            validate_decoration(&p2, &"a1".parse().unwrap()),
            Err(Error::DecorationLength {
                expected: 2,
                got: 1
            })
        );
        assert!(matches!(
            TStructure::new(p2, "a1,2:0".parse().unwrap()),
            Err(Error::InvalidDecoration { index: 1, .. })
        ));
    }

    #[test]
    fn top_of_last_interval_reads_either_way() {
        let a: Decoration = "1:0,a1".parse().unwrap();
        let b: Decoration = "1:0,a3".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(
            b.levels().unwrap(),
            vec![DecorationLevel::At(0), DecorationLevel::Top]
        );
        assert_eq!(TStructure::top(3).to_string(), "1,2,3; a2,a3,a1");
    }

    #[test]
    fn aisle_membership() {
        let s = ts("1,2; 1:0,2:0");
        assert!(aisle_contains(&s, &arc("[1:0,2:0]")));
        assert!(!aisle_contains(&s, &arc("[1:1,2:0]")));
        assert!(aisle_contains(&s, &arc("[1:-5,1:-2]")));
    }

    #[test]
    fn coaisle() {
        let s = ts("1,2; 1:0,2:0");
        let c = coaisle_presentation(&s);
        assert_eq!(c.partition, Partition::finest(2));
        assert_eq!(
            c.bounds,
            vec![CirclePoint::marked(1, -1), CirclePoint::marked(2, -1)]
        );
        assert!(coaisle_contains(&s, &arc("[1:-1,1:9]")));
        assert!(!coaisle_contains(&s, &arc("[1:0,2:5]")));
    }

    #[test]
    fn hearts() {
        assert_eq!(
            heart(&ts("1,2; 1:0,2:0")),
            vec![arc("[1:-2,1:0]"), arc("[2:-2,2:0]")]
        );
        assert_eq!(heart(&ts("1|2; a1,2:0")), vec![arc("[2:-2,2:0]")]);
        assert!(heart(&TStructure::bottom(3)).is_empty());
    }

    #[test]
    fn generated_aisles() {
        assert_eq!(aisle_generated(&[arc("[1:0,2:0]")], 2), ts("1,2; 1:0,2:0"));
        assert_eq!(aisle_generated(&[], 3), TStructure::bottom(3));
        assert_eq!(aisle_generated(&[arc("[1:0,1:4]")], 2), ts("1|2; 1:4,a2"));
    }

    #[test]
    fn approximation_examples() {
        let s = ts("1,2; 1:0,2:0");
        let tri = approx_triangle(&s, &arc("[1:2,2:3]")).unwrap();
        assert_eq!(tri.first, arcs("[1:0,2:0]"));
        assert_eq!(tri.last, arcs("[1:-1,1:2];[2:-1,2:3]"));
        assert!(tri.endpoint_containment());

        let t = arc("[1:-1,2:0]");
        let tri = approx_triangle(&s, &t).unwrap();
        assert_eq!(tri.first, ArcObject::single(t));
        assert!(tri.last.is_zero());

        let t = arc("[1:5,1:9]");
        let tri = approx_triangle(&s, &t).unwrap();
        assert!(tri.first.is_zero());
        assert_eq!(tri.last, ArcObject::single(t));
    }

    #[test]
    fn trivial_connecting_pair_is_dropped() {
        let s = ts("1,2; 1:1,2:0");
        let t = arc("[1:0,1:5]");
        let tri = approx_triangle(&s, &t).unwrap();
        assert!(tri.first.is_zero());
        assert_eq!(tri.last, ArcObject::single(t));
    }

    #[test]
    fn degeneracy_and_boundedness() {
        let s = ts("1,2; 1:0,2:0");
        assert!(s.is_nondegenerate() && s.is_left_nondegenerate() && s.is_right_nondegenerate());
        let s = ts("1|2; a1,2:0");
        assert!(s.is_left_nondegenerate());
        assert!(!s.is_right_nondegenerate());
        let z = TStructure::bottom(2);
        assert!(z.is_left_nondegenerate() && !z.is_right_nondegenerate());
        assert!(ts("1,2; 1:4,a1").is_bounded_above());
        assert!(z.is_bounded_below() && !z.is_bounded_above());
    }

    #[test]
    fn equivalence() {
        assert!(equiv_eq(&ts("1,2; 1:0,2:0"), &ts("1,2; 1:7,2:-4")));
        assert!(!equiv_eq(&ts("1,2; 1:0,a1"), &ts("1,2; 1:0,2:0")));
        let c = ts("1,3|2|4,5,6; 1:0,a2,3:0,4:0,a6,6:0").equiv_class();
        assert_eq!(c.z_indices, vec![1, 3, 4, 6]);
        assert_eq!(c.representative().equiv_class(), c);
    }

    #[test]
    fn json_shape() {
        let s = ts("1,3|2|4,5,6; 1:0,a2,3:0,4:0,a6,6:0");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"n":6,"partition":[[1,3],[2],[4,5,6]],"decoration":["1:0","a2","3:0","4:0","a6","6:0"]}"#
        );
        assert_eq!(ts(&json), s);
    }
}
