//! Non-crossing partitions of `[n]`, exhaustive or not.
//!
//! A [`Partition`] is a collection of pairwise disjoint, non-empty blocks of
//! `{1, ..., n}` whose convex hulls on the `n`-gon do not meet. Covering all of
//! `[n]` is optional; the exhaustive ones form the Kreweras lattice `NC_n`,
//! and all of them together form `NNC_n` with the empty collection at the
//! bottom.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable overriding the enumeration size guard.
pub const GUARD_ENV: &str = "CLUSTER_LATTICE_GUARD_N";
pub const DEFAULT_GUARD: usize = 12;

/// Largest `n` accepted by the enumerators.
pub fn enumeration_guard() -> usize {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GUARD)
}

pub(crate) fn check_guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::GuardExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// A non-exhaustive non-crossing partition in canonical form: blocks sorted
/// ascending, ordered by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::new(raw.n, raw.blocks)
    }
}

/// Whether `a` and `b` (sorted, disjoint) interleave as `i < k < j < l`.
fn blocks_cross(a: &[usize], b: &[usize]) -> bool {
    // Count maximal runs in the merged order; four runs contain a pattern ABAB.
    let (mut i, mut j) = (0, 0);
    let mut runs = 0;
    let mut last: Option<bool> = None;
    while i < a.len() || j < b.len() {
        let from_a = j >= b.len() || (i < a.len() && a[i] < b[j]);
        if from_a {
            i += 1;
        } else {
            j += 1;
        }
        if last != Some(from_a) {
            runs += 1;
            if runs >= 4 {
                return true;
            }
            last = Some(from_a);
        }
    }
    false
}

fn validate_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for block in blocks {
        if block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        for &e in block {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            if seen[e] {
                return Err(Error::OverlappingBlocks(e));
            }
            seen[e] = true;
        }
    }
    Ok(())
}

fn canonicalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// Crossing test for a collection of disjoint blocks over `[n]`.
pub fn is_noncrossing(n: usize, blocks: &[Vec<usize>]) -> Result<bool> {
    validate_blocks(n, blocks)?;
    Ok(first_crossing(&canonicalize(blocks.to_vec())).is_none())
}

fn first_crossing(blocks: &[Vec<usize>]) -> Option<(usize, usize)> {
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if blocks_cross(&blocks[i], &blocks[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Minimal union-find over `0..=n`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Merges crossing blocks until none cross. The scan always merges the first
/// crossing pair in canonical order.
pub(crate) fn merge_crossings(blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut blocks = canonicalize(blocks);
    while let Some((i, j)) = first_crossing(&blocks) {
        let moved = blocks.remove(j);
        blocks[i].extend(moved);
        blocks = canonicalize(blocks);
    }
    blocks
}

/// Groups the elements of `support` by the connected components of `pairs`,
/// then merges crossing components. This is the non-crossing closure used by
/// the join and by the generated thick subcategories and aisles.
pub(crate) fn noncrossing_closure(
    n: usize,
    support: impl IntoIterator<Item = usize>,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n + 1);
    let mut in_support = vec![false; n + 1];
    for e in support {
        in_support[e] = true;
    }
    for (a, b) in pairs {
        in_support[a] = true;
        in_support[b] = true;
        uf.union(a, b);
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for e in (1..=n).filter(|&e| in_support[e]) {
        let r = uf.find(e);
        groups[r].push(e);
    }
    merge_crossings(groups.into_iter().filter(|g| !g.is_empty()).collect())
}

impl Partition {
    /// Validates and canonicalizes.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        validate_blocks(n, &blocks)?;
        let blocks = canonicalize(blocks);
        if let Some((i, j)) = first_crossing(&blocks) {
            return Err(Error::Crossing(blocks[i].clone(), blocks[j].clone()));
        }
        Ok(Self { n, blocks })
    }

    pub(crate) fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        debug_assert!(validate_blocks(n, &blocks).is_ok());
        debug_assert!(first_crossing(&blocks).is_none());
        Self {
            n,
            blocks: canonicalize(blocks),
        }
    }

    /// The empty collection, bottom of `NNC_n`.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            blocks: Vec::new(),
        }
    }

    pub fn finest(n: usize) -> Self {
        Self {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// `{[n]}`, top of both `NC_n` and `NNC_n`.
    pub fn coarsest(n: usize) -> Self {
        let blocks = if n == 0 {
            Vec::new()
        } else {
            vec![(1..=n).collect()]
        };
        Self { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }

    pub fn is_exhaustive(&self) -> bool {
        self.blocks.iter().map(Vec::len).sum::<usize>() == self.n
    }

    /// Index of the block containing `e`.
    pub fn block_index(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&e).is_ok())
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        match self.block_index(a) {
            Some(idx) => self.blocks[idx].binary_search(&b).is_ok(),
            None => false,
        }
    }

    /// `{i}` is a block.
    pub fn is_singleton(&self, i: usize) -> bool {
        self.blocks.iter().any(|b| b.len() == 1 && b[0] == i)
    }

    /// `i` and `i + 1` (cyclically) share a block.
    pub fn is_adjacency(&self, i: usize) -> bool {
        self.same_block(i, i % self.n + 1) && self.n > 1
    }

    fn require_exhaustive(&self) -> Result<()> {
        if self.is_exhaustive() {
            Ok(())
        } else {
            Err(Error::NotExhaustive(self.n))
        }
    }

    fn check_same_n(&self, other: &Partition) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// Refinement order: every block of `self` sits inside a block of `other`.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self.blocks.iter().all(|b| {
            other
                .block_index(b[0])
                .is_some_and(|idx| b.iter().all(|e| other.blocks[idx].binary_search(e).is_ok()))
        }))
    }

    /// Non-empty blockwise intersections.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.check_same_n(other)?;
        let mut blocks = Vec::new();
        for b in &self.blocks {
            for c in &other.blocks {
                let common: Vec<usize> = b
                    .iter()
                    .filter(|e| c.binary_search(e).is_ok())
                    .copied()
                    .collect();
                if !common.is_empty() {
                    blocks.push(common);
                }
            }
        }
        Ok(Partition::from_canonical(self.n, blocks))
    }

    /// Least upper bound: join the singleton completions in `NC_n` by
    /// transitive closure plus crossing merges, then drop the singletons
    /// that neither input covers.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.check_same_n(other)?;
        let mut covered = vec![false; self.n + 1];
        for &e in self.blocks.iter().chain(&other.blocks).flatten() {
            covered[e] = true;
        }
        let pairs = self
            .blocks
            .iter()
            .chain(&other.blocks)
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])));
        let blocks = noncrossing_closure(self.n, 1..=self.n, pairs)
            .into_iter()
            .filter(|b| !(b.len() == 1 && !covered[b[0]]))
            .collect();
        Ok(Partition::from_canonical(self.n, blocks))
    }

    /// Join of two exhaustive partitions through Kreweras duality:
    /// `K^{-1}(K(P) ∧ K(Q))`.
    pub fn join_via_kreweras(&self, other: &Partition) -> Result<Partition> {
        self.check_same_n(other)?;
        let meet = self.kreweras()?.meet(&other.kreweras()?)?;
        meet.kreweras_inverse()
    }

    /// Kreweras complement. With `1 < 1' < 2 < 2' < ... < n < n'`, the primed
    /// points `i'` and `j'` (`i < j`) share a block of the maximal non-crossing
    /// completion exactly when `{i+1, ..., j}` is a union of blocks of `self`.
    pub fn kreweras(&self) -> Result<Partition> {
        self.require_exhaustive()?;
        let n = self.n;
        let mut label = vec![0usize; n + 1];
        for (idx, b) in self.blocks.iter().enumerate() {
            for &e in b {
                label[e] = idx;
            }
        }
        let mut pairs = Vec::new();
        for i in 1..=n {
            // counts[l] = how many elements of block l lie in {i+1..j}
            let mut counts = vec![0usize; self.blocks.len()];
            let mut open = 0usize; // blocks partially inside
            for (j, &l) in label.iter().enumerate().skip(i + 1) {
                counts[l] += 1;
                if counts[l] == 1 {
                    open += 1;
                }
                if counts[l] == self.blocks[l].len() {
                    open -= 1;
                }
                if open == 0 {
                    pairs.push((i, j));
                }
            }
        }
        let blocks = noncrossing_closure(n, 1..=n, pairs);
        Ok(Partition::from_canonical(n, blocks))
    }

    /// Inverse of [`Partition::kreweras`]; since `K² = rotate(·, 1)`, it is
    /// `K ∘ rotate(·, -1)`.
    pub fn kreweras_inverse(&self) -> Result<Partition> {
        self.rotate(-1).kreweras()
    }

    /// Clockwise rotation by `d`: `i ↦ ((i - 1 - d) mod n) + 1`.
    pub fn rotate(&self, d: i64) -> Partition {
        if self.n == 0 {
            return self.clone();
        }
        let n = self.n as i64;
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&i| ((i as i64 - 1 - d).rem_euclid(n) + 1) as usize)
                    .collect()
            })
            .collect();
        Partition::from_canonical(self.n, blocks)
    }

    /// Adds the missing singletons.
    pub fn completed(&self) -> Partition {
        let mut blocks = self.blocks.clone();
        let support = self.support();
        for e in 1..=self.n {
            if support.binary_search(&e).is_err() {
                blocks.push(vec![e]);
            }
        }
        Partition::from_canonical(self.n, blocks)
    }

    /// Set notation `{{1,3},{2},{4,5,6}}`.
    pub fn to_set_notation(&self) -> String {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(ToString::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        format!("{{{}}}", blocks.join(","))
    }

    /// Parses the compact form `1,3|2|4,5,6`; `{}` or the empty string is the
    /// empty collection.
    pub fn parse_compact(n: usize, s: &str) -> Result<Partition> {
        Partition::new(n, parse_compact_blocks(s)?)
    }
}

/// Blocks of a compact partition string, without validation.
pub fn parse_compact_blocks(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() || s == "{}" {
        return Ok(Vec::new());
    }
    s.split('|')
        .map(|block| {
            block
                .split(',')
                .map(|e| {
                    e.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad element `{e}` in `{s}`")))
                })
                .collect()
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Compact form with `n` taken as the largest element.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_compact_blocks(s)?;
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Partition::new(n, blocks)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{{}}");
        }
        for (idx, b) in self.blocks.iter().enumerate() {
            if idx > 0 {
                write!(f, "|")?;
            }
            for (jdx, e) in b.iter().enumerate() {
                if jdx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> u128 {
    binomial(2 * n, n) / u128::from(n + 1)
}

/// `|NNC_n| = Σ_k binom(n, k) C_k`.
pub fn nnc_count(n: u64) -> u128 {
    (0..=n).map(|k| binomial(n, k) * catalan(k)).sum()
}

/// All non-crossing partitions of the sorted slice `elems`.
fn nc_partitions_of(elems: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, _)) = elems.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    // `elems[j]` is the largest element of the block containing `first`
    for j in 0..elems.len() {
        let inner: Vec<Vec<Vec<usize>>> = if j == 0 {
            vec![vec![vec![first]]]
        } else {
            nc_partitions_of(&elems[1..=j])
                .into_iter()
                .map(|mut p| {
                    let last = elems[j];
                    let b = p
                        .iter()
                        .position(|b| b.contains(&last))
                        .expect("last element is placed");
                    p[b].insert(0, first);
                    p
                })
                .collect()
        };
        let tails = nc_partitions_of(&elems[j + 1..]);
        for head in &inner {
            for tail in &tails {
                let mut p = head.clone();
                p.extend(tail.iter().cloned());
                out.push(p);
            }
        }
    }
    out
}

/// Every element of `NC_n` once, in a fixed order.
pub fn nc_enumerate(n: usize) -> Result<std::vec::IntoIter<Partition>> {
    nc_enumerate_guarded(n, enumeration_guard())
}

pub fn nc_enumerate_guarded(n: usize, limit: usize) -> Result<std::vec::IntoIter<Partition>> {
    check_guard(n, limit)?;
    let elems: Vec<usize> = (1..=n).collect();
    let parts: Vec<Partition> = nc_partitions_of(&elems)
        .into_iter()
        .map(|b| Partition::from_canonical(n, b))
        .collect();
    Ok(parts.into_iter())
}

/// Every element of `NNC_n` once: subsets in binary order, each followed by
/// its non-crossing partitions.
pub fn nnc_enumerate(n: usize) -> Result<std::vec::IntoIter<Partition>> {
    nnc_enumerate_guarded(n, enumeration_guard())
}

pub fn nnc_enumerate_guarded(n: usize, limit: usize) -> Result<std::vec::IntoIter<Partition>> {
    check_guard(n, limit)?;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let elems: Vec<usize> = (1..=n).filter(|e| mask & (1 << (e - 1)) != 0).collect();
        out.extend(
            nc_partitions_of(&elems)
                .into_iter()
                .map(|b| Partition::from_canonical(n, b)),
        );
    }
    Ok(out.into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Partition {
        Partition::parse_compact(n, s).unwrap()
    }

    #[test]
    fn noncrossing_examples() {
        assert_eq!(
            is_noncrossing(6, &[vec![1, 3], vec![2], vec![4, 5, 6]]),
            Ok(true)
        );
        assert_eq!(is_noncrossing(4, &[vec![1, 3], vec![2, 4]]), Ok(false));
        assert_eq!(is_noncrossing(3, &[]), Ok(true));
        assert_eq!(
            is_noncrossing(3, &[vec![1, 2], vec![2]]),
            Err(Error::OverlappingBlocks(2))
        );
        assert_eq!(
            is_noncrossing(3, &[vec![4]]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        );
        assert!(matches!(
            Partition::new(4, vec![vec![1, 3], vec![2, 4]]),
            Err(Error::Crossing(..))
        ));
    }

    #[test]
    fn counts() {
        assert_eq!(nnc_count(0), 1);
        assert_eq!(nnc_count(1), 2);
        assert_eq!(nnc_count(2), 5);
        assert_eq!(nnc_count(3), 15);
        assert_eq!(catalan(4), 14);
        assert_eq!(nc_enumerate(3).unwrap().count(), 5);
        assert_eq!(nnc_enumerate(2).unwrap().count(), 5);
        assert_eq!(
            nc_enumerate(1).unwrap().collect::<Vec<_>>(),
            vec![p(1, "1")]
        );
    }

    #[test]
    fn guard_is_enforced() {
        assert_eq!(
            nc_enumerate_guarded(13, 12).unwrap_err(),
            Error::GuardExceeded { n: 13, limit: 12 }
        );
    }

    #[test]
    fn order_examples() {
        assert!(p(2, "1|2").leq(&p(2, "1,2")).unwrap());
        assert!(!p(3, "1,3").leq(&p(3, "1,2|3")).unwrap());
        let q = p(6, "1,3|2|4,5,6");
        assert!(q.leq(&q).unwrap());
        assert!(p(6, "").leq(&q).unwrap());
        assert!(!q.leq(&p(6, "")).unwrap());
        assert_eq!(
            p(2, "1").leq(&p(3, "1")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn meet_examples() {
        assert_eq!(p(3, "1,2|3").meet(&p(3, "1|2,3")).unwrap(), p(3, "1|2|3"));
        let q = p(3, "1,3|2");
        assert_eq!(q.meet(&q).unwrap(), q);
        assert_eq!(q.meet(&p(3, "1,2,3")).unwrap(), q);
    }

    #[test]
    fn join_examples() {
        assert_eq!(p(3, "1,2").join(&p(3, "2,3")).unwrap(), p(3, "1,2,3"));
        assert_eq!(p(4, "1,3").join(&p(4, "2,4")).unwrap(), p(4, "1,2,3,4"));
        assert_eq!(p(4, "1").join(&p(4, "3")).unwrap(), p(4, "1|3"));
        assert_eq!(p(4, "").join(&p(4, "")).unwrap(), p(4, ""));
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(p(6, "1,3|2|4,5,6").kreweras().unwrap(), p(6, "1,2|3,6|4|5"));
        for n in 1..6 {
            assert_eq!(
                Partition::finest(n).kreweras().unwrap(),
                Partition::coarsest(n)
            );
        }
        assert_eq!(p(2, "1,2").kreweras().unwrap(), p(2, "1|2"));
        assert_eq!(p(3, "1").kreweras(), Err(Error::NotExhaustive(3)));
    }

    #[test]
    fn rotate_examples() {
        let q = p(6, "1,3|2|4,5,6");
        assert_eq!(q.rotate(1), p(6, "2,6|1|3,4,5"));
        assert_eq!(q.rotate(0), q);
        assert_eq!(q.rotate(1).rotate(-1), q);
        assert_eq!(q.rotate(6), q);
    }

    #[test]
    fn text_forms() {
        let q = p(6, "4,5,6|2|3,1");
        assert_eq!(q.to_string(), "1,3|2|4,5,6");
        assert_eq!(Partition::empty(3).to_string(), "{}");
        assert_eq!(
            serde_json::to_string(&q).unwrap(),
            r#"{"n":6,"blocks":[[1,3],[2],[4,5,6]]}"#
        );
        let back: Partition =
            serde_json::from_str(r#"{"n":6,"blocks":[[4,5,6],[2],[1,3]]}"#).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>(r#"{"n":4,"blocks":[[1,3],[2,4]]}"#).is_err());
        assert_eq!("1,3|2".parse::<Partition>().unwrap().n(), 3);
        assert_eq!(q.to_set_notation(), "{{1,3},{2},{4,5,6}}");
        assert_eq!(Partition::empty(2).to_set_notation(), "{}");
    }

    #[test]
    fn singletons_and_adjacencies() {
        let q = p(6, "1,3|2|4,5,6");
        assert!(q.is_singleton(2));
        assert!(!q.is_singleton(1));
        assert_eq!(
            (1..=6).filter(|&i| q.is_adjacency(i)).collect::<Vec<_>>(),
            vec![4, 5]
        );
    }
}
