//! The lattice of t-structures ordered by inclusion of aisles, its finite
//! window-bounded pieces, the lattice of equivalence classes and Hasse
//! diagram export.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::circle::Arc;
use crate::error::{Error, Result};
use crate::noncrossing::{check_guard, nc_enumerate_guarded, Partition};
use crate::tstructure::{DecorationLevel, EquivClass, TStructure};

/// Largest `n` accepted by [`equiv_lattice`].
pub const EQUIV_GUARD: usize = 8;

/// Largest element count accepted by [`hasse_export`].
pub const HASSE_GUARD: usize = 10_000;

fn check_same_n(s: &TStructure, t: &TStructure) -> Result<()> {
    if s.n() == t.n() {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            left: s.n(),
            right: t.n(),
        })
    }
}

/// Aisle inclusion: finer partition and smaller decoration in every interval.
pub fn ts_leq(s: &TStructure, t: &TStructure) -> Result<bool> {
    check_same_n(s, t)?;
    Ok(s.partition().leq(t.partition())? && s.levels().iter().zip(t.levels()).all(|(a, b)| a <= b))
}

/// `(P ∧ P', min{x, x'})`, whose aisle is the intersection of the two aisles.
pub fn ts_meet(s: &TStructure, t: &TStructure) -> Result<TStructure> {
    check_same_n(s, t)?;
    let levels = s
        .levels()
        .iter()
        .zip(t.levels())
        .map(|(a, b)| *a.min(b))
        .collect();
    let partition = s.partition().meet(t.partition())?;
    TStructure::from_levels(partition, levels)
        .map_err(|e| Error::Internal(format!("meet produced an incompatible decoration: {e}")))
}

/// `(P ∨ P', max{x, x'})`.
pub fn ts_join(s: &TStructure, t: &TStructure) -> Result<TStructure> {
    check_same_n(s, t)?;
    let levels = s
        .levels()
        .iter()
        .zip(t.levels())
        .map(|(a, b)| *a.max(b))
        .collect();
    let partition = s.partition().join(t.partition())?;
    TStructure::from_levels(partition, levels)
        .map_err(|e| Error::Internal(format!("join produced an incompatible decoration: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetReport {
    pub checked: usize,
    pub counterexamples: Vec<Arc>,
}

impl MeetReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Compares membership in the aisle of `s ∧ t` with membership in both aisles.
pub fn meet_is_intersection_check(
    s: &TStructure,
    t: &TStructure,
    samples: &[Arc],
) -> Result<MeetReport> {
    let meet = ts_meet(s, t)?;
    let counterexamples = samples
        .iter()
        .filter(|a| meet.aisle_contains(a) != (s.aisle_contains(a) && t.aisle_contains(a)))
        .copied()
        .collect();
    Ok(MeetReport {
        checked: samples.len(),
        counterexamples,
    })
}

/// Levels allowed for interval `i` of `p` with offsets in `[lo, hi]`.
pub(crate) fn allowed_levels(p: &Partition, i: usize, lo: i64, hi: i64) -> Vec<DecorationLevel> {
    let mut out = Vec::new();
    if p.is_singleton(i) {
        out.push(DecorationLevel::Bottom);
    }
    out.extend((lo..=hi).map(DecorationLevel::At));
    if p.is_adjacency(i) {
        out.push(DecorationLevel::Top);
    }
    out
}

/// Every t-structure with marked decorations of offset in `[lo, hi]`, plus
/// all allowed limit decorations.
pub fn ts_enumerate_window(n: usize, lo: i64, hi: i64, guard: usize) -> Result<Vec<TStructure>> {
    check_guard(n, guard)?;
    let mut out = Vec::new();
    for p in nc_enumerate_guarded(n, guard)? {
        let choices: Vec<Vec<DecorationLevel>> =
            (1..=n).map(|i| allowed_levels(&p, i, lo, hi)).collect();
        let mut idx = vec![0usize; n];
        'product: loop {
            let levels = idx.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
            out.push(TStructure::from_levels(p.clone(), levels)?);
            for pos in (0..n).rev() {
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    continue 'product;
                }
                idx[pos] = 0;
            }
            break;
        }
    }
    Ok(out)
}

/// Every equivalence class for `n`: partitions with a set of marked indices
/// containing all indices that are neither singletons nor adjacencies.
pub fn equiv_classes(n: usize) -> Result<Vec<EquivClass>> {
    check_guard(n, EQUIV_GUARD)?;
    let mut out = Vec::new();
    for p in nc_enumerate_guarded(n, EQUIV_GUARD)? {
        let free: Vec<usize> = (1..=n)
            .filter(|&i| p.is_singleton(i) || p.is_adjacency(i))
            .collect();
        let forced: Vec<usize> = (1..=n)
            .filter(|&i| !p.is_singleton(i) && !p.is_adjacency(i))
            .collect();
        for mask in 0u32..(1u32 << free.len()) {
            let mut z = forced.clone();
            z.extend(
                free.iter()
                    .enumerate()
                    .filter(|(b, _)| mask & (1 << b) != 0)
                    .map(|(_, &i)| i),
            );
            out.push(EquivClass::new(p.clone(), z)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Class order read off representatives: `c ≤ c'` iff `c ∧ c' = c`.
pub fn class_leq(c: &EquivClass, d: &EquivClass) -> Result<bool> {
    Ok(class_meet(c, d)? == *c)
}

pub fn class_meet(c: &EquivClass, d: &EquivClass) -> Result<EquivClass> {
    Ok(ts_meet(&c.representative(), &d.representative())?.equiv_class())
}

pub fn class_join(c: &EquivClass, d: &EquivClass) -> Result<EquivClass> {
    Ok(ts_join(&c.representative(), &d.representative())?.equiv_class())
}

/// The finite lattice of equivalence classes with its order matrix.
#[derive(Debug, Clone)]
pub struct EquivLattice {
    pub n: usize,
    pub classes: Vec<EquivClass>,
    leq: Vec<Vec<bool>>,
}

impl EquivLattice {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn index_of(&self, c: &EquivClass) -> Option<usize> {
        self.classes.binary_search(c).ok()
    }

    /// The unique maximum among `members`, if any.
    pub fn maximum_of(&self, members: &[usize]) -> Option<usize> {
        members
            .iter()
            .copied()
            .find(|&m| members.iter().all(|&o| self.leq(o, m)))
    }

    pub fn minimum_of(&self, members: &[usize]) -> Option<usize> {
        members
            .iter()
            .copied()
            .find(|&m| members.iter().all(|&o| self.leq(m, o)))
    }

    pub fn nondegenerate(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].is_nondegenerate())
            .collect()
    }
}

pub fn equiv_lattice(n: usize) -> Result<EquivLattice> {
    EquivLattice::from_classes(n, equiv_classes(n)?)
}

/// The non-degenerate classes only, one per partition.
pub fn nondeg_equiv_lattice(n: usize) -> Result<EquivLattice> {
    check_guard(n, EQUIV_GUARD)?;
    let classes = nc_enumerate_guarded(n, EQUIV_GUARD)?
        .map(|p| EquivClass::new(p, (1..=n).collect()))
        .collect::<Result<Vec<_>>>()?;
    EquivLattice::from_classes(n, classes)
}

impl EquivLattice {
    pub fn from_classes(n: usize, mut classes: Vec<EquivClass>) -> Result<Self> {
        classes.sort();
        let leq = classes
            .iter()
            .map(|c| {
                classes
                    .iter()
                    .map(|d| class_leq(c, d))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EquivLattice { n, classes, leq })
    }
}

/// Whether `class ↦ partition` is an order isomorphism from the non-degenerate
/// classes onto `NC_n`, compatible with meets and joins.
pub fn nondeg_equiv_iso_check(n: usize) -> Result<bool> {
    let lattice = nondeg_equiv_lattice(n)?;
    let nondeg = lattice.nondegenerate();
    let mut parts: Vec<Partition> = nondeg
        .iter()
        .map(|&i| lattice.classes[i].partition.clone())
        .collect();
    let mut nc: Vec<Partition> = nc_enumerate_guarded(n, EQUIV_GUARD)?.collect();
    parts.sort();
    nc.sort();
    if parts != nc {
        return Ok(false);
    }
    for &a in &nondeg {
        for &b in &nondeg {
            let (ca, cb) = (&lattice.classes[a], &lattice.classes[b]);
            if lattice.leq(a, b) != ca.partition.leq(&cb.partition)? {
                return Ok(false);
            }
            if class_meet(ca, cb)?.partition != ca.partition.meet(&cb.partition)? {
                return Ok(false);
            }
            if class_join(ca, cb)?.partition != ca.partition.join(&cb.partition)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Top and bottom of the non-degenerate classes with their boundedness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeClasses {
    pub top: EquivClass,
    pub bottom: EquivClass,
    pub top_bounded_above: bool,
    pub top_bounded_below: bool,
    pub bottom_bounded_above: bool,
    pub bottom_bounded_below: bool,
}

pub fn nondeg_extremes(n: usize) -> Result<ExtremeClasses> {
    let lattice = nondeg_equiv_lattice(n)?;
    let nondeg = lattice.nondegenerate();
    let missing = || Error::Internal("non-degenerate classes have no extremes".into());
    let top = lattice.classes[lattice.maximum_of(&nondeg).ok_or_else(missing)?].clone();
    let bottom = lattice.classes[lattice.minimum_of(&nondeg).ok_or_else(missing)?].clone();
    let (t, b) = (top.representative(), bottom.representative());
    Ok(ExtremeClasses {
        top_bounded_above: t.is_bounded_above(),
        top_bounded_below: t.is_bounded_below(),
        bottom_bounded_above: b.is_bounded_above(),
        bottom_bounded_below: b.is_bounded_below(),
        top,
        bottom,
    })
}

/// Covering relation of a finite poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseGraph {
    pub nodes: Vec<String>,
    /// `adjacency[i]` lists the elements covering `i`.
    pub adjacency: Vec<Vec<usize>>,
}

impl HasseGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn minimal(&self) -> Vec<usize> {
        let mut covered = vec![false; self.nodes.len()];
        for &j in self.adjacency.iter().flatten() {
            covered[j] = true;
        }
        (0..self.nodes.len()).filter(|&i| !covered[i]).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.adjacency[i].is_empty())
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out =
            String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n");
        for (i, label) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, ups) in self.adjacency.iter().enumerate() {
            for j in ups {
                let _ = writeln!(out, "  n{i} -> n{j};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Transitive reduction of `leq` on `labels`.
pub fn hasse_from_order(
    labels: Vec<String>,
    leq: impl Fn(usize, usize) -> Result<bool>,
) -> Result<HasseGraph> {
    let m = labels.len();
    if m > HASSE_GUARD {
        return Err(Error::GuardExceeded {
            n: m,
            limit: HASSE_GUARD,
        });
    }
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, row) in above.iter_mut().enumerate() {
        for j in 0..m {
            if i != j && leq(i, j)? {
                row.push(j);
            }
        }
    }
    let adjacency = (0..m)
        .map(|i| {
            above[i]
                .iter()
                .copied()
                .filter(|&j| {
                    !above[i]
                        .iter()
                        .any(|&k| k != j && above[k].binary_search(&j).is_ok())
                })
                .collect()
        })
        .collect();
    Ok(HasseGraph {
        nodes: labels,
        adjacency,
    })
}

/// Elements a Hasse diagram can be drawn for.
pub enum HasseInput<'a> {
    Partitions(&'a [Partition]),
    TStructures(&'a [TStructure]),
    Classes(&'a [EquivClass]),
}

pub fn hasse_export(input: HasseInput<'_>) -> Result<HasseGraph> {
    match input {
        HasseInput::Partitions(ps) => {
            hasse_from_order(ps.iter().map(ToString::to_string).collect(), |i, j| {
                ps[i].leq(&ps[j])
            })
        }
        HasseInput::TStructures(ts) => {
            hasse_from_order(ts.iter().map(ToString::to_string).collect(), |i, j| {
                ts_leq(&ts[i], &ts[j])
            })
        }
        HasseInput::Classes(cs) => {
            let labels = cs
                .iter()
                .map(|c| format!("{} Z={:?}", c.partition, c.z_indices))
                .collect();
            hasse_from_order(labels, |i, j| class_leq(&cs[i], &cs[j]))
        }
    }
}

/// Index of every element, for table-driven exhaustive checks.
pub fn index_map<T: std::hash::Hash + Eq + Clone>(items: &[T]) -> HashMap<T, usize> {
    items
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect()
}
