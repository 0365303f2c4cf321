//! Brute-force closures on a finite window of offsets.
//!
//! These know nothing about partitions or decorations. They saturate a set
//! of arcs under shifts and under the chords of crossing pairs, and serve as
//! an independent check of the closed-form classification.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::circle::{make_arc, Arc, CircleModel};
use crate::error::Result;
use crate::noncrossing::{Partition, UnionFind};
use crate::thick::{thick_generated, ThickSubcat};
use crate::tstructure::aisle_generated;

/// Arcs with every endpoint offset in `[-radius, radius]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub radius: i64,
}

impl Window {
    pub fn new(radius: i64) -> Self {
        Self { radius }
    }

    pub fn admits(&self, a: &Arc) -> bool {
        a.max_abs_offset() <= self.radius
    }

    /// Admitted with `margin` to spare on both sides.
    pub fn admits_inside(&self, a: &Arc, margin: i64) -> bool {
        a.max_abs_offset() <= self.radius - margin
    }

    pub fn arcs(&self, model: CircleModel) -> Vec<Arc> {
        model.window_arcs(-self.radius, self.radius)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub arcs: Vec<Arc>,
    pub saturated_at_boundary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    /// Shifts in both directions.
    Thick,
    /// Clockwise shifts only.
    Aisle,
}

/// All non-trivial chords on the four endpoints of a crossing pair.
fn chords(a: &Arc, b: &Arc) -> Vec<Arc> {
    let pts = [a.lo(), a.hi(), b.lo(), b.hi()];
    let mut out = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            if let Some(c) = make_arc(pts[i], pts[j]).arc() {
                out.push(c);
            }
        }
    }
    out
}

/// Least fixpoint inside `w`, processed through a FIFO queue in the order
/// the arcs are discovered.
pub fn window_closure(seed: &[Arc], w: Window, mode: ClosureMode) -> ClosureReport {
    let mut members: BTreeSet<Arc> = BTreeSet::new();
    let mut order: Vec<Arc> = Vec::new();
    let mut queue: VecDeque<Arc> = VecDeque::new();
    let mut saturated = false;

    for a in seed {
        if !w.admits(a) {
            saturated = true;
        } else if members.insert(*a) {
            queue.push_back(*a);
        }
    }

    while let Some(a) = queue.pop_front() {
        let shifts: &[i64] = match mode {
            ClosureMode::Thick => &[1, -1],
            ClosureMode::Aisle => &[1],
        };
        let mut found: Vec<Arc> = shifts.iter().map(|&m| a.suspend(m)).collect();
        for b in &order {
            if a.crosses(b) {
                found.extend(chords(&a, b));
            }
        }
        order.push(a);
        for c in found {
            if !w.admits(&c) {
                saturated = true;
            } else if members.insert(c) {
                queue.push_back(c);
            }
        }
    }

    ClosureReport {
        arcs: members.into_iter().collect(),
        saturated_at_boundary: saturated,
    }
}

pub fn window_thick_closure(seed: &[Arc], w: Window) -> ClosureReport {
    window_closure(seed, w, ClosureMode::Thick)
}

pub fn window_aisle_closure(seed: &[Arc], w: Window) -> ClosureReport {
    window_closure(seed, w, ClosureMode::Aisle)
}

/// Blocks of intervals joined by the arcs of a closure, without any
/// crossing merge. Fails if the blocks cross, which a saturated closure
/// never produces.
pub fn interval_connectivity(arcs: &[Arc], n: usize) -> Result<Partition> {
    let mut uf = UnionFind::new(n + 1);
    let mut support = vec![false; n + 1];
    for a in arcs {
        let (i, j) = a.intervals();
        support[i] = true;
        support[j] = true;
        uf.union(i, j);
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for e in (1..=n).filter(|&e| support[e]) {
        let r = uf.find(e);
        groups[r].push(e);
    }
    Partition::new(n, groups.into_iter().filter(|g| !g.is_empty()).collect())
}

/// Agreement between a window closure and the classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub closure_size: usize,
    pub saturated_at_boundary: bool,
    /// Closure arcs outside the classified subcategory.
    pub unsound: Vec<Arc>,
    /// Classified arcs inside the margin that the closure missed.
    pub missing: Vec<Arc>,
    /// Thick mode: whether the closure's interval connectivity equals the
    /// generated partition.
    pub connectivity_agrees: Option<bool>,
}

impl ComparisonReport {
    pub fn agrees(&self) -> bool {
        self.unsound.is_empty()
            && self.missing.is_empty()
            && self.connectivity_agrees != Some(false)
    }
}

type Membership = Box<dyn Fn(&Arc) -> bool>;

/// Window margin excluded from the completeness check.
pub const MARGIN: i64 = 2;

pub fn compare_with_classification(
    seed: &[Arc],
    w: Window,
    n: usize,
    mode: ClosureMode,
) -> Result<ComparisonReport> {
    let model = CircleModel::new(n)?;
    for a in seed {
        model.check_arc(a)?;
    }
    let report = window_closure(seed, w, mode);
    let (member, connectivity): (Membership, Option<bool>) = match mode {
        ClosureMode::Thick => {
            let t: ThickSubcat = thick_generated(seed, n);
            let agrees = interval_connectivity(&report.arcs, n).is_ok_and(|p| p == t.partition);
            (Box::new(move |a: &Arc| t.contains(a)), Some(agrees))
        }
        ClosureMode::Aisle => {
            let ts = aisle_generated(seed, n);
            (Box::new(move |a: &Arc| ts.aisle_contains(a)), None)
        }
    };
    let unsound = report.arcs.iter().filter(|a| !member(a)).copied().collect();
    let missing = w
        .arcs(model)
        .into_iter()
        .filter(|a| {
            w.admits_inside(a, MARGIN) && member(a) && report.arcs.binary_search(a).is_err()
        })
        .collect();
    Ok(ComparisonReport {
        closure_size: report.arcs.len(),
        saturated_at_boundary: report.saturated_at_boundary,
        unsound,
        missing,
        connectivity_agrees: connectivity,
    })
}
