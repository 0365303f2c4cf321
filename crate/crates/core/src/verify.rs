//! The acceptance suite: one report per criterion, shared by the CLI
//! `verify` command and the `acceptance` test target.
//!
//! Every check is exact. Sample counts, seeds and windows are pinned below.

use std::fmt;
use std::hash::Hash;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arcs::{hom_dim, zigzag_cone, ArcObject, Triangle};
use crate::circle::{make_arc, Arc, CircleModel, CirclePoint, MarkedPoint};
use crate::error::Result;
use crate::lattice::{
    allowed_levels, equiv_classes, hasse_export, index_map, meet_is_intersection_check,
    nondeg_equiv_iso_check, nondeg_extremes, ts_enumerate_window, ts_join, ts_leq, ts_meet,
    HasseInput,
};
use crate::noncrossing::{
    catalan, nc_enumerate_guarded, nnc_count, nnc_enumerate_guarded, Partition,
};
use crate::oracle::{compare_with_classification, window_aisle_closure, ClosureMode, Window};
use crate::render::{render, RenderObject, RenderSpec};
use crate::thick::ThickSubcat;
use crate::tstructure::{
    aisle_generated, approx_triangle, coaisle_presentation, CoaislePresentation, DecorationLevel,
    TStructure,
};

/// Guard passed to the enumerators; every criterion stays below it.
const GUARD: usize = 12;
/// Random arc sets for the thick oracle and for aisle minimality.
pub const SEEDS: u64 = 200;
/// Radius of the thick oracle window.
pub const ORACLE_WINDOW: i64 = 6;
/// Random samples per `n` for orthogonality and approximation.
pub const SAMPLES_PER_N: u64 = 10_000;
/// Random pairs per `n` for the sampled meet check, each against
/// `SAMPLES_PER_N` random arcs.
pub const MEET_PAIRS_PER_N: u64 = 20;
/// Decoration offsets of the window-bounded enumeration.
pub const DECORATION_WINDOW: (i64, i64) = (-2, 2);
/// Arc offsets used as membership witnesses for that enumeration.
pub const WITNESS_WINDOW: (i64, i64) = (-4, 4);
pub const BASE_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {} [{verdict}] {}: {}",
            self.id, self.title, self.detail
        )
    }
}

/// Collects sub-check results into one report.
struct Checks {
    parts: Vec<String>,
    passed: bool,
}

impl Checks {
    fn new() -> Self {
        Self {
            parts: Vec::new(),
            passed: true,
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        self.parts
            .push(if ok { what } else { format!("FAILED {what}") });
        self.passed &= ok;
    }

    fn report(self, id: &str, title: &str, started: Instant) -> CriterionReport {
        CriterionReport {
            id: id.into(),
            title: title.into(),
            passed: self.passed,
            detail: format!(
                "{} ({:.1}s)",
                self.parts.join("; "),
                started.elapsed().as_secs_f64()
            ),
        }
    }
}

fn rng_for(stream: u64, index: u64) -> StdRng {
    StdRng::seed_from_u64(BASE_SEED ^ (stream << 40) ^ index)
}

// ---------------------------------------------------------------- tables

/// Meet, join and order of a finite lattice as index tables.
struct Tables {
    size: usize,
    meet: Vec<u32>,
    join: Vec<u32>,
    leq: Vec<bool>,
}

/// Meet indices, join indices and order bits of one table row.
type Row = (Vec<u32>, Vec<u32>, Vec<bool>);

fn build_tables<T, M, J, L>(items: &[T], meet: M, join: J, leq: L) -> Result<Option<Tables>>
where
    T: Hash + Eq + Clone + Sync,
    M: Fn(&T, &T) -> Result<T> + Sync,
    J: Fn(&T, &T) -> Result<T> + Sync,
    L: Fn(&T, &T) -> Result<bool> + Sync,
{
    let index = index_map(items);
    let size = items.len();
    let rows: Vec<Option<Row>> = items
        .par_iter()
        .map(|a| -> Result<Option<Row>> {
            let mut m = Vec::with_capacity(size);
            let mut j = Vec::with_capacity(size);
            let mut l = Vec::with_capacity(size);
            for b in items {
                // a result outside the family means the family is not closed
                let (Some(&mi), Some(&ji)) = (index.get(&meet(a, b)?), index.get(&join(a, b)?))
                else {
                    return Ok(None);
                };
                m.push(mi as u32);
                j.push(ji as u32);
                l.push(leq(a, b)?);
            }
            Ok(Some((m, j, l)))
        })
        .collect::<Result<_>>()?;
    let mut tables = Tables {
        size,
        meet: Vec::with_capacity(size * size),
        join: Vec::with_capacity(size * size),
        leq: Vec::with_capacity(size * size),
    };
    for row in rows {
        let Some((m, j, l)) = row else {
            return Ok(None);
        };
        tables.meet.extend(m);
        tables.join.extend(j);
        tables.leq.extend(l);
    }
    Ok(Some(tables))
}

impl Tables {
    fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    /// Idempotence, commutativity, absorption, associativity and agreement
    /// of both operations with the order. Together these make `meet` the
    /// greatest lower bound and `join` the least upper bound.
    fn lattice_axioms_hold(&self) -> bool {
        let s = self.size;
        let pairwise = (0..s).into_par_iter().all(|a| {
            (0..s).all(|b| {
                let (m, j) = (self.meet(a, b), self.join(a, b));
                (a != b || (m == a && j == a))
                    && m == self.meet(b, a)
                    && j == self.join(b, a)
                    && self.meet(a, j) == a
                    && self.join(a, m) == a
                    && self.leq(a, b) == (m == a)
                    && self.leq(a, b) == (j == b)
            })
        });
        pairwise
            && (0..s).into_par_iter().all(|a| {
                (0..s).all(|b| {
                    let (ab_m, ab_j) = (self.meet(a, b), self.join(a, b));
                    (0..s).all(|c| {
                        self.meet(ab_m, c) == self.meet(a, self.meet(b, c))
                            && self.join(ab_j, c) == self.join(a, self.join(b, c))
                    })
                })
            })
    }
}

fn partition_tables(parts: &[Partition]) -> Result<Option<Tables>> {
    build_tables(parts, |a, b| a.meet(b), |a, b| a.join(b), |a, b| a.leq(b))
}

fn ts_tables(all: &[TStructure]) -> Result<Option<Tables>> {
    build_tables(all, ts_meet, ts_join, ts_leq)
}

// ---------------------------------------------------------------- bitsets

/// Aisle membership of every arc of a fixed list, packed into words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Membership(Vec<u64>);

impl Membership {
    fn of(ts: &TStructure, arcs: &[Arc]) -> Self {
        let mut words = vec![0u64; arcs.len().div_ceil(64)];
        for (idx, a) in arcs.iter().enumerate() {
            if ts.aisle_contains(a) {
                words[idx / 64] |= 1 << (idx % 64);
            }
        }
        Membership(words)
    }

    fn and(&self, other: &Membership) -> Membership {
        Membership(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn subset_of(&self, other: &Membership) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

// ---------------------------------------------------------------- sampling

fn random_arc(rng: &mut StdRng, n: usize, radius: i64) -> Arc {
    loop {
        let p = MarkedPoint::new(rng.gen_range(1..=n), rng.gen_range(-radius..=radius));
        let q = MarkedPoint::new(rng.gen_range(1..=n), rng.gen_range(-radius..=radius));
        if let Some(a) = make_arc(p, q).arc() {
            return a;
        }
    }
}

fn random_ts(rng: &mut StdRng, partitions: &[Partition], radius: i64) -> TStructure {
    let p = partitions[rng.gen_range(0..partitions.len())].clone();
    let levels = (1..=p.n())
        .map(|i| {
            let choices = allowed_levels(&p, i, -radius, radius);
            choices[rng.gen_range(0..choices.len())]
        })
        .collect();
    TStructure::from_levels(p, levels).expect("allowed levels are compatible")
}

/// An arc with both endpoints in the pieces of one block, or `None` if
/// the sampler keeps hitting trivial pairs.
fn random_arc_in<F>(rng: &mut StdRng, blocks: &[Vec<usize>], offset: F) -> Option<Arc>
where
    F: Fn(&mut StdRng, usize) -> Option<i64>,
{
    for _ in 0..32 {
        let b = &blocks[rng.gen_range(0..blocks.len())];
        let i = b[rng.gen_range(0..b.len())];
        let j = b[rng.gen_range(0..b.len())];
        let (Some(k), Some(l)) = (offset(rng, i), offset(rng, j)) else {
            continue;
        };
        if let Some(a) = make_arc(MarkedPoint::new(i, k), MarkedPoint::new(j, l)).arc() {
            return Some(a);
        }
    }
    None
}

fn random_aisle_arc(rng: &mut StdRng, ts: &TStructure) -> Option<Arc> {
    random_arc_in(rng, ts.partition().blocks(), |rng, i| match ts.level(i) {
        DecorationLevel::Bottom => None,
        DecorationLevel::At(m) => Some(m - rng.gen_range(0..5)),
        DecorationLevel::Top => Some(rng.gen_range(-6..=6)),
    })
}

fn random_coaisle_arc(rng: &mut StdRng, co: &CoaislePresentation) -> Option<Arc> {
    random_arc_in(rng, co.partition.blocks(), |rng, i| {
        match co.bounds[i - 1] {
            CirclePoint::Limit(j) if j == i => Some(rng.gen_range(-6..=6)),
            CirclePoint::Limit(_) => None,
            CirclePoint::Marked(y) => Some(y.offset + rng.gen_range(0..5)),
        }
    })
}

// ---------------------------------------------------------------- criteria

pub fn criterion_1() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    let mut nnc = Vec::new();
    for n in 1..=8usize {
        let enumerated = nnc_enumerate_guarded(n, GUARD)?.count() as u128;
        nnc.push(enumerated.to_string());
        c.check(
            enumerated == nnc_count(n as u64),
            format!("|NNC_{n}| = {enumerated}"),
        );
    }
    let expected: [u128; 8] = [2, 5, 15, 51, 188, 731, 2950, 12235];
    c.check(
        (1..=8u64).map(nnc_count).eq(expected),
        format!("NNC counts {}", nnc.join(",")),
    );
    let mut nc_ok = true;
    for n in 1..=10usize {
        nc_ok &= nc_enumerate_guarded(n, GUARD)?.count() as u128 == catalan(n as u64);
    }
    c.check(nc_ok, "|NC_n| = Catalan(n) for n = 1..10");
    Ok(c.report("1", "counting", started))
}

pub fn criterion_2() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    let mut rotation = true;
    let mut separation = true;
    for n in 1..=8 {
        for p in nc_enumerate_guarded(n, GUARD)? {
            let k = p.kreweras()?;
            rotation &= k.kreweras()? == p.rotate(1);
            rotation &= k.kreweras_inverse()? == p;
            for b in p.blocks() {
                for (x, &i) in b.iter().enumerate() {
                    separation &= b[x + 1..].iter().all(|&j| !k.same_block(i, j));
                }
            }
        }
    }
    c.check(rotation, "K(K(P)) = rotate(P, 1) on NC_n, n <= 8");
    c.check(separation, "elements of one block are split by K, n <= 8");
    let mut reversing = true;
    for n in 1..=6 {
        let all: Vec<Partition> = nc_enumerate_guarded(n, GUARD)?.collect();
        let ks: Vec<Partition> = all.iter().map(Partition::kreweras).collect::<Result<_>>()?;
        for (p, kp) in all.iter().zip(&ks) {
            for (q, kq) in all.iter().zip(&ks) {
                reversing &= p.leq(q)? == kq.leq(kp)?;
            }
        }
    }
    c.check(reversing, "K order-reversing on all pairs, n <= 6");
    let example = Partition::parse_compact(6, "1,3|2|4,5,6")?.kreweras()?;
    c.check(
        example == Partition::parse_compact(6, "1,2|3,6|4|5")?,
        format!("K(1,3|2|4,5,6) = {example}"),
    );
    Ok(c.report("2", "Kreweras complement", started))
}

pub fn criterion_3() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    let results: Vec<(u64, bool, bool)> = (0..SEEDS)
        .into_par_iter()
        .map(|seed| -> Result<(u64, bool, bool)> {
            let mut rng = rng_for(3, seed);
            let n = 2 + (seed % 3) as usize;
            let count = rng.gen_range(1..=3);
            let arcs: Vec<Arc> = (0..count).map(|_| random_arc(&mut rng, n, 2)).collect();
            let r = compare_with_classification(
                &arcs,
                Window::new(ORACLE_WINDOW),
                n,
                ClosureMode::Thick,
            )?;
            let connectivity = r.connectivity_agrees == Some(true) && r.unsound.is_empty();
            Ok((seed, connectivity, r.missing.is_empty()))
        })
        .collect::<Result<_>>()?;
    let bad_conn: Vec<u64> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    let bad_margin: Vec<u64> = results.iter().filter(|r| !r.2).map(|r| r.0).collect();
    c.check(
        bad_conn.is_empty(),
        format!("{SEEDS} seeds, n in 2..4, W = {ORACLE_WINDOW}: connectivity and soundness, bad seeds {bad_conn:?}"),
    );
    c.check(
        bad_margin.is_empty(),
        format!("interior margin complete, bad seeds {bad_margin:?}"),
    );
    for n in 1..=5 {
        let all: Vec<Partition> = nnc_enumerate_guarded(n, GUARD)?.collect();
        let ok = partition_tables(&all)?.is_some_and(|t| t.lattice_axioms_hold());
        c.check(
            ok,
            format!("NNC_{n} lattice axioms ({} elements)", all.len()),
        );
    }
    Ok(c.report("3", "thick classification", started))
}

pub fn criterion_4() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    let (lo, hi) = DECORATION_WINDOW;
    for n in 2..=3 {
        let all = ts_enumerate_window(n, lo, hi, GUARD)?;
        let witnesses = CircleModel::new(n)?.window_arcs(WITNESS_WINDOW.0, WITNESS_WINDOW.1);
        let mut bits: Vec<Membership> = all
            .par_iter()
            .map(|ts| Membership::of(ts, &witnesses))
            .collect();
        bits.sort_unstable();
        bits.dedup();
        c.check(
            bits.len() == all.len(),
            format!(
                "n = {n}: {} t-structures, {} distinct aisles",
                all.len(),
                bits.len()
            ),
        );
    }
    let enumerations: Vec<Vec<TStructure>> = (2..=3)
        .map(|n| ts_enumerate_window(n, lo, hi, GUARD))
        .collect::<Result<_>>()?;
    let bad: Vec<u64> = (0..SEEDS)
        .into_par_iter()
        .filter_map(|seed| {
            let mut rng = rng_for(4, seed);
            let n = 2 + (seed % 2) as usize;
            let count = rng.gen_range(1..=3);
            let arcs: Vec<Arc> = (0..count).map(|_| random_arc(&mut rng, n, 2)).collect();
            let g = aisle_generated(&arcs, n);
            let contains_all = |t: &TStructure| arcs.iter().all(|a| t.aisle_contains(a));
            let family = &enumerations[n - 2];
            let minimal = contains_all(&g)
                && family.contains(&g)
                && family
                    .iter()
                    .filter(|t| contains_all(t))
                    .all(|t| ts_leq(&g, t).unwrap_or(false));
            (!minimal).then_some(seed)
        })
        .collect();
    c.check(
        bad.is_empty(),
        format!("aisle_generated is the minimum on {SEEDS} seeds, bad seeds {bad:?}"),
    );
    Ok(c.report("4", "t-structure classification", started))
}

#[derive(Default)]
struct ApproxTally {
    hom_pairs: u64,
    hom_violations: u64,
    triangles: u64,
    z_outside_aisle: u64,
    w_outside_coaisle: u64,
    parallel_cone: u64,
    containment: u64,
    zigzag: u64,
    degenerate: u64,
    errors: u64,
}

impl ApproxTally {
    fn merge(mut self, o: ApproxTally) -> ApproxTally {
        self.hom_pairs += o.hom_pairs;
        self.hom_violations += o.hom_violations;
        self.triangles += o.triangles;
        self.z_outside_aisle += o.z_outside_aisle;
        self.w_outside_coaisle += o.w_outside_coaisle;
        self.parallel_cone += o.parallel_cone;
        self.containment += o.containment;
        self.zigzag += o.zigzag;
        self.degenerate += o.degenerate;
        self.errors += o.errors;
        self
    }

    fn violations(&self) -> u64 {
        self.hom_violations
            + self.z_outside_aisle
            + self.w_outside_coaisle
            + self.parallel_cone
            + self.containment
            + self.zigzag
            + self.degenerate
            + self.errors
    }
}

fn approx_sample(rng: &mut StdRng, partitions: &[Partition]) -> ApproxTally {
    let mut tally = ApproxTally::default();
    let ts = random_ts(rng, partitions, 3);
    let co = coaisle_presentation(&ts);
    if let (Some(a), Some(b)) = (random_aisle_arc(rng, &ts), random_coaisle_arc(rng, &co)) {
        tally.hom_pairs += 1;
        if !ts.aisle_contains(&a) || !co.contains(&b) || hom_dim(&a, &b) != 0 {
            tally.hom_violations += 1;
        }
    }
    let t = random_arc(rng, ts.n(), 6);
    let Ok(tri) = approx_triangle(&ts, &t) else {
        tally.errors += 1;
        return tally;
    };
    tally.triangles += 1;
    let z = tri.first.summands();
    let w = tri.last.summands();
    tally.z_outside_aisle += u64::from(!z.iter().all(|a| ts.aisle_contains(a)));
    tally.w_outside_coaisle += u64::from(!w.iter().all(|a| co.contains(a)));
    let shifted: Vec<Arc> = z.iter().map(|a| a.suspend(1)).collect();
    let pairwise = z
        .iter()
        .enumerate()
        .all(|(i, a)| z[i + 1..].iter().all(|b| !a.crosses(b)));
    tally.parallel_cone += u64::from(!(pairwise && shifted.iter().all(|s| s.crosses(&t))));
    tally.containment += u64::from(!tri.endpoint_containment());
    let zig_ok = zigzag_cone(&t, &shifted).is_ok_and(|zz| zz.middle == tri.last);
    tally.zigzag += u64::from(!zig_ok);
    let single = ArcObject::single(t);
    let in_aisle = ts.aisle_contains(&t);
    let in_coaisle = co.contains(&t);
    let aisle_shape = tri.first == single && tri.last.is_zero();
    let coaisle_shape = tri.first.is_zero() && tri.last == single;
    tally.degenerate += u64::from(in_aisle != aisle_shape || in_coaisle != coaisle_shape);
    tally
}

pub fn criterion_5() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    for n in 2..=6usize {
        let partitions: Vec<Partition> = nc_enumerate_guarded(n, GUARD)?.collect();
        let tally = (0..SAMPLES_PER_N)
            .into_par_iter()
            .map(|idx| approx_sample(&mut rng_for(50 + n as u64, idx), &partitions))
            .reduce(ApproxTally::default, ApproxTally::merge);
        c.check(
            tally.violations() == 0,
            format!(
                "n = {n}: {} Hom pairs ({} nonzero), {} triangles (Z {}, W {}, cone {}, containment {}, zig-zag {}, degenerate {}, errors {})",
                tally.hom_pairs,
                tally.hom_violations,
                tally.triangles,
                tally.z_outside_aisle,
                tally.w_outside_coaisle,
                tally.parallel_cone,
                tally.containment,
                tally.zigzag,
                tally.degenerate,
                tally.errors
            ),
        );
    }
    Ok(c.report("5", "orthogonality and approximation", started))
}

pub fn criterion_6() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    let (lo, hi) = DECORATION_WINDOW;
    for n in 2..=3 {
        let all = ts_enumerate_window(n, lo, hi, GUARD)?;
        let witnesses = CircleModel::new(n)?.window_arcs(WITNESS_WINDOW.0, WITNESS_WINDOW.1);
        let bits: Vec<Membership> = all
            .par_iter()
            .map(|ts| Membership::of(ts, &witnesses))
            .collect();
        let Some(tables) = ts_tables(&all)? else {
            c.check(
                false,
                format!("n = {n}: meet or join left the window enumeration"),
            );
            continue;
        };
        let size = all.len();
        let meet_ok = (0..size)
            .into_par_iter()
            .all(|a| (0..size).all(|b| bits[tables.meet(a, b)] == bits[a].and(&bits[b])));
        c.check(
            meet_ok,
            format!(
                "n = {n}: meet is intersection on {} pairs x {} arcs",
                size * size,
                witnesses.len()
            ),
        );
        let order_ok = (0..size)
            .into_par_iter()
            .all(|a| (0..size).all(|b| tables.leq(a, b) == bits[a].subset_of(&bits[b])));
        c.check(order_ok, format!("n = {n}: order is aisle inclusion"));
        c.check(
            tables.lattice_axioms_hold(),
            format!("n = {n}: lattice axioms on {size} t-structures"),
        );
    }
    for n in 2..=6usize {
        let partitions: Vec<Partition> = nc_enumerate_guarded(n, GUARD)?.collect();
        let mut counterexamples = 0;
        let mut checked = 0;
        for pair in 0..MEET_PAIRS_PER_N {
            let mut rng = rng_for(60 + n as u64, pair);
            let s = random_ts(&mut rng, &partitions, 3);
            let t = random_ts(&mut rng, &partitions, 3);
            let arcs: Vec<Arc> = (0..SAMPLES_PER_N)
                .map(|_| random_arc(&mut rng, n, 6))
                .collect();
            let report = meet_is_intersection_check(&s, &t, &arcs)?;
            counterexamples += report.counterexamples.len();
            checked += report.checked;
        }
        c.check(
            counterexamples == 0,
            format!("n = {n}: {checked} random arcs, {counterexamples} counterexamples"),
        );
    }
    Ok(c.report("6", "lattice of t-structures", started))
}

/// Order isomorphism with `NC_n` and absence of bounded t-structures.
pub fn criterion_7a() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    for n in 2..=6 {
        c.check(
            nondeg_equiv_iso_check(n)?,
            format!("n = {n}: non-degenerate classes ~ NC_{n}"),
        );
    }
    let mut classes = 0;
    let mut bounded = 0;
    for n in 2..=5 {
        for class in equiv_classes(n)? {
            let ts = class.representative();
            classes += 1;
            bounded += usize::from(ts.is_bounded_above() && ts.is_bounded_below());
        }
    }
    c.check(
        bounded == 0,
        format!("{classes} classes for n = 2..5, {bounded} bounded"),
    );
    Ok(c.report("7a", "equivalence classes", started))
}

/// The stated orientation: top bounded below, bottom bounded above.
pub fn criterion_7b() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    for n in 2..=5 {
        let e = nondeg_extremes(n)?;
        c.check(
            e.top_bounded_below && e.bottom_bounded_above,
            format!(
                "n = {n}: top {} is bounded {}, bottom {} is bounded {}",
                e.top.partition,
                if e.top_bounded_below {
                    "below"
                } else {
                    "above"
                },
                e.bottom.partition,
                if e.bottom_bounded_above {
                    "above"
                } else {
                    "below"
                },
            ),
        );
    }
    Ok(c.report("7b", "extremes of the class lattice", started))
}

fn round_trips<T>(value: &T) -> bool
where
    T: Serialize + for<'de> Deserialize<'de> + PartialEq,
{
    let Ok(first) = serde_json::to_string(value) else {
        return false;
    };
    let Ok(back) = serde_json::from_str::<T>(&first) else {
        return false;
    };
    back == *value && serde_json::to_string(&back).is_ok_and(|second| second == first)
}

/// In-process half of the determinism criterion: JSON round trips of every
/// public type and byte-identical renders.
pub fn criterion_8_library() -> Result<CriterionReport> {
    let started = Instant::now();
    let mut c = Checks::new();
    let ts: TStructure = "1,3|2|4,5,6; 1:0,a2,3:0,4:0,a6,6:0".parse()?;
    let p = Partition::parse_compact(6, "1,3|2|4,5,6")?;
    let arc: Arc = "[1:2,2:3]".parse()?;
    let tri: Triangle = approx_triangle(&"1,2; 1:0,2:0".parse()?, &arc)?;
    let nc3: Vec<Partition> = nc_enumerate_guarded(3, GUARD)?.collect();
    let hasse = hasse_export(HasseInput::Partitions(&nc3))?;
    let closure = window_aisle_closure(&[arc], Window::new(4));
    let all_round_trip = round_trips(&ts)
        && round_trips(&p)
        && round_trips(&arc)
        && round_trips(&tri)
        && round_trips(&ThickSubcat::new(p.clone()))
        && round_trips(&ts.equiv_class())
        && round_trips(&coaisle_presentation(&ts))
        && round_trips(&hasse)
        && round_trips(&closure)
        && round_trips(&CirclePoint::Limit(3));
    c.check(all_round_trip, "JSON round trips for all public types");
    let spec = RenderSpec::default();
    let thick = ThickSubcat::new(p);
    let objects = [
        RenderObject::Aisle(&ts),
        RenderObject::Coaisle(&ts),
        RenderObject::Thick(&thick),
        RenderObject::Arcs { n: 2, arcs: &[arc] },
    ];
    let svg_stable = objects
        .iter()
        .all(|o| render(o, &spec).ok() == render(o, &spec).ok() && render(o, &spec).is_ok());
    c.check(svg_stable, "SVG bytes identical across renders");
    c.check(
        hasse.to_dot() == hasse_export(HasseInput::Partitions(&nc3))?.to_dot(),
        "DOT bytes identical",
    );
    Ok(c.report("8", "determinism and round trips (library)", started))
}

pub type Criterion = fn() -> Result<CriterionReport>;

/// Every criterion with its id, in order.
pub const CRITERIA: [(&str, Criterion); 9] = [
    ("1", criterion_1),
    ("2", criterion_2),
    ("3", criterion_3),
    ("4", criterion_4),
    ("5", criterion_5),
    ("6", criterion_6),
    ("7a", criterion_7a),
    ("7b", criterion_7b),
    ("8", criterion_8_library),
];

/// Runs criteria 1-7 and the in-process half of 8, in order.
pub fn run_all() -> Result<Vec<CriterionReport>> {
    CRITERIA.iter().map(|(_, f)| f()).collect()
}
