use cluster_lattice::lattice::{class_join, class_meet};
use cluster_lattice::oracle::{window_closure, ClosureMode, Window};
use cluster_lattice::{
    aisle_generated, approx_triangle, coaisle_contains, hom_dim, make_arc, nc_enumerate,
    nnc_enumerate, thick_generated, ts_join, ts_leq, ts_meet, Arc, DecorationLevel, MarkedPoint,
    Partition, TStructure, ThickSubcat,
};
use proptest::prelude::*;
use proptest::sample::select;

fn point(n: usize, r: i64) -> impl Strategy<Value = MarkedPoint> {
    (1..=n, -r..=r).prop_map(|(i, k)| MarkedPoint::new(i, k))
}

fn arc(n: usize, r: i64) -> impl Strategy<Value = Arc> {
    (point(n, r), point(n, r)).prop_filter_map("trivial arc", |(p, q)| make_arc(p, q).arc())
}

fn arcs(n: usize, r: i64, max: usize) -> impl Strategy<Value = Vec<Arc>> {
    prop::collection::vec(arc(n, r), 0..=max)
}

fn nc(n: usize) -> impl Strategy<Value = Partition> {
    select(nc_enumerate(n).unwrap().collect::<Vec<_>>())
}

fn nnc(n: usize) -> impl Strategy<Value = Partition> {
    select(nnc_enumerate(n).unwrap().collect::<Vec<_>>())
}

/// Exhaustive partition with a valid decoration. `choice` 0 and 1 pick a
/// limit level where the partition allows one, anything else a marked level.
fn tstructure(n: usize) -> impl Strategy<Value = TStructure> {
    (nc(n), prop::collection::vec((0u8..6, -3i64..=3), n)).prop_map(move |(p, picks)| {
        let levels = (1..=n)
            .zip(picks)
            .map(|(i, (choice, k))| match choice {
                0 if p.is_singleton(i) => DecorationLevel::Bottom,
                1 if p.is_adjacency(i) => DecorationLevel::Top,
                _ => DecorationLevel::At(k),
            })
            .collect();
        TStructure::from_levels(p, levels).unwrap()
    })
}

fn with_n<S: Strategy>(f: impl Fn(usize) -> S) -> impl Strategy<Value = (usize, S::Value)> {
    (2usize..=6).prop_flat_map(move |n| (Just(n), f(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kreweras_join_formula_matches_closure((_n, (p, q)) in with_n(|n| (nc(n), nc(n)))) {
        prop_assert_eq!(p.join(&q).unwrap(), p.join_via_kreweras(&q).unwrap());
    }

    #[test]
    fn kreweras_inverse_undoes_complement((_n, p) in with_n(nc)) {
        prop_assert_eq!(p.kreweras().unwrap().kreweras_inverse().unwrap(), p.clone());
        prop_assert_eq!(p.kreweras_inverse().unwrap().kreweras().unwrap(), p);
    }

    #[test]
    fn nnc_meet_and_join_bound_their_arguments((_n, (p, q)) in with_n(|n| (nnc(n), nnc(n)))) {
        let (m, j) = (p.meet(&q).unwrap(), p.join(&q).unwrap());
        prop_assert!(m.leq(&p).unwrap() && m.leq(&q).unwrap());
        prop_assert!(p.leq(&j).unwrap() && q.leq(&j).unwrap());
    }

    #[test]
    fn thick_generated_is_least((n, (seed, p)) in with_n(|n| (arcs(n, 4, 4), nnc(n)))) {
        let t = thick_generated(&seed, n);
        prop_assert!(seed.iter().all(|a| t.contains(a)));
        let other = ThickSubcat::new(p);
        if seed.iter().all(|a| other.contains(a)) {
            prop_assert!(t.partition.leq(&other.partition).unwrap());
        }
    }

    #[test]
    fn thick_subcats_are_shift_closed((_n, (p, a)) in with_n(|n| (nnc(n), arc(n, 4)))) {
        let t = ThickSubcat::new(p);
        prop_assert_eq!(t.contains(&a), t.contains(&a.suspend(1)));
    }

    #[test]
    fn aisles_are_suspension_closed((_n, (ts, a)) in with_n(|n| (tstructure(n), arc(n, 5)))) {
        if ts.aisle_contains(&a) {
            prop_assert!(ts.aisle_contains(&a.suspend(1)));
        }
        if coaisle_contains(&ts, &a) {
            prop_assert!(coaisle_contains(&ts, &a.suspend(-1)));
        }
    }

    #[test]
    fn suspension_is_equivariant((_n, (ts, a, m)) in with_n(|n| (tstructure(n), arc(n, 4), -3i64..=3))) {
        prop_assert_eq!(ts.aisle_contains(&a), ts.suspend(m).aisle_contains(&a.suspend(m)));
    }

    #[test]
    fn aisle_and_coaisle_are_orthogonal(
        (_n, (ts, x, y)) in with_n(|n| (tstructure(n), arc(n, 5), arc(n, 5)))
    ) {
        if ts.aisle_contains(&x) && coaisle_contains(&ts, &y) {
            prop_assert_eq!(hom_dim(&x, &y), 0);
        }
    }

    #[test]
    fn approximation_pieces_land_in_aisle_and_coaisle(
        (_n, (ts, t)) in with_n(|n| (tstructure(n), arc(n, 5)))
    ) {
        let tri = approx_triangle(&ts, &t).unwrap();
        prop_assert!(tri.first.summands().iter().all(|z| ts.aisle_contains(z)));
        prop_assert!(tri.last.summands().iter().all(|w| coaisle_contains(&ts, w)));
    }

    #[test]
    fn aisle_generated_contains_its_input((n, seed) in with_n(|n| arcs(n, 4, 4))) {
        let ts = aisle_generated(&seed, n);
        prop_assert!(seed.iter().all(|a| ts.aisle_contains(a)));
    }

    #[test]
    fn meet_and_join_are_bounds((_n, (s, t)) in with_n(|n| (tstructure(n), tstructure(n)))) {
        let (m, j) = (ts_meet(&s, &t).unwrap(), ts_join(&s, &t).unwrap());
        prop_assert!(ts_leq(&m, &s).unwrap() && ts_leq(&m, &t).unwrap());
        prop_assert!(ts_leq(&s, &j).unwrap() && ts_leq(&t, &j).unwrap());
    }

    #[test]
    fn class_operations_ignore_representatives(
        (_n, (s, t)) in with_n(|n| (tstructure(n), tstructure(n)))
    ) {
        let (c, d) = (s.equiv_class(), t.equiv_class());
        prop_assert_eq!(ts_meet(&s, &t).unwrap().equiv_class(), class_meet(&c, &d).unwrap());
        prop_assert_eq!(ts_join(&s, &t).unwrap().equiv_class(), class_join(&c, &d).unwrap());
    }

    #[test]
    fn partition_and_tstructure_json_round_trip((_n, ts) in with_n(tstructure)) {
        let s = serde_json::to_string(&ts).unwrap();
        let back: TStructure = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(&back, &ts);
        prop_assert_eq!(back.to_string().parse::<TStructure>().unwrap(), ts);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn window_closure_ignores_seed_order(
        (_n, (seed, thick)) in (2usize..=3).prop_flat_map(|n| (Just(n), (arcs(n, 2, 3), any::<bool>())))
    ) {
        let mode = if thick { ClosureMode::Thick } else { ClosureMode::Aisle };
        let w = Window::new(4);
        let forward = window_closure(&seed, w, mode);
        let mut reversed = seed.clone();
        reversed.reverse();
        prop_assert_eq!(&forward, &window_closure(&reversed, w, mode));
        let again = window_closure(&forward.arcs, w, mode);
        prop_assert_eq!(&again.arcs, &forward.arcs);
    }
}
