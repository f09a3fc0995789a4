mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use radiolab::levels::candidate_centers;
use radiolab::perm::Permutation;
use radiolab::{
    canonical_labeling, cartesian_product, check_theorem2, decompose, distances, exact_radio_number,
    greedy_min_labeling, lower_bound, verify_radio, CenterStrategy, Graph, Labeling, Ordering,
};

use common::*;

/// A connected graph on `2..=max_p` vertices together with its edge list.
fn connected_graph(max_p: usize) -> impl Strategy<Value = (Graph, Vec<(usize, usize)>)> {
    (1..=max_p, any::<u64>(), 0.0f64..0.7).prop_map(|(p, seed, density)| {
        let mut rng = StdRng::seed_from_u64(seed);
        let edges = random_connected(&mut rng, p, density);
        (Graph::new(p, edges.iter().copied()).unwrap(), edges)
    })
}

fn graph_and_order(max_p: usize) -> impl Strategy<Value = (Graph, Vec<(usize, usize)>, Vec<usize>)> {
    connected_graph(max_p).prop_flat_map(|(g, e)| {
        let p = g.order();
        (Just(g), Just(e), Just((0..p).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_match_floyd((g, edges) in connected_graph(14)) {
        let dm = distances(&g);
        let d = floyd(g.order(), &edges);
        for (u, row) in d.iter().enumerate() {
            prop_assert_eq!(dm.row(u), &row[..]);
        }
        prop_assert_eq!(dm.diameter(), diameter(&d));
    }

    #[test]
    fn verifier_matches_oracle((g, edges) in connected_graph(9), raw in prop::collection::vec(0u64..30, 9)) {
        let labels = raw[..g.order()].to_vec();
        let dm = distances(&g);
        let rep = verify_radio(&g, &dm, &Labeling::new(labels.clone())).unwrap();
        let got: Vec<_> = rep.violations.iter().map(|v| (v.u, v.v)).collect();
        prop_assert_eq!(got, violations(&floyd(g.order(), &edges), &labels));
    }

    #[test]
    fn product_distance_is_sum_of_factor_distances(
        (g, _) in connected_graph(5),
        (h, _) in connected_graph(5),
    ) {
        let gh = cartesian_product(&g, &h);
        let (dg, dh, dgh) = (distances(&g), distances(&h), distances(&gh));
        for a in 0..gh.order() {
            for b in 0..gh.order() {
                let (ai, aj) = (a / h.order(), a % h.order());
                let (bi, bj) = (b / h.order(), b % h.order());
                prop_assert_eq!(dgh.get(a, b), dg.get(ai, bi) + dh.get(aj, bj));
            }
        }
        prop_assert_eq!(dgh.diameter(), dg.diameter() + dh.diameter());
    }

    #[test]
    fn greedy_is_radio_and_follows_the_order((g, edges, seq) in graph_and_order(9)) {
        let dm = distances(&g);
        let ord = Ordering::new(seq.clone(), g.order()).unwrap();
        let lab = greedy_min_labeling(&g, &dm, &ord);
        let d = floyd(g.order(), &edges);
        prop_assert!(is_radio(&d, lab.labels()));
        prop_assert_eq!(lab.labels().to_vec(), least_labels_for_order(&d, &seq));
    }

    #[test]
    fn canonical_labeling_meets_the_bound_when_it_is_radio((g, _, seq) in graph_and_order(8)) {
        let dm = distances(&g);
        let ord = Ordering::new(seq, g.order()).unwrap();
        for center in candidate_centers(&g, CenterStrategy::Balls).unwrap() {
            let dec = decompose(&g, &dm, &center).unwrap();
            let Ok(lab) = canonical_labeling(&g, &dm, &dec, &ord, &[]) else { continue };
            let rep = check_theorem2(&g, &dm, &dec, &lab).unwrap();
            prop_assert!(rep.cond_c_failures.is_empty());
            // the span telescopes to the bound exactly when (a) and (b) hold
            if rep.cond_a_failures.is_empty() && rep.cond_b_ok {
                prop_assert_eq!(lab.span() as i64, lower_bound(&g, &dm, &dec).bound);
            }
            if rep.radio_valid {
                prop_assert!(lab.span() as i64 >= lower_bound(&g, &dm, &dec).bound);
            }
        }
    }

    #[test]
    fn permutation_group_laws(
        a in Just((1..=10usize).collect::<Vec<_>>()).prop_shuffle(),
        b in Just((1..=10usize).collect::<Vec<_>>()).prop_shuffle(),
        e in -30i64..30,
        f in -30i64..30,
    ) {
        let (a, b) = (Permutation::from_one_line(&a).unwrap(), Permutation::from_one_line(&b).unwrap());
        for j in 1..=10 {
            prop_assert_eq!(a.compose(&b).apply(j), a.apply(b.apply(j)));
            prop_assert_eq!(a.pow(e + f).apply(j), a.pow(e).apply(a.pow(f).apply(j)));
            prop_assert_eq!(a.inverse().apply(a.apply(j)), j);
        }
        prop_assert_eq!(a.pow(a.order() as i64), Permutation::identity(10));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn exact_matches_brute_force_and_dominates_bounds((g, edges) in connected_graph(7)) {
        let dm = distances(&g);
        let res = exact_radio_number(&g, &dm, radiolab::search::DEFAULT_BUDGET);
        prop_assert!(res.is_proved());
        prop_assert_eq!(res.radio_number, brute_force_rn(g.order(), &edges));
        prop_assert!(is_radio(&floyd(g.order(), &edges), res.witness.labels()));
        let d = floyd(g.order(), &edges);
        for c in candidate_centers(&g, CenterStrategy::Exhaustive { max_size: 3 }).unwrap() {
            prop_assert!(level_bound(&d, &c) <= res.radio_number as i64);
        }
    }

    #[test]
    fn greedy_is_least_for_its_order((g, edges, seq) in graph_and_order(6)) {
        let dm = distances(&g);
        let lab = greedy_min_labeling(&g, &dm, &Ordering::new(seq.clone(), g.order()).unwrap());
        let d = floyd(g.order(), &edges);
        prop_assert_eq!(min_span_for_order(&d, &seq, lab.span()), Some(lab.span()));
    }
}
