mod common;

use common::{connected_graph, connected_unweighted, floyd_warshall, oracle_diameter, unweighted_graph};
use diamapx_core::bench::{run_method, MethodParams};
use diamapx_core::estimators::{
    aingworth, approx_diam_dense, approx_diam_sparse, default_dense_s, large_diameter_sampling, rv_estimate,
    rv_estimate_weighted, sparse_driver, three_halves_floor, two_approx, two_thirds_ceil,
    undirected_four_fifths, verify_witness,
};
use diamapx_core::{Dist, EstimateError, Graph, Method};
use proptest::prelude::*;

fn diameter(g: &Graph) -> Dist {
    oracle_diameter(&floyd_warshall(g)).expect("strongly connected")
}

fn undirected(g: Graph) -> Graph {
    Graph::from_edges(g.n(), false, g.edges().map(|(u, v, _)| (u, v))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn every_estimate_is_a_realized_distance(g in connected_unweighted(20), seed in any::<u64>()) {
        let d = diameter(&g);
        for method in Method::ALL {
            match run_method(&g, method, &MethodParams::default(), seed) {
                Ok(e) => {
                    prop_assert!(e.value <= d, "{} gave {} > {}", method, e.value, d);
                    prop_assert_eq!(verify_witness(&g, &e).unwrap(), e.value);
                }
                Err(EstimateError::Unsupported(_)) => prop_assert!(method == Method::FourFifths && g.is_directed()),
                Err(err) => prop_assert!(false, "{} failed: {}", method, err),
            }
        }
    }

    #[test]
    fn two_approx_is_within_half(g in connected_unweighted(20)) {
        let d = diameter(&g);
        prop_assert!(two_approx(&g).unwrap().value >= d.div_ceil(2));
    }

    #[test]
    fn aingworth_and_rv_meet_the_floor(g in connected_unweighted(24), s_frac in 0.0f64..1.0, seed in any::<u64>()) {
        let d = diameter(&g);
        let s = 1 + ((g.n() - 1) as f64 * s_frac) as usize;
        let a = aingworth(&g, s).unwrap();
        prop_assert!(a.value >= three_halves_floor(d), "aingworth {} < floor for D={}", a.value, d);
        let r = rv_estimate(&g, s, seed).unwrap();
        prop_assert!(r.value >= three_halves_floor(d), "rv {} < floor for D={}", r.value, d);
        prop_assert!(r.value <= d);
    }

    #[test]
    fn dense_meets_two_thirds_when_d_at_least_three(g in connected_unweighted(24)) {
        let d = diameter(&g);
        let e = approx_diam_dense(&g, default_dense_s(&g)).unwrap();
        prop_assert!(e.value <= d);
        if d >= 3 {
            prop_assert!(e.value >= two_thirds_ceil(d), "dense {} for D={}", e.value, d);
        }
    }

    #[test]
    fn sparse_driver_meets_two_thirds(g in connected_unweighted(24)) {
        let d = diameter(&g);
        let e = sparse_driver(&g).unwrap();
        prop_assert!(e.value <= d && e.value >= two_thirds_ceil(d), "sparse {} for D={}", e.value, d);
    }

    #[test]
    fn sparse_with_any_parameters_stays_sound(g in connected_unweighted(20), htilde in 0u64..6, delta in 1usize..8) {
        let d = diameter(&g);
        let e = approx_diam_sparse(&g, htilde, delta).unwrap();
        prop_assert!(e.value <= d);
        prop_assert_eq!(verify_witness(&g, &e).unwrap(), e.value);
    }

    #[test]
    fn four_fifths_with_exact_oracle(g in connected_unweighted(24)) {
        let g = undirected(g);
        let d = diameter(&g);
        let e = undirected_four_fifths(&g).unwrap();
        prop_assert!(e.value <= d && e.value >= 4 * d / 5);
    }

    #[test]
    fn weighted_rv_relaxed_floor(g in connected_graph(20, 10), seed in any::<u64>()) {
        let d = diameter(&g);
        let e = rv_estimate_weighted(&g, diamapx_core::bench::sqrt_s(g.n()), seed).unwrap();
        prop_assert!(e.value <= d);
        prop_assert!(e.value + g.max_weight() >= 2 * d / 3);
    }

    #[test]
    fn sampling_is_sound(g in connected_unweighted(20), seed in any::<u64>()) {
        let d = diameter(&g);
        prop_assert!(large_diameter_sampling(&g, 0.5, 0.25, seed).unwrap().value <= d);
    }

    #[test]
    fn infinite_diameter_is_reported(g in unweighted_graph(16), seed in any::<u64>()) {
        prop_assume!(oracle_diameter(&floyd_warshall(&g)).is_none());
        for method in Method::ALL {
            let r = run_method(&g, method, &MethodParams::default(), seed);
            let ok = matches!(r, Err(EstimateError::InfiniteDiameter))
                || (method == Method::FourFifths && matches!(r, Err(EstimateError::Unsupported(_))));
            prop_assert!(ok, "{} returned {:?}", method, r);
        }
    }
}

#[test]
fn rv_is_deterministic_per_seed() {
    let g = diamapx_core::generate::generate(&"gnm:n=300,m=900,seed=5".parse().unwrap()).unwrap();
    for seed in 0..5 {
        assert_eq!(rv_estimate(&g, 18, seed).unwrap(), rv_estimate(&g, 18, seed).unwrap());
    }
}
