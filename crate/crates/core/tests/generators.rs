use diamapx_core::generate::{generate, Family, GenSpec};
use diamapx_core::{exact_diameter, finite_diameter_check, write_edge_list, Diameter};
use proptest::prelude::*;

fn diameter(spec: GenSpec) -> Diameter {
    exact_diameter(&generate(&spec).unwrap()).diameter
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn same_spec_same_bytes(n in 2usize..60, density in 0.5f64..4.0, seed in any::<u64>(), directed in any::<bool>()) {
        let max = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
        let m = ((n as f64 * density) as usize).min(max);
        let spec = GenSpec::new(Family::Gnm { n, m }).seed(seed).directed(directed);
        let a = generate(&spec).unwrap();
        prop_assert_eq!(write_edge_list(&a), write_edge_list(&generate(&spec).unwrap()));
        prop_assert!(finite_diameter_check(&a));
        let reparsed: GenSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, spec);
    }

    #[test]
    fn structured_closed_forms(n in 2usize..40, rows in 1usize..7, cols in 1usize..7, clique in 2usize..7, path in 1usize..8) {
        let d = |x: usize| Diameter::Finite(x as u64);
        prop_assert_eq!(diameter(GenSpec::new(Family::Path { n })), d(n - 1));
        prop_assert_eq!(diameter(GenSpec::new(Family::Cycle { n })), d(n / 2));
        prop_assert_eq!(diameter(GenSpec::new(Family::Cycle { n }).directed(true)), d(n - 1));
        prop_assert_eq!(diameter(GenSpec::new(Family::Star { n })), d(if n == 2 { 1 } else { 2 }));
        prop_assert_eq!(diameter(GenSpec::new(Family::Complete { n })), d(1));
        prop_assert_eq!(diameter(GenSpec::new(Family::Grid { rows, cols })), d(rows + cols - 2));
        prop_assert_eq!(diameter(GenSpec::new(Family::Barbell { clique, path })), d(path + 2));
        prop_assert_eq!(diameter(GenSpec::new(Family::Barbell { clique, path }).directed(true)), d(path + 2));
    }
}

#[test]
fn gnm_reference_instance() {
    let spec: GenSpec = "gnm:n=100,m=300,seed=7".parse().unwrap();
    let a = generate(&spec).unwrap();
    let b = generate(&spec).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.edge_count(), 300);
}

#[test]
fn barbell_reference_instance() {
    assert_eq!(diameter(GenSpec::new(Family::Barbell { clique: 5, path: 4 })), Diameter::Finite(6));
}

#[test]
fn unconnected_sparse_gnm_can_be_disconnected() {
    let spec = GenSpec::new(Family::Gnm { n: 40, m: 20 }).connect(false);
    assert!(!finite_diameter_check(&generate(&spec).unwrap()));
}
