//! Randomized `O~((n/s + s) m)` estimator with Las Vegas verification.

use rand::seq::index;
use rand::SeedableRng;

use super::{
    clamp_s, ensure_finite, ensure_unweighted, Deepest, Estimate, EstimateError, Method, Params,
    Prng, Witness,
};
use crate::graph::{Direction, Graph, UNREACHABLE};
use crate::search::{depths, nearest_in_set, search};

/// Sample-size constant `C` in `|S| = ceil(C * (n / s) * ln n)`.
pub const DEFAULT_SAMPLE_CONST: f64 = 2.0;

/// Verification failures tolerated before the run is declared pathological.
pub const DEFAULT_RERUN_CAP: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RvConfig {
    pub sample_const: f64,
    pub rerun_cap: u32,
}

impl Default for RvConfig {
    fn default() -> Self {
        RvConfig {
            sample_const: DEFAULT_SAMPLE_CONST,
            rerun_cap: DEFAULT_RERUN_CAP,
        }
    }
}

pub(crate) fn sample_size(n: usize, s: usize, sample_const: f64) -> usize {
    let n_f = n as f64;
    let size = (sample_const * (n_f / s as f64) * n_f.ln()).ceil();
    (size.max(1.0) as usize).min(n)
}

/// Unweighted randomized estimator. See [`rv_estimate_weighted`] for graphs with weights.
pub fn rv_estimate(g: &Graph, s: usize, seed: u64) -> Result<Estimate, EstimateError> {
    ensure_unweighted(g, Method::Rv)?;
    run(g, s, seed, RvConfig::default(), Method::Rv)
}

/// Same control flow as [`rv_estimate`] with Dijkstra searches; accepts
/// unweighted graphs too, where it behaves identically.
pub fn rv_estimate_weighted(g: &Graph, s: usize, seed: u64) -> Result<Estimate, EstimateError> {
    run(g, s, seed, RvConfig::default(), Method::RvWeighted)
}

/// Either variant with an explicit configuration.
pub fn rv_estimate_with(
    g: &Graph,
    s: usize,
    seed: u64,
    config: RvConfig,
    weighted: bool,
) -> Result<Estimate, EstimateError> {
    if weighted {
        run(g, s, seed, config, Method::RvWeighted)
    } else {
        ensure_unweighted(g, Method::Rv)?;
        run(g, s, seed, config, Method::Rv)
    }
}

fn run(g: &Graph, s: usize, seed: u64, config: RvConfig, method: Method) -> Result<Estimate, EstimateError> {
    if !(config.sample_const > 0.0 && config.sample_const.is_finite()) {
        return Err(EstimateError::InvalidParameter(format!(
            "sample constant must be positive, got {}",
            config.sample_const
        )));
    }
    ensure_finite(g)?;
    let n = g.n();
    let s = clamp_s(s, n);
    let size = sample_size(n, s, config.sample_const);
    let mut rng = Prng::seed_from_u64(seed);
    let mut reruns = 0;
    loop {
        // All randomness is drawn here, before any parallel search.
        let mut sample = index::sample(&mut rng, n, size).into_vec();
        sample.sort_unstable();

        let to_sample = nearest_in_set(g, &sample, Direction::Out)?;
        let mut w = 0;
        for v in 0..n {
            if to_sample.dist[v] > to_sample.dist[w] {
                w = v;
            }
        }
        debug_assert!(to_sample.dist[w] != UNREACHABLE);
        let w_tree = search(g, w, Direction::Out);
        let around_w = &w_tree.order[..s];

        // Las Vegas check: the sample must hit the s nearest vertices of w.
        if !around_w.iter().any(|v| sample.binary_search(v).is_ok()) {
            reruns += 1;
            if reruns > config.rerun_cap {
                return Err(EstimateError::RerunCapExceeded { reruns });
            }
            continue;
        }

        let mut best = Deepest::new(0, Witness::Tree { source: sample[0], direction: Direction::Out });
        best.offer_trees(&sample, &depths(g, &sample, Direction::Out), Direction::Out);
        best.offer(
            w_tree.depth,
            Witness::Tree {
                source: w,
                direction: Direction::Out,
            },
        );
        best.offer_trees(around_w, &depths(g, around_w, Direction::In), Direction::In);

        return Ok(best.into_estimate(
            method,
            reruns,
            Params {
                s: Some(s),
                seed: Some(seed),
                sample_size: Some(size),
                ..Params::default()
            },
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::verify_witness;
    use crate::exact::exact_diameter;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, false, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn sample_size_formula() {
        // ceil(2 * (100 / 10) * ln 100) = ceil(92.103...) = 93
        assert_eq!(sample_size(100, 10, 2.0), 93);
        assert_eq!(sample_size(10, 3, 2.0), 10);
        assert_eq!(sample_size(1, 1, 2.0), 1);
    }

    #[test]
    fn full_neighborhood_is_exact() {
        let g = Graph::from_edges(7, true, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (2, 5)]).unwrap();
        let d = exact_diameter(&g).diameter.value().unwrap();
        for seed in 0..5 {
            assert_eq!(rv_estimate(&g, 7, seed).unwrap().value, d);
        }
    }

    #[test]
    fn path_meets_lower_bound() {
        let g = path(10);
        for seed in 0..20 {
            let e = rv_estimate(&g, 3, seed).unwrap();
            assert!((6..=9).contains(&e.value));
            assert_eq!(verify_witness(&g, &e).unwrap(), e.value);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let g = path(40);
        assert_eq!(rv_estimate(&g, 4, 11).unwrap(), rv_estimate(&g, 4, 11).unwrap());
    }

    #[test]
    fn reruns_are_counted_and_capped() {
        // An undersized sample often misses the s nearest vertices of w.
        let g = path(200);
        let config = RvConfig {
            sample_const: 0.5,
            rerun_cap: 1000,
        };
        let runs: Vec<Estimate> = (0..50)
            .map(|seed| rv_estimate_with(&g, 20, seed, config, false).unwrap())
            .collect();
        assert!(runs.iter().any(|e| e.reruns > 0));
        // D = 199 = 3 * 66 + 1, so every returned estimate is at least 133.
        assert!(runs.iter().all(|e| e.value >= 133));

        let capped = RvConfig {
            sample_const: 0.5,
            rerun_cap: 0,
        };
        let err = (0..50)
            .map(|seed| rv_estimate_with(&g, 20, seed, capped, false))
            .find(Result::is_err);
        assert_eq!(err, Some(Err(EstimateError::RerunCapExceeded { reruns: 1 })));
    }

    #[test]
    fn weighted_variant_matches_on_unit_weights() {
        let g = path(30);
        let unit = Graph::from_weighted_edges(30, false, (1..30).map(|i| (i - 1, i, 1))).unwrap();
        let a = rv_estimate(&g, 5, 9).unwrap();
        let b = rv_estimate_weighted(&unit, 5, 9).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.reruns, b.reruns);
    }

    #[test]
    fn weighted_path() {
        let g = Graph::from_weighted_edges(4, false, [(0, 1, 5), (1, 2, 5), (2, 3, 5)]).unwrap();
        for seed in 0..10 {
            let e = rv_estimate_weighted(&g, 2, seed).unwrap();
            assert!((10..=15).contains(&e.value), "{}", e.value);
        }
        assert!(matches!(rv_estimate(&g, 2, 0), Err(EstimateError::Unsupported(_))));
    }
}
