//! Random-sampling estimator for graphs whose diameter is large.

use rand::seq::index;
use rand::SeedableRng;

use super::{ensure_finite, Deepest, Estimate, EstimateError, Method, Params, Prng, Witness, DEFAULT_SAMPLE_CONST};
use crate::graph::{Direction, Graph};
use crate::search::depths;

/// `ceil(C * n^(1 - eps) * ln n / delta)`, clamped to `1..=n`.
pub(crate) fn sampling_size(n: usize, eps: f64, delta: f64, sample_const: f64) -> usize {
    let n_f = n as f64;
    let size = (sample_const * n_f.powf(1.0 - eps) * n_f.ln() / delta).ceil();
    (size.max(1.0) as usize).min(n)
}

/// Deepest in- or out-tree over a uniform vertex sample. When `D >= n^eps`
/// the value is at least `(1 - delta) D` with high probability.
pub fn large_diameter_sampling(g: &Graph, eps: f64, delta: f64, seed: u64) -> Result<Estimate, EstimateError> {
    large_diameter_sampling_with(g, eps, delta, seed, DEFAULT_SAMPLE_CONST)
}

pub fn large_diameter_sampling_with(
    g: &Graph,
    eps: f64,
    delta: f64,
    seed: u64,
    sample_const: f64,
) -> Result<Estimate, EstimateError> {
    let in_unit = |x: f64| x > 0.0 && x < 1.0;
    if !in_unit(eps) || !in_unit(delta) {
        return Err(EstimateError::InvalidParameter(format!(
            "eps and delta must lie in (0, 1), got {eps} and {delta}"
        )));
    }
    if !(sample_const > 0.0 && sample_const.is_finite()) {
        return Err(EstimateError::InvalidParameter(format!(
            "sample constant must be positive, got {sample_const}"
        )));
    }
    ensure_finite(g)?;
    let n = g.n();
    let size = sampling_size(n, eps, delta, sample_const);
    let mut rng = Prng::seed_from_u64(seed);
    let mut sample = index::sample(&mut rng, n, size).into_vec();
    sample.sort_unstable();

    let mut best = Deepest::new(0, Witness::Tree { source: sample[0], direction: Direction::Out });
    best.offer_trees(&sample, &depths(g, &sample, Direction::Out), Direction::Out);
    if g.is_directed() {
        best.offer_trees(&sample, &depths(g, &sample, Direction::In), Direction::In);
    }
    Ok(best.into_estimate(
        Method::Sampling,
        0,
        Params {
            seed: Some(seed),
            sample_size: Some(size),
            ..Params::default()
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_sample_is_exact() {
        let g = Graph::from_edges(12, false, (1..12).map(|i| (i - 1, i))).unwrap();
        let e = large_diameter_sampling(&g, 0.5, 0.25, 4).unwrap();
        assert_eq!(e.params.sample_size, Some(12));
        assert_eq!(e.value, 11);
    }

    #[test]
    fn size_formula() {
        // ceil(2 * 1000^0.5 * ln 1000 / 0.5) = ceil(873.75...) = 874
        assert_eq!(sampling_size(1000, 0.5, 0.5, 2.0), 874);
        assert_eq!(sampling_size(1000, 0.5, 0.5, 100.0), 1000);
    }

    #[test]
    fn parameters_validated() {
        let g = Graph::from_edges(2, false, [(0, 1)]).unwrap();
        assert!(large_diameter_sampling(&g, 0.0, 0.5, 0).is_err());
        assert!(large_diameter_sampling(&g, 0.5, 1.0, 0).is_err());
    }
}
