//! `floor(4D/5)`-approximation for undirected unweighted graphs.

use super::{
    aingworth, approx_diam_dense, default_dense_s, ensure_finite, Deepest, Estimate,
    EstimateError, Method, Params, Witness,
};
use crate::exact::{exact_apsp, DistanceMatrix, DEFAULT_APSP_CAP};
use crate::graph::{Direction, Dist, Graph, UNREACHABLE};
use crate::search::search;

/// All-pairs distance estimates `d~` with `d <= d~ <= d + additive_error()`.
pub trait AdditiveOracle {
    fn additive_error(&self) -> Dist;
    fn estimate(&self, u: usize, v: usize) -> Dist;
}

/// Exact distances satisfy the contract with error 0.
impl AdditiveOracle for DistanceMatrix {
    fn additive_error(&self) -> Dist {
        0
    }

    fn estimate(&self, u: usize, v: usize) -> Dist {
        self.get(u, v)
    }
}

/// [`undirected_four_fifths_with_oracle`] backed by exact all-pairs distances.
pub fn undirected_four_fifths(g: &Graph) -> Result<Estimate, EstimateError> {
    check_input(g)?;
    let apsp = exact_apsp(g, DEFAULT_APSP_CAP)?;
    undirected_four_fifths_with_oracle(g, &apsp)
}

fn check_input(g: &Graph) -> Result<(), EstimateError> {
    if g.is_directed() {
        return Err(EstimateError::Unsupported("four-fifths requires an undirected graph"));
    }
    if g.is_weighted() {
        return Err(EstimateError::Unsupported("four-fifths requires an unweighted graph"));
    }
    ensure_finite(g)
}

/// Let `M` be the largest oracle estimate and `D^ = M - eps`, so
/// `D - eps <= D^ <= D`. `D^ >= 4` is already within `floor(4D/5)`; at
/// `D^ = 3` the dense refinement separates `D = 5`; at `D^ <= 2` Aingworth
/// covers `D = 4`.
pub fn undirected_four_fifths_with_oracle<O: AdditiveOracle + ?Sized>(
    g: &Graph,
    oracle: &O,
) -> Result<Estimate, EstimateError> {
    check_input(g)?;
    let n = g.n();
    let eps = oracle.additive_error();

    let (mut top, mut pair) = (0, (0, 0));
    for u in 0..n {
        for v in 0..n {
            let d = oracle.estimate(u, v);
            if d != UNREACHABLE && d > top {
                top = d;
                pair = (u, v);
            }
        }
    }
    let lowered = top.saturating_sub(eps);

    // d(u, v) >= M - eps, so some vertex on a shortest u-v path sits at exactly D^ from u.
    let from = pair.0;
    let tree = search(g, from, Direction::Out);
    let to = tree
        .order
        .iter()
        .copied()
        .find(|&x| tree.dist[x] == lowered)
        .ok_or_else(|| {
            EstimateError::InvalidParameter(format!(
                "oracle estimate {top} at ({}, {}) exceeds the distance plus {eps}",
                pair.0, pair.1
            ))
        })?;
    let mut best = Deepest::new(lowered, Witness::Distance { from, to });
    let mut params = Params::default();

    if lowered == 3 {
        let s = default_dense_s(g);
        params.s = Some(s);
        let dense = approx_diam_dense(g, s)?;
        best.offer(dense.value, dense.witness);
    } else if lowered <= 2 {
        let s = (n as f64).sqrt().ceil() as usize;
        params.s = Some(s);
        let base = aingworth(g, s)?;
        best.offer(base.value, base.witness);
    }
    Ok(best.into_estimate(Method::FourFifths, 0, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::verify_witness;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, false, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Overestimates every off-diagonal distance by exactly 2.
    struct PlusTwo(DistanceMatrix);

    impl AdditiveOracle for PlusTwo {
        fn additive_error(&self) -> Dist {
            2
        }
        fn estimate(&self, u: usize, v: usize) -> Dist {
            self.0.get(u, v) + if u == v { 0 } else { 2 }
        }
    }

    #[test]
    fn complete_graph_exact_oracle() {
        let g = Graph::from_edges(5, false, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(undirected_four_fifths(&g).unwrap().value, 1);
    }

    #[test]
    fn exact_oracle_returns_diameter() {
        let g = path(6);
        let e = undirected_four_fifths(&g).unwrap();
        assert_eq!(e.value, 5);
        assert_eq!(verify_witness(&g, &e).unwrap(), 5);
    }

    #[test]
    fn degraded_oracle_branches() {
        for n in 2..12 {
            let g = path(n);
            let d = (n - 1) as Dist;
            let oracle = PlusTwo(exact_apsp(&g, 64).unwrap());
            let e = undirected_four_fifths_with_oracle(&g, &oracle).unwrap();
            assert!(e.value <= d && e.value >= 4 * d / 5, "n={n}: {}", e.value);
            assert_eq!(verify_witness(&g, &e).unwrap(), e.value);
        }
    }

    #[test]
    fn rejects_directed_and_weighted() {
        let d = Graph::from_edges(2, true, [(0, 1), (1, 0)]).unwrap();
        assert!(matches!(undirected_four_fifths(&d), Err(EstimateError::Unsupported(_))));
        let w = Graph::from_weighted_edges(2, false, [(0, 1, 1)]).unwrap();
        assert!(matches!(undirected_four_fifths(&w), Err(EstimateError::Unsupported(_))));
    }
}
