//! Better-than-3/2 refinement for sparse graphs, driven by a degree threshold.

use super::{
    ensure_finite, ensure_unweighted, two_approx, Deepest, Estimate, EstimateError, Method, Params,
    Witness,
};
use crate::graph::{Direction, Dist, Graph, UNREACHABLE};
use crate::search::{depths, high_degree_vertices, nearest_in_set, search};

/// Out-searches from every vertex of out-degree at least `delta`, one from
/// the vertex `w` furthest from them, and in-searches from every vertex
/// within `min(htilde + 1, d(w, H))` of `w`.
///
/// When `htilde >= h` for `D = 3h + z` the value is at least `2h + z`. A
/// smaller `htilde` still never overestimates; it only loses the lower bound.
pub fn approx_diam_sparse(g: &Graph, htilde: Dist, delta: usize) -> Result<Estimate, EstimateError> {
    ensure_unweighted(g, Method::Sparse)?;
    if delta == 0 {
        return Err(EstimateError::InvalidParameter("delta must be at least 1".into()));
    }
    ensure_finite(g)?;

    let hubs = high_degree_vertices(g, delta);
    let to_hubs = if hubs.is_empty() {
        vec![UNREACHABLE; g.n()]
    } else {
        nearest_in_set(g, &hubs, Direction::Out)?.dist
    };
    let mut w = 0;
    for v in 0..g.n() {
        if to_hubs[v] > to_hubs[w] {
            w = v;
        }
    }

    let mut best = Deepest::new(0, Witness::Tree { source: w, direction: Direction::Out });
    best.offer_trees(&hubs, &depths(g, &hubs, Direction::Out), Direction::Out);
    let w_tree = search(g, w, Direction::Out);
    best.offer(
        w_tree.depth,
        Witness::Tree {
            source: w,
            direction: Direction::Out,
        },
    );
    let reach = to_hubs[w].min(htilde.saturating_add(1));
    let near_w = w_tree.within(reach);
    best.offer_trees(near_w, &depths(g, near_w, Direction::In), Direction::In);

    Ok(best.into_estimate(
        Method::Sparse,
        0,
        Params {
            delta: Some(delta),
            htilde: Some(htilde),
            ..Params::default()
        },
    ))
}

/// `floor(2E / 3)` for a 2-approximation `E`; at least `h` since `E >= D / 2`.
pub fn sparse_htilde(two_approx_value: Dist) -> Dist {
    2 * two_approx_value / 3
}

/// Smallest integer `x >= 1` with `x^(2 htilde + 3) >= m`, i.e. `ceil(m^(1 / (2 htilde + 3)))`.
pub fn default_delta(m: usize, htilde: Dist) -> usize {
    let exponent = 2 * htilde.min(u32::MAX as Dist / 4) as u32 + 3;
    let mut x = (m as f64).powf(1.0 / exponent as f64).floor().max(1.0) as usize;
    while x > 1 && pow_at_least(x - 1, exponent, m) {
        x -= 1;
    }
    while !pow_at_least(x, exponent, m) {
        x += 1;
    }
    x
}

fn pow_at_least(base: usize, exponent: u32, target: usize) -> bool {
    let mut acc: usize = 1;
    for _ in 0..exponent {
        acc = acc.saturating_mul(base);
        if acc >= target {
            return true;
        }
    }
    acc >= target
}

/// Sets `htilde` from a 2-approximation and `delta = ceil(m^(1/(2 htilde + 3)))`,
/// then runs [`approx_diam_sparse`]. The value is at least `ceil(2D/3)`.
pub fn sparse_driver(g: &Graph) -> Result<Estimate, EstimateError> {
    ensure_unweighted(g, Method::Sparse)?;
    let e = two_approx(g)?.value;
    let htilde = sparse_htilde(e);
    let delta = default_delta(g.edge_count(), htilde);
    approx_diam_sparse(g, htilde, delta)
}
