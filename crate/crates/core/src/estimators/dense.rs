//! Better-than-3/2 refinement for dense graphs: two Aingworth runs plus a
//! scan over all pairs of truncated trees.

use rayon::prelude::*;

use super::aingworth;
use super::{
    clamp_s, ensure_finite, ensure_unweighted, Estimate, EstimateError, Method, Params,
    Witness,
};
use crate::graph::{Direction, Dist, Graph};
use crate::search::nearest_s;

/// `ceil((m / n)^(1/3))`, at least 1.
pub fn default_dense_s(g: &Graph) -> usize {
    let ratio = g.edge_count() as f64 / g.n() as f64;
    let mut s = ratio.cbrt().ceil().max(1.0) as usize;
    // Guard against cbrt rounding up past an exact cube.
    while s > 1 && ((s - 1) as f64).powi(3) >= ratio {
        s -= 1;
    }
    s
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// True iff the sorted vertex sets share no vertex and no edge runs from
/// `out_ball` into `in_ball`. Then every path between their centers is at
/// least as long as the sum of the two radii.
fn separated(g: &Graph, out_ball: &[usize], in_ball: &[usize]) -> bool {
    disjoint(out_ball, in_ball)
        && out_ball
            .iter()
            .all(|&x| in_ball.iter().all(|&y| !g.has_edge(x, y)))
}

/// Recomputes `d_s^OUT(u) + d_s^IN(v)` if the pair passes the separation
/// test, `None` otherwise.
pub fn disjoint_balls_value(g: &Graph, u: usize, v: usize, s: usize) -> Result<Option<Dist>, EstimateError> {
    if u == v {
        return Ok(None);
    }
    let s = clamp_s(s, g.n());
    let out = nearest_s(g, u, s, Direction::Out)?;
    let inward = nearest_s(g, v, s, Direction::In)?;
    Ok(separated(g, &out.inner_ball(), &inward.inner_ball()).then_some(out.radius + inward.radius))
}

/// Estimate with `2h + z <= value <= D` whenever `h >= 1`.
pub fn approx_diam_dense(g: &Graph, s: usize) -> Result<Estimate, EstimateError> {
    ensure_unweighted(g, Method::Dense)?;
    ensure_finite(g)?;
    let s = clamp_s(s, g.n());

    let forward = aingworth::run(g, s)?;
    let backward = aingworth::run(&g.reverse(), s)?;
    let mut best = forward.best;
    // Trees of the reversed graph are trees of g with the direction flipped.
    if let Witness::Tree { source, direction } = backward.best.witness {
        best.offer(
            backward.best.value,
            Witness::Tree {
                source,
                direction: direction.reversed(),
            },
        );
    }

    let out_balls: Vec<Vec<usize>> = forward.near.iter().map(|ns| ns.inner_ball()).collect();
    let in_balls: Vec<Vec<usize>> = backward.near.iter().map(|ns| ns.inner_ball()).collect();
    let out_radius: Vec<Dist> = forward.near.iter().map(|ns| ns.radius).collect();
    let in_radius: Vec<Dist> = backward.near.iter().map(|ns| ns.radius).collect();

    // For a fixed u the pair value only grows with d_s^IN(v), so candidates
    // are tried deepest first and the first separated one is the best for u.
    let mut by_in_radius: Vec<usize> = (0..g.n()).collect();
    by_in_radius.sort_by_key(|&v| (std::cmp::Reverse(in_radius[v]), v));

    let base = best.value;
    let per_source: Vec<Option<(Dist, usize)>> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            by_in_radius
                .iter()
                .take_while(|&&v| out_radius[u] + in_radius[v] > base)
                .find(|&&v| v != u && separated(g, &out_balls[u], &in_balls[v]))
                .map(|&v| (out_radius[u] + in_radius[v], v))
        })
        .collect();
    for (u, hit) in per_source.into_iter().enumerate() {
        if let Some((value, v)) = hit {
            best.offer(value, Witness::DisjointBalls { u, v });
        }
    }

    Ok(best.into_estimate(
        Method::Dense,
        0,
        Params {
            s: Some(s),
            ..Params::default()
        },
    ))
}
