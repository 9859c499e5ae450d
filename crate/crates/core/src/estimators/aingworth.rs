use super::hitting_set::greedy_hitting_set;
use super::{clamp_s, ensure_finite, Deepest, Estimate, EstimateError, Method, Params, Witness};
use crate::graph::{Direction, Graph};
use crate::search::{depths, nearest_s_all, search, NearSet};

/// Everything one run produces: the deepest tree and the `s`-nearest sets of
/// every vertex, which the dense refinement reuses.
pub(crate) struct AingworthRun {
    pub best: Deepest,
    pub near: Vec<NearSet>,
}

/// Runs on `g` as given; `near` holds out-neighborhoods of `g`.
pub(crate) fn run(g: &Graph, s: usize) -> Result<AingworthRun, EstimateError> {
    let near = nearest_s_all(g, s, Direction::Out)?;
    let w = argmax_radius(&near);
    let w_tree = search(g, w, Direction::Out);
    let mut best = Deepest::new(
        w_tree.depth,
        Witness::Tree {
            source: w,
            direction: Direction::Out,
        },
    );

    let around_w = &near[w].members;
    best.offer_trees(around_w, &depths(g, around_w, Direction::In), Direction::In);

    let family: Vec<&[usize]> = near.iter().map(|ns| ns.members.as_slice()).collect();
    let hitting = greedy_hitting_set(g.n(), &family);
    best.offer_trees(&hitting, &depths(g, &hitting, Direction::Out), Direction::Out);

    Ok(AingworthRun { best, near })
}

/// Vertex with the largest `d_s` radius, smallest id among ties.
fn argmax_radius(near: &[NearSet]) -> usize {
    let mut w = 0;
    for (v, ns) in near.iter().enumerate() {
        if ns.radius > near[w].radius {
            w = v;
        }
    }
    w
}

/// The deterministic 3/2-approximation: out-search from the vertex whose `s`
/// nearest vertices reach furthest, in-searches from those `s` vertices, and
/// out-searches from a greedy hitting set of all `s`-nearest sets.
pub fn aingworth(g: &Graph, s: usize) -> Result<Estimate, EstimateError> {
    ensure_finite(g)?;
    let s = clamp_s(s, g.n());
    let run = run(g, s)?;
    Ok(run.best.into_estimate(
        Method::Aingworth,
        0,
        Params {
            s: Some(s),
            ..Params::default()
        },
    ))
}
