use super::{ensure_finite, Deepest, Estimate, EstimateError, Method, Params, Witness};
use crate::graph::{Direction, Graph};
use crate::search::eccentricity;

/// Deeper of the out- and in-search trees of vertex 0. Any vertex's
/// eccentricity is at least `D / 2` in one of the two directions.
pub fn two_approx(g: &Graph) -> Result<Estimate, EstimateError> {
    ensure_finite(g)?;
    let out = eccentricity(g, 0, Direction::Out);
    let mut best = Deepest::new(
        out,
        Witness::Tree {
            source: 0,
            direction: Direction::Out,
        },
    );
    if g.is_directed() {
        let inward = eccentricity(g, 0, Direction::In);
        best.offer(
            inward,
            Witness::Tree {
                source: 0,
                direction: Direction::In,
            },
        );
    }
    Ok(best.into_estimate(Method::TwoApprox, 0, Params::default()))
}
