//! Diameter estimators. Every estimator returns an [`Estimate`] whose value is
//! a realized shortest-path distance (or a certified lower bound on one), so
//! it never exceeds the true diameter.
//!
//! Lower-bound guarantees are stated with `D = 3h + z`, `z` in `{0, 1, 2}`:
//!
//! | method | guarantee |
//! |--------|-----------|
//! | `two-approx` | `ceil(D/2)` |
//! | `aingworth`, `rv` | `2h + z` for `z < 2`, `2h + 1` for `z = 2` |
//! | `dense` (`h >= 1`), `sparse` | `2h + z` |
//! | `four-fifths` | `floor(4D/5)` |

mod aingworth;
mod dense;
mod four_fifths;
pub mod hitting_set;
mod improved;
mod sampling;
mod sparse;
mod two_approx;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use aingworth::aingworth;
pub use dense::{approx_diam_dense, default_dense_s, disjoint_balls_value};
pub use four_fifths::{
    undirected_four_fifths, undirected_four_fifths_with_oracle, AdditiveOracle,
};
pub use improved::{
    rv_estimate, rv_estimate_weighted, rv_estimate_with, RvConfig, DEFAULT_RERUN_CAP,
    DEFAULT_SAMPLE_CONST,
};
pub use sampling::{large_diameter_sampling, large_diameter_sampling_with};
pub use sparse::{approx_diam_sparse, default_delta, sparse_driver, sparse_htilde};
pub use two_approx::two_approx;

use crate::exact::OracleError;
use crate::graph::{finite_diameter_check, Direction, Dist, Graph};
use crate::search::{eccentricity, search, SearchError};

/// PRNG used for every sampling step, seeded from a 64-bit seed.
pub type Prng = rand_chacha::ChaCha8Rng;

/// Name and version of [`Prng`], recorded alongside generated data.
pub const PRNG_ID: &str = "chacha8-rand_chacha-0.3";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    TwoApprox,
    Aingworth,
    Rv,
    RvWeighted,
    Dense,
    Sparse,
    FourFifths,
    Sampling,
    Exact,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::TwoApprox,
        Method::Aingworth,
        Method::Rv,
        Method::RvWeighted,
        Method::Dense,
        Method::Sparse,
        Method::FourFifths,
        Method::Sampling,
        Method::Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::TwoApprox => "two-approx",
            Method::Aingworth => "aingworth",
            Method::Rv => "rv",
            Method::RvWeighted => "rv-weighted",
            Method::Dense => "dense",
            Method::Sparse => "sparse",
            Method::FourFifths => "four-fifths",
            Method::Sampling => "sampling",
            Method::Exact => "exact",
        }
    }

    /// Whether the method draws random samples (and so takes a seed).
    pub fn is_randomized(self) -> bool {
        matches!(self, Method::Rv | Method::RvWeighted | Method::Sampling)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown method `{0}`")]
pub struct UnknownMethod(pub String);

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| UnknownMethod(s.to_string()))
    }
}

/// What certifies an estimate's value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// The value is the depth of the search tree rooted at `source`.
    Tree { source: usize, direction: Direction },
    /// The value is `d_s^OUT(u) + d_s^IN(v)` for a pair whose truncated
    /// trees are disjoint with no edge between them (the `s` is in the params).
    DisjointBalls { u: usize, v: usize },
    /// The value is the exact distance from `from` to `to`.
    Distance { from: usize, to: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::Tree { source, direction } => {
                write!(f, "tree source={source} direction={direction}")
            }
            Witness::DisjointBalls { u, v } => write!(f, "disjoint-balls u={u} v={v}"),
            Witness::Distance { from, to } => write!(f, "distance from={from} to={to}"),
        }
    }
}

/// Parameters an estimator actually used.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Params {
    pub s: Option<usize>,
    pub delta: Option<usize>,
    pub htilde: Option<Dist>,
    pub seed: Option<u64>,
    pub sample_size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub value: Dist,
    pub method: Method,
    pub witness: Witness,
    /// Las Vegas restarts; always 0 for deterministic methods.
    pub reruns: u32,
    pub params: Params,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EstimateError {
    #[error("graph has infinite diameter")]
    InfiniteDiameter,
    #[error("hitting-set verification failed {reruns} times in a row; giving up")]
    RerunCapExceeded { reruns: u32 },
    #[error("{0}")]
    Unsupported(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl From<SearchError> for EstimateError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::InfiniteDiameter { .. } => EstimateError::InfiniteDiameter,
            other => EstimateError::InvalidParameter(other.to_string()),
        }
    }
}

/// Splits `d` into `(h, z)` with `d = 3h + z` and `z < 3`.
pub fn decompose(d: Dist) -> (Dist, Dist) {
    (d / 3, d % 3)
}

/// Lower bound guaranteed by `aingworth` and `rv`: `2h + min(z, 1)`.
pub fn three_halves_floor(d: Dist) -> Dist {
    let (h, z) = decompose(d);
    2 * h + z.min(1)
}

/// Lower bound guaranteed by the refined estimators: `2h + z = ceil(2D/3)`.
pub fn two_thirds_ceil(d: Dist) -> Dist {
    let (h, z) = decompose(d);
    2 * h + z
}

pub(crate) fn ensure_finite(g: &Graph) -> Result<(), EstimateError> {
    if finite_diameter_check(g) {
        Ok(())
    } else {
        Err(EstimateError::InfiniteDiameter)
    }
}

pub(crate) fn ensure_unweighted(g: &Graph, method: Method) -> Result<(), EstimateError> {
    if g.is_weighted() {
        Err(EstimateError::Unsupported(match method {
            Method::Rv => "rv requires an unweighted graph; use rv-weighted",
            Method::Dense => "dense requires an unweighted graph",
            Method::Sparse => "sparse requires an unweighted graph",
            _ => "method requires an unweighted graph",
        }))
    } else {
        Ok(())
    }
}

pub(crate) fn clamp_s(s: usize, n: usize) -> usize {
    s.clamp(1, n)
}

/// Running maximum over candidate values. Ties keep the earlier candidate,
/// so the result only depends on the order candidates are offered in.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Deepest {
    pub value: Dist,
    pub witness: Witness,
}

impl Deepest {
    pub fn new(value: Dist, witness: Witness) -> Self {
        Deepest { value, witness }
    }

    pub fn offer(&mut self, value: Dist, witness: Witness) {
        if value > self.value {
            self.value = value;
            self.witness = witness;
        }
    }

    /// Offers the depth of every source's tree, in order.
    pub fn offer_trees(&mut self, sources: &[usize], depths: &[Dist], direction: Direction) {
        for (&source, &depth) in sources.iter().zip(depths) {
            self.offer(depth, Witness::Tree { source, direction });
        }
    }

    pub fn into_estimate(self, method: Method, reruns: u32, params: Params) -> Estimate {
        Estimate {
            value: self.value,
            method,
            witness: self.witness,
            reruns,
            params,
        }
    }
}

/// Recomputes an estimate's value from its witness alone.
pub fn verify_witness(g: &Graph, estimate: &Estimate) -> Result<Dist, EstimateError> {
    match estimate.witness {
        Witness::Tree { source, direction } => Ok(eccentricity(g, source, direction)),
        Witness::Distance { from, to } => Ok(search(g, from, Direction::Out).dist[to]),
        Witness::DisjointBalls { u, v } => {
            let s = estimate.params.s.ok_or_else(|| {
                EstimateError::InvalidParameter("disjoint-balls witness needs s".into())
            })?;
            disjoint_balls_value(g, u, v, s)?.ok_or_else(|| {
                EstimateError::InvalidParameter(format!("pair ({u}, {v}) fails the disjointness test"))
            })
        }
    }
}
