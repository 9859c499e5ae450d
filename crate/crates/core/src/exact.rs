//! Ground truth: exact diameter and all-pairs distances from one search per vertex.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Diameter, Direction, Dist, Graph, UNREACHABLE};
use crate::search::{search, Workspace};

/// Default vertex cap for [`exact_apsp`]; the matrix is `n * n` distances.
pub const DEFAULT_APSP_CAP: usize = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the all-pairs cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub diameter: Diameter,
    /// Lexicographically smallest pair `(a, b)` with `d(a, b) = D`, when finite.
    pub witness: Option<(usize, usize)>,
    /// Largest finite out-distance of every vertex.
    pub eccentricities: Vec<Dist>,
}

/// Exact diameter by a search from every vertex.
pub fn exact_diameter(g: &Graph) -> ExactResult {
    let n = g.n();
    let per_source: Vec<(Dist, usize)> = (0..n)
        .into_par_iter()
        .map_init(|| Workspace::new(n), |ws, v| ws.depth(g, v, Direction::Out))
        .collect();
    let eccentricities: Vec<Dist> = per_source.iter().map(|&(d, _)| d).collect();
    if per_source.iter().any(|&(_, reached)| reached != n) {
        return ExactResult {
            diameter: Diameter::Infinite,
            witness: None,
            eccentricities,
        };
    }
    let diameter = eccentricities.iter().copied().max().unwrap_or(0);
    let a = eccentricities
        .iter()
        .position(|&e| e == diameter)
        .expect("n >= 1");
    let tree = search(g, a, Direction::Out);
    let b = tree
        .dist
        .iter()
        .position(|&d| d == diameter)
        .expect("eccentricity is attained");
    ExactResult {
        diameter: Diameter::Finite(diameter),
        witness: Some((a, b)),
        eccentricities,
    }
}

/// Dense all-pairs distance matrix, row `u` holding distances from `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry, or `None` if any pair is unreachable.
    pub fn max_finite(&self) -> Option<Dist> {
        if self.data.contains(&UNREACHABLE) {
            None
        } else {
            self.data.iter().copied().max()
        }
    }
}

/// Exact all-pairs distances, refusing graphs above `cap` vertices.
pub fn exact_apsp(g: &Graph, cap: usize) -> Result<DistanceMatrix, OracleError> {
    let n = g.n();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let rows: Vec<Vec<Dist>> = (0..n)
        .into_par_iter()
        .map(|u| search(g, u, Direction::Out).dist)
        .collect();
    Ok(DistanceMatrix {
        n,
        data: rows.concat(),
    })
}
