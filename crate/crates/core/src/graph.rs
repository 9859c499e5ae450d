//! Immutable compressed-adjacency graph shared by every algorithm in the crate.

use std::sync::OnceLock;

use thiserror::Error;

/// Shortest-path distance. Unweighted graphs use unit edge lengths.
pub type Dist = u64;

/// Sentinel distance for vertices a search never reached.
pub const UNREACHABLE: Dist = Dist::MAX;

/// Largest accepted edge weight. Keeps every simple-path length far below
/// [`UNREACHABLE`] so distance sums never overflow.
pub const MAX_WEIGHT: Dist = 1 << 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}) has negative weight {weight}")]
    NegativeWeight { u: usize, v: usize, weight: i64 },
    #[error("edge ({u}, {v}) has weight {weight}, above the supported maximum {MAX_WEIGHT}")]
    WeightTooLarge { u: usize, v: usize, weight: i64 },
}

/// Search direction: `Out` follows edges forward, `In` follows them backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Out,
    In,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Out => Direction::In,
            Direction::In => Direction::Out,
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Out => "out",
            Direction::In => "in",
        })
    }
}

/// Diameter of a graph: a finite distance, or infinite when some ordered
/// pair is disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(Dist),
    Infinite,
}

impl Diameter {
    pub fn is_finite(&self) -> bool {
        matches!(self, Diameter::Finite(_))
    }

    pub fn value(&self) -> Option<Dist> {
        match *self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// One direction of adjacency in CSR form.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Option<Vec<Dist>>,
}

impl Adjacency {
    /// `arcs` must be sorted by (source, target) with no duplicates.
    fn from_sorted_arcs(n: usize, arcs: &[(usize, usize, Dist)], weighted: bool) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, _, _) in arcs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.iter().map(|&(_, v, _)| v).collect();
        let weights = weighted.then(|| arcs.iter().map(|&(_, _, w)| w).collect());
        Adjacency {
            offsets,
            targets,
            weights,
        }
    }

    fn transpose(&self, n: usize) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &v in &self.targets {
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; self.targets.len()];
        let mut weights = self.weights.as_ref().map(|_| vec![0 as Dist; self.targets.len()]);
        // Sources are visited in ascending order, so every reversed list comes out sorted.
        for u in 0..n {
            for i in self.offsets[u]..self.offsets[u + 1] {
                let v = self.targets[i];
                let slot = fill[v];
                targets[slot] = u;
                if let (Some(dst), Some(src)) = (weights.as_mut(), self.weights.as_ref()) {
                    dst[slot] = src[i];
                }
                fill[v] += 1;
            }
        }
        Adjacency {
            offsets,
            targets,
            weights,
        }
    }

    #[inline]
    fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    fn weights(&self, v: usize) -> Option<&[Dist]> {
        self.weights
            .as_ref()
            .map(|w| &w[self.offsets[v]..self.offsets[v + 1]])
    }
}

/// A directed or undirected graph on vertices `0..n`, optionally weighted.
///
/// Undirected graphs store both arcs of every edge, so all searches share one
/// code path, while [`Graph::edge_count`] reports each undirected edge once.
/// Reverse adjacency of a directed graph is built on first use and cached.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    directed: bool,
    out: Adjacency,
    incoming: OnceLock<Adjacency>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.directed == other.directed && self.out == other.out
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds an unweighted graph. Self-loops are dropped and parallel edges merged.
    pub fn from_edges<I>(n: usize, directed: bool, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let arcs = edges.into_iter().map(|(u, v)| (u, v, 1i64));
        Self::build(n, directed, arcs, false)
    }

    /// Builds a weighted graph; parallel edges keep the minimum weight.
    pub fn from_weighted_edges<I>(n: usize, directed: bool, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        Self::build(n, directed, edges, true)
    }

    fn build<I>(n: usize, directed: bool, edges: I, weighted: bool) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut arcs = Vec::new();
        for (u, v, weight) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if weight < 0 {
                return Err(GraphError::NegativeWeight { u, v, weight });
            }
            if weight as u64 > MAX_WEIGHT {
                return Err(GraphError::WeightTooLarge { u, v, weight });
            }
            if u == v {
                continue;
            }
            let w = weight as Dist;
            arcs.push((u, v, w));
            if !directed {
                arcs.push((v, u, w));
            }
        }
        // Sorting by (u, v, w) leaves the lightest copy of each arc first.
        arcs.sort_unstable();
        arcs.dedup_by(|next, kept| next.0 == kept.0 && next.1 == kept.1);
        Ok(Graph {
            n,
            directed,
            out: Adjacency::from_sorted_arcs(n, &arcs, weighted),
            incoming: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_weighted(&self) -> bool {
        self.out.weights.is_some()
    }

    /// Number of stored arcs (each undirected edge counts twice).
    pub fn arc_count(&self) -> usize {
        self.out.targets.len()
    }

    /// Edge count `m` as used in parameter formulas: undirected edges count once.
    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.arc_count()
        } else {
            self.arc_count() / 2
        }
    }

    /// Largest edge weight; 1 for unweighted graphs, 0 when there are no edges.
    pub fn max_weight(&self) -> Dist {
        match &self.out.weights {
            Some(w) => w.iter().copied().max().unwrap_or(0),
            None if self.out.targets.is_empty() => 0,
            None => 1,
        }
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        self.out.neighbors(v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out.offsets[v + 1] - self.out.offsets[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        self.in_adjacency().neighbors(v)
    }

    /// Neighbor ids and (for weighted graphs) the matching edge weights.
    #[inline]
    pub fn neighbors(&self, v: usize, direction: Direction) -> (&[usize], Option<&[Dist]>) {
        let adj = match direction {
            Direction::Out => &self.out,
            Direction::In => self.in_adjacency(),
        };
        (adj.neighbors(v), adj.weights(v))
    }

    /// Sorted-adjacency membership test for the arc `u -> v`.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Option<Dist> {
        let i = self.out.neighbors(u).binary_search(&v).ok()?;
        Some(match self.out.weights(u) {
            Some(w) => w[i],
            None => 1,
        })
    }

    /// Canonical edge list: every arc of a directed graph, or each undirected
    /// edge once with `u < v`, ordered by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Dist)> + '_ {
        (0..self.n).flat_map(move |u| {
            let (targets, weights) = self.neighbors(u, Direction::Out);
            targets
                .iter()
                .enumerate()
                .filter(move |&(_, &v)| self.directed || u < v)
                .map(move |(i, &v)| (u, v, weights.map_or(1, |w| w[i])))
        })
    }

    /// Raw CSR arrays `(offsets, targets, weights)` for one direction.
    #[inline]
    pub(crate) fn csr(&self, direction: Direction) -> (&[usize], &[usize], Option<&[Dist]>) {
        let adj = match direction {
            Direction::Out => &self.out,
            Direction::In => self.in_adjacency(),
        };
        (&adj.offsets, &adj.targets, adj.weights.as_deref())
    }

    fn in_adjacency(&self) -> &Adjacency {
        if !self.directed {
            return &self.out;
        }
        self.incoming.get_or_init(|| self.out.transpose(self.n))
    }

    /// The graph with every edge reversed. Undirected graphs are returned unchanged.
    pub fn reverse(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        let incoming = OnceLock::new();
        let _ = incoming.set(self.out.clone());
        Graph {
            n: self.n,
            directed: true,
            out: self.in_adjacency().clone(),
            incoming,
        }
    }
}

/// True iff vertex 0 reaches every vertex and is reached by every vertex,
/// i.e. the diameter is finite.
pub fn finite_diameter_check(g: &Graph) -> bool {
    let n = g.n();
    if crate::search::reach_count(g, 0, Direction::Out) != n {
        return false;
    }
    !g.is_directed() || crate::search::reach_count(g, 0, Direction::In) == n
}
