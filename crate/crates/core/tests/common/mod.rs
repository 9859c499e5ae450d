#![allow(dead_code)]

use diamapx_core::{Dist, Graph, UNREACHABLE};
use proptest::prelude::*;

/// All-pairs distances by Floyd-Warshall over the raw edge list.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Dist>> {
    let n = g.n();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v, w) in g.edges() {
        d[u][v] = d[u][v].min(w);
        if !g.is_directed() {
            d[v][u] = d[v][u].min(w);
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == UNREACHABLE {
                continue;
            }
            for j in 0..n {
                if d[k][j] != UNREACHABLE && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Diameter from a distance matrix; `None` when some pair is unreachable.
pub fn oracle_diameter(d: &[Vec<Dist>]) -> Option<Dist> {
    let mut best = 0;
    for row in d {
        for &x in row {
            if x == UNREACHABLE {
                return None;
            }
            best = best.max(x);
        }
    }
    Some(best)
}

/// Raw graph description: vertex count, direction and weighted edges.
pub fn raw_graph(max_n: usize, max_w: i64) -> impl Strategy<Value = (usize, bool, Vec<(usize, usize, i64)>)> {
    (1..=max_n, any::<bool>()).prop_flat_map(move |(n, directed)| {
        let edge = (0..n, 0..n, 1..=max_w);
        (Just(n), Just(directed), prop::collection::vec(edge, 0..=3 * n))
    })
}

pub fn build((n, directed, edges): (usize, bool, Vec<(usize, usize, i64)>), weighted: bool) -> Graph {
    if weighted {
        Graph::from_weighted_edges(n, directed, edges).unwrap()
    } else {
        Graph::from_edges(n, directed, edges.into_iter().map(|(u, v, _)| (u, v))).unwrap()
    }
}

pub fn unweighted_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    raw_graph(max_n, 1).prop_map(|raw| build(raw, false))
}

pub fn weighted_graph(max_n: usize, max_w: i64) -> impl Strategy<Value = Graph> {
    raw_graph(max_n, max_w).prop_map(|raw| build(raw, true))
}

/// Graph with a Hamiltonian cycle through a random permutation, so it is
/// strongly connected, plus random extra edges.
pub fn connected_graph(max_n: usize, max_w: i64) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<bool>(), any::<bool>()).prop_flat_map(move |(n, directed, weighted)| {
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        let extra = prop::collection::vec((0..n, 0..n, 1..=max_w), 0..=2 * n);
        let cycle_w = prop::collection::vec(1..=max_w, n);
        (perm, extra, cycle_w).prop_map(move |(perm, extra, cycle_w)| {
            let mut edges: Vec<(usize, usize, i64)> =
                (0..n).map(|i| (perm[i], perm[(i + 1) % n], cycle_w[i])).collect();
            edges.extend(extra);
            build((n, directed, edges), weighted)
        })
    })
}

pub fn connected_unweighted(max_n: usize) -> impl Strategy<Value = Graph> {
    connected_graph(max_n, 1).prop_map(|g| {
        let edges: Vec<_> = g.edges().map(|(u, v, _)| (u, v)).collect();
        Graph::from_edges(g.n(), g.is_directed(), edges).unwrap()
    })
}
