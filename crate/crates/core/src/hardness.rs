//! Reduction from dominating set to the 2-vs-3 diameter problem.
//!
//! Given an undirected graph `G` on `n` vertices and a subset size `k`, the
//! constructed graph `G'` has a clique on `n` nodes `V'` (one per vertex of
//! `G`) and one node per `k`-subset `S` of `V(G)`, adjacent to exactly the
//! clique nodes `S` does not dominate. If no `k`-subset dominates `G`, then
//! `G'` has diameter 3 when `G` has a dominating set of size at most `2k`, and
//! diameter 2 otherwise.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

/// Default cap on the number of nodes of `G'`.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HardnessError {
    #[error("dominating-set reductions need an undirected graph")]
    Directed,
    #[error("subset size k = {k} must lie in 1..={n}")]
    InvalidK { k: usize, n: usize },
    #[error("reduction would have {nodes} nodes, above the cap of {cap}")]
    TooLarge { nodes: u128, cap: usize },
}

/// Fixed-width bitset over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn clear(&mut self) {
        self.words.fill(0);
    }
}

/// Closed neighborhood `N[v]` of every vertex.
fn closed_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| {
            let mut s = VertexSet::empty(g.n());
            s.insert(v);
            for &u in g.out_neighbors(v) {
                s.insert(u);
            }
            s
        })
        .collect()
}

fn dominates(subset: &[usize], closed: &[VertexSet], scratch: &mut VertexSet, all: &VertexSet) -> bool {
    scratch.clear();
    for &v in subset {
        scratch.union_with(&closed[v]);
    }
    scratch == all
}

/// Advances `c` to the next `k`-subset of `0..n` in lexicographic order.
fn next_lex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Advances `c` to the next `k`-subset of `0..n` in colex order (ordered by
/// largest element first).
fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn check_undirected(g: &Graph) -> Result<(), HardnessError> {
    if g.is_directed() {
        Err(HardnessError::Directed)
    } else {
        Ok(())
    }
}

/// Lexicographically first `k`-subset whose closed neighborhoods cover every
/// vertex, if any. `k > n` is treated as `k = n`.
pub fn brute_force_dominating_set(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, HardnessError> {
    check_undirected(g)?;
    let n = g.n();
    let k = k.min(n);
    if k == 0 {
        return Ok(None);
    }
    let closed = closed_neighborhoods(g);
    let all = VertexSet::full(n);
    let mut scratch = VertexSet::empty(n);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if dominates(&subset, &closed, &mut scratch, &all) {
            return Ok(Some(subset));
        }
        if !next_lex(&mut subset, n) {
            return Ok(None);
        }
    }
}

/// Diameter the constructed graph must have, with its justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectedDiameter {
    /// No dominating set of size at most `2k` exists (checked exhaustively).
    Two,
    /// `certificate` is a dominating set of size at most `2k`.
    Three { certificate: Vec<usize> },
}

impl ExpectedDiameter {
    pub fn value(&self) -> u64 {
        match self {
            ExpectedDiameter::Two => 2,
            ExpectedDiameter::Three { .. } => 3,
        }
    }
}

/// What a node of `G'` stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeRole<'a> {
    /// Clique node copying this vertex of `G`.
    Vertex(usize),
    /// Node for this `k`-subset of `V(G)`.
    Subset(&'a [usize]),
}

/// A constructed 2-vs-3 instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub k: usize,
    pub original_n: usize,
    /// Subsets in colex order; subset `i` is node `original_n + i`.
    pub subsets: Vec<Vec<usize>>,
    pub expected: ExpectedDiameter,
}

impl ReductionInstance {
    pub fn role(&self, node: usize) -> NodeRole<'_> {
        if node < self.original_n {
            NodeRole::Vertex(node)
        } else {
            NodeRole::Subset(&self.subsets[node - self.original_n])
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// Some `k`-subset already dominates `G`; construction stops there.
    EarlyExit { k: usize, original_n: usize, dominating: Vec<usize> },
    Built(ReductionInstance),
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl Reduction {
    /// Sidecar metadata as `key=value` lines.
    pub fn metadata(&self) -> String {
        let mut out = String::new();
        match self {
            Reduction::EarlyExit {
                k,
                original_n,
                dominating,
            } => {
                let _ = writeln!(out, "k={k}");
                let _ = writeln!(out, "original_n={original_n}");
                let _ = writeln!(out, "early_exit=true");
                let _ = writeln!(out, "dominating_set={}", join(dominating));
            }
            Reduction::Built(inst) => {
                let _ = writeln!(out, "k={}", inst.k);
                let _ = writeln!(out, "original_n={}", inst.original_n);
                let _ = writeln!(out, "early_exit=false");
                let _ = writeln!(out, "nodes={}", inst.graph.n());
                let _ = writeln!(out, "edges={}", inst.graph.edge_count());
                let _ = writeln!(out, "expected_diameter={}", inst.expected.value());
                match &inst.expected {
                    ExpectedDiameter::Two => {
                        let _ = writeln!(out, "certificate=none");
                    }
                    ExpectedDiameter::Three { certificate } => {
                        let _ = writeln!(out, "certificate={}", join(certificate));
                    }
                }
                for (i, subset) in inst.subsets.iter().enumerate() {
                    let _ = writeln!(out, "subset.{}={}", inst.original_n + i, join(subset));
                }
            }
        }
        out
    }
}

/// Parses `key=value` metadata, ignoring blank and `#` lines.
pub fn parse_metadata(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

/// Builds `G'` for `(g, k)`, stopping early if some `k`-subset dominates `g`.
pub fn build_diameter_instance(g: &Graph, k: usize, node_cap: usize) -> Result<Reduction, HardnessError> {
    check_undirected(g)?;
    let n = g.n();
    if k == 0 || k > n {
        return Err(HardnessError::InvalidK { k, n });
    }
    let subset_count = binomial(n, k);
    let nodes = subset_count + n as u128;
    if nodes > node_cap as u128 {
        return Err(HardnessError::TooLarge { nodes, cap: node_cap });
    }

    let closed = closed_neighborhoods(g);
    let all = VertexSet::full(n);
    let mut covered = VertexSet::empty(n);
    let mut subsets = Vec::with_capacity(subset_count as usize);
    let mut edges = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if dominates(&subset, &closed, &mut covered, &all) {
            return Ok(Reduction::EarlyExit {
                k,
                original_n: n,
                dominating: subset,
            });
        }
        let node = n + subsets.len();
        let before = edges.len();
        edges.extend((0..n).filter(|&v| !covered.contains(v)).map(|v| (node, v)));
        assert!(edges.len() > before, "non-dominating subset node has no neighbor");
        subsets.push(subset.clone());
        if !next_colex(&mut subset, n) {
            break;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let graph = Graph::from_edges(n + subsets.len(), false, edges).expect("endpoints in range");

    let expected = match brute_force_dominating_set(g, 2 * k)? {
        Some(certificate) => ExpectedDiameter::Three { certificate },
        None => ExpectedDiameter::Two,
    };
    Ok(Reduction::Built(ReductionInstance {
        graph,
        k,
        original_n: n,
        subsets,
        expected,
    }))
}
