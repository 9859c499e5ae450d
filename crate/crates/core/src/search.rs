//! Single-source search primitives: full and truncated BFS/Dijkstra,
//! s-nearest neighborhoods, and nearest-member-of-a-set via a virtual
//! super-node.
//!
//! Every search settles vertices in `(distance, id)` order, so truncating a
//! search after `s` vertices yields exactly the `s` closest vertices with
//! ties broken towards smaller ids. Unweighted graphs use a level-synchronous
//! BFS whose levels are sorted by id; weighted graphs use Dijkstra keyed on
//! `(distance, id)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Direction, Dist, Graph, UNREACHABLE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has infinite diameter: only {reached} vertices reachable from {center} ({direction}), need {needed}")]
    InfiniteDiameter {
        center: usize,
        direction: Direction,
        reached: usize,
        needed: usize,
    },
    #[error("vertex set must not be empty")]
    EmptySet,
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Result of one full single-source search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTree {
    pub source: usize,
    pub direction: Direction,
    /// Exact distance from (`Out`) or to (`In`) the source; [`UNREACHABLE`] if unreached.
    pub dist: Vec<Dist>,
    /// Largest finite distance.
    pub depth: Dist,
    /// Reached vertices sorted by `(distance, id)`.
    pub order: Vec<usize>,
}

impl SearchTree {
    pub fn reached(&self) -> usize {
        self.order.len()
    }

    /// Vertices within `radius` of the source, in `(distance, id)` order.
    pub fn within(&self, radius: Dist) -> &[usize] {
        let end = self.order.partition_point(|&v| self.dist[v] <= radius);
        &self.order[..end]
    }
}

/// The `s` closest vertices of a center in one direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearSet {
    pub center: usize,
    pub direction: Direction,
    /// Members in `(distance, id)` order; `members[0]` is the center.
    pub members: Vec<usize>,
    /// Distance of each member, aligned with `members`.
    pub dists: Vec<Dist>,
    /// Largest member distance (`d_s` of the center).
    pub radius: Dist,
}

impl NearSet {
    pub fn s(&self) -> usize {
        self.members.len()
    }

    /// Sorted ids of the members strictly closer than `radius`: the truncated
    /// tree of depth `radius - 1`. It never holds more than `s - 1` vertices.
    pub fn inner_ball(&self) -> Vec<usize> {
        let mut ball: Vec<usize> = self
            .members
            .iter()
            .zip(&self.dists)
            .take_while(|&(_, &d)| d < self.radius)
            .map(|(&v, _)| v)
            .collect();
        ball.sort_unstable();
        ball
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }
}

/// For every vertex, its closest member of a vertex set and the distance to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearestInSet {
    /// Closest set member (smallest id among ties), `None` if unreachable.
    pub nearest: Vec<Option<usize>>,
    pub dist: Vec<Dist>,
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), SearchError> {
    if v >= g.n() {
        Err(SearchError::VertexOutOfRange { vertex: v, n: g.n() })
    } else {
        Ok(())
    }
}

/// Reusable per-thread scratch space for searches that only need depths or
/// short prefixes.
pub(crate) struct Workspace {
    stamp: Vec<u32>,
    epoch: u32,
    dist: Vec<Dist>,
    touched: Vec<usize>,
    queue: Vec<usize>,
    heap: BinaryHeap<Reverse<(Dist, usize)>>,
}

impl Workspace {
    pub(crate) fn new(n: usize) -> Self {
        Workspace {
            stamp: vec![0; n],
            epoch: 0,
            dist: vec![UNREACHABLE; n],
            touched: Vec::new(),
            queue: Vec::with_capacity(n),
            heap: BinaryHeap::new(),
        }
    }

    fn next_epoch(&mut self) -> u32 {
        if self.epoch == u32::MAX {
            self.stamp.fill(0);
            self.epoch = 0;
        }
        self.epoch += 1;
        self.epoch
    }

    fn reset_dist(&mut self) {
        for &v in &self.touched {
            self.dist[v] = UNREACHABLE;
        }
        self.touched.clear();
        self.heap.clear();
    }

    /// Depth of the search tree rooted at `source` and the number of vertices it reaches.
    pub(crate) fn depth(&mut self, g: &Graph, source: usize, direction: Direction) -> (Dist, usize) {
        if g.is_weighted() {
            self.dijkstra_depth(g, source, direction)
        } else {
            self.bfs_depth(g, source, direction)
        }
    }

    fn bfs_depth(&mut self, g: &Graph, source: usize, direction: Direction) -> (Dist, usize) {
        let (offsets, targets, _) = g.csr(direction);
        let epoch = self.next_epoch();
        self.queue.clear();
        self.queue.push(source);
        self.stamp[source] = epoch;
        let mut head = 0;
        let mut depth = 0;
        while head < self.queue.len() {
            let level_end = self.queue.len();
            while head < level_end {
                let u = self.queue[head];
                head += 1;
                for &v in &targets[offsets[u]..offsets[u + 1]] {
                    if self.stamp[v] != epoch {
                        self.stamp[v] = epoch;
                        self.queue.push(v);
                    }
                }
            }
            if self.queue.len() > level_end {
                depth += 1;
            }
        }
        (depth, self.queue.len())
    }

    fn dijkstra_depth(&mut self, g: &Graph, source: usize, direction: Direction) -> (Dist, usize) {
        let (offsets, targets, weights) = g.csr(direction);
        let weights = weights.expect("weighted graph");
        self.reset_dist();
        self.dist[source] = 0;
        self.touched.push(source);
        self.heap.push(Reverse((0, source)));
        let mut depth = 0;
        let mut settled = 0;
        while let Some(Reverse((d, u))) = self.heap.pop() {
            if d != self.dist[u] {
                continue;
            }
            settled += 1;
            depth = d;
            for i in offsets[u]..offsets[u + 1] {
                let v = targets[i];
                let nd = d + weights[i];
                if nd < self.dist[v] {
                    if self.dist[v] == UNREACHABLE {
                        self.touched.push(v);
                    }
                    self.dist[v] = nd;
                    self.heap.push(Reverse((nd, v)));
                }
            }
        }
        (depth, settled)
    }

    /// Truncated search settling exactly `s` vertices in `(distance, id)` order.
    pub(crate) fn nearest_s(
        &mut self,
        g: &Graph,
        center: usize,
        s: usize,
        direction: Direction,
    ) -> Result<NearSet, SearchError> {
        let mut members = Vec::with_capacity(s);
        let mut dists = Vec::with_capacity(s);
        if g.is_weighted() {
            self.truncated_dijkstra(g, center, s, direction, &mut members, &mut dists);
        } else {
            self.truncated_bfs(g, center, s, direction, &mut members, &mut dists);
        }
        if members.len() < s {
            return Err(SearchError::InfiniteDiameter {
                center,
                direction,
                reached: members.len(),
                needed: s,
            });
        }
        let radius = *dists.last().expect("s >= 1");
        Ok(NearSet {
            center,
            direction,
            members,
            dists,
            radius,
        })
    }

    fn truncated_bfs(
        &mut self,
        g: &Graph,
        center: usize,
        s: usize,
        direction: Direction,
        members: &mut Vec<usize>,
        dists: &mut Vec<Dist>,
    ) {
        let (offsets, targets, _) = g.csr(direction);
        let epoch = self.next_epoch();
        self.stamp[center] = epoch;
        let mut level = vec![center];
        let mut next = Vec::new();
        let mut d: Dist = 0;
        while !level.is_empty() {
            level.sort_unstable();
            let room = s - members.len();
            if level.len() >= room {
                members.extend_from_slice(&level[..room]);
                dists.extend(std::iter::repeat_n(d, room));
                return;
            }
            members.extend_from_slice(&level);
            dists.extend(std::iter::repeat_n(d, level.len()));
            next.clear();
            for &u in &level {
                for &v in &targets[offsets[u]..offsets[u + 1]] {
                    if self.stamp[v] != epoch {
                        self.stamp[v] = epoch;
                        next.push(v);
                    }
                }
            }
            std::mem::swap(&mut level, &mut next);
            d += 1;
        }
    }

    fn truncated_dijkstra(
        &mut self,
        g: &Graph,
        center: usize,
        s: usize,
        direction: Direction,
        members: &mut Vec<usize>,
        dists: &mut Vec<Dist>,
    ) {
        let (offsets, targets, weights) = g.csr(direction);
        let weights = weights.expect("weighted graph");
        self.reset_dist();
        self.dist[center] = 0;
        self.touched.push(center);
        self.heap.push(Reverse((0, center)));
        while let Some(Reverse((d, u))) = self.heap.pop() {
            if d != self.dist[u] {
                continue;
            }
            members.push(u);
            dists.push(d);
            if members.len() == s {
                return;
            }
            for i in offsets[u]..offsets[u + 1] {
                let v = targets[i];
                let nd = d + weights[i];
                if nd < self.dist[v] {
                    if self.dist[v] == UNREACHABLE {
                        self.touched.push(v);
                    }
                    self.dist[v] = nd;
                    self.heap.push(Reverse((nd, v)));
                }
            }
        }
    }
}

/// Full search from `source`. `Direction::In` searches the reversed graph,
/// so `dist[v]` is then the distance from `v` to `source`.
pub fn search(g: &Graph, source: usize, direction: Direction) -> SearchTree {
    assert!(source < g.n(), "source {source} out of range");
    let (dist, order) = if g.is_weighted() {
        dijkstra_full(g, source, direction)
    } else {
        bfs_full(g, source, direction)
    };
    let depth = order.last().map_or(0, |&v| dist[v]);
    SearchTree {
        source,
        direction,
        dist,
        depth,
        order,
    }
}

fn bfs_full(g: &Graph, source: usize, direction: Direction) -> (Vec<Dist>, Vec<usize>) {
    let (offsets, targets, _) = g.csr(direction);
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut order = vec![source];
    dist[source] = 0;
    let mut start = 0;
    while start < order.len() {
        let end = order.len();
        order[start..end].sort_unstable();
        for i in start..end {
            let u = order[i];
            let du = dist[u] + 1;
            for &v in &targets[offsets[u]..offsets[u + 1]] {
                if dist[v] == UNREACHABLE {
                    dist[v] = du;
                    order.push(v);
                }
            }
        }
        start = end;
    }
    (dist, order)
}

fn dijkstra_full(g: &Graph, source: usize, direction: Direction) -> (Vec<Dist>, Vec<usize>) {
    let (offsets, targets, weights) = g.csr(direction);
    let weights = weights.expect("weighted graph");
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut order = Vec::new();
    let mut heap = BinaryHeap::new();
    dist[source] = 0;
    heap.push(Reverse((0, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d != dist[u] {
            continue;
        }
        order.push(u);
        for i in offsets[u]..offsets[u + 1] {
            let v = targets[i];
            let nd = d + weights[i];
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((nd, v)));
            }
        }
    }
    (dist, order)
}

/// Depth of the search tree rooted at `source` (the eccentricity of
/// `source` in that direction, ignoring unreachable vertices).
pub fn eccentricity(g: &Graph, source: usize, direction: Direction) -> Dist {
    Workspace::new(g.n()).depth(g, source, direction).0
}

pub(crate) fn reach_count(g: &Graph, source: usize, direction: Direction) -> usize {
    Workspace::new(g.n()).depth(g, source, direction).1
}

/// Depths of the search trees rooted at each of `sources`, in input order.
/// Searches run in parallel; the result does not depend on scheduling.
pub fn depths(g: &Graph, sources: &[usize], direction: Direction) -> Vec<Dist> {
    sources
        .par_iter()
        .map_init(
            || Workspace::new(g.n()),
            |ws, &v| ws.depth(g, v, direction).0,
        )
        .collect()
}

/// The `s` closest vertices to or from `center`, ties broken by smaller id.
pub fn nearest_s(
    g: &Graph,
    center: usize,
    s: usize,
    direction: Direction,
) -> Result<NearSet, SearchError> {
    check_vertex(g, center)?;
    assert!(s >= 1 && s <= g.n(), "s = {s} outside 1..={}", g.n());
    Workspace::new(g.n()).nearest_s(g, center, s, direction)
}

/// [`nearest_s`] for every vertex, computed in parallel.
pub fn nearest_s_all(g: &Graph, s: usize, direction: Direction) -> Result<Vec<NearSet>, SearchError> {
    assert!(s >= 1 && s <= g.n(), "s = {s} outside 1..={}", g.n());
    (0..g.n())
        .into_par_iter()
        .map_init(
            || Workspace::new(g.n()),
            |ws, v| ws.nearest_s(g, v, s, direction),
        )
        .collect()
}

/// Closest member of `set` for every vertex: with `Direction::Out` the
/// distance runs from the vertex to the set, with `Direction::In` from the set
/// to the vertex. Ties go to the member with the smaller id.
///
/// Equivalent to one search from an extra vertex `r` joined to every member,
/// where the member is the last vertex before `r` on the shortest path. The
/// super-node is virtual: all members are seeded at distance 0 and carry
/// their own id as a label, which propagates along shortest paths taking the
/// minimum at every merge.
pub fn nearest_in_set(
    g: &Graph,
    set: &[usize],
    direction: Direction,
) -> Result<NearestInSet, SearchError> {
    if set.is_empty() {
        return Err(SearchError::EmptySet);
    }
    for &v in set {
        check_vertex(g, v)?;
    }
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    // Distance from v to the set means walking edges backwards from the set.
    let walk = direction.reversed();
    Ok(if g.is_weighted() {
        labelled_dijkstra(g, &members, walk)
    } else {
        labelled_bfs(g, &members, walk)
    })
}

fn labelled_bfs(g: &Graph, members: &[usize], walk: Direction) -> NearestInSet {
    let (offsets, targets, _) = g.csr(walk);
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut label = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for &m in members {
        dist[m] = 0;
        label[m] = m;
        queue.push(m);
    }
    // FIFO order finishes every level before the next is expanded, so a
    // vertex's label is final by the time it is dequeued.
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let du = dist[u] + 1;
        for &v in &targets[offsets[u]..offsets[u + 1]] {
            if dist[v] == UNREACHABLE {
                dist[v] = du;
                label[v] = label[u];
                queue.push(v);
            } else if dist[v] == du && label[u] < label[v] {
                label[v] = label[u];
            }
        }
    }
    finish_labels(dist, label)
}

fn labelled_dijkstra(g: &Graph, members: &[usize], walk: Direction) -> NearestInSet {
    let (offsets, targets, weights) = g.csr(walk);
    let weights = weights.expect("weighted graph");
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut label = vec![usize::MAX; n];
    let mut heap = BinaryHeap::new();
    for &m in members {
        dist[m] = 0;
        label[m] = m;
        heap.push(Reverse((0, m, m)));
    }
    // Keys (distance, label) compose lexicographically along paths, so
    // Dijkstra stays exact even across zero-weight edges.
    while let Some(Reverse((d, l, u))) = heap.pop() {
        if d != dist[u] || l != label[u] {
            continue;
        }
        for i in offsets[u]..offsets[u + 1] {
            let v = targets[i];
            let nd = d + weights[i];
            if (nd, l) < (dist[v], label[v]) {
                dist[v] = nd;
                label[v] = l;
                heap.push(Reverse((nd, l, v)));
            }
        }
    }
    finish_labels(dist, label)
}

fn finish_labels(dist: Vec<Dist>, label: Vec<usize>) -> NearestInSet {
    let nearest = label
        .into_iter()
        .map(|l| (l != usize::MAX).then_some(l))
        .collect();
    NearestInSet { nearest, dist }
}

/// Vertices of out-degree at least `delta`, ascending.
pub fn high_degree_vertices(g: &Graph, delta: usize) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.out_degree(v) >= delta).collect()
}

/// For every vertex, the closest vertex (from it) of out-degree at least
/// `delta`. When no vertex qualifies every entry is unreachable.
pub fn nearest_high_degree(g: &Graph, delta: usize) -> NearestInSet {
    let hubs = high_degree_vertices(g, delta);
    if hubs.is_empty() {
        return NearestInSet {
            nearest: vec![None; g.n()],
            dist: vec![UNREACHABLE; g.n()],
        };
    }
    nearest_in_set(g, &hubs, Direction::Out).expect("nonempty in-range set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, false, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, false, (1..n).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn path_distances() {
        let t = search(&path(10), 0, Direction::Out);
        assert_eq!(t.depth, 9);
        assert_eq!(t.dist, (0..10).collect::<Vec<Dist>>());
        assert_eq!(t.order, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn star_center_depth() {
        assert_eq!(search(&star(6), 0, Direction::Out).depth, 1);
        assert_eq!(eccentricity(&star(6), 3, Direction::In), 2);
    }

    #[test]
    fn order_breaks_ties_by_id() {
        let g = Graph::from_edges(5, true, [(0, 4), (0, 2), (4, 1), (2, 3)]).unwrap();
        let t = search(&g, 0, Direction::Out);
        assert_eq!(t.order, vec![0, 2, 4, 1, 3]);
        assert_eq!(t.within(1), &[0, 2, 4]);
    }

    #[test]
    fn unreachable_vertices_use_sentinel() {
        let g = Graph::from_edges(3, true, [(0, 1)]).unwrap();
        let t = search(&g, 0, Direction::Out);
        assert_eq!(t.dist[2], UNREACHABLE);
        assert_eq!(t.depth, 1);
        assert_eq!(t.reached(), 2);
        let back = search(&g, 1, Direction::In);
        assert_eq!(back.dist, vec![1, 0, UNREACHABLE]);
    }

    #[test]
    fn weighted_search() {
        let g = Graph::from_weighted_edges(4, true, [(0, 1, 5), (0, 2, 1), (2, 1, 1), (1, 3, 0)]).unwrap();
        let t = search(&g, 0, Direction::Out);
        assert_eq!(t.dist, vec![0, 2, 1, 2]);
        assert_eq!(t.order, vec![0, 2, 1, 3]);
        assert_eq!(t.depth, 2);
    }

    #[test]
    fn nearest_s_single_member() {
        let ns = nearest_s(&path(5), 3, 1, Direction::Out).unwrap();
        assert_eq!(ns.members, vec![3]);
        assert_eq!(ns.radius, 0);
        assert!(ns.inner_ball().is_empty());
    }

    #[test]
    fn nearest_s_tie_break() {
        let g = path(5);
        let three = nearest_s(&g, 2, 3, Direction::Out).unwrap();
        assert_eq!(three.members, vec![2, 1, 3]);
        assert_eq!(three.radius, 1);
        let two = nearest_s(&g, 2, 2, Direction::Out).unwrap();
        assert_eq!(two.members, vec![2, 1]);
        assert_eq!(three.inner_ball(), vec![2]);
    }

    #[test]
    fn nearest_s_reports_infinite_diameter() {
        let g = Graph::from_edges(3, true, [(0, 1)]).unwrap();
        assert!(matches!(
            nearest_s(&g, 0, 3, Direction::Out),
            Err(SearchError::InfiniteDiameter { reached: 2, .. })
        ));
    }

    #[test]
    fn nearest_in_whole_set_is_self() {
        let g = path(6);
        let all: Vec<usize> = (0..6).collect();
        let r = nearest_in_set(&g, &all, Direction::Out).unwrap();
        assert_eq!(r.nearest, (0..6).map(Some).collect::<Vec<_>>());
        assert_eq!(r.dist, vec![0; 6]);
    }

    #[test]
    fn nearest_in_singleton_matches_in_search() {
        let g = Graph::from_edges(4, true, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = nearest_in_set(&g, &[2], Direction::Out).unwrap();
        assert_eq!(r.dist, search(&g, 2, Direction::In).dist);
    }

    #[test]
    fn nearest_in_set_ties_go_to_smaller_member() {
        // 2 is equidistant from 1 and 3.
        let g = path(5);
        let r = nearest_in_set(&g, &[3, 1], Direction::Out).unwrap();
        assert_eq!(r.nearest[2], Some(1));
        assert_eq!(r.nearest[4], Some(3));
        assert_eq!(r.dist[0], 1);
        assert_eq!(nearest_in_set(&g, &[], Direction::Out), Err(SearchError::EmptySet));
    }

    #[test]
    fn high_degree_cases() {
        let g = star(5);
        let zero = nearest_high_degree(&g, 0);
        assert_eq!(zero.nearest, (0..5).map(Some).collect::<Vec<_>>());
        let two = nearest_high_degree(&g, 2);
        assert_eq!(two.nearest[3], Some(0));
        assert_eq!(two.dist[3], 1);
        let none = nearest_high_degree(&g, 10);
        assert!(none.nearest.iter().all(Option::is_none));
        assert!(none.dist.iter().all(|&d| d == UNREACHABLE));
    }
}
