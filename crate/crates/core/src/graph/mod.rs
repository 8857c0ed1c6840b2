//! Simple graphs and bipartite graphs with a fixed bipartition.
//!
//! A [`BipartiteGraph`] uses one vertex space: left vertices are `0..n_left`
//! and right vertices are `n_left..n_left + n_right`.

mod bitset;
pub mod format;
pub mod generate;

use std::collections::{BTreeSet, HashSet, VecDeque};

use thiserror::Error;

pub use bitset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (size {size})")]
    OutOfRange { vertex: usize, size: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at {0}")]
    SelfLoop(usize),
    #[error("vertex sets are not disjoint")]
    Overlap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Read access shared by both graph types.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[usize];

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }
}

fn sorted_adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, size: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            list.push((u, v));
        }
        Ok(Graph { adj: sorted_adjacency(n, &list) })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let index = index_map(self.vertex_count(), vertices);
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for &w in &self.adj[u] {
                if let Some(j) = index[w] {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        Graph { adj: sorted_adjacency(vertices.len(), &edges) }
    }
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }
    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n_left: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds a graph from edges given as `(left index, right index)` pairs.
    pub fn new(
        n_left: usize,
        n_right: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n_left {
                return Err(GraphError::OutOfRange { vertex: a, size: n_left });
            }
            if b >= n_right {
                return Err(GraphError::OutOfRange { vertex: b, size: n_right });
            }
            if !seen.insert((a, b)) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            list.push((a, n_left + b));
        }
        Ok(BipartiteGraph { n_left, adj: sorted_adjacency(n_left + n_right, &list) })
    }

    pub fn empty(n_left: usize, n_right: usize) -> Self {
        BipartiteGraph { n_left, adj: vec![Vec::new(); n_left + n_right] }
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.adj.len() - self.n_left
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn side(&self, v: usize) -> Side {
        if v < self.n_left {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn is_left(&self, v: usize) -> bool {
        v < self.n_left
    }

    /// Index of `v` within its own side.
    pub fn side_index(&self, v: usize) -> usize {
        if v < self.n_left {
            v
        } else {
            v - self.n_left
        }
    }

    pub fn left_vertex(&self, i: usize) -> usize {
        i
    }

    pub fn right_vertex(&self, j: usize) -> usize {
        self.n_left + j
    }

    pub fn left_vertices(&self) -> std::ops::Range<usize> {
        0..self.n_left
    }

    pub fn right_vertices(&self) -> std::ops::Range<usize> {
        self.n_left..self.n()
    }

    /// Edges as `(left index, right index)` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n_left {
            out.extend(self.adj[a].iter().map(|&w| (a, w - self.n_left)));
        }
        out
    }

    /// The bipartite complement: same sides, cross pairs toggled.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        let nl = self.n_left;
        let mut edges = Vec::new();
        for a in 0..nl {
            let mut it = self.adj[a].iter().peekable();
            for w in nl..self.n() {
                if it.peek() == Some(&&w) {
                    it.next();
                } else {
                    edges.push((a, w));
                }
            }
        }
        BipartiteGraph { n_left: nl, adj: sorted_adjacency(self.n(), &edges) }
    }

    /// Subgraph induced by `vertices` with sides inherited.
    ///
    /// Returns the graph and the map from new ids to old ids. Left vertices
    /// keep their relative order, followed by right vertices.
    pub fn induced(&self, vertices: &[usize]) -> (BipartiteGraph, Vec<usize>) {
        let mut sorted: Vec<usize> = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let n_left = sorted.partition_point(|&v| v < self.n_left);
        let index = index_map(self.n(), &sorted);
        let mut edges = Vec::new();
        for (i, &u) in sorted[..n_left].iter().enumerate() {
            for &w in &self.adj[u] {
                if let Some(j) = index[w] {
                    edges.push((i, j));
                }
            }
        }
        (BipartiteGraph { n_left, adj: sorted_adjacency(sorted.len(), &edges) }, sorted)
    }

    /// Same graph with the sides exchanged; vertex `v` maps to position
    /// `transpose_vertex(v)`.
    pub fn transpose(&self) -> BipartiteGraph {
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(a, b)| (b, a)).collect();
        BipartiteGraph::new(self.n_right(), self.n_left, edges).expect("valid transpose")
    }

    pub fn transpose_vertex(&self, v: usize) -> usize {
        if v < self.n_left {
            self.n_right() + v
        } else {
            v - self.n_left
        }
    }

    /// Forgets the bipartition.
    pub fn to_graph(&self) -> Graph {
        Graph { adj: self.adj.clone() }
    }
}

impl Adjacency for BipartiteGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }
    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

pub(crate) fn index_map(n: usize, vertices: &[usize]) -> Vec<Option<usize>> {
    let mut index = vec![None; n];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = Some(i);
    }
    index
}

/// Free-function form of [`BipartiteGraph::bipartite_complement`].
pub fn bipartite_complement(g: &BipartiteGraph) -> BipartiteGraph {
    g.bipartite_complement()
}

/// The bipartite graph `G[X, Y]` on two disjoint vertex sets of `g`.
///
/// Left vertices are `x` sorted, right vertices are `y` sorted. Returns the
/// graph with the ids of the chosen vertices in `g`, left then right.
pub fn semi_induced<G: Adjacency>(
    g: &G,
    x: &[usize],
    y: &[usize],
) -> Result<(BipartiteGraph, Vec<usize>), GraphError> {
    let n = g.vertex_count();
    let mut xs: Vec<usize> = x.to_vec();
    let mut ys: Vec<usize> = y.to_vec();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    for &v in xs.iter().chain(&ys) {
        if v >= n {
            return Err(GraphError::OutOfRange { vertex: v, size: n });
        }
    }
    let xset: BTreeSet<usize> = xs.iter().copied().collect();
    if ys.iter().any(|v| xset.contains(v)) {
        return Err(GraphError::Overlap);
    }
    let mut edges = Vec::new();
    for (i, &u) in xs.iter().enumerate() {
        for (j, &w) in ys.iter().enumerate() {
            if g.adjacent(u, w) {
                edges.push((i, j));
            }
        }
    }
    let graph = BipartiteGraph::new(xs.len(), ys.len(), edges)?;
    xs.extend(ys);
    Ok((graph, xs))
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components<G: Adjacency + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components of the subgraph induced by `allowed`.
pub(crate) fn components_within<G: Adjacency + ?Sized>(g: &G, allowed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !allowed[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if allowed[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Shortest path inside `allowed` from any vertex of `from` to any vertex of `to`.
pub(crate) fn shortest_path_within<G: Adjacency + ?Sized>(
    g: &G,
    allowed: &[bool],
    from: &[usize],
    to: &[usize],
) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let target: HashSet<usize> = to.iter().copied().collect();
    for &s in from {
        if allowed[s] && !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        if target.contains(&u) {
            let mut path = vec![u];
            let mut cur = u;
            while prev[cur] != usize::MAX {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unified_vertex_space() {
        let g = BipartiteGraph::new(2, 3, [(0, 0), (1, 2)]).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.adjacent(0, 2));
        assert!(g.adjacent(1, 4));
        assert!(!g.adjacent(0, 1));
        assert_eq!(g.side(3), Side::Right);
        assert_eq!(g.edges(), vec![(0, 0), (1, 2)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            BipartiteGraph::new(2, 2, [(0, 0), (0, 0)]),
            Err(GraphError::DuplicateEdge(0, 0))
        );
        assert!(matches!(
            BipartiteGraph::new(2, 2, [(0, 2)]),
            Err(GraphError::OutOfRange { .. })
        ));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(1, 0)));
        assert_eq!(Graph::new(3, [(2, 2)]), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn complement_of_biclique_is_edgeless() {
        let g = BipartiteGraph::new(3, 3, (0..3).flat_map(|a| (0..3).map(move |b| (a, b)))).unwrap();
        assert_eq!(g.bipartite_complement().edge_count(), 0);
        assert_eq!(g.bipartite_complement().bipartite_complement(), g);
    }

    #[test]
    fn semi_induced_rejects_overlap() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(semi_induced(&g, &[0, 1], &[1, 2]).unwrap_err(), GraphError::Overlap);
        let (b, ids) = semi_induced(&g, &[2, 0], &[1, 3]).unwrap();
        assert_eq!(ids, vec![0, 2, 1, 3]);
        assert_eq!(b.edges(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn induced_keeps_sides() {
        let g = BipartiteGraph::new(3, 3, [(0, 0), (1, 1), (2, 2), (0, 2)]).unwrap();
        let (h, map) = g.induced(&[5, 0, 3]);
        assert_eq!(map, vec![0, 3, 5]);
        assert_eq!(h.n_left(), 1);
        assert_eq!(h.edges(), vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn transpose_round_trip() {
        let g = BipartiteGraph::new(2, 3, [(0, 1), (1, 2)]).unwrap();
        let t = g.transpose();
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(g.adjacent(u, v), t.adjacent(g.transpose_vertex(u), g.transpose_vertex(v)));
            }
        }
    }
}
