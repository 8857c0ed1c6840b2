use std::collections::HashMap;

use crate::graph::{Adjacency, BipartiteGraph, Graph, VertexSet};

pub const DEFAULT_CHAIN_CAP: usize = 8;

/// Pairs `(a_i, b_i)` with `a_i ~ b_j` and `b_i !~ a_j` for all `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl ChainWitness {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_valid<G: Adjacency>(&self, g: &G) -> bool {
        let k = self.a.len();
        if self.b.len() != k {
            return false;
        }
        let mut all: Vec<usize> = self.a.iter().chain(&self.b).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * k {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| g.adjacent(self.a[i], self.b[j]) && !g.adjacent(self.b[i], self.a[j]))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainIndex {
    /// The chain index, or `cap` if the search stopped there.
    pub value: usize,
    /// True when `value` reached the cap and larger chains were not searched.
    pub capped: bool,
    pub witness: ChainWitness,
}

struct Search<'a, G> {
    g: &'a G,
    nbr: Vec<VertexSet>,
    cap: usize,
    /// Best extension per pool pair, with the budget it was searched under.
    memo: HashMap<(VertexSet, VertexSet), (usize, Option<(usize, usize, usize)>)>,
}

impl<G: Adjacency> Search<'_, G> {
    /// Longest chain extension from the candidate pools, with its first pair.
    fn best(&mut self, ca: &VertexSet, cb: &VertexSet, budget: usize) -> usize {
        if budget == 0 {
            return 0;
        }
        let key = (ca.clone(), cb.clone());
        if let Some((searched, hit)) = self.memo.get(&key) {
            let v = hit.map_or(0, |h| h.0);
            if v < *searched || v >= budget {
                return v.min(budget);
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        'outer: for a in ca.iter() {
            for b in cb.iter() {
                if a == b {
                    continue;
                }
                let found = best.map_or(0, |h| h.0);
                let mut na = ca.minus(&self.nbr[b]);
                na.remove(a);
                na.remove(b);
                let mut nb = cb.intersect(&self.nbr[a]);
                nb.remove(a);
                nb.remove(b);
                if 1 + na.len().min(nb.len()) <= found {
                    continue;
                }
                let len = 1 + self.best(&na, &nb, budget - 1);
                if len > found {
                    best = Some((len, a, b));
                    if len >= budget {
                        break 'outer;
                    }
                }
            }
        }
        self.memo.insert(key, (budget, best));
        best.map_or(0, |h| h.0)
    }

    fn witness(&mut self, ca: VertexSet, cb: VertexSet, budget: usize) -> ChainWitness {
        let mut w = ChainWitness { a: Vec::new(), b: Vec::new() };
        let (mut ca, mut cb, mut budget) = (ca, cb, budget);
        while budget > 0 {
            self.best(&ca, &cb, budget);
            let Some((_, Some((_, a, b)))) = self.memo.get(&(ca.clone(), cb.clone())).copied() else {
                break;
            };
            w.a.push(a);
            w.b.push(b);
            let mut na = ca.minus(&self.nbr[b]);
            na.remove(a);
            na.remove(b);
            let mut nb = cb.intersect(&self.nbr[a]);
            nb.remove(a);
            nb.remove(b);
            ca = na;
            cb = nb;
            budget -= 1;
        }
        w
    }

    fn run(g: &G, ca: VertexSet, cb: VertexSet, cap: usize) -> ChainIndex {
        let n = g.vertex_count();
        let nbr = (0..n).map(|v| VertexSet::from_iter(n, g.neighbors(v).iter().copied())).collect();
        let mut s = Search { g, nbr, cap, memo: HashMap::new() };
        let value = s.best(&ca, &cb, cap);
        let witness = s.witness(ca, cb, cap);
        debug_assert!(witness.is_valid(s.g));
        debug_assert_eq!(witness.len(), value);
        ChainIndex { value, capped: value >= s.cap, witness }
    }
}

/// Chain index of a bipartite graph; every `a_i` is a left vertex and every
/// `b_i` a right vertex. The value does not depend on which side is called
/// left.
pub fn chain_index(g: &BipartiteGraph, cap: usize) -> ChainIndex {
    let n = g.n();
    let left = VertexSet::from_iter(n, g.left_vertices());
    let right = VertexSet::from_iter(n, g.right_vertices());
    Search::run(g, left, right, cap)
}

/// Chain index of a general graph over arbitrary disjoint vertex pairs.
pub fn chain_index_graph(g: &Graph, cap: usize) -> ChainIndex {
    let n = g.vertex_count();
    let all = VertexSet::from_iter(n, 0..n);
    Search::run(g, all.clone(), all, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{biclique, half_graph, path};

    #[test]
    fn half_graphs_have_chain_index_k() {
        for k in 1..=6 {
            let r = chain_index(&half_graph(k), DEFAULT_CHAIN_CAP);
            assert_eq!(r.value, k);
            assert!(r.witness.is_valid(&half_graph(k)));
        }
    }

    #[test]
    fn biclique_has_chain_index_one() {
        assert_eq!(chain_index(&biclique(3), DEFAULT_CHAIN_CAP).value, 1);
    }

    #[test]
    fn single_pair_is_unconstrained() {
        let g = BipartiteGraph::empty(3, 3);
        assert_eq!(chain_index(&g, DEFAULT_CHAIN_CAP).value, 1);
        let r = chain_index(&BipartiteGraph::empty(3, 0), DEFAULT_CHAIN_CAP);
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn path_on_four_vertices() {
        assert_eq!(chain_index(&path(4), DEFAULT_CHAIN_CAP).value, 2);
    }

    #[test]
    fn cap_is_reported() {
        let r = chain_index(&half_graph(6), 3);
        assert_eq!(r.value, 3);
        assert!(r.capped);
    }

    #[test]
    fn general_graph_ignores_sides() {
        let b = biclique(3);
        assert_eq!(chain_index_graph(&b.to_graph(), DEFAULT_CHAIN_CAP).value, 2);
        assert_eq!(chain_index_graph(&path(2).to_graph(), DEFAULT_CHAIN_CAP).value, 1);
    }
}
