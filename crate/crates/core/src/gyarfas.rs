//! Gyárfás decompositions of connected bipartite graphs.
//!
//! The root bag is a single vertex. Each further bag is `N(h) ∩ C`, where `C`
//! is a connected piece of unassigned vertices hanging below the parent bag
//! and the hook `h` is the smallest vertex of the parent with a neighbour in
//! `C`.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{components_within, connected_components, Adjacency, BipartiteGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("root {root} out of range (n = {n})")]
    RootOutOfRange { root: usize, n: usize },
    #[error("graph is disconnected: root reaches {reached} of {n} vertices")]
    Disconnected { reached: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bag {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub parent: Option<usize>,
    pub hook: Option<usize>,
    pub depth: usize,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct GyarfasTree {
    graph: Arc<BipartiteGraph>,
    root: usize,
    bags: Vec<Bag>,
    bag_of: Vec<Option<usize>>,
}

/// Root used for a component: its smallest left vertex, else its smallest vertex.
pub fn default_root(g: &BipartiteGraph, component: &[usize]) -> usize {
    component.iter().copied().filter(|&v| g.is_left(v)).min().unwrap_or_else(|| component[0])
}

/// Decomposes a connected graph from `root`.
pub fn gyarfas_decompose(g: Arc<BipartiteGraph>, root: usize) -> Result<GyarfasTree, DecompositionError> {
    let n = g.n();
    if root >= n {
        return Err(DecompositionError::RootOutOfRange { root, n });
    }
    let tree = decompose_component(g, root);
    let reached = tree.vertex_count();
    if reached != n {
        return Err(DecompositionError::Disconnected { reached, n });
    }
    Ok(tree)
}

/// Decomposes the component of `root`; other components are ignored.
pub fn decompose_component(g: Arc<BipartiteGraph>, root: usize) -> GyarfasTree {
    let n = g.n();
    let mut unassigned = vec![true; n];
    unassigned[root] = false;
    let mut bags = vec![Bag { vertices: vec![root], parent: None, hook: None, depth: 0, children: Vec::new() }];
    let mut queue = VecDeque::new();
    for c in components_within(&*g, &unassigned) {
        if c.iter().any(|&v| g.adjacent(root, v)) {
            queue.push_back((0, c));
        }
    }
    while let Some((b, comp)) = queue.pop_front() {
        let hook = *bags[b]
            .vertices
            .iter()
            .find(|&&u| g.neighbors(u).iter().any(|w| comp.binary_search(w).is_ok()))
            .expect("piece hangs below its bag");
        let vertices: Vec<usize> = comp.iter().copied().filter(|&w| g.adjacent(hook, w)).collect();
        let id = bags.len();
        let depth = bags[b].depth + 1;
        bags[b].children.push(id);
        bags.push(Bag { vertices: vertices.clone(), parent: Some(b), hook: Some(hook), depth, children: Vec::new() });
        let mut rest = vec![false; n];
        for &w in &comp {
            rest[w] = true;
        }
        for &w in &vertices {
            rest[w] = false;
            unassigned[w] = false;
        }
        for piece in components_within(&*g, &rest) {
            queue.push_back((id, piece));
        }
    }
    GyarfasTree::from_bags(g, root, bags)
}

/// One tree per component, each rooted at [`default_root`].
#[derive(Debug, Clone)]
pub struct GyarfasForest {
    pub trees: Vec<GyarfasTree>,
    component_of: Vec<usize>,
}

impl GyarfasForest {
    pub fn new(g: Arc<BipartiteGraph>) -> Self {
        let mut trees = Vec::new();
        let mut component_of = vec![0; g.n()];
        for (i, comp) in connected_components(&*g).into_iter().enumerate() {
            for &v in &comp {
                component_of[v] = i;
            }
            trees.push(decompose_component(g.clone(), default_root(&g, &comp)));
        }
        GyarfasForest { trees, component_of }
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn tree_of(&self, v: usize) -> &GyarfasTree {
        &self.trees[self.component_of[v]]
    }

    /// All bags with globally consecutive ids, in component order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let mut offset = 0;
        for t in &self.trees {
            out.push_str(&t.dump_with_offset(offset));
            offset += t.bags.len();
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    Partition,
    RootSingleton,
    AncestorEdges,
    Connected,
    Hook,
    Alternation,
}

impl Clause {
    /// Number of the clause in the definition; alternation is a consequence.
    pub fn number(self) -> Option<u8> {
        match self {
            Clause::Partition => Some(1),
            Clause::RootSingleton => Some(2),
            Clause::AncestorEdges => Some(3),
            Clause::Connected => Some(4),
            Clause::Hook => Some(5),
            Clause::Alternation => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.clause.number() {
            Some(k) => write!(f, "clause-{k}: {}", self.detail),
            None => write!(f, "alternation: {}", self.detail),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, clause: Clause) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }

    fn push(&mut self, clause: Clause, detail: String) {
        self.violations.push(Violation { clause, detail });
    }
}

impl GyarfasTree {
    /// Assembles a tree from explicit bags without checking it; see [`Self::verify`].
    pub fn from_bags(graph: Arc<BipartiteGraph>, root: usize, bags: Vec<Bag>) -> Self {
        let mut bag_of = vec![None; graph.n()];
        for (i, b) in bags.iter().enumerate() {
            for &v in &b.vertices {
                if v < bag_of.len() && bag_of[v].is_none() {
                    bag_of[v] = Some(i);
                }
            }
        }
        GyarfasTree { graph, root, bags, bag_of }
    }

    pub fn graph(&self) -> &Arc<BipartiteGraph> {
        &self.graph
    }

    pub fn root_vertex(&self) -> usize {
        self.root
    }

    pub fn bags(&self) -> &[Bag] {
        &self.bags
    }

    pub fn bag(&self, b: usize) -> &Bag {
        &self.bags[b]
    }

    pub fn into_bags(self) -> Vec<Bag> {
        self.bags
    }

    pub fn bag_of(&self, v: usize) -> Option<usize> {
        self.bag_of.get(v).copied().flatten()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bag_of(v).is_some()
    }

    pub fn depth_of(&self, v: usize) -> Option<usize> {
        self.bag_of(v).map(|b| self.bags[b].depth)
    }

    pub fn vertex_count(&self) -> usize {
        self.bags.iter().map(|b| b.vertices.len()).sum()
    }

    pub fn max_depth(&self) -> usize {
        self.bags.iter().map(|b| b.depth).max().unwrap_or(0)
    }

    /// Ancestors of `b`, parent first.
    pub fn ancestors(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.bags[b].parent;
        while let Some(p) = cur {
            if out.len() > self.bags.len() {
                break;
            }
            out.push(p);
            cur = self.bags[p].parent;
        }
        out
    }

    /// Whether `a` is `b` or an ancestor of `b`.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        a == b || self.ancestors(b).contains(&a)
    }

    /// The ancestor of `b` at depth `d`, or `b` itself when it has that depth.
    pub fn ancestor_at_depth(&self, b: usize, d: usize) -> Option<usize> {
        let mut cur = b;
        loop {
            let bag = &self.bags[cur];
            if bag.depth == d {
                return Some(cur);
            }
            if bag.depth < d {
                return None;
            }
            cur = bag.parent?;
        }
    }

    /// Strict descendants of `b` in preorder.
    pub fn descendants(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack: Vec<usize> = self.bags[b].children.iter().rev().copied().collect();
        while let Some(c) = stack.pop() {
            if out.len() > self.bags.len() {
                break;
            }
            out.push(c);
            stack.extend(self.bags[c].children.iter().rev());
        }
        out
    }

    fn has_edge_between(&self, a: usize, b: usize) -> bool {
        let other = &self.bags[b].vertices;
        self.bags[a]
            .vertices
            .iter()
            .any(|&u| self.graph.neighbors(u).iter().any(|w| other.binary_search(w).is_ok()))
    }

    /// Ancestors of `b` joined to `b` by an edge, parent first.
    pub fn back_list(&self, b: usize) -> Vec<usize> {
        self.ancestors(b).into_iter().filter(|&a| self.has_edge_between(a, b)).collect()
    }

    /// Number of ancestors joined to `b` by an edge.
    pub fn back_degree(&self, b: usize, include_parent: bool) -> usize {
        let parent = self.bags[b].parent;
        self.back_list(b).into_iter().filter(|&a| include_parent || Some(a) != parent).count()
    }

    /// `G_B`: the bag `b` with its descendants of opposite depth parity.
    ///
    /// Returns the induced graph (sides inherited) and the map from its
    /// vertex ids to ids of the decomposed graph.
    pub fn parity_subgraph(&self, b: usize) -> (BipartiteGraph, Vec<usize>) {
        let parity = self.bags[b].depth % 2;
        let mut vs = self.bags[b].vertices.clone();
        for d in self.descendants(b) {
            if self.bags[d].depth % 2 != parity {
                vs.extend(&self.bags[d].vertices);
            }
        }
        self.graph.induced(&vs)
    }

    /// `v`, then the hook of its bag, then that hook's hook, up to the root.
    pub fn hook_path(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(h) = self.bag_of(cur).and_then(|b| self.bags[b].hook) {
            out.push(h);
            cur = h;
        }
        out
    }

    pub fn dump(&self) -> String {
        self.dump_with_offset(0)
    }

    /// `bag <id> <depth> <parent|-1> <hook|-1> : <vertices>` per bag.
    pub fn dump_with_offset(&self, offset: usize) -> String {
        let mut out = String::new();
        for (i, b) in self.bags.iter().enumerate() {
            let parent = b.parent.map_or("-1".to_string(), |p| (p + offset).to_string());
            let hook = b.hook.map_or("-1".to_string(), |h| h.to_string());
            let vs: Vec<String> = b.vertices.iter().map(|v| v.to_string()).collect();
            writeln!(out, "bag {} {} {} {} : {}", i + offset, b.depth, parent, hook, vs.join(" ")).unwrap();
        }
        out
    }

    /// Checks every clause of the definition against the graph.
    pub fn verify(&self) -> VerifyReport {
        let mut r = VerifyReport::default();
        let g = &*self.graph;
        let k = self.bags.len();
        if k == 0 {
            r.push(Clause::RootSingleton, "no bags".into());
            return r;
        }

        // Clause 2 and tree shape.
        if self.bags[0].vertices != [self.root] {
            r.push(Clause::RootSingleton, format!("root bag is not {{{}}}", self.root));
        }
        if self.bags[0].parent.is_some() || self.bags[0].depth != 0 {
            r.push(Clause::RootSingleton, "root bag has a parent or nonzero depth".into());
        }
        let mut shape_ok = true;
        for (i, b) in self.bags.iter().enumerate().skip(1) {
            match b.parent {
                Some(p) if p < k && p != i && self.bags[p].depth + 1 == b.depth && self.bags[p].children.contains(&i) => {}
                _ => {
                    shape_ok = false;
                    r.push(Clause::RootSingleton, format!("bag {i} is not attached below the root"));
                }
            }
        }
        if !shape_ok {
            return r;
        }

        // Clause 1.
        let comp = connected_components(g).into_iter().find(|c| c.contains(&self.root)).unwrap_or_default();
        let mut count = vec![0usize; g.n()];
        for (i, b) in self.bags.iter().enumerate() {
            if b.vertices.is_empty() {
                r.push(Clause::Partition, format!("bag {i} is empty"));
            }
            for &v in &b.vertices {
                if v >= g.n() {
                    r.push(Clause::Partition, format!("bag {i} holds unknown vertex {v}"));
                } else {
                    count[v] += 1;
                }
            }
        }
        for v in 0..g.n() {
            let expected = usize::from(comp.binary_search(&v).is_ok());
            if count[v] != expected {
                r.push(Clause::Partition, format!("vertex {v} lies in {} bags, expected {expected}", count[v]));
            }
        }
        if r.has(Clause::Partition) {
            return r;
        }

        // Clause 3.
        for &u in &comp {
            for &w in g.neighbors(u) {
                if u < w {
                    let (a, b) = (self.bag_of[u].unwrap(), self.bag_of[w].unwrap());
                    if !self.is_ancestor(a, b) && !self.is_ancestor(b, a) {
                        r.push(Clause::AncestorEdges, format!("edge {u}-{w} joins unrelated bags {a} and {b}"));
                    }
                }
            }
        }

        // Clause 4.
        for i in 0..k {
            let mut allowed = vec![false; g.n()];
            for d in std::iter::once(i).chain(self.descendants(i)) {
                for &v in &self.bags[d].vertices {
                    allowed[v] = true;
                }
            }
            if components_within(g, &allowed).len() > 1 {
                r.push(Clause::Connected, format!("bag {i} with its descendants is disconnected"));
            }
        }

        // Clause 5.
        for (i, b) in self.bags.iter().enumerate().skip(1) {
            let parent = b.parent.unwrap();
            let Some(h) = b.hook else {
                r.push(Clause::Hook, format!("bag {i} has no hook"));
                continue;
            };
            if self.bag_of.get(h).copied().flatten() != Some(parent) {
                r.push(Clause::Hook, format!("hook {h} of bag {i} is not in its parent bag"));
                continue;
            }
            if let Some(&v) = b.vertices.iter().find(|&&v| !g.adjacent(h, v)) {
                r.push(Clause::Hook, format!("hook {h} misses {v} in bag {i}"));
            }
            for d in self.descendants(i) {
                if let Some(&v) = self.bags[d].vertices.iter().find(|&&v| g.adjacent(h, v)) {
                    r.push(Clause::Hook, format!("hook {h} of bag {i} sees descendant {v}"));
                }
            }
        }

        // Sides alternate with depth.
        let root_side = g.side(self.root);
        for (i, b) in self.bags.iter().enumerate() {
            for &v in &b.vertices {
                if (g.side(v) == root_side) != (b.depth % 2 == 0) {
                    r.push(Clause::Alternation, format!("vertex {v} in bag {i} at depth {}", b.depth));
                }
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{cycle, path, path_position, subdivided_star};

    fn tree(g: BipartiteGraph, root: usize) -> GyarfasTree {
        gyarfas_decompose(Arc::new(g), root).unwrap()
    }

    #[test]
    fn star_gets_one_bag_per_leaf() {
        let g = BipartiteGraph::new(1, 5, (0..5).map(|b| (0, b))).unwrap();
        let t = tree(g.clone(), 0);
        assert_eq!(t.bags().len(), 6);
        for (i, bag) in t.bags().iter().enumerate().skip(1) {
            assert_eq!(bag.vertices, vec![i]);
            assert_eq!(bag.hook, Some(0));
            assert_eq!(t.back_degree(i, false), 0);
        }
        assert!(t.verify().is_valid());

        // All leaves in one bag breaks the connectivity clause.
        let merged = vec![
            Bag { vertices: vec![0], parent: None, hook: None, depth: 0, children: vec![1] },
            Bag { vertices: (1..6).collect(), parent: Some(0), hook: Some(0), depth: 1, children: vec![] },
        ];
        let r = GyarfasTree::from_bags(Arc::new(g), 0, merged).verify();
        assert_eq!(r.violations.len(), 1);
        assert!(r.has(Clause::Connected));
    }

    #[test]
    fn path_gives_a_chain_of_singletons() {
        let t = tree(path(5), path_position(5, 0));
        assert_eq!(t.bags().len(), 5);
        for i in 1..5 {
            let b = t.bag_of(path_position(5, i)).unwrap();
            assert_eq!(t.bag(b).vertices.len(), 1);
            assert_eq!(t.bag(b).depth, i);
            assert_eq!(t.bag(b).hook, Some(path_position(5, i - 1)));
            assert_eq!(t.back_degree(b, false), 0);
        }
        let v: Vec<usize> = (0..5).rev().map(|p| path_position(5, p)).collect();
        assert_eq!(t.hook_path(v[0]), v);
    }

    #[test]
    fn six_cycle() {
        let v = |p: usize| path_position(6, p);
        let t = tree(cycle(6).unwrap(), v(0));
        let bags: Vec<Vec<usize>> = t.bags().iter().map(|b| b.vertices.clone()).collect();
        let mut second = vec![v(1), v(5)];
        second.sort();
        assert_eq!(bags, vec![vec![v(0)], second, vec![v(2)], vec![v(3)], vec![v(4)]]);
        let last = t.bag_of(v(4)).unwrap();
        assert_eq!(t.back_degree(last, false), 1);
        assert_eq!(t.hook_path(v(4)), vec![v(4), v(3), v(2), v(1), v(0)]);
        let (gb, map) = t.parity_subgraph(t.bag_of(v(1)).unwrap());
        let mut expected = vec![v(1), v(5), v(2), v(4)];
        expected.sort();
        assert_eq!(map, expected);
        assert_eq!(gb.n(), 4);
        assert!(t.verify().is_valid());
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = BipartiteGraph::new(2, 2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(
            gyarfas_decompose(Arc::new(g), 0).unwrap_err(),
            DecompositionError::Disconnected { reached: 2, n: 4 }
        );
    }

    #[test]
    fn forest_covers_components() {
        let g = Arc::new(BipartiteGraph::new(3, 2, [(0, 0), (1, 1)]).unwrap());
        let f = GyarfasForest::new(g);
        assert_eq!(f.trees.len(), 3);
        assert_eq!(f.dump().lines().count(), 5);
        assert!(f.trees.iter().all(|t| t.verify().is_valid()));
    }

    #[test]
    fn mutations_are_caught() {
        let g = Arc::new(subdivided_star(3, 3));
        let t = gyarfas_decompose(g.clone(), 0).unwrap();
        assert!(t.verify().is_valid());

        // A vertex copied into a second bag.
        let mut bags = t.clone().into_bags();
        let extra = bags[2].vertices[0];
        bags[1].vertices.push(extra);
        bags[1].vertices.sort();
        let r = GyarfasTree::from_bags(g.clone(), 0, bags).verify();
        assert!(r.has(Clause::Partition));
        assert!(r.violations[0].to_string().starts_with("clause-1"));

        // A hook moved to the grandparent bag.
        let mut bags = t.clone().into_bags();
        let deep = bags.iter().position(|b| b.depth == 2).unwrap();
        bags[deep].hook = Some(0);
        let r = GyarfasTree::from_bags(g.clone(), 0, bags).verify();
        assert!(r.has(Clause::Hook));

        // A non-singleton root.
        let mut bags = t.into_bags();
        let moved = bags[1].vertices.pop().unwrap();
        bags[0].vertices.push(moved);
        let r = GyarfasTree::from_bags(g, 0, bags).verify();
        assert!(r.has(Clause::RootSingleton));
    }
}
