//! The recursive protocol for bipartite graphs built on Gyárfás decompositions.
//!
//! Every sub-instance the recursion can reach is materialised up front, so the
//! shape of the protocol tree (in particular the length of each back-list
//! scan) is public: scans at recursion level `L` always take the maximum
//! length over all instances at that level, padded with [`EqOperand::Pad`].

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::graph::{connected_components, index_map, BipartiteGraph};
use crate::gyarfas::{decompose_component, default_root, GyarfasTree};
use crate::oracles::biclique_ids;

use super::{EqOperand, Protocol, ProtocolError, Role, Sign, Step};

/// Decomposition of every component of one graph, with back-lists.
#[derive(Debug)]
struct Forest {
    graph: Arc<BipartiteGraph>,
    comp_of: Vec<usize>,
    trees: Vec<GyarfasTree>,
    back: Vec<Vec<Vec<usize>>>,
}

impl Forest {
    fn new(g: Arc<BipartiteGraph>, root_of: impl Fn(&[usize]) -> usize) -> Forest {
        let mut comp_of = vec![0; g.n()];
        let mut trees = Vec::new();
        for (i, comp) in connected_components(&*g).into_iter().enumerate() {
            for &v in &comp {
                comp_of[v] = i;
            }
            trees.push(decompose_component(g.clone(), root_of(&comp)));
        }
        let back = trees.iter().map(|t| (0..t.bags().len()).map(|b| t.back_list(b)).collect()).collect();
        Forest { graph: g, comp_of, trees, back }
    }

    fn locate(&self, v: usize) -> (usize, usize) {
        let c = self.comp_of[v];
        (c, self.trees[c].bag_of(v).expect("vertex lies in its component tree"))
    }

    fn depth(&self, c: usize, b: usize) -> usize {
        self.trees[c].bag(b).depth
    }
}

#[derive(Debug)]
struct Link {
    child: Arc<Instance>,
    /// Parent instance id to child id.
    map: Vec<Option<u32>>,
}

/// Data for a depth-1 bag `B`: the complement of `G_B` and its decomposition.
#[derive(Debug)]
struct Split {
    to_gb: Vec<Option<u32>>,
    forest: Forest,
    children: HashMap<(usize, usize), Link>,
}

#[derive(Debug)]
pub struct Instance {
    graph: Arc<BipartiteGraph>,
    forest: Option<Forest>,
    bicliques: Option<Vec<u32>>,
    splits: HashMap<(usize, usize), Split>,
    children: HashMap<(usize, usize), Link>,
}

fn invert(map: &[usize], n: usize) -> Vec<Option<u32>> {
    index_map(n, map).into_iter().map(|o| o.map(|i| i as u32)).collect()
}

struct Builder {
    memo: HashMap<(Vec<u32>, bool), Arc<Instance>>,
}

impl Builder {
    /// `ids` maps local vertices to ids of the family root; `flip` says
    /// whether the instance is induced from the root's bipartite complement.
    fn build(&mut self, graph: BipartiteGraph, ids: Vec<u32>, flip: bool) -> Arc<Instance> {
        let key = (ids, flip);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let ids = &key.0;
        let g = Arc::new(graph);
        let n = g.n();
        let forest = Forest::new(g.clone(), |c| default_root(&g, c));

        let mut children = HashMap::new();
        for (c, tree) in forest.trees.iter().enumerate() {
            let wanted: BTreeSet<usize> =
                forest.back[c].iter().flatten().copied().filter(|&b| tree.bag(b).depth >= 2).collect();
            for b in wanted {
                let (sub, map) = tree.parity_subgraph(b);
                let sub_ids = map.iter().map(|&v| ids[v]).collect();
                let child = self.build(sub, sub_ids, flip);
                children.insert((c, b), Link { child, map: invert(&map, n) });
            }
        }

        let mut splits = HashMap::new();
        for (c, tree) in forest.trees.iter().enumerate() {
            for (b, bag) in tree.bags().iter().enumerate() {
                if bag.depth != 1 {
                    continue;
                }
                let (gb, map) = tree.parity_subgraph(b);
                let gb = Arc::new(gb.bipartite_complement());
                let in_b: HashSet<usize> =
                    map.iter().enumerate().filter(|(_, v)| bag.vertices.contains(v)).map(|(k, _)| k).collect();
                let inner = Forest::new(gb.clone(), |comp| {
                    comp.iter().copied().find(|k| in_b.contains(k)).unwrap_or(comp[0])
                });
                let mut split_children = HashMap::new();
                for (part, ytree) in inner.trees.iter().enumerate() {
                    let wanted: BTreeSet<usize> = inner.back[part]
                        .iter()
                        .flatten()
                        .copied()
                        .filter(|&b2| ytree.bag(b2).depth >= 1)
                        .collect();
                    for b2 in wanted {
                        let (sub, m2) = ytree.parity_subgraph(b2);
                        let inst_map: Vec<usize> = m2.iter().map(|&k| map[k]).collect();
                        let sub_ids = inst_map.iter().map(|&v| ids[v]).collect();
                        let child = self.build(sub, sub_ids, !flip);
                        split_children.insert((part, b2), Link { child, map: invert(&inst_map, n) });
                    }
                }
                splits.insert((c, b), Split { to_gb: invert(&map, n), forest: inner, children: split_children });
            }
        }

        let inst = Arc::new(Instance { graph: g, forest: Some(forest), bicliques: None, splits, children });
        self.memo.insert(key, inst.clone());
        inst
    }
}

/// Scan lengths used at one recursion level.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LevelBounds {
    /// Left party's list inside a complemented split.
    pub split_left: usize,
    /// Right party's list inside a complemented split.
    pub split_right: usize,
    pub left: usize,
    pub right: usize,
}

impl LevelBounds {
    fn absorb(&mut self, inst: &Instance) {
        let Some(forest) = &inst.forest else { return };
        let scan = |f: &Forest, min_left: usize, min_right: usize| {
            let g = &f.graph;
            let (mut l, mut r) = (0, 0);
            for (c, t) in f.trees.iter().enumerate() {
                for (b, bag) in t.bags().iter().enumerate() {
                    let len = f.back[c][b].len();
                    if g.is_left(bag.vertices[0]) {
                        if bag.depth >= min_left {
                            l = l.max(len);
                        }
                    } else if bag.depth >= min_right {
                        r = r.max(len);
                    }
                }
            }
            (l, r)
        };
        let (l, r) = scan(forest, 2, 3);
        self.left = self.left.max(l);
        self.right = self.right.max(r);
        for split in inst.splits.values() {
            let (l, r) = scan(&split.forest, 1, 2);
            self.split_left = self.split_left.max(l);
            self.split_right = self.split_right.max(r);
        }
    }
}

/// A parent instance and one sub-instance the recursion can enter.
#[derive(Debug, Clone)]
pub struct RecursionEdge {
    pub parent: Arc<BipartiteGraph>,
    pub child: Arc<BipartiteGraph>,
    /// True when the child lives in a complemented split.
    pub complemented: bool,
}

/// A public set of root graphs that a protocol run may be handed.
#[derive(Debug)]
pub struct GyarfasFamily {
    roots: Vec<Arc<Instance>>,
    sides_known: bool,
    base: bool,
    levels: Vec<LevelBounds>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ctx {
    level: u16,
    flip: bool,
    alice_left: bool,
}

impl Ctx {
    fn left_role(self) -> Role {
        if self.alice_left {
            Role::Alice
        } else {
            Role::Bob
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    SplitLeft,
    SplitRight,
    Left,
    Right,
}

impl Phase {
    fn in_split(self) -> bool {
        matches!(self, Phase::SplitLeft | Phase::SplitRight)
    }

    fn scanner_is_left(self) -> bool {
        matches!(self, Phase::SplitLeft | Phase::Left)
    }
}

/// Public state of the recursive protocol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GyarfasPublic {
    Side,
    Base { alice_left: bool },
    Comp(Ctx),
    RootBit(Ctx),
    DepthOneBit(Ctx, bool),
    AncestorEq(Ctx),
    SplitComp(Ctx),
    SplitRootBit(Ctx),
    SplitDepthBit(Ctx),
    Scan(Ctx, Phase, u32),
    Done(Sign),
}

#[derive(Debug, Clone)]
pub struct GyarfasView {
    role: Role,
    live: Option<(Arc<Instance>, usize)>,
}

impl GyarfasView {
    pub fn is_dead(&self) -> bool {
        self.live.is_none()
    }
}

/// Where a vertex sits inside the split of its depth-1 bag.
struct SplitPos<'a> {
    split: &'a Split,
    comp: usize,
    bag: usize,
    part: usize,
    sub_bag: usize,
    gb_vertex: usize,
}

fn split_pos(inst: &Instance, v: usize, left_party: bool) -> Option<SplitPos<'_>> {
    let forest = inst.forest.as_ref()?;
    let (comp, own) = forest.locate(v);
    let bag = if left_party {
        forest.trees[comp].ancestor_at_depth(own, 1)?
    } else if forest.depth(comp, own) == 1 {
        own
    } else {
        return None;
    };
    let split = inst.splits.get(&(comp, bag))?;
    let gb_vertex = split.to_gb[v]? as usize;
    let (part, sub_bag) = split.forest.locate(gb_vertex);
    Some(SplitPos { split, comp, bag, part, sub_bag, gb_vertex })
}

impl GyarfasFamily {
    /// Plans the protocol for `graphs`. When every graph is an equivalence
    /// graph the two-step base protocol is used for all of them.
    pub fn new(graphs: Vec<BipartiteGraph>, sides_known: bool) -> Self {
        let ids: Option<Vec<Vec<usize>>> = graphs.iter().map(biclique_ids).collect();
        match ids {
            Some(ids) => Self::base_from(graphs, ids, sides_known),
            None => Self::general(graphs, sides_known),
        }
    }

    /// The base protocol; fails unless every graph is an equivalence graph.
    pub fn base_case(graphs: Vec<BipartiteGraph>, sides_known: bool) -> Result<Self, ProtocolError> {
        let ids: Option<Vec<Vec<usize>>> = graphs.iter().map(biclique_ids).collect();
        Ok(Self::base_from(graphs, ids.ok_or(ProtocolError::NotEquivalence)?, sides_known))
    }

    fn base_from(graphs: Vec<BipartiteGraph>, ids: Vec<Vec<usize>>, sides_known: bool) -> Self {
        let roots = graphs
            .into_iter()
            .zip(ids)
            .map(|(g, ids)| {
                Arc::new(Instance {
                    graph: Arc::new(g),
                    forest: None,
                    bicliques: Some(ids.into_iter().map(|i| i as u32).collect()),
                    splits: HashMap::new(),
                    children: HashMap::new(),
                })
            })
            .collect();
        GyarfasFamily { roots, sides_known, base: true, levels: Vec::new() }
    }

    fn general(graphs: Vec<BipartiteGraph>, sides_known: bool) -> Self {
        let roots: Vec<Arc<Instance>> = graphs
            .into_iter()
            .map(|g| {
                let ids = (0..g.n() as u32).collect();
                Builder { memo: HashMap::new() }.build(g, ids, false)
            })
            .collect();
        let mut levels: Vec<LevelBounds> = Vec::new();
        let mut seen = HashSet::new();
        let mut queue: VecDeque<(Arc<Instance>, usize)> = roots.iter().map(|r| (r.clone(), 0)).collect();
        while let Some((inst, level)) = queue.pop_front() {
            if !seen.insert((Arc::as_ptr(&inst) as usize, level)) {
                continue;
            }
            if levels.len() <= level {
                levels.resize(level + 1, LevelBounds::default());
            }
            levels[level].absorb(&inst);
            let links = inst.children.values().chain(inst.splits.values().flat_map(|s| s.children.values()));
            for link in links {
                queue.push_back((link.child.clone(), level + 1));
            }
        }
        GyarfasFamily { roots, sides_known, base: false, levels }
    }

    pub fn is_base(&self) -> bool {
        self.base
    }

    pub fn sides_known(&self) -> bool {
        self.sides_known
    }

    pub fn level_bounds(&self) -> &[LevelBounds] {
        &self.levels
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// Number of distinct sub-instances, roots included.
    pub fn instance_count(&self) -> usize {
        let mut seen = HashSet::new();
        let mut stack: Vec<Arc<Instance>> = self.roots.clone();
        while let Some(inst) = stack.pop() {
            if seen.insert(Arc::as_ptr(&inst) as usize) {
                stack.extend(inst.children.values().map(|l| l.child.clone()));
                stack.extend(inst.splits.values().flat_map(|s| s.children.values().map(|l| l.child.clone())));
            }
        }
        seen.len()
    }

    /// Every parent/child pair of instances the recursion can follow.
    pub fn recursion_edges(&self) -> Vec<RecursionEdge> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut stack: Vec<Arc<Instance>> = self.roots.clone();
        while let Some(inst) = stack.pop() {
            if !seen.insert(Arc::as_ptr(&inst) as usize) {
                continue;
            }
            for link in inst.children.values() {
                out.push(RecursionEdge {
                    parent: inst.graph.clone(),
                    child: link.child.graph.clone(),
                    complemented: false,
                });
                stack.push(link.child.clone());
            }
            for split in inst.splits.values() {
                for link in split.children.values() {
                    out.push(RecursionEdge {
                        parent: inst.graph.clone(),
                        child: link.child.graph.clone(),
                        complemented: true,
                    });
                    stack.push(link.child.clone());
                }
            }
        }
        out
    }

    pub fn start(&self) -> GyarfasPublic {
        match (self.sides_known, self.base) {
            (false, _) => GyarfasPublic::Side,
            (true, true) => GyarfasPublic::Base { alice_left: true },
            (true, false) => GyarfasPublic::Comp(Ctx { level: 0, flip: false, alice_left: true }),
        }
    }

    /// The view of `role` holding vertex `v` of root graph `root`.
    pub fn view(&self, role: Role, root: usize, v: usize) -> GyarfasView {
        let live = self.roots.get(root).filter(|r| v < r.graph.n()).map(|r| (r.clone(), v));
        GyarfasView { role, live }
    }

    pub fn dead_view(role: Role) -> GyarfasView {
        GyarfasView { role, live: None }
    }

    pub fn recursion_depth(&self, p: &GyarfasPublic) -> usize {
        use GyarfasPublic::*;
        match p {
            Comp(c) | RootBit(c) | DepthOneBit(c, _) | AncestorEq(c) | SplitComp(c) | SplitRootBit(c)
            | SplitDepthBit(c) | Scan(c, _, _) => c.level as usize,
            _ => 0,
        }
    }

    pub fn step(&self, p: &GyarfasPublic) -> Step {
        use GyarfasPublic::*;
        match *p {
            Side => Step::Bit(Role::Alice),
            Base { .. } | Comp(_) | AncestorEq(_) | SplitComp(_) | Scan(..) => Step::Query,
            RootBit(c) | SplitDepthBit(c) => Step::Bit(c.left_role()),
            DepthOneBit(c, _) | SplitRootBit(c) => Step::Bit(c.left_role().other()),
            Done(s) => Step::Output(s),
        }
    }

    pub fn bit(&self, p: &GyarfasPublic, view: &GyarfasView) -> bool {
        use GyarfasPublic::*;
        let Some((inst, v)) = &view.live else { return false };
        let v = *v;
        match *p {
            Side => inst.graph.is_left(v),
            RootBit(_) => {
                let f = inst.forest.as_ref().unwrap();
                f.trees[f.comp_of[v]].root_vertex() == v
            }
            DepthOneBit(..) => {
                let f = inst.forest.as_ref().unwrap();
                let (c, b) = f.locate(v);
                f.depth(c, b) == 1
            }
            SplitRootBit(_) => split_pos(inst, v, false)
                .is_some_and(|s| s.split.forest.trees[s.part].root_vertex() == s.gb_vertex),
            SplitDepthBit(_) => {
                split_pos(inst, v, true).is_some_and(|s| s.split.forest.depth(s.part, s.sub_bag) == 1)
            }
            _ => false,
        }
    }

    pub fn operand(&self, p: &GyarfasPublic, view: &GyarfasView) -> EqOperand {
        use GyarfasPublic::*;
        let role = view.role;
        let Some((inst, v)) = &view.live else { return EqOperand::Mismatch(role) };
        let v = *v;
        let wrong_side = |alice_left: bool| inst.graph.is_left(v) != ((role == Role::Alice) == alice_left);
        let mismatch = EqOperand::Mismatch(role);
        match *p {
            Base { alice_left } => {
                if wrong_side(alice_left) {
                    return mismatch;
                }
                EqOperand::Biclique(inst.bicliques.as_ref().unwrap()[v])
            }
            Comp(c) => {
                if wrong_side(c.alice_left) {
                    return mismatch;
                }
                EqOperand::Component(inst.forest.as_ref().unwrap().comp_of[v] as u32)
            }
            AncestorEq(c) => {
                let f = inst.forest.as_ref().unwrap();
                let (comp, own) = f.locate(v);
                let bag = if role == c.left_role() {
                    f.trees[comp].ancestor_at_depth(own, 1)
                } else {
                    Some(own)
                };
                match bag {
                    Some(bag) => EqOperand::Bag { comp: comp as u32, bag: bag as u32 },
                    None => mismatch,
                }
            }
            SplitComp(c) => match split_pos(inst, v, role == c.left_role()) {
                Some(s) => EqOperand::Part { comp: s.comp as u32, bag: s.bag as u32, part: s.part as u32 },
                None => mismatch,
            },
            Scan(c, phase, j) => {
                let scanner = (role == c.left_role()) == phase.scanner_is_left();
                let left_party = role == c.left_role();
                if phase.in_split() {
                    let Some(s) = split_pos(inst, v, left_party) else { return mismatch };
                    let bag = if scanner {
                        match s.split.forest.back[s.part][s.sub_bag].get(j as usize) {
                            Some(&b) => b,
                            None => return EqOperand::Pad(j),
                        }
                    } else {
                        s.sub_bag
                    };
                    EqOperand::SubBag { part: s.part as u32, bag: bag as u32 }
                } else {
                    let f = inst.forest.as_ref().unwrap();
                    let (comp, own) = f.locate(v);
                    let bag = if scanner {
                        match f.back[comp][own].get(j as usize) {
                            Some(&b) => b,
                            None => return EqOperand::Pad(j),
                        }
                    } else {
                        own
                    };
                    EqOperand::Bag { comp: comp as u32, bag: bag as u32 }
                }
            }
            _ => mismatch,
        }
    }

    fn bound(&self, level: u16, phase: Phase) -> usize {
        let b = self.levels.get(level as usize).copied().unwrap_or_default();
        match phase {
            Phase::SplitLeft => b.split_left,
            Phase::SplitRight => b.split_right,
            Phase::Left => b.left,
            Phase::Right => b.right,
        }
    }

    fn scan_from(&self, c: Ctx, phase: Phase) -> GyarfasPublic {
        let (order, exhausted): (&[Phase], Sign) = match phase {
            Phase::SplitLeft => (&[Phase::SplitLeft, Phase::SplitRight], Sign::Plus),
            Phase::SplitRight => (&[Phase::SplitRight], Sign::Plus),
            Phase::Left => (&[Phase::Left, Phase::Right], Sign::Minus),
            Phase::Right => (&[Phase::Right], Sign::Minus),
        };
        for &ph in order {
            if self.bound(c.level, ph) > 0 {
                return GyarfasPublic::Scan(c, ph, 0);
            }
        }
        GyarfasPublic::Done(exhausted.xor(c.flip))
    }

    pub fn advance(&self, p: &GyarfasPublic, outcome: bool) -> GyarfasPublic {
        use GyarfasPublic::*;
        let done = |s: Sign, c: Ctx| Done(s.xor(c.flip));
        match *p {
            Side => {
                if self.base {
                    Base { alice_left: outcome }
                } else {
                    Comp(Ctx { level: 0, flip: false, alice_left: outcome })
                }
            }
            Base { .. } => Done(Sign::from_adjacent(outcome)),
            Comp(c) => {
                if outcome {
                    RootBit(c)
                } else {
                    done(Sign::Minus, c)
                }
            }
            RootBit(c) => DepthOneBit(c, outcome),
            DepthOneBit(c, left_is_root) => {
                if left_is_root {
                    done(Sign::from_adjacent(outcome), c)
                } else if outcome {
                    AncestorEq(c)
                } else {
                    self.scan_from(c, Phase::Left)
                }
            }
            AncestorEq(c) => {
                if outcome {
                    SplitComp(c)
                } else {
                    done(Sign::Minus, c)
                }
            }
            SplitComp(c) => {
                if outcome {
                    SplitRootBit(c)
                } else {
                    done(Sign::Plus, c)
                }
            }
            SplitRootBit(c) => {
                if outcome {
                    SplitDepthBit(c)
                } else {
                    self.scan_from(c, Phase::SplitLeft)
                }
            }
            SplitDepthBit(c) => done(Sign::from_adjacent(!outcome), c),
            Scan(c, phase, j) => {
                if outcome {
                    Comp(Ctx { level: c.level + 1, flip: c.flip ^ phase.in_split(), alice_left: c.alice_left })
                } else if (j as usize) + 1 < self.bound(c.level, phase) {
                    Scan(c, phase, j + 1)
                } else {
                    match phase {
                        Phase::SplitLeft => self.scan_from(c, Phase::SplitRight),
                        Phase::Left => self.scan_from(c, Phase::Right),
                        Phase::SplitRight => done(Sign::Plus, c),
                        Phase::Right => done(Sign::Minus, c),
                    }
                }
            }
            Done(s) => Done(s),
        }
    }

    pub fn update(&self, p: &GyarfasPublic, view: &GyarfasView, outcome: bool) -> GyarfasView {
        let GyarfasPublic::Scan(c, phase, j) = *p else { return view.clone() };
        if !outcome {
            return view.clone();
        }
        let dead = GyarfasView { role: view.role, live: None };
        let Some((inst, v)) = &view.live else { return dead };
        let v = *v;
        let left_party = view.role == c.left_role();
        let scanner = left_party == phase.scanner_is_left();
        let link = if phase.in_split() {
            let Some(s) = split_pos(inst, v, left_party) else { return dead };
            let bag = if scanner { s.split.forest.back[s.part][s.sub_bag].get(j as usize).copied() } else { Some(s.sub_bag) };
            bag.and_then(|b| s.split.children.get(&(s.part, b)))
        } else {
            let f = inst.forest.as_ref().unwrap();
            let (comp, own) = f.locate(v);
            let bag = if scanner { f.back[comp][own].get(j as usize).copied() } else { Some(own) };
            bag.and_then(|b| inst.children.get(&(comp, b)))
        };
        match link.and_then(|l| l.map[v].map(|w| (l.child.clone(), w as usize))) {
            Some(live) => GyarfasView { role: view.role, live: Some(live) },
            None => dead,
        }
    }
}

/// The adjacency protocol for one bipartite graph whose bipartition is
/// public but whose inputs may come from either side.
#[derive(Debug)]
pub struct GyarfasProtocol {
    graph: Arc<BipartiteGraph>,
    family: GyarfasFamily,
}

impl GyarfasProtocol {
    pub fn new(g: BipartiteGraph) -> Self {
        let graph = Arc::new(g.clone());
        GyarfasProtocol { graph, family: GyarfasFamily::new(vec![g], false) }
    }

    /// One side bit and one Equality call; only for equivalence graphs.
    pub fn base_case(g: BipartiteGraph) -> Result<Self, ProtocolError> {
        let graph = Arc::new(g.clone());
        Ok(GyarfasProtocol { graph, family: GyarfasFamily::base_case(vec![g], false)? })
    }

    pub fn family(&self) -> &GyarfasFamily {
        &self.family
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }
}

impl Protocol for GyarfasProtocol {
    type Public = GyarfasPublic;
    type View = GyarfasView;

    fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.graph.n();
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect()
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        use crate::graph::Adjacency;
        self.graph.adjacent(x, y)
    }

    fn start(&self) -> GyarfasPublic {
        self.family.start()
    }

    fn view(&self, role: Role, v: usize) -> GyarfasView {
        self.family.view(role, 0, v)
    }

    fn step(&self, p: &GyarfasPublic) -> Step {
        self.family.step(p)
    }

    fn bit(&self, p: &GyarfasPublic, view: &GyarfasView) -> bool {
        self.family.bit(p, view)
    }

    fn operand(&self, p: &GyarfasPublic, view: &GyarfasView) -> EqOperand {
        self.family.operand(p, view)
    }

    fn advance(&self, p: &GyarfasPublic, outcome: bool) -> GyarfasPublic {
        self.family.advance(p, outcome)
    }

    fn update(&self, p: &GyarfasPublic, view: &GyarfasView, outcome: bool) -> GyarfasView {
        self.family.update(p, view, outcome)
    }

    fn recursion_depth(&self, p: &GyarfasPublic) -> usize {
        self.family.recursion_depth(p)
    }
}
