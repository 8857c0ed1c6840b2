use std::collections::{BTreeMap, HashMap};

use crate::geometry::{Cell, UdgRealization, CELL_OFFSETS};
use crate::graph::{semi_induced, Adjacency};
use crate::scalar::Scalar;

use super::{EqOperand, GyarfasFamily, GyarfasPublic, GyarfasView, Protocol, Role, Sign, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UdgPublic {
    SameCell,
    /// Does Bob's cell equal Alice's cell shifted by `CELL_OFFSETS[k]`?
    Scan(u8),
    /// Complemented protocol on the piece of the two cells.
    Piece { offset: u8, inner: GyarfasPublic },
    Done(Sign),
}

#[derive(Debug, Clone)]
pub struct UdgView {
    role: Role,
    vertex: usize,
    inner: Option<GyarfasView>,
}

/// Adjacency protocol for unit disk graphs via a grid of cells of side `r/2`.
#[derive(Debug)]
pub struct UdgProtocol<T> {
    realization: UdgRealization<T>,
    cell: Vec<Cell>,
    /// Ordered cell pair to root index of the family.
    roots: HashMap<(Cell, Cell), usize>,
    /// Vertex to its position in its cell's point list.
    position: Vec<usize>,
    cell_size: HashMap<Cell, usize>,
    family: GyarfasFamily,
}

impl<T: Scalar> UdgProtocol<T> {
    pub fn new(realization: UdgRealization<T>) -> Self {
        let grid: BTreeMap<Cell, Vec<usize>> = realization.grid();
        let n = realization.points().len();
        let mut cell = vec![(0, 0); n];
        let mut position = vec![0; n];
        for (&c, vs) in &grid {
            for (k, &v) in vs.iter().enumerate() {
                cell[v] = c;
                position[v] = k;
            }
        }
        let cell_size = grid.iter().map(|(&c, vs)| (c, vs.len())).collect();
        let mut roots = HashMap::new();
        let mut graphs = Vec::new();
        for (&c1, xs) in &grid {
            for &(a, b) in &CELL_OFFSETS {
                let c2 = (c1.0 + a, c1.1 + b);
                if let Some(ys) = grid.get(&c2) {
                    let (piece, _) = semi_induced(realization.graph(), xs, ys).expect("cells are disjoint");
                    roots.insert((c1, c2), graphs.len());
                    graphs.push(piece.bipartite_complement());
                }
            }
        }
        let family = GyarfasFamily::new(graphs, true);
        UdgProtocol { realization, cell, roots, position, cell_size, family }
    }

    pub fn realization(&self) -> &UdgRealization<T> {
        &self.realization
    }

    pub fn family(&self) -> &GyarfasFamily {
        &self.family
    }

    pub fn cell(&self, v: usize) -> Cell {
        self.cell[v]
    }

    fn shifted(&self, v: usize, k: u8) -> Cell {
        let (a, b) = CELL_OFFSETS[k as usize];
        let c = self.cell[v];
        (c.0 + a, c.1 + b)
    }

    fn enter(&self, role: Role, v: usize, k: u8) -> GyarfasView {
        let (mine, theirs) = match role {
            Role::Alice => (self.cell[v], self.shifted(v, k)),
            Role::Bob => {
                let (a, b) = CELL_OFFSETS[k as usize];
                (self.cell[v], (self.cell[v].0 - a, self.cell[v].1 - b))
            }
        };
        let key = if role == Role::Alice { (mine, theirs) } else { (theirs, mine) };
        let Some(&root) = self.roots.get(&key) else { return GyarfasFamily::dead_view(role) };
        let local = match role {
            Role::Alice => self.position[v],
            Role::Bob => self.cell_size[&key.0] + self.position[v],
        };
        self.family.view(role, root, local)
    }
}

impl<T: Scalar> Protocol for UdgProtocol<T> {
    type Public = UdgPublic;
    type View = UdgView;

    fn vertex_count(&self) -> usize {
        self.cell.len()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.cell.len();
        (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect()
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        self.realization.graph().adjacent(x, y)
    }

    fn start(&self) -> UdgPublic {
        UdgPublic::SameCell
    }

    fn view(&self, role: Role, v: usize) -> UdgView {
        UdgView { role, vertex: v, inner: None }
    }

    fn step(&self, p: &UdgPublic) -> Step {
        match p {
            UdgPublic::SameCell | UdgPublic::Scan(_) => Step::Query,
            UdgPublic::Piece { inner, .. } => match self.family.step(inner) {
                Step::Output(s) => Step::Output(s.flip()),
                other => other,
            },
            UdgPublic::Done(s) => Step::Output(*s),
        }
    }

    fn bit(&self, p: &UdgPublic, view: &UdgView) -> bool {
        match (p, &view.inner) {
            (UdgPublic::Piece { inner, .. }, Some(v)) => self.family.bit(inner, v),
            _ => false,
        }
    }

    fn operand(&self, p: &UdgPublic, view: &UdgView) -> EqOperand {
        if view.vertex >= self.cell.len() {
            return EqOperand::Mismatch(view.role);
        }
        let own = self.cell[view.vertex];
        match (p, &view.inner) {
            (UdgPublic::SameCell, _) => EqOperand::Cell(own.0, own.1),
            (UdgPublic::Scan(k), _) => {
                let c = if view.role == Role::Alice { self.shifted(view.vertex, *k) } else { own };
                EqOperand::Cell(c.0, c.1)
            }
            (UdgPublic::Piece { inner, .. }, Some(v)) => self.family.operand(inner, v),
            _ => EqOperand::Mismatch(view.role),
        }
    }

    fn advance(&self, p: &UdgPublic, outcome: bool) -> UdgPublic {
        match *p {
            UdgPublic::SameCell if outcome => UdgPublic::Done(Sign::Plus),
            UdgPublic::SameCell => UdgPublic::Scan(0),
            UdgPublic::Scan(k) if outcome => UdgPublic::Piece { offset: k, inner: self.family.start() },
            UdgPublic::Scan(k) if (k as usize) + 1 < CELL_OFFSETS.len() => UdgPublic::Scan(k + 1),
            UdgPublic::Scan(_) => UdgPublic::Done(Sign::Minus),
            UdgPublic::Piece { offset, inner } => UdgPublic::Piece { offset, inner: self.family.advance(&inner, outcome) },
            UdgPublic::Done(s) => UdgPublic::Done(s),
        }
    }

    fn update(&self, p: &UdgPublic, view: &UdgView, outcome: bool) -> UdgView {
        let inner = match p {
            UdgPublic::Scan(k) if outcome && view.vertex < self.cell.len() => Some(self.enter(view.role, view.vertex, *k)),
            UdgPublic::Piece { inner, .. } => view.inner.as_ref().map(|v| self.family.update(inner, v, outcome)),
            _ => view.inner.clone(),
        };
        UdgView { inner, ..view.clone() }
    }

    fn recursion_depth(&self, p: &UdgPublic) -> usize {
        match p {
            UdgPublic::Piece { inner, .. } => self.family.recursion_depth(inner),
            _ => 0,
        }
    }
}
