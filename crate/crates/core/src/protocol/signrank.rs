use crate::geometry::{sign_positive, signrank3_decompose, SignRank3Decomposition};
use crate::scalar::Scalar;

use super::{EqOperand, GyarfasFamily, GyarfasPublic, GyarfasView, Protocol, ProtocolError, Role, Step};

/// Three piece-selection bits, then the recursive protocol on the piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignRankPublic {
    /// Alice: is the last coordinate of her row negative?
    RowBit,
    /// Bob: is the first coordinate of his column negative?
    ColumnBit1 { negative: bool },
    /// Bob: is the second coordinate of his column negative?
    ColumnBit2 { negative: bool, first: bool },
    Piece { index: u8, inner: GyarfasPublic },
}

#[derive(Debug, Clone)]
pub struct SignRankView {
    role: Role,
    vertex: usize,
    inner: Option<GyarfasView>,
}

/// Adjacency protocol for the sign matrix of `<a(u), b(w)>` in dimension 3.
/// Inputs are rows `0..nU` for Alice and columns `nU..nU+nW` for Bob.
#[derive(Debug)]
pub struct SignRank3Protocol<T> {
    a: Vec<Vec<T>>,
    b: Vec<Vec<T>>,
    decomposition: SignRank3Decomposition<T>,
    family: GyarfasFamily,
}

impl<T: Scalar> SignRank3Protocol<T> {
    pub fn new(a: Vec<Vec<T>>, b: Vec<Vec<T>>) -> Result<Self, ProtocolError> {
        let decomposition = signrank3_decompose(&a, &b)?;
        let graphs = decomposition.pieces.iter().map(|p| p.scene.incidence_graph()).collect();
        Ok(SignRank3Protocol { a, b, decomposition, family: GyarfasFamily::new(graphs, true) })
    }

    pub fn decomposition(&self) -> &SignRank3Decomposition<T> {
        &self.decomposition
    }

    pub fn family(&self) -> &GyarfasFamily {
        &self.family
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn columns(&self) -> usize {
        self.b.len()
    }

    /// Vertex id of column `w`.
    pub fn column_vertex(&self, w: usize) -> usize {
        self.a.len() + w
    }

    fn local(&self, role: Role, vertex: usize, index: usize) -> usize {
        let piece = &self.decomposition.pieces[index];
        match role {
            Role::Alice => self.decomposition.row_class[vertex].1,
            Role::Bob => piece.rows.len() + self.decomposition.column_class[vertex - self.a.len()].1,
        }
    }
}

impl<T: Scalar> Protocol for SignRank3Protocol<T> {
    type Public = SignRankPublic;
    type View = SignRankView;

    fn vertex_count(&self) -> usize {
        self.a.len() + self.b.len()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let nu = self.a.len();
        (0..nu).flat_map(|u| (0..self.b.len()).map(move |w| (u, nu + w))).collect()
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        sign_positive(&self.a[x], &self.b[y - self.a.len()])
    }

    fn start(&self) -> SignRankPublic {
        SignRankPublic::RowBit
    }

    fn view(&self, role: Role, v: usize) -> SignRankView {
        SignRankView { role, vertex: v, inner: None }
    }

    fn step(&self, p: &SignRankPublic) -> Step {
        match p {
            SignRankPublic::RowBit => Step::Bit(Role::Alice),
            SignRankPublic::ColumnBit1 { .. } | SignRankPublic::ColumnBit2 { .. } => Step::Bit(Role::Bob),
            SignRankPublic::Piece { inner, .. } => self.family.step(inner),
        }
    }

    fn bit(&self, p: &SignRankPublic, view: &SignRankView) -> bool {
        let pattern = || self.decomposition.column_class.get(view.vertex.wrapping_sub(self.a.len())).map(|c| c.0);
        match p {
            SignRankPublic::RowBit => self.decomposition.row_class.get(view.vertex).is_some_and(|c| c.0),
            SignRankPublic::ColumnBit1 { .. } => pattern().is_some_and(|k| k & 2 != 0),
            SignRankPublic::ColumnBit2 { .. } => pattern().is_some_and(|k| k & 1 != 0),
            SignRankPublic::Piece { inner, .. } => match &view.inner {
                Some(v) => self.family.bit(inner, v),
                None => false,
            },
        }
    }

    fn operand(&self, p: &SignRankPublic, view: &SignRankView) -> EqOperand {
        match (p, &view.inner) {
            (SignRankPublic::Piece { inner, .. }, Some(v)) => self.family.operand(inner, v),
            _ => EqOperand::Mismatch(view.role),
        }
    }

    fn advance(&self, p: &SignRankPublic, outcome: bool) -> SignRankPublic {
        match *p {
            SignRankPublic::RowBit => SignRankPublic::ColumnBit1 { negative: outcome },
            SignRankPublic::ColumnBit1 { negative } => SignRankPublic::ColumnBit2 { negative, first: outcome },
            SignRankPublic::ColumnBit2 { negative, first } => SignRankPublic::Piece {
                index: u8::from(negative) * 4 + u8::from(first) * 2 + u8::from(outcome),
                inner: self.family.start(),
            },
            SignRankPublic::Piece { index, inner } => {
                SignRankPublic::Piece { index, inner: self.family.advance(&inner, outcome) }
            }
        }
    }

    fn update(&self, p: &SignRankPublic, view: &SignRankView, outcome: bool) -> SignRankView {
        let inner = match p {
            SignRankPublic::Piece { inner, .. } => view.inner.as_ref().map(|v| self.family.update(inner, v, outcome)),
            SignRankPublic::ColumnBit2 { .. } => {
                let SignRankPublic::Piece { index, .. } = self.advance(p, outcome) else { unreachable!() };
                let index = index as usize;
                let in_range = match view.role {
                    Role::Alice => view.vertex < self.a.len(),
                    Role::Bob => (self.a.len()..self.vertex_count()).contains(&view.vertex),
                };
                Some(if in_range {
                    self.family.view(view.role, index, self.local(view.role, view.vertex, index))
                } else {
                    GyarfasFamily::dead_view(view.role)
                })
            }
            _ => None,
        };
        SignRankView { inner, ..view.clone() }
    }

    fn recursion_depth(&self, p: &SignRankPublic) -> usize {
        match p {
            SignRankPublic::Piece { inner, .. } => self.family.recursion_depth(inner),
            _ => 0,
        }
    }
}
