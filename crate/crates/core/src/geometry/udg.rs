use std::collections::BTreeMap;

use crate::graph::{semi_induced, BipartiteGraph, Graph};
use crate::scalar::Scalar;

use super::GeometryError;

/// Offsets `(a, b)` with `a, b` in `-2..=2`, excluding `(0, 0)`.
pub const CELL_OFFSETS: [(i64, i64); 24] = {
    let mut out = [(0i64, 0i64); 24];
    let mut k = 0;
    let mut a = -2;
    while a <= 2 {
        let mut b = -2;
        while b <= 2 {
            if a != 0 || b != 0 {
                out[k] = (a, b);
                k += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

pub type Cell = (i64, i64);

/// Points in the plane, adjacent when closer than `radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct UdgRealization<T> {
    points: Vec<[T; 2]>,
    radius: T,
    graph: Graph,
}

fn dist2<T: Scalar>(p: &[T; 2], q: &[T; 2]) -> T {
    let dx = p[0].clone() - q[0].clone();
    let dy = p[1].clone() - q[1].clone();
    dx.clone() * dx + dy.clone() * dy
}

impl<T: Scalar> UdgRealization<T> {
    pub fn new(points: Vec<[T; 2]>, radius: T) -> Result<Self, GeometryError> {
        if !radius.is_positive() {
            return Err(GeometryError::NonPositiveRadius);
        }
        let r2 = radius.clone() * radius.clone();
        let mut edges = Vec::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let d = dist2(&points[i], &points[j]);
                if d == r2 {
                    return Err(GeometryError::UdgBoundary(i, j));
                }
                if d < r2 {
                    edges.push((i, j));
                }
            }
        }
        let graph = Graph::new(points.len(), edges).unwrap();
        Ok(UdgRealization { points, radius, graph })
    }

    pub fn points(&self) -> &[[T; 2]] {
        &self.points
    }

    pub fn radius(&self) -> &T {
        &self.radius
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Grid cell of side `radius / 2` containing point `i`.
    pub fn cell_of(&self, i: usize) -> Cell {
        let two = T::one() + T::one();
        let side = self.radius.clone() / two;
        let p = &self.points[i];
        ((p[0].clone() / side.clone()).floor_i64(), (p[1].clone() / side).floor_i64())
    }

    /// Points grouped by cell; cells in lexicographic order.
    pub fn grid(&self) -> BTreeMap<Cell, Vec<usize>> {
        let mut cells: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        for i in 0..self.points.len() {
            cells.entry(self.cell_of(i)).or_default().push(i);
        }
        cells
    }

    /// `G[X, Y]` for the points of two cells; also returns the point ids,
    /// left then right.
    pub fn piece(&self, x: Cell, y: Cell) -> (BipartiteGraph, Vec<usize>) {
        let grid = self.grid();
        let empty = Vec::new();
        let xs = grid.get(&x).unwrap_or(&empty);
        let ys = grid.get(&y).unwrap_or(&empty);
        semi_induced(&self.graph, xs, ys).expect("distinct cells are disjoint")
    }

    /// Vectors in `R^4` with `<sigma(p), psi(q)> = r^2 - |p - q|^2`.
    pub fn to_signrank4(&self) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
        let two = T::one() + T::one();
        let r2 = self.radius.clone() * self.radius.clone();
        let mut sigma = Vec::new();
        let mut psi = Vec::new();
        for [x, y] in &self.points {
            let n2 = x.clone() * x.clone() + y.clone() * y.clone();
            sigma.push(vec![-T::one(), two.clone() * x.clone(), two.clone() * y.clone(), -n2.clone()]);
            psi.push(vec![n2 - r2.clone(), x.clone(), y.clone(), T::one()]);
        }
        (sigma, psi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::scene::dot;
    use crate::graph::Adjacency;
    use crate::Rational;

    fn pt(x: i64, y: i64) -> [Rational; 2] {
        [Rational::from_ratio(x, 4), Rational::from_ratio(y, 4)]
    }

    #[test]
    fn offsets_are_the_punctured_square() {
        assert_eq!(CELL_OFFSETS.len(), 24);
        assert!(!CELL_OFFSETS.contains(&(0, 0)));
        assert!(CELL_OFFSETS.contains(&(-2, 2)));
    }

    #[test]
    fn lift_identity() {
        let u = UdgRealization::new(vec![pt(0, 0), pt(3, 5), pt(-9, 2), pt(20, 1)], Rational::from_ratio(2, 1)).unwrap();
        let (s, p) = u.to_signrank4();
        let r2 = Rational::from_ratio(4, 1);
        for i in 0..4 {
            for j in 0..4 {
                let d = dist2(&u.points()[i], &u.points()[j]);
                assert_eq!(dot(&s[i], &p[j]), r2.clone() - d);
            }
        }
        assert!(u.graph().adjacent(0, 1));
        assert!(!u.graph().adjacent(0, 3));
    }

    #[test]
    fn cells_and_boundaries() {
        let u = UdgRealization::new(vec![pt(0, 0), pt(3, 5), pt(-1, 2)], Rational::from_ratio(2, 1)).unwrap();
        assert_eq!(u.cell_of(0), (0, 0));
        assert_eq!(u.cell_of(1), (0, 1));
        assert_eq!(u.cell_of(2), (-1, 0));
        let err = UdgRealization::new(vec![pt(0, 0), pt(8, 0)], Rational::from_ratio(2, 1)).unwrap_err();
        assert_eq!(err, GeometryError::UdgBoundary(0, 1));
    }
}
