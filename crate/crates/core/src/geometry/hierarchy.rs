use crate::graph::BipartiteGraph;
use crate::oracles::degeneracy;
use crate::scalar::Scalar;

use super::incidence::has_biclique;

/// Axis-parallel box `lo <= p < hi`, coordinatewise.
#[derive(Debug, Clone, PartialEq)]
pub struct PointBox<T> {
    pub lo: Vec<T>,
    pub hi: Vec<T>,
}

impl<T: Scalar> PointBox<T> {
    pub fn contains(&self, p: &[T]) -> bool {
        p.iter().zip(self.lo.iter().zip(&self.hi)).all(|(x, (lo, hi))| lo <= x && x < hi)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Line<T> {
    /// `y = slope * x + intercept`.
    Sloped { slope: T, intercept: T },
    /// `x = c`.
    Vertical(T),
}

impl<T: Scalar> Line<T> {
    pub fn contains(&self, p: &[T; 2]) -> bool {
        match self {
            Line::Sloped { slope, intercept } => p[1] == slope.clone() * p[0].clone() + intercept.clone(),
            Line::Vertical(c) => &p[0] == c,
        }
    }
}

/// Points on the left, boxes on the right.
pub fn point_box_incidence<T: Scalar>(points: &[Vec<T>], boxes: &[PointBox<T>]) -> BipartiteGraph {
    let edges = (0..points.len())
        .flat_map(|i| (0..boxes.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| boxes[j].contains(&points[i]));
    BipartiteGraph::new(points.len(), boxes.len(), edges).unwrap()
}

/// Points on the left, lines on the right.
pub fn point_line_incidence<T: Scalar>(points: &[[T; 2]], lines: &[Line<T>]) -> BipartiteGraph {
    let edges = (0..points.len())
        .flat_map(|i| (0..lines.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| lines[j].contains(&points[i]));
    BipartiteGraph::new(points.len(), lines.len(), edges).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HierarchyMeasure {
    pub edges: usize,
    pub degeneracy: usize,
    pub k22_free: bool,
}

pub fn measure(g: &BipartiteGraph) -> HierarchyMeasure {
    use crate::graph::Adjacency;
    HierarchyMeasure { edges: g.edge_count(), degeneracy: degeneracy(g).value, k22_free: !has_biclique(g, 2, 2) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_ratio(n, 1)
    }

    #[test]
    fn half_open_boxes() {
        let b = PointBox { lo: vec![q(0), q(0)], hi: vec![q(2), q(2)] };
        assert!(b.contains(&[q(1), q(1)]));
        assert!(b.contains(&[q(0), q(1)]));
        assert!(!b.contains(&[q(2), q(1)]));
        let g = point_box_incidence(&[vec![q(1), q(1)], vec![q(3), q(0)]], &[b]);
        assert_eq!(g.edges(), vec![(0, 0)]);
    }

    #[test]
    fn two_lines_share_one_point() {
        let lines = vec![Line::Sloped { slope: q(1), intercept: q(0) }, Line::Vertical(q(2))];
        let points = [[q(2), q(2)], [q(0), q(0)], [q(2), q(5)]];
        let g = point_line_incidence(&points, &lines);
        assert_eq!(g.edges(), vec![(0, 0), (0, 1), (1, 0), (2, 1)]);
        let m = measure(&g);
        assert!(m.k22_free);
        assert_eq!(m.edges, 4);
        assert_eq!(m.degeneracy, 1);
    }
}
