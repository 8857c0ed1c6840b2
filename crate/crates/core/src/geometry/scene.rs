use crate::graph::BipartiteGraph;
use crate::scalar::Scalar;

use super::GeometryError;

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// The closed halfspace `{p : <normal, p> >= threshold}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace<T> {
    pub normal: Vec<T>,
    pub threshold: T,
}

impl<T: Scalar> Halfspace<T> {
    pub fn new(normal: Vec<T>, threshold: T) -> Self {
        Halfspace { normal, threshold }
    }

    /// `<normal, p> - threshold`; positive inside, zero on the boundary.
    pub fn slack(&self, p: &[T]) -> T {
        dot(&self.normal, p) - self.threshold.clone()
    }

    pub fn contains(&self, p: &[T]) -> bool {
        !self.slack(p).is_negative()
    }
}

/// Points and halfspaces in `R^d` with no point on any boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene<T> {
    dim: usize,
    points: Vec<Vec<T>>,
    halfspaces: Vec<Halfspace<T>>,
}

impl<T: Scalar> Scene<T> {
    pub fn new(dim: usize, points: Vec<Vec<T>>, halfspaces: Vec<Halfspace<T>>) -> Result<Self, GeometryError> {
        for p in &points {
            if p.len() != dim {
                return Err(GeometryError::Dimension { expected: dim, found: p.len() });
            }
        }
        for h in &halfspaces {
            if h.normal.len() != dim {
                return Err(GeometryError::Dimension { expected: dim, found: h.normal.len() });
            }
        }
        for (i, p) in points.iter().enumerate() {
            for (j, h) in halfspaces.iter().enumerate() {
                if h.slack(p).is_zero() {
                    return Err(GeometryError::Boundary { point: i, halfspace: j });
                }
            }
        }
        Ok(Scene { dim, points, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn halfspaces(&self) -> &[Halfspace<T>] {
        &self.halfspaces
    }

    pub fn contains(&self, point: usize, halfspace: usize) -> bool {
        self.halfspaces[halfspace].contains(&self.points[point])
    }

    /// Points on the left, halfspaces on the right, edges for membership.
    pub fn incidence_graph(&self) -> BipartiteGraph {
        let mut edges = Vec::new();
        for i in 0..self.points.len() {
            for j in 0..self.halfspaces.len() {
                if self.contains(i, j) {
                    edges.push((i, j));
                }
            }
        }
        BipartiteGraph::new(self.points.len(), self.halfspaces.len(), edges).unwrap()
    }

    /// Whether every pair of normals has a non-negative inner product.
    pub fn is_positive(&self) -> bool {
        let hs = &self.halfspaces;
        (0..hs.len()).all(|i| (i + 1..hs.len()).all(|j| !dot(&hs[i].normal, &hs[j].normal).is_negative()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_ratio(n, 1)
    }

    #[test]
    fn membership_and_boundary() {
        let h = Halfspace::new(vec![q(1), q(1)], q(1));
        let s = Scene::new(2, vec![vec![q(1), q(1)], vec![q(0), q(0)]], vec![h.clone()]).unwrap();
        assert!(s.contains(0, 0));
        assert!(!s.contains(1, 0));
        assert_eq!(s.incidence_graph().edges(), vec![(0, 0)]);
        let err = Scene::new(2, vec![vec![q(1), q(0)]], vec![h]).unwrap_err();
        assert_eq!(err, GeometryError::Boundary { point: 0, halfspace: 0 });
    }

    #[test]
    fn float_scenes_work_too() {
        let s = Scene::new(1, vec![vec![0.5f64], vec![2.0]], vec![Halfspace::new(vec![1.0], 1.0)]).unwrap();
        assert_eq!(s.incidence_graph().edges(), vec![(1, 0)]);
    }
}
