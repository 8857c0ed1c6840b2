use crate::graph::{Adjacency, BipartiteGraph};
use crate::oracles::{degeneracy, Degeneracy};
use crate::scalar::Scalar;

use super::{GeometryError, Scene};

/// A point inside the convex hull of some other points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorPoint {
    pub point: usize,
    /// Vertices of a simplex containing the point.
    pub simplex: Vec<usize>,
    pub degree: usize,
    /// `(d + 1)(s - 1)`.
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceReport {
    pub dim: usize,
    pub s: usize,
    pub edges: usize,
    pub degeneracy: Degeneracy,
    /// `s - 1`, `3(s - 1)` or `5(s - 1)`.
    pub bound: usize,
    pub interior: Option<InteriorPoint>,
}

impl IncidenceReport {
    pub fn holds(&self) -> bool {
        self.degeneracy.value <= self.bound && self.interior.as_ref().is_none_or(|p| p.degree <= p.bound)
    }
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            cur.push(i);
            if go(i + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Whether `g` has `a` vertices on one side with `b` common neighbours,
/// in either orientation.
pub fn has_biclique(g: &BipartiteGraph, a: usize, b: usize) -> bool {
    let side = |vs: Vec<usize>| {
        subsets(vs.len(), a, &mut |pick| {
            let mut common: Vec<usize> = g.neighbors(vs[pick[0]]).to_vec();
            for &i in &pick[1..] {
                common.retain(|w| g.adjacent(vs[i], *w));
            }
            common.len() >= b
        })
    };
    side(g.left_vertices().collect()) || side(g.right_vertices().collect())
}

/// Solves `m x = rhs` for a square system; `None` when singular.
fn solve<T: Scalar>(mut m: Vec<Vec<T>>, mut rhs: Vec<T>) -> Option<Vec<T>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone() / m[col][col].clone();
                for c in col..n {
                    let d = f.clone() * m[col][c].clone();
                    m[r][c] = m[r][c].clone() - d;
                }
                rhs[r] = rhs[r].clone() - f * rhs[col].clone();
            }
        }
    }
    Some((0..n).map(|i| rhs[i].clone() / m[i][i].clone()).collect())
}

/// Barycentric test: is `p` in the simplex spanned by `verts`?
fn in_simplex<T: Scalar>(p: &[T], verts: &[&Vec<T>]) -> bool {
    let d = p.len();
    let v0 = verts[0];
    let m = (0..d).map(|r| (1..=d).map(|c| verts[c][r].clone() - v0[r].clone()).collect()).collect();
    let rhs = (0..d).map(|r| p[r].clone() - v0[r].clone()).collect();
    let Some(lambda) = solve(m, rhs) else { return false };
    let total = lambda.iter().fold(T::zero(), |acc, l| acc + l.clone());
    lambda.iter().all(|l| !l.is_negative()) && total <= T::one()
}

fn find_interior<T: Scalar>(s: &Scene<T>) -> Option<(usize, Vec<usize>)> {
    let d = s.dim();
    let pts = s.points();
    for p in 0..pts.len() {
        let others: Vec<usize> = (0..pts.len()).filter(|&q| q != p).collect();
        let mut found = None;
        subsets(others.len(), d + 1, &mut |pick| {
            let verts: Vec<&Vec<T>> = pick.iter().map(|&i| &pts[others[i]]).collect();
            if in_simplex(&pts[p], &verts) {
                found = Some(pick.iter().map(|&i| others[i]).collect());
                true
            } else {
                false
            }
        });
        if let Some(simplex) = found {
            return Some((p, simplex));
        }
    }
    None
}

/// Checks the linear degeneracy bounds for weakly sparse point-halfspace
/// incidence graphs in dimensions 1 to 3.
pub fn verify_incidence_degeneracy<T: Scalar>(s: &Scene<T>, size: usize) -> Result<IncidenceReport, GeometryError> {
    let d = s.dim();
    let bound = match d {
        1 => size.saturating_sub(1),
        2 => 3 * size.saturating_sub(1),
        3 => 5 * size.saturating_sub(1),
        _ => return Err(GeometryError::UnsupportedDimension(d)),
    };
    let g = s.incidence_graph();
    let forbidden = if d == 1 { has_biclique(&g, size, size) } else { has_biclique(&g, 2, size) };
    if forbidden {
        return Err(GeometryError::NotFree { s: size });
    }
    let interior = if d >= 2 {
        find_interior(s).map(|(point, simplex)| InteriorPoint {
            point,
            simplex,
            degree: g.degree(g.left_vertex(point)),
            bound: (d + 1) * size.saturating_sub(1),
        })
    } else {
        None
    };
    Ok(IncidenceReport { dim: d, s: size, edges: g.edge_count(), degeneracy: degeneracy(&g), bound, interior })
}
