//! Random instances for the geometric pipelines. Coordinates are small
//! rationals so every predicate stays exact.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::scalar::Scalar;

use super::format::VectorPair;
use super::hierarchy::{Line, PointBox};
use super::incidence::has_biclique;
use super::{dot, Halfspace, Scene, UdgRealization};

fn int_vec<T: Scalar, R: Rng>(d: usize, range: i64, rng: &mut R) -> Vec<T> {
    (0..d).map(|_| T::from_ratio(rng.gen_range(-range..=range), 1)).collect()
}

/// A closed halfspace with normal `w` containing exactly the `k` points of
/// largest projection, if the projections allow such a cut.
fn top_k<T: Scalar>(points: &[Vec<T>], w: Vec<T>, k: usize) -> Option<Halfspace<T>> {
    let mut proj: Vec<T> = points.iter().map(|p| dot(&w, p)).collect();
    proj.sort_by(|a, b| b.partial_cmp(a).unwrap());
    if k == 0 || k >= proj.len() || proj[k - 1] == proj[k] {
        return None;
    }
    let t = (proj[k - 1].clone() + proj[k].clone()) / (T::one() + T::one());
    Some(Halfspace::new(w, t))
}

/// A scene in dimension `d` whose incidence graph avoids `K_{s,s}` when
/// `d = 1` and `K_{2,s}` (both orientations) otherwise. Halfspaces are added
/// one at a time and dropped when they would create the pattern.
pub fn random_free_scene<T: Scalar, R: Rng>(d: usize, s: usize, n_points: usize, n_halfspaces: usize, rng: &mut R) -> Scene<T> {
    let mut points: Vec<Vec<T>> = Vec::new();
    while points.len() < n_points {
        let p = int_vec(d, 40, rng);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let mut hs = Vec::new();
    let (a, b) = if d == 1 { (s, s) } else { (2, s) };
    for _ in 0..n_halfspaces * 20 {
        if hs.len() == n_halfspaces {
            break;
        }
        let w = int_vec::<T, R>(d, 4, rng);
        if w.iter().all(|c| c.is_zero()) {
            continue;
        }
        let k = rng.gen_range(1..=(2 * s).min(n_points.saturating_sub(1)).max(1));
        let Some(h) = top_k(&points, w, k) else { continue };
        hs.push(h);
        let g = Scene::new(d, points.clone(), hs.clone()).expect("cuts avoid the points").incidence_graph();
        if has_biclique(&g, a, b) {
            hs.pop();
        }
    }
    Scene::new(d, points, hs).expect("cuts avoid the points")
}

/// A planar scene whose normals all lie in the closed positive quadrant.
pub fn random_positive_scene<T: Scalar, R: Rng>(n_points: usize, n_halfspaces: usize, rng: &mut R) -> Scene<T> {
    let points: Vec<Vec<T>> = (0..n_points).map(|_| int_vec(2, 20, rng)).collect();
    let mut hs = Vec::new();
    while hs.len() < n_halfspaces {
        let w = vec![T::from_ratio(rng.gen_range(0..=5), 1), T::from_ratio(rng.gen_range(0..=5), 1)];
        if w.iter().all(|c| c.is_zero()) {
            continue;
        }
        // odd numerator over 2 keeps the threshold off the integer lattice
        let t = T::from_ratio(2 * rng.gen_range(-60..=60) + 1, 2);
        hs.push(Halfspace::new(w, t));
    }
    Scene::new(2, points, hs).expect("half-integer thresholds avoid integer points")
}

/// Rows and columns in dimension 3 with every inner product and every row's
/// last coordinate nonzero.
pub fn random_signrank3<T: Scalar, R: Rng>(n_rows: usize, n_columns: usize, rng: &mut R) -> VectorPair<T> {
    loop {
        let a: Vec<Vec<T>> = (0..n_rows)
            .map(|_| loop {
                let v = int_vec::<T, R>(3, 9, rng);
                if !v[2].is_zero() {
                    break v;
                }
            })
            .collect();
        let b: Vec<Vec<T>> = (0..n_columns).map(|_| int_vec(3, 9, rng)).collect();
        if a.iter().all(|x| b.iter().all(|y| !dot(x, y).is_zero())) {
            return VectorPair { a, b };
        }
    }
}

/// `n` points with coordinates in `[0, width)` on a grid of step `1/1024`;
/// a point at distance exactly `radius` from an earlier one is redrawn.
pub fn random_udg<T: Scalar, R: Rng>(n: usize, radius: T, width: T, rng: &mut R) -> UdgRealization<T> {
    let ticks = (width.clone() * T::from_ratio(1024, 1)).floor_i64().max(1);
    let r2 = radius.clone() * radius.clone();
    let mut points: Vec<[T; 2]> = Vec::new();
    while points.len() < n {
        let p = [T::from_ratio(rng.gen_range(0..ticks), 1024), T::from_ratio(rng.gen_range(0..ticks), 1024)];
        let on_circle = points.iter().any(|q| {
            let dx = p[0].clone() - q[0].clone();
            let dy = p[1].clone() - q[1].clone();
            dx.clone() * dx + dy.clone() * dy == r2
        });
        if !on_circle {
            points.push(p);
        }
    }
    UdgRealization::new(points, radius).expect("boundary pairs were redrawn")
}

/// Distinct grid points in `[0, grid)^2` and distinct lines through pairs of them.
pub fn random_point_line<T: Scalar, R: Rng>(
    n_points: usize,
    n_lines: usize,
    grid: i64,
    rng: &mut R,
) -> (Vec<[T; 2]>, Vec<Line<T>>) {
    let mut cells: Vec<(i64, i64)> = (0..grid).flat_map(|x| (0..grid).map(move |y| (x, y))).collect();
    cells.shuffle(rng);
    cells.truncate(n_points);
    let points: Vec<[T; 2]> = cells.iter().map(|&(x, y)| [T::from_ratio(x, 1), T::from_ratio(y, 1)]).collect();
    let mut lines: Vec<Line<T>> = Vec::new();
    for _ in 0..n_lines * 20 {
        if lines.len() == n_lines || cells.len() < 2 {
            break;
        }
        let (x1, y1) = cells[rng.gen_range(0..cells.len())];
        let (x2, y2) = cells[rng.gen_range(0..cells.len())];
        let line = if (x1, y1) == (x2, y2) {
            continue;
        } else if x1 == x2 {
            Line::Vertical(T::from_ratio(x1, 1))
        } else {
            let slope = T::from_ratio(y2 - y1, x2 - x1);
            let intercept = T::from_ratio(y1, 1) - slope.clone() * T::from_ratio(x1, 1);
            Line::Sloped { slope, intercept }
        };
        if !lines.contains(&line) {
            lines.push(line);
        }
    }
    (points, lines)
}

/// Random points in the unit square and dyadic squares of side `2^-k`,
/// `1 <= k <= depth`, aligned to their own grid.
pub fn random_dyadic_boxes<T: Scalar, R: Rng>(
    n_points: usize,
    n_boxes: usize,
    depth: u32,
    rng: &mut R,
) -> (Vec<Vec<T>>, Vec<PointBox<T>>) {
    let res = 1i64 << (depth + 2);
    let points = (0..n_points)
        .map(|_| (0..2).map(|_| T::from_ratio(rng.gen_range(0..res), res)).collect())
        .collect();
    let boxes = (0..n_boxes)
        .map(|_| {
            let side = 1i64 << rng.gen_range(1..=depth.max(1));
            let mut lo = Vec::new();
            let mut hi = Vec::new();
            for _ in 0..2 {
                let k = rng.gen_range(0..side);
                lo.push(T::from_ratio(k, side));
                hi.push(T::from_ratio(k + 1, side));
            }
            PointBox { lo, hi }
        })
        .collect();
    (points, boxes)
}
