use crate::scalar::{sign_of, Scalar};

use super::scene::{dot, Halfspace, Scene};
use super::GeometryError;

/// The two point-halfspace scenes in `R^{d-1}` equivalent to a sign matrix
/// `sign <a(u), b(w)>` with every `a(u)_d` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct SignRankSplit<T> {
    /// Points with `a_d > 0`; every halfspace, indexed like `b`.
    pub positive: Scene<T>,
    pub positive_points: Vec<usize>,
    /// Points with `a_d < 0`; every halfspace, indexed like `b`.
    pub negative: Scene<T>,
    pub negative_points: Vec<usize>,
}

fn check_shapes<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Result<usize, GeometryError> {
    let d = a.first().or(b.first()).map_or(1, Vec::len);
    if d == 0 {
        return Err(GeometryError::Dimension { expected: 1, found: 0 });
    }
    for v in a.iter().chain(b) {
        if v.len() != d {
            return Err(GeometryError::Dimension { expected: d, found: v.len() });
        }
    }
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if dot(x, y).is_zero() {
                return Err(GeometryError::ZeroProduct { row: i, column: j });
            }
        }
    }
    Ok(d)
}

pub fn signrank_split<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Result<SignRankSplit<T>, GeometryError> {
    let d = check_shapes(a, b)?;
    let mut pos = (Vec::new(), Vec::new());
    let mut neg = (Vec::new(), Vec::new());
    for (i, x) in a.iter().enumerate() {
        let last = &x[d - 1];
        if last.is_zero() {
            return Err(GeometryError::ZeroLastCoordinate(i));
        }
        let scaled: Vec<T> = x[..d - 1].iter().map(|c| c.clone() / last.abs()).collect();
        let target = if last.is_positive() { &mut pos } else { &mut neg };
        target.0.push(scaled);
        target.1.push(i);
    }
    let halfspaces = |negate: bool| -> Vec<Halfspace<T>> {
        b.iter()
            .map(|y| {
                let t = y[d - 1].clone();
                Halfspace::new(y[..d - 1].to_vec(), if negate { -t } else { t })
            })
            .collect()
    };
    Ok(SignRankSplit {
        positive: Scene::new(d - 1, pos.0, halfspaces(true))?,
        positive_points: pos.1,
        negative: Scene::new(d - 1, neg.0, halfspaces(false))?,
        negative_points: neg.1,
    })
}

/// Replaces each zero last coordinate of `a` by a small positive rational
/// that leaves every sign `sign <a(u), b(w)>` unchanged.
pub fn perturb_last_coordinate<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Result<Vec<Vec<T>>, GeometryError> {
    let d = check_shapes(a, b)?;
    let two = T::one() + T::one();
    Ok(a.iter()
        .map(|x| {
            if !x[d - 1].is_zero() {
                return x.clone();
            }
            let mut eps = T::one();
            for y in b {
                if !y[d - 1].is_zero() {
                    let bound = dot(x, y).abs() / (y[d - 1].abs() * two.clone());
                    if bound < eps {
                        eps = bound;
                    }
                }
            }
            let mut out = x.clone();
            out[d - 1] = eps;
            out
        })
        .collect())
}

/// Halfspaces grouped by the sign pattern of their normals.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveGroup<T> {
    /// `pattern[i]` is true when coordinate `i` of the normals is negative.
    pub pattern: Vec<bool>,
    /// All points, with the halfspaces of this group.
    pub scene: Scene<T>,
    pub halfspaces: Vec<usize>,
}

pub fn sign_pattern<T: Scalar>(normal: &[T]) -> Vec<bool> {
    normal.iter().map(|c| c.is_negative()).collect()
}

pub fn pattern_index(pattern: &[bool]) -> usize {
    pattern.iter().fold(0, |acc, &neg| acc * 2 + usize::from(neg))
}

/// Splits the halfspaces of `s` into at most `2^d` positive groups.
pub fn positive_partition<T: Scalar>(s: &Scene<T>) -> Vec<PositiveGroup<T>> {
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (j, h) in s.halfspaces().iter().enumerate() {
        groups.entry(pattern_index(&sign_pattern(&h.normal))).or_default().push(j);
    }
    groups
        .into_values()
        .map(|idx| {
            let hs: Vec<Halfspace<T>> = idx.iter().map(|&j| s.halfspaces()[j].clone()).collect();
            PositiveGroup {
                pattern: sign_pattern(&hs[0].normal),
                scene: Scene::new(s.dim(), s.points().to_vec(), hs).expect("subset of a valid scene"),
                halfspaces: idx,
            }
        })
        .collect()
}

/// Reflects every point through the origin and negates every threshold,
/// which complements the incidence graph while keeping the normals.
pub fn positive_complement<T: Scalar>(s: &Scene<T>) -> Result<Scene<T>, GeometryError> {
    if s.dim() != 2 {
        return Err(GeometryError::Dimension { expected: 2, found: s.dim() });
    }
    if !s.is_positive() {
        return Err(GeometryError::NotPositive);
    }
    let hs = s.halfspaces();
    let points = s.points().iter().map(|p| p.iter().map(|c| -c.clone()).collect()).collect();
    let halfspaces = hs.iter().map(|h| Halfspace::new(h.normal.clone(), -h.threshold.clone())).collect();
    Scene::new(2, points, halfspaces)
}

/// One of the eight pieces of a sign-rank-3 instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SignRankPiece<T> {
    pub negative_side: bool,
    pub pattern: [bool; 2],
    pub scene: Scene<T>,
    /// Row indices of the points, in scene order.
    pub rows: Vec<usize>,
    /// Column indices of the halfplanes, in scene order.
    pub columns: Vec<usize>,
}

impl<T> SignRankPiece<T> {
    pub fn index(&self) -> usize {
        usize::from(self.negative_side) * 4 + usize::from(self.pattern[0]) * 2 + usize::from(self.pattern[1])
    }
}

/// A sign-rank-3 matrix as eight positive point-halfplane pieces.
#[derive(Debug, Clone, PartialEq)]
pub struct SignRank3Decomposition<T> {
    /// Indexed by `4 * negative_side + 2 * pattern[0] + pattern[1]`.
    pub pieces: Vec<SignRankPiece<T>>,
    /// Per row: whether `a_3 < 0` and the row's position in its pieces.
    pub row_class: Vec<(bool, usize)>,
    /// Per column: pattern index of its normal and its position in its pieces.
    pub column_class: Vec<(usize, usize)>,
}

pub fn signrank3_decompose<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Result<SignRank3Decomposition<T>, GeometryError> {
    let d = check_shapes(a, b)?;
    if d != 3 {
        return Err(GeometryError::Dimension { expected: 3, found: d });
    }
    let split = signrank_split(a, b)?;
    let mut row_class = vec![(false, 0); a.len()];
    for (k, &u) in split.positive_points.iter().enumerate() {
        row_class[u] = (false, k);
    }
    for (k, &u) in split.negative_points.iter().enumerate() {
        row_class[u] = (true, k);
    }
    let mut by_pattern: [Vec<usize>; 4] = Default::default();
    let mut column_class = vec![(0, 0); b.len()];
    for (j, y) in b.iter().enumerate() {
        let p = pattern_index(&sign_pattern(&y[..2]));
        column_class[j] = (p, by_pattern[p].len());
        by_pattern[p].push(j);
    }
    let mut pieces = Vec::with_capacity(8);
    for (neg, scene, rows) in [
        (false, &split.positive, &split.positive_points),
        (true, &split.negative, &split.negative_points),
    ] {
        for (p, columns) in by_pattern.iter().enumerate() {
            let hs = columns.iter().map(|&j| scene.halfspaces()[j].clone()).collect();
            pieces.push(SignRankPiece {
                negative_side: neg,
                pattern: [p & 2 != 0, p & 1 != 0],
                scene: Scene::new(2, scene.points().to_vec(), hs)?,
                rows: rows.clone(),
                columns: columns.clone(),
            });
        }
    }
    Ok(SignRank3Decomposition { pieces, row_class, column_class })
}

/// `+1` entries of the sign matrix as a predicate.
pub fn sign_positive<T: Scalar>(a: &[T], b: &[T]) -> bool {
    sign_of(&dot(a, b)) > 0
}
