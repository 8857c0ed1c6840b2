//! Named bipartite families and seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use super::BipartiteGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("cycle length {0} must be even and at least 4")]
    OddCycle(usize),
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// Unified id of the vertex at position `p` along a path or cycle on `t`
/// vertices. Even positions are left vertices.
pub fn path_position(t: usize, p: usize) -> usize {
    let n_left = t.div_ceil(2);
    if p % 2 == 0 {
        p / 2
    } else {
        n_left + p / 2
    }
}

/// The path `P_t` on `t` vertices.
pub fn path(t: usize) -> BipartiteGraph {
    let n_left = t.div_ceil(2);
    let edges = (0..t.saturating_sub(1)).map(|p| {
        let (a, b) = (path_position(t, p), path_position(t, p + 1));
        let (l, r) = if a < n_left { (a, b) } else { (b, a) };
        (l, r - n_left)
    });
    BipartiteGraph::new(n_left, t / 2, edges).unwrap()
}

/// The cycle `C_t`; `t` must be even.
pub fn cycle(t: usize) -> Result<BipartiteGraph, GenerateError> {
    if t < 4 || t % 2 == 1 {
        return Err(GenerateError::OddCycle(t));
    }
    let half = t / 2;
    let mut edges: Vec<(usize, usize)> = (0..half).map(|i| (i, i)).collect();
    edges.extend((0..half).map(|i| ((i + 1) % half, i)));
    Ok(BipartiteGraph::new(half, half, edges).unwrap())
}

/// The subdivided star `S_{s,t}`: a centre with `s` pendant paths of `t`
/// vertices each. The centre is left vertex 0.
pub fn subdivided_star(s: usize, t: usize) -> BipartiteGraph {
    let mut left = 1;
    let mut right = 0;
    let mut edges = Vec::new();
    for _ in 0..s {
        let mut prev = (true, 0usize);
        for d in 1..=t {
            let cur = if d % 2 == 0 {
                left += 1;
                (true, left - 1)
            } else {
                right += 1;
                (false, right - 1)
            };
            edges.push(if prev.0 { (prev.1, cur.1) } else { (cur.1, prev.1) });
            prev = cur;
        }
    }
    BipartiteGraph::new(left, right, edges).unwrap()
}

/// The complete bipartite graph `K_{t,t}`.
pub fn biclique(t: usize) -> BipartiteGraph {
    BipartiteGraph::new(t, t, (0..t).flat_map(|a| (0..t).map(move |b| (a, b)))).unwrap()
}

/// The half-graph `H_k`: left `a_i` adjacent to right `b_j` iff `i < j`.
pub fn half_graph(k: usize) -> BipartiteGraph {
    BipartiteGraph::new(k, k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)))).unwrap()
}

pub fn random_bipartite<R: Rng>(n_left: usize, n_right: usize, p: f64, rng: &mut R) -> BipartiteGraph {
    let mut edges = Vec::new();
    for a in 0..n_left {
        for b in 0..n_right {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    BipartiteGraph::new(n_left, n_right, edges).unwrap()
}

/// A random spanning tree respecting the sides plus each remaining cross
/// pair with probability `p`.
pub fn random_connected_bipartite<R: Rng>(
    n_left: usize,
    n_right: usize,
    p: f64,
    rng: &mut R,
) -> Result<BipartiteGraph, GenerateError> {
    if n_left == 0 || n_right == 0 {
        return Err(GenerateError::Parameter("both sides must be non-empty".into()));
    }
    let mut order: Vec<usize> = (0..n_left + n_right).filter(|&v| v != 0 && v != n_left).collect();
    order.shuffle(rng);
    let mut placed_left = vec![0usize];
    let mut placed_right = vec![0usize];
    let mut edges = std::collections::BTreeSet::from([(0usize, 0usize)]);
    for v in order {
        if v < n_left {
            let b = placed_right[rng.gen_range(0..placed_right.len())];
            edges.insert((v, b));
            placed_left.push(v);
        } else {
            let a = placed_left[rng.gen_range(0..placed_left.len())];
            edges.insert((a, v - n_left));
            placed_right.push(v - n_left);
        }
    }
    for a in 0..n_left {
        for b in 0..n_right {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.insert((a, b));
            }
        }
    }
    Ok(BipartiteGraph::new(n_left, n_right, edges).unwrap())
}

/// A disjoint union of `count` bicliques with sides of size `0..=max_side`
/// (never both empty), vertex ids shuffled within each side.
pub fn random_equivalence<R: Rng>(count: usize, max_side: usize, rng: &mut R) -> BipartiteGraph {
    let mut blocks = Vec::new();
    for _ in 0..count {
        let l = rng.gen_range(0..=max_side);
        let r = if l == 0 { rng.gen_range(1..=max_side.max(1)) } else { rng.gen_range(0..=max_side) };
        blocks.push((l, r));
    }
    let n_left: usize = blocks.iter().map(|b| b.0).sum();
    let n_right: usize = blocks.iter().map(|b| b.1).sum();
    let mut lperm: Vec<usize> = (0..n_left).collect();
    let mut rperm: Vec<usize> = (0..n_right).collect();
    lperm.shuffle(rng);
    rperm.shuffle(rng);
    let (mut lo, mut ro) = (0, 0);
    let mut edges = Vec::new();
    for (l, r) in blocks {
        for a in lo..lo + l {
            for b in ro..ro + r {
                edges.push((lperm[a], rperm[b]));
            }
        }
        lo += l;
        ro += r;
    }
    BipartiteGraph::new(n_left, n_right, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_components, Adjacency};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_sizes() {
        let p = path(5);
        assert_eq!((p.n_left(), p.n_right(), p.edge_count()), (3, 2, 4));
        let c = cycle(6).unwrap();
        assert_eq!((c.n(), c.edge_count()), (6, 6));
        assert!(c.neighbors(0).len() == 2);
        assert_eq!(cycle(5), Err(GenerateError::OddCycle(5)));
        let s = subdivided_star(3, 3);
        assert_eq!((s.n(), s.edge_count()), (10, 9));
        assert_eq!(s.degree(0), 3);
        assert_eq!(biclique(3).edge_count(), 9);
        let h = half_graph(4);
        assert_eq!(h.edge_count(), 6);
        assert!(h.adjacent(0, 4 + 1));
        assert!(!h.adjacent(1, 4 + 1));
    }

    #[test]
    fn path_positions_follow_the_path() {
        let t = 7;
        let g = path(t);
        for p in 0..t - 1 {
            assert!(g.adjacent(path_position(t, p), path_position(t, p + 1)));
        }
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_connected_bipartite(6, 7, 0.2, &mut rng).unwrap();
            assert_eq!(connected_components(&g).len(), 1);
        }
    }
}
