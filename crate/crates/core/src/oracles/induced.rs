use crate::graph::{Adjacency, BipartiteGraph};

use super::OracleError;

pub const MAX_PATTERN: usize = 12;

/// Pattern vertex `i` maps to host vertex `embedding[i]`.
pub type Embedding = Vec<usize>;

fn search_order<H: Adjacency>(h: &H) -> Vec<usize> {
    let k = h.vertex_count();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        // Next vertex: most neighbours already placed, then highest degree.
        let v = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, h.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    order
}

fn extend<G: Adjacency, H: Adjacency>(
    g: &G,
    h: &H,
    order: &[usize],
    allowed: &dyn Fn(usize, usize) -> bool,
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let anchor = order[..depth].iter().copied().find(|&q| h.adjacent(p, q));
    let candidates: Vec<usize> = match anchor {
        Some(q) => g.neighbors(map[q].unwrap()).to_vec(),
        None => (0..g.vertex_count()).collect(),
    };
    for c in candidates {
        if used[c] || g.degree(c) < h.degree(p) || !allowed(p, c) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&q| h.adjacent(p, q) == g.adjacent(c, map[q].unwrap()));
        if !consistent {
            continue;
        }
        map[p] = Some(c);
        used[c] = true;
        if extend(g, h, order, allowed, map, used, depth + 1) {
            return true;
        }
        map[p] = None;
        used[c] = false;
    }
    false
}

fn embed<G: Adjacency, H: Adjacency>(g: &G, h: &H, allowed: &dyn Fn(usize, usize) -> bool) -> Option<Embedding> {
    let order = search_order(h);
    let mut map = vec![None; h.vertex_count()];
    let mut used = vec![false; g.vertex_count()];
    if extend(g, h, &order, allowed, &mut map, &mut used, 0) {
        Some(map.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// Finds an induced copy of `h` in `g`, ignoring any bipartition.
pub fn contains_induced<G: Adjacency, H: Adjacency>(g: &G, h: &H) -> Result<Option<Embedding>, OracleError> {
    if h.vertex_count() > MAX_PATTERN {
        return Err(OracleError::PatternTooLarge(h.vertex_count()));
    }
    Ok(embed(g, h, &|_, _| true))
}

/// Induced copy of a bipartite pattern whose sides land on the sides of
/// `g`, either directly or swapped.
pub fn contains_induced_bipartite(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<Option<Embedding>, OracleError> {
    if h.n() > MAX_PATTERN {
        return Err(OracleError::PatternTooLarge(h.n()));
    }
    if let Some(e) = embed(g, h, &|p, c| h.is_left(p) == g.is_left(c)) {
        return Ok(Some(e));
    }
    Ok(embed(g, h, &|p, c| h.is_left(p) != g.is_left(c)))
}

pub fn is_induced_embedding<G: Adjacency, H: Adjacency>(g: &G, h: &H, e: &[usize]) -> bool {
    let k = h.vertex_count();
    let mut seen = e.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == k && (0..k).all(|i| (0..k).all(|j| i == j || h.adjacent(i, j) == g.adjacent(e[i], e[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{biclique, cycle, half_graph, path};

    #[test]
    fn finds_paths_in_cycles() {
        let c = cycle(8).unwrap();
        let p = path(5);
        let e = contains_induced(&c, &p).unwrap().unwrap();
        assert!(is_induced_embedding(&c, &p, &e));
        assert!(contains_induced(&c, &cycle(6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn biclique_has_no_induced_p4() {
        assert!(contains_induced(&biclique(4), &path(4)).unwrap().is_none());
        assert!(contains_induced(&half_graph(3), &path(4)).unwrap().is_some());
    }

    #[test]
    fn respects_sides_up_to_swap() {
        let g = BipartiteGraph::new(1, 3, [(0, 0), (0, 1), (0, 2)]).unwrap();
        let star_other_way = BipartiteGraph::new(2, 1, [(0, 0), (1, 0)]).unwrap();
        let e = contains_induced_bipartite(&g, &star_other_way).unwrap().unwrap();
        assert!(!g.is_left(e[0]));
        assert!(g.is_left(e[2]));
    }

    #[test]
    fn pattern_size_limit() {
        assert_eq!(
            contains_induced(&biclique(7), &biclique(7)),
            Err(OracleError::PatternTooLarge(14))
        );
    }
}
