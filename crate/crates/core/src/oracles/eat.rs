use crate::graph::{components_within, shortest_path_within, Adjacency};

/// Which neighbourhood of an edge's endpoints the connecting paths avoid.
///
/// For an edge `uv` the open neighbourhoods already contain `u` and `v`, so
/// both modes delete the same vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighbourhoodMode {
    #[default]
    Closed,
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EatWitness {
    pub edges: [(usize, usize); 3],
    /// `paths[i]` contains the two edges other than `edges[i]`.
    pub paths: [Vec<usize>; 3],
    /// `avoided[i]` is the deleted neighbourhood of `edges[i]`.
    pub avoided: [Vec<usize>; 3],
}

impl EatWitness {
    /// Checks every certificate against `g`.
    pub fn is_valid<G: Adjacency>(&self, g: &G) -> bool {
        let edge_ok = self.edges.iter().all(|&(u, v)| g.adjacent(u, v));
        (0..3).all(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let path = &self.paths[i];
            let walk = path.windows(2).all(|w| g.adjacent(w[0], w[1]));
            let avoids = path.iter().all(|v| !self.avoided[i].contains(v));
            let has = |(a, b): (usize, usize)| path.contains(&a) && path.contains(&b);
            walk && avoids && has(self.edges[j]) && has(self.edges[k])
        }) && edge_ok
    }
}

fn deleted<G: Adjacency>(g: &G, (u, v): (usize, usize), mode: NeighbourhoodMode) -> Vec<bool> {
    let mut out = vec![false; g.vertex_count()];
    for &w in g.neighbors(u).iter().chain(g.neighbors(v)) {
        out[w] = true;
    }
    if mode == NeighbourhoodMode::Closed {
        out[u] = true;
        out[v] = true;
    }
    out
}

/// Searches for three edges such that each pair lies on a path avoiding the
/// neighbourhood of the third edge's endpoints.
pub fn find_edge_asteroid_triple<G: Adjacency>(g: &G, mode: NeighbourhoodMode) -> Option<EatWitness> {
    let edges: Vec<(usize, usize)> = (0..g.vertex_count())
        .flat_map(|u| g.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    let m = edges.len();
    const NONE: u32 = u32::MAX;
    // label[e][f]: component of G - N(e) containing edge f, or NONE.
    let mut label = vec![NONE; m * m];
    let n = g.vertex_count();
    for (e, &edge) in edges.iter().enumerate() {
        let del = deleted(g, edge, mode);
        let allowed: Vec<bool> = del.iter().map(|d| !d).collect();
        let mut comp = vec![NONE; n];
        for (c, vs) in components_within(g, &allowed).iter().enumerate() {
            for &v in vs {
                comp[v] = c as u32;
            }
        }
        for (f, &(a, _)) in edges.iter().enumerate() {
            // Both endpoints share a component when either survives.
            if allowed[a] && allowed[edges[f].1] {
                label[e * m + f] = comp[a];
            }
        }
    }
    let lab = |e: usize, f: usize| label[e * m + f];
    for i in 0..m {
        for j in i + 1..m {
            if lab(i, j) == NONE || lab(j, i) == NONE {
                continue;
            }
            for k in j + 1..m {
                let ok = lab(k, i) != NONE
                    && lab(k, i) == lab(k, j)
                    && lab(j, i) == lab(j, k)
                    && lab(i, j) == lab(i, k);
                if ok {
                    return Some(witness(g, [edges[i], edges[j], edges[k]], mode));
                }
            }
        }
    }
    None
}

fn witness<G: Adjacency>(g: &G, edges: [(usize, usize); 3], mode: NeighbourhoodMode) -> EatWitness {
    let mut paths: [Vec<usize>; 3] = Default::default();
    let mut avoided: [Vec<usize>; 3] = Default::default();
    for i in 0..3 {
        let del = deleted(g, edges[i], mode);
        let allowed: Vec<bool> = del.iter().map(|d| !d).collect();
        let (e, f) = (edges[(i + 1) % 3], edges[(i + 2) % 3]);
        let mid = shortest_path_within(g, &allowed, &[e.0, e.1], &[f.0, f.1]).expect("edges share a component");
        let mut path = Vec::new();
        let first = mid[0];
        path.push(if first == e.0 { e.1 } else { e.0 });
        path.extend(&mid);
        let last = *mid.last().unwrap();
        path.push(if last == f.0 { f.1 } else { f.0 });
        path.dedup();
        // A shared endpoint or overlap can repeat vertices; keep the first visit.
        let mut seen = std::collections::HashSet::new();
        path.retain(|v| seen.insert(*v));
        paths[i] = path;
        avoided[i] = (0..g.vertex_count()).filter(|&v| del[v]).collect();
    }
    EatWitness { edges, paths, avoided }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{cycle, path, subdivided_star};

    #[test]
    fn subdivided_star_has_triple() {
        let g = subdivided_star(3, 3);
        let w = find_edge_asteroid_triple(&g, NeighbourhoodMode::Closed).unwrap();
        assert!(w.is_valid(&g));
    }

    #[test]
    fn paths_have_no_triple() {
        for t in 2..=12 {
            assert!(find_edge_asteroid_triple(&path(t), NeighbourhoodMode::Closed).is_none());
        }
    }

    #[test]
    fn long_cycles_have_triples() {
        let g = cycle(12).unwrap();
        let w = find_edge_asteroid_triple(&g, NeighbourhoodMode::Closed).unwrap();
        assert!(w.is_valid(&g));
        assert!(find_edge_asteroid_triple(&cycle(6).unwrap(), NeighbourhoodMode::Closed).is_none());
    }

    #[test]
    fn open_and_closed_agree_on_small_stars() {
        for s in 1..=3 {
            for t in 1..=3 {
                let g = subdivided_star(s, t);
                assert_eq!(
                    find_edge_asteroid_triple(&g, NeighbourhoodMode::Open),
                    find_edge_asteroid_triple(&g, NeighbourhoodMode::Closed)
                );
            }
        }
    }
}
