use crate::graph::{connected_components, Adjacency, BipartiteGraph};

/// One block of an equivalence graph; either side may be empty for an
/// isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// The biclique partition when every component is complete bipartite.
pub fn equivalence_partition(g: &BipartiteGraph) -> Option<Vec<Biclique>> {
    let mut out = Vec::new();
    for comp in connected_components(g) {
        let (left, right): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| g.is_left(v));
        let edges: usize = left.iter().map(|&v| g.degree(v)).sum();
        if edges != left.len() * right.len() {
            return None;
        }
        out.push(Biclique { left, right });
    }
    Some(out)
}

pub fn is_equivalence_graph(g: &BipartiteGraph) -> bool {
    equivalence_partition(g).is_some()
}

/// Per-vertex block index of the partition, if `g` is an equivalence graph.
pub fn biclique_ids(g: &BipartiteGraph) -> Option<Vec<usize>> {
    let blocks = equivalence_partition(g)?;
    let mut id = vec![0; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b.left.iter().chain(&b.right) {
            id[v] = i;
        }
    }
    Some(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{biclique, path};

    #[test]
    fn recognises_unions_of_bicliques() {
        let parts = equivalence_partition(&biclique(3)).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(equivalence_partition(&path(4)).is_none());
        let g = BipartiteGraph::new(3, 2, [(0, 0), (1, 0)]).unwrap();
        let parts = equivalence_partition(&g).unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], Biclique { left: vec![0, 1], right: vec![3] });
        assert_eq!(parts[1], Biclique { left: vec![2], right: vec![] });
    }

    #[test]
    fn edgeless_gives_singletons() {
        let g = BipartiteGraph::empty(2, 2);
        assert_eq!(equivalence_partition(&g).unwrap().len(), 4);
    }
}
