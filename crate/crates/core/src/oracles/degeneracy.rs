use std::collections::BTreeSet;

use crate::graph::Adjacency;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    pub value: usize,
    /// Removal order; each vertex has at most `value` neighbours after it.
    pub order: Vec<usize>,
}

/// Repeatedly removes a vertex of minimum residual degree, smallest id first.
pub fn degeneracy<G: Adjacency + ?Sized>(g: &G) -> Degeneracy {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut value = 0;
    while let Some((d, v)) = queue.pop_first() {
        value = value.max(d);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    Degeneracy { value, order }
}

/// Largest number of neighbours any vertex has later in `order`.
pub fn forward_degree<G: Adjacency + ?Sized>(g: &G, order: &[usize]) -> usize {
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{biclique, cycle, path};

    #[test]
    fn small_families() {
        assert_eq!(degeneracy(&path(6)).value, 1);
        assert_eq!(degeneracy(&cycle(8).unwrap()).value, 2);
        assert_eq!(degeneracy(&biclique(4)).value, 4);
        let d = degeneracy(&cycle(6).unwrap());
        assert_eq!(forward_degree(&cycle(6).unwrap(), &d.order), d.value);
        assert_eq!(d.order[0], 0);
    }
}
