//! Abstract multigraphs underlying resolved spatial-graph diagrams.

use crate::union_find::UnionFind;

/// A finite multigraph on vertices `0..vertices`. Loops and parallel edges
/// are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbstractGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl AbstractGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(edges.iter().all(|&(u, v)| u < vertices && v < vertices), "edge endpoint out of range");
        Self { vertices, edges }
    }

    /// One vertex carrying one loop.
    pub fn loop_graph() -> Self {
        Self::new(1, vec![(0, 0)])
    }

    /// Two vertices joined by three parallel edges.
    pub fn theta() -> Self {
        Self::new(2, vec![(0, 1), (0, 1), (0, 1)])
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices == 0
    }

    /// Disjoint union; vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &AbstractGraph) -> AbstractGraph {
        let off = self.vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        AbstractGraph::new(self.vertices + other.vertices, edges)
    }

    /// Number of connected components.
    pub fn mu(&self) -> usize {
        self.mu_of(self.edges.iter().copied())
    }

    /// Components and first Betti number `(mu, beta)` with
    /// `beta = |E| - |V| + mu`.
    pub fn mu_beta(&self) -> (usize, usize) {
        let mu = self.mu();
        (mu, self.edges.len() + mu - self.vertices)
    }

    pub(crate) fn mu_of(&self, edges: impl Iterator<Item = (usize, usize)>) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for (u, v) in edges {
            uf.union(u, v);
        }
        uf.count()
    }
}

/// `(mu, beta)` of `g`.
pub fn graph_mu_beta(g: &AbstractGraph) -> (usize, usize) {
    g.mu_beta()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_beta_examples() {
        assert_eq!(graph_mu_beta(&AbstractGraph::loop_graph()), (1, 1));
        assert_eq!(graph_mu_beta(&AbstractGraph::theta()), (1, 2));
        assert_eq!(graph_mu_beta(&AbstractGraph::new(2, vec![])), (2, 0));
    }

    #[test]
    fn disjoint_union_adds_components_and_cycles() {
        let g = AbstractGraph::theta().disjoint_union(&AbstractGraph::loop_graph());
        assert_eq!(g.mu_beta(), (2, 3));
    }
}
