//! Simple undirected graphs stored as closed-neighborhood bitmasks.

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, WORD_BITS};

/// Default vertex cap for parsed graphs. The dynamic program has its own,
/// lower cap; enumeration-only callers may raise this up to [`WORD_BITS`].
pub const DEFAULT_VERTEX_CAP: usize = 32;

/// Largest graph representable with a single-word [`VertexSet`].
pub const MAX_VERTICES: usize = WORD_BITS;

/// An immutable simple graph on at most 64 vertices.
///
/// `closed[v]` is `N(v)`: the neighbors of `v` together with `v` itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    closed: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            closed: (0..n).map(VertexSet::singleton).collect(),
            m: 0,
        })
    }

    /// Builds a graph from 0-based edge pairs. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: x + 1, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u + 1 });
        }
        if self.closed[u].contains(v) {
            return Ok(false);
        }
        self.closed[u].insert(v);
        self.closed[v].insert(u);
        self.m += 1;
        Ok(true)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.closed.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// All vertices, `{v_0, ..., v_{n-1}}`.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Closed neighborhood `N(v)`, including `v`.
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    /// Open neighborhood, `N(v) \ {v}`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.closed[v].without(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.closed[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.closed[v].len() - 1
    }

    /// Degree of `v` in the subgraph induced by `s`. Requires `v ∈ s`.
    #[inline]
    pub fn degree_in(&self, v: usize, s: VertexSet) -> usize {
        debug_assert!(s.contains(v), "degree_in: vertex {v} not in {s:?}");
        (self.closed[v] & s).len() - 1
    }

    /// Union of closed neighborhoods of the members of `s`.
    pub fn closed_nbhd_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.closed[v])
    }

    /// True iff no two members of `s` are adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.neighbors(v).intersects(s))
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `s`, with vertices relabeled `0..|s|` in index order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let members: Vec<usize> = s.iter().collect();
        let mut pos = [usize::MAX; WORD_BITS];
        for (i, &v) in members.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .map(|(u, v)| (pos[u], pos[v]));
        Graph::from_edges(members.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Copy of this graph with edge `{u, v}` removed, if present.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.has_edge(u, v) {
            g.closed[u].remove(v);
            g.closed[v].remove(u);
            g.m -= 1;
        }
        g
    }

    /// Disjoint union, with `other`'s vertices shifted past this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect::<Vec<_>>();
        Graph::from_edges(shift + other.n(), edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::arb_graph;
    use proptest::prelude::*;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn degree_in_examples() {
        let g = k3();
        assert_eq!(g.degree_in(0, VertexSet::full(3)), 2);
        assert_eq!(g.degree_in(0, VertexSet::from_bits(0b011)), 1);
        let h = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(h.degree_in(0, VertexSet::full(3)), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(2, [(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::EndpointOutOfRange { vertex: 3, n: 2 })
        );
        assert!(matches!(
            Graph::empty(65),
            Err(GraphError::TooManyVertices { n: 65, cap: 64 })
        ));
    }

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced(VertexSet::from_bits(0b1101));
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    proptest! {
        #[test]
        fn closed_neighborhood_invariants(g in arb_graph(16)) {
            let mut adjacency_bits = 0;
            for v in 0..g.n() {
                prop_assert!(g.closed_nbhd(v).contains(v));
                prop_assert!(g.closed_nbhd(v).is_subset(g.vertices()));
                for u in 0..g.n() {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
                adjacency_bits += g.neighbors(v).len();
            }
            prop_assert_eq!(adjacency_bits, 2 * g.m());
        }
    }
}
