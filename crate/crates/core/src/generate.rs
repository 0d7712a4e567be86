//! Instance generators: named graphs, cliques, cycles, `G(n, p)`, and
//! disjoint unions of triangles and `K4`s.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The cycle `C_n` for `n >= 3`. Smaller `n` give the path on `n` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, edges)
}

/// Path `P_n` on `n` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Disjoint union of `triangles` copies of `K3` followed by `k4s` copies of `K4`.
pub fn triangles_k4s(triangles: usize, k4s: usize) -> Result<Graph, GraphError> {
    let n = triangles
        .checked_mul(3)
        .and_then(|t| k4s.checked_mul(4).and_then(|q| t.checked_add(q)))
        .unwrap_or(usize::MAX);
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            cap: MAX_VERTICES,
        });
    }
    let mut edges = Vec::new();
    let mut base = 0;
    for size in std::iter::repeat_n(3, triangles).chain(std::iter::repeat_n(4, k4s)) {
        for u in 0..size {
            for v in u + 1..size {
                edges.push((base + u, base + v));
            }
        }
        base += size;
    }
    Graph::from_edges(n, edges)
}

/// Named fixtures: `petersen` (n=10, m=15) and `groetzsch` (n=11, m=20).
pub fn named(name: &str) -> Result<Graph, GraphError> {
    match name.to_ascii_lowercase().as_str() {
        "petersen" => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, edges)
        }
        // Mycielskian of C5: cycle 0..5, shadows 5..10, apex 10.
        "groetzsch" | "grotzsch" => {
            let mut edges = Vec::with_capacity(20);
            for i in 0..5 {
                let (prev, next) = ((i + 4) % 5, (i + 1) % 5);
                edges.push((i, next));
                edges.push((5 + i, prev));
                edges.push((5 + i, next));
                edges.push((5 + i, 10));
            }
            Graph::from_edges(11, edges)
        }
        _ => Err(GraphError::UnknownName(name.to_string())),
    }
}

/// Erdős–Rényi `G(n, p)`.
///
/// Uses ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with `seed_from_u64(seed)`.
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and each is
/// kept when `gen_bool(p)` succeeds, so output is identical across runs and
/// platforms for equal `(n, p, seed)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidProbability(p));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            cap: MAX_VERTICES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_regular(g: &Graph, d: usize) -> bool {
        (0..g.n()).all(|v| g.degree(v) == d)
    }

    #[test]
    fn triangles_and_k4s() {
        let k3 = triangles_k4s(1, 0).unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        let k4 = triangles_k4s(0, 1).unwrap();
        assert_eq!(k4, complete(4).unwrap());
        let both = triangles_k4s(1, 1).unwrap();
        assert_eq!((both.n(), both.m()), (7, 9));
        assert!(!both.has_edge(2, 3));
        assert!(matches!(
            triangles_k4s(10, 9),
            Err(GraphError::TooManyVertices { n: 66, .. })
        ));
    }

    #[test]
    fn named_graphs() {
        let p = named("petersen").unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(is_regular(&p, 3));
        let g = named("groetzsch").unwrap();
        assert_eq!((g.n(), g.m()), (11, 20));
        assert_eq!(g.degree(10), 5);
        assert!(matches!(named("heawood"), Err(GraphError::UnknownName(_))));
    }

    #[test]
    fn petersen_is_triangle_free_with_girth_five() {
        let p = named("petersen").unwrap();
        for (u, v) in p.edges() {
            assert!(!p.neighbors(u).intersects(p.neighbors(v)));
        }
        // two non-adjacent vertices share exactly one neighbor
        for u in 0..10 {
            for v in u + 1..10 {
                if !p.has_edge(u, v) {
                    assert_eq!((p.neighbors(u) & p.neighbors(v)).len(), 1);
                }
            }
        }
    }

    #[test]
    fn groetzsch_is_triangle_free() {
        let g = named("groetzsch").unwrap();
        for (u, v) in g.edges() {
            assert!(!g.neighbors(u).intersects(g.neighbors(v)));
        }
    }

    #[test]
    fn complete_cycle_gnp() {
        assert_eq!(complete(4).unwrap().m(), 6);
        let c = cycle(7).unwrap();
        assert_eq!(c.m(), 7);
        assert!(is_regular(&c, 2));
        assert_eq!(cycle(2).unwrap().m(), 1);
        assert_eq!(gnp(5, 0.0, 99).unwrap().m(), 0);
        assert_eq!(gnp(6, 1.0, 99).unwrap(), complete(6).unwrap());
        assert!(matches!(
            gnp(5, 1.5, 0),
            Err(GraphError::InvalidProbability(_))
        ));
    }

    #[test]
    fn gnp_is_deterministic() {
        assert_eq!(gnp(20, 0.5, 42).unwrap(), gnp(20, 0.5, 42).unwrap());
        assert_ne!(gnp(20, 0.5, 42).unwrap(), gnp(20, 0.5, 43).unwrap());
    }

    #[test]
    fn gnp_pinned_output() {
        // Frozen to catch accidental changes to the generator contract.
        let g = gnp(8, 0.5, 7).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, PINNED_GNP_8_05_7);
    }

    const PINNED_GNP_8_05_7: &[(usize, usize)] = &[
        (0, 1),
        (0, 2),
        (0, 6),
        (0, 7),
        (1, 3),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 4),
        (2, 6),
        (2, 7),
        (3, 4),
        (3, 5),
        (3, 6),
        (4, 5),
        (4, 6),
        (4, 7),
        (5, 6),
        (6, 7),
    ];
}
