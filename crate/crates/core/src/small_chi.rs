//! Exact chromatic number of an induced subgraph, when it is at most 3.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `Some(χ(g[s]))` when `χ(g[s]) <= 3`, otherwise `None`.
pub fn chi_at_most_3(g: &Graph, s: VertexSet) -> Option<u8> {
    if s.is_empty() {
        Some(0)
    } else if g.is_independent(s) {
        Some(1)
    } else if is_bipartite(g, s) {
        Some(2)
    } else if is_three_colorable(g, s) {
        Some(3)
    } else {
        None
    }
}

/// Two-colors each component of `g[s]` by breadth-first layers.
pub fn is_bipartite(g: &Graph, s: VertexSet) -> bool {
    let mut rest = s;
    while let Some(root) = rest.first() {
        let mut sides = [VertexSet::singleton(root), VertexSet::EMPTY];
        let mut frontier = sides[0];
        let mut side = 0;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v))
                & s;
            if next.intersects(sides[side]) {
                return false;
            }
            side ^= 1;
            frontier = next - sides[side];
            sides[side] |= next;
        }
        rest -= sides[0] | sides[1];
    }
    true
}

/// Backtracking 3-coloring of `g[s]`.
///
/// Vertices that have lost all but one color are colored first; a vertex
/// with no color left fails the branch. Otherwise branches on the uncolored
/// vertex of maximum degree in `s`.
pub fn is_three_colorable(g: &Graph, s: VertexSet) -> bool {
    // K4 is the cheapest obstruction to spot; any vertex with three mutually
    // adjacent neighbors settles it immediately.
    if contains_k4(g, s) {
        return false;
    }
    let degrees: Vec<usize> = (0..g.n())
        .map(|v| if s.contains(v) { g.degree_in(v, s) } else { 0 })
        .collect();
    color3(g, s, [VertexSet::EMPTY; 3], &degrees)
}

fn contains_k4(g: &Graph, s: VertexSet) -> bool {
    s.iter().any(|a| {
        let na = g.neighbors(a) & s;
        na.iter().filter(|&b| b > a).any(|b| {
            let nab = na & g.neighbors(b);
            nab.iter()
                .filter(|&c| c > b)
                .any(|c| (nab & g.neighbors(c)).iter().any(|d| d > c))
        })
    })
}

fn color3(g: &Graph, uncolored: VertexSet, classes: [VertexSet; 3], degrees: &[usize]) -> bool {
    if uncolored.is_empty() {
        return true;
    }
    let available = |v: usize| -> [bool; 3] {
        let n = g.neighbors(v);
        [
            !n.intersects(classes[0]),
            !n.intersects(classes[1]),
            !n.intersects(classes[2]),
        ]
    };

    let mut pick = None;
    let mut pick_options = 4;
    for v in uncolored {
        let options = available(v).iter().filter(|&&a| a).count();
        if options == 0 {
            return false;
        }
        let better = match pick {
            None => true,
            Some(p) => {
                (options == 1 && pick_options > 1)
                    || (options > 1 && pick_options > 1 && degrees[v] > degrees[p])
            }
        };
        if better {
            pick = Some(v);
            pick_options = options;
        }
    }
    let v = pick.expect("uncolored is nonempty");

    let avail = available(v);
    let mut tried_empty = false;
    for c in 0..3 {
        if !avail[c] {
            continue;
        }
        // colors are interchangeable while unused
        if classes[c].is_empty() {
            if tried_empty {
                continue;
            }
            tried_empty = true;
        }
        let mut next = classes;
        next[c].insert(v);
        if color3(g, uncolored.without(v), next, degrees) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, named, path};
    use crate::test_support::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let g = cycle(5).unwrap();
        assert_eq!(chi_at_most_3(&g, VertexSet::EMPTY), Some(0));
        assert_eq!(chi_at_most_3(&g, g.vertices()), Some(3));
        assert_eq!(
            chi_at_most_3(&complete(4).unwrap(), VertexSet::full(4)),
            None
        );
        assert_eq!(
            chi_at_most_3(&path(3).unwrap(), VertexSet::full(3)),
            Some(2)
        );
        assert_eq!(
            chi_at_most_3(&Graph::empty(3).unwrap(), VertexSet::full(3)),
            Some(1)
        );
    }

    #[test]
    fn named_graphs() {
        let p = named("petersen").unwrap();
        assert_eq!(chi_at_most_3(&p, p.vertices()), Some(3));
        // triangle-free but 4-chromatic
        let g = named("groetzsch").unwrap();
        assert_eq!(chi_at_most_3(&g, g.vertices()), None);
        assert_eq!(chi_at_most_3(&g, g.vertices().without(10)), Some(3));
    }

    #[test]
    fn even_and_odd_cycles() {
        for n in 3..20 {
            let g = cycle(n).unwrap();
            let expected = if n % 2 == 0 { 2 } else { 3 };
            assert_eq!(chi_at_most_3(&g, g.vertices()), Some(expected), "C{n}");
        }
    }

    /// Exhaustive 3^n check used as the reference below.
    fn three_colorable_by_enumeration(g: &Graph) -> bool {
        let n = g.n() as u32;
        (0..3u32.pow(n)).any(|mut code| {
            let mut colors = Vec::with_capacity(g.n());
            for _ in 0..n {
                colors.push(code % 3);
                code /= 3;
            }
            g.edges().all(|(u, v)| colors[u] != colors[v])
        })
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(g in arb_graph(9)) {
            let fast = chi_at_most_3(&g, g.vertices()).is_some();
            prop_assert_eq!(fast, three_colorable_by_enumeration(&g));
            let bip = is_bipartite(&g, g.vertices());
            let two = g.edges().count() == 0 || {
                let n = g.n() as u32;
                (0..2u32.pow(n)).any(|c| g.edges().all(|(u, v)| (c >> u) & 1 != (c >> v) & 1))
            };
            prop_assert_eq!(bip, two);
        }
    }
}
