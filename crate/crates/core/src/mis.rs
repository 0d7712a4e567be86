//! Listing maximal independent sets of bounded size.
//!
//! [`small_mis`] is a branching enumerator whose recursion tree has
//! `O(3^(4k-n) 4^(n-3k))` nodes on an `n`-vertex input with size budget `k`.
//! At each node it inspects the induced subgraph on the remaining candidates
//! `s` and takes the first applicable rule:
//!
//! 1. a vertex of degree >= 3: exclude it, or include it;
//! 2. a degree-1 vertex `v` with neighbor `u`: include `u`, or include `v`;
//! 3. a degree-0 vertex: include it;
//! 4. everything has degree 2 (a union of cycles). If some cycle is longer
//!    than a triangle, or `3k >= |s|`, take consecutive `u-v-w` on a cycle
//!    and include `u`, or include `v`, or include `w` with `u` excluded.
//!    Otherwise only triangles remain and every maximal set is too big.
//!
//! The enumerator can emit independent sets that are not maximal (excluding
//! a high-degree vertex never forces a neighbor in later). Consumers that
//! need exactly the maximal sets use [`small_mis_filtered`].

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Counters from one enumeration run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub recursive_calls: u64,
    pub emitted_sets: u64,
}

impl std::ops::AddAssign for EnumStats {
    fn add_assign(&mut self, rhs: EnumStats) {
        self.recursive_calls += rhs.recursive_calls;
        self.emitted_sets += rhs.emitted_sets;
    }
}

struct Enumerator<'g, F> {
    g: &'g Graph,
    sink: F,
    stats: EnumStats,
}

impl<F: FnMut(VertexSet)> Enumerator<'_, F> {
    fn emit(&mut self, set: VertexSet) {
        self.stats.emitted_sets += 1;
        (self.sink)(set);
    }

    fn recurse(&mut self, s: VertexSet, chosen: VertexSet, k: usize) {
        self.stats.recursive_calls += 1;
        if s.is_empty() || k == 0 {
            self.emit(chosen);
            return;
        }
        let g = self.g;

        // highest degree wins, ties to the lowest index
        let mut max_deg: Option<(usize, usize)> = None;
        let mut deg1 = None;
        let mut deg0 = None;
        for v in s {
            let d = g.degree_in(v, s);
            if max_deg.is_none_or(|(best, _)| d > best) {
                max_deg = Some((d, v));
            }
            match d {
                0 if deg0.is_none() => deg0 = Some(v),
                1 if deg1.is_none() => deg1 = Some(v),
                _ => {}
            }
        }

        let (d, v) = max_deg.expect("s is nonempty");
        if d >= 3 {
            self.recurse(s.without(v), chosen, k);
            self.recurse(s - g.closed_nbhd(v), chosen.with(v), k - 1);
        } else if let Some(v) = deg1 {
            let u = (g.neighbors(v) & s)
                .first()
                .expect("degree-1 vertex has a neighbor");
            self.recurse(s - g.closed_nbhd(u), chosen.with(u), k - 1);
            self.recurse(s - g.closed_nbhd(v), chosen.with(v), k - 1);
        } else if let Some(v) = deg0 {
            self.recurse(s.without(v), chosen.with(v), k - 1);
        } else if let Some((u, v, w)) = pick_chain(g, s, k) {
            self.recurse(s - g.closed_nbhd(u), chosen.with(u), k - 1);
            self.recurse(s - g.closed_nbhd(v), chosen.with(v), k - 1);
            self.recurse(s - g.closed_nbhd(w).with(u), chosen.with(w), k - 1);
        }
    }
}

/// In a union of cycles, picks consecutive `u-v-w` for the three-way branch.
///
/// Prefers the first cycle (by lowest member) that is not a triangle, so that
/// `u` and `w` are nonadjacent. Falls back to the first triangle only when
/// `3k >= |s|`; returns `None` when only triangles remain and the budget rules
/// out any maximal set.
fn pick_chain(g: &Graph, s: VertexSet, k: usize) -> Option<(usize, usize, usize)> {
    let mut rest = s;
    let mut first_triangle = None;
    while let Some(u) = rest.first() {
        let component = cycle_through(g, s, u);
        rest -= component;
        let nbrs = g.neighbors(u) & s;
        let v = nbrs.first().expect("degree-2 vertex");
        let w = (g.neighbors(v) & s)
            .without(u)
            .first()
            .expect("degree-2 vertex");
        if component.len() > 3 {
            return Some((u, v, w));
        }
        first_triangle.get_or_insert((u, v, w));
    }
    if 3 * k >= s.len() {
        first_triangle
    } else {
        None
    }
}

/// Vertex set of the cycle component of `s` containing `start`, assuming
/// every vertex of `s` has degree exactly 2 in `s`.
fn cycle_through(g: &Graph, s: VertexSet, start: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let next = g.closed_nbhd_of_set(frontier) & s;
        frontier = next - seen;
        seen |= next;
    }
    seen
}

/// Enumerates independent subsets of `s` of size at most `k`, passing each to
/// `sink`. Every maximal independent subset of `g[s]` with at most `k`
/// vertices is passed at least once; some non-maximal sets and some
/// duplicates may also be passed.
pub fn small_mis<F>(g: &Graph, s: VertexSet, k: usize, sink: F) -> EnumStats
where
    F: FnMut(VertexSet),
{
    debug_assert!(s.is_subset(g.vertices()));
    let mut e = Enumerator {
        g,
        sink,
        stats: EnumStats::default(),
    };
    e.recurse(s, VertexSet::EMPTY, k);
    e.stats
}

/// True iff `i` is independent and every vertex of `s \ i` has a neighbor in `i`.
pub fn is_maximal_independent(g: &Graph, s: VertexSet, i: VertexSet) -> bool {
    debug_assert!(i.is_subset(s));
    g.is_independent(i) && (s - i).iter().all(|v| g.neighbors(v).intersects(i))
}

/// Exactly the maximal independent subsets of `g[s]` of size at most `k`,
/// deduplicated and in increasing integer order.
pub fn small_mis_filtered(g: &Graph, s: VertexSet, k: usize) -> Vec<VertexSet> {
    small_mis_filtered_with_stats(g, s, k).0
}

pub fn small_mis_filtered_with_stats(
    g: &Graph,
    s: VertexSet,
    k: usize,
) -> (Vec<VertexSet>, EnumStats) {
    let mut found = BTreeSet::new();
    let stats = small_mis(g, s, k, |i| {
        if is_maximal_independent(g, s, i) {
            found.insert(i);
        }
    });
    (found.into_iter().collect(), stats)
}
