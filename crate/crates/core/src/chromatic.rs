//! Chromatic number by dynamic programming over all `2^n` vertex subsets.
//!
//! `X[S]` starts at `χ(S)` for every `S` with `χ(S) <= 3` and at INF
//! elsewhere. Subsets are then visited in increasing integer order, which
//! puts every proper subset of `S` before `S`. From each `S` with
//! `3 <= X[S] < INF` the table is extended by every small maximal independent
//! set `I` of the complement, with `|I| <= floor(|S| / X[S])`:
//!
//! ```text
//! X[S ∪ I] = min(X[S ∪ I], X[S] + 1)
//! ```
//!
//! `X[S] >= χ(S)` holds throughout, and it is exact on every maximal
//! `k`-chromatic subset by the time that subset is visited, in particular on
//! `V(G)` itself. An optimal coloring is then recovered from the table alone
//! by peeling off one color class at a time.

use crate::coloring::Coloring;
use crate::error::DpError;
use crate::graph::Graph;
use crate::mis::{small_mis, EnumStats};
use crate::small_chi::chi_at_most_3;
use crate::vertex_set::VertexSet;

/// Default DP cap: a 64 MiB table at one byte per subset.
pub const DEFAULT_DP_CAP: usize = 26;

/// Largest cap accepted with an explicit override (256 MiB).
pub const MAX_DP_CAP: usize = 28;

/// The `X` array: one byte per vertex subset, `n + 1` meaning INF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable {
    n: usize,
    entries: Vec<u8>,
    stats: EnumStats,
}

impl DpTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sentinel for "no coloring recorded".
    pub fn inf(&self) -> u8 {
        (self.n + 1) as u8
    }

    #[inline]
    pub fn get(&self, s: VertexSet) -> u8 {
        self.entries[s.index()]
    }

    pub fn is_inf(&self, s: VertexSet) -> bool {
        self.get(s) == self.inf()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Bytes held by the table.
    pub fn size_bytes(&self) -> usize {
        self.entries.len() * std::mem::size_of::<u8>()
    }

    /// Enumerator counters summed over the whole run.
    pub fn enum_stats(&self) -> EnumStats {
        self.stats
    }

    /// Value at the full vertex set.
    pub fn chromatic_number(&self) -> usize {
        self.entries[VertexSet::full(self.n).index()] as usize
    }
}

/// `χ(g)` and the completed table, with the default cap.
pub fn chromatic_number(g: &Graph) -> Result<(usize, DpTable), DpError> {
    chromatic_number_capped(g, DEFAULT_DP_CAP)
}

/// As [`chromatic_number`], rejecting graphs with more than `cap` vertices
/// (itself clamped to [`MAX_DP_CAP`]) before allocating.
pub fn chromatic_number_capped(g: &Graph, cap: usize) -> Result<(usize, DpTable), DpError> {
    chromatic_number_observed(g, cap, |_, _| {})
}

/// As [`chromatic_number_capped`], reporting every table decrease
/// `(S ∪ I, new value)` made by the relaxation phase.
pub fn chromatic_number_observed<F>(
    g: &Graph,
    cap: usize,
    mut on_update: F,
) -> Result<(usize, DpTable), DpError>
where
    F: FnMut(VertexSet, u8),
{
    let mut table = initial_table(g, cap)?;
    let n = g.n();
    let inf = table.inf();
    let all = g.vertices();

    for idx in 0..table.entries.len() {
        let x = table.entries[idx];
        if x < 3 || x == inf {
            continue;
        }
        let s = VertexSet::from_bits(idx as u64);
        let budget = s.len() / x as usize;
        let next = x + 1;
        let entries = &mut table.entries;
        let stats = small_mis(g, all - s, budget, |i| {
            let t = (s | i).index();
            if next < entries[t] {
                entries[t] = next;
                on_update(VertexSet::from_bits(t as u64), next);
            }
        });
        table.stats += stats;
    }

    debug_assert!(n == 0 || table.chromatic_number() <= n);
    Ok((table.chromatic_number(), table))
}

/// Table after the initialization pass only: `χ(S)` where it is at most 3,
/// INF elsewhere.
pub fn initial_table(g: &Graph, cap: usize) -> Result<DpTable, DpError> {
    let n = g.n();
    let cap = cap.min(MAX_DP_CAP);
    if n > cap {
        return Err(DpError::TooLarge { n, cap });
    }
    let inf = (n + 1) as u8;
    let entries = (0..1u64 << n)
        .map(|bits| chi_at_most_3(g, VertexSet::from_bits(bits)).unwrap_or(inf))
        .collect();
    Ok(DpTable {
        n,
        entries,
        stats: EnumStats::default(),
    })
}

/// Recovers an optimal coloring from a completed table.
///
/// Starting from `S = V(G)`, scans `T` downward from `2^n - 1` and accepts
/// the first `T ⊂ S` with `X[S \ T] = 1` and `X[T] = X[S] - 1`, giving
/// `S \ T` a fresh color. Because every accepted `T` is smaller than the
/// current `S`, one downward pass reaches the empty set.
pub fn extract_coloring(g: &Graph, table: &DpTable) -> Result<Coloring, DpError> {
    if table.n != g.n() {
        return Err(DpError::TableMismatch {
            table_n: table.n,
            graph_n: g.n(),
        });
    }
    let n = g.n();
    let num_colors = table.chromatic_number();
    let mut colors = vec![usize::MAX; n];
    let mut s = g.vertices();
    let mut next_color = 0;

    for t in (0..=s.bits()).rev() {
        if s.is_empty() {
            break;
        }
        let candidate = VertexSet::from_bits(t);
        if found_witness(table, s, candidate) {
            for v in s - candidate {
                colors[v] = next_color;
            }
            next_color += 1;
            s = candidate;
        }
    }

    if !s.is_empty() || next_color != num_colors {
        return Err(DpError::MissingWitness(s.bits()));
    }
    Ok(Coloring { colors, num_colors })
}

fn found_witness(table: &DpTable, s: VertexSet, t: VertexSet) -> bool {
    let xs = table.get(s);
    t.is_proper_subset(s) && table.get(s - t) == 1 && xs != table.inf() && table.get(t) + 1 == xs
}

/// `χ(g)` with an optimal coloring, using the default cap.
pub fn solve(g: &Graph) -> Result<(usize, Coloring), DpError> {
    solve_capped(g, DEFAULT_DP_CAP)
}

pub fn solve_capped(g: &Graph, cap: usize) -> Result<(usize, Coloring), DpError> {
    let (chi, table) = chromatic_number_capped(g, cap)?;
    let coloring = extract_coloring(g, &table)?;
    Ok((chi, coloring))
}
