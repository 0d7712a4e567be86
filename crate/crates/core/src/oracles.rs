//! Naive reference implementations.
//!
//! Nothing here calls into the enumerator, the 3-coloring test, or the DP.
//! Adjacency is read through [`Graph::has_edge`] only.

use crate::error::OracleError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest `|s|` accepted by [`brute_force_all_mis`].
pub const MIS_SCAN_LIMIT: usize = 20;

/// Every maximal independent subset of `g[s]`, by scanning all `2^|s|`
/// subsets. Returned in increasing integer order.
pub fn brute_force_all_mis(g: &Graph, s: VertexSet) -> Result<Vec<VertexSet>, OracleError> {
    let members: Vec<usize> = s.iter().collect();
    if members.len() > MIS_SCAN_LIMIT {
        return Err(OracleError {
            size: members.len(),
            limit: MIS_SCAN_LIMIT,
        });
    }
    let mut out = Vec::new();
    for code in 0u64..1 << members.len() {
        let chosen: Vec<usize> = (0..members.len())
            .filter(|&j| code >> j & 1 == 1)
            .map(|j| members[j])
            .collect();
        let independent = chosen
            .iter()
            .enumerate()
            .all(|(a, &u)| chosen[a + 1..].iter().all(|&v| !g.has_edge(u, v)));
        if !independent {
            continue;
        }
        let maximal = members
            .iter()
            .filter(|v| !chosen.contains(v))
            .all(|&v| chosen.iter().any(|&u| g.has_edge(u, v)));
        if maximal {
            out.push(chosen.into_iter().collect::<VertexSet>());
        }
    }
    out.sort();
    Ok(out)
}

/// Chromatic number by trying `c = 0, 1, 2, ...` colors with plain
/// backtracking. Vertex 0 gets color 0 and each later vertex may open at
/// most one new color, so color permutations are not revisited.
pub fn brute_force_chromatic(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&c| {
            let mut colors = vec![usize::MAX; n];
            try_color(g, &mut colors, 0, 0, c)
        })
        .expect("n colors always suffice")
}

fn try_color(g: &Graph, colors: &mut [usize], v: usize, used: usize, limit: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    let options = limit.min(used + 1);
    for c in 0..options {
        if (0..v).any(|u| colors[u] == c && g.has_edge(u, v)) {
            continue;
        }
        colors[v] = c;
        if try_color(g, colors, v + 1, used.max(c + 1), limit) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Largest graph accepted by [`moon_moser_check`].
pub const MOON_MOSER_LIMIT: usize = 20;

/// Number of maximal independent sets of `g`, by brute force.
pub fn count_all_mis(g: &Graph) -> Result<usize, OracleError> {
    brute_force_all_mis(g, g.vertices()).map(|v| v.len())
}

/// True iff the number of maximal independent sets is at most `3^(n/3)`,
/// compared exactly as `count^3 <= 3^n`.
pub fn moon_moser_check(g: &Graph) -> Result<bool, OracleError> {
    moon_moser_compare(g).map(|ord| ord.is_le())
}

/// `count^3` compared to `3^n`.
pub fn moon_moser_compare(g: &Graph) -> Result<std::cmp::Ordering, OracleError> {
    if g.n() > MOON_MOSER_LIMIT {
        return Err(OracleError {
            size: g.n(),
            limit: MOON_MOSER_LIMIT,
        });
    }
    let count = count_all_mis(g)? as u128;
    Ok((count * count * count).cmp(&3u128.pow(g.n() as u32)))
}
