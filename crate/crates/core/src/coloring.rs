use crate::graph::Graph;

/// A vertex coloring with colors `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// Color classes, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            if c < self.num_colors {
                classes[c].push(v);
            }
        }
        classes
    }
}

/// True iff `c` assigns every vertex a color in range, no edge is
/// monochromatic, and every color `0..num_colors` is used.
pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.colors.len() != g.n() || c.colors.iter().any(|&x| x >= c.num_colors) {
        return false;
    }
    if g.edges().any(|(u, v)| c.colors[u] == c.colors[v]) {
        return false;
    }
    let mut used = vec![false; c.num_colors];
    for &x in &c.colors {
        used[x] = true;
    }
    used.into_iter().all(|u| u)
}
