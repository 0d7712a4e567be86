//! Property suites run by `chromis selftest`.
//!
//! Random instances are `G(n, p)` graphs whose parameters are drawn from a
//! ChaCha8 stream seeded by `--seed`. On the first failure in a suite the
//! offending graph is shrunk (vertex deletions, then edge deletions, while
//! the failure persists) and printed in DIMACS form.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chromis_core::oracles::{brute_force_all_mis, brute_force_chromatic, moon_moser_check};
use chromis_core::{
    generate, is_proper_coloring, mis_bound, small_mis_filtered, solve, to_dimacs, Coloring,
    DpError, Graph, VertexSet,
};

pub const DEFAULT_SEED: u64 = 20_020_602;
pub const DEFAULT_TRIALS: usize = 200;

const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

pub type MisFn = fn(&Graph, VertexSet, usize) -> Vec<VertexSet>;
pub type SolveFn = fn(&Graph) -> Result<(usize, Coloring), DpError>;

/// The implementations under test. Swappable so the suites themselves can
/// be checked against deliberately broken engines.
#[derive(Clone, Copy)]
pub struct Engines {
    pub small_mis_filtered: MisFn,
    pub solve: SolveFn,
}

impl Default for Engines {
    fn default() -> Self {
        Engines {
            small_mis_filtered,
            solve,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteSummary {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<Counterexample>,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub message: String,
    pub graph: Graph,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteSummary>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures == 0)
    }

    pub fn total_cases(&self) -> usize {
        self.suites.iter().map(|s| s.cases).sum()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "selftest seed={} trials={}", self.seed, self.trials)?;
        for s in &self.suites {
            let status = if s.failures == 0 { "ok" } else { "FAIL" };
            writeln!(
                f,
                "  {:<16} {:>5} cases {:>4} failures  {status}",
                s.name, s.cases, s.failures
            )?;
        }
        for s in &self.suites {
            if let Some(cx) = &s.first_failure {
                writeln!(f, "counterexample for {}: {}", s.name, cx.message)?;
                write!(f, "{}", to_dimacs(&cx.graph))?;
            }
        }
        writeln!(
            f,
            "{}: {} cases",
            if self.passed() { "PASS" } else { "FAIL" },
            self.total_cases()
        )
    }
}

/// Process exit code for an outcome: 0 when every suite passed, 4 otherwise.
pub fn exit_code(outcome: &Outcome) -> i32 {
    if outcome.passed() {
        crate::EXIT_OK
    } else {
        crate::EXIT_PROPERTY
    }
}

type Check = dyn Fn(&Engines, &Graph) -> Result<(), String>;

/// Runs every suite on `trials` random instances (the tightness suite uses
/// up to `trials` members of the triangle/K4 family instead).
pub fn run(seed: u64, trials: usize, engines: &Engines) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_graphs = |max_n: usize| -> Vec<Graph> {
        (0..trials)
            .map(|t| {
                let n = rng.gen_range(1..=max_n);
                let p = EDGE_PROBABILITIES[t % EDGE_PROBABILITIES.len()];
                generate::gnp(n, p, rng.gen()).expect("n within cap")
            })
            .collect()
    };
    let mis_graphs = random_graphs(12);
    let chi_graphs = random_graphs(10);
    let mm_graphs = random_graphs(15);

    let tight: Vec<(usize, usize)> = (0..=5)
        .flat_map(|a| (0..=5 - a).map(move |b| (a, b)))
        .take(trials)
        .collect();

    let mut suites = vec![
        run_suite("mis-oracle", &mis_graphs, engines, &check_mis_oracle),
        run_suite("mis-bound", &mis_graphs, engines, &check_mis_bound),
        run_suite("chromatic-oracle", &chi_graphs, engines, &check_chromatic),
        run_suite("coloring", &chi_graphs, engines, &check_coloring),
        run_suite(
            "moon-moser",
            &mm_graphs,
            engines,
            &|_, g| match moon_moser_check(g) {
                Ok(true) => Ok(()),
                Ok(false) => Err("more than 3^(n/3) maximal independent sets".into()),
                Err(e) => Err(e.to_string()),
            },
        ),
    ];

    // Tightness cases are fixed constructions; shrinking them is meaningless.
    let mut summary = SuiteSummary {
        name: "tightness",
        cases: 0,
        failures: 0,
        first_failure: None,
    };
    for (a, b) in tight {
        summary.cases += 1;
        let g = generate::triangles_k4s(a, b).expect("within cap");
        let k = a + b;
        let expected = 3u64.pow(a as u32) * 4u64.pow(b as u32);
        let got = (engines.small_mis_filtered)(&g, g.vertices(), k).len() as u64;
        let bound = mis_bound(g.n() as u32, k as u32);
        if got != expected || bound.to_string() != expected.to_string() {
            summary.failures += 1;
            summary.first_failure.get_or_insert(Counterexample {
                message: format!("a={a} b={b}: count {got}, bound {bound}, expected {expected}"),
                graph: g,
            });
        }
    }
    suites.push(summary);

    Outcome {
        seed,
        trials,
        suites,
    }
}

fn run_suite(
    name: &'static str,
    graphs: &[Graph],
    engines: &Engines,
    check: &Check,
) -> SuiteSummary {
    let mut summary = SuiteSummary {
        name,
        cases: graphs.len(),
        failures: 0,
        first_failure: None,
    };
    for g in graphs {
        if let Err(message) = check(engines, g) {
            summary.failures += 1;
            if summary.first_failure.is_none() {
                let graph = shrink(g, |h| check(engines, h).is_err());
                let message = check(engines, &graph).err().unwrap_or(message);
                summary.first_failure = Some(Counterexample { message, graph });
            }
        }
    }
    summary
}

fn check_mis_oracle(e: &Engines, g: &Graph) -> Result<(), String> {
    let all = brute_force_all_mis(g, g.vertices()).map_err(|e| e.to_string())?;
    for k in 0..=g.n() {
        let expected: Vec<VertexSet> = all.iter().copied().filter(|s| s.len() <= k).collect();
        let mut got = (e.small_mis_filtered)(g, g.vertices(), k);
        got.sort();
        got.dedup();
        if got != expected {
            return Err(format!(
                "k={k}: enumerator found {} sets, oracle {}",
                got.len(),
                expected.len()
            ));
        }
    }
    Ok(())
}

fn check_mis_bound(e: &Engines, g: &Graph) -> Result<(), String> {
    for k in 0..=g.n() {
        let count = (e.small_mis_filtered)(g, g.vertices(), k).len() as u64;
        let bound = mis_bound(g.n() as u32, k as u32);
        if !bound.admits(count) {
            return Err(format!("k={k}: {count} sets exceeds bound {bound}"));
        }
    }
    Ok(())
}

fn check_chromatic(e: &Engines, g: &Graph) -> Result<(), String> {
    let (chi, _) = (e.solve)(g).map_err(|e| e.to_string())?;
    let expected = brute_force_chromatic(g);
    if chi != expected {
        return Err(format!("chromatic number {chi}, oracle {expected}"));
    }
    Ok(())
}

fn check_coloring(e: &Engines, g: &Graph) -> Result<(), String> {
    let (chi, coloring) = (e.solve)(g).map_err(|e| e.to_string())?;
    if !is_proper_coloring(g, &coloring) {
        return Err("coloring is not proper".into());
    }
    if coloring.num_colors != chi {
        return Err(format!(
            "coloring uses {} colors, chi is {chi}",
            coloring.num_colors
        ));
    }
    Ok(())
}

/// Greedily deletes vertices, then edges, while `fails` keeps holding.
pub fn shrink(g: &Graph, fails: impl Fn(&Graph) -> bool) -> Graph {
    let mut g = g.clone();
    'outer: loop {
        for v in 0..g.n() {
            let h = g.induced(g.vertices().without(v));
            if fails(&h) {
                g = h;
                continue 'outer;
            }
        }
        let edges: Vec<_> = g.edges().collect();
        for (u, v) in edges {
            let h = g.without_edge(u, v);
            if fails(&h) {
                g = h;
                continue 'outer;
            }
        }
        return g;
    }
}
