use chromis_core::chromatic::{chromatic_number_observed, initial_table, DEFAULT_DP_CAP};
use chromis_core::generate::{gnp, named, triangles_k4s};
use chromis_core::mis::small_mis_filtered_with_stats;
use chromis_core::oracles::{brute_force_all_mis, brute_force_chromatic};
use chromis_core::{
    chromatic_number, extract_coloring, is_proper_coloring, mis_bound, small_mis,
    small_mis_filtered, Graph, VertexSet,
};
use proptest::prelude::*;

fn oracle_small_mis(g: &Graph, s: VertexSet, k: usize) -> Vec<VertexSet> {
    brute_force_all_mis(g, s)
        .unwrap()
        .into_iter()
        .filter(|i| i.len() <= k)
        .collect()
}

fn arb_gnp(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gnp(n, p, seed).unwrap())
}

#[test]
fn mis_matches_oracle_on_every_subset_of_small_graphs() {
    for seed in 0..6 {
        let g = gnp(7, 0.45, seed).unwrap();
        for bits in 0..1u64 << g.n() {
            let s = VertexSet::from_bits(bits);
            for k in 0..=s.len() {
                assert_eq!(
                    small_mis_filtered(&g, s, k),
                    oracle_small_mis(&g, s, k),
                    "{g:?} s={s:?} k={k}"
                );
            }
        }
    }
}

#[test]
fn tightness_family_counts_and_recursion() {
    for a in 0..=5usize {
        for b in 0..=5 - a {
            let g = triangles_k4s(a, b).unwrap();
            let k = a + b;
            let (sets, stats) = small_mis_filtered_with_stats(&g, g.vertices(), k);
            let exact = 3u64.pow(a as u32) * 4u64.pow(b as u32);
            assert_eq!(sets.len() as u64, exact);
            assert_eq!(
                mis_bound(g.n() as u32, k as u32).to_string(),
                exact.to_string()
            );
            assert!(stats.recursive_calls <= 10 * exact, "a={a} b={b} {stats:?}");
        }
    }
}

#[test]
fn dp_values_bound_chromatic_number_throughout() {
    for seed in 0..12 {
        let n = 4 + (seed as usize % 5);
        let g = gnp(n, 0.6, 100 + seed).unwrap();
        let sub_chi: Vec<usize> = (0..1u64 << n)
            .map(|b| brute_force_chromatic(&g.induced(VertexSet::from_bits(b))))
            .collect();

        let init = initial_table(&g, DEFAULT_DP_CAP).unwrap();
        for (idx, &x) in init.entries().iter().enumerate() {
            if sub_chi[idx] <= 3 {
                assert_eq!(x as usize, sub_chi[idx]);
            } else {
                assert_eq!(x, init.inf());
            }
        }

        let (chi, table) = chromatic_number_observed(&g, DEFAULT_DP_CAP, |s, x| {
            assert!(x as usize >= sub_chi[s.index()], "update below χ at {s:?}");
        })
        .unwrap();
        assert_eq!(chi, sub_chi[g.vertices().index()]);
        for (idx, &x) in table.entries().iter().enumerate() {
            if x != table.inf() {
                assert!(x as usize >= sub_chi[idx]);
            }
        }
    }
}

#[test]
fn named_fixtures() {
    for (name, chi) in [("petersen", 3), ("groetzsch", 4)] {
        let g = named(name).unwrap();
        assert_eq!(brute_force_chromatic(&g), chi);
        let (got, table) = chromatic_number(&g).unwrap();
        assert_eq!(got, chi);
        let coloring = extract_coloring(&g, &table).unwrap();
        assert!(is_proper_coloring(&g, &coloring));
        assert_eq!(coloring.num_colors, chi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mis_completeness(g in arb_gnp(12), k in 0usize..=12) {
        let k = k.min(g.n());
        prop_assert_eq!(small_mis_filtered(&g, g.vertices(), k), oracle_small_mis(&g, g.vertices(), k));
    }

    #[test]
    fn mis_soundness_and_counting_bound(g in arb_gnp(14), k in 0usize..=14) {
        let all = g.vertices();
        small_mis(&g, all, k, |i| {
            assert!(g.is_independent(i) && i.len() <= k && i.is_subset(all));
        });
        let count = small_mis_filtered(&g, all, k).len() as u64;
        prop_assert!(mis_bound(g.n() as u32, k as u32).admits(count));
    }

    #[test]
    fn dp_matches_oracle_and_colors_properly(g in arb_gnp(10)) {
        let (chi, table) = chromatic_number(&g).unwrap();
        prop_assert_eq!(chi, brute_force_chromatic(&g));
        let coloring = extract_coloring(&g, &table).unwrap();
        prop_assert!(is_proper_coloring(&g, &coloring));
        prop_assert_eq!(coloring.num_colors, chi);
    }
}
