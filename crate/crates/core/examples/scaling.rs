//! Wall-clock scaling of the chromatic-number DP on G(n, 1/2).

use std::time::Instant;
fn main() {
    for n in [16usize, 18, 20, 22] {
        let g = chromis_core::generate::gnp(n, 0.5, 2024).unwrap();
        let t = Instant::now();
        let init = chromis_core::chromatic::initial_table(&g, 26).unwrap();
        let ti = t.elapsed();
        drop(init);
        let t = Instant::now();
        let (chi, table) = chromis_core::chromatic_number(&g).unwrap();
        println!(
            "n={n} chi={chi} init={ti:?} total={:?} stats={:?}",
            t.elapsed(),
            table.enum_stats()
        );
    }
}
