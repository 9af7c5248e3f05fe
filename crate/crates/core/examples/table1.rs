//! Full threshold table for d = 2..6 with l = 200 and alpha = 100.

use csa::report::{table1, AnalysisOptions};

pub fn run_example() -> csa::Result<()> {
    let rows = table1(6, 200, 100.0, &AnalysisOptions::default())?;
    println!(
        "{:>2} {:>9} {:>9} {:>9} {:>9} {:>7}",
        "d", "G_block", "G_conv", "G_map", "G*", "eta"
    );
    for r in rows {
        println!(
            "{:>2} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>7.4}",
            r.d, r.g_it_block, r.g_it_conv, r.g_map_block, r.g_star, r.eta
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
