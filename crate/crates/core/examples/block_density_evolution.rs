//! Block CSA density evolution: a converging and a stuck trajectory, then the
//! threshold by bisection and by the fixed-point condition.

use csa::de_block::{block_threshold_cross_checked, de_block_run, BlockDeConfig};
use csa::SchemeParams;

pub fn run_example() -> csa::Result<()> {
    let params = SchemeParams::new(3, 100.0)?;
    let cfg = BlockDeConfig::default().with_trace();
    for g in [0.80, 0.83] {
        let r = de_block_run(&params, params.load(g)?, &cfg);
        println!(
            "G = {g}: converged = {}, {} iterations, final p = {:.3e}",
            r.converged, r.iterations, r.final_p
        );
        if let Some(trace) = &r.trace {
            for (l, (q, p)) in trace.iter().enumerate().step_by((trace.len() / 5).max(1)) {
                println!("  l = {:>4}: q = {q:.6}, p = {p:.6}", l + 1);
            }
        }
    }
    for d in 2..=6 {
        let (bis, grid) = block_threshold_cross_checked(d, &BlockDeConfig::default(), 1e-5)?;
        println!(
            "d = {d}: G_IT_block = {:.5} (bisection, {} DE runs), {grid:.5} (grid)",
            bis.threshold, bis.evaluations
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
