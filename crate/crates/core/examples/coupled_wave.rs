//! Spatially-coupled density evolution: the erasure profile along the chain
//! clears from both terminated ends inward.

use csa::{build_topology, coupled_threshold, de_coupled_step, BlockDeConfig, CoupledDeState};

fn sparkline(p: &[f64]) -> String {
    const LEVELS: [char; 5] = [' ', '.', ':', '|', '#'];
    p.iter()
        .map(|&x| LEVELS[((x * 4.0).round() as usize).min(4)])
        .collect()
}

pub fn run_example() -> csa::Result<()> {
    let (l, d, g) = (60, 3, 0.90);
    let topo = build_topology(l, d)?;
    println!("delta = {:?}", topo.deltas());
    let mut state = CoupledDeState::uniform(&topo, 1.0);
    for it in 1..=1500 {
        state = de_coupled_step(&state, &topo, g);
        if it % 150 == 0 {
            println!("{it:>5} [{}] max p = {:.2e}", sparkline(&state.p), state.max_p());
        }
    }
    for l in [10, 25, 50] {
        let t = coupled_threshold(d, l, &BlockDeConfig::default(), 1e-3)?;
        let topo = build_topology(l, d)?;
        println!(
            "l = {l:>3}: G_IT_conv = {:.4}, spread over the super-frame = {:.4}",
            t.threshold,
            topo.terminated_load(t.threshold)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
