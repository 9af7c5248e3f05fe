//! Coupled super-frames against block frames at the same load, with the
//! loss rate per user type along the chain.

use csa::build_topology;
use csa::sim::{run_trials, Arrivals, Decoder, Scenario};

pub fn run_example() -> csa::Result<()> {
    let (m, g, trials, seed) = (200, 0.86, 30, 3);
    let block = run_trials(&Scenario::Block { m, d: 3 }, g, trials, seed, Decoder::Peeling, Arrivals::Poisson)?;
    let coupled = Scenario::Coupled {
        m,
        topo: build_topology(20, 3)?,
    };
    let report = run_trials(&coupled, g, trials, seed, Decoder::Peeling, Arrivals::Poisson)?;
    println!("G = {g}: block PLR {:.4} +- {:.4}", block.plr, block.ci95);
    println!("G = {g}: coupled PLR {:.4} +- {:.4}", report.plr, report.ci95);
    for (i, p) in report.per_position_plr.iter().flatten().enumerate() {
        if let Some(p) = p {
            println!("  type {:>2}: {:.4} {}", i + 1, p, "*".repeat((p * 100.0).round() as usize));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
