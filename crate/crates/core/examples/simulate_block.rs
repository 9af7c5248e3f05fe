//! Packet loss rate of block CSA versus offered traffic, under peeling and
//! under GJE.

use csa::sim::{run_trials, Arrivals, Decoder, Scenario};

pub fn run_example() -> csa::Result<()> {
    let scenario = Scenario::Block { m: 1000, d: 3 };
    println!("{:>5} {:>12} {:>12}", "G", "PLR peel", "PLR GJE");
    for g in [0.5, 0.6, 0.7, 0.75, 0.8, 0.85, 0.9] {
        let r = run_trials(&scenario, g, 50, 42, Decoder::Both, Arrivals::Poisson)?;
        println!("{g:>5.2} {:>12.3e} {:>12.3e}", r.plr, r.plr_gje.unwrap_or(f64::NAN));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
