//! Largest load sustainable at rate R = 1/d, and the efficiency of a given
//! threshold against it.

use csa::{efficiency, solve_load_bound};

pub fn run_example() -> csa::Result<()> {
    println!("{:>3} {:>8} {:>10}", "d", "R", "G*");
    for d in 1..=8u32 {
        let rate = 1.0 / d as f64;
        println!("{d:>3} {rate:>8.4} {:>10.6}", solve_load_bound(rate)?);
    }
    let g_star = solve_load_bound(1.0 / 3.0)?;
    println!("eta for G_conv = 0.9179 at d = 3: {:.4}", efficiency(0.9179, g_star)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
