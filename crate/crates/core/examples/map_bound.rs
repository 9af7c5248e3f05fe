//! The iterative extrinsic erasure curve and the area-theorem bound on the
//! genie-aided MAP threshold.

use csa::map_bound::{extrinsic_config, extrinsic_it_threshold};
use csa::{extrinsic_curve, map_epsilon_bound, SchemeParams};

pub fn run_example() -> csa::Result<()> {
    let params = SchemeParams::new(3, 100.0)?;
    let cfg = extrinsic_config();
    let (it_lo, _) = extrinsic_it_threshold(&params, &cfg)?;
    let eps: Vec<f64> = [0.005, 0.008, 0.0082, 0.0085, 0.009, 0.0095, 0.01, 0.02, 0.05, 0.2, 1.0].to_vec();
    let curve = extrinsic_curve(&params, &eps, &cfg)?;
    for (e, p) in &curve.grid {
        println!("epsilon = {e:<7} p_e = {p:.6}");
    }
    let bound = map_epsilon_bound(&params, &cfg, 1e-7)?;
    println!("iterative threshold: epsilon = {it_lo:.6} (G = {:.4})", params.alpha() * it_lo);
    println!("MAP upper bound:     epsilon = {bound:.6} (G = {:.4})", params.alpha() * bound);
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
