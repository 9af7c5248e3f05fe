#![allow(dead_code)]

use csa::rng::rng_stream;
use csa::sim::{sample_block_frame, Arrivals, FrameGraph};
use rand::Rng;

/// Brute-force GA-MAP oracle for frames with at most 20 bursts: draws a
/// transmitted vector `u`, forms `y = u Q^T`, enumerates every `u'` with
/// `u' Q^T = y` and reports the bursts whose value is the same in all of
/// them.
pub fn exhaustive_recoverable(frame: &FrameGraph, u: u32) -> Vec<usize> {
    let n = frame.n_bursts();
    assert!(n <= 20);
    let rows: Vec<u32> = frame
        .slot_adjacency()
        .iter()
        .map(|bursts| bursts.iter().fold(0u32, |acc, &b| acc | 1 << b))
        .collect();
    let syndrome = |v: u32| -> Vec<u32> { rows.iter().map(|&r| (r & v).count_ones() & 1).collect() };
    let y = syndrome(u);
    let mut always_one = u32::MAX;
    let mut always_zero = u32::MAX;
    for v in 0..(1u32 << n) {
        if syndrome(v) == y {
            always_one &= v;
            always_zero &= !v;
        }
    }
    (0..n).filter(|&j| (always_one | always_zero) >> j & 1 == 1).collect()
}

/// Random frame with `M <= max_m` slots, `N_a <= max_n` bursts and
/// `d in {2,3,4}`, drawn from stream `t` of `seed`.
pub fn random_small_frame(seed: u64, t: u64, max_m: usize, max_n: usize) -> (FrameGraph, u32) {
    let mut rng = rng_stream(seed, t);
    let d = rng.gen_range(2..=4);
    let m = rng.gen_range(d..=max_m);
    let n = rng.gen_range(0..=max_n);
    let frame = csa::sim::place_block_users(m, n, d, &mut rng).unwrap();
    let u = rng.gen::<u32>();
    (frame, u)
}

pub fn poisson_frame(seed: u64, m: usize, g: f64, d: usize) -> FrameGraph {
    let mut rng = rng_stream(seed, 0);
    sample_block_frame(m, g, d, Arrivals::Poisson, &mut rng).unwrap()
}
