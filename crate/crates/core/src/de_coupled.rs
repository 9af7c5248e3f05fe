//! Density evolution over the spatially-coupled super-frame.
//!
//! One iteration, with every read taken from the previous iterate:
//!
//! ```text
//! q_{i->j} = prod_{u in Nb(i) \ j} p_u
//! q_j      = (1/delta_j) sum_{v in Ns(j)} q_{v->j}
//! p_j      = 1 - exp(-G delta_j q_j)
//! ```
//!
//! The boundary positions carry a smaller physical load `G * delta_j`, so they
//! clear first and the resulting decoding wave travels inward.

use serde::Serialize;

use crate::de_block::{BlockDeConfig, G_SEARCH_MAX};
use crate::error::{Error, Result};
use crate::params::{bisect_predicate, DeResult, ThresholdResult};
use crate::topology::CoupledTopology;

/// Messages of one coupled DE iteration. Vectors are 0-indexed: `p[k]` is
/// position `k + 1`, `q_msgs[i][k]` is the message from user type `i + 1` to
/// its `k`-th neighbor position.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoupledDeState {
    pub p: Vec<f64>,
    pub q_avg: Vec<f64>,
    pub q_msgs: Vec<Vec<f64>>,
}

impl CoupledDeState {
    /// Every SN-to-BN message set to `p0`; BN messages are derived on the
    /// first step.
    pub fn uniform(topo: &CoupledTopology, p0: f64) -> Self {
        Self {
            p: vec![p0; topo.m_f()],
            q_avg: vec![1.0; topo.m_f()],
            q_msgs: (1..=topo.l()).map(|i| vec![1.0; topo.bn_neighbors(i).len()]).collect(),
        }
    }

    pub fn max_p(&self) -> f64 {
        self.p.iter().copied().fold(0.0, f64::max)
    }

    fn advance(&mut self, topo: &CoupledTopology, g: f64) {
        for (i, msgs) in self.q_msgs.iter_mut().enumerate() {
            let nbrs = topo.bn_neighbors(i + 1);
            for (k, slot) in msgs.iter_mut().enumerate() {
                *slot = nbrs
                    .iter()
                    .enumerate()
                    .filter(|&(kk, _)| kk != k)
                    .map(|(_, &u)| self.p[u - 1])
                    .product();
            }
        }
        self.q_avg.iter_mut().for_each(|q| *q = 0.0);
        for (i, msgs) in self.q_msgs.iter().enumerate() {
            for (&j, &q) in topo.bn_neighbors(i + 1).iter().zip(msgs) {
                self.q_avg[j - 1] += q;
            }
        }
        for (k, (q, p)) in self.q_avg.iter_mut().zip(self.p.iter_mut()).enumerate() {
            let delta = topo.deltas()[k] as f64;
            *q /= delta;
            *p = -(-g * delta * *q).exp_m1();
        }
    }
}

/// One parallel-schedule iteration.
pub fn de_coupled_step(state: &CoupledDeState, topo: &CoupledTopology, g: f64) -> CoupledDeState {
    let mut next = state.clone();
    next.advance(topo, g);
    next
}

/// Runs coupled DE from `p = 1` everywhere. Convergence is judged on the
/// worst position.
pub fn de_coupled_run(topo: &CoupledTopology, g: f64, cfg: &BlockDeConfig) -> DeResult {
    run_from(CoupledDeState::uniform(topo, 1.0), topo, g, cfg).0
}

pub(crate) fn run_from(
    mut state: CoupledDeState,
    topo: &CoupledTopology,
    g: f64,
    cfg: &BlockDeConfig,
) -> (DeResult, CoupledDeState) {
    let mut trace = cfg.record_trace.then(Vec::new);
    let mut prev = state.p.clone();
    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_iters {
        state.advance(topo, g);
        iterations += 1;
        let max_p = state.max_p();
        if let Some(t) = trace.as_mut() {
            t.push((state.q_avg.iter().copied().fold(0.0, f64::max), max_p));
        }
        if max_p <= cfg.target_p {
            converged = true;
            break;
        }
        let progress = prev
            .iter()
            .zip(&state.p)
            .map(|(a, b)| a - b)
            .fold(f64::NEG_INFINITY, f64::max);
        if progress < cfg.stall_eps {
            break;
        }
        prev.copy_from_slice(&state.p);
    }
    let result = DeResult {
        converged,
        final_p: state.max_p(),
        iterations,
        trace,
    };
    (result, state)
}

/// Coupled SIC threshold `G^IT_conv` for a terminated chain of length `l`.
pub fn coupled_threshold(d: usize, l: usize, cfg: &BlockDeConfig, bisect_tol: f64) -> Result<ThresholdResult> {
    if d < 2 {
        return Err(Error::param("d", "coupled threshold requires d >= 2"));
    }
    cfg.validate()?;
    let topo = crate::topology::build_topology(l, d)?;
    let cfg = BlockDeConfig {
        record_trace: false,
        ..*cfg
    };
    bisect_predicate(0.0, G_SEARCH_MAX, bisect_tol, |g| de_coupled_run(&topo, g, &cfg).converged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::de_block::block_step;
    use crate::topology::build_topology;

    #[test]
    fn zero_state_is_absorbing() {
        let topo = build_topology(10, 3).unwrap();
        let s = de_coupled_step(&CoupledDeState::uniform(&topo, 0.0), &topo, 0.9);
        assert!(s.p.iter().all(|&p| p == 0.0));
        assert!(s.q_avg.iter().all(|&q| q == 0.0));
        assert!(s.q_msgs.iter().flatten().all(|&q| q == 0.0));
    }

    #[test]
    fn first_step_from_ones() {
        let topo = build_topology(200, 3).unwrap();
        let s = de_coupled_step(&CoupledDeState::uniform(&topo, 1.0), &topo, 0.9);
        assert!(s.q_msgs.iter().flatten().all(|&q| q == 1.0));
        // interior: 1 - exp(-2.7); boundary: 1 - exp(-0.9)
        assert!((s.p[100] - 0.932_794_487_260_250_3).abs() < 1e-12);
        assert!((s.p[0] - 0.593_430_340_259_400_9).abs() < 1e-12);
        assert!((s.p[1] - (1.0 - (-1.8_f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn run_examples() {
        let cfg = BlockDeConfig::default();
        let t3 = build_topology(200, 3).unwrap();
        assert!(de_coupled_run(&t3, 0.90, &cfg).converged);
        assert!(!de_coupled_run(&t3, 0.93, &cfg).converged);
        let t2 = build_topology(200, 2).unwrap();
        assert!(de_coupled_run(&t2, 0.4, &cfg).converged);
    }

    #[test]
    fn monotone_and_symmetric() {
        let topo = build_topology(40, 4).unwrap();
        let mut s = CoupledDeState::uniform(&topo, 1.0);
        for _ in 0..500 {
            let next = de_coupled_step(&s, &topo, 0.95);
            for (a, b) in s.p.iter().zip(&next.p) {
                assert!(b <= a);
                assert!((0.0..=1.0).contains(b));
            }
            let n = next.p.len();
            for k in 0..n {
                assert!((next.p[k] - next.p[n - 1 - k]).abs() <= 1e-15);
            }
            s = next;
        }
    }

    #[test]
    fn slotted_aloha_chain_never_clears() {
        let topo = build_topology(1, 1).unwrap();
        let cfg = BlockDeConfig::default();
        assert!(de_coupled_run(&topo, 0.0, &cfg).converged);
        for &g in &[1e-3, 0.1, 0.5] {
            assert!(!de_coupled_run(&topo, g, &cfg).converged);
        }
    }

    #[test]
    fn circulant_reduces_to_block() {
        for d in 2..=6u32 {
            let topo = CoupledTopology::circulant(12, d as usize).unwrap();
            let g = 0.75;
            let mut s = CoupledDeState::uniform(&topo, 1.0);
            let mut p = 1.0;
            for _ in 0..200 {
                s = de_coupled_step(&s, &topo, g);
                let (q, next) = block_step(p, g, d);
                p = next;
                for k in 0..topo.m_f() {
                    assert!((s.p[k] - p).abs() <= 1e-14);
                    assert!((s.q_avg[k] - q).abs() <= 1e-14);
                }
            }
        }
    }

    #[test]
    fn coupled_threshold_d3() {
        let r = coupled_threshold(3, 200, &BlockDeConfig::default(), 1e-4).unwrap();
        assert!((r.threshold - 0.9179).abs() < 1e-3, "{}", r.threshold);
        assert!(coupled_threshold(1, 200, &BlockDeConfig::default(), 1e-4).is_err());
    }
}
