//! Random frame generation.

use rand::seq::index;
use rand::Rng;
use rand_distr::{Binomial, Distribution, Poisson};
use serde::Serialize;

use super::frame::FrameGraph;
use crate::error::{Error, Result};
use crate::topology::CoupledTopology;

/// Law of the number of users becoming active per frame (per user type in
/// the coupled scheme).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Default)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum Arrivals {
    /// `Poisson(g m)`, the large-population limit.
    #[default]
    Poisson,
    /// `Binomial(alpha m, g / alpha)`: a finite population of `alpha m` users,
    /// each active with probability `g / alpha`.
    Binomial { alpha: f64 },
}

impl Arrivals {
    pub fn draw<R: Rng + ?Sized>(&self, m: usize, g: f64, rng: &mut R) -> Result<usize> {
        if !(g >= 0.0) || !g.is_finite() {
            return Err(Error::param("g", format!("must be finite and >= 0, got {g}")));
        }
        if g == 0.0 || m == 0 {
            return Ok(0);
        }
        match *self {
            Arrivals::Poisson => {
                let dist = Poisson::new(g * m as f64).map_err(|e| Error::param("g", e.to_string()))?;
                Ok(dist.sample(rng) as usize)
            }
            Arrivals::Binomial { alpha } => {
                let eps = g / alpha;
                if !(alpha > 0.0) || eps > 1.0 {
                    return Err(Error::param(
                        "alpha",
                        format!("need alpha > 0 and g / alpha <= 1, got alpha = {alpha}"),
                    ));
                }
                let population = (alpha * m as f64).round() as u64;
                let dist = Binomial::new(population, eps).map_err(|e| Error::param("g", e.to_string()))?;
                Ok(dist.sample(rng) as usize)
            }
        }
    }
}

/// Places `n_users` bursts in an `m`-slot frame, each on `d` distinct slots
/// drawn uniformly.
pub fn place_block_users<R: Rng + ?Sized>(m: usize, n_users: usize, d: usize, rng: &mut R) -> Result<FrameGraph> {
    if m < d {
        return Err(Error::param("m", format!("frame of {m} slots cannot hold {d} distinct replicas")));
    }
    let bursts = (0..n_users).map(|_| index::sample(rng, m, d).into_vec()).collect();
    FrameGraph::new(m, d, bursts)
}

/// One block CSA frame at offered traffic `g`.
pub fn sample_block_frame<R: Rng + ?Sized>(
    m: usize,
    g: f64,
    d: usize,
    arrivals: Arrivals,
    rng: &mut R,
) -> Result<FrameGraph> {
    if m < d {
        return Err(Error::param("m", format!("frame of {m} slots cannot hold {d} distinct replicas")));
    }
    let n = arrivals.draw(m, g, rng)?;
    place_block_users(m, n, d, rng)
}

/// One coupled super-frame: `topo.m_f()` frames of `m` slots, slot index
/// `(frame - 1) * m + s`. Type-`i` users send one replica in a uniform slot
/// of each frame `i..i+d-1`.
pub fn sample_coupled_frame<R: Rng + ?Sized>(
    m: usize,
    topo: &CoupledTopology,
    g: f64,
    arrivals: Arrivals,
    rng: &mut R,
) -> Result<FrameGraph> {
    if m < 1 {
        return Err(Error::param("m", "frames need at least one slot"));
    }
    let mut bursts = Vec::new();
    let mut types = Vec::new();
    for i in 1..=topo.l() {
        let n = arrivals.draw(m, g, rng)?;
        for _ in 0..n {
            let slots = topo
                .bn_neighbors(i)
                .iter()
                .map(|&frame| (frame - 1) * m + rng.gen_range(0..m))
                .collect();
            bursts.push(slots);
            types.push(i);
        }
    }
    Ok(FrameGraph::new(m * topo.m_f(), topo.d(), bursts)?.with_types(m, types))
}
