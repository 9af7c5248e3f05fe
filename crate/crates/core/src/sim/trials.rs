//! Monte Carlo driver: independent trials, each on its own random stream.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::frame::FrameGraph;
use super::gf2::gje_decode_residual;
use super::peel::peel;
use super::sample::{sample_block_frame, sample_coupled_frame, Arrivals};
use crate::error::{Error, Result};
use crate::rng::rng_stream;
use crate::topology::CoupledTopology;

#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    /// One frame of `m` slots, `d` replicas per user.
    Block { m: usize, d: usize },
    /// One super-frame with `m` slots per frame.
    Coupled { m: usize, topo: CoupledTopology },
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Block { .. } => "block",
            Scenario::Coupled { .. } => "coupled",
        }
    }

    pub fn d(&self) -> usize {
        match self {
            Scenario::Block { d, .. } => *d,
            Scenario::Coupled { topo, .. } => topo.d(),
        }
    }

    pub fn slots_per_frame(&self) -> usize {
        match self {
            Scenario::Block { m, .. } | Scenario::Coupled { m, .. } => *m,
        }
    }

    fn sample(&self, g: f64, arrivals: Arrivals, seed: u64, trial: u64) -> Result<FrameGraph> {
        let mut rng = rng_stream(seed, trial);
        match self {
            Scenario::Block { m, d } => sample_block_frame(*m, g, *d, arrivals, &mut rng),
            Scenario::Coupled { m, topo } => sample_coupled_frame(*m, topo, g, arrivals, &mut rng),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoder {
    Peeling,
    Gje,
    Both,
}

impl Decoder {
    fn peels(self) -> bool {
        matches!(self, Decoder::Peeling | Decoder::Both)
    }

    fn eliminates(self) -> bool {
        matches!(self, Decoder::Gje | Decoder::Both)
    }
}

impl FromStr for Decoder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "peeling" => Ok(Decoder::Peeling),
            "gje" => Ok(Decoder::Gje),
            "both" => Ok(Decoder::Both),
            other => Err(Error::param("decoder", format!("unknown decoder `{other}`"))),
        }
    }
}

/// Counts from a single trial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub bursts: usize,
    pub lost_peeling: Option<usize>,
    pub lost_gje: Option<usize>,
    /// Bursts per user type (coupled only).
    pub type_bursts: Vec<usize>,
    /// Lost bursts per user type under the primary decoder.
    pub type_lost: Vec<usize>,
}

impl TrialOutcome {
    /// Bursts recovered by elimination but not by peeling.
    pub fn gje_gain(&self) -> Option<usize> {
        Some(self.lost_peeling? - self.lost_gje?)
    }
}

fn run_one(scenario: &Scenario, g: f64, arrivals: Arrivals, seed: u64, trial: u64, decoder: Decoder) -> Result<TrialOutcome> {
    let frame = scenario.sample(g, arrivals, seed, trial)?;
    let n = frame.n_bursts();
    let peel_mask = decoder.peels().then(|| peel(&frame).mask(n));
    let gje_mask = decoder.eliminates().then(|| gje_decode_residual(&frame).mask(n));
    let lost = |m: &Vec<bool>| m.iter().filter(|&&r| !r).count();
    let primary = peel_mask.as_ref().or(gje_mask.as_ref()).expect("some decoder runs");
    let n_types = match scenario {
        Scenario::Coupled { topo, .. } => topo.l(),
        Scenario::Block { .. } => 0,
    };
    let mut type_bursts = vec![0; n_types];
    let mut type_lost = vec![0; n_types];
    if let Some(types) = frame.user_types() {
        for (b, &t) in types.iter().enumerate() {
            type_bursts[t - 1] += 1;
            if !primary[b] {
                type_lost[t - 1] += 1;
            }
        }
    }
    Ok(TrialOutcome {
        bursts: n,
        lost_peeling: peel_mask.as_ref().map(lost),
        lost_gje: gje_mask.as_ref().map(lost),
        type_bursts,
        type_lost,
    })
}

/// Aggregated packet-loss statistics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimReport {
    pub scenario: &'static str,
    pub d: usize,
    pub slots_per_frame: usize,
    pub l: Option<usize>,
    pub offered_g: f64,
    pub arrivals: Arrivals,
    pub decoder: Decoder,
    pub trials: usize,
    pub seed: u64,
    pub total_bursts: usize,
    /// Loss rate of the primary decoder: peeling, unless only GJE ran.
    pub plr: f64,
    /// Half-width of the normal-approximation 95% interval on `plr`.
    pub ci95: f64,
    pub plr_gje: Option<f64>,
    pub ci95_gje: Option<f64>,
    /// Primary-decoder loss rate per user type (coupled only, 0-indexed,
    /// `None` where no burst of that type was sent).
    pub per_position_plr: Option<Vec<Option<f64>>>,
    /// Per-trial count of bursts recovered by GJE but not by peeling.
    pub gje_gain_per_trial: Option<Vec<usize>>,
}

fn rate_and_ci(lost: usize, total: usize) -> (f64, f64) {
    if total == 0 {
        return (0.0, 0.0);
    }
    let p = lost as f64 / total as f64;
    (p, 1.96 * (p * (1.0 - p) / total as f64).sqrt())
}

impl SimReport {
    /// Standard error of `plr`.
    pub fn sigma(&self) -> f64 {
        self.ci95 / 1.96
    }
}

/// Runs `trials` independent frames. Trial `t` draws from stream `t` of
/// `seed`, so results do not depend on scheduling or thread count.
pub fn run_trials(
    scenario: &Scenario,
    g: f64,
    trials: usize,
    seed: u64,
    decoder: Decoder,
    arrivals: Arrivals,
) -> Result<SimReport> {
    if trials < 1 {
        return Err(Error::param("trials", "need at least one trial"));
    }
    if !(g >= 0.0) || !g.is_finite() {
        return Err(Error::param("g", format!("must be finite and >= 0, got {g}")));
    }
    let outcomes = (0..trials as u64)
        .into_par_iter()
        .map(|t| run_one(scenario, g, arrivals, seed, t, decoder))
        .collect::<Result<Vec<_>>>()?;

    let total: usize = outcomes.iter().map(|o| o.bursts).sum();
    let sum_opt = |f: fn(&TrialOutcome) -> Option<usize>| outcomes.iter().map(f).sum::<Option<usize>>();
    let lost_peel = sum_opt(|o| o.lost_peeling);
    let lost_gje = sum_opt(|o| o.lost_gje);
    let (plr, ci95) = rate_and_ci(lost_peel.or(lost_gje).unwrap_or(0), total);
    let gje_stats = lost_gje.map(|l| rate_and_ci(l, total));

    let (l, per_position_plr) = match scenario {
        Scenario::Coupled { topo, .. } => {
            let per = (0..topo.l())
                .map(|i| {
                    let sent: usize = outcomes.iter().map(|o| o.type_bursts[i]).sum();
                    let lost: usize = outcomes.iter().map(|o| o.type_lost[i]).sum();
                    (sent > 0).then(|| lost as f64 / sent as f64)
                })
                .collect();
            (Some(topo.l()), Some(per))
        }
        Scenario::Block { .. } => (None, None),
    };

    Ok(SimReport {
        scenario: scenario.name(),
        d: scenario.d(),
        slots_per_frame: scenario.slots_per_frame(),
        l,
        offered_g: g,
        arrivals,
        decoder,
        trials,
        seed,
        total_bursts: total,
        plr,
        ci95,
        plr_gje: gje_stats.map(|s| s.0),
        ci95_gje: gje_stats.map(|s| s.1),
        per_position_plr,
        gje_gain_per_trial: (decoder == Decoder::Both)
            .then(|| outcomes.iter().map(|o| o.gje_gain().expect("both decoders ran")).collect()),
    })
}
