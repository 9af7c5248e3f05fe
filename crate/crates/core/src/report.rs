//! Threshold tables and rate sweeps, with CSV/JSON rendering.

use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::de_block::{block_threshold, efficiency, solve_load_bound, BlockDeConfig};
use crate::de_coupled::coupled_threshold;
use crate::error::{Error, Result};
use crate::map_bound::{extrinsic_config, map_load_bound};
use crate::params::SchemeParams;
use crate::topology::build_topology;

/// Largest repetition degree accepted by [`table1`].
pub const TABLE_D_MAX: u32 = 8;

/// Numerical settings for threshold computations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnalysisOptions {
    pub de: BlockDeConfig,
    pub block_tol: f64,
    pub coupled_tol: f64,
    pub quad_tol: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            de: BlockDeConfig::default(),
            block_tol: 1e-5,
            coupled_tol: 1e-4,
            quad_tol: 1e-7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Table1Row {
    pub d: u32,
    pub g_it_block: f64,
    pub g_it_conv: f64,
    pub g_map_block: f64,
    pub g_star: f64,
    pub eta: f64,
    /// `g_it_conv` spread over all `l + d - 1` frames of the super-frame.
    pub g_it_conv_terminated: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub d: u32,
    pub rate: f64,
    pub g_it_block: f64,
    pub g_it_conv: f64,
    pub g_star: f64,
}

pub fn table1_row(d: u32, l: usize, alpha: f64, opts: &AnalysisOptions) -> Result<Table1Row> {
    let params = SchemeParams::new(d, alpha)?;
    let g_block = block_threshold(d, &opts.de, opts.block_tol)?.threshold;
    let g_conv = coupled_threshold(d as usize, l, &opts.de, opts.coupled_tol)?.threshold;
    let map_cfg = BlockDeConfig {
        stall_eps: extrinsic_config().stall_eps.min(opts.de.stall_eps),
        ..opts.de
    };
    let g_map = map_load_bound(&params, &map_cfg, opts.quad_tol)?;
    let g_star = solve_load_bound(params.rate())?;
    let topo = build_topology(l, d as usize)?;
    Ok(Table1Row {
        d,
        g_it_block: g_block,
        g_it_conv: g_conv,
        g_map_block: g_map,
        g_star,
        eta: efficiency(g_conv, g_star)?,
        g_it_conv_terminated: topo.terminated_load(g_conv),
    })
}

/// Rows for `d = 2..=d_max`, computed concurrently and returned in order.
pub fn table1(d_max: u32, l: usize, alpha: f64, opts: &AnalysisOptions) -> Result<Vec<Table1Row>> {
    if d_max > TABLE_D_MAX {
        return Err(Error::param("d_max", format!("at most {TABLE_D_MAX}, got {d_max}")));
    }
    (2..=d_max)
        .into_par_iter()
        .map(|d| table1_row(d, l, alpha, opts))
        .collect()
}

/// Block and coupled thresholds against the load bound, per rate `1/d`.
pub fn sweep(d_list: &[u32], l: usize, opts: &AnalysisOptions) -> Result<Vec<SweepRow>> {
    d_list
        .par_iter()
        .map(|&d| {
            let rate = 1.0 / d as f64;
            Ok(SweepRow {
                d,
                rate,
                g_it_block: block_threshold(d, &opts.de, opts.block_tol)?.threshold,
                g_it_conv: coupled_threshold(d as usize, l, &opts.de, opts.coupled_tol)?.threshold,
                g_star: solve_load_bound(rate)?,
            })
        })
        .collect()
}

/// Formats `x` with `sig` significant digits in plain decimal notation.
pub fn fmt_significant(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Rows that can be written as CSV with a fixed header.
pub trait CsvRow {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

const CSV_DIGITS: usize = 10;

fn num(x: f64) -> String {
    fmt_significant(x, CSV_DIGITS)
}

impl CsvRow for Table1Row {
    const HEADER: &'static [&'static str] = &["d", "g_it_block", "g_it_conv", "g_map_block", "g_star", "eta"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.d.to_string(),
            num(self.g_it_block),
            num(self.g_it_conv),
            num(self.g_map_block),
            num(self.g_star),
            num(self.eta),
        ]
    }
}

impl CsvRow for SweepRow {
    const HEADER: &'static [&'static str] = &["rate", "g_it_block", "g_it_conv", "g_star"];

    fn fields(&self) -> Vec<String> {
        vec![num(self.rate), num(self.g_it_block), num(self.g_it_conv), num(self.g_star)]
    }
}

pub fn to_csv<R: CsvRow>(rows: &[R]) -> String {
    let mut out = R::HEADER.join(",");
    out.push('\n');
    for r in rows {
        writeln!(out, "{}", r.fields().join(",")).unwrap();
    }
    out
}
