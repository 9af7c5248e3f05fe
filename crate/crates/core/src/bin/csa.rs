//! Command-line front end for the `csa` library.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use csa::report::{self, fmt_significant, to_csv, AnalysisOptions, CsvRow};
use csa::sim::{run_trials, Arrivals, Decoder, Scenario};
use csa::{block_threshold, build_topology, coupled_threshold, map_load_bound, solve_load_bound, Error, SchemeParams};

const EXIT_PARAM: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(name = "csa", version, about = "Coded slotted ALOHA thresholds and simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Peeling,
    Gje,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Block,
    Coupled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Block,
    Coupled,
    Map,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Numerics {
    /// Bisection tolerance (defaults: 1e-5 block, 1e-4 coupled).
    #[arg(long)]
    tol: Option<f64>,
    /// Density evolution iteration cap.
    #[arg(long)]
    max_iters: Option<usize>,
}

impl Numerics {
    fn options(&self) -> AnalysisOptions {
        let mut o = AnalysisOptions::default();
        if let Some(t) = self.tol {
            o.block_tol = t;
            o.coupled_tol = t;
        }
        if let Some(n) = self.max_iters {
            o.de.max_iters = n;
        }
        o
    }
}

#[derive(Subcommand)]
enum Command {
    /// Load bound G* for repetition degree d.
    Bound {
        #[arg(long)]
        d: u32,
    },
    /// Threshold table for d = 2..d-max.
    Table1 {
        #[arg(long, default_value_t = 6)]
        d_max: u32,
        #[arg(long, default_value_t = 200)]
        l: usize,
        #[arg(long, default_value_t = 100.0)]
        alpha: f64,
        #[command(flatten)]
        num: Numerics,
        #[command(flatten)]
        output: Output,
    },
    /// Block and coupled thresholds versus rate.
    Sweep {
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "2,3,4,5,6")]
        d_list: Vec<u32>,
        #[arg(long, default_value_t = 200)]
        l: usize,
        #[command(flatten)]
        num: Numerics,
        #[command(flatten)]
        output: Output,
    },
    /// A single threshold.
    Threshold {
        #[arg(value_enum)]
        scheme: Scheme,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 200)]
        l: usize,
        #[arg(long, default_value_t = 100.0)]
        alpha: f64,
        #[command(flatten)]
        num: Numerics,
    },
    /// Monte Carlo packet-loss simulation.
    Simulate {
        #[arg(value_enum)]
        scenario: ScenarioArg,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 50)]
        l: usize,
        #[arg(long)]
        g: f64,
        #[arg(long, default_value_t = 1000)]
        slots: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "peeling")]
        decoder: DecoderArg,
        /// Finite population per frame; switches to binomial arrivals.
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::InvalidParameter {
            name: "out",
            reason: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render<R: CsvRow + Serialize>(rows: &[R], output: &Output) -> Result<(), Error> {
    let text = match output.format {
        Format::Csv => to_csv(rows),
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
    };
    emit(&text, output.out.as_ref())
}

#[derive(Serialize)]
struct SimulationOutput {
    report: csa::sim::SimReport,
    wall_clock_s: f64,
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Bound { d } => {
            if d < 1 {
                return Err(Error::InvalidParameter {
                    name: "d",
                    reason: "must be at least 1".into(),
                });
            }
            let g = solve_load_bound(1.0 / d as f64)?;
            println!("{}", fmt_significant(g, 6));
        }
        Command::Table1 {
            d_max,
            l,
            alpha,
            num,
            output,
        } => render(&report::table1(d_max, l, alpha, &num.options())?, &output)?,
        Command::Sweep { d_list, l, num, output } => render(&report::sweep(&d_list, l, &num.options())?, &output)?,
        Command::Threshold {
            scheme,
            d,
            l,
            alpha,
            num,
        } => {
            let o = num.options();
            let g = match scheme {
                Scheme::Block => block_threshold(d, &o.de, o.block_tol)?.threshold,
                Scheme::Coupled => coupled_threshold(d as usize, l, &o.de, o.coupled_tol)?.threshold,
                Scheme::Map => {
                    let cfg = csa::BlockDeConfig {
                        stall_eps: csa::map_bound::extrinsic_config().stall_eps,
                        ..o.de
                    };
                    map_load_bound(&SchemeParams::new(d, alpha)?, &cfg, o.quad_tol)?
                }
            };
            println!("{}", fmt_significant(g, 6));
        }
        Command::Simulate {
            scenario,
            d,
            l,
            g,
            slots,
            trials,
            seed,
            decoder,
            alpha,
            output,
        } => {
            let scenario = match scenario {
                ScenarioArg::Block => Scenario::Block { m: slots, d },
                ScenarioArg::Coupled => Scenario::Coupled {
                    m: slots,
                    topo: build_topology(l, d)?,
                },
            };
            let decoder = match decoder {
                DecoderArg::Peeling => Decoder::Peeling,
                DecoderArg::Gje => Decoder::Gje,
                DecoderArg::Both => Decoder::Both,
            };
            let arrivals = alpha.map_or(Arrivals::Poisson, |alpha| Arrivals::Binomial { alpha });
            let start = Instant::now();
            let report = run_trials(&scenario, g, trials, seed, decoder, arrivals)?;
            let wall_clock_s = start.elapsed().as_secs_f64();
            let text = match output.format {
                Format::Json => {
                    serde_json::to_string_pretty(&SimulationOutput { report, wall_clock_s }).expect("report serializes")
                        + "\n"
                }
                Format::Csv => format!(
                    "scenario,d,slots,g,trials,seed,total_bursts,plr,ci95\n{},{},{},{},{},{},{},{},{}\n",
                    report.scenario,
                    report.d,
                    report.slots_per_frame,
                    report.offered_g,
                    report.trials,
                    report.seed,
                    report.total_bursts,
                    fmt_significant(report.plr, 10),
                    fmt_significant(report.ci95, 10),
                ),
            };
            emit(&text, output.out.as_ref())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("CSA_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parameter_error() { EXIT_PARAM } else { EXIT_NUMERIC })
        }
    }
}
