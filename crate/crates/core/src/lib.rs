//! Analysis and simulation of coded slotted ALOHA (CSA) with successive
//! interference cancelation.
//!
//! The crate covers two access schemes built on `(d,1)` repetition codes:
//!
//! * **block CSA**, where every active user sends `d` replicas of its burst in
//!   `d` distinct slots of a single MAC frame, and
//! * **spatially-coupled CSA**, where a super-frame of `l + d - 1` frames is
//!   used and a user becoming active in frame `i` sends one replica in each of
//!   frames `i..i+d-1`.
//!
//! For both schemes the crate computes asymptotic iterative (SIC) thresholds by
//! density evolution ([`de_block`], [`de_coupled`]), the genie-aided MAP upper
//! bound from the area theorem ([`map_bound`]) and the load bound
//! `G = 1 - exp(-G/R)`. The [`sim`] module cross-checks the asymptotics with
//! finite frames, a peeling decoder and a GF(2) Gauss-Jordan decoder.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod de_block;
pub mod de_coupled;
pub mod error;
pub mod map_bound;
pub mod params;
pub mod quad;
pub mod report;
pub mod rng;
pub mod sim;
pub mod topology;

pub use de_block::{
    block_threshold, block_threshold_grid, de_block_run, efficiency, rho_tilde, solve_load_bound,
    BlockDeConfig,
};
pub use de_coupled::{coupled_threshold, de_coupled_run, de_coupled_step, CoupledDeState};
pub use error::{Error, Result};
pub use map_bound::{extrinsic_curve, extrinsic_p, map_epsilon_bound, map_load_bound, ExtrinsicCurve};
pub use params::{DeResult, LoadPoint, SchemeParams, ThresholdResult};
pub use rng::{rng_stream, RngStream};
pub use topology::{build_topology, CoupledTopology};
