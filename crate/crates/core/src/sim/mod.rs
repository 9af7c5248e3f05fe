//! Finite-length Monte Carlo simulation of block and coupled CSA frames.
//!
//! A frame is a bipartite graph between active bursts and slots. It is
//! decoded either by peeling (the SIC process) or by Gauss-Jordan elimination
//! over GF(2) of the system `u Q^T = y` with `Q` revealed by a genie.

mod frame;
mod gf2;
mod peel;
mod sample;
mod text;
mod trials;

pub use frame::{DecodeMethod, DecodeReport, FrameGraph};
pub use gf2::{gje_decode, gje_decode_residual, BitMatrix};
pub use peel::{peel, peel_serial, ScanOrder};
pub use sample::{place_block_users, sample_block_frame, sample_coupled_frame, Arrivals};
pub use text::{frame_from_text, frame_to_text};
pub use trials::{run_trials, Decoder, Scenario, SimReport, TrialOutcome};
