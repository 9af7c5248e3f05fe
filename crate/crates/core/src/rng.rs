//! Deterministic random streams.
//!
//! A stream is a ChaCha8 generator keyed by the 64-bit seed with the stream
//! id selecting the ChaCha stream word. ChaCha is counter-based, so streams
//! are independent and the output is identical on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type RngStream = ChaCha8Rng;

pub fn rng_stream(seed: u64, stream_id: u64) -> RngStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    rng
}
