//! Small frames where interference cancelation gets stuck, compared with
//! Gauss-Jordan elimination on the same slot equations.

use csa::sim::{frame_from_text, frame_to_text, gje_decode, peel};

const FRAMES: [(&str, &str); 3] = [
    ("three users, d = 2, stopping set", "4 3 2\n0 1\n1 3\n0 3\n"),
    ("four users, d = 3, every slot collided", "4 4 3\n1 2 3\n0 2 3\n0 1 3\n0 1 2\n"),
    ("chain", "5 4 2\n0 1\n1 2\n2 3\n3 4\n"),
];

pub fn run_example() -> csa::Result<()> {
    for (name, text) in FRAMES {
        let frame = frame_from_text(text)?;
        assert_eq!(frame_to_text(&frame), text);
        let p = peel(&frame);
        let g = gje_decode(&frame);
        println!("{name}");
        println!("  slot degrees: {:?}", frame.slot_degrees());
        println!("  peeling recovers {:?} in {} rounds", p.recovered, p.peel_iterations.unwrap_or(0));
        println!("  GJE recovers {:?}, rank {}", g.recovered, g.gje_rank.unwrap_or(0));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> csa::Result<()> {
    run_example()
}
