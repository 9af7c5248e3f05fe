//! Line-based frame dump: a header `M N_a d`, then one line per burst with
//! its 0-indexed slot indices separated by single spaces.

use std::fmt::Write;

use super::frame::FrameGraph;
use crate::error::{Error, Result};

pub fn frame_to_text(frame: &FrameGraph) -> String {
    let mut out = format!("{} {} {}\n", frame.n_slots(), frame.n_bursts(), frame.d());
    for slots in frame.bursts() {
        let line: Vec<String> = slots.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

fn parse_fields(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split(' ')
        .map(|tok| {
            tok.parse::<usize>().map_err(|e| Error::Parse {
                line: lineno,
                reason: format!("`{tok}`: {e}"),
            })
        })
        .collect()
}

pub fn frame_from_text(text: &str) -> Result<FrameGraph> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing header".into(),
    })?;
    let head = parse_fields(header, 1)?;
    let [m, n_a, d] = head[..] else {
        return Err(Error::Parse {
            line: 1,
            reason: format!("header needs 3 fields, got {}", head.len()),
        });
    };
    let mut bursts = Vec::with_capacity(n_a);
    for (lineno, line) in lines {
        let slots = parse_fields(line, lineno)?;
        if slots.len() != d {
            return Err(Error::Parse {
                line: lineno,
                reason: format!("expected {d} slot indices, got {}", slots.len()),
            });
        }
        if slots.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                line: lineno,
                reason: "slot indices must be strictly increasing".into(),
            });
        }
        bursts.push(slots);
    }
    if bursts.len() != n_a {
        return Err(Error::Parse {
            line: bursts.len() + 1,
            reason: format!("header announces {n_a} bursts, found {}", bursts.len()),
        });
    }
    FrameGraph::new(m, d, bursts).map_err(|e| Error::Parse {
        line: 0,
        reason: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_stream;
    use crate::sim::sample::{sample_block_frame, Arrivals};
    use proptest::prelude::*;

    #[test]
    fn known_layout() {
        let f = FrameGraph::new(4, 2, vec![vec![0, 1], vec![1, 3], vec![0, 3]]).unwrap();
        let t = frame_to_text(&f);
        assert_eq!(t, "4 3 2\n0 1\n1 3\n0 3\n");
        assert_eq!(frame_from_text(&t).unwrap(), f);
        assert_eq!(frame_to_text(&FrameGraph::new(7, 3, vec![]).unwrap()), "7 0 3\n");
    }

    #[test]
    fn rejects_malformed() {
        assert!(frame_from_text("").is_err());
        assert!(frame_from_text("4 1\n0 1\n").is_err());
        assert!(frame_from_text("4 2 2\n0 1\n").is_err());
        assert!(frame_from_text("4 1 2\n0 1 2\n").is_err());
        assert!(frame_from_text("4 1 2\n1 0\n").is_err());
        assert!(frame_from_text("4 1 2\n0 4\n").is_err());
        assert!(frame_from_text("4 1 2\n0  1\n").is_err());
    }

    proptest! {
        #[test]
        fn text_roundtrip(seed in any::<u64>(), m in 3usize..60, g in 0.0f64..1.5, d in 1usize..4) {
            let mut rng = rng_stream(seed, 0);
            let f = sample_block_frame(m, g, d, Arrivals::Poisson, &mut rng).unwrap();
            let t = frame_to_text(&f);
            let back = frame_from_text(&t).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(frame_to_text(&back), t);
        }
    }
}
