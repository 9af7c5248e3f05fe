use serde::Serialize;

use crate::error::{Error, Result};

/// Active bursts of one frame (or super-frame) and the slots they occupy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameGraph {
    n_slots: usize,
    d: usize,
    /// Slot indices (0-indexed, distinct, ascending) of each burst's replicas.
    bursts: Vec<Vec<usize>>,
    /// User type (1-indexed) of each burst, for coupled super-frames.
    user_type: Option<Vec<usize>>,
    /// Slots per frame, for coupled super-frames.
    slots_per_frame: Option<usize>,
}

impl FrameGraph {
    pub fn new(n_slots: usize, d: usize, bursts: Vec<Vec<usize>>) -> Result<Self> {
        let mut bursts = bursts;
        for (b, slots) in bursts.iter_mut().enumerate() {
            if slots.len() != d {
                return Err(Error::param(
                    "bursts",
                    format!("burst {b} has {} replicas, expected {d}", slots.len()),
                ));
            }
            slots.sort_unstable();
            if slots.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::param("bursts", format!("burst {b} repeats a slot")));
            }
            if let Some(&s) = slots.last() {
                if s >= n_slots {
                    return Err(Error::param(
                        "bursts",
                        format!("burst {b} uses slot {s} of a {n_slots}-slot frame"),
                    ));
                }
            }
        }
        Ok(Self {
            n_slots,
            d,
            bursts,
            user_type: None,
            slots_per_frame: None,
        })
    }

    pub(crate) fn with_types(mut self, slots_per_frame: usize, types: Vec<usize>) -> Self {
        debug_assert_eq!(types.len(), self.bursts.len());
        self.slots_per_frame = Some(slots_per_frame);
        self.user_type = Some(types);
        self
    }

    pub fn n_slots(&self) -> usize {
        self.n_slots
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_bursts(&self) -> usize {
        self.bursts.len()
    }

    pub fn bursts(&self) -> &[Vec<usize>] {
        &self.bursts
    }

    pub fn user_types(&self) -> Option<&[usize]> {
        self.user_type.as_deref()
    }

    pub fn slots_per_frame(&self) -> Option<usize> {
        self.slots_per_frame
    }

    /// Bursts present in each slot.
    pub fn slot_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_slots];
        for (b, slots) in self.bursts.iter().enumerate() {
            for &s in slots {
                adj[s].push(b);
            }
        }
        adj
    }

    /// Number of replicas in each slot.
    pub fn slot_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_slots];
        for &s in self.bursts.iter().flatten() {
            deg[s] += 1;
        }
        deg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecodeMethod {
    Peeling,
    Gje,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeReport {
    pub method: DecodeMethod,
    /// Indices of recovered bursts, ascending.
    pub recovered: Vec<usize>,
    /// Number of flooding rounds, for peeling.
    pub peel_iterations: Option<usize>,
    /// Rank of `Q` over GF(2), for elimination.
    pub gje_rank: Option<usize>,
}

impl DecodeReport {
    pub fn n_recovered(&self) -> usize {
        self.recovered.len()
    }

    /// Per-burst recovery flags for a frame with `n_bursts` bursts.
    pub fn mask(&self, n_bursts: usize) -> Vec<bool> {
        let mut m = vec![false; n_bursts];
        for &b in &self.recovered {
            m[b] = true;
        }
        m
    }

    pub fn is_subset_of(&self, other: &DecodeReport) -> bool {
        // both lists are sorted
        let mut it = other.recovered.iter();
        self.recovered.iter().all(|b| it.any(|o| o == b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_bursts() {
        assert!(FrameGraph::new(4, 2, vec![vec![0, 1]]).is_ok());
        assert!(FrameGraph::new(4, 2, vec![vec![0]]).is_err());
        assert!(FrameGraph::new(4, 2, vec![vec![1, 1]]).is_err());
        assert!(FrameGraph::new(4, 2, vec![vec![1, 4]]).is_err());
    }

    #[test]
    fn degrees() {
        let f = FrameGraph::new(4, 2, vec![vec![0, 1], vec![1, 3], vec![0, 3]]).unwrap();
        assert_eq!(f.slot_degrees(), vec![2, 2, 0, 2]);
        assert_eq!(f.slot_adjacency()[3], vec![1, 2]);
    }

    #[test]
    fn subset_check() {
        let a = DecodeReport {
            method: DecodeMethod::Peeling,
            recovered: vec![1, 4],
            peel_iterations: Some(1),
            gje_rank: None,
        };
        let mut b = a.clone();
        b.recovered = vec![0, 1, 3, 4];
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert_eq!(a.mask(5), vec![false, true, false, false, true]);
    }
}
