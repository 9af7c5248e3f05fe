//! Type structure of the spatially-coupled super-frame.
//!
//! Positions (frames / SN groups) and user types (BN groups) are 1-indexed
//! throughout this module. A type-`i` user transmits in frames
//! `i, i+1, ..., i+d-1`; a frame `j` therefore hears user types
//! `max(1, j-d+1) ..= min(l, j)`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoupledTopology {
    l: usize,
    d: usize,
    m_f: usize,
    delta: Vec<usize>,
    sn_neighbors: Vec<Vec<usize>>,
    bn_neighbors: Vec<Vec<usize>>,
}

/// Terminated chain with `l` arrival frames and repetition degree `d`.
pub fn build_topology(l: usize, d: usize) -> Result<CoupledTopology> {
    if l < 1 {
        return Err(Error::param("l", "chain length must be at least 1"));
    }
    if d < 1 {
        return Err(Error::param("d", "repetition degree must be at least 1"));
    }
    let m_f = l + d - 1;
    let bn_neighbors: Vec<Vec<usize>> = (1..=l).map(|i| (i..i + d).collect()).collect();
    let sn_neighbors: Vec<Vec<usize>> = (1..=m_f)
        .map(|j| (j.saturating_sub(d - 1).max(1)..=j.min(l)).collect())
        .collect();
    Ok(CoupledTopology::from_neighbors(l, d, bn_neighbors, sn_neighbors))
}

impl CoupledTopology {
    fn from_neighbors(
        l: usize,
        d: usize,
        bn_neighbors: Vec<Vec<usize>>,
        sn_neighbors: Vec<Vec<usize>>,
    ) -> Self {
        let delta = sn_neighbors.iter().map(Vec::len).collect();
        Self {
            l,
            d,
            m_f: sn_neighbors.len(),
            delta,
            sn_neighbors,
            bn_neighbors,
        }
    }

    /// Untruncated ring of `n` positions where user type `i` is attached to
    /// positions `i, ..., i+d-1` taken modulo `n`. Every position then has
    /// degree `d`, so density evolution on this ring reduces to the block
    /// recursion.
    pub fn circulant(n: usize, d: usize) -> Result<Self> {
        if d < 1 {
            return Err(Error::param("d", "repetition degree must be at least 1"));
        }
        if n < d {
            return Err(Error::param("n", format!("ring of {n} positions cannot hold {d} distinct copies")));
        }
        let bn_neighbors: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..d).map(|k| (i + k) % n + 1).collect())
            .collect();
        let mut sn_neighbors = vec![Vec::with_capacity(d); n];
        for (i, nbrs) in bn_neighbors.iter().enumerate() {
            for &j in nbrs {
                sn_neighbors[j - 1].push(i + 1);
            }
        }
        for s in &mut sn_neighbors {
            s.sort_unstable();
        }
        Ok(Self::from_neighbors(n, d, bn_neighbors, sn_neighbors))
    }

    /// Number of frames admitting new arrivals (user types).
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Total number of positions in the chain.
    pub fn m_f(&self) -> usize {
        self.m_f
    }

    /// SN-group degrees; element `k` belongs to position `k + 1`.
    pub fn deltas(&self) -> &[usize] {
        &self.delta
    }

    pub fn delta(&self, j: usize) -> usize {
        self.delta[j - 1]
    }

    /// User types heard by position `j`.
    pub fn sn_neighbors(&self, j: usize) -> &[usize] {
        &self.sn_neighbors[j - 1]
    }

    /// Positions reached by user type `i`.
    pub fn bn_neighbors(&self, i: usize) -> &[usize] {
        &self.bn_neighbors[i - 1]
    }

    /// Number of BN-type to SN-group adjacencies, `sum_j delta_j`.
    pub fn edge_count(&self) -> usize {
        self.delta.iter().sum()
    }

    /// Offered traffic after spreading the `l` arrival frames over all
    /// `m_f` frames of the super-frame.
    pub fn terminated_load(&self, g: f64) -> f64 {
        g * self.l as f64 / self.m_f as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_chains() {
        let t = build_topology(3, 2).unwrap();
        assert_eq!(t.m_f(), 4);
        assert_eq!(t.deltas(), &[1, 2, 2, 1]);
        assert_eq!(t.sn_neighbors(1), &[1]);
        assert_eq!(t.sn_neighbors(4), &[3]);
        assert_eq!(t.bn_neighbors(3), &[3, 4]);

        let t = build_topology(1, 3).unwrap();
        assert_eq!(t.m_f(), 3);
        assert_eq!(t.deltas(), &[1, 1, 1]);
    }

    #[test]
    fn long_chain_matches_enumeration() {
        let (l, d) = (200, 3);
        let t = build_topology(l, d).unwrap();
        // count, for every frame, the user types whose d consecutive frames cover it
        let mut counts = vec![0usize; l + d - 1];
        for i in 1..=l {
            for k in 0..d {
                counts[i + k - 1] += 1;
            }
        }
        assert_eq!(t.deltas(), counts.as_slice());
        assert_eq!(t.m_f(), 202);
        assert_eq!(&t.deltas()[..3], &[1, 2, 3]);
        assert_eq!(t.deltas().iter().filter(|&&x| x == 3).count(), 198);
    }

    #[test]
    fn rejects_empty() {
        assert!(build_topology(0, 3).is_err());
        assert!(build_topology(3, 0).is_err());
        assert!(CoupledTopology::circulant(2, 3).is_err());
    }

    #[test]
    fn circulant_is_regular() {
        let t = CoupledTopology::circulant(7, 3).unwrap();
        assert!(t.deltas().iter().all(|&x| x == 3));
        assert_eq!(t.bn_neighbors(7), &[7, 1, 2]);
        assert_eq!(t.sn_neighbors(1), &[1, 6, 7]);
    }

    proptest! {
        #[test]
        fn topology_invariants(l in 1usize..=50, d in 1usize..=8) {
            let t = build_topology(l, d).unwrap();
            prop_assert_eq!(t.m_f(), l + d - 1);
            prop_assert_eq!(t.edge_count(), l * d);
            for j in 1..=t.m_f() {
                let expect = j.min(d).min(l).min(l + d - j);
                prop_assert_eq!(t.delta(j), expect);
                prop_assert!((1..=d).contains(&t.delta(j)));
                prop_assert_eq!(t.delta(j), t.delta(t.m_f() + 1 - j));
            }
            for i in 1..=l {
                let expect: Vec<usize> = (i..i + d).collect();
                prop_assert_eq!(t.bn_neighbors(i), expect.as_slice());
                for j in 1..=t.m_f() {
                    prop_assert_eq!(
                        t.sn_neighbors(j).contains(&i),
                        t.bn_neighbors(i).contains(&j)
                    );
                }
            }
        }
    }
}
