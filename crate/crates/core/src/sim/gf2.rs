//! Dense bit-packed matrices over GF(2) and the genie-aided MAP decoder.

use super::frame::{DecodeMethod, DecodeReport, FrameGraph};
use super::peel::peel;

/// Row-major GF(2) matrix, 64 columns per word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        Self {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.words[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.words[r * self.stride + c / 64];
        let mask = 1u64 << (c % 64);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_weight(&self, r: usize) -> u32 {
        self.row(r).iter().map(|w| w.count_ones()).sum()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.words.split_at_mut(hi * self.stride);
        head[lo * self.stride..(lo + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// `row[dst] ^= row[src]` on words `from..`.
    fn xor_row(&mut self, src: usize, dst: usize, from: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (src_row, dst_row) = if src < dst {
            let (head, tail) = self.words.split_at_mut(dst * s);
            (&head[src * s..(src + 1) * s], &mut tail[..s])
        } else {
            let (head, tail) = self.words.split_at_mut(src * s);
            (&tail[..s] as &[u64], &mut head[dst * s..(dst + 1) * s])
        };
        for (d, x) in dst_row[from..].iter_mut().zip(&src_row[from..]) {
            *d ^= x;
        }
    }

    /// Reduces the matrix in place to reduced row-echelon form and returns
    /// the pivot `(row, column)` pairs. The rank is the number of pivots.
    pub fn rref(&mut self) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(p, r);
            // rows r.. are zero left of c, so elimination can start at c's word
            let from = c / 64;
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row(r, i, from);
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        pivots
    }
}

/// Columns of a reduced matrix that are determined: pivot columns whose row
/// carries no other nonzero, i.e. unit vectors in the row space.
fn determined_columns(m: &BitMatrix, pivots: &[(usize, usize)]) -> Vec<usize> {
    let mut cols: Vec<usize> = pivots
        .iter()
        .filter(|&&(r, _)| m.row_weight(r) == 1)
        .map(|&(_, c)| c)
        .collect();
    cols.sort_unstable();
    cols
}

/// Builds `Q` (slots x bursts) for the whole frame and solves `u Q^T = y` by
/// Gauss-Jordan elimination. Burst `j` is recovered iff `e_j` lies in the row
/// space of `Q`.
pub fn gje_decode(frame: &FrameGraph) -> DecodeReport {
    let adj = frame.slot_adjacency();
    let busy: Vec<&Vec<usize>> = adj.iter().filter(|a| !a.is_empty()).collect();
    let mut q = BitMatrix::zeros(busy.len(), frame.n_bursts());
    for (r, bursts) in busy.iter().enumerate() {
        for &b in bursts.iter() {
            q.set(r, b, true);
        }
    }
    let pivots = q.rref();
    DecodeReport {
        method: DecodeMethod::Gje,
        recovered: determined_columns(&q, &pivots),
        peel_iterations: None,
        gje_rank: Some(pivots.len()),
    }
}

/// Same result as [`gje_decode`], computed by peeling first and eliminating
/// only the residual system of unresolved bursts. Peeled bursts are unit
/// vectors of the row space, so the row space splits into their span and the
/// span of the residual rows restricted to the unresolved columns.
pub fn gje_decode_residual(frame: &FrameGraph) -> DecodeReport {
    let peeled = peel(frame).mask(frame.n_bursts());
    let unresolved: Vec<usize> = (0..frame.n_bursts()).filter(|&b| !peeled[b]).collect();
    let mut col_of = vec![usize::MAX; frame.n_bursts()];
    for (c, &b) in unresolved.iter().enumerate() {
        col_of[b] = c;
    }
    let adj = frame.slot_adjacency();
    let rows: Vec<Vec<usize>> = adj
        .iter()
        .map(|a| a.iter().filter(|&&b| !peeled[b]).map(|&b| col_of[b]).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    let mut q = BitMatrix::zeros(rows.len(), unresolved.len());
    for (r, cols) in rows.iter().enumerate() {
        for &c in cols {
            q.set(r, c, true);
        }
    }
    let pivots = q.rref();
    let n_peeled = frame.n_bursts() - unresolved.len();
    let mut recovered: Vec<usize> = (0..frame.n_bursts()).filter(|&b| peeled[b]).collect();
    recovered.extend(determined_columns(&q, &pivots).into_iter().map(|c| unresolved[c]));
    recovered.sort_unstable();
    DecodeReport {
        method: DecodeMethod::Gje,
        recovered,
        peel_iterations: None,
        gje_rank: Some(n_peeled + pivots.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(m: usize, d: usize, bursts: &[&[usize]]) -> FrameGraph {
        FrameGraph::new(m, d, bursts.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn identity_system() {
        let f = frame(2, 1, &[&[0], &[1]]);
        let r = gje_decode(&f);
        assert_eq!(r.recovered, vec![0, 1]);
        assert_eq!(r.gje_rank, Some(2));
    }

    #[test]
    fn degree_three_square_is_full_rank() {
        // rows 1110/1101/1011/0111: every slot has degree 3, peeling is stuck
        let f = frame(4, 3, &[&[1, 2, 3], &[0, 2, 3], &[0, 1, 3], &[0, 1, 2]]);
        let r = gje_decode(&f);
        assert_eq!(r.gje_rank, Some(4));
        assert_eq!(r.recovered, vec![0, 1, 2, 3]);
        assert!(peel(&f).recovered.is_empty());
        assert_eq!(gje_decode_residual(&f), r);
    }

    #[test]
    fn triangle_is_rank_deficient() {
        let f = frame(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        let r = gje_decode(&f);
        assert_eq!(r.gje_rank, Some(2));
        assert!(r.recovered.is_empty());
    }

    #[test]
    fn rref_across_word_boundary() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(2, 64, true);
        m.set(2, 0, true);
        let piv = m.rref();
        assert_eq!(piv, vec![(0, 0), (1, 64), (2, 129)]);
        for r in 0..3 {
            assert_eq!(m.row_weight(r), 1);
        }
    }

    #[test]
    fn partial_recovery() {
        let f = frame(5, 2, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4]]);
        let r = gje_decode(&f);
        assert_eq!(r.recovered, vec![0, 1, 2, 3]);
        assert_eq!(r.gje_rank, Some(4));
        // burst 0 is cancelled, then bursts 1, 2, 3 form a cycle: s3 = s1 + s2
        let f = frame(4, 2, &[&[0, 1], &[1, 2], &[2, 3], &[1, 3]]);
        let r = gje_decode(&f);
        assert_eq!(r.recovered, vec![0]);
        assert_eq!(r.gje_rank, Some(3));
        let f = frame(5, 2, &[&[0, 4], &[1, 2], &[2, 3], &[1, 3]]);
        let r = gje_decode(&f);
        assert_eq!(r.recovered, vec![0]);
        assert_eq!(r.gje_rank, Some(3));
    }
}
