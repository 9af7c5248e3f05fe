//! Iterative interference cancelation as peeling on the frame graph.

use super::frame::{DecodeMethod, DecodeReport, FrameGraph};

/// Order in which the serial decoder scans slots for singletons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOrder {
    Forward,
    Reverse,
}

fn unresolved_in(adj: &[usize], resolved: &[bool]) -> Option<usize> {
    adj.iter().copied().find(|&b| !resolved[b])
}

fn report(resolved: Vec<bool>, rounds: usize) -> DecodeReport {
    DecodeReport {
        method: DecodeMethod::Peeling,
        recovered: resolved
            .iter()
            .enumerate()
            .filter_map(|(b, &r)| r.then_some(b))
            .collect(),
        peel_iterations: Some(rounds),
        gje_rank: None,
    }
}

/// Flooding SIC: in every round all singleton slots are decoded at once and
/// their replicas cancelled. `peel_iterations` counts the rounds that
/// recovered at least one burst.
pub fn peel(frame: &FrameGraph) -> DecodeReport {
    let adj = frame.slot_adjacency();
    let mut deg = frame.slot_degrees();
    let mut resolved = vec![false; frame.n_bursts()];
    let mut frontier: Vec<usize> = (0..frame.n_slots()).filter(|&s| deg[s] == 1).collect();
    let mut rounds = 0;
    let mut newly = Vec::new();
    while !frontier.is_empty() {
        newly.clear();
        for &s in &frontier {
            if deg[s] != 1 {
                continue;
            }
            if let Some(b) = unresolved_in(&adj[s], &resolved) {
                resolved[b] = true;
                newly.push(b);
            }
        }
        if newly.is_empty() {
            break;
        }
        rounds += 1;
        let mut next = Vec::new();
        for &b in &newly {
            for &s in &frame.bursts()[b] {
                deg[s] -= 1;
                if deg[s] == 1 {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    report(resolved, rounds)
}

/// One-at-a-time SIC with a stack of singleton slots. The recovered set does
/// not depend on the order; `peel_iterations` is the number of bursts
/// decoded.
pub fn peel_serial(frame: &FrameGraph, order: ScanOrder) -> DecodeReport {
    let adj = frame.slot_adjacency();
    let mut deg = frame.slot_degrees();
    let mut resolved = vec![false; frame.n_bursts()];
    let mut stack: Vec<usize> = match order {
        ScanOrder::Forward => (0..frame.n_slots()).rev().filter(|&s| deg[s] == 1).collect(),
        ScanOrder::Reverse => (0..frame.n_slots()).filter(|&s| deg[s] == 1).collect(),
    };
    let mut steps = 0;
    while let Some(s) = stack.pop() {
        if deg[s] != 1 {
            continue;
        }
        let Some(b) = unresolved_in(&adj[s], &resolved) else {
            continue;
        };
        resolved[b] = true;
        steps += 1;
        for &t in &frame.bursts()[b] {
            deg[t] -= 1;
            if deg[t] == 1 {
                stack.push(t);
            }
        }
    }
    report(resolved, steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(m: usize, d: usize, bursts: &[&[usize]]) -> FrameGraph {
        FrameGraph::new(m, d, bursts.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn stopping_set_recovers_nothing() {
        // three users, d = 2, slots {0,1}, {1,3}, {0,3}; slot 2 empty
        let f = frame(4, 2, &[&[0, 1], &[1, 3], &[0, 3]]);
        assert!(peel(&f).recovered.is_empty());
        assert!(peel_serial(&f, ScanOrder::Forward).recovered.is_empty());
    }

    #[test]
    fn single_user() {
        let f = frame(2, 2, &[&[0, 1]]);
        let r = peel(&f);
        assert_eq!(r.recovered, vec![0]);
        assert_eq!(r.peel_iterations, Some(1));
    }

    #[test]
    fn chain_unrolls() {
        let f = frame(3, 2, &[&[0, 1], &[1, 2]]);
        let r = peel(&f);
        assert_eq!(r.recovered, vec![0, 1]);
        // both end slots are singletons in the first round
        assert_eq!(r.peel_iterations, Some(1));

        // ends clear in round one, the middle pair in round two
        let f = frame(5, 2, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(peel(&f).recovered, vec![0, 1, 2, 3]);
        assert_eq!(peel(&f).peel_iterations, Some(2));

        // after the first burst is cancelled the rest is a cycle
        let f = frame(4, 2, &[&[0, 1], &[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(peel(&f).recovered, vec![0]);
    }

    #[test]
    fn all_degree_three_blocks_peeling() {
        let f = frame(4, 3, &[&[1, 2, 3], &[0, 2, 3], &[0, 1, 3], &[0, 1, 2]]);
        assert!(peel(&f).recovered.is_empty());
    }

    #[test]
    fn empty_frame() {
        let f = frame(5, 2, &[]);
        let r = peel(&f);
        assert!(r.recovered.is_empty());
        assert_eq!(r.peel_iterations, Some(0));
    }
}
