mod common;

use common::{exhaustive_recoverable, poisson_frame, random_small_frame};
use csa::sim::{gje_decode, gje_decode_residual, peel, peel_serial, ScanOrder};

#[test]
fn peeling_is_contained_in_gje() {
    for t in 0..10_000 {
        let (frame, _) = random_small_frame(2024, t, 30, 30);
        let p = peel(&frame);
        let g = gje_decode(&frame);
        assert!(p.is_subset_of(&g), "instance {t}: {:?} vs {:?}", p.recovered, g.recovered);
        let rank = g.gje_rank.unwrap();
        assert!(rank <= frame.n_slots().min(frame.n_bursts()));
        if p.n_recovered() == frame.n_bursts() {
            assert_eq!(g.n_recovered(), frame.n_bursts());
            assert_eq!(rank, frame.n_bursts());
        }
    }
}

#[test]
fn gje_matches_exhaustive_enumeration() {
    for t in 0..2_000 {
        let (frame, u) = random_small_frame(77, t, 16, 12);
        let u = u & ((1u32 << frame.n_bursts()) - 1);
        assert_eq!(
            gje_decode(&frame).recovered,
            exhaustive_recoverable(&frame, u),
            "instance {t}"
        );
    }
}

#[test]
fn peeling_order_does_not_matter() {
    for t in 0..2_000 {
        let (frame, _) = random_small_frame(5, t, 30, 30);
        let flood = peel(&frame).recovered;
        assert_eq!(peel_serial(&frame, ScanOrder::Forward).recovered, flood);
        assert_eq!(peel_serial(&frame, ScanOrder::Reverse).recovered, flood);
    }
}

#[test]
fn residual_elimination_equals_full_elimination() {
    for t in 0..2_000 {
        let (frame, _) = random_small_frame(31, t, 40, 45);
        assert_eq!(gje_decode_residual(&frame), gje_decode(&frame), "instance {t}");
    }
    for seed in 0..5 {
        let frame = poisson_frame(seed, 400, 0.95, 3);
        assert_eq!(gje_decode_residual(&frame), gje_decode(&frame));
    }
}

#[test]
fn slot_degrees_are_poisson() {
    // chi-square against Poisson(g d) at M = 10^4; bins 0..=6 and a tail bin
    let (m, g, d) = (10_000, 0.5, 3);
    let frame = poisson_frame(99, m, g, d);
    let lambda = g * d as f64;
    let mut observed = [0usize; 8];
    for deg in frame.slot_degrees() {
        observed[deg.min(7)] += 1;
    }
    let mut pmf = [0.0; 8];
    let mut term = (-lambda).exp();
    for (k, p) in pmf.iter_mut().enumerate().take(7) {
        *p = term;
        term *= lambda / (k + 1) as f64;
    }
    pmf[7] = 1.0 - pmf[..7].iter().sum::<f64>();
    let chi2: f64 = observed
        .iter()
        .zip(pmf)
        .map(|(&o, p)| {
            let e = p * m as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    // 99.9% quantile of chi-square with 7 degrees of freedom
    assert!(chi2 < 24.32, "chi2 = {chi2}, observed {observed:?}");
}
