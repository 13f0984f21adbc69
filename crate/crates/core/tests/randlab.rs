// Statistical integration tests for the random-graph lab. Every test is
// seeded, so outcomes are reproducible; thresholds are chosen so that the
// frozen seeds pass with wide margins.

use squarelab_core::randlab::{
    dense_subset_probe, ln_expected_dense_sets, sample_gnp, threshold_sweep, ExperimentConfig,
    GridParam,
};
use squarelab_core::thickness::Order;
use statrs::distribution::{Binomial, ChiSquared, ContinuousCDF, DiscreteCDF};

/// Chi-square goodness-of-fit of the edge-count distribution against
/// Binomial(C(n,2), p), at significance 1e-3.
fn edge_count_gof(n: usize, p: f64, trials: u64, seed_base: u64) -> (f64, f64) {
    let pairs = (n * (n - 1) / 2) as u64;
    let dist = Binomial::new(p, pairs).unwrap();
    let mu = pairs as f64 * p;
    let sigma = (pairs as f64 * p * (1.0 - p)).sqrt();
    // bin cut points at mu + z*sigma; bins are (-inf,c0], (c0,c1], ..., (c_k,inf)
    let cuts: Vec<u64> = [-2.0f64, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0]
        .iter()
        .map(|z| (mu + z * sigma).round().max(0.0) as u64)
        .collect();
    let mut observed = vec![0u64; cuts.len() + 1];
    for t in 0..trials {
        let m = sample_gnp(n, p, seed_base.wrapping_add(t)).unwrap().edge_count() as u64;
        let bin = cuts.iter().position(|&c| m <= c).unwrap_or(cuts.len());
        observed[bin] += 1;
    }
    let mut chi2 = 0.0;
    let mut prev_cdf = 0.0;
    for (i, &obs) in observed.iter().enumerate() {
        let cdf = if i < cuts.len() { dist.cdf(cuts[i]) } else { 1.0 };
        let expected = (cdf - prev_cdf) * trials as f64;
        prev_cdf = cdf;
        assert!(expected > 5.0, "bin {i} too thin: {expected}");
        chi2 += (obs as f64 - expected).powi(2) / expected;
    }
    let df = observed.len() as f64 - 1.0;
    let threshold = ChiSquared::new(df).unwrap().inverse_cdf(1.0 - 1e-3);
    (chi2, threshold)
}

#[test]
fn gnp_edge_counts_fit_binomial_coin_path() {
    let (chi2, threshold) = edge_count_gof(50, 0.3, 10_000, 0xC01F);
    assert!(chi2 < threshold, "chi2 {chi2} >= {threshold}");
}

#[test]
fn gnp_edge_counts_fit_binomial_skip_path() {
    let (chi2, threshold) = edge_count_gof(50, 0.05, 10_000, 0x51C1);
    assert!(chi2 < threshold, "chi2 {chi2} >= {threshold}");
}

#[test]
fn gnp_mean_edge_count_within_four_sigma() {
    // n = 10^4, p = 1/sqrt(n): skip-sampling path at scale
    let n = 10_000usize;
    let p = 1.0 / (n as f64).sqrt();
    let pairs = (n * (n - 1) / 2) as f64;
    let sigma = (pairs * p * (1.0 - p)).sqrt();
    let trials = 100u64;
    let mut total = 0f64;
    for t in 0..trials {
        let m = sample_gnp(n, p, 0xED6E + t).unwrap().edge_count() as f64;
        assert!((m - pairs * p).abs() < 6.0 * sigma, "trial {t} count {m}");
        total += m;
    }
    let mean = total / trials as f64;
    let se = sigma / (trials as f64).sqrt();
    assert!(
        (mean - pairs * p).abs() < 4.0 * se,
        "mean {mean} vs {} (se {se})",
        pairs * p
    );
}

#[test]
fn sweep_direction_supercritical_beats_subcritical() {
    // Above the critical density, low finite orders appear far more often.
    let cfg = ExperimentConfig {
        ns: vec![500],
        grid: vec![GridParam::C(0.3), GridParam::C(1.2)],
        trials: 30,
        master_seed: 2_026,
        level_cap: None,
    };
    let res = threshold_sweep(&cfg).unwrap();
    let aggs = res.aggregates();
    assert_eq!(aggs.len(), 2);
    let low = aggs.iter().find(|a| a.c == 0.3).unwrap();
    let high = aggs.iter().find(|a| a.c == 1.2).unwrap();
    assert!(
        high.frac_order_at_most(1) > low.frac_order_at_most(1),
        "order<=1 fraction: c=1.2 {} vs c=0.3 {}",
        high.frac_order_at_most(1),
        low.frac_order_at_most(1)
    );
    assert_eq!(low.frac_indeterminate, 0.0);
    assert_eq!(high.frac_indeterminate, 0.0);
}

#[test]
fn sweep_subcritical_pilot_is_mostly_relatively_hyperbolic() {
    // Scaled-down pilot of the sparse regime: p = 1/(4 sqrt(n ln n)).
    let n = 600usize;
    let p = 1.0 / (4.0 * ((n as f64) * (n as f64).ln()).sqrt());
    let cfg = ExperimentConfig {
        ns: vec![n],
        grid: vec![GridParam::P(p)],
        trials: 10,
        master_seed: 77,
        level_cap: None,
    };
    let res = threshold_sweep(&cfg).unwrap();
    let rel = res
        .rows
        .iter()
        .filter(|r| r.rel_hyperbolic == Some(true))
        .count();
    assert!(rel >= 8, "only {rel}/10 relatively hyperbolic");
    let ln_n = (n as f64).ln();
    for r in res.rows.iter().filter(|r| r.rel_hyperbolic == Some(true)) {
        assert!(
            (r.max_supp1 as f64) <= ln_n,
            "supp1 {} exceeds ln n = {ln_n}",
            r.max_supp1
        );
    }
}

#[test]
fn dense_probe_finds_nothing_in_subcritical_regime() {
    // In the sparse regime no m-set with >= 2m-4 edges should turn up for
    // m in [ln n, 2 ln n]; the probe reports only lighter sets.
    let n = 2000usize;
    let p = 1.0 / (4.0 * ((n as f64) * (n as f64).ln()).sqrt());
    let lnn = (n as f64).ln();
    let (m_lo, m_hi) = (lnn.ceil() as usize, (2.0 * lnn).floor() as usize);
    for seed in 0..20u64 {
        let g = sample_gnp(n, p, 0xDE5E + seed).unwrap();
        let report = dense_subset_probe(&g, m_lo, m_hi, 2, seed);
        for w in &report.per_m {
            assert!(
                w.score < -4,
                "seed {seed}: m={} set with {} edges (score {})",
                w.m,
                w.edges,
                w.score
            );
        }
        assert_eq!(report.per_m.len(), m_hi - m_lo + 1);
    }
    // consistency: the first-moment bound is already < 1 at this scale
    assert!(ln_expected_dense_sets(n, p).unwrap() < 0.0);
}

#[test]
fn sweep_rows_are_grouped_and_complete() {
    let cfg = ExperimentConfig {
        ns: vec![40, 60],
        grid: vec![GridParam::C(0.9)],
        trials: 6,
        master_seed: 31,
        level_cap: None,
    };
    let res = threshold_sweep(&cfg).unwrap();
    assert_eq!(res.rows.len(), 12);
    // rows sorted by grid point then trial, trials each 0..6
    for (i, r) in res.rows.iter().enumerate() {
        assert_eq!(r.trial, (i % 6) as u64);
        assert_eq!(r.n, if i < 6 { 40 } else { 60 });
    }
    // every verdict is decided at these sizes (cap never binds)
    assert!(res
        .rows
        .iter()
        .all(|r| !matches!(r.order, Order::Indeterminate { .. })));
}
