use anysort_core::{
    compute_scores, count_linear_extensions, delta_estimate, enumerate_linear_extensions, expected_footrule,
    is_linear_extension, median_rank_scores, rho_estimate, score_and_sort, ComparisonRecord, EnumerationLimit,
    Estimate, OrderMatrix,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// A hidden ranking, and a prefix of a random ordering of all pairs answered
/// according to it.
fn history(max_n: usize) -> impl Strategy<Value = (usize, Vec<ComparisonRecord>)> {
    (1..=max_n).prop_flat_map(|n| {
        let ranks: Vec<usize> = (0..n).collect();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let total = pairs.len();
        (Just(n), Just(ranks).prop_shuffle(), Just(pairs).prop_shuffle(), 0..=total)
    })
    .prop_map(|(n, ranks, pairs, k)| {
        let h = pairs[..k]
            .iter()
            .map(|&(i, j)| if ranks[i] < ranks[j] { ComparisonRecord::new(i, j) } else { ComparisonRecord::new(j, i) })
            .collect();
        (n, h)
    })
}

/// Median enumeration is kept cheap by skipping very loose orders.
const SMALL: EnumerationLimit = EnumerationLimit { max_items: 20, max_extensions: 20_000 };

fn median_estimate(m: &OrderMatrix) -> Option<(Vec<usize>, Estimate)> {
    count_linear_extensions(m, SMALL).ok()?;
    let med = median_rank_scores(m, SMALL).ok()?;
    let est = score_and_sort(&med);
    Some((med, est))
}

proptest! {
    #![proptest_config(config(1000, 11))]

    #[test]
    fn estimates_are_linear_extensions((n, h) in history(12)) {
        let m = OrderMatrix::from_history(n, &h).unwrap();
        prop_assert!(is_linear_extension(&m, &delta_estimate(&m)));
        prop_assert!(is_linear_extension(&m, &rho_estimate(&m)));
        if let Some((_, est)) = median_estimate(&m) {
            prop_assert!(is_linear_extension(&m, &est));
        }
    }

    #[test]
    fn total_orders_give_the_sorted_list(ranks in (1usize..=12).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
        let n = ranks.len();
        let mut h = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                h.push(if ranks[i] < ranks[j] { ComparisonRecord::new(i, j) } else { ComparisonRecord::new(j, i) });
            }
        }
        let m = OrderMatrix::from_history(n, &h).unwrap();
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by_key(|&i| ranks[i]);
        prop_assert_eq!(&delta_estimate(&m).0, &sorted);
        prop_assert_eq!(&rho_estimate(&m).0, &sorted);
        prop_assert_eq!(&median_estimate(&m).unwrap().1 .0, &sorted);
    }

    #[test]
    fn scores_respect_the_order((n, h) in history(10)) {
        let m = OrderMatrix::from_history(n, &h).unwrap();
        let s = compute_scores(&m);
        let med = median_estimate(&m).map(|(med, _)| med);
        for x in 0..n {
            let sx = s.items[x];
            prop_assert!(sx.descendants >= 1 && sx.ancestors >= 1);
            prop_assert!((sx.descendants + sx.ancestors) as usize <= n + 1);
            for y in 0..n {
                if x == y || m.entry(x, y) != 1 {
                    continue;
                }
                let sy = s.items[y];
                prop_assert!(sx.delta() < sy.delta());
                prop_assert!(sx.rho() < sy.rho());
                if let Some(med) = &med {
                    prop_assert!(med[x] < med[y]);
                }
            }
        }
    }

    #[test]
    fn distinct_medians_minimise_expected_error((n, h) in history(8)) {
        let m = OrderMatrix::from_history(n, &h).unwrap();
        // The oracle is quadratic in the number of extensions.
        let limit = EnumerationLimit { max_items: 8, max_extensions: 2_000 };
        if count_linear_extensions(&m, limit).is_err() {
            return Ok(());
        }
        let med = median_rank_scores(&m, limit).unwrap();
        let mut distinct = med.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() < n {
            return Ok(());
        }
        let ours = expected_footrule(&m, &score_and_sort(&med), limit).unwrap();
        let best = enumerate_linear_extensions(&m, limit)
            .unwrap()
            .iter()
            .map(|e| expected_footrule(&m, e, limit).unwrap())
            .fold(f64::INFINITY, f64::min);
        prop_assert!(ours <= best + 1e-9, "median {ours} vs best {best}");
    }
}

#[test]
fn median_estimate_uses_enumeration_limit() {
    let m = OrderMatrix::new(9);
    assert!(median_estimate(&m).is_none());
    assert!(median_rank_scores(&m, EnumerationLimit::default()).is_ok());
}
