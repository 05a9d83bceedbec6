use std::collections::HashSet;

use anysort_core::algorithms::{corsort_select, corsort_select_exhaustive};
use anysort_core::{
    make_sorter, run_to_completion, Algorithm, ComparisonRecord, CoreError, OrderMatrix, PendingPair, Permutation,
    Step,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pairs(h: &[ComparisonRecord]) -> Vec<(usize, usize)> {
    let mut v: Vec<_> = h.iter().map(|r| r.unordered()).collect();
    v.sort_unstable();
    v
}

fn smaller(truth: &Permutation, p: PendingPair) -> usize {
    if truth.less(p.i, p.j) {
        p.i
    } else {
        p.j
    }
}

/// Schedules whose plain textbook form revisits pairs it has already compared.
fn revisits_pairs(alg: Algorithm) -> bool {
    matches!(alg, Algorithm::Heapsort | Algorithm::Shellsort)
}

proptest! {
    #![proptest_config(config(1000, 21))]

    #[test]
    fn merge_variants_compare_the_same_pairs(truth in permutation(64)) {
        let (_, td) = run_to_completion(Algorithm::TopdownMerge, &truth).unwrap();
        let (_, bu) = run_to_completion(Algorithm::BottomupMerge, &truth).unwrap();
        let (_, mz) = run_to_completion(Algorithm::Multizip, &truth).unwrap();
        prop_assert_eq!(pairs(&td), pairs(&bu));
        prop_assert_eq!(pairs(&td), pairs(&mz));
    }

    #[test]
    fn quicksort_and_asort_compare_the_same_pairs(truth in permutation(64)) {
        let (_, q) = run_to_completion(Algorithm::Quicksort, &truth).unwrap();
        let (_, a) = run_to_completion(Algorithm::Asort, &truth).unwrap();
        prop_assert_eq!(pairs(&q), pairs(&a));
    }

    #[test]
    fn mergesort_worst_case_bound(truth in permutation(64)) {
        let n = truth.len();
        let lg = n.next_power_of_two().trailing_zeros() as usize;
        let bound = n * lg + 1 - (1 << lg);
        for alg in [Algorithm::TopdownMerge, Algorithm::BottomupMerge, Algorithm::Multizip] {
            let (count, _) = run_to_completion(alg, &truth).unwrap();
            prop_assert!(count <= bound, "{} used {} > {}", alg, count, bound);
        }
    }
}

proptest! {
    #![proptest_config(config(1000, 22))]

    #[test]
    fn every_algorithm_sorts(truth in permutation(128)) {
        let n = truth.len();
        for alg in Algorithm::ALL {
            let mut s = make_sorter(alg, n).unwrap();
            let (count, _) = s.run_to_completion(&truth).unwrap();
            prop_assert_eq!(count, s.comparisons_done());
            prop_assert!(s.is_done() && s.order().is_total());
            prop_assert_eq!(&s.rho_estimate(), &truth.sorted_order());
            if let Some(native) = s.native_estimate() {
                prop_assert_eq!(&native, &truth.sorted_order(), "{}", alg);
            }
            if alg == Algorithm::Corsort {
                prop_assert!(count <= n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn schedules_only_ask_unknown_pairs(truth in permutation(64)) {
        for alg in Algorithm::ALL.into_iter().filter(|&a| !revisits_pairs(a)) {
            let mut s = make_sorter(alg, truth.len()).unwrap();
            let mut seen = HashSet::new();
            while let Step::Compare(p) = s.next_pair().unwrap() {
                prop_assert!(!s.order().comparable(p.i, p.j), "{} asked a known pair", alg);
                prop_assert!(seen.insert((p.i.min(p.j), p.i.max(p.j))));
                s.record_outcome(p, smaller(&truth, p)).unwrap();
            }
        }
    }

    #[test]
    fn runs_are_deterministic(truth in permutation(48)) {
        for alg in Algorithm::ALL {
            let a = run_to_completion(alg, &truth).unwrap();
            let b = run_to_completion(alg, &truth).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn revisiting_schedules_stay_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut repeats = 0;
    for _ in 0..50 {
        let mut v: Vec<usize> = (1..=40).collect();
        v.shuffle(&mut rng);
        let truth = Permutation::new(v).unwrap();
        for alg in [Algorithm::Heapsort, Algorithm::Shellsort] {
            let (_, h) = run_to_completion(alg, &truth).unwrap();
            repeats += h.len() - pairs(&h).into_iter().collect::<HashSet<_>>().len();
        }
    }
    assert!(repeats > 0);
}

#[test]
fn contradicting_a_known_pair_is_rejected() {
    let truth = Permutation::new((1..=16).rev().collect()).unwrap();
    let mut s = make_sorter(Algorithm::Heapsort, 16).unwrap();
    while let Step::Compare(p) = s.next_pair().unwrap() {
        if s.order().comparable(p.i, p.j) {
            let wrong = if smaller(&truth, p) == p.i { p.j } else { p.i };
            assert!(matches!(s.record_outcome(p, wrong), Err(CoreError::Consistency { .. })));
            return;
        }
        s.record_outcome(p, smaller(&truth, p)).unwrap();
    }
    panic!("heapsort never revisited a pair");
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            rec(v, k + 1, f);
            v.swap(k, i);
        }
    }
    rec(&mut (1..=n).collect(), 0, f);
}

#[test]
fn ford_johnson_worst_case_is_merge_insertion_bound() {
    // F(n) = Σ_{k=1..n} ⌈log₂(3k/4)⌉
    let bound = |n: usize| -> usize {
        (1..=n)
            .map(|k| {
                let x = 3 * k;
                let mut c = 0;
                while (4usize << c) < x {
                    c += 1;
                }
                c
            })
            .sum()
    };
    let known = [0, 1, 3, 5, 7, 10, 13, 16];
    for n in 1..=8 {
        let mut worst = 0;
        for_each_permutation(n, &mut |v| {
            let (c, _) = run_to_completion(Algorithm::FordJohnson, &Permutation::new(v.to_vec()).unwrap()).unwrap();
            worst = worst.max(c);
        });
        assert_eq!(worst, bound(n), "n={n}");
        assert_eq!(worst, known[n - 1], "n={n}");
    }
}

fn random_order(rng: &mut impl Rng, n: usize) -> OrderMatrix {
    let mut ranks: Vec<usize> = (0..n).collect();
    ranks.shuffle(rng);
    let mut m = OrderMatrix::new(n);
    let k = rng.gen_range(0..=n * (n - 1) / 2);
    for _ in 0..k {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let (lo, hi) = if ranks[i] < ranks[j] { (i, j) } else { (j, i) };
            m.insert(lo, hi).unwrap();
        }
    }
    m
}

#[test]
fn corsort_select_matches_exhaustive_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0;
    while checked < 2000 {
        let n = rng.gen_range(2..=8);
        let m = random_order(&mut rng, n);
        if m.is_total() {
            assert!(corsort_select(&m).is_err());
            continue;
        }
        assert_eq!(corsort_select(&m).unwrap(), corsort_select_exhaustive(&m).unwrap());
        checked += 1;
    }
}

#[test]
fn single_items_need_no_comparison() {
    for alg in Algorithm::ALL {
        let mut s = make_sorter(alg, 1).unwrap();
        assert!(s.is_done());
        assert_eq!(s.next_pair().unwrap(), Step::Done);
        assert_eq!(run_to_completion(alg, &Permutation::identity(1)).unwrap().0, 0);
    }
}

#[test]
fn two_items_take_one_comparison() {
    for alg in Algorithm::ALL {
        for truth in [vec![1, 2], vec![2, 1]] {
            let truth = Permutation::new(truth).unwrap();
            let mut s = make_sorter(alg, 2).unwrap();
            let Step::Compare(p) = s.next_pair().unwrap() else { panic!("{alg} is done") };
            assert_eq!((p.i.min(p.j), p.i.max(p.j)), (0, 1));
            s.record_outcome(p, smaller(&truth, p)).unwrap();
            assert!(s.is_done());
            assert_eq!(s.rho_estimate(), truth.sorted_order());
        }
    }
}

#[test]
fn protocol_misuse_is_a_state_error() {
    let mut s = make_sorter(Algorithm::Multizip, 4).unwrap();
    assert!(matches!(s.record_outcome(PendingPair::new(0, 1), 0), Err(CoreError::State(_))));
    let Step::Compare(p) = s.next_pair().unwrap() else { unreachable!() };
    assert!(matches!(s.next_pair(), Err(CoreError::State(_))));
    assert!(matches!(s.record_outcome(PendingPair::new(2, 3), 2), Err(CoreError::State(_))));
    assert!(matches!(s.record_outcome(p, 3), Err(CoreError::Argument(_))));
    assert_eq!(s.comparisons_done(), 0);
    s.record_outcome(p, p.j).unwrap();
    assert_eq!(s.history(), &[ComparisonRecord::new(p.j, p.i)]);
}

#[test]
fn empty_lists_and_unknown_ids_are_rejected() {
    assert!(matches!(make_sorter(Algorithm::Corsort, 0), Err(CoreError::Argument(_))));
    assert!(matches!("selection_sort".parse::<Algorithm>(), Err(CoreError::UnknownAlgorithm(_))));
    for alg in Algorithm::ALL {
        assert_eq!(alg.id().parse::<Algorithm>().unwrap(), alg);
    }
}

#[test]
fn native_estimates() {
    for alg in Algorithm::ALL {
        let s = make_sorter(alg, 6).unwrap();
        match s.native_estimate() {
            Some(e) if alg == Algorithm::Heapsort => assert_eq!(e.0, (0..6).rev().collect::<Vec<_>>()),
            Some(e) => assert_eq!(e.0, (0..6).collect::<Vec<_>>(), "{alg}"),
            None => assert!(!alg.has_native_estimator()),
        }
        assert_eq!(s.rho_estimate().0, (0..6).collect::<Vec<_>>());
    }
    assert!(make_sorter(Algorithm::FordJohnson, 6).unwrap().native_estimate().is_none());
    assert!(make_sorter(Algorithm::Corsort, 6).unwrap().native_estimate().is_none());
}

#[test]
fn heapsort_native_estimate_reads_heap_backwards() {
    let truth = Permutation::new(vec![3, 1, 2]).unwrap();
    let mut s = make_sorter(Algorithm::Heapsort, 3).unwrap();
    // Build: children (1,2) then the root against the larger child.
    let mut seen = Vec::new();
    while let Step::Compare(p) = s.next_pair().unwrap() {
        s.record_outcome(p, smaller(&truth, p)).unwrap();
        seen.push(s.native_estimate().unwrap().map(truth.ranks()));
    }
    assert_eq!(seen.len(), 3);
    assert_eq!(seen[0], vec![2, 1, 3]);
    // Building is over and 3 has been swapped into the sorted tail.
    assert_eq!(seen[1], vec![1, 2, 3]);
    assert_eq!(seen[2], vec![1, 2, 3]);
}

#[test]
fn corsort_starts_with_first_two_items() {
    let mut s = make_sorter(Algorithm::Corsort, 5).unwrap();
    assert_eq!(s.next_pair().unwrap(), Step::Compare(PendingPair::new(0, 1)));
}

#[test]
fn multizip_takes_fifteen_comparisons_on_example() {
    let truth = Permutation::new(vec![5, 1, 8, 7, 2, 6, 4, 3]).unwrap();
    assert_eq!(run_to_completion(Algorithm::Multizip, &truth).unwrap().0, 15);
}
