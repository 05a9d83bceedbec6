//! Worked examples with known answers.
//!
//! Each check replays a small, fully specified example and compares every
//! intermediate value against the published one. A check never panics on a
//! mismatch; it collects one line per difference so callers can print a diff.

use crate::algorithms::{corsort_select, trace::trace, Algorithm, PendingPair};
use crate::error::{CoreError, Result};
use crate::footrule::footrule;
use crate::linext::{count_linear_extensions, expected_footrule, is_linear_extension, median_rank_scores, EnumerationLimit};
use crate::order::OrderMatrix;
use crate::scores::{delta_estimate, rho_estimate, score_and_sort};
use crate::types::{Estimate, Permutation};

/// Identifiers accepted by [`run_check`], in report order.
pub const CHECK_IDS: [&str; 4] = ["fig1", "fig3", "fig4", "fig6"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: &'static str,
    pub title: &'static str,
    pub mismatches: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn run_check(id: &str) -> Result<CheckReport> {
    match id {
        "fig1" => Ok(merge_traces()),
        "fig3" => Ok(quick_traces()),
        "fig4" => Ok(poset_estimators()),
        "fig6" => Ok(corsort_walkthrough(corsort_select)),
        other => Err(CoreError::Argument(format!(
            "unknown check {other:?}, expected one of {}",
            CHECK_IDS.join(", ")
        ))),
    }
}

pub fn run_all() -> Vec<CheckReport> {
    CHECK_IDS.iter().map(|id| run_check(id).expect("known id")).collect()
}

const MERGE_INPUT: [usize; 8] = [5, 1, 8, 7, 2, 6, 4, 3];
const QUICK_INPUT: [usize; 7] = [3, 2, 4, 6, 7, 1, 5];
pub const CORSORT_INPUT: [usize; 5] = [4, 2, 3, 1, 5];

/// Comparisons as pairs of values, in emission order.
const TOPDOWN_PAIRS: [(usize, usize); 15] = [
    (5, 1), (8, 7), (1, 7), (5, 7), (2, 6), (4, 3), (2, 3), (6, 3),
    (6, 4), (1, 2), (5, 2), (5, 3), (5, 4), (5, 6), (7, 6),
];
const BOTTOMUP_PAIRS: [(usize, usize); 15] = [
    (5, 1), (8, 7), (2, 6), (4, 3), (1, 7), (5, 7), (2, 3), (6, 3),
    (6, 4), (1, 2), (5, 2), (5, 3), (5, 4), (5, 6), (7, 6),
];
const MULTIZIP_PAIRS: [(usize, usize); 15] = [
    (5, 1), (8, 7), (2, 6), (4, 3), (1, 7), (2, 3), (5, 7), (6, 3),
    (6, 4), (1, 2), (5, 2), (5, 3), (5, 4), (5, 6), (7, 6),
];
const QUICKSORT_PAIRS: [(usize, usize); 12] = [
    (3, 2), (3, 4), (3, 6), (3, 7), (3, 1), (3, 5),
    (2, 1), (4, 6), (4, 7), (4, 5), (6, 7), (6, 5),
];
const ASORT_PAIRS: [(usize, usize); 12] = [
    (3, 2), (3, 4), (3, 6), (3, 7), (3, 1), (3, 5),
    (4, 6), (4, 7), (4, 5), (2, 1), (6, 7), (6, 5),
];
/// Bottom-up merge arrangement once the first level of merges is done.
const BOTTOMUP_AFTER_FOUR: [usize; 8] = [1, 5, 7, 8, 2, 6, 3, 4];

/// ρ-estimates (as values) and their errors after 0..=7 Corsort comparisons.
const CORSORT_ESTIMATES: [[usize; 5]; 8] = [
    [4, 2, 3, 1, 5],
    [2, 3, 1, 5, 4],
    [2, 1, 5, 4, 3],
    [1, 2, 3, 5, 4],
    [1, 2, 3, 5, 4],
    [2, 1, 3, 4, 5],
    [2, 1, 3, 4, 5],
    [1, 2, 3, 4, 5],
];
const CORSORT_ERRORS: [u64; 8] = [6, 6, 6, 2, 2, 2, 2, 0];

pub const POSET_LABELS: &str = "abcdefghijklmnopq";
const POSET_DELTA: &str = "cdefghiajbklmnpoq";
const POSET_RHO: &str = "cdefgahijklbmnpoq";
const POSET_MEDIAN: &str = "cdefaghijklmbnpoq";
const POSET_EXTENSIONS: u64 = 408;

fn perm(values: &[usize]) -> Permutation {
    Permutation::new(values.to_vec()).expect("reference inputs are permutations")
}

fn value_pairs(alg: Algorithm, values: &[usize]) -> Result<Vec<(usize, usize)>> {
    Ok(trace(alg, &perm(values))?
        .iter()
        .map(|l| (values[l.i], values[l.j]))
        .collect())
}

fn sorted_pairs(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v: Vec<_> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    v.sort_unstable();
    v
}

fn fmt_pairs(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(a, b)| format!("({a},{b})")).collect()
}

fn fmt_values(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect()
}

fn compare_pairs(out: &mut Vec<String>, alg: Algorithm, values: &[usize], expected: &[(usize, usize)]) {
    match value_pairs(alg, values) {
        Ok(got) if got == expected => {}
        Ok(got) => out.push(format!(
            "{alg}: expected {} got {}",
            fmt_pairs(expected),
            fmt_pairs(&got)
        )),
        Err(e) => out.push(format!("{alg}: {e}")),
    }
}

/// Merge family on (51872643): exact schedules, shared comparison multiset
/// and the bottom-up arrangement after the first level.
pub fn merge_traces() -> CheckReport {
    let mut out = Vec::new();
    compare_pairs(&mut out, Algorithm::TopdownMerge, &MERGE_INPUT, &TOPDOWN_PAIRS);
    compare_pairs(&mut out, Algorithm::BottomupMerge, &MERGE_INPUT, &BOTTOMUP_PAIRS);
    compare_pairs(&mut out, Algorithm::Multizip, &MERGE_INPUT, &MULTIZIP_PAIRS);
    let reference = sorted_pairs(&MULTIZIP_PAIRS);
    for alg in [Algorithm::TopdownMerge, Algorithm::BottomupMerge] {
        if let Ok(got) = value_pairs(alg, &MERGE_INPUT) {
            if sorted_pairs(&got) != reference {
                out.push(format!("{alg}: comparison multiset differs from multizip"));
            }
        }
    }
    match arrangement_after(Algorithm::BottomupMerge, &MERGE_INPUT, 4) {
        Ok(got) if got == BOTTOMUP_AFTER_FOUR => {}
        Ok(got) => out.push(format!(
            "bottomup_merge after 4 comparisons: expected {} got {}",
            fmt_values(&BOTTOMUP_AFTER_FOUR),
            fmt_values(&got)
        )),
        Err(e) => out.push(format!("bottomup_merge: {e}")),
    }
    CheckReport { id: "fig1", title: "merge family on 51872643", mismatches: out }
}

fn arrangement_after(alg: Algorithm, values: &[usize], k: usize) -> Result<Vec<usize>> {
    let truth = perm(values);
    let mut s = crate::make_sorter(alg, values.len())?;
    for _ in 0..k {
        match s.next_pair()? {
            crate::Step::Compare(p) => s.record_outcome(p, if truth.less(p.i, p.j) { p.i } else { p.j })?,
            crate::Step::Done => break,
        }
    }
    let est = s
        .native_estimate()
        .ok_or_else(|| CoreError::State(format!("{alg} has no native estimate")))?;
    Ok(est.map(values))
}

/// Quicksort and ASort on (3246715).
pub fn quick_traces() -> CheckReport {
    let mut out = Vec::new();
    compare_pairs(&mut out, Algorithm::Quicksort, &QUICK_INPUT, &QUICKSORT_PAIRS);
    compare_pairs(&mut out, Algorithm::Asort, &QUICK_INPUT, &ASORT_PAIRS);
    if sorted_pairs(&QUICKSORT_PAIRS) != sorted_pairs(&ASORT_PAIRS) {
        out.push("reference schedules disagree on the comparison multiset".into());
    }
    if let (Ok(q), Ok(a)) = (
        value_pairs(Algorithm::Quicksort, &QUICK_INPUT),
        value_pairs(Algorithm::Asort, &QUICK_INPUT),
    ) {
        if sorted_pairs(&q) != sorted_pairs(&a) {
            out.push("quicksort and asort compare different pairs".into());
        }
    }
    CheckReport { id: "fig3", title: "quicksort and asort on 3246715", mismatches: out }
}

/// The 17-element poset a≺b, c≺d≺…≺n≺o, n≺p≺q over items a..q.
pub fn example_poset() -> OrderMatrix {
    let idx = |c: char| (c as u8 - b'a') as usize;
    let mut m = OrderMatrix::new(POSET_LABELS.len());
    let mut edges = vec![('a', 'b'), ('n', 'p'), ('p', 'q')];
    let chain: Vec<char> = "cdefghijklmno".chars().collect();
    edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    for (lo, hi) in edges {
        m.insert(idx(lo), idx(hi)).expect("poset edges are consistent");
    }
    m
}

fn labels(est: &Estimate) -> String {
    let l: Vec<char> = POSET_LABELS.chars().collect();
    est.items().iter().map(|&i| l[i]).collect()
}

/// Δ, ρ and median-rank estimators on [`example_poset`].
pub fn poset_estimators() -> CheckReport {
    let mut out = Vec::new();
    let m = example_poset();
    let limit = EnumerationLimit::default();
    match count_linear_extensions(&m, limit) {
        Ok(POSET_EXTENSIONS) => {}
        Ok(c) => out.push(format!("linear extensions: expected {POSET_EXTENSIONS} got {c}")),
        Err(e) => out.push(format!("linear extensions: {e}")),
    }
    let median = median_rank_scores(&m, limit).map(|s| score_and_sort(&s));
    let rows = [
        ("delta", Ok(delta_estimate(&m)), POSET_DELTA, "16.2"),
        ("rho", Ok(rho_estimate(&m)), POSET_RHO, "14.0"),
        ("median", median, POSET_MEDIAN, "13.9"),
    ];
    for (name, est, want, want_mean) in rows {
        let est = match est {
            Ok(e) => e,
            Err(e) => {
                out.push(format!("{name}: {e}"));
                continue;
            }
        };
        let got = labels(&est);
        if got != want {
            out.push(format!("{name} estimate: expected {want} got {got}"));
        }
        if !is_linear_extension(&m, &est) {
            out.push(format!("{name} estimate is not a linear extension"));
            continue;
        }
        match expected_footrule(&m, &est, limit) {
            Ok(mean) if format!("{mean:.1}") == want_mean => {}
            Ok(mean) => out.push(format!("{name} mean error: expected {want_mean} got {mean:.3}")),
            Err(e) => out.push(format!("{name} mean error: {e}")),
        }
    }
    CheckReport { id: "fig4", title: "estimators on the 17-element poset", mismatches: out }
}

/// Corsort on (42315) driven by `select`; the published run uses
/// [`corsort_select`]. Any other selector is expected to produce a diff.
pub fn corsort_walkthrough(select: impl Fn(&OrderMatrix) -> Result<PendingPair>) -> CheckReport {
    let mut out = Vec::new();
    let truth = perm(&CORSORT_INPUT);
    let mut m = OrderMatrix::new(CORSORT_INPUT.len());
    for (k, (want, want_s)) in CORSORT_ESTIMATES.iter().zip(CORSORT_ERRORS).enumerate() {
        if k > 0 {
            let p = match select(&m) {
                Ok(p) => p,
                Err(e) => {
                    out.push(format!("step {k}: {e}"));
                    break;
                }
            };
            let (lo, hi) = if truth.less(p.i, p.j) { (p.i, p.j) } else { (p.j, p.i) };
            if let Err(e) = m.insert(lo, hi) {
                out.push(format!("step {k}: {e}"));
                break;
            }
        }
        let est = rho_estimate(&m);
        let got = est.map(&CORSORT_INPUT);
        let s = footrule(&est, &truth).expect("sizes match");
        if got != want || s != want_s {
            out.push(format!(
                "step {k}: expected {} (S={want_s}) got {} (S={s})",
                fmt_values(want),
                fmt_values(&got)
            ));
        }
    }
    if out.is_empty() && !m.is_total() {
        out.push("order not total after 7 comparisons".into());
    }
    CheckReport { id: "fig6", title: "corsort on 42315", mismatches: out }
}
