//! Anytime comparison sorting.
//!
//! Sorting algorithms are exposed as stepwise [`Sorter`]s that emit one
//! comparison at a time and can be interrupted between any two comparisons.
//! The partial order learnt so far lives in an [`OrderMatrix`]; estimators
//! turn it into a tentative arrangement whose quality is measured with
//! Spearman's footrule.

pub mod algorithms;
pub mod error;
pub mod footrule;
pub mod linext;
pub mod order;
pub mod reference;
pub mod scores;
pub mod types;

pub use algorithms::{make_sorter, run_to_completion, Algorithm, PendingPair, Sorter, Step};
pub use error::{CoreError, Result};
pub use footrule::{footrule, max_footrule, normalized_footrule};
pub use linext::{
    count_linear_extensions, enumerate_linear_extensions, expected_footrule, is_linear_extension,
    median_rank_scores, EnumerationLimit,
};
pub use order::{closure_from_history, closure_insert, OrderMatrix};
pub use scores::{compute_scores, delta_estimate, rho_estimate, score_and_sort, ItemScore, Rho, ScoreSet};
pub use types::{ComparisonRecord, Estimate, Permutation};
