//! Majority-rule aggregation of multi-criteria ordinal rankings, with a
//! verdict on what a forced-distribution ("Rank and Yank") policy would do.
//!
//! Alternatives are evaluated under several criteria; each criterion ranks
//! all of them as a weak order (ties allowed). Criteria count equally, and
//! the simple majority rule aggregates: i socially beats k iff more criteria
//! strictly prefer i to k than the other way around. The aggregate need not
//! be an order — it can be a blanket indifference, a cycle, or a mix — and
//! forced ranking can reward or remove someone only when the outcome
//! separates into strata. This crate decides that verdict, checks two
//! sufficient conditions that certify nobody can be singled out (a symmetric
//! election matrix; palindromic rows of the sum/mean position-probability
//! matrix), and backs everything with an exhaustive small-scale oracle and a
//! Monte Carlo estimator.
//!
//! All aggregation arithmetic is exact (arbitrary-precision rationals);
//! equality in tests and checks is mathematical equality, never a tolerance.
//!
//! ```
//! use rankyank::{
//!     classify_outcome, election_matrix, full_condition_report, majority_relation,
//!     whip_verdict, AlternativeRoster, Profile, WeakOrder,
//! };
//!
//! // 2 criteria say a > b > c, 2 say b > c > a, 1 says c > a > b
//! let roster = AlternativeRoster::new(["a", "b", "c"]).unwrap();
//! let order = |seq: &[usize]| {
//!     WeakOrder::new(seq.iter().map(|&i| vec![i]).collect(), 3).unwrap()
//! };
//! let profile = Profile::new(
//!     roster,
//!     vec![
//!         (order(&[0, 1, 2]), 2),
//!         (order(&[1, 2, 0]), 2),
//!         (order(&[2, 0, 1]), 1),
//!     ],
//! )
//! .unwrap();
//!
//! let outcome = classify_outcome(&majority_relation(&election_matrix(&profile)));
//! assert!(whip_verdict(&outcome).none_whipped); // the outcome is a cycle
//! assert!(!full_condition_report(&profile).dual_relation); // yet no certificate holds
//! ```

pub mod conditions;
pub mod majority;
pub mod model;
pub mod oracle;
pub mod prefmaps;
pub mod sim;

pub use num_rational::BigRational;

pub use conditions::{
    check_borda_equal, check_dual_relation, check_election_symmetry, check_mean_uniform,
    full_condition_report, ConditionReport,
};
pub use majority::{
    classify_outcome, election_matrix, majority_relation, whip_verdict, ElectionMatrix,
    MajorityComparison, MajorityError, MajorityRelation, OutcomeClass, OutcomeKind, WhipVerdict,
};
pub use model::{AlternativeRoster, ModelError, PairwisePreference, Profile, WeakOrder};
pub use oracle::{
    enumerate_weak_orders, proper_dominant_subset, verify_implications, weak_order_count,
    Counterexample, EnumerationScope, Implication, OracleError, VerificationReport,
};
pub use prefmaps::{
    mean_matrix, mean_rank, ppm, preference_map, sum_matrix, PpmMatrix, PreferenceMap,
    PrefmapsError, RationalMatrix,
};
pub use sim::{
    estimate_none_whipped_probability, sample_weak_order, Culture, ProbabilityEstimate,
    SimError, SimulationConfig,
};
