//! Sufficient-condition checkers for the "none whipped" outcome.
//!
//! Two independent certificates guarantee that a forced-distribution policy
//! cannot single anyone out:
//!
//! * a symmetric election matrix (every pair splits evenly, so every pair
//!   socially ties), and
//! * palindromic rows of the sum (equivalently, mean) matrix — the dual
//!   relation: entry (i, k) equals entry (i, m+1-k) in 1-based columns.
//!
//! A uniform mean matrix (every entry 1/m) is a special case of the dual
//! relation, and the dual relation forces every alternative's mean rank to
//! the common center (m+1)/2, hence equal Borda-style scores. Neither
//! certificate is necessary: cyclic profiles can spare everyone while
//! failing both.
//!
//! Each checker returns `None` when the condition holds, or the
//! lexicographically smallest violation as a witness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::majority::{election_matrix, ElectionMatrix};
use crate::model::Profile;
use crate::prefmaps::{mean_matrix, mean_rank, sum_matrix, RationalMatrix};

/// Outcome of the four checks for one profile. Index pairs are 0-based; the
/// second component of `nonuniform_witness` and `dual_witness` is a 0-based
/// position column (the dual partner column is `m - 1 - position`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub election_symmetric: bool,
    pub mean_uniform: bool,
    pub dual_relation: bool,
    pub borda_equal: bool,
    /// Pair (i, k), i < k, with unequal win counts.
    pub asymmetry_witness: Option<(usize, usize)>,
    /// (alternative, position) whose mean entry differs from 1/m.
    pub nonuniform_witness: Option<(usize, usize)>,
    /// (alternative, position) whose entry differs from its mirrored column.
    pub dual_witness: Option<(usize, usize)>,
    /// Pair (i, k) of alternatives with different mean ranks.
    pub borda_witness: Option<(usize, usize)>,
}

/// Checks `count(i, k) == count(k, i)` for every pair. `None` means the
/// election matrix is symmetric; otherwise the smallest violating pair.
pub fn check_election_symmetry(matrix: &ElectionMatrix) -> Option<(usize, usize)> {
    let m = matrix.dimension();
    for i in 0..m {
        for k in (i + 1)..m {
            if matrix.count(i, k) != matrix.count(k, i) {
                return Some((i, k));
            }
        }
    }
    None
}

/// Checks that every entry of a mean matrix equals 1/m exactly.
pub fn check_mean_uniform(mean: &RationalMatrix) -> Option<(usize, usize)> {
    let m = mean.dimension();
    let share = BigRational::new(BigInt::one(), BigInt::from(m));
    for i in 0..m {
        for k in 0..m {
            if mean.entry(i, k) != &share {
                return Some((i, k));
            }
        }
    }
    None
}

/// Checks the dual relation: every row palindromic under the column pairing
/// k <-> m+1-k (1-based). For odd m the middle column is self-paired and
/// unconstrained. Sum and mean matrices give identical results since they
/// differ by the scalar n.
pub fn check_dual_relation(matrix: &RationalMatrix) -> Option<(usize, usize)> {
    let m = matrix.dimension();
    for i in 0..m {
        for k in 0..m / 2 {
            if matrix.entry(i, k) != matrix.entry(i, m - 1 - k) {
                return Some((i, k));
            }
        }
    }
    None
}

/// Checks that all alternatives have the same mean rank. `None` means equal;
/// otherwise the smallest pair of alternatives whose ranks differ.
pub fn check_borda_equal(mean: &RationalMatrix) -> Option<(usize, usize)> {
    let m = mean.dimension();
    if m == 0 {
        return None;
    }
    let first = mean_rank(mean, 0).expect("index 0 is in range");
    for i in 1..m {
        if mean_rank(mean, i).expect("index in range") != first {
            return Some((0, i));
        }
    }
    None
}

/// Runs all four checkers on the matrices derived from one profile.
pub fn full_condition_report(profile: &Profile) -> ConditionReport {
    let election = election_matrix(profile);
    let sum = sum_matrix(profile);
    let mean = mean_matrix(profile);
    let asymmetry_witness = check_election_symmetry(&election);
    let nonuniform_witness = check_mean_uniform(&mean);
    let dual_witness = check_dual_relation(&sum);
    let borda_witness = check_borda_equal(&mean);
    ConditionReport {
        election_symmetric: asymmetry_witness.is_none(),
        mean_uniform: nonuniform_witness.is_none(),
        dual_relation: dual_witness.is_none(),
        borda_equal: borda_witness.is_none(),
        asymmetry_witness,
        nonuniform_witness,
        dual_witness,
        borda_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{AlternativeRoster, WeakOrder};

    fn order(classes: &[&[usize]], m: usize) -> WeakOrder {
        WeakOrder::new(classes.iter().map(|c| c.to_vec()).collect(), m).unwrap()
    }

    fn strict(m: usize, seq: &[usize]) -> WeakOrder {
        WeakOrder::new(seq.iter().map(|&i| vec![i]).collect(), m).unwrap()
    }

    fn five_criteria_profile() -> Profile {
        let roster = AlternativeRoster::numbered(4).unwrap();
        Profile::from_orders(
            roster,
            vec![
                order(&[&[0], &[1, 2, 3]], 4),
                order(&[&[1, 2, 3], &[0]], 4),
                order(&[&[0, 1], &[2, 3]], 4),
                order(&[&[2, 3], &[0, 1]], 4),
                order(&[&[0, 1, 2, 3]], 4),
            ],
        )
        .unwrap()
    }

    fn six_strict_criteria_profile() -> Profile {
        let roster = AlternativeRoster::numbered(4).unwrap();
        let seqs: [[usize; 4]; 6] = [
            [0, 1, 2, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [1, 2, 3, 0],
            [2, 3, 1, 0],
            [3, 1, 2, 0],
        ];
        Profile::from_orders(roster, seqs.iter().map(|s| strict(4, s)).collect()).unwrap()
    }

    fn cyclic_three_profile() -> Profile {
        let roster = AlternativeRoster::numbered(3).unwrap();
        Profile::new(
            roster,
            vec![
                (strict(3, &[0, 1, 2]), 2),
                (strict(3, &[1, 2, 0]), 2),
                (strict(3, &[2, 0, 1]), 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn symmetry_holds_for_five_criteria_profile() {
        let em = election_matrix(&five_criteria_profile());
        assert_eq!(check_election_symmetry(&em), None);
    }

    #[test]
    fn symmetry_fails_for_cyclic_three() {
        let em = election_matrix(&cyclic_three_profile());
        assert_eq!(check_election_symmetry(&em), Some((0, 1)));
    }

    #[test]
    fn zero_matrix_is_symmetric() {
        let em = crate::majority::ElectionMatrix::from_counts(
            vec![vec![0, 0], vec![0, 0]],
            1,
        )
        .unwrap();
        assert_eq!(check_election_symmetry(&em), None);
    }

    #[test]
    fn uniform_mean_of_total_indifference() {
        let roster = AlternativeRoster::numbered(3).unwrap();
        let profile = Profile::from_orders(roster, vec![order(&[&[0, 1, 2]], 3)]).unwrap();
        assert_eq!(check_mean_uniform(&mean_matrix(&profile)), None);
    }

    #[test]
    fn five_criteria_mean_is_not_uniform() {
        let mean = mean_matrix(&five_criteria_profile());
        // entry (x1, position 1) is 7/20, not 1/4
        assert_eq!(check_mean_uniform(&mean), Some((0, 0)));
    }

    #[test]
    fn opposite_pair_gives_uniform_mean() {
        let roster = AlternativeRoster::numbered(2).unwrap();
        let profile =
            Profile::from_orders(roster, vec![strict(2, &[0, 1]), strict(2, &[1, 0])]).unwrap();
        assert_eq!(check_mean_uniform(&mean_matrix(&profile)), None);
    }

    #[test]
    fn dual_relation_holds_for_five_criteria() {
        assert_eq!(check_dual_relation(&sum_matrix(&five_criteria_profile())), None);
    }

    #[test]
    fn dual_relation_holds_for_six_strict_criteria() {
        assert_eq!(
            check_dual_relation(&sum_matrix(&six_strict_criteria_profile())),
            None
        );
    }

    #[test]
    fn dual_relation_fails_for_cyclic_three() {
        // row x1 (2,1,2) is palindromic; row x2 (2,2,1) breaks at column 1
        assert_eq!(
            check_dual_relation(&sum_matrix(&cyclic_three_profile())),
            Some((1, 0))
        );
    }

    #[test]
    fn borda_equal_for_five_criteria() {
        assert_eq!(check_borda_equal(&mean_matrix(&five_criteria_profile())), None);
    }

    #[test]
    fn borda_equal_for_six_strict_criteria() {
        assert_eq!(
            check_borda_equal(&mean_matrix(&six_strict_criteria_profile())),
            None
        );
    }

    #[test]
    fn borda_unequal_for_unanimous_pair() {
        let roster = AlternativeRoster::numbered(2).unwrap();
        let profile = Profile::from_orders(roster, vec![strict(2, &[0, 1])]).unwrap();
        assert_eq!(check_borda_equal(&mean_matrix(&profile)), Some((0, 1)));
    }

    #[test]
    fn borda_unequal_for_cyclic_three() {
        // mean ranks are 2, 9/5, 11/5
        let mean = mean_matrix(&cyclic_three_profile());
        assert_eq!(mean_rank(&mean, 0).unwrap(), "2".parse().unwrap());
        assert_eq!(mean_rank(&mean, 1).unwrap(), "9/5".parse().unwrap());
        assert_eq!(mean_rank(&mean, 2).unwrap(), "11/5".parse().unwrap());
        assert_eq!(check_borda_equal(&mean), Some((0, 1)));
    }

    #[test]
    fn full_report_five_criteria() {
        let report = full_condition_report(&five_criteria_profile());
        assert!(report.election_symmetric);
        assert!(!report.mean_uniform);
        assert!(report.dual_relation);
        assert!(report.borda_equal);
        assert_eq!(report.nonuniform_witness, Some((0, 0)));
    }

    #[test]
    fn full_report_six_strict_criteria() {
        let report = full_condition_report(&six_strict_criteria_profile());
        assert!(!report.election_symmetric);
        assert!(!report.mean_uniform);
        assert!(report.dual_relation);
        assert!(report.borda_equal);
        // x2 beats x3 four criteria to two
        assert_eq!(report.asymmetry_witness, Some((1, 2)));
    }

    #[test]
    fn full_report_cyclic_three_fails_everything() {
        let report = full_condition_report(&cyclic_three_profile());
        assert!(!report.election_symmetric);
        assert!(!report.mean_uniform);
        assert!(!report.dual_relation);
        assert!(!report.borda_equal);
        assert_eq!(report.asymmetry_witness, Some((0, 1)));
        assert_eq!(report.dual_witness, Some((1, 0)));
    }

    #[test]
    fn dual_check_agrees_on_sum_and_mean() {
        for profile in [
            five_criteria_profile(),
            six_strict_criteria_profile(),
            cyclic_three_profile(),
        ] {
            assert_eq!(
                check_dual_relation(&sum_matrix(&profile)),
                check_dual_relation(&mean_matrix(&profile))
            );
        }
    }

    #[test]
    fn odd_middle_column_is_unconstrained() {
        // rows palindromic in columns 1 and 3; column 2 differs per row
        let rows = vec![
            vec!["1/4", "1/2", "1/4"],
            vec!["1/4", "1/2", "1/4"],
            vec!["1/2", "0", "1/2"],
        ];
        let matrix = RationalMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(check_dual_relation(&matrix), None);
    }
}
