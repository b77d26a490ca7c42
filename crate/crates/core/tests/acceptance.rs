//! Acceptance suite: golden aggregations, exhaustive implication sweeps,
//! seeded property checks, and simulation calibration. Each criterion prints
//! one PASS line (visible with `--nocapture`) and enforces its runtime
//! budget. All matrix assertions are exact rational equality.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankyank::{
    check_dual_relation, check_election_symmetry, classify_outcome, election_matrix,
    estimate_none_whipped_probability, full_condition_report, majority_relation, mean_matrix,
    ppm, preference_map, sum_matrix, verify_implications, whip_verdict, AlternativeRoster,
    Culture, EnumerationScope, MajorityComparison, OutcomeKind, Profile, SimulationConfig,
};

use common::{cyclic_three_profile, five_criteria_profile, rat, six_strict_criteria_profile};

fn assert_matrix_rows(matrix: &rankyank::RationalMatrix, rows: &[&[&str]]) {
    assert_eq!(matrix.dimension(), rows.len());
    for (i, row) in rows.iter().enumerate() {
        for (k, entry) in row.iter().enumerate() {
            assert_eq!(
                matrix.entry(i, k),
                &rat(entry),
                "entry ({i}, {k}) mismatch"
            );
        }
    }
}

#[test]
fn criterion_1_five_weak_criteria_golden() {
    let start = Instant::now();
    let profile = five_criteria_profile();

    let expected_ppms: [[[&str; 4]; 4]; 5] = [
        [
            ["1", "0", "0", "0"],
            ["0", "1/3", "1/3", "1/3"],
            ["0", "1/3", "1/3", "1/3"],
            ["0", "1/3", "1/3", "1/3"],
        ],
        [
            ["0", "0", "0", "1"],
            ["1/3", "1/3", "1/3", "0"],
            ["1/3", "1/3", "1/3", "0"],
            ["1/3", "1/3", "1/3", "0"],
        ],
        [
            ["1/2", "1/2", "0", "0"],
            ["1/2", "1/2", "0", "0"],
            ["0", "0", "1/2", "1/2"],
            ["0", "0", "1/2", "1/2"],
        ],
        [
            ["0", "0", "1/2", "1/2"],
            ["0", "0", "1/2", "1/2"],
            ["1/2", "1/2", "0", "0"],
            ["1/2", "1/2", "0", "0"],
        ],
        [
            ["1/4", "1/4", "1/4", "1/4"],
            ["1/4", "1/4", "1/4", "1/4"],
            ["1/4", "1/4", "1/4", "1/4"],
            ["1/4", "1/4", "1/4", "1/4"],
        ],
    ];
    for ((order, _), rows) in profile.entries().iter().zip(&expected_ppms) {
        let matrix = ppm(&preference_map(order));
        let rows: Vec<&[&str]> = rows.iter().map(|r| &r[..]).collect();
        assert_matrix_rows(matrix.as_matrix(), &rows);
    }

    let sum = sum_matrix(&profile);
    assert_matrix_rows(
        &sum,
        &[
            &["7/4", "3/4", "3/4", "7/4"],
            &["13/12", "17/12", "17/12", "13/12"],
            &["13/12", "17/12", "17/12", "13/12"],
            &["13/12", "17/12", "17/12", "13/12"],
        ],
    );

    assert_eq!(check_dual_relation(&sum), None);
    let outcome = classify_outcome(&majority_relation(&election_matrix(&profile)));
    assert_eq!(outcome.kind(), &OutcomeKind::AllIndifferent);
    assert!(whip_verdict(&outcome).none_whipped);

    assert!(start.elapsed() < Duration::from_secs(1));
    println!("acceptance 1 (five weak-order criteria golden): PASS");
}

#[test]
fn criterion_2_six_strict_criteria_golden() {
    let start = Instant::now();
    let profile = six_strict_criteria_profile();

    let sum = sum_matrix(&profile);
    assert_matrix_rows(
        &sum,
        &[
            &["3", "0", "0", "3"],
            &["1", "2", "2", "1"],
            &["1", "2", "2", "1"],
            &["1", "2", "2", "1"],
        ],
    );
    assert_eq!(check_dual_relation(&sum), None);

    let relation = majority_relation(&election_matrix(&profile));
    for k in 1..4 {
        assert_eq!(relation.compare(0, k), MajorityComparison::Ties);
    }
    assert_eq!(relation.compare(1, 2), MajorityComparison::StrictlyBeats);
    assert_eq!(relation.compare(2, 3), MajorityComparison::StrictlyBeats);
    assert_eq!(relation.compare(3, 1), MajorityComparison::StrictlyBeats);

    let outcome = classify_outcome(&relation);
    assert_eq!(outcome.kind(), &OutcomeKind::MixedConnected);
    assert!(whip_verdict(&outcome).none_whipped);

    assert!(start.elapsed() < Duration::from_secs(1));
    println!("acceptance 2 (six strict criteria golden): PASS");
}

#[test]
fn criterion_3_cyclic_three_golden() {
    let start = Instant::now();
    let profile = cyclic_three_profile();

    let sum = sum_matrix(&profile);
    assert_matrix_rows(&sum, &[&["2", "1", "2"], &["2", "2", "1"], &["1", "2", "2"]]);

    // both sufficient conditions fail, pinning non-necessity
    let election = election_matrix(&profile);
    assert!(check_election_symmetry(&election).is_some());
    assert!(check_dual_relation(&sum).is_some());

    let relation = majority_relation(&election);
    assert_eq!(relation.compare(0, 1), MajorityComparison::StrictlyBeats);
    assert_eq!(relation.compare(1, 2), MajorityComparison::StrictlyBeats);
    assert_eq!(relation.compare(2, 0), MajorityComparison::StrictlyBeats);

    let outcome = classify_outcome(&relation);
    assert_eq!(outcome.kind(), &OutcomeKind::PureCycle);
    assert!(whip_verdict(&outcome).none_whipped);

    assert!(start.elapsed() < Duration::from_secs(1));
    println!("acceptance 3 (cyclic three-alternative golden): PASS");
}

#[test]
fn criterion_4_exhaustive_implication_sweeps() {
    let start = Instant::now();

    let small = verify_implications(&EnumerationScope::new(3, 3).unwrap());
    assert_eq!(small.weak_orders, 13);
    assert_eq!(small.profiles_checked, 2197);
    assert!(
        small.counterexamples.is_empty(),
        "violations at m=3, n=3: {:?}",
        small.counterexamples
    );

    let wide = verify_implications(&EnumerationScope::new(4, 2).unwrap());
    assert_eq!(wide.weak_orders, 75);
    assert_eq!(wide.profiles_checked, 5625);
    assert!(
        wide.counterexamples.is_empty(),
        "violations at m=4, n=2: {:?}",
        wide.counterexamples
    );

    for report in [&small, &wide] {
        assert_eq!(
            report.all_indifferent + report.pure_cycle + report.mixed_connected + report.separable,
            report.profiles_checked
        );
        assert_eq!(
            report.none_whipped,
            report.all_indifferent + report.pure_cycle + report.mixed_connected
        );
    }

    assert!(start.elapsed() < Duration::from_secs(60));
    println!("acceptance 4 (exhaustive implication sweeps): PASS");
}

#[test]
fn criterion_5_seeded_property_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let one = BigRational::one();

    // doubly stochastic PPMs over 10^4 random weak orders, m up to 6
    for trial in 0..10_000usize {
        let m = 2 + trial % 5;
        let order = rankyank::sample_weak_order(m, Culture::UniformWeakOrders, &mut rng);
        let matrix = ppm(&preference_map(&order));
        for i in 0..m {
            assert_eq!(matrix.row_sum(i), one);
            assert_eq!(matrix.column_sum(i), one);
        }
    }

    // profile-level identities and permutation invariance over 10^3 profiles
    for _ in 0..1_000 {
        let m = rng.random_range(2..=5usize);
        let entries: Vec<_> = (0..rng.random_range(1..=5usize))
            .map(|_| {
                (
                    rankyank::sample_weak_order(m, Culture::UniformWeakOrders, &mut rng),
                    rng.random_range(1..=3u64),
                )
            })
            .collect();
        let roster = AlternativeRoster::numbered(m).unwrap();
        let profile = Profile::new(roster.clone(), entries).unwrap();

        let n = BigRational::from_integer(BigInt::from(profile.criterion_count()));
        let sum = sum_matrix(&profile);
        let mean = mean_matrix(&profile);
        for i in 0..m {
            assert_eq!(sum.row_sum(i), n);
            assert_eq!(sum.column_sum(i), n);
            assert_eq!(mean.row_sum(i), one);
            assert_eq!(mean.column_sum(i), one);
            for k in 0..m {
                assert_eq!(sum.entry(i, k), &(mean.entry(i, k) * &n));
            }
        }

        let mut shuffled = profile.entries().to_vec();
        shuffled.shuffle(&mut rng);
        let permuted = Profile::new(roster, shuffled).unwrap();
        assert_eq!(election_matrix(&profile), election_matrix(&permuted));
        let outcome = classify_outcome(&majority_relation(&election_matrix(&profile)));
        let outcome_permuted =
            classify_outcome(&majority_relation(&election_matrix(&permuted)));
        assert_eq!(outcome, outcome_permuted);
        assert_eq!(whip_verdict(&outcome), whip_verdict(&outcome_permuted));
        assert_eq!(
            full_condition_report(&profile),
            full_condition_report(&permuted)
        );
    }

    assert!(start.elapsed() < Duration::from_secs(30));
    println!("acceptance 5 (seeded property suite): PASS");
}

#[test]
fn criterion_6_simulation_calibration() {
    let start = Instant::now();

    let sweep = verify_implications(&EnumerationScope::new(3, 2).unwrap());
    assert_eq!(sweep.profiles_checked, 169);
    let exact = sweep.none_whipped as f64 / sweep.profiles_checked as f64;

    let config =
        SimulationConfig::new(3, 2, 100_000, 0xA11CE, Culture::UniformWeakOrders).unwrap();
    let estimate = estimate_none_whipped_probability(&config);
    assert!(estimate.std_error > 0.0);
    assert!(
        (estimate.point - exact).abs() <= 4.0 * estimate.std_error,
        "estimate {} vs exhaustive {} (4 SE = {})",
        estimate.point,
        exact,
        4.0 * estimate.std_error
    );

    let replay = estimate_none_whipped_probability(&config);
    assert_eq!(estimate, replay);

    assert!(start.elapsed() < Duration::from_secs(10));
    println!("acceptance 6 (simulation calibration): PASS");
}
