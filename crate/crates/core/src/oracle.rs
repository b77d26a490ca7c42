//! Exhaustive verification at desk scale.
//!
//! Enumerates every weak-order profile for small m and n and checks each
//! implication the condition checkers promise, plus an independent
//! brute-force characterization of the verdict: nobody can be whipped iff no
//! proper subset of alternatives strictly beats everyone outside it. The
//! subset search never touches the digraph machinery, so the two routes
//! cross-check each other.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::conditions::{
    check_borda_equal, check_dual_relation, check_election_symmetry, check_mean_uniform,
};
use crate::majority::{
    classify_outcome, election_matrix, majority_relation, whip_verdict, ElectionMatrix,
    OutcomeKind,
};
use crate::model::{AlternativeRoster, Profile, WeakOrder};
use crate::prefmaps::{mean_matrix, mean_rank, sum_matrix};

/// Largest m for exhaustive weak-order enumeration (541 orders).
pub const MAX_ENUMERATION_ALTERNATIVES: usize = 5;
/// Largest criterion count for an enumeration sweep.
pub const MAX_ENUMERATION_CRITERIA: usize = 4;
/// Cap on the number of ordered profiles a sweep may visit.
pub const MAX_PROFILE_SPACE: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs at least 2 alternatives, got {m}")]
    ScopeTooSmall { m: usize },
    #[error("enumeration supports at most {max} alternatives, got {m}")]
    ScopeTooLarge { m: usize, max: usize },
    #[error("criterion count {n} outside the supported range 1..={max}")]
    CriteriaOutOfRange { n: usize, max: usize },
    #[error("{profiles} ordered profiles exceed the sweep cap of {limit}")]
    ProfileSpaceTooLarge { profiles: u128, limit: u128 },
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// counts[r] = number of ordered set partitions of r labeled items, via
/// counts[r] = sum over first-class sizes s of C(r, s) * counts[r - s].
pub(crate) fn ordered_partition_counts(m: usize) -> Vec<u128> {
    let mut counts = vec![0u128; m + 1];
    counts[0] = 1;
    for r in 1..=m {
        counts[r] = (1..=r).map(|s| binomial(r, s) * counts[r - s]).sum();
    }
    counts
}

/// Number of weak orders over m alternatives (3, 13, 75, 541, ... for
/// m = 2, 3, 4, 5, ...). Exact for m <= 25.
pub fn weak_order_count(m: usize) -> u128 {
    assert!(m <= 25, "ordered-set-partition count overflows u128 beyond m = 25");
    ordered_partition_counts(m)[m]
}

/// Enumerates every weak order over `0..m`, each exactly once, in a
/// deterministic order (first classes enumerated by ascending bitmask).
pub fn enumerate_weak_orders(m: usize) -> Result<Vec<WeakOrder>, OracleError> {
    if m < 2 {
        return Err(OracleError::ScopeTooSmall { m });
    }
    if m > MAX_ENUMERATION_ALTERNATIVES {
        return Err(OracleError::ScopeTooLarge {
            m,
            max: MAX_ENUMERATION_ALTERNATIVES,
        });
    }
    let mut orders = Vec::with_capacity(weak_order_count(m) as usize);
    let full: u32 = (1 << m) - 1;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    push_partitions(full, m, &mut classes, &mut orders);
    Ok(orders)
}

fn push_partitions(remaining: u32, m: usize, classes: &mut Vec<Vec<usize>>, out: &mut Vec<WeakOrder>) {
    if remaining == 0 {
        out.push(WeakOrder::new(classes.clone(), m).expect("enumerated classes form a partition"));
        return;
    }
    for mask in 1..=remaining {
        if mask & remaining != mask {
            continue;
        }
        classes.push((0..m).filter(|i| mask & (1 << i) != 0).collect());
        push_partitions(remaining & !mask, m, classes, out);
        classes.pop();
    }
}

/// Validated bounds for an exhaustive sweep over all ordered profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationScope {
    m: usize,
    n: usize,
}

impl EnumerationScope {
    pub fn new(m: usize, n: usize) -> Result<Self, OracleError> {
        if m < 2 {
            return Err(OracleError::ScopeTooSmall { m });
        }
        if m > MAX_ENUMERATION_ALTERNATIVES {
            return Err(OracleError::ScopeTooLarge {
                m,
                max: MAX_ENUMERATION_ALTERNATIVES,
            });
        }
        if !(1..=MAX_ENUMERATION_CRITERIA).contains(&n) {
            return Err(OracleError::CriteriaOutOfRange {
                n,
                max: MAX_ENUMERATION_CRITERIA,
            });
        }
        let profiles = weak_order_count(m).pow(n as u32);
        if profiles > MAX_PROFILE_SPACE {
            return Err(OracleError::ProfileSpaceTooLarge {
                profiles,
                limit: MAX_PROFILE_SPACE,
            });
        }
        Ok(Self { m, n })
    }

    pub fn alternative_count(&self) -> usize {
        self.m
    }

    pub fn criterion_count(&self) -> usize {
        self.n
    }

    /// Number of ordered profiles the sweep visits.
    pub fn profile_count(&self) -> u128 {
        weak_order_count(self.m).pow(self.n as u32)
    }
}

/// One implication the sweep asserts for every profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Implication {
    SymmetryImpliesAllIndifferent,
    AllIndifferentImpliesSymmetry,
    DualImpliesNoneWhipped,
    DualImpliesBordaEqual,
    DualImpliesCenterMeanRanks,
    UniformImpliesDual,
    VerdictMatchesDominantSubsets,
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Implication::SymmetryImpliesAllIndifferent => {
                "a symmetric election matrix implies an all-indifferent outcome"
            }
            Implication::AllIndifferentImpliesSymmetry => {
                "an all-indifferent outcome implies a symmetric election matrix"
            }
            Implication::DualImpliesNoneWhipped => "the dual relation implies none whipped",
            Implication::DualImpliesBordaEqual => "the dual relation implies equal mean ranks",
            Implication::DualImpliesCenterMeanRanks => {
                "the dual relation implies every mean rank is (m+1)/2"
            }
            Implication::UniformImpliesDual => "a uniform mean matrix implies the dual relation",
            Implication::VerdictMatchesDominantSubsets => {
                "none whipped iff no proper dominant subset exists"
            }
        };
        f.write_str(text)
    }
}

/// A profile on which an implication failed, identified by the indices of
/// its orders within `enumerate_weak_orders(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub order_indices: Vec<usize>,
    pub implication: Implication,
}

/// Outcome tallies and counterexamples for one sweep. A correct build
/// produces no counterexamples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub m: usize,
    pub n: usize,
    pub weak_orders: usize,
    pub profiles_checked: u64,
    pub all_indifferent: u64,
    pub pure_cycle: u64,
    pub mixed_connected: u64,
    pub separable: u64,
    pub none_whipped: u64,
    pub election_symmetric: u64,
    pub mean_uniform: u64,
    pub dual_relation: u64,
    pub counterexamples: Vec<Counterexample>,
}

/// Sweeps every ordered n-tuple of weak orders over m alternatives and
/// checks all implications on each resulting profile.
pub fn verify_implications(scope: &EnumerationScope) -> VerificationReport {
    let m = scope.alternative_count();
    let n = scope.criterion_count();
    let orders = enumerate_weak_orders(m).expect("scope is validated");
    let roster = AlternativeRoster::numbered(m).expect("scope has m >= 2");
    let center = BigRational::new(BigInt::from(m + 1), BigInt::from(2));

    let mut report = VerificationReport {
        m,
        n,
        weak_orders: orders.len(),
        profiles_checked: 0,
        all_indifferent: 0,
        pure_cycle: 0,
        mixed_connected: 0,
        separable: 0,
        none_whipped: 0,
        election_symmetric: 0,
        mean_uniform: 0,
        dual_relation: 0,
        counterexamples: Vec::new(),
    };

    let mut indices = vec![0usize; n];
    loop {
        let entries = indices.iter().map(|&i| (orders[i].clone(), 1)).collect();
        let profile = Profile::new(roster.clone(), entries).expect("enumerated orders fit");
        inspect_profile(&profile, &indices, &center, &mut report);

        // odometer over order indices, last criterion fastest
        let mut digit = n;
        let done = loop {
            if digit == 0 {
                break true;
            }
            digit -= 1;
            indices[digit] += 1;
            if indices[digit] < orders.len() {
                break false;
            }
            indices[digit] = 0;
        };
        if done {
            return report;
        }
    }
}

fn inspect_profile(
    profile: &Profile,
    indices: &[usize],
    center: &BigRational,
    report: &mut VerificationReport,
) {
    let election = election_matrix(profile);
    let outcome = classify_outcome(&majority_relation(&election));
    let verdict = whip_verdict(&outcome);
    let sum = sum_matrix(profile);
    let mean = mean_matrix(profile);

    let symmetric = check_election_symmetry(&election).is_none();
    let uniform = check_mean_uniform(&mean).is_none();
    let dual = check_dual_relation(&sum).is_none();
    let borda = check_borda_equal(&mean).is_none();
    let all_indifferent = matches!(outcome.kind(), OutcomeKind::AllIndifferent);

    report.profiles_checked += 1;
    match outcome.kind() {
        OutcomeKind::AllIndifferent => report.all_indifferent += 1,
        OutcomeKind::PureCycle => report.pure_cycle += 1,
        OutcomeKind::MixedConnected => report.mixed_connected += 1,
        OutcomeKind::Separable(_) => report.separable += 1,
    }
    if verdict.none_whipped {
        report.none_whipped += 1;
    }
    if symmetric {
        report.election_symmetric += 1;
    }
    if uniform {
        report.mean_uniform += 1;
    }
    if dual {
        report.dual_relation += 1;
    }

    let mut failures = Vec::new();
    if symmetric && !all_indifferent {
        failures.push(Implication::SymmetryImpliesAllIndifferent);
    }
    if all_indifferent && !symmetric {
        failures.push(Implication::AllIndifferentImpliesSymmetry);
    }
    if dual && !verdict.none_whipped {
        failures.push(Implication::DualImpliesNoneWhipped);
    }
    if dual && !borda {
        failures.push(Implication::DualImpliesBordaEqual);
    }
    if dual {
        let off_center = (0..mean.dimension())
            .any(|i| mean_rank(&mean, i).expect("index in range") != *center);
        if off_center {
            failures.push(Implication::DualImpliesCenterMeanRanks);
        }
    }
    if uniform && !dual {
        failures.push(Implication::UniformImpliesDual);
    }
    if verdict.none_whipped != proper_dominant_subset(&election).is_none() {
        failures.push(Implication::VerdictMatchesDominantSubsets);
    }
    for implication in failures {
        report.counterexamples.push(Counterexample {
            order_indices: indices.to_vec(),
            implication,
        });
    }
}

/// Brute-force search for a proper, non-empty subset whose every member
/// strictly beats every non-member under the majority relation. Returns the
/// first such subset in ascending bitmask order, or `None` — which is
/// exactly the "none whipped" situation. Exponential in m; meant for the
/// desk-scale oracle.
pub fn proper_dominant_subset(matrix: &ElectionMatrix) -> Option<Vec<usize>> {
    let m = matrix.dimension();
    assert!(m < usize::BITS as usize, "subset search needs m < {}", usize::BITS);
    let full: usize = (1 << m) - 1;
    'masks: for mask in 1..full {
        for i in 0..m {
            if mask & (1 << i) == 0 {
                continue;
            }
            for k in 0..m {
                if mask & (1 << k) != 0 {
                    continue;
                }
                if matrix.count(i, k) <= matrix.count(k, i) {
                    continue 'masks;
                }
            }
        }
        return Some((0..m).filter(|i| mask & (1 << i) != 0).collect());
    }
    None
}
