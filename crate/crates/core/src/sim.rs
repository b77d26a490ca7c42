//! Monte Carlo estimation of the chance that nobody gets whipped.
//!
//! Criteria are drawn independently and identically under an impartial
//! culture: uniform over all weak orders, or uniform over strict orders
//! only. Runs are bit-reproducible: the generator is pinned to ChaCha8
//! (rand_chacha's `ChaCha8Rng`), seeded through `seed_from_u64`, and the
//! draw sequence per trial is fixed.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::majority::{classify_outcome, election_matrix, majority_relation, whip_verdict};
use crate::model::{AlternativeRoster, Profile, WeakOrder};
use crate::oracle::{binomial, ordered_partition_counts};

/// Largest m the exact uniform weak-order sampler supports (the
/// ordered-set-partition counts stay well inside u128).
pub const MAX_SIMULATION_ALTERNATIVES: usize = 20;

/// Distribution each criterion's ranking is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Culture {
    /// Uniform over all weak orders (ties allowed).
    UniformWeakOrders,
    /// Uniform over the m! strict orders.
    UniformStrictOrders,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("simulation needs at least 2 alternatives, got {0}")]
    TooFewAlternatives(usize),
    #[error("simulation supports at most {max} alternatives, got {m}")]
    TooManyAlternatives { m: usize, max: usize },
    #[error("simulation needs at least one criterion")]
    NoCriteria,
    #[error("simulation needs at least one trial")]
    NoTrials,
}

/// Validated simulation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimulationConfig {
    m: usize,
    n: usize,
    trials: u64,
    seed: u64,
    culture: Culture,
}

impl SimulationConfig {
    pub fn new(
        m: usize,
        n: usize,
        trials: u64,
        seed: u64,
        culture: Culture,
    ) -> Result<Self, SimError> {
        if m < 2 {
            return Err(SimError::TooFewAlternatives(m));
        }
        if m > MAX_SIMULATION_ALTERNATIVES {
            return Err(SimError::TooManyAlternatives {
                m,
                max: MAX_SIMULATION_ALTERNATIVES,
            });
        }
        if n == 0 {
            return Err(SimError::NoCriteria);
        }
        if trials == 0 {
            return Err(SimError::NoTrials);
        }
        Ok(Self {
            m,
            n,
            trials,
            seed,
            culture,
        })
    }

    pub fn alternative_count(&self) -> usize {
        self.m
    }

    pub fn criterion_count(&self) -> usize {
        self.n
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn culture(&self) -> Culture {
        self.culture
    }
}

/// Sample frequency of the none-whipped outcome with its binomial standard
/// error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityEstimate {
    pub none_whipped: u64,
    pub trials: u64,
    pub point: f64,
    pub std_error: f64,
}

/// Draws one ranking from the given culture. Uniformity over weak orders is
/// exact: the first indifference class gets size s with probability
/// proportional to C(r, s) times the count of ordered partitions of the
/// remaining r - s items, then a uniform s-subset, recursing downward.
pub fn sample_weak_order<R: Rng + ?Sized>(m: usize, culture: Culture, rng: &mut R) -> WeakOrder {
    assert!(
        (2..=MAX_SIMULATION_ALTERNATIVES).contains(&m),
        "sampler supports 2..={MAX_SIMULATION_ALTERNATIVES} alternatives"
    );
    let classes = match culture {
        Culture::UniformStrictOrders => {
            let mut sequence: Vec<usize> = (0..m).collect();
            sequence.shuffle(rng);
            sequence.into_iter().map(|i| vec![i]).collect()
        }
        Culture::UniformWeakOrders => {
            let counts = ordered_partition_counts(m);
            let mut remaining: Vec<usize> = (0..m).collect();
            let mut classes = Vec::new();
            while !remaining.is_empty() {
                let r = remaining.len();
                let mut ticket = rng.random_range(0..counts[r]);
                let mut size = r;
                for s in 1..r {
                    let ways = binomial(r, s) * counts[r - s];
                    if ticket < ways {
                        size = s;
                        break;
                    }
                    ticket -= ways;
                }
                let mut positions = index::sample(rng, r, size).into_vec();
                positions.sort_unstable_by(|a, b| b.cmp(a));
                let mut class: Vec<usize> =
                    positions.iter().map(|&p| remaining.swap_remove(p)).collect();
                class.sort_unstable();
                classes.push(class);
            }
            classes
        }
    };
    WeakOrder::new(classes, m).expect("sampled classes form a partition")
}

/// Runs the configured number of independent trials and reports the sample
/// frequency of "none whipped". Identical configs produce identical
/// estimates, bit for bit.
pub fn estimate_none_whipped_probability(config: &SimulationConfig) -> ProbabilityEstimate {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed());
    let roster = AlternativeRoster::numbered(config.alternative_count())
        .expect("config guarantees m >= 2");
    let mut hits = 0u64;
    for _ in 0..config.trials() {
        let orders = (0..config.criterion_count())
            .map(|_| sample_weak_order(config.alternative_count(), config.culture(), &mut rng))
            .collect();
        let profile =
            Profile::from_orders(roster.clone(), orders).expect("sampled orders fit the roster");
        let outcome = classify_outcome(&majority_relation(&election_matrix(&profile)));
        if whip_verdict(&outcome).none_whipped {
            hits += 1;
        }
    }
    let trials = config.trials();
    let point = hits as f64 / trials as f64;
    let std_error = (point * (1.0 - point) / trials as f64).sqrt();
    ProbabilityEstimate {
        none_whipped: hits,
        trials,
        point,
        std_error,
    }
}
