//! Preference maps, preference probability maps (PPMs), and their
//! profile-level sum and mean matrices.
//!
//! Every quantity is an exact rational. An alternative that is tied with
//! others may occupy any of the consecutive positions its indifference class
//! covers, each with equal probability, so a PPM row is constant `1/|span|`
//! on the span and zero elsewhere and the matrix is doubly stochastic.
//! Summing the PPMs of a profile (weighted by multiplicity) gives the sum
//! matrix; dividing by the criterion count n gives the mean matrix, whose
//! entry (i, k) is the social probability that alternative i lands at
//! position k.
//!
//! Positions are 1-based wherever they surface in the API (spans, witnesses,
//! rank weights); matrix columns are 0-based indices.

use std::ops::{Deref, RangeInclusive};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::model::{Profile, WeakOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrefmapsError {
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix entry ({row}, {col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("alternative index {index} out of range for a {dimension}x{dimension} matrix")]
    DimensionMismatch { index: usize, dimension: usize },
}

/// For each alternative, the consecutive 1-based ranking positions it may
/// occupy under one weak order: positions `|A_i|+1 ..= |A_i|+|B_i|`, where
/// `A_i` is the set of alternatives strictly preferred to i and `B_i` its
/// indifference class (i included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceMap {
    spans: Vec<RangeInclusive<usize>>,
}

impl PreferenceMap {
    /// Number of alternatives (m).
    pub fn alternative_count(&self) -> usize {
        self.spans.len()
    }

    /// Position span of alternative `i`, 1-based inclusive.
    pub fn span(&self, i: usize) -> &RangeInclusive<usize> {
        &self.spans[i]
    }

    pub fn spans(&self) -> &[RangeInclusive<usize>] {
        &self.spans
    }
}

/// Builds the preference map of a weak order.
pub fn preference_map(order: &WeakOrder) -> PreferenceMap {
    let mut spans = vec![1..=1; order.alternative_count()];
    let mut placed = 0;
    for class in order.classes() {
        let span = (placed + 1)..=(placed + class.len());
        for &i in class {
            spans[i] = span.clone();
        }
        placed += class.len();
    }
    PreferenceMap { spans }
}

/// Square matrix of nonnegative exact rationals. Entries are kept in lowest
/// terms (num-rational canonicalizes), so `==` is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    /// Builds a matrix from rows, validating squareness and nonnegativity.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, PrefmapsError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(PrefmapsError::NotSquare {
                    row: r,
                    expected: dim,
                    found: row.len(),
                });
            }
            for (c, entry) in row.into_iter().enumerate() {
                if entry < BigRational::zero() {
                    return Err(PrefmapsError::NegativeEntry { row: r, col: c });
                }
                entries.push(entry);
            }
        }
        Ok(Self { dim, entries })
    }

    fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, k: usize) -> &BigRational {
        assert!(i < self.dim && k < self.dim, "matrix index out of range");
        &self.entries[i * self.dim + k]
    }

    fn entry_mut(&mut self, i: usize, k: usize) -> &mut BigRational {
        &mut self.entries[i * self.dim + k]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        assert!(i < self.dim, "matrix row out of range");
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.dim)
    }

    pub fn row_sum(&self, i: usize) -> BigRational {
        self.row(i).iter().sum()
    }

    pub fn column_sum(&self, k: usize) -> BigRational {
        assert!(k < self.dim, "matrix column out of range");
        (0..self.dim).map(|i| self.entry(i, k)).sum()
    }

    /// Entry-wise scaling by a nonnegative factor.
    pub(crate) fn scaled(&self, factor: &BigRational) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    fn add_scaled(&mut self, other: &RationalMatrix, factor: &BigRational) {
        debug_assert_eq!(self.dim, other.dim);
        for (dst, src) in self.entries.iter_mut().zip(&other.entries) {
            *dst += src * factor;
        }
    }
}

/// A preference probability map: the doubly stochastic matrix in which row i
/// spreads probability `1/|span|` uniformly over alternative i's positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpmMatrix(RationalMatrix);

impl PpmMatrix {
    pub fn as_matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.0
    }
}

impl Deref for PpmMatrix {
    type Target = RationalMatrix;

    fn deref(&self) -> &RationalMatrix {
        &self.0
    }
}

/// Builds the PPM of a preference map: entry (i, k) is `1/|span_i|` when
/// 1-based position k+1 lies in alternative i's span, and 0 otherwise.
pub fn ppm(map: &PreferenceMap) -> PpmMatrix {
    let m = map.alternative_count();
    let mut matrix = RationalMatrix::zeros(m);
    for i in 0..m {
        let span = map.span(i);
        let width = span.end() - span.start() + 1;
        let share = BigRational::new(BigInt::one(), BigInt::from(width));
        for position in span.clone() {
            *matrix.entry_mut(i, position - 1) = share.clone();
        }
    }
    PpmMatrix(matrix)
}

/// Multiplicity-weighted sum of the profile's PPMs. Rows and columns each sum
/// to the criterion count n.
pub fn sum_matrix(profile: &Profile) -> RationalMatrix {
    let mut sum = RationalMatrix::zeros(profile.alternative_count());
    for (order, multiplicity) in profile.entries() {
        let weight = BigRational::from_integer(BigInt::from(*multiplicity));
        sum.add_scaled(&ppm(&preference_map(order)), &weight);
    }
    sum
}

/// The sum matrix divided by n: entry (i, k) is the social probability of
/// alternative i occupying position k+1. Rows and columns each sum to 1.
pub fn mean_matrix(profile: &Profile) -> RationalMatrix {
    let n = BigRational::new(BigInt::one(), BigInt::from(profile.criterion_count()));
    sum_matrix(profile).scaled(&n)
}

/// Position-weighted row sum `sum_k k * entry(i, k-1)` with 1-based position
/// weights: on a mean matrix this is the tie-averaged mean ranking position
/// of alternative `i` (a Borda-style score).
pub fn mean_rank(matrix: &RationalMatrix, alternative: usize) -> Result<BigRational, PrefmapsError> {
    if alternative >= matrix.dimension() {
        return Err(PrefmapsError::DimensionMismatch {
            index: alternative,
            dimension: matrix.dimension(),
        });
    }
    Ok(matrix
        .row(alternative)
        .iter()
        .enumerate()
        .map(|(k, p)| p * BigRational::from_integer(BigInt::from(k + 1)))
        .sum())
}
