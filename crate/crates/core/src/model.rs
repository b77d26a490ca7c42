//! Alternatives, weak orders, and profiles.
//!
//! A [`WeakOrder`] ranks every alternative exactly once and allows ties: it is
//! an ordered sequence of disjoint indifference classes, most preferred class
//! first. A [`Profile`] collects one weak order per criterion over a shared
//! [`AlternativeRoster`]; identical rankings may be compressed through a
//! multiplicity, since criteria are anonymous and weighted equally.
//!
//! Everything here is immutable after construction and all operations are
//! pure, so values can be shared freely across threads.

use thiserror::Error;

/// Validation errors for rosters, weak orders, and profiles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a roster needs at least 2 alternatives, got {0}")]
    TooFewAlternatives(usize),
    #[error("alternative label at position {0} is empty")]
    EmptyLabel(usize),
    #[error("duplicate alternative label `{0}`")]
    DuplicateLabel(String),
    #[error("indifference class {class} is empty")]
    EmptyClass { class: usize },
    #[error("alternative {alternative} appears more than once (second occurrence in class {class})")]
    DuplicateAlternative { class: usize, alternative: usize },
    #[error("alternative {alternative} is not ranked by any class")]
    MissingAlternative { alternative: usize },
    #[error("class {class} holds index {index}, out of range for {m} alternatives")]
    IndexOutOfRange { class: usize, index: usize, m: usize },
    #[error("alternative index {index} out of range for {m} alternatives")]
    AlternativeOutOfRange { index: usize, m: usize },
    #[error("cannot compare alternative {0} with itself")]
    SameAlternative(usize),
    #[error("criterion {criterion} ranks {found} alternatives, the roster has {expected}")]
    AlternativeCountMismatch {
        criterion: usize,
        expected: usize,
        found: usize,
    },
    #[error("criterion {criterion} has zero multiplicity")]
    ZeroMultiplicity { criterion: usize },
    #[error("a profile needs at least one criterion")]
    NoCriteria,
    #[error("total criterion count overflows a 64-bit counter")]
    CriterionCountOverflow,
}

/// Ordered list of distinct alternative labels. Alternatives are handled by
/// index `0..m` everywhere else; labels only matter at the I/O boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeRoster {
    names: Vec<String>,
}

impl AlternativeRoster {
    /// Builds a roster from distinct, non-empty labels. Requires m >= 2.
    pub fn new<I, S>(names: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(ModelError::TooFewAlternatives(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(ModelError::EmptyLabel(i));
            }
            if names[..i].contains(name) {
                return Err(ModelError::DuplicateLabel(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// Roster `x1, x2, ..., xm`, the default when no labels are given.
    pub fn numbered(m: usize) -> Result<Self, ModelError> {
        Self::new((1..=m).map(|i| format!("x{i}")))
    }

    /// Number of alternatives (m).
    pub fn alternative_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// How one weak order relates alternative `i` to alternative `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairwisePreference {
    Prefers,
    Indifferent,
    Dispreferred,
}

/// One criterion's ranking of all `m` alternatives: an ordered sequence of
/// disjoint, non-empty indifference classes whose union is exactly `0..m`.
/// The first class is the most preferred.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakOrder {
    m: usize,
    classes: Vec<Vec<usize>>,
    /// alternative index -> position of its class in `classes`
    class_of: Vec<usize>,
}

impl WeakOrder {
    /// Validates and normalizes `classes` into a weak order over `0..m`.
    /// Classes keep their given order; members are stored sorted ascending.
    pub fn new(classes: Vec<Vec<usize>>, m: usize) -> Result<Self, ModelError> {
        if m < 2 {
            return Err(ModelError::TooFewAlternatives(m));
        }
        let mut class_of = vec![usize::MAX; m];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(ModelError::EmptyClass { class: c });
            }
            for &index in class {
                if index >= m {
                    return Err(ModelError::IndexOutOfRange { class: c, index, m });
                }
                if class_of[index] != usize::MAX {
                    return Err(ModelError::DuplicateAlternative {
                        class: c,
                        alternative: index,
                    });
                }
                class_of[index] = c;
            }
        }
        if let Some(missing) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(ModelError::MissingAlternative {
                alternative: missing,
            });
        }
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
        }
        Ok(Self {
            m,
            classes,
            class_of,
        })
    }

    /// Number of alternatives (m).
    pub fn alternative_count(&self) -> usize {
        self.m
    }

    /// Indifference classes, most preferred first; each sorted ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Position of alternative `i`'s class within the class sequence.
    pub fn class_index_of(&self, i: usize) -> Result<usize, ModelError> {
        if i >= self.m {
            return Err(ModelError::AlternativeOutOfRange { index: i, m: self.m });
        }
        Ok(self.class_of[i])
    }

    /// True when every class is a singleton (no ties anywhere).
    pub fn is_strict(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Pairwise comparison of two distinct alternatives under this order.
    pub fn pairwise(&self, i: usize, k: usize) -> Result<PairwisePreference, ModelError> {
        let ci = self.class_index_of(i)?;
        let ck = self.class_index_of(k)?;
        if i == k {
            return Err(ModelError::SameAlternative(i));
        }
        Ok(match ci.cmp(&ck) {
            std::cmp::Ordering::Less => PairwisePreference::Prefers,
            std::cmp::Ordering::Equal => PairwisePreference::Indifferent,
            std::cmp::Ordering::Greater => PairwisePreference::Dispreferred,
        })
    }

    /// The same classes in reverse sequence (best becomes worst).
    pub fn reversed(&self) -> WeakOrder {
        let classes: Vec<Vec<usize>> = self.classes.iter().rev().cloned().collect();
        let last = self.classes.len() - 1;
        let class_of = self.class_of.iter().map(|&c| last - c).collect();
        WeakOrder {
            m: self.m,
            classes,
            class_of,
        }
    }
}

/// A multiset of weak orders over a shared roster. Each entry pairs a ranking
/// with a positive multiplicity; the criterion count n is the multiplicity sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    roster: AlternativeRoster,
    entries: Vec<(WeakOrder, u64)>,
    criterion_count: u64,
}

impl Profile {
    pub fn new(
        roster: AlternativeRoster,
        entries: Vec<(WeakOrder, u64)>,
    ) -> Result<Self, ModelError> {
        let m = roster.alternative_count();
        let mut criterion_count: u64 = 0;
        for (c, (order, multiplicity)) in entries.iter().enumerate() {
            if order.alternative_count() != m {
                return Err(ModelError::AlternativeCountMismatch {
                    criterion: c,
                    expected: m,
                    found: order.alternative_count(),
                });
            }
            if *multiplicity == 0 {
                return Err(ModelError::ZeroMultiplicity { criterion: c });
            }
            criterion_count = criterion_count
                .checked_add(*multiplicity)
                .ok_or(ModelError::CriterionCountOverflow)?;
        }
        if criterion_count == 0 {
            return Err(ModelError::NoCriteria);
        }
        Ok(Self {
            roster,
            entries,
            criterion_count,
        })
    }

    /// Convenience constructor for unit-multiplicity profiles.
    pub fn from_orders(
        roster: AlternativeRoster,
        orders: Vec<WeakOrder>,
    ) -> Result<Self, ModelError> {
        Self::new(roster, orders.into_iter().map(|o| (o, 1)).collect())
    }

    pub fn roster(&self) -> &AlternativeRoster {
        &self.roster
    }

    /// Number of alternatives (m).
    pub fn alternative_count(&self) -> usize {
        self.roster.alternative_count()
    }

    /// Total criterion count n (multiplicities included).
    pub fn criterion_count(&self) -> u64 {
        self.criterion_count
    }

    pub fn entries(&self) -> &[(WeakOrder, u64)] {
        &self.entries
    }

    /// The profile with every criterion's ranking reversed.
    pub fn reversed(&self) -> Profile {
        Profile {
            roster: self.roster.clone(),
            entries: self
                .entries
                .iter()
                .map(|(order, mult)| (order.reversed(), *mult))
                .collect(),
            criterion_count: self.criterion_count,
        }
    }
}
