//! Simple-majority aggregation: the election matrix, the pairwise majority
//! relation, the outcome taxonomy, and the forced-ranking verdict.
//!
//! Alternative i socially beats k iff strictly more criteria rank i before k
//! than k before i; equal counts give social indifference. The aggregate
//! outcome is classified through the weak-majority digraph (an edge i -> k
//! when i beats or ties k): a forced-distribution policy can reward or remove
//! someone exactly when that digraph splits into more than one strongly
//! connected component.

use thiserror::Error;

use crate::model::{PairwisePreference, Profile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MajorityError {
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("diagonal entry ({0}, {0}) must be zero")]
    NonzeroDiagonal(usize),
    #[error("counts for pair ({i}, {k}) total {total}, more than the {n} criteria")]
    CountsExceedCriteria { i: usize, k: usize, total: u64, n: u64 },
}

/// Matrix of strict pairwise wins: entry (i, k) counts the criteria that rank
/// alternative i strictly before alternative k. Ties count for neither side,
/// so entry (i, k) + entry (k, i) <= n, with equality iff no criterion ties
/// the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElectionMatrix {
    dim: usize,
    criterion_count: u64,
    counts: Vec<u64>,
}

impl ElectionMatrix {
    /// Builds an election matrix from raw counts, validating shape, a zero
    /// diagonal, and pair totals against the criterion count.
    pub fn from_counts(rows: Vec<Vec<u64>>, criterion_count: u64) -> Result<Self, MajorityError> {
        let dim = rows.len();
        let mut counts = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(MajorityError::NotSquare {
                    row: r,
                    expected: dim,
                    found: row.len(),
                });
            }
            counts.extend(row);
        }
        let matrix = Self {
            dim,
            criterion_count,
            counts,
        };
        for i in 0..dim {
            if matrix.count(i, i) != 0 {
                return Err(MajorityError::NonzeroDiagonal(i));
            }
            for k in (i + 1)..dim {
                let total = matrix.count(i, k) + matrix.count(k, i);
                if total > criterion_count {
                    return Err(MajorityError::CountsExceedCriteria {
                        i,
                        k,
                        total,
                        n: criterion_count,
                    });
                }
            }
        }
        Ok(matrix)
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Total criterion count n of the profile the matrix was built from.
    pub fn criterion_count(&self) -> u64 {
        self.criterion_count
    }

    /// Number of criteria strictly preferring i to k.
    pub fn count(&self, i: usize, k: usize) -> u64 {
        assert!(i < self.dim && k < self.dim, "election index out of range");
        self.counts[i * self.dim + k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.counts.chunks(self.dim)
    }
}

/// Counts strict pairwise preferences across the profile, weighted by
/// multiplicity.
pub fn election_matrix(profile: &Profile) -> ElectionMatrix {
    let m = profile.alternative_count();
    let mut counts = vec![0u64; m * m];
    for (order, multiplicity) in profile.entries() {
        for i in 0..m {
            for k in 0..m {
                if i == k {
                    continue;
                }
                let preference = order
                    .pairwise(i, k)
                    .expect("profile orders match the roster");
                if preference == PairwisePreference::Prefers {
                    counts[i * m + k] += multiplicity;
                }
            }
        }
    }
    ElectionMatrix {
        dim: m,
        criterion_count: profile.criterion_count(),
        counts,
    }
}

/// Social standing of alternative i against alternative k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MajorityComparison {
    StrictlyBeats,
    Ties,
    StrictlyLosesTo,
}

/// The pairwise simple-majority relation: i strictly beats k iff its win
/// count exceeds k's; equal counts tie. The diagonal is undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityRelation {
    dim: usize,
    cells: Vec<MajorityComparison>,
}

impl MajorityRelation {
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Comparison of two distinct alternatives; panics on i == k or an
    /// out-of-range index.
    pub fn compare(&self, i: usize, k: usize) -> MajorityComparison {
        assert!(i < self.dim && k < self.dim, "relation index out of range");
        assert!(i != k, "the majority relation is undefined on the diagonal");
        self.cells[i * self.dim + k]
    }
}

/// Derives the majority relation from an election matrix.
pub fn majority_relation(matrix: &ElectionMatrix) -> MajorityRelation {
    let m = matrix.dimension();
    let mut cells = vec![MajorityComparison::Ties; m * m];
    for i in 0..m {
        for k in 0..m {
            if i == k {
                continue;
            }
            cells[i * m + k] = match matrix.count(i, k).cmp(&matrix.count(k, i)) {
                std::cmp::Ordering::Greater => MajorityComparison::StrictlyBeats,
                std::cmp::Ordering::Equal => MajorityComparison::Ties,
                std::cmp::Ordering::Less => MajorityComparison::StrictlyLosesTo,
            };
        }
    }
    MajorityRelation { dim: m, cells }
}

/// Shape of the aggregate outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutcomeKind {
    /// Every pair socially ties.
    AllIndifferent,
    /// No pair ties and the strict-majority digraph is a single strongly
    /// connected component covering all alternatives.
    PureCycle,
    /// At least one tie and at least one strict edge, with the weak-majority
    /// digraph still strongly connected.
    MixedConnected,
    /// The weak-majority digraph splits into two or more strongly connected
    /// components; the chain lists them best-first, members sorted ascending.
    Separable(Vec<Vec<usize>>),
}

impl OutcomeKind {
    /// Stable snake_case tag, usable as a serialization label.
    pub fn label(&self) -> &'static str {
        match self {
            OutcomeKind::AllIndifferent => "all_indifferent",
            OutcomeKind::PureCycle => "pure_cycle",
            OutcomeKind::MixedConnected => "mixed_connected",
            OutcomeKind::Separable(_) => "separable",
        }
    }
}

/// Classified aggregate outcome over m alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeClass {
    m: usize,
    kind: OutcomeKind,
}

impl OutcomeClass {
    pub fn alternative_count(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> &OutcomeKind {
        &self.kind
    }

    pub fn is_separable(&self) -> bool {
        matches!(self.kind, OutcomeKind::Separable(_))
    }

    /// The condensation chain of the weak-majority digraph, best component
    /// first. A non-separable outcome is one component spanning everything.
    pub fn strata(&self) -> Vec<Vec<usize>> {
        match &self.kind {
            OutcomeKind::Separable(strata) => strata.clone(),
            _ => vec![(0..self.m).collect()],
        }
    }
}

/// Classifies the outcome by the strongly connected components of the
/// weak-majority digraph (edge i -> k iff i beats or ties k). Because the
/// relation is complete, the condensation is always a chain.
pub fn classify_outcome(relation: &MajorityRelation) -> OutcomeClass {
    let m = relation.dimension();
    let mut weak_edges = vec![Vec::new(); m];
    let mut any_tie = false;
    let mut any_strict = false;
    for (i, edges) in weak_edges.iter_mut().enumerate() {
        for k in 0..m {
            if i == k {
                continue;
            }
            match relation.compare(i, k) {
                MajorityComparison::StrictlyBeats => {
                    any_strict = true;
                    edges.push(k);
                }
                MajorityComparison::Ties => {
                    any_tie = true;
                    edges.push(k);
                }
                MajorityComparison::StrictlyLosesTo => {}
            }
        }
    }

    let mut components = tarjan_scc(&weak_edges);
    let kind = if components.len() >= 2 {
        // Distinct components never tie, so comparing any representatives
        // orders the chain.
        components.sort_by(|a, b| match relation.compare(a[0], b[0]) {
            MajorityComparison::StrictlyBeats => std::cmp::Ordering::Less,
            MajorityComparison::StrictlyLosesTo => std::cmp::Ordering::Greater,
            MajorityComparison::Ties => {
                unreachable!("tied alternatives share a strongly connected component")
            }
        });
        for component in &mut components {
            component.sort_unstable();
        }
        OutcomeKind::Separable(components)
    } else if !any_strict {
        OutcomeKind::AllIndifferent
    } else if !any_tie {
        OutcomeKind::PureCycle
    } else {
        OutcomeKind::MixedConnected
    };
    OutcomeClass { m, kind }
}

/// Tarjan SCC over an adjacency list; components come out in reverse
/// topological order of the condensation.
fn tarjan_scc(graph: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        graph: &'a [Vec<usize>],
        next_index: usize,
        index: Vec<Option<usize>>,
        lowlink: Vec<usize>,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        components: Vec<Vec<usize>>,
    }

    fn connect(v: usize, state: &mut State) {
        state.index[v] = Some(state.next_index);
        state.lowlink[v] = state.next_index;
        state.next_index += 1;
        state.stack.push(v);
        state.on_stack[v] = true;

        for &w in &state.graph[v] {
            match state.index[w] {
                None => {
                    connect(w, state);
                    state.lowlink[v] = state.lowlink[v].min(state.lowlink[w]);
                }
                Some(w_index) if state.on_stack[w] => {
                    state.lowlink[v] = state.lowlink[v].min(w_index);
                }
                Some(_) => {}
            }
        }

        if state.lowlink[v] == state.index[v].unwrap() {
            let mut component = Vec::new();
            loop {
                let w = state.stack.pop().expect("tarjan stack underflow");
                state.on_stack[w] = false;
                component.push(w);
                if w == v {
                    break;
                }
            }
            state.components.push(component);
        }
    }

    let n = graph.len();
    let mut state = State {
        graph,
        next_index: 0,
        index: vec![None; n],
        lowlink: vec![0; n],
        stack: Vec::new(),
        on_stack: vec![false; n],
        components: Vec::new(),
    };
    for v in 0..n {
        if state.index[v].is_none() {
            connect(v, &mut state);
        }
    }
    state.components
}

/// Forced-ranking decision: who would be rewarded and who removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhipVerdict {
    /// True iff the outcome is not separable, i.e. no one can be singled out.
    pub none_whipped: bool,
    /// Top condensation component when separable, otherwise everyone.
    pub rewarded: Vec<usize>,
    /// Bottom condensation component when separable, otherwise everyone.
    pub yanked: Vec<usize>,
}

/// Decides the forced-ranking verdict from a classified outcome.
pub fn whip_verdict(outcome: &OutcomeClass) -> WhipVerdict {
    match outcome.kind() {
        OutcomeKind::Separable(strata) => WhipVerdict {
            none_whipped: false,
            rewarded: strata.first().cloned().unwrap_or_default(),
            yanked: strata.last().cloned().unwrap_or_default(),
        },
        _ => {
            let everyone: Vec<usize> = (0..outcome.alternative_count()).collect();
            WhipVerdict {
                none_whipped: true,
                rewarded: everyone.clone(),
                yanked: everyone,
            }
        }
    }
}
