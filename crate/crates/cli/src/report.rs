//! Report documents and their renderings.
//!
//! The JSON schema is fixed: key set and order never change for a given
//! subcommand, rationals serialize as exact strings in lowest terms ("7/4",
//! "3"; never floats), positions are 1-based, and alternatives appear by
//! label. Identical inputs produce byte-identical JSON.

use serde::Serialize;

use rankyank::{
    classify_outcome, election_matrix, full_condition_report, majority_relation, mean_matrix,
    mean_rank, sum_matrix, whip_verdict, Culture, MajorityComparison, ProbabilityEstimate,
    Profile, RationalMatrix, SimulationConfig, VerificationReport,
};

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub roster: Vec<String>,
    pub n: u64,
    pub m: usize,
    pub election_matrix: Vec<Vec<u64>>,
    pub sum_matrix: Vec<Vec<String>>,
    pub mean_matrix: Vec<Vec<String>>,
    pub majority_relation: Vec<Vec<String>>,
    pub outcome_class: String,
    pub strata: Vec<Vec<String>>,
    pub none_whipped: bool,
    pub condition_report: ConditionDocument,
    pub mean_ranks: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ConditionDocument {
    pub election_symmetric: bool,
    pub mean_uniform: bool,
    pub dual_relation: bool,
    pub borda_equal: bool,
    pub witnesses: WitnessDocument,
}

/// One violation per failed condition, `null` when the condition holds.
#[derive(Debug, Serialize)]
pub struct WitnessDocument {
    pub election_symmetric: Option<PairWitness>,
    pub mean_uniform: Option<PositionWitness>,
    pub dual_relation: Option<DualWitness>,
    pub borda_equal: Option<PairWitness>,
}

#[derive(Debug, Serialize)]
pub struct PairWitness {
    pub i: String,
    pub k: String,
}

#[derive(Debug, Serialize)]
pub struct PositionWitness {
    pub alternative: String,
    pub position: usize,
}

#[derive(Debug, Serialize)]
pub struct DualWitness {
    pub alternative: String,
    pub positions: [usize; 2],
}

#[derive(Debug, Serialize)]
pub struct SweepDocument {
    pub m: usize,
    pub n: usize,
    pub weak_orders: usize,
    pub profiles_checked: u64,
    pub outcome_counts: OutcomeCounts,
    pub none_whipped: u64,
    pub election_symmetric: u64,
    pub mean_uniform: u64,
    pub dual_relation: u64,
    pub counterexamples: Vec<CounterexampleDocument>,
}

#[derive(Debug, Serialize)]
pub struct OutcomeCounts {
    pub all_indifferent: u64,
    pub pure_cycle: u64,
    pub mixed_connected: u64,
    pub separable: u64,
}

#[derive(Debug, Serialize)]
pub struct CounterexampleDocument {
    pub order_indices: Vec<usize>,
    pub implication: String,
}

#[derive(Debug, Serialize)]
pub struct EstimateDocument {
    pub m: usize,
    pub n: usize,
    pub culture: String,
    pub trials: u64,
    pub seed: u64,
    pub none_whipped: u64,
    pub point: f64,
    pub std_error: f64,
}

fn rational_rows(matrix: &RationalMatrix) -> Vec<Vec<String>> {
    matrix
        .rows()
        .map(|row| row.iter().map(|entry| entry.to_string()).collect())
        .collect()
}

pub fn culture_label(culture: Culture) -> &'static str {
    match culture {
        Culture::UniformWeakOrders => "weak",
        Culture::UniformStrictOrders => "strict",
    }
}

/// Runs the whole pipeline on a profile and assembles the report.
pub fn build_report(profile: &Profile) -> ReportDocument {
    let roster = profile.roster();
    let m = profile.alternative_count();

    let election = election_matrix(profile);
    let relation = majority_relation(&election);
    let outcome = classify_outcome(&relation);
    let verdict = whip_verdict(&outcome);
    let sum = sum_matrix(profile);
    let mean = mean_matrix(profile);

    let relation_rows = (0..m)
        .map(|i| {
            (0..m)
                .map(|k| {
                    if i == k {
                        "-".to_string()
                    } else {
                        match relation.compare(i, k) {
                            MajorityComparison::StrictlyBeats => ">".to_string(),
                            MajorityComparison::Ties => "=".to_string(),
                            MajorityComparison::StrictlyLosesTo => "<".to_string(),
                        }
                    }
                })
                .collect()
        })
        .collect();

    let mean_ranks = (0..m)
        .map(|i| mean_rank(&mean, i).expect("index in range").to_string())
        .collect();

    ReportDocument {
        roster: roster.names().to_vec(),
        n: profile.criterion_count(),
        m,
        election_matrix: election.rows().map(<[u64]>::to_vec).collect(),
        sum_matrix: rational_rows(&sum),
        mean_matrix: rational_rows(&mean),
        majority_relation: relation_rows,
        outcome_class: outcome.kind().label().to_string(),
        strata: outcome
            .strata()
            .iter()
            .map(|stratum| stratum.iter().map(|&i| roster.name(i).to_string()).collect())
            .collect(),
        none_whipped: verdict.none_whipped,
        condition_report: build_condition_document(profile),
        mean_ranks,
    }
}

/// Condition flags plus labeled witnesses for one profile.
pub fn build_condition_document(profile: &Profile) -> ConditionDocument {
    let roster = profile.roster();
    let report = full_condition_report(profile);
    ConditionDocument {
        election_symmetric: report.election_symmetric,
        mean_uniform: report.mean_uniform,
        dual_relation: report.dual_relation,
        borda_equal: report.borda_equal,
        witnesses: WitnessDocument {
            election_symmetric: report.asymmetry_witness.map(|(i, k)| PairWitness {
                i: roster.name(i).to_string(),
                k: roster.name(k).to_string(),
            }),
            mean_uniform: report.nonuniform_witness.map(|(i, position)| PositionWitness {
                alternative: roster.name(i).to_string(),
                position: position + 1,
            }),
            dual_relation: report.dual_witness.map(|(i, position)| DualWitness {
                alternative: roster.name(i).to_string(),
                positions: [
                    position + 1,
                    profile.alternative_count() - position,
                ],
            }),
            borda_equal: report.borda_witness.map(|(i, k)| PairWitness {
                i: roster.name(i).to_string(),
                k: roster.name(k).to_string(),
            }),
        },
    }
}

pub fn build_sweep_document(report: &VerificationReport) -> SweepDocument {
    SweepDocument {
        m: report.m,
        n: report.n,
        weak_orders: report.weak_orders,
        profiles_checked: report.profiles_checked,
        outcome_counts: OutcomeCounts {
            all_indifferent: report.all_indifferent,
            pure_cycle: report.pure_cycle,
            mixed_connected: report.mixed_connected,
            separable: report.separable,
        },
        none_whipped: report.none_whipped,
        election_symmetric: report.election_symmetric,
        mean_uniform: report.mean_uniform,
        dual_relation: report.dual_relation,
        counterexamples: report
            .counterexamples
            .iter()
            .map(|counterexample| CounterexampleDocument {
                order_indices: counterexample.order_indices.clone(),
                implication: counterexample.implication.to_string(),
            })
            .collect(),
    }
}

pub fn build_estimate_document(
    config: &SimulationConfig,
    estimate: &ProbabilityEstimate,
) -> EstimateDocument {
    EstimateDocument {
        m: config.alternative_count(),
        n: config.criterion_count(),
        culture: culture_label(config.culture()).to_string(),
        trials: estimate.trials,
        seed: config.seed(),
        none_whipped: estimate.none_whipped,
        point: estimate.point,
        std_error: estimate.std_error,
    }
}

fn labeled_table(corner: &str, columns: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut widths: Vec<usize> = Vec::with_capacity(columns.len() + 1);
    widths.push(
        std::iter::once(corner.len())
            .chain(rows.iter().map(|(label, _)| label.len()))
            .max()
            .unwrap_or(0),
    );
    for (c, header) in columns.iter().enumerate() {
        widths.push(
            std::iter::once(header.len())
                .chain(rows.iter().map(|(_, cells)| cells[c].len()))
                .max()
                .unwrap_or(0),
        );
    }
    let mut out = String::new();
    out.push_str(&format!("  {:>width$}", corner, width = widths[0]));
    for (c, header) in columns.iter().enumerate() {
        out.push_str(&format!("  {:>width$}", header, width = widths[c + 1]));
    }
    out.push('\n');
    for (label, cells) in rows {
        out.push_str(&format!("  {:>width$}", label, width = widths[0]));
        for (c, cell) in cells.iter().enumerate() {
            out.push_str(&format!("  {:>width$}", cell, width = widths[c + 1]));
        }
        out.push('\n');
    }
    out
}

fn matrix_section(title: &str, roster: &[String], columns: &[String], rows: Vec<Vec<String>>) -> String {
    let labeled: Vec<(String, Vec<String>)> = roster
        .iter()
        .cloned()
        .zip(rows)
        .collect();
    format!("{title}:\n{}", labeled_table("", columns, &labeled))
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

pub fn render_report_text(doc: &ReportDocument) -> String {
    let positions: Vec<String> = (1..=doc.m).map(|p| p.to_string()).collect();
    let mut out = String::new();
    out.push_str(&format!(
        "profile: {} alternatives ({}), {} criteria\n\n",
        doc.m,
        doc.roster.join(" "),
        doc.n
    ));
    out.push_str(&matrix_section(
        "election matrix (strict pairwise wins)",
        &doc.roster,
        &doc.roster,
        doc.election_matrix
            .iter()
            .map(|row| row.iter().map(u64::to_string).collect())
            .collect(),
    ));
    out.push('\n');
    out.push_str(&matrix_section(
        "sum matrix (expected criteria per position)",
        &doc.roster,
        &positions,
        doc.sum_matrix.clone(),
    ));
    out.push('\n');
    out.push_str(&matrix_section(
        "mean matrix (position probabilities)",
        &doc.roster,
        &positions,
        doc.mean_matrix.clone(),
    ));
    out.push('\n');
    out.push_str(&matrix_section(
        "majority relation (row vs column)",
        &doc.roster,
        &doc.roster,
        doc.majority_relation.clone(),
    ));
    out.push('\n');
    out.push_str(&format!("outcome: {}\n", doc.outcome_class));
    let strata: Vec<String> = doc
        .strata
        .iter()
        .map(|stratum| format!("{{{}}}", stratum.join(", ")))
        .collect();
    out.push_str(&format!("strata (best first): {}\n", strata.join(" > ")));
    let ranks: Vec<String> = doc
        .roster
        .iter()
        .zip(&doc.mean_ranks)
        .map(|(name, rank)| format!("{name}={rank}"))
        .collect();
    out.push_str(&format!("mean ranks: {}\n\n", ranks.join("  ")));
    out.push_str(&render_conditions_text(&doc.condition_report));
    out.push('\n');
    if doc.none_whipped {
        out.push_str("verdict: none whipped\n");
    } else {
        out.push_str(&format!(
            "verdict: whipped — rewarded {{{}}}, yanked {{{}}}\n",
            doc.strata.first().map(|s| s.join(", ")).unwrap_or_default(),
            doc.strata.last().map(|s| s.join(", ")).unwrap_or_default(),
        ));
    }
    out
}

pub fn render_conditions_text(doc: &ConditionDocument) -> String {
    let mut out = String::new();
    out.push_str("conditions:\n");
    out.push_str(&format!(
        "  election matrix symmetric: {}{}\n",
        yes_no(doc.election_symmetric),
        doc.witnesses
            .election_symmetric
            .as_ref()
            .map(|w| format!("  (counts differ for {} vs {})", w.i, w.k))
            .unwrap_or_default()
    ));
    out.push_str(&format!(
        "  mean matrix uniform:       {}{}\n",
        yes_no(doc.mean_uniform),
        doc.witnesses
            .mean_uniform
            .as_ref()
            .map(|w| format!("  ({} at position {})", w.alternative, w.position))
            .unwrap_or_default()
    ));
    out.push_str(&format!(
        "  dual relation:             {}{}\n",
        yes_no(doc.dual_relation),
        doc.witnesses
            .dual_relation
            .as_ref()
            .map(|w| format!(
                "  ({} at positions {} vs {})",
                w.alternative, w.positions[0], w.positions[1]
            ))
            .unwrap_or_default()
    ));
    out.push_str(&format!(
        "  equal mean ranks:          {}{}\n",
        yes_no(doc.borda_equal),
        doc.witnesses
            .borda_equal
            .as_ref()
            .map(|w| format!("  ({} vs {})", w.i, w.k))
            .unwrap_or_default()
    ));
    out
}

pub fn render_sweep_text(doc: &SweepDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "sweep: m={}, n={} — {} weak orders, {} ordered profiles\n",
        doc.m, doc.n, doc.weak_orders, doc.profiles_checked
    ));
    out.push_str(&format!(
        "outcomes: all_indifferent={}  pure_cycle={}  mixed_connected={}  separable={}\n",
        doc.outcome_counts.all_indifferent,
        doc.outcome_counts.pure_cycle,
        doc.outcome_counts.mixed_connected,
        doc.outcome_counts.separable
    ));
    out.push_str(&format!(
        "none whipped: {} of {} ({:.4})\n",
        doc.none_whipped,
        doc.profiles_checked,
        doc.none_whipped as f64 / doc.profiles_checked as f64
    ));
    out.push_str(&format!(
        "certificates: symmetric={}  uniform={}  dual={}\n",
        doc.election_symmetric, doc.mean_uniform, doc.dual_relation
    ));
    if doc.counterexamples.is_empty() {
        out.push_str("counterexamples: none\n");
    } else {
        out.push_str(&format!("counterexamples: {}\n", doc.counterexamples.len()));
        for counterexample in &doc.counterexamples {
            out.push_str(&format!(
                "  orders {:?}: {}\n",
                counterexample.order_indices, counterexample.implication
            ));
        }
    }
    out
}

pub fn render_estimate_text(doc: &EstimateDocument) -> String {
    format!(
        "simulate: m={}, n={}, culture={}, trials={}, seed={}\n\
         none whipped in {} trials: point estimate {} (std error {})\n",
        doc.m, doc.n, doc.culture, doc.trials, doc.seed, doc.none_whipped, doc.point, doc.std_error
    )
}
