//! Report plumbing shared by every sweep: flagged-graph records that are
//! forced to replay from their own encoding, and the top-level report with
//! its pass/fail verdict.

use idom::codec::{from_graph6, to_graph6};
use idom::recognition::{weight_report, WeightReport};
use idom::SubcubicGraph;
use serde::{Deserialize, Serialize};

/// One flagged graph: its portable encoding plus the ledger computed from
/// it. Construction decodes the encoding again and recomputes the ledger,
/// so any record that exists has already survived a replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub report: WeightReport,
}

impl GraphRecord {
    pub fn new(g: &SubcubicGraph) -> Self {
        let graph6 = to_graph6(g);
        let report = weight_report(g);
        let replayed = from_graph6(&graph6).expect("own encoding decodes");
        assert_eq!(weight_report(&replayed), report, "record failed replay");
        GraphRecord { graph6, report }
    }
}

/// A secondary inequality tracked during the same sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: String,
    pub violations: Vec<GraphRecord>,
    pub equality_cases: Vec<GraphRecord>,
}

impl BoundCheck {
    pub fn new(bound: &str) -> Self {
        BoundCheck {
            bound: bound.to_string(),
            violations: Vec::new(),
            equality_cases: Vec::new(),
        }
    }
}

/// Outcome of one sweep or randomized suite.
///
/// `violations` and `equality_cases` belong to the primary bound named in
/// `theorem`; `side_checks` carry any further bounds checked in the same
/// pass. `failures` lists every departure from the expected outcome, i.e.
/// an unexpected violation, a missing known exception, or a broken
/// uniqueness claim; an empty list is a pass. Replaying a command with the
/// same flags and seed reproduces the report byte for byte except for
/// `elapsed_ms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub theorem: String,
    pub orders: (usize, usize),
    pub graphs_checked: u64,
    pub counts_by_order: Vec<(usize, u64)>,
    pub violations: Vec<GraphRecord>,
    pub equality_cases: Vec<GraphRecord>,
    pub side_checks: Vec<BoundCheck>,
    pub failures: Vec<String>,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Human-readable digest, one bound per line.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("theorem:  {}\n", self.theorem));
        out.push_str(&format!(
            "checked:  {} graphs, orders {}..={}, {} ms\n",
            self.graphs_checked, self.orders.0, self.orders.1, self.elapsed_ms
        ));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed:     {seed}\n"));
        }
        out.push_str(&format!(
            "primary:  {} violations, {} equality cases\n",
            self.violations.len(),
            self.equality_cases.len()
        ));
        for check in &self.side_checks {
            out.push_str(&format!(
                "also:     {} -> {} violations, {} equality cases\n",
                check.bound,
                check.violations.len(),
                check.equality_cases.len()
            ));
        }
        for failure in &self.failures {
            out.push_str(&format!("FAILURE:  {failure}\n"));
        }
        out.push_str(if self.passed() { "verdict:  PASS\n" } else { "verdict:  FAIL\n" });
        out
    }
}
