//! Batch cross-checks between the closed forms and the homology oracle.

use serde::Serialize;

use crate::betti::{betti_lollipop, formula_table, BettiTable};
use crate::closedness::{find_closed_labeling, in_graph, is_closed};
use crate::enumerate::all_graphs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hochster::{closed_strand_check, hochster_betti, ClosedStrandReport, HochsterConfig};

/// Largest vertex count for the exhaustive closed-strand run.
pub const CLOSED_STRAND_MAX_N: usize = 7;

#[derive(Clone, Debug, Serialize)]
pub struct StrandFailure {
    pub graph: String,
    pub report: ClosedStrandReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedStrandSummary {
    pub max_n: usize,
    pub graphs: usize,
    pub closed: usize,
    pub failures: Vec<StrandFailure>,
}

impl ClosedStrandSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`closed_strand_check`] on every closed graph with `1..=max_n`
/// vertices, one per isomorphism class.
pub fn verify_closed_strand(max_n: usize, config: &HochsterConfig) -> Result<ClosedStrandSummary> {
    if max_n > CLOSED_STRAND_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "max-n is at most {CLOSED_STRAND_MAX_N}, got {max_n}"
        )));
    }
    let mut summary = ClosedStrandSummary { max_n, graphs: 0, closed: 0, failures: Vec::new() };
    for n in 1..=max_n {
        for g in all_graphs(n)? {
            summary.graphs += 1;
            if !is_closed(&g) {
                continue;
            }
            summary.closed += 1;
            let report = closed_strand_check(&g, config)?;
            if !report.is_consistent() {
                summary.failures.push(StrandFailure { graph: g.to_string(), report });
            }
        }
    }
    Ok(summary)
}

#[derive(Clone, Debug, Serialize)]
pub struct LollipopCase {
    pub m: usize,
    pub t: usize,
    pub formula: BettiTable,
    pub oracle: BettiTable,
}

impl LollipopCase {
    pub fn passed(&self) -> bool {
        let (pd, reg) = (self.m + self.t - 1, self.t + 1);
        self.formula == self.oracle
            && self.formula.pd() == pd
            && self.oracle.pd() == pd
            && self.formula.reg() == reg
            && self.oracle.reg() == reg
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompositionCase {
    pub m: usize,
    pub handles: Vec<usize>,
    /// The closed form for the handle lengths matches the single-handle table.
    pub closed_form_matches: bool,
    /// Free-cut-edge decomposition of the actual graph matches too.
    pub decomposition_matches: bool,
}

impl CompositionCase {
    pub fn passed(&self) -> bool {
        self.closed_form_matches && self.decomposition_matches
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LollipopSummary {
    pub cases: Vec<LollipopCase>,
    pub compositions: Vec<CompositionCase>,
}

impl LollipopSummary {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(LollipopCase::passed)
            && self.compositions.iter().all(CompositionCase::passed)
    }
}

/// Ordered compositions of `t` with at most `max_parts` parts.
pub fn compositions(t: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            go(rest - first, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if t > 0 {
        go(t, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// For `2 <= m <= max_m` and `1 <= t <= max_t`: the closed-form table of
/// `L_{m,t}` against the oracle table of its initial graph, and every
/// splitting of `t` into at most `m` handles against the one-handle table.
pub fn verify_lollipop(max_m: usize, max_t: usize, config: &HochsterConfig) -> Result<LollipopSummary> {
    let mut summary = LollipopSummary { cases: Vec::new(), compositions: Vec::new() };
    for m in 2..=max_m {
        for t in 1..=max_t {
            let g = Graph::k_handle_lollipop(m, &[t])?;
            let formula = betti_lollipop(m, &[t])?;
            let labeling = find_closed_labeling(&g).ok_or(Error::NotClosed)?;
            let h = in_graph(&g, &labeling)?.to_graph()?;
            let oracle = hochster_betti(&h, config)?;
            summary.cases.push(LollipopCase { m, t, formula: formula.clone(), oracle });
            for handles in compositions(t, m) {
                let split = Graph::k_handle_lollipop(m, &handles)?;
                summary.compositions.push(CompositionCase {
                    m,
                    closed_form_matches: betti_lollipop(m, &handles)? == formula,
                    decomposition_matches: formula_table(&split)? == formula,
                    handles,
                });
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 4).len(), 8);
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1], vec![4]]);
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert!(compositions(0, 3).is_empty());
    }

    #[test]
    fn small_closed_strand_run() {
        let s = verify_closed_strand(5, &HochsterConfig::default()).unwrap();
        assert!(s.passed());
        // 1 + 2 + 4 + 11 + 34 classes
        assert_eq!(s.graphs, 52);
        assert!(s.closed > 0 && s.closed < s.graphs);
        assert!(verify_closed_strand(8, &HochsterConfig::default()).is_err());
    }

    #[test]
    fn small_lollipop_run() {
        let s = verify_lollipop(3, 2, &HochsterConfig::default()).unwrap();
        assert!(s.passed());
        assert_eq!(s.cases.len(), 4);
        // m = 2: [1], [2], [1,1]; m = 3: the same three
        assert_eq!(s.compositions.len(), 6);
    }
}
