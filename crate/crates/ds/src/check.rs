//! Oracle cross-check and the family-II candidate scan.

use std::collections::BTreeSet;
use std::fmt::Write;

use ds_core::descartes::{enumerate_primitive_ds, DSQuintuple};
use ds_core::solvers::{conjecture_checks, solve_all, CaseIISolution, SolverSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub c3_max: i64,
    pub oracle_count: usize,
    pub solver_count: usize,
    /// Found by brute force but by no solver.
    pub missing: Vec<DSQuintuple>,
    /// Produced by a solver but not by brute force.
    pub extra: Vec<DSQuintuple>,
}

impl CrossCheck {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn report(&self) -> String {
        let mut s = String::new();
        writeln!(s, "c3_max: {}", self.c3_max).unwrap();
        writeln!(s, "oracle: {} triples", self.oracle_count).unwrap();
        writeln!(s, "solvers: {} triples", self.solver_count).unwrap();
        writeln!(s, "missing from solvers: {}", self.missing.len()).unwrap();
        for q5 in &self.missing {
            writeln!(s, "  - {q5}").unwrap();
        }
        writeln!(s, "not found by oracle: {}", self.extra.len()).unwrap();
        for q5 in &self.extra {
            writeln!(s, "  + {q5}").unwrap();
        }
        writeln!(s, "result: {}", if self.is_clean() { "equal" } else { "DIFFERENT" }).unwrap();
        s
    }
}

pub fn crosscheck(c3_max: i64, set: SolverSet) -> CrossCheck {
    let oracle: BTreeSet<DSQuintuple> = enumerate_primitive_ds(c3_max).into_iter().collect();
    let solved: BTreeSet<DSQuintuple> = solve_all(c3_max, set).into_iter().collect();
    CrossCheck {
        c3_max,
        oracle_count: oracle.len(),
        solver_count: solved.len(),
        missing: oracle.difference(&solved).copied().collect(),
        extra: solved.difference(&oracle).copied().collect(),
    }
}

/// Statistics for one `a` with at least one candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub a: i64,
    pub checks: usize,
    pub x_below_y: usize,
    pub x_below_t_minus_2k: usize,
    pub counterexamples: Vec<CaseIISolution>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureScan {
    pub a_max: i64,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureScan {
    pub fn counterexample_count(&self) -> usize {
        self.rows.iter().map(|r| r.counterexamples.len()).sum()
    }

    pub fn check_count(&self) -> usize {
        self.rows.iter().map(|r| r.checks).sum()
    }

    /// Per-`a` CSV followed by nothing else; the summary is separate.
    pub fn csv(&self) -> String {
        let mut s = String::from("a,checks,x_below_y,x_below_t_minus_2k,counterexamples\n");
        for r in &self.rows {
            let ce: Vec<String> = r.counterexamples.iter().map(|c| c.quintuple.triple.to_string()).collect();
            writeln!(
                s,
                "{},{},{},{},\"{}\"",
                r.a,
                r.checks,
                r.x_below_y,
                r.x_below_t_minus_2k,
                ce.join(" ")
            )
            .unwrap();
        }
        s
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        writeln!(s, "a_max: {}", self.a_max).unwrap();
        writeln!(s, "values of a with candidates: {}", self.rows.len()).unwrap();
        writeln!(s, "candidate checks: {}", self.check_count()).unwrap();
        writeln!(s, "with 0 < X < Y: {}", self.rows.iter().map(|r| r.x_below_y).sum::<usize>()).unwrap();
        writeln!(s, "with X < t - 2k: {}", self.rows.iter().map(|r| r.x_below_t_minus_2k).sum::<usize>()).unwrap();
        writeln!(s, "counterexamples: {}", self.counterexample_count()).unwrap();
        for r in self.rows.iter().filter(|r| !r.counterexamples.is_empty()) {
            for c in &r.counterexamples {
                writeln!(s, "  a = {}: {}", r.a, c.quintuple).unwrap();
            }
        }
        s
    }
}

pub fn conjecture_scan(a_max: i64) -> ConjectureScan {
    let rows = (2..=a_max)
        .filter_map(|a| {
            let checks = conjecture_checks(a);
            (!checks.is_empty()).then(|| ConjectureRow {
                a,
                checks: checks.len(),
                x_below_y: checks.iter().filter(|c| c.x_below_y).count(),
                x_below_t_minus_2k: checks.iter().filter(|c| c.x_below_t_minus_2k).count(),
                counterexamples: checks.iter().filter_map(|c| c.counterexample).collect(),
            })
        })
        .collect();
    ConjectureScan { a_max, rows }
}
