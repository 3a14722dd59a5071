//! The six reference tables, generated from the solvers, and their golden copies.

use std::collections::BTreeSet;

use ds_core::descartes::DSQuintuple;
use ds_core::solvers::{
    case_i_rows, equal_pair_triples, m_pairs, solve_case_ii, solve_case_iii, zero_c4_triples,
    CaseIISolution, DistinctCase, EqualPairType,
};

use crate::table::{parse_csv, Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableId {
    /// Triples with two equal curvatures, by generating pair `(n, m)`.
    EqualPairs = 1,
    /// Triples with distinct curvatures.
    Distinct = 2,
    /// `q = c3`.
    CaseI = 3,
    /// `q = c3 - k`.
    CaseII = 4,
    /// `q = c3 + k`.
    CaseIII = 5,
    /// `c4- = 0`, `c3 = n^2`.
    ZeroC4 = 6,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::EqualPairs,
        TableId::Distinct,
        TableId::CaseI,
        TableId::CaseII,
        TableId::CaseIII,
        TableId::ZeroC4,
    ];

    pub fn from_number(n: u8) -> Option<TableId> {
        TableId::ALL.into_iter().find(|t| *t as u8 == n)
    }

    pub fn number(self) -> u8 {
        self as u8
    }

    /// Bound covered by the golden copy.
    pub fn default_bound(self) -> i64 {
        match self {
            TableId::EqualPairs => 17,
            TableId::Distinct => 38,
            TableId::CaseI => 313,
            TableId::CaseII => 37,
            TableId::CaseIII => 35,
            TableId::ZeroC4 => 24,
        }
    }

    pub fn bound_name(self) -> &'static str {
        match self {
            TableId::EqualPairs | TableId::ZeroC4 => "n_max",
            TableId::CaseI => "s_max",
            _ => "c3_max",
        }
    }

    pub fn golden_csv(self) -> &'static str {
        match self {
            TableId::EqualPairs => include_str!("../golden/table1.csv"),
            TableId::Distinct => include_str!("../golden/table2.csv"),
            TableId::CaseI => include_str!("../golden/table3.csv"),
            TableId::CaseII => include_str!("../golden/table4.csv"),
            TableId::CaseIII => include_str!("../golden/table5.csv"),
            TableId::ZeroC4 => include_str!("../golden/table6.csv"),
        }
    }
}

fn quintuple_cells(q5: &DSQuintuple) -> Vec<Cell> {
    let [c1, c2, c3] = q5.triple.as_array();
    vec![c1.into(), c2.into(), c3.into(), q5.q.into(), q5.c4_minus.into(), q5.c4_plus.into()]
}

fn tuple_text(t: &[i64]) -> String {
    let parts: Vec<String> = t.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn equal_pair_table(n_max: i64) -> Table {
    let mut t = Table::new(
        format!("Primitive triples with two equal curvatures, n <= {n_max}"),
        vec!["n", "m", "type", "c1", "c2", "c3", "q", "c4_minus", "c4_plus"],
    );
    for p in m_pairs(n_max) {
        for e in equal_pair_triples(p) {
            let kind = match e.kind {
                EqualPairType::I => "I",
                EqualPairType::II => "II",
            };
            let mut row = vec![p.n.into(), p.m.into(), kind.into()];
            row.extend(quintuple_cells(&e.quintuple));
            t.push(row);
        }
    }
    t
}

/// Distinct-curvature triples from the solvers, before any table shaping.
fn distinct_solutions(case: DistinctCase, c3_max: i64) -> Vec<CaseIISolution> {
    let solve = match case {
        DistinctCase::II => solve_case_ii,
        DistinctCase::III => solve_case_iii,
    };
    let mut seen = BTreeSet::new();
    let mut out: Vec<CaseIISolution> = (3..8 * c3_max * c3_max)
        .flat_map(solve)
        .filter(|s| s.quintuple.triple.c3() <= c3_max && s.quintuple.triple.is_distinct())
        .filter(|s| seen.insert(s.quintuple.triple))
        .collect();
    out.sort_by_key(|s| s.quintuple.triple);
    out
}

pub fn distinct_table(c3_max: i64) -> Table {
    let mut t = Table::new(
        format!("Distinct primitive triples, c3 <= {c3_max}"),
        vec!["c1", "c2", "c3", "q", "c4_minus", "c4_plus"],
    );
    let mut all: Vec<DSQuintuple> = distinct_solutions(DistinctCase::II, c3_max)
        .into_iter()
        .chain(distinct_solutions(DistinctCase::III, c3_max))
        .map(|s| s.quintuple)
        .collect();
    all.extend(
        (3..=2 * c3_max)
            .step_by(2)
            .flat_map(case_i_rows)
            .map(|r| r.quintuple)
            .filter(|q5| q5.triple.c3() <= c3_max && q5.triple.is_distinct()),
    );
    all.sort();
    all.dedup();
    for q5 in &all {
        t.push(quintuple_cells(q5));
    }
    t
}

pub fn case_i_table(s_max: i64) -> Table {
    let mut t = Table::new(
        format!("Triples with q = c3, s <= {s_max}"),
        vec!["s", "x", "y", "X", "Y", "q", "t_tuple", "conjugate_t_tuple"],
    );
    for s in (3..=s_max).step_by(2) {
        for r in case_i_rows(s) {
            t.push(vec![
                r.s.into(),
                r.x.into(),
                r.y.into(),
                r.xy.x.into(),
                r.xy.y.into(),
                r.quintuple.q.into(),
                tuple_text(&r.t_tuple).into(),
                tuple_text(&r.conjugate_t_tuple).into(),
            ]);
        }
    }
    t
}

pub fn case_table(case: DistinctCase, c3_max: i64) -> Table {
    let relation = match case {
        DistinctCase::II => "q = c3 - k",
        DistinctCase::III => "q = c3 + k",
    };
    let mut t = Table::new(
        format!("Triples with {relation}, c3 <= {c3_max}"),
        vec!["c3", "X", "Y_hat", "c1", "c2", "q", "k", "t", "a", "c4_minus", "c4_plus"],
    );
    for s in distinct_solutions(case, c3_max) {
        let q5 = &s.quintuple;
        let [c1, c2, c3] = q5.triple.as_array();
        t.push(vec![
            c3.into(),
            s.x.into(),
            s.y_hat.into(),
            c1.into(),
            c2.into(),
            q5.q.into(),
            s.k.into(),
            s.t.into(),
            s.a.into(),
            q5.c4_minus.into(),
            q5.c4_plus.into(),
        ]);
    }
    t
}

pub fn zero_c4_table(n_max: i64) -> Table {
    let mut t = Table::new(
        format!("Primitive triples with c4- = 0, c3 = n^2, n <= {n_max}"),
        vec!["n", "c1", "c2", "c3", "q", "c4_minus", "c4_plus"],
    );
    for n in 2..=n_max {
        for q5 in zero_c4_triples(n) {
            let mut row = vec![n.into()];
            row.extend(quintuple_cells(&q5));
            t.push(row);
        }
    }
    t
}

pub fn build_table(id: TableId, bound: i64) -> Table {
    match id {
        TableId::EqualPairs => equal_pair_table(bound),
        TableId::Distinct => distinct_table(bound),
        TableId::CaseI => case_i_table(bound),
        TableId::CaseII => case_table(DistinctCase::II, bound),
        TableId::CaseIII => case_table(DistinctCase::III, bound),
        TableId::ZeroC4 => zero_c4_table(bound),
    }
}

/// Row-level differences between a generated table and its golden copy.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldenDiff {
    pub header_mismatch: Option<(Vec<String>, Vec<String>)>,
    /// Rows in the golden copy that were not generated.
    pub missing: Vec<Vec<String>>,
    /// Generated rows absent from the golden copy.
    pub extra: Vec<Vec<String>>,
    /// Same rows, different order.
    pub order_differs: bool,
}

impl GoldenDiff {
    pub fn is_empty(&self) -> bool {
        self.header_mismatch.is_none() && self.missing.is_empty() && self.extra.is_empty() && !self.order_differs
    }
}

pub fn compare_with_golden(id: TableId, table: &Table) -> GoldenDiff {
    let (gh, grows) = parse_csv(id.golden_csv()).expect("golden files are valid CSV");
    let header: Vec<String> = table.header.iter().map(|h| h.to_string()).collect();
    let rows = table.string_rows();
    let gset: BTreeSet<&Vec<String>> = grows.iter().collect();
    let rset: BTreeSet<&Vec<String>> = rows.iter().collect();
    let mut diff = GoldenDiff {
        header_mismatch: (gh != header).then(|| (gh.clone(), header.clone())),
        missing: grows.iter().filter(|r| !rset.contains(r)).cloned().collect(),
        extra: rows.iter().filter(|r| !gset.contains(r)).cloned().collect(),
        order_differs: false,
    };
    diff.order_differs = diff.missing.is_empty() && diff.extra.is_empty() && grows != rows;
    diff
}
