//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use ds::check::{conjecture_scan, crosscheck};
use ds::cli::{default_data_dir, snapshot_path};
use ds::tables::{build_table, compare_with_golden, TableId};
use ds_core::arith::{factorize, gcd, rat};
use ds_core::descartes::{descartes_residual, enumerate_primitive_ds, q_squared, DSQuintuple};
use ds_core::forms::{pell_solutions_in_box, solve_definite, unique_xy_solution, PellSolution};
use ds_core::geometry::{
    classical_area, complete_scene, complex_descartes_holds, place_triple, tangency_defects, tangent_line, QuadSurd,
};
use ds_core::sequences::{parse_bfile, verify_terms, SequenceId};
use ds_core::solvers::{solve_all, zero_c4_triples, SolverSet};

const EQ1_C3_MAX: i64 = 500;
const EQ1_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_C3_MAX: i64 = 200;
const ORACLE_BUDGET: Duration = Duration::from_secs(120);
const COUNT_S_MAX: i64 = 313;
const COUNT_CONTROLS: [i64; 5] = [3, 5, 9, 11, 13];
const PELL_S_MAX: i64 = 60;
const PELL_A_MAX: i64 = 2000;
const PELL_BOX: i64 = 1500;
const PELL_BUDGET: Duration = Duration::from_secs(60);
const AREA_PRINTED_REL_TOL: f64 = 5e-4;
const AREA_SURD_REL_TOL: f64 = 1e-12;
const GEOMETRY_C3_MAX: i64 = 60;
const TANGENT_LINE_N_MAX: i64 = 24;
const CONJECTURE_A_MAX: i64 = 50000;
const SEQUENCE_MIN_TERMS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let r = f();
    let took = start.elapsed();
    match r {
        Ok(msg) if took <= budget => Ok(format!("{msg}; {:.1}s of {}s", took.as_secs_f64(), budget.as_secs())),
        Ok(msg) => Err(format!("{msg}; over budget: {:.1}s > {}s", took.as_secs_f64(), budget.as_secs())),
        Err(e) => Err(e),
    }
}

fn quintuple_holds(q5: &DSQuintuple) -> bool {
    q_squared(&q5.triple) == q5.q * q5.q
        && q5.configurations().iter().all(|c| descartes_residual(*c) == 0)
}

fn descartes_identity() -> Outcome {
    timed(EQ1_BUDGET, || {
        let oracle = enumerate_primitive_ds(EQ1_C3_MAX);
        let solved = solve_all(EQ1_C3_MAX, SolverSet::ALL);
        let bad: Vec<&DSQuintuple> = oracle.iter().chain(&solved).filter(|q| !quintuple_holds(q)).collect();
        if bad.is_empty() {
            Ok(format!("{} oracle + {} solver quintuples, c3 <= {EQ1_C3_MAX}", oracle.len(), solved.len()))
        } else {
            Err(format!("{} quintuples violate the identity, first {}", bad.len(), bad[0]))
        }
    })
}

fn golden_tables() -> Outcome {
    let mut failures = Vec::new();
    let mut rows = 0;
    for id in TableId::ALL {
        let t = build_table(id, id.default_bound());
        rows += t.rows.len();
        let diff = compare_with_golden(id, &t);
        if !diff.is_empty() {
            failures.push(format!(
                "table {}: {} missing, {} extra, order differs {}",
                id.number(),
                diff.missing.len(),
                diff.extra.len(),
                diff.order_differs
            ));
        }
    }
    if failures.is_empty() {
        Ok(format!("6 tables, {rows} rows"))
    } else {
        Err(failures.join("; "))
    }
}

fn oracle_equivalence() -> Outcome {
    timed(ORACLE_BUDGET, || {
        let c = crosscheck(ORACLE_C3_MAX, SolverSet::ALL);
        if c.is_clean() {
            Ok(format!("{} triples on both sides, c3 <= {ORACLE_C3_MAX}", c.oracle_count))
        } else {
            Err(format!("{} missing, {} extra", c.missing.len(), c.extra.len()))
        }
    })
}

/// Odd `s > 1` with every prime factor `1` or `7 (mod 8)`.
fn is_solvable(s: i64) -> bool {
    s > 1 && s % 2 == 1 && factorize(s as u64).factors.iter().all(|&(p, _)| p % 8 == 1 || p % 8 == 7)
}

fn counting() -> Outcome {
    let mut checked = 0;
    for s in (3..=COUNT_S_MAX).step_by(2) {
        let f = factorize(s as u64);
        let found = unique_xy_solution(s).map_err(|e| format!("s = {s}: {e:?}"))?;
        if is_solvable(s) {
            let distinct = f.factors.len() as u32;
            let expected = 1usize << (distinct - 1);
            if found.len() != expected {
                return Err(format!("s = {s}: {} solutions, expected {expected}", found.len()));
            }
            checked += 1;
        } else if !found.is_empty() {
            return Err(format!("s = {s} is not solvable but has {} solutions", found.len()));
        }
    }
    let golden_s: BTreeSet<i64> = build_table(TableId::CaseI, COUNT_S_MAX)
        .string_rows()
        .iter()
        .map(|r| r[0].parse().unwrap())
        .collect();
    let solvable: BTreeSet<i64> = (3..=COUNT_S_MAX).filter(|&s| is_solvable(s)).collect();
    if golden_s != solvable {
        return Err("table 3 s column differs from the solvable set".into());
    }
    for s in COUNT_CONTROLS {
        if unique_xy_solution(s).is_ok_and(|v| !v.is_empty()) {
            return Err(format!("control s = {s} has solutions"));
        }
    }
    if unique_xy_solution(4).is_ok() {
        return Err("even s accepted".into());
    }
    Ok(format!("{checked} solvable s <= {COUNT_S_MAX}, controls {COUNT_CONTROLS:?} empty"))
}

fn brute_force_box(k: i64, bound: i64) -> Vec<PellSolution> {
    let mut out = Vec::new();
    for y in 1..=bound {
        let x2 = k + 2 * y * y;
        if x2 < 0 {
            continue;
        }
        let x = (x2 as f64).sqrt().round() as i64;
        let x = (x - 1..=x + 1).find(|v| *v >= 0 && v * v == x2);
        if let Some(x) = x.filter(|&x| x <= bound && gcd(x, y) == 1) {
            out.push(PellSolution { x, y, k });
            if x != 0 {
                out.push(PellSolution { x: -x, y, k });
            }
        }
    }
    out.sort_unstable();
    out
}

fn pell_oracle() -> Outcome {
    timed(PELL_BUDGET, || {
        let mut ks: Vec<i64> = (1..=PELL_S_MAX).step_by(2).map(|s| -s * s).collect();
        ks.extend((1..=PELL_A_MAX).filter(|&a| !solve_definite(a).is_empty()).map(|a| -a));
        ks.sort_unstable();
        ks.dedup();
        let mut total = 0;
        for &k in &ks {
            let fam = pell_solutions_in_box(k, PELL_BOX, PELL_BOX).map_err(|e| format!("k = {k}: {e:?}"))?;
            let brute = brute_force_box(k, PELL_BOX);
            if fam != brute {
                return Err(format!("k = {k}: {} from families, {} by search", fam.len(), brute.len()));
            }
            total += fam.len();
        }
        Ok(format!("{} values of k, {total} solutions in the box", ks.len()))
    })
}

fn rel_err(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

fn classical_areas() -> Outcome {
    let r = classical_area(rat(5, 2));
    let exact = QuadSurd::new(rat(-681, 169), rat(196, 169), 77);
    if r.area_over_pi != exact {
        return Err(format!("F/pi = {}", r.area_over_pi));
    }
    let surd_value = (196.0 * 77f64.sqrt() - 681.0) / 169.0;
    let checks = [
        ("F/pi vs surd", r.area_over_pi.to_f64(), surd_value, AREA_SURD_REL_TOL),
        ("F", r.area(), 19.312, AREA_PRINTED_REL_TOL),
        ("F'", r.area_prime(), 19.176, AREA_PRINTED_REL_TOL),
        ("lambda", r.scale_for_area(120.0), 2.493, AREA_PRINTED_REL_TOL),
    ];
    for (name, got, want, tol) in checks {
        if rel_err(got, want) > tol {
            return Err(format!("{name}: {got} vs {want}"));
        }
    }
    Ok(format!("F = {:.6}, F' = {:.6}, lambda = {:.6}", r.area(), r.area_prime(), r.scale_for_area(120.0)))
}

fn geometry() -> Outcome {
    let all = enumerate_primitive_ds(GEOMETRY_C3_MAX);
    for q5 in &all {
        let scene = complete_scene(&q5.triple);
        if !tangency_defects(&scene).is_empty() {
            return Err(format!("{}: tangency defects", q5.triple));
        }
        for c in scene.c4_plus.iter().chain(scene.c4_minus.iter()) {
            if !complex_descartes_holds(&scene, c) {
                return Err(format!("{}: complex Descartes fails", q5.triple));
            }
        }
        if place_triple(q5).given.iter().any(|c| c.center.as_rationals().is_none()) {
            return Err(format!("{}: irrational center", q5.triple));
        }
    }
    let mut lines = 0;
    for n in 2..=TANGENT_LINE_N_MAX {
        for q5 in zero_c4_triples(n) {
            let scene = place_triple(&q5);
            let line = tangent_line(&scene).map_err(|e| format!("{}: {e}", q5.triple))?;
            for c in &scene.given {
                let r = c.radius();
                if line.dist2(&c.center) != r * r {
                    return Err(format!("{}: line not tangent", q5.triple));
                }
            }
            lines += 1;
        }
    }
    Ok(format!("{} quintuples with c3 <= {GEOMETRY_C3_MAX}, {lines} tangent lines", all.len()))
}

fn conjecture() -> Outcome {
    let scan = conjecture_scan(CONJECTURE_A_MAX);
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("conjecture_report.csv");
    fs::write(&path, scan.csv()).map_err(|e| format!("writing {}: {e}", path.display()))?;
    if scan.rows.is_empty() {
        return Err("no candidates scanned".into());
    }
    match scan.counterexample_count() {
        0 => Ok(format!(
            "{} values of a, {} checks, 0 counterexamples; report {}",
            scan.rows.len(),
            scan.check_count(),
            path.display()
        )),
        n => Err(format!("{n} counterexamples; report {}", path.display())),
    }
}

fn sequences() -> Outcome {
    let dir = default_data_dir();
    let mut shortest = usize::MAX;
    for id in SequenceId::ALL {
        let path = snapshot_path(&dir, id);
        let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let terms = parse_bfile(&text).map_err(|e| format!("{id}: {e}"))?;
        let report = verify_terms(id, &terms).map_err(|e| format!("{id}: {e}"))?;
        if let Some(d) = report.divergence {
            return Err(format!("{id} diverges at {}", d.index));
        }
        if report.snapshot_len < SEQUENCE_MIN_TERMS {
            return Err(format!("{id}: only {} terms", report.snapshot_len));
        }
        shortest = shortest.min(report.snapshot_len);
    }
    Ok(format!("10 sequences, at least {shortest} terms each"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Descartes identity", descartes_identity),
        ("golden tables", golden_tables),
        ("oracle equivalence", oracle_equivalence),
        ("solution counts", counting),
        ("Pell oracle", pell_oracle),
        ("classical areas", classical_areas),
        ("geometry exactness", geometry),
        ("conjecture scan", conjecture),
        ("sequence snapshots", sequences),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("PASS {} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
