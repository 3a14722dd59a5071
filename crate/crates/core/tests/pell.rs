use std::collections::BTreeSet;

use ds_core::arith::{factorize, gcd};
use ds_core::forms::{
    family_iterate, pell_solutions_in_box, solve_pell_families, unique_xy_solution, FamilyTag, PellSolution,
};

fn brute_box(k: i64, x_max: i64, y_max: i64) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for x in -x_max..=x_max {
        let twice = x * x - k;
        if twice <= 0 || twice % 2 != 0 {
            continue;
        }
        let y2 = twice / 2;
        let y = (y2 as f64).sqrt().round() as i64;
        if y * y == y2 && y <= y_max && gcd(x, y) == 1 {
            out.insert((x, y));
        }
    }
    out
}

fn family_box(k: i64, x_max: i64, y_max: i64) -> BTreeSet<(i64, i64)> {
    pell_solutions_in_box(k, x_max, y_max).unwrap().into_iter().map(|p| (p.x, p.y)).collect()
}

#[test]
fn families_match_lattice_search() {
    for m in 1..=5000 {
        let k = -m;
        assert_eq!(family_box(k, 1000, i64::MAX), brute_box(k, 1000, i64::MAX), "k = {k}");
    }
}

fn solvable_s(limit: i64) -> Vec<i64> {
    (3..=limit)
        .step_by(2)
        .filter(|&s| factorize(s as u64).factors.iter().all(|&(p, _)| p % 8 == 1 || p % 8 == 7))
        .collect()
}

#[test]
fn proper_solution_count() {
    for s in solvable_s(313) {
        let f = factorize(s as u64);
        let expected = 1usize << (f.count_class(1) + f.count_class(7) - 1);
        assert_eq!(unique_xy_solution(s).unwrap().len(), expected, "s = {s}");
    }
    for s in [3, 5, 9, 11, 13] {
        assert!(unique_xy_solution(s).unwrap().is_empty());
    }
}

#[test]
fn positive_fundamental_bounds() {
    for s in solvable_s(313) {
        for p in unique_xy_solution(s).unwrap() {
            assert!(0 < p.x && p.x < p.y && p.y < s, "s = {s}: {p:?}");
        }
    }
}

#[test]
fn solution_invariants_for_square_k() {
    for s in solvable_s(313) {
        for fam in solve_pell_families(-s * s) {
            assert!(!fam.window_exceeded);
            for i in -5..=5 {
                let p = family_iterate(&fam, i);
                // All odd, so X + Y is even.
                assert!(p.x % 2 != 0 && p.y % 2 != 0);
                let tri = |n: i64| n * (n + 1) / 2;
                let (hx, hs, hy) = ((p.x.abs() - 1) / 2, (s - 1) / 2, (p.y - 1) / 2);
                assert_eq!(tri(hx) + tri(hs), 2 * tri(hy), "s = {s}: {p:?}");
                assert!((p.x as f64).abs() / (p.y as f64) < 2f64.sqrt());
                assert!(2 * p.y * p.y >= s * s, "Y >= s / sqrt(2)");
            }
        }
    }
}

#[test]
fn conjugate_families_mirror() {
    for s in [7, 17, 23, 119] {
        let fams = solve_pell_families(-s * s);
        for one in fams.iter().filter(|f| f.tag == Some(FamilyTag::I)) {
            let two = fams.iter().find(|f| f.j == one.conjugate_j).unwrap();
            assert_eq!(two.tag, Some(FamilyTag::II));
            let members: BTreeSet<PellSolution> = (-8..=8).map(|i| family_iterate(two, i)).collect();
            for i in -4..=4 {
                let p = family_iterate(one, i);
                assert!(members.contains(&PellSolution::new(-p.x, p.y)), "s = {s}, i = {i}");
            }
        }
    }
}
