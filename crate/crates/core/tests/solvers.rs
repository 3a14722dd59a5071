use std::collections::BTreeSet;

use ds_core::arith::gcd;
use ds_core::descartes::{enumerate_primitive_ds, DSQuintuple};
use ds_core::solvers::{
    classify, conjecture_checks, equal_pair_triples, m_pairs, solve_all, solve_case_i, solve_case_ii,
    solve_case_iii, zero_c4_triples, DistinctCase, SolverSet, SolutionType, TripleClass,
};

#[test]
fn union_equals_brute_force() {
    let oracle: BTreeSet<DSQuintuple> = enumerate_primitive_ds(200).into_iter().collect();
    let solved: BTreeSet<DSQuintuple> = solve_all(200, SolverSet::ALL).into_iter().collect();
    assert_eq!(oracle, solved);
}

#[test]
fn equal_pairs_are_pythagorean() {
    for p in m_pairs(40) {
        for e in equal_pair_triples(p) {
            let [c1, c2, c3] = e.quintuple.triple.as_array();
            let (rep, other) = if c1 == c2 { (c1, c3) } else { (c3, c1) };
            let q = e.quintuple.q;
            assert_eq!(q * q + other * other, (rep + other) * (rep + other));
            assert_eq!(gcd(q, other), 1);
            assert_eq!(gcd(q, rep + other), 1);
            assert_eq!(gcd(other, rep + other), 1);
            assert!(matches!(classify(&e.quintuple), TripleClass::EqualPair(k) if k == e.kind));
        }
    }
    for n in 2..40 {
        assert_eq!(m_pairs(n).iter().filter(|p| p.n == n).count() as u64, ds_core::arith::euler_phi(2 * n as u64) / 2);
    }
}

#[test]
fn zero_c4_counts_and_primitivity() {
    for n in 2..=60i64 {
        let all = zero_c4_triples(n);
        let expected = if n == 2 { 1 } else { ds_core::arith::euler_phi(n as u64) / 2 };
        assert_eq!(all.len() as u64, expected, "n = {n}");
        for q5 in all {
            assert_eq!(q5.c4_minus, 0);
            assert_eq!(q5.c4_plus, 4 * q5.q);
            let [c1, _, c3] = q5.triple.as_array();
            assert_eq!(gcd(c1, c3), 1);
        }
    }
}

#[test]
fn case_i_rows_have_q_equal_c3() {
    for row in solve_case_i(313) {
        assert_eq!(row.quintuple.q, row.quintuple.triple.c3());
        assert_eq!(gcd(row.x, row.y), 1);
    }
}

#[test]
fn distinct_cases_satisfy_their_identities() {
    for a in 3..20_000 {
        for s in solve_case_ii(a).into_iter().chain(solve_case_iii(a)) {
            let [c1, c2, c3] = s.quintuple.triple.as_array();
            let q = s.quintuple.q;
            let (x, y) = (c1, c2);
            let signed_k = match s.case {
                DistinctCase::II => {
                    assert!(2 * c1 * c1 + c2 * c2 < q * q && q < c3, "{s:?}");
                    s.k
                }
                DistinctCase::III => {
                    assert!(q > c3);
                    -s.k
                }
            };
            assert_eq!(x * x + y * y + 6 * x * y + 4 * signed_k * (x + y), s.t * s.t);
            assert_eq!(s.x * s.x - 2 * s.y_hat * s.y_hat, -a);
            assert_eq!(s.t * s.t + 2 * s.k * s.k, a);
            if s.kind == SolutionType::BothImproper {
                assert_eq!(gcd(s.xy_scale, s.tk_scale), 1, "{s:?}");
            }
        }
    }
}

#[test]
fn conjecture_has_no_counterexample_below_5000() {
    for a in 3..5000 {
        for c in conjecture_checks(a) {
            assert!(c.counterexample.is_none(), "{c:?}");
        }
    }
}

#[test]
fn both_improper_can_be_primitive() {
    let hit = solve_case_ii(3969)
        .into_iter()
        .find(|s| s.quintuple.triple.as_array() == [4, 13, 61])
        .unwrap();
    assert_eq!(hit.kind, SolutionType::BothImproper);
    assert_eq!((hit.x, hit.y_hat, hit.t, hit.k), (9, 45, 49, 28));
    assert_eq!((hit.xy_scale, hit.tk_scale), (9, 7));
    assert_eq!(hit.quintuple.q, 33);
}

#[test]
fn first_type_c_and_both_improper_examples() {
    let c = solve_case_ii(1666);
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].kind, SolutionType::C);
    assert_eq!(c[0].quintuple.triple.as_array(), [2, 6, 39]);
    assert_eq!((c[0].quintuple.c4_minus, c[0].quintuple.c4_plus), (11, 83));
    assert!((3..1666).all(|a| solve_case_ii(a).iter().all(|s| s.kind != SolutionType::C)));

    let iii = solve_case_iii(14994);
    let hit = iii.iter().find(|s| s.kind == SolutionType::BothImproper).unwrap();
    assert_eq!(hit.quintuple.triple.as_array(), [55, 67, 82]);
    assert_eq!((hit.xy_scale, hit.tk_scale), (3, 7));
}
