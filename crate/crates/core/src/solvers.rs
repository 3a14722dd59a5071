//! Structured generators for primitive DS triples, one per shape or case,
//! and their union.

use alloc::vec::Vec;

use num_integer::Roots;

use crate::arith::{factorize, gcd};
use crate::descartes::{is_primitive, quintuple, CurvatureTriple, DSQuintuple};
use crate::forms::{
    positive_solutions_below, solve_definite, solve_pell_families, FamilyTag, IntMatrix2, PellSolution,
};

/// `(n, m)` with `n > m >= 1`, `gcd(n, m) = 1` and `n + m` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MPair {
    pub n: i64,
    pub m: i64,
}

impl MPair {
    pub fn new(n: i64, m: i64) -> Option<Self> {
        (n > m && m >= 1 && gcd(n, m) == 1 && (n + m) % 2 == 1).then_some(MPair { n, m })
    }
}

/// All pairs with `n <= n_max`, ordered by `n`, then `m`.
pub fn m_pairs(n_max: i64) -> Vec<MPair> {
    (2..=n_max)
        .flat_map(|n| (1..n).filter_map(move |m| MPair::new(n, m)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EqualPairType {
    /// Repeated curvature `(n - m)^2`, `q = n^2 - m^2`.
    I,
    /// Repeated curvature `2 m^2`, `q = 2 n m`.
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EqualPairTriple {
    pub pair: MPair,
    pub kind: EqualPairType,
    pub quintuple: DSQuintuple,
}

/// The type I and type II triples with two equal curvatures built from `p`.
pub fn equal_pair_triples(p: MPair) -> [EqualPairTriple; 2] {
    let MPair { n, m } = p;
    let odd = (n - m) * (n - m);
    let first = if n * n + m * m < 4 * n * m {
        [odd, odd, 2 * n * m]
    } else {
        [2 * n * m, odd, odd]
    };
    let type_one = DSQuintuple {
        triple: triple_of(first),
        q: n * n - m * m,
        c4_minus: 2 * m * (2 * m - n),
        c4_plus: 2 * n * (2 * n - m),
    };
    let even = 2 * m * m;
    let second = if 3 * m * m < n * n {
        [even, even, n * n - m * m]
    } else {
        [n * n - m * m, even, even]
    };
    let type_two = DSQuintuple {
        triple: triple_of(second),
        q: 2 * n * m,
        c4_minus: (n - m) * (n - 3 * m),
        c4_plus: (n + m) * (n + 3 * m),
    };
    [
        EqualPairTriple { pair: p, kind: EqualPairType::I, quintuple: type_one },
        EqualPairTriple { pair: p, kind: EqualPairType::II, quintuple: type_two },
    ]
}

fn triple_of(v: [i64; 3]) -> CurvatureTriple {
    CurvatureTriple::sorted(v[0], v[1], v[2]).expect("curvatures are positive")
}

/// Primitive triples `[M^2, N^2, (M + N)^2]` with `M + N = n`, sorted canonically.
pub fn zero_c4_triples(n: i64) -> Vec<DSQuintuple> {
    assert!(n >= 2, "n must be at least 2");
    let mut out: Vec<DSQuintuple> = (1..=n / 2)
        .filter(|&m| gcd(m, n) == 1)
        .map(|m| {
            let l = n - m;
            let q = m * m + m * l + l * l;
            DSQuintuple {
                triple: triple_of([m * m, l * l, n * n]),
                q,
                c4_minus: 0,
                c4_plus: 4 * q,
            }
        })
        .collect();
    out.sort_unstable();
    out
}

/// A triple with `q = c3` from a proper solution of `X^2 - 2 Y^2 = -s^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseIRow {
    pub s: i64,
    pub x: i64,
    pub y: i64,
    pub xy: PellSolution,
    pub quintuple: DSQuintuple,
    /// Reduction exponents of the family-I rpapf.
    pub t_tuple: Vec<i64>,
    /// Reduction exponents of the conjugate (family II) rpapf.
    pub conjugate_t_tuple: Vec<i64>,
}

/// Rows for one odd `s >= 3`, sorted by `q`.
pub fn case_i_rows(s: i64) -> Vec<CaseIRow> {
    if s < 3 || s % 2 == 0 {
        return Vec::new();
    }
    let fams = solve_pell_families(-s * s);
    let mut rows: Vec<CaseIRow> = fams
        .iter()
        .filter(|f| f.tag == Some(FamilyTag::I))
        .filter_map(|f| {
            let (p, _) = f.ppfs?;
            if !(0 < p.x && p.x < p.y) {
                return None;
            }
            let conj = fams.iter().find(|g| g.j == f.conjugate_j)?;
            let (x, y) = ((p.y - p.x) / 2, (p.y + p.x) / 2);
            let c3 = (p.y + s) / 2;
            let q5 = quintuple(&CurvatureTriple::new(x, y, c3).ok()?)?;
            debug_assert_eq!(q5.q, c3);
            Some(CaseIRow {
                s,
                x,
                y,
                xy: p,
                quintuple: q5,
                t_tuple: f.t_tuple().to_vec(),
                conjugate_t_tuple: conj.t_tuple().to_vec(),
            })
        })
        .collect();
    rows.sort_unstable_by_key(|r| (r.quintuple.q, r.x));
    rows
}

/// All case-i rows for odd `3 <= s <= s_max`.
pub fn solve_case_i(s_max: i64) -> Vec<CaseIRow> {
    (3..=s_max).step_by(2).flat_map(case_i_rows).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DistinctCase {
    /// `q = c3 - k`.
    II,
    /// `q = c3 + k`.
    III,
}

/// How the two representations of `a` combine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SolutionType {
    /// Both `(X, Y^)` and `(t, k)` proper.
    A,
    /// `(X, Y^)` improper, `(t, k)` proper.
    B,
    /// `(X, Y^)` proper, `(t, k)` improper.
    C,
    /// Both improper with coprime scale factors.
    BothImproper,
}

/// A distinct triple with `q != c3` and its data `X^2 - 2 Y^2 = -a = -(t^2 + 2 k^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseIISolution {
    pub case: DistinctCase,
    pub a: i64,
    pub x: i64,
    pub y_hat: i64,
    pub t: i64,
    pub k: i64,
    /// Common factor of `(X, Y^)`.
    pub xy_scale: i64,
    /// Common factor of `(t, k)`.
    pub tk_scale: i64,
    pub quintuple: DSQuintuple,
    pub kind: SolutionType,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct XyCandidate {
    x: i64,
    y_hat: i64,
    scale: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct TkCandidate {
    t: i64,
    k: i64,
    scale: i64,
}

/// `true` unless some prime `= 3, 5, 7 (mod 8)` divides `a` to an odd power.
pub fn may_represent(a: i64) -> bool {
    a >= 3
        && factorize(a as u64)
            .factors
            .iter()
            .all(|&(p, e)| p == 2 || p % 8 == 1 || e % 2 == 0)
}

fn square_divisors(a: i64) -> Vec<i64> {
    factorize(a as u64).square_divisor_roots().into_iter().map(|g| g as i64).collect()
}

/// `(X, Y^)` with `X^2 - 2 Y^2 = -a`, `0 < X < x_bound`, proper or scaled proper.
fn xy_candidates(a: i64, x_bound: i64) -> Vec<XyCandidate> {
    let mut out = Vec::new();
    for g in square_divisors(a) {
        let reduced = a / (g * g);
        let sols = positive_solutions_below(-reduced, (x_bound + g - 1) / g).expect("k < 0");
        out.extend(sols.into_iter().map(|p| XyCandidate { x: g * p.x, y_hat: g * p.y, scale: g }));
    }
    out
}

/// `(t, k)` with `t^2 + 2 k^2 = a`, `t, k > 0`, proper or scaled proper.
fn tk_candidates(a: i64) -> Vec<TkCandidate> {
    let mut out = Vec::new();
    for h in square_divisors(a) {
        for (t, k) in solve_definite(a / (h * h)) {
            if t > 0 && k > 0 {
                out.push(TkCandidate { t: h * t, k: h * k, scale: h });
            }
        }
    }
    out
}

fn kind_of(xy_scale: i64, tk_scale: i64) -> SolutionType {
    match (xy_scale > 1, tk_scale > 1) {
        (false, false) => SolutionType::A,
        (true, false) => SolutionType::B,
        (false, true) => SolutionType::C,
        (true, true) => SolutionType::BothImproper,
    }
}

/// The final solution from one pair of candidates, if the triple is valid, distinct and primitive.
fn combine(case: DistinctCase, a: i64, xy: &XyCandidate, tk: &TkCandidate) -> Option<CaseIISolution> {
    let signed_k = match case {
        DistinctCase::II => tk.k,
        DistinctCase::III => -tk.k,
    };
    let c1n = xy.y_hat - signed_k - xy.x;
    let c3n = xy.y_hat + signed_k + tk.t;
    if c1n <= 0 || c1n % 2 != 0 || c3n % 2 != 0 {
        return None;
    }
    let (c1, c2, c3) = (c1n / 2, c1n / 2 + xy.x, c3n / 2);
    if xy.x <= 0 || c2 >= c3 {
        return None;
    }
    let triple = CurvatureTriple::new(c1, c2, c3).ok()?;
    if !is_primitive(&triple) {
        return None;
    }
    let q5 = quintuple(&triple)?;
    debug_assert_eq!(q5.q, c3 - signed_k);
    Some(CaseIISolution {
        case,
        a,
        x: xy.x,
        y_hat: xy.y_hat,
        t: tk.t,
        k: tk.k,
        xy_scale: xy.scale,
        tk_scale: tk.scale,
        quintuple: q5,
        kind: kind_of(xy.scale, tk.scale),
    })
}

fn combine_all(case: DistinctCase, a: i64, xys: &[XyCandidate], tks: &[TkCandidate]) -> Vec<CaseIISolution> {
    let mut out: Vec<CaseIISolution> = xys
        .iter()
        .flat_map(|xy| tks.iter().filter_map(move |tk| combine(case, a, xy, tk)))
        .collect();
    out.sort_unstable_by_key(|s| s.quintuple);
    out.dedup_by_key(|s| s.quintuple.triple);
    out
}

/// Largest `X` that can satisfy `0 < X < Y` for the given case.
fn x_bound(case: DistinctCase, a: i64) -> i64 {
    match case {
        // X < Y^ - k < Y^ forces X^2 < a.
        DistinctCase::II => a.sqrt() + 1,
        // X < Y^ + k with k <= sqrt(a/2).
        DistinctCase::III => 2 * (a / 2).sqrt() + (2 * a).sqrt() + 2,
    }
}

/// Final primitive triples with `q = c3 - k` whose data has this `a`.
pub fn solve_case_ii(a: i64) -> Vec<CaseIISolution> {
    solve_case(DistinctCase::II, a)
}

/// Final primitive triples with `q = c3 + k` whose data has this `a`.
pub fn solve_case_iii(a: i64) -> Vec<CaseIISolution> {
    solve_case(DistinctCase::III, a)
}

fn solve_case(case: DistinctCase, a: i64) -> Vec<CaseIISolution> {
    if !may_represent(a) {
        return Vec::new();
    }
    let tks = tk_candidates(a);
    if tks.is_empty() {
        return Vec::new();
    }
    combine_all(case, a, &xy_candidates(a, x_bound(case, a)), &tks)
}

/// One test of the family-II candidate that the case-iii argument leaves open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureCheck {
    pub a: i64,
    /// Family-I solution `(X', Y^')` with `0 < X' < Y^'` (scaled by `xy_scale`).
    pub family_one: PellSolution,
    /// The first positive family-II element `(4 Y^' - 3 X', 3 Y^' - 2 X')`.
    pub candidate: PellSolution,
    pub xy_scale: i64,
    pub t: i64,
    pub k: i64,
    /// `0 < X < Y^ + k`.
    pub x_below_y: bool,
    /// `X < t - 2k`, needed for `c2 < c3`.
    pub x_below_t_minus_2k: bool,
    /// A final solution built from the candidate: a counterexample.
    pub counterexample: Option<CaseIISolution>,
}

/// Checks every family-II candidate of `a` against every `(t, k)` of `a`.
pub fn conjecture_checks(a: i64) -> Vec<ConjectureCheck> {
    if !may_represent(a) {
        return Vec::new();
    }
    let tks = tk_candidates(a);
    let mut out = Vec::new();
    for g in square_divisors(a) {
        for fam in solve_pell_families(-(a / (g * g))) {
            let Some((p, _)) = fam.ppfs else { continue };
            if fam.tag != Some(FamilyTag::I) || !(0 < p.x && p.x < p.y) {
                continue;
            }
            let e = PellSolution { x: -p.x, y: p.y, k: p.k }.mapped(&IntMatrix2::AUTO_PRIME);
            let xy = XyCandidate { x: g * e.x, y_hat: g * e.y, scale: g };
            for tk in &tks {
                out.push(ConjectureCheck {
                    a,
                    family_one: PellSolution { x: g * p.x, y: g * p.y, k: -a },
                    candidate: PellSolution { x: xy.x, y: xy.y_hat, k: -a },
                    xy_scale: g,
                    t: tk.t,
                    k: tk.k,
                    x_below_y: 0 < xy.x && xy.x < xy.y_hat + tk.k,
                    x_below_t_minus_2k: xy.x < tk.t - 2 * tk.k,
                    counterexample: combine(DistinctCase::III, a, &xy, tk),
                });
            }
        }
    }
    out
}

/// The single label of a primitive DS quintuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleClass {
    EqualPair(EqualPairType),
    /// `c4- = 0`; such triples always have `q = c3 - k`.
    ZeroC4 { k: i64 },
    CaseI,
    CaseII { k: i64 },
    CaseIII { k: i64 },
}

pub fn classify(q5: &DSQuintuple) -> TripleClass {
    let [c1, c2, c3] = q5.triple.as_array();
    if c1 == c2 || c2 == c3 {
        let repeated = if c1 == c2 { c1 } else { c3 };
        return TripleClass::EqualPair(if repeated % 2 == 1 {
            EqualPairType::I
        } else {
            EqualPairType::II
        });
    }
    let k = (q5.q - c3).abs();
    if q5.c4_minus == 0 {
        TripleClass::ZeroC4 { k }
    } else if q5.q == c3 {
        TripleClass::CaseI
    } else if q5.q < c3 {
        TripleClass::CaseII { k }
    } else {
        TripleClass::CaseIII { k }
    }
}

/// Which generators [`solve_all`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverSet {
    pub equal_pair: bool,
    pub zero_c4: bool,
    pub case_i: bool,
    pub case_ii: bool,
    pub case_iii: bool,
}

impl SolverSet {
    pub const ALL: SolverSet =
        SolverSet { equal_pair: true, zero_c4: true, case_i: true, case_ii: true, case_iii: true };
}

/// Union of the selected generators restricted to `c3 <= c3_max`, sorted canonically and deduplicated.
pub fn solve_all(c3_max: i64, set: SolverSet) -> Vec<DSQuintuple> {
    let mut out = Vec::new();
    if set.equal_pair {
        for p in m_pairs(c3_max / 2 + 1) {
            out.extend(equal_pair_triples(p).iter().map(|e| e.quintuple));
        }
    }
    if set.zero_c4 {
        for n in (2..).take_while(|n| n * n <= c3_max) {
            out.extend(zero_c4_triples(n));
        }
    }
    if set.case_i {
        out.extend(solve_case_i(2 * c3_max).into_iter().map(|r| r.quintuple));
    }
    if set.case_ii || set.case_iii {
        // Y^ < 2 c3 in both cases, so a = 2 Y^2 - X^2 < 8 c3^2.
        for a in 3..8 * c3_max * c3_max {
            if set.case_ii {
                out.extend(solve_case_ii(a).into_iter().map(|s| s.quintuple));
            }
            if set.case_iii {
                out.extend(solve_case_iii(a).into_iter().map(|s| s.quintuple));
            }
        }
    }
    out.retain(|q5| q5.triple.c3() <= c3_max);
    out.sort_unstable();
    out.dedup();
    out
}
