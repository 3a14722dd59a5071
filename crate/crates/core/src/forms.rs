//! Binary quadratic forms of discriminant 8 and -8, and the solution families of
//! the generalized Pell equation `X^2 - 2 Y^2 = k` they produce.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_integer::{Integer, Roots};

use crate::arith::{gcd, gcd3, sqrt_mod};

/// Upper bound on reduction steps before giving up.
const MAX_STEPS: usize = 100_000;

/// Scan window for the positive fundamental solution, relative to index 0.
pub const PPFS_WINDOW: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormError {
    /// `c == 0`: the form is a product of linear factors.
    Factorizes(QuadForm),
    NotIndefinite(QuadForm),
    NotPositiveDefinite(QuadForm),
    NoConvergence(QuadForm),
    /// `unique_xy_solution` takes odd `s >= 3`.
    InvalidS(i64),
    /// The operation is only defined for negative `k`.
    NonNegativeK(i64),
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::Factorizes(q) => write!(f, "form {q} factorizes"),
            FormError::NotIndefinite(q) => write!(f, "form {q} is not indefinite with non-square discriminant"),
            FormError::NotPositiveDefinite(q) => write!(f, "form {q} is not positive definite"),
            FormError::NoConvergence(q) => write!(f, "reduction of {q} did not terminate"),
            FormError::InvalidS(s) => write!(f, "s = {s} must be odd and at least 3"),
            FormError::NonNegativeK(k) => write!(f, "k = {k} must be negative"),
        }
    }
}

/// The form `a x^2 + b x y + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub const PELL: QuadForm = QuadForm { a: 1, b: 0, c: -2 };
    /// The reduced form every primitive discriminant-8 form reaches.
    pub const PRINCIPAL: QuadForm = QuadForm { a: 1, b: 2, c: -1 };
    /// The only reduced form of discriminant -8.
    pub const DEFINITE_REDUCED: QuadForm = QuadForm { a: 1, b: 0, c: 2 };

    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        gcd3(self.a, self.b, self.c) == 1
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y
    }

    /// The form `v -> F(M v)`.
    pub fn transform(&self, m: &IntMatrix2) -> QuadForm {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        let (p, q, r, s) = (m.a as i128, m.b as i128, m.c as i128, m.d as i128);
        let na = a * p * p + b * p * r + c * r * r;
        let nb = 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s;
        let nc = a * q * q + b * q * s + c * s * s;
        QuadForm { a: narrow(na), b: narrow(nb), c: narrow(nc) }
    }

    /// `[a, b, c] -> [c, -b + 2ct, a - bt + ct^2]`.
    pub fn r_step(&self, t: i64) -> QuadForm {
        self.transform(&IntMatrix2::r(t))
    }

    pub fn is_reduced_definite(&self) -> bool {
        self.b.abs() <= self.a && self.a <= self.c
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("integer overflow in form arithmetic")
}

/// The matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2::new(1, 0, 0, 1);
    /// Automorph of `X^2 - 2 Y^2` generating every family.
    pub const AUTO_PRIME: IntMatrix2 = IntMatrix2::new(3, 4, 2, 3);
    /// Automorph of the principal form.
    pub const AUTO: IntMatrix2 = IntMatrix2::new(-1, -2, -2, -5);
    /// Takes the principal form to the Pell form: `PRINCIPAL(v) = PELL(B v)`.
    pub const B: IntMatrix2 = IntMatrix2::new(-1, -1, 0, -1);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    pub const fn r(t: i64) -> Self {
        IntMatrix2::new(0, -1, 1, t)
    }

    pub fn det(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    pub fn checked_mul(&self, o: &IntMatrix2) -> Option<IntMatrix2> {
        let e = |x: i64, y: i64, z: i64, w: i64| x.checked_mul(y)?.checked_add(z.checked_mul(w)?);
        Some(IntMatrix2 {
            a: e(self.a, o.a, self.b, o.c)?,
            b: e(self.a, o.b, self.b, o.d)?,
            c: e(self.c, o.a, self.d, o.c)?,
            d: e(self.c, o.b, self.d, o.d)?,
        })
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> IntMatrix2 {
        let det = self.det() as i64;
        assert!(det == 1 || det == -1, "matrix is not unimodular");
        IntMatrix2::new(det * self.d, -det * self.b, -det * self.c, det * self.a)
    }

    pub fn apply(&self, x: i64, y: i64) -> (i64, i64) {
        let e = |p: i64, q: i64| narrow(p as i128 * x as i128 + q as i128 * y as i128);
        (e(self.a, self.b), e(self.c, self.d))
    }

    /// Repeated multiplication; negative `n` uses the inverse.
    pub fn pow(&self, n: i64) -> IntMatrix2 {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(IntMatrix2::IDENTITY, |acc, _| acc * base)
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;
    fn mul(self, o: IntMatrix2) -> IntMatrix2 {
        self.checked_mul(&o).expect("integer overflow in matrix product")
    }
}

/// Chebyshev `S(n, 6)`: `S(-1) = 0`, `S(0) = 1`, `S(n) = 6 S(n-1) - S(n-2)`, for all integers `n`.
pub fn chebyshev_s6(n: i64) -> i64 {
    if n < -1 {
        return -chebyshev_s6(-n - 2);
    }
    let (mut prev, mut cur) = (0i64, 1i64);
    if n == -1 {
        return 0;
    }
    for _ in 0..n {
        let next = 6i64
            .checked_mul(cur)
            .and_then(|v| v.checked_sub(prev))
            .expect("S(n, 6) overflow");
        prev = cur;
        cur = next;
    }
    cur
}

/// `AUTO_PRIME^n` in closed form.
pub fn auto_power(n: i64) -> IntMatrix2 {
    let s = chebyshev_s6(n);
    let s1 = chebyshev_s6(n - 1);
    let diag = s - 3 * s1;
    IntMatrix2::new(diag, 4 * s1, 2 * s1, diag)
}

/// `ceil(sqrt(d))` for `d >= 0`.
pub fn ceil_sqrt(d: i64) -> i64 {
    let r = d.sqrt();
    if r * r == d {
        r
    } else {
        r + 1
    }
}

/// One half-reduced right-neighbour step of an indefinite form.
pub fn half_reduced_right_neighbor(f: &QuadForm) -> Result<(QuadForm, i64), FormError> {
    if f.c == 0 {
        return Err(FormError::Factorizes(*f));
    }
    let disc = f.discriminant();
    let root = disc.max(0).sqrt();
    if disc <= 0 || root * root == disc {
        return Err(FormError::NotIndefinite(*f));
    }
    let fd = ceil_sqrt(disc);
    let t = if f.c > 0 {
        Integer::div_ceil(&(fd + f.b - 2 * f.c), &(2 * f.c))
    } else {
        Integer::div_floor(&(2 * f.c.abs() - fd - f.b), &(2 * f.c.abs()))
    };
    Ok((f.r_step(t), t))
}

/// A chain of R-steps: the exponents, the forms visited (start and end included)
/// and the product matrix `R(t1) ... R(tL)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub t_tuple: Vec<i64>,
    pub chain: Vec<QuadForm>,
    pub matrix: IntMatrix2,
}

impl Reduction {
    fn start(f: &QuadForm) -> Self {
        Reduction { t_tuple: Vec::new(), chain: alloc::vec![*f], matrix: IntMatrix2::IDENTITY }
    }

    fn push(&mut self, next: QuadForm, t: i64) {
        let prev = self.chain.last().expect("chain is never empty");
        debug_assert_eq!(prev.discriminant(), next.discriminant());
        self.t_tuple.push(t);
        self.chain.push(next);
        self.matrix = self.matrix * IntMatrix2::r(t);
    }

    pub fn end(&self) -> QuadForm {
        *self.chain.last().expect("chain is never empty")
    }
}

/// Applies right-neighbour steps until `target` is reached.
pub fn reduce_indefinite_to(f: &QuadForm, target: &QuadForm) -> Result<Reduction, FormError> {
    let mut red = Reduction::start(f);
    for _ in 0..MAX_STEPS {
        let cur = red.end();
        if cur == *target {
            return Ok(red);
        }
        let (next, t) = half_reduced_right_neighbor(&cur)?;
        red.push(next, t);
    }
    Err(FormError::NoConvergence(*f))
}

/// Reduces a primitive discriminant-8 form to the principal form `[1, 2, -1]`.
pub fn reduce_indefinite(f: &QuadForm) -> Result<Reduction, FormError> {
    reduce_indefinite_to(f, &QuadForm::PRINCIPAL)
}

/// Primitive forms `[k, 2j, (j^2 - 2)/k]` for each root `j` of `j^2 = 2 (mod |k|)`, `0 <= j < |k|`.
pub fn rpapf_indefinite(k: i64) -> Vec<(i64, QuadForm)> {
    assert!(k != 0, "k must be nonzero");
    sqrt_mod(2, k.unsigned_abs())
        .into_iter()
        .map(|j| j as i64)
        .map(|j| (j, QuadForm::new(k, 2 * j, (j * j - 2) / k)))
        .filter(|(_, f)| f.is_primitive())
        .collect()
}

/// A solution of `X^2 - 2 Y^2 = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PellSolution {
    pub x: i64,
    pub y: i64,
    pub k: i64,
}

impl PellSolution {
    pub fn new(x: i64, y: i64) -> Self {
        let k = x as i128 * x as i128 - 2 * (y as i128) * (y as i128);
        PellSolution { x, y, k: narrow(k) }
    }

    /// Common sign flip so that `Y > 0` (or `X > 0` when `Y = 0`).
    pub fn normalized(self) -> Self {
        if self.y < 0 || (self.y == 0 && self.x < 0) {
            PellSolution { x: -self.x, y: -self.y, k: self.k }
        } else {
            self
        }
    }

    pub fn is_proper(&self) -> bool {
        gcd(self.x, self.y) == 1
    }

    pub fn mapped(&self, m: &IntMatrix2) -> Self {
        let (x, y) = m.apply(self.x, self.y);
        PellSolution { x, y, k: self.k }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    I,
    II,
}

/// All proper solutions attached to one rpapf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFamily {
    pub k: i64,
    pub j: i64,
    pub rpapf: QuadForm,
    pub reduction: Reduction,
    /// Index-0 solution `B Rpa^-1 (1, 0)`, normalized.
    pub fundamental: PellSolution,
    /// First member with `X > 0` (negative `k` only) and its index.
    pub ppfs: Option<(PellSolution, i64)>,
    /// Set when the ppfs lies outside `[-PPFS_WINDOW, PPFS_WINDOW]`.
    pub window_exceeded: bool,
    pub tag: Option<FamilyTag>,
    /// `j` of the family containing `(-X, Y)` for every `(X, Y)` here.
    pub conjugate_j: i64,
}

impl SolutionFamily {
    pub fn t_tuple(&self) -> &[i64] {
        &self.reduction.t_tuple
    }
}

/// One family per rpapf of `k`, tagged I/II for negative `k`.
pub fn solve_pell_families(k: i64) -> Vec<SolutionFamily> {
    let modulus = k.abs();
    rpapf_indefinite(k)
        .into_iter()
        .map(|(j, rpapf)| {
            let reduction = reduce_indefinite(&rpapf).expect("rpapf of discriminant 8 reduces");
            let fundamental = PellSolution { x: 1, y: 0, k }
                .mapped(&(IntMatrix2::B * reduction.matrix.inverse()))
                .normalized();
            debug_assert_eq!(PellSolution::new(fundamental.x, fundamental.y).k, k);
            let ppfs = (k < 0).then(|| find_ppfs(fundamental));
            let window_exceeded = ppfs.is_some_and(|(_, i)| i.unsigned_abs() > PPFS_WINDOW as u64);
            let conjugate_j = (modulus - j) % modulus;
            let tag = ppfs.map(|(p, _)| {
                if conjugate_j == j || p.x < p.y {
                    FamilyTag::I
                } else {
                    FamilyTag::II
                }
            });
            SolutionFamily { k, j, rpapf, reduction, fundamental, ppfs, window_exceeded, tag, conjugate_j }
        })
        .collect()
}

/// With `k < 0`, `X` increases strictly along `AUTO_PRIME` steps.
fn find_ppfs(start: PellSolution) -> (PellSolution, i64) {
    let back = IntMatrix2::AUTO_PRIME.inverse();
    let mut cur = start;
    let mut i = 0;
    if cur.x > 0 {
        loop {
            let prev = cur.mapped(&back);
            if prev.x <= 0 {
                return (cur, i);
            }
            cur = prev;
            i -= 1;
        }
    }
    while cur.x <= 0 {
        cur = cur.mapped(&IntMatrix2::AUTO_PRIME);
        i += 1;
    }
    (cur, i)
}

/// The member at index `i` relative to the fundamental solution.
pub fn family_iterate(f: &SolutionFamily, i: i64) -> PellSolution {
    f.fundamental.mapped(&auto_power(i)).normalized()
}

/// Proper solutions of `X^2 - 2 Y^2 = k < 0` with `|X| <= x_max` and `0 < Y <= y_max`, sorted.
pub fn pell_solutions_in_box(k: i64, x_max: i64, y_max: i64) -> Result<Vec<PellSolution>, FormError> {
    if k >= 0 {
        return Err(FormError::NonNegativeK(k));
    }
    let fwd = IntMatrix2::AUTO_PRIME;
    let back = fwd.inverse();
    let mut out = Vec::new();
    for fam in solve_pell_families(k) {
        let mut cur = fam.fundamental;
        while cur.x >= -x_max {
            cur = cur.mapped(&back);
        }
        cur = cur.mapped(&fwd);
        while cur.x <= x_max {
            if cur.y <= y_max {
                out.push(cur);
            }
            cur = cur.mapped(&fwd);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Family members with `0 < X < x_bound`, over every family of `k < 0`, sorted.
pub fn positive_solutions_below(k: i64, x_bound: i64) -> Result<Vec<PellSolution>, FormError> {
    if k >= 0 {
        return Err(FormError::NonNegativeK(k));
    }
    let mut out = Vec::new();
    for fam in solve_pell_families(k) {
        let Some((mut cur, _)) = fam.ppfs else { continue };
        while cur.x < x_bound {
            out.push(cur);
            cur = cur.mapped(&IntMatrix2::AUTO_PRIME);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Proper solutions of `X^2 - 2 Y^2 = -s^2` with `0 < X < Y`, one per conjugate pair, sorted by `Y`.
pub fn unique_xy_solution(s: i64) -> Result<Vec<PellSolution>, FormError> {
    if s < 3 || s % 2 == 0 {
        return Err(FormError::InvalidS(s));
    }
    let mut out: Vec<PellSolution> = solve_pell_families(-s * s)
        .into_iter()
        .filter(|f| f.tag == Some(FamilyTag::I))
        .filter_map(|f| f.ppfs.map(|(p, _)| p))
        .filter(|p| 0 < p.x && p.x < p.y)
        .collect();
    out.sort_unstable_by_key(|p| (p.y, p.x));
    Ok(out)
}

/// Reduces a positive definite form with steps `t = ceil((b - c) / (2c))`.
pub fn reduce_definite(f: &QuadForm) -> Result<Reduction, FormError> {
    if f.a <= 0 || f.discriminant() >= 0 {
        return Err(FormError::NotPositiveDefinite(*f));
    }
    let mut red = Reduction::start(f);
    for _ in 0..MAX_STEPS {
        let cur = red.end();
        if cur.is_reduced_definite() {
            return Ok(red);
        }
        let t = Integer::div_ceil(&(cur.b - cur.c), &(2 * cur.c));
        red.push(cur.r_step(t), t);
    }
    Err(FormError::NoConvergence(*f))
}

/// Primitive forms `[a, 2j, (j^2 + 2)/a]` for each root of `j^2 = -2 (mod a)`.
pub fn rpapf_definite(a: i64) -> Vec<(i64, QuadForm)> {
    assert!(a >= 1, "a must be positive");
    sqrt_mod(-2, a as u64)
        .into_iter()
        .map(|j| j as i64)
        .map(|j| (j, QuadForm::new(a, 2 * j, (j * j + 2) / a)))
        .filter(|(_, f)| f.is_primitive())
        .collect()
}

/// Proper `(t, k)` with `t^2 + 2 k^2 = a`, normalized to `k > 0`, sorted by `t`.
///
/// For `a = 1` both `(-1, 0)` and `(1, 0)` are returned.
pub fn solve_definite(a: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (_, f) in rpapf_definite(a) {
        let red = reduce_definite(&f).expect("rpapf is positive definite");
        debug_assert_eq!(red.end(), QuadForm::DEFINITE_REDUCED);
        let (t, k) = red.matrix.inverse().apply(1, 0);
        if k == 0 {
            out.push((-t.abs(), 0));
            out.push((t.abs(), 0));
        } else if k < 0 {
            out.push((-t, -k));
        } else {
            out.push((t, k));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
