//! Curvature triples, the Descartes relation and the brute-force enumeration
//! that every structured solver is checked against.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Roots;

use crate::arith::gcd3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescartesError {
    /// Entries are not positive or not in ascending order.
    InvalidTriple(i64, i64, i64),
    /// A primitive DS triple matched neither parity pattern.
    ParityViolation(CurvatureTriple),
}

impl fmt::Display for DescartesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescartesError::InvalidTriple(a, b, c) => {
                write!(f, "[{a},{b},{c}] is not an ascending triple of positive curvatures")
            }
            DescartesError::ParityViolation(t) => write!(f, "{t} has no valid parity pattern"),
        }
    }
}

/// Curvatures `0 < c1 <= c2 <= c3` of three mutually tangent circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurvatureTriple {
    // Field order gives the canonical (c3, c1, c2) sort.
    c3: i64,
    c1: i64,
    c2: i64,
}

impl CurvatureTriple {
    pub fn new(c1: i64, c2: i64, c3: i64) -> Result<Self, DescartesError> {
        if c1 < 1 || c1 > c2 || c2 > c3 {
            return Err(DescartesError::InvalidTriple(c1, c2, c3));
        }
        Ok(CurvatureTriple { c1, c2, c3 })
    }

    /// Builds a triple from three positive curvatures in any order.
    pub fn sorted(a: i64, b: i64, c: i64) -> Result<Self, DescartesError> {
        let mut v = [a, b, c];
        v.sort_unstable();
        Self::new(v[0], v[1], v[2])
    }

    pub fn c1(&self) -> i64 {
        self.c1
    }
    pub fn c2(&self) -> i64 {
        self.c2
    }
    pub fn c3(&self) -> i64 {
        self.c3
    }
    pub fn as_array(&self) -> [i64; 3] {
        [self.c1, self.c2, self.c3]
    }

    pub fn scaled(&self, g: i64) -> Self {
        CurvatureTriple { c1: g * self.c1, c2: g * self.c2, c3: g * self.c3 }
    }

    pub fn sum(&self) -> i64 {
        self.c1 + self.c2 + self.c3
    }

    pub fn is_distinct(&self) -> bool {
        self.c1 < self.c2 && self.c2 < self.c3
    }
}

impl fmt::Display for CurvatureTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.c1, self.c2, self.c3)
    }
}

/// A DS triple together with `q` and both tangent curvatures `c4-`, `c4+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DSQuintuple {
    pub triple: CurvatureTriple,
    pub q: i64,
    pub c4_minus: i64,
    pub c4_plus: i64,
}

impl DSQuintuple {
    pub fn is_degenerate(&self) -> bool {
        self.c4_minus == 0
    }

    /// Both four-circle configurations `[c1, c2, c3, c4]`.
    pub fn configurations(&self) -> [[i64; 4]; 2] {
        let [a, b, c] = self.triple.as_array();
        [[a, b, c, self.c4_minus], [a, b, c, self.c4_plus]]
    }
}

impl fmt::Display for DSQuintuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} q={} [{}, {}]", self.triple, self.q, self.c4_minus, self.c4_plus)
    }
}

/// `(sum c)^2 - 2 * sum c^2` for four curvatures; zero for a Descartes configuration.
pub fn descartes_residual(c: [i64; 4]) -> i128 {
    let s: i128 = c.iter().map(|&x| x as i128).sum();
    let sq: i128 = c.iter().map(|&x| (x as i128) * (x as i128)).sum();
    s * s - 2 * sq
}

pub fn q_squared(t: &CurvatureTriple) -> i64 {
    t.c1 * t.c2 + t.c1 * t.c3 + t.c2 * t.c3
}

/// Returns the quintuple when `q` is an integer, `None` otherwise.
pub fn quintuple(t: &CurvatureTriple) -> Option<DSQuintuple> {
    let q2 = q_squared(t);
    let q = q2.sqrt();
    if q * q != q2 {
        return None;
    }
    let s = t.sum();
    Some(DSQuintuple { triple: *t, q, c4_minus: s - 2 * q, c4_plus: s + 2 * q })
}

pub fn is_primitive(t: &CurvatureTriple) -> bool {
    gcd3(t.c1, t.c2, t.c3) == 1
}

/// The two parity patterns a primitive DS triple can have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    /// Two even entries whose sum is divisible by 4, one odd entry.
    EvenEvenOdd,
    /// Two odd entries whose sum is 2 mod 4, one even entry.
    OddOddEven,
}

pub fn parity_class(t: &CurvatureTriple) -> Result<ParityClass, DescartesError> {
    let v = t.as_array();
    let evens: Vec<i64> = v.iter().copied().filter(|x| x % 2 == 0).collect();
    let odds: Vec<i64> = v.iter().copied().filter(|x| x % 2 != 0).collect();
    match (evens.len(), odds.len()) {
        (2, 1) if (evens[0] + evens[1]) % 4 == 0 => Ok(ParityClass::EvenEvenOdd),
        (1, 2) if (odds[0] + odds[1]) % 4 == 2 => Ok(ParityClass::OddOddEven),
        _ => Err(DescartesError::ParityViolation(*t)),
    }
}

/// Value of `c3` for which the smaller tangent curvature vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateC3 {
    Integer(i64),
    /// `c1 + c2 + 2 * sqrt(radicand)` with a non-square radicand.
    Irrational { c1: i64, c2: i64, radicand: i64 },
}

pub fn degenerate_c3(c1: i64, c2: i64) -> DegenerateC3 {
    let p = c1 * c2;
    let r = p.sqrt();
    if r * r == p {
        DegenerateC3::Integer(c1 + c2 + 2 * r)
    } else {
        DegenerateC3::Irrational { c1, c2, radicand: p }
    }
}

/// Every primitive DS quintuple with `c3 <= c3_max`, sorted by `(c3, c1, c2)`.
pub fn enumerate_primitive_ds(c3_max: i64) -> Vec<DSQuintuple> {
    let mut out = Vec::new();
    for c3 in 1..=c3_max {
        for c1 in 1..=c3 {
            for c2 in c1..=c3 {
                let t = CurvatureTriple { c1, c2, c3 };
                if let Some(q5) = quintuple(&t) {
                    if is_primitive(&t) {
                        out.push(q5);
                    }
                }
            }
        }
    }
    out
}
