use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::arith::{square_split, Rational};

/// A number `u + v * sqrt(d)` with rational `u`, `v` and squarefree `d >= 1`.
///
/// Values with `v == 0` are plain rationals and combine with any radicand;
/// combining two irrational values with different radicands panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    u: Rational,
    v: Rational,
    d: i128,
}

impl QuadSurd {
    pub fn new(u: Rational, v: Rational, d: i128) -> Self {
        assert!(d >= 1, "radicand must be positive");
        let (g, k) = square_split(d as u64);
        Self::normalized(u, v * Rational::from_integer(g as i128), k as i128)
    }

    fn normalized(u: Rational, v: Rational, d: i128) -> Self {
        if v.is_zero() || d == 1 {
            QuadSurd { u: u + v, v: Rational::zero(), d: 1 }
        } else {
            QuadSurd { u, v, d }
        }
    }

    pub fn rational(r: Rational) -> Self {
        QuadSurd { u: r, v: Rational::zero(), d: 1 }
    }

    pub fn from_int(n: i128) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    /// Exact square root of a non-negative rational.
    pub fn sqrt_of(r: Rational) -> Self {
        assert!(!r.is_negative(), "square root of a negative rational");
        if r.is_zero() {
            return Self::from_int(0);
        }
        let num = *r.numer() * *r.denom();
        let (g, d) = square_split(num as u64);
        Self::normalized(
            Rational::zero(),
            Rational::new(g as i128, *r.denom()),
            d as i128,
        )
    }

    pub fn rational_part(&self) -> Rational {
        self.u
    }
    pub fn surd_coefficient(&self) -> Rational {
        self.v
    }
    pub fn radicand(&self) -> i128 {
        self.d
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.v.is_zero().then_some(self.u)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> i128 {
        match (self.v.is_zero(), other.v.is_zero()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(self.d, other.d, "mixed radicands");
                self.d
            }
        }
    }

    /// `u - v * sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        QuadSurd { u: self.u, v: -self.v, d: self.d }
    }

    pub fn signum(&self) -> i32 {
        let su = sign_of(&self.u);
        let sv = sign_of(&self.v);
        if sv == 0 {
            return su;
        }
        if su == 0 || su == sv {
            return sv;
        }
        // Opposite signs: compare u^2 with d v^2.
        let lhs = self.u * self.u;
        let rhs = self.v * self.v * Rational::from_integer(self.d);
        match lhs.cmp(&rhs) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -*self
        } else {
            *self
        }
    }

    pub fn to_f64(&self) -> f64 {
        let u = ratio_to_f64(&self.u);
        if self.v.is_zero() {
            return u;
        }
        u + ratio_to_f64(&self.v) * Float::sqrt(self.d as f64)
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn ratio_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((*self - *other).signum().cmp(&0))
    }
}

impl From<Rational> for QuadSurd {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl From<i64> for QuadSurd {
    fn from(n: i64) -> Self {
        Self::from_int(n as i128)
    }
}

impl Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: QuadSurd) -> QuadSurd {
        let d = self.common_radicand(&o);
        Self::normalized(self.u + o.u, self.v + o.v, d)
    }
}

impl Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: QuadSurd) -> QuadSurd {
        self + (-o)
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd { u: -self.u, v: -self.v, d: self.d }
    }
}

impl Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: QuadSurd) -> QuadSurd {
        let d = self.common_radicand(&o);
        let dr = Rational::from_integer(d);
        Self::normalized(self.u * o.u + self.v * o.v * dr, self.u * o.v + self.v * o.u, d)
    }
}

impl Div for QuadSurd {
    type Output = QuadSurd;
    fn div(self, o: QuadSurd) -> QuadSurd {
        assert!(!o.is_zero(), "division by zero");
        let norm = o.u * o.u - o.v * o.v * Rational::from_integer(o.d);
        self * Self::normalized(o.u / norm, -o.v / norm, o.d)
    }
}

impl Mul<Rational> for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, r: Rational) -> QuadSurd {
        Self::normalized(self.u * r, self.v * r, self.d)
    }
}

impl Zero for QuadSurd {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn is_zero(&self) -> bool {
        QuadSurd::is_zero(self)
    }
}

impl One for QuadSurd {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        if !self.u.is_zero() {
            write!(f, "{} ", self.u)?;
            f.write_str(if self.v.is_negative() { "- " } else { "+ " })?;
            write!(f, "{}*sqrt({})", self.v.abs(), self.d)
        } else {
            write!(f, "{}*sqrt({})", self.v, self.d)
        }
    }
}
