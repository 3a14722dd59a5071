use num_traits::Float;

use super::surd::QuadSurd;
use crate::arith::{rat, Rational};

/// Areas left inside the enclosing circle of the configuration with one
/// circle of radius `1 + a` and two of radius `1`, divided by `pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalArea {
    pub a: Rational,
    /// Enclosing disk minus the three given disks.
    pub area_over_pi: QuadSurd,
    /// The same with the inner tangent disk removed as well.
    pub area_prime_over_pi: QuadSurd,
}

impl ClassicalArea {
    pub fn area(&self) -> f64 {
        self.area_over_pi.to_f64() * core::f64::consts::PI
    }

    pub fn area_prime(&self) -> f64 {
        self.area_prime_over_pi.to_f64() * core::f64::consts::PI
    }

    /// Length scale that makes the first area equal `target`.
    pub fn scale_for_area(&self, target: f64) -> f64 {
        Float::sqrt(target / self.area())
    }
}

pub fn classical_area(a: Rational) -> ClassicalArea {
    assert!(a > Rational::from_integer(0), "a must be positive");
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    let three = Rational::from_integer(3);
    let four = Rational::from_integer(4);
    let root = QuadSurd::sqrt_of((a + three) / (a + one));
    let b = one + a;
    let den = (three + four * a) * (three + four * a);

    let lead = four * b * b * (three + rat(5, 1) * a + two * a * a) / den;
    let tail = two * (one + two * a) * (three + four * a + two * a * a + two * a * a * a) / den;
    let area = root * lead - QuadSurd::rational(tail);

    let lead_prime = rat(8, 1) * b * b * b * (three + two * a) / den;
    let area_prime = root * lead_prime - QuadSurd::rational(two + b * b);

    ClassicalArea { a, area_over_pi: area, area_prime_over_pi: area_prime }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn historical_values() {
        let r = classical_area(rat(5, 2));
        assert_eq!(r.area_over_pi, QuadSurd::new(rat(-681, 169), rat(196, 169), 77));
        assert_eq!(r.area_prime_over_pi, QuadSurd::new(rat(-57, 4), rat(392, 169), 77));
        assert!((r.area() - 19.312).abs() < 1e-3);
        assert!((r.area_prime() - 19.176).abs() < 1e-3);
        assert!((r.scale_for_area(120.0) - 2.493).abs() < 1e-3);
    }
}
