//! Exact placement of the five mutually tangent circles of a curvature triple,
//! the tangent line of the degenerate case, the classical area problem and
//! SVG rendering.

mod area;
mod surd;
mod svg;

use alloc::vec::Vec;
use core::fmt;

pub use area::{classical_area, ClassicalArea};
pub use surd::QuadSurd;
pub use svg::{render_svg, render_svg_with, SvgStyle};

use crate::arith::{exact_sqrt, rat, Rational};
use crate::descartes::{q_squared, CurvatureTriple, DSQuintuple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    /// The smaller tangent curvature is not zero, so there is no tangent line.
    NotDegenerate(i64),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::NotDegenerate(c) => write!(f, "not degenerate: c4- = {c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactPoint {
    pub x: QuadSurd,
    pub y: QuadSurd,
}

impl ExactPoint {
    pub fn new(x: QuadSurd, y: QuadSurd) -> Self {
        ExactPoint { x, y }
    }

    pub fn rational(x: Rational, y: Rational) -> Self {
        ExactPoint { x: x.into(), y: y.into() }
    }

    pub fn as_rationals(&self) -> Option<(Rational, Rational)> {
        Some((self.x.as_rational()?, self.y.as_rational()?))
    }

    pub fn dist2(&self, other: &ExactPoint) -> QuadSurd {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// A circle given by its center and signed curvature (negative curvature
/// means the circle encloses the others).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Circle {
    pub center: ExactPoint,
    pub curvature: QuadSurd,
}

impl Circle {
    /// Signed radius `1 / curvature`.
    pub fn radius(&self) -> QuadSurd {
        QuadSurd::from_int(1) / self.curvature
    }
}

/// The common tangent line `y = slope * x + intercept` of a degenerate triple,
/// with the auxiliary point `c` of the construction and the touch points
/// `p`, `q`, `r` on the first, second and third circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TangentLine {
    pub slope: Rational,
    pub intercept: Rational,
    pub c: ExactPoint,
    pub p: ExactPoint,
    pub q: ExactPoint,
    pub r: ExactPoint,
}

impl TangentLine {
    /// Squared distance from `point` to the line.
    pub fn dist2(&self, point: &ExactPoint) -> QuadSurd {
        let m = QuadSurd::rational(self.slope);
        let b = QuadSurd::rational(self.intercept);
        let num = m * point.x - point.y + b;
        num * num / (m * m + QuadSurd::from_int(1))
    }

    pub fn contains(&self, point: &ExactPoint) -> bool {
        let m = QuadSurd::rational(self.slope);
        let b = QuadSurd::rational(self.intercept);
        (m * point.x + b - point.y).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleScene {
    pub triple: CurvatureTriple,
    /// `sqrt(c1 c2 + c1 c3 + c2 c3)`, irrational for non-DS triples.
    pub q: QuadSurd,
    pub given: [Circle; 3],
    pub c4_plus: Option<Circle>,
    pub c4_minus: Option<Circle>,
    pub line: Option<TangentLine>,
}

fn int(n: i64) -> QuadSurd {
    QuadSurd::from_int(n as i128)
}

/// Places the three given circles: `M1` at the origin, `M2` on the positive
/// x-axis and `M3` in the upper half-plane.
pub fn place_curvatures(t: &CurvatureTriple) -> CircleScene {
    let [c1, c2, c3] = t.as_array();
    let q2 = q_squared(t) as i128;
    let q = QuadSurd::sqrt_of(Rational::from_integer(q2));
    let x3 = rat(q2 - (c1 as i128) * (c1 as i128), (c1 * c3 * (c1 + c2)) as i128);
    let y3 = q * QuadSurd::rational(rat(2, ((c1 + c2) * c3) as i128));
    let x2 = rat(1, c1 as i128) + rat(1, c2 as i128);
    let zero = Rational::from_integer(0);
    CircleScene {
        triple: *t,
        q,
        given: [
            Circle { center: ExactPoint::rational(zero, zero), curvature: int(c1) },
            Circle { center: ExactPoint::rational(x2, zero), curvature: int(c2) },
            Circle { center: ExactPoint::new(x3.into(), y3), curvature: int(c3) },
        ],
        c4_plus: None,
        c4_minus: None,
        line: None,
    }
}

/// Places the three given circles of a DS triple (all coordinates rational).
pub fn place_triple(q5: &DSQuintuple) -> CircleScene {
    place_curvatures(&q5.triple)
}

/// Curvatures `(c4+, c4-)` of the scene's triple.
pub fn tangent_curvatures(scene: &CircleScene) -> (QuadSurd, QuadSurd) {
    let s = int(scene.triple.sum());
    let two_q = scene.q * int(2);
    (s + two_q, s - two_q)
}

/// Centers of the two circles tangent to the three given ones. The second
/// center is absent when `c4- = 0`.
pub fn centers_c4(scene: &CircleScene) -> (ExactPoint, Option<ExactPoint>) {
    let [c1, c2, c3] = scene.triple.as_array();
    let (c4p, c4m) = tangent_curvatures(scene);
    let m3 = scene.given[2].center;
    let base_x = QuadSurd::rational(rat((c1 + c2) as i128, c1 as i128)) + int(c3) * m3.x;
    let shift_x = scene.q * QuadSurd::rational(rat(2, c1 as i128));
    let base_y = int(c3) * m3.y;
    let two = int(2);
    let plus = ExactPoint::new((base_x + shift_x) / c4p, (base_y + two) / c4p);
    let minus = (!c4m.is_zero())
        .then(|| ExactPoint::new((base_x - shift_x) / c4m, (base_y - two) / c4m));
    (plus, minus)
}

/// The common tangent line of a degenerate triple (`c4- = 0`).
pub fn tangent_line(scene: &CircleScene) -> Result<TangentLine, GeometryError> {
    let (_, c4m) = tangent_curvatures(scene);
    if !c4m.is_zero() {
        let approx = c4m.to_f64() as i64;
        return Err(GeometryError::NotDegenerate(approx));
    }
    let [c1, c2, c3] = scene.triple.as_array().map(|c| c as i128);
    let m = exact_sqrt(c1 * c2).expect("degenerate triples have a square c1*c2");
    let q = scene.q.as_rational().expect("degenerate triples have integer q");
    let sum = c1 + c2;
    let diff = c2 - c1;
    let c = ExactPoint::rational(rat(diff * diff, c1 * c2 * sum), rat(2 * diff, m * sum));
    let p = ExactPoint::rational(rat(diff, c1 * sum), rat(2 * c2, m * sum));
    let qp = ExactPoint::rational(rat(c2 + 3 * c1, c1 * sum), rat(2 * c1, m * sum));
    let r = ExactPoint::new(
        (rat(1, c1) + rat(2 * diff, sum * c3)).into(),
        ((q + Rational::from_integer(m)) * rat(2, c3 * sum)).into(),
    );
    Ok(TangentLine {
        slope: rat(-diff, 2 * m),
        intercept: rat(sum, 2 * m * c1),
        c,
        p,
        q: qp,
        r,
    })
}

/// Third touch point's abscissa written in radii: `r1 + 2 r3 (r1 - r2) / (r1 + r2)`.
pub fn touch_r_x_from_radii(t: &CurvatureTriple) -> Rational {
    let [r1, r2, r3] = t.as_array().map(|c| rat(1, c as i128));
    r1 + rat(2, 1) * r3 * (r1 - r2) / (r1 + r2)
}

/// Three given circles plus both tangent circles, or the tangent line in the
/// degenerate case.
pub fn complete_scene(t: &CurvatureTriple) -> CircleScene {
    let mut scene = place_curvatures(t);
    let (c4p, c4m) = tangent_curvatures(&scene);
    let (mp, mm) = centers_c4(&scene);
    scene.c4_plus = Some(Circle { center: mp, curvature: c4p });
    scene.c4_minus = mm.map(|center| Circle { center, curvature: c4m });
    scene.line = tangent_line(&scene).ok();
    scene
}

/// Pairs of present circles whose center distance differs from the sum of
/// their signed radii. Empty for a correct scene. The two tangent circles are
/// not tangent to each other and are not compared.
pub fn tangency_defects(scene: &CircleScene) -> Vec<(usize, usize)> {
    let circles: Vec<(usize, Circle)> = scene.given.iter().copied().enumerate().collect();
    let fourth: Vec<(usize, Circle)> = [(3, scene.c4_plus), (4, scene.c4_minus)]
        .into_iter()
        .filter_map(|(i, c)| c.map(|c| (i, c)))
        .collect();
    let mut defects = Vec::new();
    let mut check = |(i, a): (usize, Circle), (j, b): (usize, Circle)| {
        let s = a.radius() + b.radius();
        if a.center.dist2(&b.center) != s * s {
            defects.push((i, j));
        }
    };
    for i in 0..3 {
        for j in i + 1..3 {
            check(circles[i], circles[j]);
        }
    }
    for f in &fourth {
        for g in &circles {
            check(*g, *f);
        }
    }
    defects
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Complex {
    re: QuadSurd,
    im: QuadSurd,
}

impl Complex {
    fn scale(self, c: QuadSurd) -> Complex {
        Complex { re: self.re * c, im: self.im * c }
    }
    fn add(self, o: Complex) -> Complex {
        Complex { re: self.re + o.re, im: self.im + o.im }
    }
    fn square(self) -> Complex {
        Complex { re: self.re * self.re - self.im * self.im, im: self.re * self.im * int(2) }
    }
}

/// Checks `(sum c_j z_j)^2 = 2 sum (c_j z_j)^2` for the three given circles and
/// the tangent circle with curvature `c4` and center `z4`.
pub fn complex_descartes_holds(scene: &CircleScene, fourth: &Circle) -> bool {
    let weighted: Vec<Complex> = scene
        .given
        .iter()
        .chain(core::iter::once(fourth))
        .map(|c| Complex { re: c.center.x, im: c.center.y }.scale(c.curvature))
        .collect();
    let zero = Complex { re: int(0), im: int(0) };
    let total = weighted.iter().fold(zero, |acc, w| acc.add(*w)).square();
    let squares = weighted.iter().fold(zero, |acc, w| acc.add(w.square()));
    total == squares.scale(int(2))
}
