use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::Float;

use super::{Circle, CircleScene};

#[derive(Debug, Clone, PartialEq)]
pub struct SvgStyle {
    /// Rendered width in pixels; the height follows the aspect ratio.
    pub width: u32,
    /// Write each circle's curvature at its center.
    pub labels: bool,
    pub stroke_width: f64,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { width: 600, labels: false, stroke_width: 0.004 }
    }
}

pub fn render_svg(scene: &CircleScene) -> String {
    render_svg_with(scene, &SvgStyle::default())
}

struct Drawn {
    cx: f64,
    cy: f64,
    r: f64,
    label: String,
    enclosing: bool,
}

fn drawn(c: &Circle) -> Drawn {
    let (cx, cy) = c.center.to_f64();
    let r = c.radius().to_f64();
    Drawn { cx, cy: -cy, r: Float::abs(r), label: alloc::format!("{}", c.curvature), enclosing: r < 0.0 }
}

pub fn render_svg_with(scene: &CircleScene, style: &SvgStyle) -> String {
    let mut circles: Vec<Drawn> = scene.given.iter().map(drawn).collect();
    circles.extend(scene.c4_plus.iter().map(drawn));
    circles.extend(scene.c4_minus.iter().map(drawn));

    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for c in &circles {
        x0 = x0.min(c.cx - c.r);
        x1 = x1.max(c.cx + c.r);
        y0 = y0.min(c.cy - c.r);
        y1 = y1.max(c.cy + c.r);
    }
    if let Some(line) = &scene.line {
        for p in [line.p, line.q, line.r] {
            let (px, py) = p.to_f64();
            x0 = x0.min(px);
            x1 = x1.max(px);
            y0 = y0.min(-py);
            y1 = y1.max(-py);
        }
    }
    let margin = 0.05 * (x1 - x0).max(y1 - y0);
    x0 -= margin;
    y0 -= margin;
    x1 += margin;
    y1 += margin;
    let (w, h) = (x1 - x0, y1 - y0);
    let height = Float::round(style.width as f64 * h / w) as u32;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        style.width, height, x0, y0, w, h
    );
    let _ = writeln!(out, "<title>Touching circles for {}</title>", scene.triple);
    let sw = style.stroke_width * w;
    for c in &circles {
        let fill = if c.enclosing { "none" } else { "#dde8f5" };
        let _ = writeln!(
            out,
            r##"<circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="{}" stroke="#1f3b5c" stroke-width="{:.6}"/>"##,
            c.cx, c.cy, c.r, fill, sw
        );
    }
    if let Some(line) = &scene.line {
        let m = super::surd::ratio_to_f64(&line.slope);
        let b = super::surd::ratio_to_f64(&line.intercept);
        let _ = writeln!(
            out,
            r##"<line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="#b03a2e" stroke-width="{:.6}"/>"##,
            x0,
            -(m * x0 + b),
            x1,
            -(m * x1 + b),
            sw
        );
    }
    if style.labels {
        for c in &circles {
            let y = if c.enclosing { c.cy + c.r * 0.9 } else { c.cy };
            let _ = writeln!(
                out,
                r#"<text x="{:.6}" y="{:.6}" font-size="{:.6}" text-anchor="middle">{}</text>"#,
                c.cx,
                y,
                (c.r * 0.5).min(0.08 * w),
                c.label
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descartes::CurvatureTriple;
    use crate::geometry::complete_scene;

    #[test]
    fn element_counts() {
        let s = complete_scene(&CurvatureTriple::new(1, 1, 4).unwrap());
        let svg = render_svg(&s);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("<line").count(), 1);
        let s = complete_scene(&CurvatureTriple::new(2, 2, 3).unwrap());
        let svg = render_svg(&s);
        assert_eq!(svg.matches("<circle").count(), 5);
        assert_eq!(svg, render_svg(&s));
    }
}
