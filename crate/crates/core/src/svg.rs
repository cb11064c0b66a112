//! Static SVG figures of an analyzed scene: input points as filled dots,
//! centers as open dots, circles, polygon edges and mirror axes as strokes.

use std::fmt::Write;

use crate::report::Analysis;
use crate::scene::Shape;
use crate::value::CenterValue;

pub const DEFAULT_WIDTH: u32 = 800;
pub const MARGIN: f64 = 0.1;

/// Axis-aligned bounds in scene coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Bounds {
    fn of(points: impl IntoIterator<Item = [f64; 2]>) -> Bounds {
        let mut b = Bounds {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        };
        for [x, y] in points {
            b.min_x = b.min_x.min(x);
            b.min_y = b.min_y.min(y);
            b.max_x = b.max_x.max(x);
            b.max_y = b.max_y.max(y);
        }
        b
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    /// Grown by `MARGIN` of each side length; a zero side borrows the other
    /// side's length, or 1 when both are zero.
    pub fn with_margin(&self) -> Bounds {
        let (w, h) = (self.width(), self.height());
        let fallback = if w.max(h) > 0.0 { w.max(h) } else { 1.0 };
        let w = if w > 0.0 { w } else { fallback };
        let h = if h > 0.0 { h } else { fallback };
        let (cx, cy) = ((self.min_x + self.max_x) / 2.0, (self.min_y + self.max_y) / 2.0);
        let (hw, hh) = (w * (0.5 + MARGIN), h * (0.5 + MARGIN));
        Bounds {
            min_x: cx - hw,
            min_y: cy - hh,
            max_x: cx + hw,
            max_y: cy + hh,
        }
    }
}

/// Bounds of everything drawn except the unbounded axes.
pub fn scene_bounds(a: &Analysis) -> Bounds {
    let mut pts: Vec<[f64; 2]> = a.shape.points().iter().map(|p| p.to_f64()).collect();
    for v in centers(a) {
        pts.push(v.1.to_f64());
    }
    if let Some(c) = &a.circle {
        let [x, y] = c.center.to_f64();
        let r = c.radius().to_f64();
        pts.extend([[x - r, y - r], [x + r, y + r]]);
    }
    Bounds::of(pts)
}

fn centers(a: &Analysis) -> Vec<(&'static str, &CenterValue)> {
    let mut v = vec![("c", &a.centroid)];
    if let Some(x) = &a.x {
        v.push(("X", x));
    }
    if let Some(y) = &a.y {
        v.push(("Y", y));
    }
    if let Some(b) = &a.cyclic_center {
        v.push(("B", b));
    }
    v
}

fn num(v: f64) -> String {
    let s = format!("{:.4}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn render_svg(a: &Analysis, width: u32) -> String {
    let b = scene_bounds(a).with_margin();
    let (vw, vh) = (b.width(), b.height());
    let height = ((width as f64) * vh / vw).round().max(1.0) as u32;
    let unit = vw.max(vh);
    let (dot, stroke, font) = (unit * 0.012, unit * 0.004, unit * 0.035);
    // y is flipped: scene (x, y) is drawn at (x, -y)
    let p = |xy: [f64; 2]| (num(xy[0]), num(-xy[1]));
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="{} {} {} {}">"#,
        num(b.min_x),
        num(-b.max_y),
        num(vw),
        num(vh)
    );
    let _ = writeln!(s, "<title>{} {}, class {}</title>", a.shape.kind(), a.group, a.class);
    let _ = writeln!(s, r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#, num(b.min_x), num(-b.max_y), num(vw), num(vh));

    let diag = (vw * vw + vh * vh).sqrt();
    for axis in &a.group.axes {
        let [px, py] = axis.point.to_f64();
        let [dx, dy] = axis.direction.to_f64();
        let len = (dx * dx + dy * dy).sqrt();
        let (ux, uy) = (dx / len * diag, dy / len * diag);
        let (x1, y1) = p([px - ux, py - uy]);
        let (x2, y2) = p([px + ux, py + uy]);
        let _ = writeln!(
            s,
            r##"<line class="axis" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#999999" stroke-width="{}" stroke-dasharray="{} {}"/>"##,
            num(stroke),
            num(stroke * 4.0),
            num(stroke * 3.0)
        );
    }
    if let Some(c) = &a.circle {
        let (cx, cy) = p(c.center.to_f64());
        let _ = writeln!(
            s,
            r##"<circle class="circumcircle" cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="#6688bb" stroke-width="{}"/>"##,
            num(c.radius().to_f64()),
            num(stroke)
        );
    }
    if let Shape::Polygon(poly) = &a.shape {
        let pts: Vec<String> = poly
            .vertices()
            .iter()
            .map(|v| {
                let (x, y) = p(v.to_f64());
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon class="edges" points="{}" fill="none" stroke="#333333" stroke-width="{}" stroke-linejoin="round"/>"##,
            pts.join(" "),
            num(stroke)
        );
    }
    for (i, v) in a.shape.points().iter().enumerate() {
        let (x, y) = p(v.to_f64());
        let _ = writeln!(s, r##"<circle class="input" cx="{x}" cy="{y}" r="{}" fill="#000000"/>"##, num(dot));
        if let Shape::Labeled(l) = &a.shape {
            let (tx, ty) = p([v.to_f64()[0] + dot * 1.5, v.to_f64()[1] + dot * 1.5]);
            let _ = writeln!(s, r#"<text x="{tx}" y="{ty}" font-size="{}" font-family="sans-serif">{}</text>"#, num(font), l.labels()[i]);
        }
    }
    for (name, v) in centers(a) {
        let [vx, vy] = v.to_f64();
        let (x, y) = p([vx, vy]);
        let _ = writeln!(
            s,
            r##"<circle class="output" cx="{x}" cy="{y}" r="{}" fill="white" stroke="#cc3333" stroke-width="{}"/>"##,
            num(dot * 1.3),
            num(stroke)
        );
        let (tx, ty) = p([vx + dot * 1.8, vy + dot * 1.8]);
        let _ = writeln!(
            s,
            r##"<text x="{tx}" y="{ty}" font-size="{}" font-family="sans-serif" fill="#cc3333">{name}</text>"##,
            num(font)
        );
    }
    s.push_str("</svg>\n");
    s
}
