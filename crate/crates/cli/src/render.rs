//! SVG drawing of an instance and, optionally, a cover.
//!
//! Output is a pure function of its inputs: fixed attribute order and fixed
//! number formatting, so identical inputs give identical bytes.

use crate::instance::{InstanceFile, Kind};
use diskcover::dudc::STRIP_HEIGHT;
use diskcover::reduced::tiling;
use std::fmt::Write;

const SCALE: f64 = 100.0;
const MARGIN: f64 = 0.25;
const POINT_R: f64 = 3.0;

#[derive(Debug, Clone, Default)]
pub struct Overlay {
    /// Selected disk indices.
    pub cover: Vec<usize>,
    /// Shifted tiling to draw for reduced-radius region instances.
    pub cells: Option<(u32, (u32, u32))>,
}

struct Frame {
    xmin: f64,
    ymax: f64,
}

impl Frame {
    fn x(&self, x: f64) -> String {
        format!("{:.3}", (x - self.xmin) * SCALE)
    }

    fn y(&self, y: f64) -> String {
        format!("{:.3}", (self.ymax - y) * SCALE)
    }
}

fn len(v: f64) -> String {
    format!("{:.3}", v * SCALE)
}

pub fn render_svg(file: &InstanceFile, overlay: &Overlay) -> String {
    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    for c in &file.disks {
        xs.extend([c.x - 1.0, c.x + 1.0]);
        ys.extend([c.y - 1.0, c.y + 1.0]);
    }
    for p in file.points() {
        xs.push(p.x);
        ys.push(p.y);
    }
    if let Some(r) = file.rect {
        xs.extend([r.xmin, r.xmax]);
        ys.extend([r.ymin, r.ymax]);
    }
    let lo = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (mut x0, mut x1, mut y0, mut y1) = (lo(&xs), hi(&xs), lo(&ys), hi(&ys));
    if !(x0.is_finite() && y0.is_finite()) {
        (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
    }
    let (x0, x1, y0, y1) = (x0 - MARGIN, x1 + MARGIN, y0 - MARGIN, y1 + MARGIN);
    let f = Frame { xmin: x0, ymax: y1 };
    let (w, h) = (len(x1 - x0), len(y1 - y0));

    let mut s = String::new();
    let _ = writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"##
    );
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"##);

    if let Some(r) = file.rect {
        let _ = writeln!(
            s,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#f3f0e6" stroke="black" stroke-width="1.5"/>"##,
            f.x(r.xmin),
            f.y(r.ymax),
            len(r.width()),
            len(r.height())
        );
    }

    match file.kind {
        Kind::Lsdudc => {
            if let Some(line) = file.line {
                hline(&mut s, &f, x0, x1, line, "#1b4965", "");
            }
        }
        Kind::Dudc => {
            // strip boundaries anchored at the lowest point
            let origin = lo(&file.points().iter().map(|p| p.y).collect::<Vec<_>>());
            if origin.is_finite() {
                let mut y = origin;
                while y <= y1 {
                    hline(&mut s, &f, x0, x1, y, "#8d99ae", r#" stroke-dasharray="6 4""#);
                    y += STRIP_HEIGHT;
                }
            }
        }
        Kind::Rrc | Kind::RrcReduced => {
            if let (Some(rect), Some((window, offset))) = (file.rect, overlay.cells) {
                for c in tiling(&rect, window, offset) {
                    let _ = writeln!(
                        s,
                        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#8d99ae" stroke-width="1" stroke-dasharray="6 4"/>"##,
                        f.x(c.xmin),
                        f.y(c.ymax),
                        len(c.width()),
                        len(c.height())
                    );
                }
            }
        }
    }

    for (i, c) in file.disks.iter().enumerate() {
        if !overlay.cover.contains(&i) {
            let _ = writeln!(
                s,
                r##"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="#9aa5b1" stroke-width="1"/>"##,
                f.x(c.x),
                f.y(c.y),
                len(1.0)
            );
        }
    }
    for (i, c) in file.disks.iter().enumerate() {
        if overlay.cover.contains(&i) {
            let _ = writeln!(
                s,
                r##"<circle cx="{}" cy="{}" r="{}" fill="#d1495b" fill-opacity="0.08" stroke="#d1495b" stroke-width="2.5"/>"##,
                f.x(c.x),
                f.y(c.y),
                len(1.0)
            );
        }
    }
    for p in file.points() {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{POINT_R}" fill="black"/>"##,
            f.x(p.x),
            f.y(p.y)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn hline(s: &mut String, f: &Frame, x0: f64, x1: f64, y: f64, color: &str, extra: &str) {
    let _ = writeln!(
        s,
        r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="1"{extra}/>"##,
        f.x(x0),
        f.y(y),
        f.x(x1),
        f.y(y)
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selected_disks_drawn_distinctly() {
        let f = InstanceFile::parse(r#"{"kind": "dudc", "points": [[0, 0]], "disks": [[0, 0], [1, 0]]}"#).unwrap();
        let svg = render_svg(&f, &Overlay { cover: vec![1], cells: None });
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches(r##"stroke="#d1495b""##).count(), 1);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn y_axis_points_up() {
        let f = InstanceFile::parse(r#"{"kind": "dudc", "points": [[0, 0], [0, 1]], "disks": [[0, 0.5]]}"#).unwrap();
        let svg = render_svg(&f, &Overlay::default());
        let cy: Vec<f64> = svg
            .lines()
            .filter(|l| l.contains(r#"fill="black""#))
            .map(|l| l.split("cy=\"").nth(1).unwrap().split('"').next().unwrap().parse().unwrap())
            .collect();
        assert!(cy[0] > cy[1]);
    }
}
