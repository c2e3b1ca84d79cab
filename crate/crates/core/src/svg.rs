//! SVG rendering of drawings.
//!
//! Vertices are small squares, edges are `<line>`s, ply-disks are the only
//! `<circle>`s and sectors are `<path>`s.

use std::fmt::Write;

use crate::drawing::Drawing;
use crate::geometry::{Point, Sector};

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 20.0;

#[derive(Debug, Clone, Default)]
pub struct SvgOptions<'a> {
    pub show_ply_disks: bool,
    pub show_sectors: bool,
    /// Sectors drawn when `show_sectors` is set.
    pub sectors: &'a [Sector],
}

struct Frame {
    lo: Point,
    hi: Point,
    scale: f64,
}

impl Frame {
    fn fit(points: impl Iterator<Item = (Point, f64)>) -> Frame {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (p, r) in points {
            lo = Point::new(lo.x.min(p.x - r), lo.y.min(p.y - r));
            hi = Point::new(hi.x.max(p.x + r), hi.y.max(p.y + r));
        }
        let extent = (hi.x - lo.x).max(hi.y - lo.y);
        // Degenerate drawings still get a non-empty box.
        let pad = if extent > 0.0 { 0.0 } else { 0.5 };
        lo = Point::new(lo.x - pad, lo.y - pad);
        hi = Point::new(hi.x + pad, hi.y + pad);
        let extent = (hi.x - lo.x).max(hi.y - lo.y);
        Frame {
            lo,
            hi,
            scale: (SIZE - 2.0 * MARGIN) / extent,
        }
    }

    fn map(&self, p: Point) -> Point {
        let w = (self.hi.x - self.lo.x) * self.scale;
        let h = (self.hi.y - self.lo.y) * self.scale;
        Point::new(
            (SIZE - w) / 2.0 + (p.x - self.lo.x) * self.scale,
            (SIZE - h) / 2.0 + (self.hi.y - p.y) * self.scale,
        )
    }
}

pub fn emit_svg(drawing: &Drawing, options: &SvgOptions) -> String {
    let radii = drawing.longest_incident();
    let disks = drawing
        .positions()
        .iter()
        .zip(&radii)
        .map(|(&p, &l)| (p, if options.show_ply_disks { l / 2.0 } else { 0.0 }));
    let sectors = options
        .sectors
        .iter()
        .filter(|_| options.show_sectors)
        .map(|s| (s.apex, s.radius));
    let frame = Frame::fit(disks.chain(sectors));

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#);

    if options.show_sectors {
        let _ = writeln!(out, r##"<g fill="none" stroke="#9bb" stroke-width="0.5">"##);
        for s in options.sectors {
            let a = frame.map(s.apex);
            let p = frame.map(s.apex + s.direction.rotate(s.half_angle) * s.radius);
            let q = frame.map(s.apex + s.direction.rotate(-s.half_angle) * s.radius);
            let r = s.radius * frame.scale;
            // Flipping y turns counter-clockwise into clockwise.
            let _ = writeln!(
                out,
                r#"<path d="M {:.3} {:.3} L {:.3} {:.3} A {r:.3} {r:.3} 0 0 1 {:.3} {:.3} Z"/>"#,
                a.x, a.y, p.x, p.y, q.x, q.y
            );
        }
        let _ = writeln!(out, "</g>");
    }

    if options.show_ply_disks {
        let _ = writeln!(out, r##"<g fill="#e66" fill-opacity="0.12" stroke="#c44" stroke-width="0.5">"##);
        for (p, l) in drawing.positions().iter().zip(&radii) {
            let c = frame.map(*p);
            let _ = writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#, c.x, c.y, l / 2.0 * frame.scale);
        }
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1">"#);
    for &(u, v) in drawing.edges() {
        let (a, b) = (frame.map(drawing.position(u)), frame.map(drawing.position(v)));
        let _ = writeln!(out, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, a.x, a.y, b.x, b.y);
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g fill="#236">"##);
    for (i, p) in drawing.positions().iter().enumerate() {
        let c = frame.map(*p);
        let _ = writeln!(
            out,
            r#"<rect class="vertex" data-id="{}" x="{:.3}" y="{:.3}" width="4" height="4"/>"#,
            drawing.id(i),
            c.x - 2.0,
            c.y - 2.0
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
