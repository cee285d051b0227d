//! Standalone SVG drawings of instances and stabbers.

use std::fmt::Write;

use crate::error::Result;
use crate::geom::Instance;
use crate::shape::{realize_region, Solution};

const SIZE: f64 = 800.0;

struct Frame {
    x0: f64,
    y1: f64,
    w: f64,
    h: f64,
    scale: f64,
}

impl Frame {
    /// The bounding box of all endpoints grown by 10% of its larger side.
    fn new(inst: &Instance) -> Frame {
        let pts: Vec<(f64, f64)> = inst
            .endpoint_ids()
            .map(|id| {
                let p = inst.point(id);
                (p.x.to_f64(), p.y.to_f64())
            })
            .collect();
        let fold = |f: fn(f64, f64) -> f64, init: f64, k: usize| {
            pts.iter().map(|p| if k == 0 { p.0 } else { p.1 }).fold(init, f)
        };
        let (xl, xh) = (fold(f64::min, f64::INFINITY, 0), fold(f64::max, f64::NEG_INFINITY, 0));
        let (yl, yh) = (fold(f64::min, f64::INFINITY, 1), fold(f64::max, f64::NEG_INFINITY, 1));
        let span = (xh - xl).max(yh - yl).max(1.0);
        let m = 0.1 * span;
        let (w, h) = (xh - xl + 2.0 * m, yh - yl + 2.0 * m);
        Frame {
            x0: xl - m,
            y1: yh + m,
            w,
            h,
            scale: SIZE / w.max(h),
        }
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.x0) * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        (self.y1 - y) * self.scale
    }
}

/// Draws the segments of `inst` and, for every solution, its region clipped
/// to the frame. Endpoints are colored after the first solution: red ones
/// filled, blue ones hollow.
pub fn render_svg(inst: &Instance, sols: &[Solution]) -> Result<String> {
    let f = Frame::new(inst);
    let (wpx, hpx) = (f.w * f.scale, f.h * f.scale);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{wpx:.3}" height="{hpx:.3}" viewBox="0 0 {wpx:.3} {hpx:.3}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{wpx:.3}" height="{hpx:.3}" fill="white"/>"#);
    for sol in sols {
        let r = realize_region(sol, inst)?;
        let xl = r.x_min.as_ref().map_or(0.0, |v| f.px(v.to_f64()));
        let xh = r.x_max.as_ref().map_or(wpx, |v| f.px(v.to_f64()));
        let yt = r.y_max.as_ref().map_or(0.0, |v| f.py(v.to_f64()));
        let yb = r.y_min.as_ref().map_or(hpx, |v| f.py(v.to_f64()));
        let (xl, xh) = (xl.clamp(0.0, wpx), xh.clamp(0.0, wpx));
        let (yt, yb) = (yt.clamp(0.0, hpx), yb.clamp(0.0, hpx));
        let _ = writeln!(
            s,
            r##"<rect class="region" x="{xl:.3}" y="{yt:.3}" width="{:.3}" height="{:.3}" fill="#d62728" fill-opacity="0.15" stroke="#d62728" stroke-width="1"/>"##,
            xh - xl,
            yb - yt
        );
    }
    for seg in inst.segments() {
        let _ = writeln!(
            s,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="2"/>"#,
            f.px(seg.a.x.to_f64()),
            f.py(seg.a.y.to_f64()),
            f.px(seg.b.x.to_f64()),
            f.py(seg.b.y.to_f64())
        );
    }
    let first = sols.first();
    for id in inst.endpoint_ids() {
        let p = inst.point(id);
        let style = match first {
            Some(sol) if sol.class.contains(id) => r##"fill="#d62728" stroke="#d62728""##,
            Some(_) => r##"fill="white" stroke="#1f77b4""##,
            None => r#"fill="black" stroke="black""#,
        };
        let _ = writeln!(
            s,
            r#"<circle cx="{:.3}" cy="{:.3}" r="5" {style} stroke-width="2"/>"#,
            f.px(p.x.to_f64()),
            f.py(p.y.to_f64())
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
