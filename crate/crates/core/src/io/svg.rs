//! Orthographic pictures of traced curves on the sphere.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::io::format::write_atomic;
use crate::trace::{rotation_index, SphereTrace};

/// Viewing direction (azimuth and elevation in radians, from +x towards +y
/// and up from the equator) and image size in pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct View {
    pub azimuth: f64,
    pub elevation: f64,
    pub size: u32,
}

impl Default for View {
    fn default() -> Self {
        Self { azimuth: 0.6, elevation: 0.45, size: 480 }
    }
}

/// Upper bound on polyline vertices; longer traces are decimated.
const MAX_VERTICES: usize = 6000;

struct Camera {
    dir: [f64; 3],
    right: [f64; 3],
    up: [f64; 3],
    centre: f64,
    scale: f64,
}

impl Camera {
    fn new(view: &View, radius: f64) -> Self {
        let (sa, ca) = view.azimuth.sin_cos();
        let (se, ce) = view.elevation.sin_cos();
        let half = view.size as f64 / 2.0;
        Self {
            dir: [ce * ca, ce * sa, se],
            right: [-sa, ca, 0.0],
            up: [-se * ca, -se * sa, ce],
            centre: half,
            scale: 0.92 * half / radius,
        }
    }

    /// Screen position and whether the point faces the viewer.
    fn project(&self, x: [f64; 3]) -> (f64, f64, bool) {
        let d = |a: [f64; 3]| a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
        (self.centre + self.scale * d(self.right), self.centre - self.scale * d(self.up), d(self.dir) >= 0.0)
    }
}

fn polyline(out: &mut String, pts: &[(f64, f64)], class: &str) {
    if pts.len() < 2 {
        return;
    }
    let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
    let _ = writeln!(out, r#"<polyline class="{class}" points="{}"/>"#, coords.join(" "));
}

/// SVG 1.1 document for a closed trace: the sphere's outline, the rotation
/// axis, and the curve with its far-side portions dimmed.
pub fn render_svg(trace: &SphereTrace, view: &View) -> Result<String> {
    let index = rotation_index(trace)?;
    let radius = trace.params.radius;
    let cam = Camera::new(view, radius);
    let size = view.size;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        out,
        "<title>C1 = {}, C2 = {}, R = {}, {} periods, rotation index {index}</title>",
        trace.params.c1, trace.params.c2, radius, trace.periods
    );
    out.push_str(
        "<style>\
         .sphere{fill:#f4f4f4;stroke:#555;stroke-width:1}\
         .axis{stroke:#888;stroke-width:0.8;stroke-dasharray:4 3}\
         .front{fill:none;stroke:#1f4e99;stroke-width:1.6;stroke-linejoin:round}\
         .back{fill:none;stroke:#1f4e99;stroke-width:1;stroke-opacity:0.25}\
         </style>\n",
    );
    let c = cam.centre;
    let _ = writeln!(out, r#"<circle class="sphere" cx="{c:.3}" cy="{c:.3}" r="{:.3}"/>"#, cam.scale * radius);
    let (nx, ny, _) = cam.project([0.0, 0.0, 1.2 * radius]);
    let (sx, sy, _) = cam.project([0.0, 0.0, -1.2 * radius]);
    let _ = writeln!(out, r#"<line class="axis" x1="{sx:.3}" y1="{sy:.3}" x2="{nx:.3}" y2="{ny:.3}"/>"#);

    let stride = trace.points.len().div_ceil(MAX_VERTICES).max(1);
    let mut samples: Vec<[f64; 3]> = trace.points.iter().step_by(stride).map(|p| p.x).collect();
    samples.push(trace.points[trace.points.len() - 1].x);

    // Split into runs of constant visibility; back runs are drawn first so
    // that the visible curve sits on top.
    let mut runs: Vec<(bool, Vec<(f64, f64)>)> = Vec::new();
    for x in samples {
        let (px, py, front) = cam.project(x);
        match runs.last_mut() {
            Some((f, pts)) if *f == front => pts.push((px, py)),
            Some((_, pts)) => {
                let joint = *pts.last().expect("runs are never empty");
                runs.push((front, vec![joint, (px, py)]));
            }
            None => runs.push((front, vec![(px, py)])),
        }
    }
    for (_, pts) in runs.iter().filter(|(f, _)| !f) {
        polyline(&mut out, pts, "back");
    }
    for (_, pts) in runs.iter().filter(|(f, _)| *f) {
        polyline(&mut out, pts, "front");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Renders and writes the picture atomically.
pub fn emit_svg(trace: &SphereTrace, view: &View, path: &Path) -> Result<()> {
    write_atomic(path, render_svg(trace, view)?.as_bytes())
}
