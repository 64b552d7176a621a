//! SVG figure emission. The viewport auto-fits every point and circle of
//! the construction with a 10% margin, the y-axis is flipped to
//! mathematical orientation, and output is byte-identical for identical
//! inputs.

use std::fmt::Write;

use crate::constructions::ConstructionReport;
use crate::geom::{circumcircle, Circle, Point, Triangle};
use crate::Scalar;

const SVG_WIDTH: Scalar = 800.0;

/// World-to-figure mapping used by the emitter; exposed so embedders can
/// invert it (for example to place interaction handles over the figure).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub min_x: Scalar,
    pub min_y: Scalar,
    pub max_x: Scalar,
    pub max_y: Scalar,
    pub scale: Scalar,
    pub width: Scalar,
    pub height: Scalar,
}

impl Viewport {
    fn fit(points: &[Point], circles: &[Circle]) -> Viewport {
        let mut min_x = Scalar::INFINITY;
        let mut min_y = Scalar::INFINITY;
        let mut max_x = Scalar::NEG_INFINITY;
        let mut max_y = Scalar::NEG_INFINITY;
        for p in points {
            min_x = min_x.min(p.x);
            min_y = min_y.min(p.y);
            max_x = max_x.max(p.x);
            max_y = max_y.max(p.y);
        }
        for c in circles {
            min_x = min_x.min(c.center.x - c.radius);
            min_y = min_y.min(c.center.y - c.radius);
            max_x = max_x.max(c.center.x + c.radius);
            max_y = max_y.max(c.center.y + c.radius);
        }
        let pad = 0.1 * (max_x - min_x).max(max_y - min_y);
        min_x -= pad;
        min_y -= pad;
        max_x += pad;
        max_y += pad;
        let scale = SVG_WIDTH / (max_x - min_x);
        Viewport {
            min_x,
            min_y,
            max_x,
            max_y,
            scale,
            width: SVG_WIDTH,
            height: (max_y - min_y) * scale,
        }
    }

    /// World coordinates to figure coordinates (y flipped).
    pub fn map(&self, p: Point) -> (Scalar, Scalar) {
        (
            (p.x - self.min_x) * self.scale,
            (self.max_y - p.y) * self.scale,
        )
    }
}

struct Scene {
    circles: Vec<Circle>,
    // endpoint labels resolved against points; class picks the stroke
    segments: Vec<(Point, Point, &'static str)>,
    ratio_segments: [(Point, Point); 2],
}

fn scene_for(report: &ConstructionReport, t: &Triangle) -> Scene {
    let p = |label: &str| report.point(label);
    match report.construction_id {
        1 => Scene {
            circles: vec![circumcircle(t)],
            segments: vec![
                (t.b(), p("E"), "aux"),
                (t.c(), p("F"), "aux"),
                (p("E"), p("P"), "ray"),
                (p("P"), p("S"), "aux"),
            ],
            ratio_segments: [(p("R"), p("Q")), (p("R"), p("S"))],
        },
        2 => Scene {
            circles: vec![circumcircle(t)],
            segments: vec![
                (t.a(), p("D"), "aux"),
                (t.c(), p("F"), "aux"),
                (p("D"), p("P"), "ray"),
                (p("P"), p("S"), "aux"),
            ],
            ratio_segments: [(p("R"), p("S")), (p("R"), p("Q"))],
        },
        3 => {
            let omega = Circle::new(p("N"), p("N").dist(p("T")));
            Scene {
                circles: vec![Circle::new(p("D"), t.side_a() / 2.0), omega],
                segments: vec![
                    (p("D"), p("E"), "aux"),
                    (p("E"), p("F"), "aux"),
                    (p("F"), p("D"), "aux"),
                    (p("N"), p("D"), "ray"),
                    (p("S"), p("T"), "aux"),
                    (p("L"), p("G"), "ray"),
                ],
                ratio_segments: [(p("F"), p("E")), (p("E"), p("G"))],
            }
        }
        4 => {
            let k = p("K");
            Scene {
                circles: vec![Circle::new(k, k.dist(t.a()))],
                segments: vec![
                    (t.b(), p("E"), "aux"),
                    (p("F"), p("G"), "aux"),
                    (k, t.a(), "ray"),
                ],
                ratio_segments: [(p("M"), p("N")), (p("M"), t.b())],
            }
        }
        other => panic!("unknown construction id {other}"),
    }
}

fn fmt_coord(v: Scalar) -> String {
    format!("{v:.3}")
}

/// The viewport the emitter uses for this report, for embedders that need
/// to invert the figure mapping.
pub fn figure_viewport(report: &ConstructionReport, t: &Triangle) -> Viewport {
    let scene = scene_for(report, t);
    let mut all_points: Vec<Point> = t.vertices().to_vec();
    all_points.extend(report.points.values().copied());
    Viewport::fit(&all_points, &scene.circles)
}

/// Render a construction report as a standalone SVG 1.1 document.
pub fn emit_svg(report: &ConstructionReport, t: &Triangle) -> String {
    let scene = scene_for(report, t);
    let mut all_points: Vec<Point> = t.vertices().to_vec();
    all_points.extend(report.points.values().copied());
    let vp = Viewport::fit(&all_points, &scene.circles);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt_coord(vp.width),
        h = fmt_coord(vp.height),
    );
    out.push_str(
        r#"  <style>
    .edge { stroke: #222; stroke-width: 1.6; fill: none; }
    .circ { stroke: #8a8a8a; stroke-width: 1.0; fill: none; }
    .aux { stroke: #3b6ea5; stroke-width: 1.0; fill: none; }
    .ray { stroke: #3b6ea5; stroke-width: 1.0; fill: none; stroke-dasharray: 6 4; }
    .ratio-a { stroke: #c0392b; stroke-width: 2.4; fill: none; }
    .ratio-b { stroke: #1e8449; stroke-width: 2.4; fill: none; }
    .pt { fill: #111; }
    .lbl { font: 15px sans-serif; fill: #111; }
    .anno { font: 16px monospace; fill: #111; }
  </style>
"#,
    );
    let _ = writeln!(
        out,
        r#"  <rect width="{w}" height="{h}" fill="white"/>"#,
        w = fmt_coord(vp.width),
        h = fmt_coord(vp.height),
    );

    // triangle edges
    let [a, b, c] = t.vertices();
    let (ax, ay) = vp.map(a);
    let (bx, by) = vp.map(b);
    let (cx, cy) = vp.map(c);
    let _ = writeln!(
        out,
        r#"  <polygon class="edge" points="{},{} {},{} {},{}"/>"#,
        fmt_coord(ax),
        fmt_coord(ay),
        fmt_coord(bx),
        fmt_coord(by),
        fmt_coord(cx),
        fmt_coord(cy),
    );

    for circle in &scene.circles {
        let (cx, cy) = vp.map(circle.center);
        let _ = writeln!(
            out,
            r#"  <circle class="circ" cx="{}" cy="{}" r="{}"/>"#,
            fmt_coord(cx),
            fmt_coord(cy),
            fmt_coord(circle.radius * vp.scale),
        );
    }

    for (p, q, class) in &scene.segments {
        let (px, py) = vp.map(*p);
        let (qx, qy) = vp.map(*q);
        let _ = writeln!(
            out,
            r#"  <line class="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            class,
            fmt_coord(px),
            fmt_coord(py),
            fmt_coord(qx),
            fmt_coord(qy),
        );
    }

    for (i, (p, q)) in scene.ratio_segments.iter().enumerate() {
        let class = if i == 0 { "ratio-a" } else { "ratio-b" };
        let (px, py) = vp.map(*p);
        let (qx, qy) = vp.map(*q);
        let _ = writeln!(
            out,
            r#"  <line class="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            class,
            fmt_coord(px),
            fmt_coord(py),
            fmt_coord(qx),
            fmt_coord(qy),
        );
    }

    // vertex and construction point markers with labels
    let mut labeled: Vec<(&str, Point)> = vec![("A", a), ("B", b), ("C", c)];
    for (label, point) in &report.points {
        labeled.push((label, *point));
    }
    for (label, point) in labeled {
        let (px, py) = vp.map(point);
        let _ = writeln!(
            out,
            r#"  <circle class="pt" cx="{}" cy="{}" r="3"/>"#,
            fmt_coord(px),
            fmt_coord(py),
        );
        let _ = writeln!(
            out,
            r#"  <text class="lbl" x="{}" y="{}">{}</text>"#,
            fmt_coord(px + 6.0),
            fmt_coord(py - 6.0),
            label,
        );
    }

    // ratio annotation
    let _ = writeln!(
        out,
        r#"  <text class="anno" x="12" y="24">construction {}: {} = {}</text>"#,
        report.construction_id, report.ratio_name, report.ratio_value,
    );
    let _ = writeln!(
        out,
        r#"  <text class="anno" x="12" y="46">deviation from phi: {:e}</text>"#,
        report.deviation,
    );
    if !report.flags.is_empty() {
        let names: Vec<String> = report.flags.iter().map(|f| format!("{f:?}")).collect();
        let _ = writeln!(
            out,
            r#"  <text class="anno" x="12" y="68">flags: {}</text>"#,
            names.join(", "),
        );
    }

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct, construct1};

    fn equilateral() -> Triangle {
        Triangle::new(
            Point::new(0.5, 3f64.sqrt() / 2.0),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn fixture_has_nine_labeled_points() {
        let t = equilateral();
        let report = construct1(&t).unwrap();
        let svg = emit_svg(&report, &t);
        let markers = svg.matches(r#"class="pt""#).count();
        assert_eq!(markers, 9); // E, F, P, Q, R, S plus A, B, C
        for label in ["A", "B", "C", "E", "F", "P", "Q", "R", "S"] {
            assert!(svg.contains(&format!(">{label}</text>")), "missing {label}");
        }
        assert!(svg.contains("RQ/RS"));
    }

    #[test]
    fn deterministic_bytes() {
        let t = Triangle::new(
            Point::new(0.4, 2.1),
            Point::new(0.0, 0.0),
            Point::new(3.0, 0.2),
        )
        .unwrap();
        for id in 1..=4 {
            let report = construct(&t, id).unwrap();
            assert_eq!(emit_svg(&report, &t), emit_svg(&report, &t));
        }
    }

    #[test]
    fn all_construction_labels_present() {
        let t = Triangle::new(
            Point::new(0.4, 2.1),
            Point::new(0.0, 0.0),
            Point::new(3.0, 0.2),
        )
        .unwrap();
        let expectations: [(u8, &[&str]); 4] = [
            (1, &["E", "F", "P", "Q", "R", "S"]),
            (2, &["D", "F", "P", "Q", "R", "S"]),
            (3, &["N", "D", "E", "F", "S", "T", "G", "L"]),
            (4, &["E", "F", "G", "K", "M", "N"]),
        ];
        for (id, labels) in expectations {
            let report = construct(&t, id).unwrap();
            let svg = emit_svg(&report, &t);
            for label in labels {
                assert!(svg.contains(&format!(">{label}</text>")), "c{id} missing {label}");
            }
            assert!(svg.starts_with("<?xml"));
            assert!(svg.trim_end().ends_with("</svg>"));
        }
    }

    #[test]
    fn flags_rendered_when_present() {
        // EA/EC < 1/5 sets FOutsideSegmentAE
        let t = Triangle::new(
            Point::new(0.1, 0.3873),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
        )
        .unwrap();
        let report = construct(&t, 4).unwrap();
        assert!(!report.flags.is_empty());
        let svg = emit_svg(&report, &t);
        assert!(svg.contains("flags: FOutsideSegmentAE"));
    }
}
