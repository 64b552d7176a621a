//! The four golden-ratio constructions, executed end to end on an
//! arbitrary triangle. Each returns every named point, the measured ratio
//! with its deviation from phi, and diagnostic flags.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geom::{
    circumcircle, line_circle_intersect, line_line_intersect, parallel_through,
    perpendicular_bisector, ray_circle_hit, second_intersection, Circle, Line,
    LineCircleIntersection, Point, Triangle,
};
use crate::triangle::{nine_point, symmedian_foot, Vertex};
use crate::{Error, Result, Scalar, PHI};

/// Diagnostics attached to a report. None of them invalidate the golden
/// ratio; they record where a named point landed relative to the segments
/// the figure usually shows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flag {
    /// A line met a circle tangentially; the second intersection equals the
    /// first.
    Tangent,
    /// Construction 4: F fell beyond A on ray EA (|EA| < |EC|/5).
    FOutsideSegmentAE,
    /// Constructions 1-2: Q landed outside the open segment AB.
    QOutsideSegmentAB,
    /// Constructions 1-2: R landed outside the open segment AC.
    ROutsideSegmentAC,
}

/// Result of one construction: the labeled points, the measured ratio, and
/// its deviation from phi.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub construction_id: u8,
    pub points: BTreeMap<String, Point>,
    pub ratio_name: String,
    pub ratio_value: Scalar,
    pub phi: Scalar,
    pub deviation: Scalar,
    pub flags: Vec<Flag>,
}

impl ConstructionReport {
    fn new(
        id: u8,
        points: Vec<(&str, Point)>,
        ratio_name: &str,
        ratio_value: Scalar,
        flags: Vec<Flag>,
    ) -> Self {
        ConstructionReport {
            construction_id: id,
            points: points
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            ratio_name: ratio_name.to_string(),
            ratio_value,
            phi: PHI,
            deviation: (ratio_value - PHI).abs() / PHI,
            flags,
        }
    }

    /// Labeled point lookup; construction reports always carry every label
    /// they promise.
    pub fn point(&self, label: &str) -> Point {
        self.points[label]
    }
}

/// Parameter of `p` along the segment from `a` to `b` (0 at `a`, 1 at `b`).
fn segment_param(a: Point, b: Point, p: Point) -> Scalar {
    let d = b - a;
    d.dot(p - a) / d.norm_sq()
}

fn outside_open_segment(a: Point, b: Point, p: Point, eps: Scalar) -> bool {
    let s = segment_param(a, b, p);
    s < eps || s > 1.0 - eps
}

/// Construction 1: symmedian feet E (from B, on CA) and F (from C, on AB);
/// ray EF meets the circumcircle at P; the parallel to BC through P meets
/// AB at Q, AC at R, and the circumcircle again at S. R cuts QS in the
/// golden ratio: RQ/RS = phi.
pub fn construct1(t: &Triangle) -> Result<ConstructionReport> {
    let tol = t.tolerance();
    let omega = circumcircle(t);
    let e = symmedian_foot(t, Vertex::B)?.foot;
    let f = symmedian_foot(t, Vertex::C)?.foot;
    let p = ray_circle_hit(e, f, &omega, tol)?;
    let chord = parallel_through(p, &t.line_bc());
    let q = line_line_intersect(&chord, &t.line_ab(), tol)?;
    let r = line_line_intersect(&chord, &t.line_ca(), tol)?;
    let s_hit = second_intersection(&chord, &omega, p, tol)?;
    let s = s_hit.point;

    let mut flags = Vec::new();
    if s_hit.tangent {
        flags.push(Flag::Tangent);
    }
    if outside_open_segment(t.a(), t.b(), q, tol.eps_rel) {
        flags.push(Flag::QOutsideSegmentAB);
    }
    if outside_open_segment(t.a(), t.c(), r, tol.eps_rel) {
        flags.push(Flag::ROutsideSegmentAC);
    }

    let ratio = r.dist(q) / r.dist(s);
    Ok(ConstructionReport::new(
        1,
        vec![("E", e), ("F", f), ("P", p), ("Q", q), ("R", r), ("S", s)],
        "RQ/RS",
        ratio,
        flags,
    ))
}

/// Construction 2: symmedian feet D (from A, on BC) and F (from C, on AB);
/// ray DF meets the circumcircle at P; the parallel to BC through P meets
/// AB at Q, AC at R, and the circumcircle again at S. R cuts SQ in the
/// golden ratio: RS/RQ = phi.
pub fn construct2(t: &Triangle) -> Result<ConstructionReport> {
    let tol = t.tolerance();
    let omega = circumcircle(t);
    let d = symmedian_foot(t, Vertex::A)?.foot;
    let f = symmedian_foot(t, Vertex::C)?.foot;
    let p = ray_circle_hit(d, f, &omega, tol)?;
    let chord = parallel_through(p, &t.line_bc());
    let q = line_line_intersect(&chord, &t.line_ab(), tol)?;
    let r = line_line_intersect(&chord, &t.line_ca(), tol)?;
    let s_hit = second_intersection(&chord, &omega, p, tol)?;
    let s = s_hit.point;

    let mut flags = Vec::new();
    if s_hit.tangent {
        flags.push(Flag::Tangent);
    }
    if outside_open_segment(t.a(), t.b(), q, tol.eps_rel) {
        flags.push(Flag::QOutsideSegmentAB);
    }
    if outside_open_segment(t.a(), t.c(), r, tol.eps_rel) {
        flags.push(Flag::ROutsideSegmentAC);
    }

    let ratio = r.dist(s) / r.dist(q);
    Ok(ConstructionReport::new(
        2,
        vec![("D", d), ("F", f), ("P", p), ("Q", q), ("R", r), ("S", s)],
        "RS/RQ",
        ratio,
        flags,
    ))
}

/// Construction 3: with N the nine-point center and D, E, F the midpoints
/// of BC, CA, AB, the perpendicular to ND at D meets the circle on
/// diameter BC at S and T; the circle Omega around N through S and T meets
/// line EF at G (E strictly between F and G) and again at L. E cuts FG in
/// the golden ratio: FE/EG = phi.
pub fn construct3(t: &Triangle) -> Result<ConstructionReport> {
    let tol = t.tolerance();
    let nine = nine_point(t)?;
    let n = nine.center;
    let (d, e, f) = (nine.d, nine.e, nine.f);

    let bc_circle = Circle::new(d, t.side_a() / 2.0);
    let nd = d - n;
    // |ND| equals the nine-point radius, so the degenerate branch is out of
    // reach for valid triangles; keep it for continuity anyway, with S, T
    // placed on the diameter parallel to BC.
    let st_dir = if nd.norm() <= tol.eps_rel * t.scale() {
        t.c() - t.b()
    } else {
        nd.perp()
    };
    let st_line = Line::new(d, st_dir);
    let (s, t_pt) = match line_circle_intersect(&st_line, &bc_circle, tol) {
        LineCircleIntersection::Secant(p1, p2) => (p1, p2),
        // st_line passes through the center of bc_circle
        _ => return Err(Error::NoRealIntersection),
    };

    // radius via the right triangle N-D-T; direction-independent and
    // continuous through the (unreachable) N = D case
    let half_a = t.side_a() / 2.0;
    let omega_big = Circle::new(n, (nd.norm_sq() + half_a * half_a).sqrt());

    // line EF anchored at F towards E: E sits at parameter 1, G beyond it
    let ef_line = Line::through(f, e)?;
    let (g, l) = match line_circle_intersect(&ef_line, &omega_big, tol) {
        LineCircleIntersection::Secant(p1, p2) => {
            if ef_line.project_param(p1) > ef_line.project_param(p2) {
                (p1, p2)
            } else {
                (p2, p1)
            }
        }
        // E and F are strictly inside Omega
        _ => return Err(Error::NoRealIntersection),
    };

    let ratio = f.dist(e) / e.dist(g);
    Ok(ConstructionReport::new(
        3,
        vec![
            ("N", n),
            ("D", d),
            ("E", e),
            ("F", f),
            ("S", s),
            ("T", t_pt),
            ("G", g),
            ("L", l),
        ],
        "FE/EG",
        ratio,
        Vec::new(),
    ))
}

/// Construction 4: with E the symmedian foot from B on CA, place F on ray
/// EA with |FE| = |EC|/5; the parallel to BE through F meets AB at G; the
/// perpendicular bisectors of AG and BC meet at K; the circle around K
/// through A meets line BC at M and N (|BM| <= |BN|). M cuts NB in the
/// golden ratio: MN/MB = phi.
pub fn construct4(t: &Triangle) -> Result<ConstructionReport> {
    let tol = t.tolerance();
    let e = symmedian_foot(t, Vertex::B)?.foot;
    let ea = e.dist(t.a());
    let ec = e.dist(t.c());
    let f = e + (t.a() - e).unit() * (ec / 5.0);

    let mut flags = Vec::new();
    if ea < ec / 5.0 {
        flags.push(Flag::FOutsideSegmentAE);
    }

    let be = Line::through(t.b(), e)?;
    let g = line_line_intersect(&parallel_through(f, &be), &t.line_ab(), tol)?;
    let bis_ag = perpendicular_bisector(t.a(), g, tol)?;
    let bis_bc = perpendicular_bisector(t.b(), t.c(), tol)?;
    let k = line_line_intersect(&bis_ag, &bis_bc, tol)?;
    let circle_k = Circle::new(k, k.dist(t.a()));

    let (m, n) = match line_circle_intersect(&t.line_bc(), &circle_k, tol) {
        LineCircleIntersection::Secant(p1, p2) => {
            if t.b().dist(p1) <= t.b().dist(p2) {
                (p1, p2)
            } else {
                (p2, p1)
            }
        }
        // analytically BM * BN = BC^2 / 5 keeps the chord real; anything
        // else signals numerically broken input
        _ => return Err(Error::NoRealIntersection),
    };

    let ratio = m.dist(n) / m.dist(t.b());
    Ok(ConstructionReport::new(
        4,
        vec![("E", e), ("F", f), ("G", g), ("K", k), ("M", m), ("N", n)],
        "MN/MB",
        ratio,
        flags,
    ))
}

/// Run a construction by id (1 through 4).
pub fn construct(t: &Triangle, id: u8) -> Result<ConstructionReport> {
    match id {
        1 => construct1(t),
        2 => construct2(t),
        3 => construct3(t),
        4 => construct4(t),
        _ => panic!("construction id must be 1..=4, got {id}"),
    }
}
