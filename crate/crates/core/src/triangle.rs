//! Triangle-derived objects: midpoints, symmedian feet, the symmedian
//! point, and the nine-point center/circle.
//!
//! Symmedian feet come from the barycentric formula rather than angle
//! reflection; the reflection property is checked in tests instead. The
//! nine-point center is computed as the circumcenter of the medial triangle.

use serde::{Deserialize, Serialize};

use crate::geom::{bary_to_cart, circumcircle, BarycentricCoords, Point, Triangle};
use crate::{Result, Scalar};

/// Vertex label of a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    /// Label of the side opposite this vertex.
    pub fn opposite_side(&self) -> &'static str {
        match self {
            Vertex::A => "BC",
            Vertex::B => "CA",
            Vertex::C => "AB",
        }
    }
}

/// Foot of a cevian: the intersection of a line from `vertex` with the
/// opposite side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CevianFoot {
    pub vertex: Vertex,
    pub foot: Point,
    pub side: &'static str,
}

/// Nine-point center and circle, plus the medial-triangle vertices it is
/// the circumcenter of: D, E, F are the midpoints of BC, CA, AB.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NinePointData {
    pub center: Point,
    pub radius: Scalar,
    pub d: Point,
    pub e: Point,
    pub f: Point,
}

/// Midpoints (D, E, F) of sides (BC, CA, AB).
pub fn midpoints(t: &Triangle) -> (Point, Point, Point) {
    (
        t.b().midpoint(t.c()),
        t.c().midpoint(t.a()),
        t.a().midpoint(t.b()),
    )
}

/// Foot of the symmedian from the given vertex, via the barycentric form:
/// from A it is (0 : b^2 : c^2) on BC, from B it is (a^2 : 0 : c^2) on CA,
/// from C it is (a^2 : b^2 : 0) on AB.
pub fn symmedian_foot(t: &Triangle, from: Vertex) -> Result<CevianFoot> {
    let (a2, b2, c2) = (
        t.side_a() * t.side_a(),
        t.side_b() * t.side_b(),
        t.side_c() * t.side_c(),
    );
    let bary = match from {
        Vertex::A => BarycentricCoords::new(0.0, b2, c2),
        Vertex::B => BarycentricCoords::new(a2, 0.0, c2),
        Vertex::C => BarycentricCoords::new(a2, b2, 0.0),
    };
    Ok(CevianFoot {
        vertex: from,
        foot: bary_to_cart(t, bary)?,
        side: from.opposite_side(),
    })
}

/// The symmedian (Lemoine) point, barycentrics (a^2 : b^2 : c^2); the
/// common point of the three symmedians.
pub fn symmedian_point(t: &Triangle) -> Result<Point> {
    let bary = BarycentricCoords::new(
        t.side_a() * t.side_a(),
        t.side_b() * t.side_b(),
        t.side_c() * t.side_c(),
    );
    bary_to_cart(t, bary)
}

/// Nine-point center and radius: the circumcenter and circumradius of the
/// medial triangle (radius R/2).
pub fn nine_point(t: &Triangle) -> Result<NinePointData> {
    let (d, e, f) = midpoints(t);
    let medial = Triangle::with_tolerance(d, e, f, t.tolerance())?;
    let circle = circumcircle(&medial);
    Ok(NinePointData {
        center: circle.center,
        radius: circle.radius,
        d,
        e,
        f,
    })
}
