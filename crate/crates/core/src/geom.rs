//! Robust primitive geometry: points, lines, circles, intersections,
//! barycentric conversion, and the tolerance policy every other module
//! inherits.
//!
//! All comparisons are relative to a configuration scale (for triangles, the
//! longest side) except the orientation degeneracy test, which works on
//! areas and therefore uses scale squared.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result, Scalar};

/// A 2D Cartesian position. Coordinates are finite by construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite point");
        Point { x, y }
    }

    /// Fallible constructor for boundary input that has not been validated.
    pub fn try_new(x: Scalar, y: Scalar) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::NonFiniteInput)
        }
    }

    pub fn dist(&self, other: Point) -> Scalar {
        (other - *self).norm()
    }

    pub fn dist_sq(&self, other: Point) -> Scalar {
        (other - *self).norm_sq()
    }

    pub fn midpoint(&self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }
}

/// A 2D displacement vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Vec2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(&self, other: Vec2) -> Scalar {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(&self, other: Vec2) -> Scalar {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(*self)
    }

    pub fn norm(&self) -> Scalar {
        self.norm_sq().sqrt()
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn unit(&self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }
}

impl Sub for Point {
    type Output = Vec2;
    fn sub(self, rhs: Point) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vec2> for Point {
    type Output = Point;
    fn add(self, rhs: Vec2) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<Scalar> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: Scalar) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// An infinite line given by an anchor point and a nonzero direction.
/// Equality is representation-insensitive: two lines with the same point set
/// compare equal under tolerance regardless of anchor and direction scaling.
#[derive(Debug, Clone, Copy)]
pub struct Line {
    pub anchor: Point,
    pub dir: Vec2,
}

impl Line {
    pub fn new(anchor: Point, dir: Vec2) -> Self {
        debug_assert!(dir.norm_sq() > 0.0, "zero line direction");
        Line { anchor, dir }
    }

    /// Line through two distinct points.
    pub fn through(p: Point, q: Point) -> Result<Self> {
        let d = q - p;
        if d.norm_sq() == 0.0 {
            return Err(Error::CoincidentPoints);
        }
        Ok(Line::new(p, d))
    }

    pub fn point_at(&self, t: Scalar) -> Point {
        self.anchor + self.dir * t
    }

    /// Parameter of the orthogonal projection of `p` onto the line.
    pub fn project_param(&self, p: Point) -> Scalar {
        self.dir.dot(p - self.anchor) / self.dir.norm_sq()
    }

    pub fn dist_to(&self, p: Point) -> Scalar {
        (self.dir.cross(p - self.anchor) / self.dir.norm()).abs()
    }

    /// Same-point-set comparison under `tol`, scaled by `scale`.
    pub fn same_line(&self, other: &Line, tol: Tolerance, scale: Scalar) -> bool {
        let parallel = self.dir.unit().cross(other.dir.unit()).abs() <= tol.eps_rel;
        parallel && other.dist_to(self.anchor) <= tol.eps_rel * scale
    }
}

/// A circle with positive radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: Scalar,
}

impl Circle {
    pub fn new(center: Point, radius: Scalar) -> Self {
        debug_assert!(radius > 0.0, "non-positive circle radius");
        Circle { center, radius }
    }
}

/// Homogeneous barycentric coordinates (x : y : z) relative to a triangle.
/// Scaling by any nonzero factor denotes the same point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarycentricCoords {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl BarycentricCoords {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Self {
        debug_assert!(
            x != 0.0 || y != 0.0 || z != 0.0,
            "all-zero barycentric coordinates"
        );
        BarycentricCoords { x, y, z }
    }

    pub fn sum(&self) -> Scalar {
        self.x + self.y + self.z
    }

    /// Representative scaled so the components sum to one. `None` for points
    /// at infinity.
    pub fn normalized(&self) -> Option<BarycentricCoords> {
        let s = self.sum();
        let magnitude = self.x.abs() + self.y.abs() + self.z.abs();
        if s.abs() <= 1e-15 * magnitude {
            None
        } else {
            Some(BarycentricCoords::new(self.x / s, self.y / s, self.z / s))
        }
    }
}

/// Relative comparison thresholds. `eps_rel` drives all length-scale
/// comparisons; `eps_area` drives the triangle degeneracy test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_rel: Scalar,
    pub eps_area: Scalar,
}

impl Tolerance {
    pub fn new(eps_rel: Scalar, eps_area: Scalar) -> Result<Self> {
        if !(eps_rel > 0.0 && eps_rel < 1e-3) {
            return Err(Error::InvalidTolerance(format!(
                "eps_rel must be in (0, 1e-3), got {eps_rel}"
            )));
        }
        if !(eps_area > 0.0 && eps_area < 1e-3) {
            return Err(Error::InvalidTolerance(format!(
                "eps_area must be in (0, 1e-3), got {eps_area}"
            )));
        }
        Ok(Tolerance { eps_rel, eps_area })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_rel: 1e-9,
            eps_area: 1e-12,
        }
    }
}

/// An ordered vertex triple with derived side lengths a = |BC|, b = |CA|,
/// c = |AB|. Non-degeneracy is enforced at construction, so downstream
/// operations never see collinear input.
#[derive(Debug, Clone, Copy)]
pub struct Triangle {
    a: Point,
    b: Point,
    c: Point,
    side_a: Scalar,
    side_b: Scalar,
    side_c: Scalar,
    scale: Scalar,
    tol: Tolerance,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        Self::with_tolerance(a, b, c, Tolerance::default())
    }

    pub fn with_tolerance(a: Point, b: Point, c: Point, tol: Tolerance) -> Result<Self> {
        for p in [a, b, c] {
            if !(p.x.is_finite() && p.y.is_finite()) {
                return Err(Error::NonFiniteInput);
            }
        }
        let side_a = b.dist(c);
        let side_b = c.dist(a);
        let side_c = a.dist(b);
        let scale = side_a.max(side_b).max(side_c);
        if scale == 0.0 || orientation(a, b, c).abs() <= tol.eps_area * scale * scale {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle {
            a,
            b,
            c,
            side_a,
            side_b,
            side_c,
            scale,
            tol,
        })
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn c(&self) -> Point {
        self.c
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    /// |BC|
    pub fn side_a(&self) -> Scalar {
        self.side_a
    }

    /// |CA|
    pub fn side_b(&self) -> Scalar {
        self.side_b
    }

    /// |AB|
    pub fn side_c(&self) -> Scalar {
        self.side_c
    }

    /// Longest side; the reference scale for tolerance comparisons.
    pub fn scale(&self) -> Scalar {
        self.scale
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    pub fn line_ab(&self) -> Line {
        Line::new(self.a, self.b - self.a)
    }

    pub fn line_bc(&self) -> Line {
        Line::new(self.b, self.c - self.b)
    }

    pub fn line_ca(&self) -> Line {
        Line::new(self.c, self.a - self.c)
    }
}

/// Twice the signed area of the triangle p, q, r. Positive for
/// counterclockwise order, zero within tolerance flags collinearity.
pub fn orientation(p: Point, q: Point, r: Point) -> Scalar {
    (q - p).cross(r - p)
}

/// Intersection of two non-parallel lines.
pub fn line_line_intersect(l1: &Line, l2: &Line, tol: Tolerance) -> Result<Point> {
    let denom = l1.dir.cross(l2.dir);
    if l1.dir.unit().cross(l2.dir.unit()).abs() <= tol.eps_rel {
        return Err(Error::ParallelLines);
    }
    let t = (l2.anchor - l1.anchor).cross(l2.dir) / denom;
    Ok(l1.point_at(t))
}

/// Result of intersecting a line with a circle. Tangency is a flagged
/// single intersection, not an error. Secant points are in increasing
/// line-parameter order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineCircleIntersection {
    None,
    Tangent(Point),
    Secant(Point, Point),
}

impl LineCircleIntersection {
    pub fn points(&self) -> Vec<Point> {
        match self {
            LineCircleIntersection::None => vec![],
            LineCircleIntersection::Tangent(p) => vec![*p],
            LineCircleIntersection::Secant(p, q) => vec![*p, *q],
        }
    }
}

/// Intersect a line with a circle via the foot of the perpendicular from
/// the center: the half-chord satisfies h^2 = r^2 - d^2.
pub fn line_circle_intersect(l: &Line, c: &Circle, tol: Tolerance) -> LineCircleIntersection {
    let t0 = l.project_param(c.center);
    let foot = l.point_at(t0);
    let h_sq = c.radius * c.radius - foot.dist_sq(c.center);
    let r_sq = c.radius * c.radius;
    if h_sq.abs() <= tol.eps_rel * r_sq {
        LineCircleIntersection::Tangent(foot)
    } else if h_sq < 0.0 {
        LineCircleIntersection::None
    } else {
        let dt = h_sq.sqrt() / l.dir.norm();
        LineCircleIntersection::Secant(l.point_at(t0 - dt), l.point_at(t0 + dt))
    }
}

/// The unique intersection of the ray from `origin` through `through` with
/// circle `c`, requiring `origin` strictly inside the circle.
pub fn ray_circle_hit(origin: Point, through: Point, c: &Circle, tol: Tolerance) -> Result<Point> {
    if power_of_point(origin, c) >= 0.0 {
        return Err(Error::OriginOutsideCircle);
    }
    let l = Line::through(origin, through)?;
    match line_circle_intersect(&l, c, tol) {
        LineCircleIntersection::Secant(_, far) => {
            // origin inside guarantees one root on each side of t = 0;
            // the second is the positive-parameter (forward) hit.
            Ok(far)
        }
        // unreachable for an interior origin; report rather than panic
        _ => Err(Error::NoRealIntersection),
    }
}

/// How `second_intersection` resolved: the point distinct from the known
/// one, or the known point itself when the line is tangent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondHit {
    pub point: Point,
    pub tangent: bool,
}

/// The intersection of `l` and `c` other than the already-known point.
/// Uses the Vieta relation t1 + t2 = 2 t0 so the far root never suffers
/// cancellation against the known one.
pub fn second_intersection(l: &Line, c: &Circle, known: Point, tol: Tolerance) -> Result<SecondHit> {
    let on_circle = (known.dist(c.center) - c.radius).abs() <= tol.eps_rel * c.radius;
    let on_line = l.dist_to(known) <= tol.eps_rel * c.radius;
    if !(on_circle && on_line) {
        return Err(Error::KnownNotOnCircle);
    }
    match line_circle_intersect(l, c, tol) {
        LineCircleIntersection::Tangent(_) => Ok(SecondHit {
            point: known,
            tangent: true,
        }),
        LineCircleIntersection::Secant(_, _) => {
            let t0 = l.project_param(c.center);
            let t_known = l.project_param(known);
            Ok(SecondHit {
                point: l.point_at(2.0 * t0 - t_known),
                tangent: false,
            })
        }
        LineCircleIntersection::None => Err(Error::KnownNotOnCircle),
    }
}

/// Circumcircle of a (non-degenerate by construction) triangle.
pub fn circumcircle(t: &Triangle) -> Circle {
    let [a, b, c] = t.vertices();
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    let ab_sq = ab.norm_sq();
    let ac_sq = ac.norm_sq();
    let ux = (ac.y * ab_sq - ab.y * ac_sq) / d;
    let uy = (ab.x * ac_sq - ac.x * ab_sq) / d;
    let center = a + Vec2::new(ux, uy);
    Circle::new(center, center.dist(a))
}

/// Cartesian point of homogeneous coordinates (x : y : z):
/// (xA + yB + zC) / (x + y + z).
pub fn bary_to_cart(t: &Triangle, bary: BarycentricCoords) -> Result<Point> {
    let b = bary.normalized().ok_or(Error::PointAtInfinity)?;
    let [pa, pb, pc] = t.vertices();
    Ok(Point::new(
        b.x * pa.x + b.y * pb.x + b.z * pc.x,
        b.x * pa.y + b.y * pb.y + b.z * pc.y,
    ))
}

/// Homogeneous coordinates of `p`, proportional to the signed areas of the
/// subtriangles opposite each vertex.
pub fn cart_to_bary(t: &Triangle, p: Point) -> BarycentricCoords {
    let [a, b, c] = t.vertices();
    BarycentricCoords::new(
        orientation(p, b, c),
        orientation(p, c, a),
        orientation(p, a, b),
    )
}

/// The line through `p` sharing `l`'s direction.
pub fn parallel_through(p: Point, l: &Line) -> Line {
    Line::new(p, l.dir)
}

/// The line through `p` perpendicular to `l`.
pub fn perpendicular_through(p: Point, l: &Line) -> Line {
    Line::new(p, l.dir.perp())
}

/// The locus of points equidistant from `p` and `q`.
pub fn perpendicular_bisector(p: Point, q: Point, tol: Tolerance) -> Result<Line> {
    let d = q - p;
    let scale = (p - Point::new(0.0, 0.0))
        .norm()
        .max((q - Point::new(0.0, 0.0)).norm());
    if d.norm() <= tol.eps_rel * scale || d.norm_sq() == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok(Line::new(p.midpoint(q), d.perp()))
}

/// |pc|^2 - r^2: negative inside, zero on the circle, positive outside.
/// Equals the signed product of directed chord segments through `p`.
pub fn power_of_point(p: Point, c: &Circle) -> Scalar {
    p.dist_sq(c.center) - c.radius * c.radius
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: Scalar, y: Scalar) -> Point {
        Point::new(x, y)
    }

    const TOL: Tolerance = Tolerance {
        eps_rel: 1e-9,
        eps_area: 1e-12,
    };

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)), 1.0);
        assert_eq!(orientation(pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)), 0.0);
        assert_eq!(orientation(pt(0.0, 0.0), pt(0.0, 1.0), pt(1.0, 0.0)), -1.0);
    }

    #[test]
    fn line_intersections() {
        let x_axis = Line::new(pt(0.0, 0.0), Vec2::new(1.0, 0.0));
        let y_axis = Line::new(pt(0.0, 0.0), Vec2::new(0.0, 1.0));
        let p = line_line_intersect(&x_axis, &y_axis, TOL).unwrap();
        assert_eq!(p, pt(0.0, 0.0));

        let y1 = Line::new(pt(0.0, 1.0), Vec2::new(1.0, 0.0));
        let x2 = Line::new(pt(2.0, 0.0), Vec2::new(0.0, 1.0));
        assert_eq!(line_line_intersect(&y1, &x2, TOL).unwrap(), pt(2.0, 1.0));

        let y0 = Line::new(pt(0.0, 0.0), Vec2::new(1.0, 0.0));
        assert_eq!(line_line_intersect(&y0, &y1, TOL), Err(Error::ParallelLines));
    }

    #[test]
    fn line_circle_cases() {
        let unit = Circle::new(pt(0.0, 0.0), 1.0);
        let x_axis = Line::new(pt(-5.0, 0.0), Vec2::new(1.0, 0.0));
        match line_circle_intersect(&x_axis, &unit, TOL) {
            LineCircleIntersection::Secant(p, q) => {
                assert!(p.dist(pt(-1.0, 0.0)) < 1e-12);
                assert!(q.dist(pt(1.0, 0.0)) < 1e-12);
            }
            other => panic!("expected secant, got {other:?}"),
        }

        let tangent = Line::new(pt(-5.0, 1.0), Vec2::new(1.0, 0.0));
        match line_circle_intersect(&tangent, &unit, TOL) {
            LineCircleIntersection::Tangent(p) => assert!(p.dist(pt(0.0, 1.0)) < 1e-12),
            other => panic!("expected tangent, got {other:?}"),
        }

        let miss = Line::new(pt(-5.0, 2.0), Vec2::new(1.0, 0.0));
        assert_eq!(line_circle_intersect(&miss, &unit, TOL), LineCircleIntersection::None);
    }

    #[test]
    fn ray_hits() {
        let unit = Circle::new(pt(0.0, 0.0), 1.0);
        let p = ray_circle_hit(pt(0.0, 0.0), pt(1.0, 0.0), &unit, TOL).unwrap();
        assert!(p.dist(pt(1.0, 0.0)) < 1e-12);

        // ray pointing in -x
        let p = ray_circle_hit(pt(0.5, 0.0), pt(0.0, 0.0), &unit, TOL).unwrap();
        assert!(p.dist(pt(-1.0, 0.0)) < 1e-12);

        assert_eq!(
            ray_circle_hit(pt(2.0, 0.0), pt(3.0, 0.0), &unit, TOL),
            Err(Error::OriginOutsideCircle)
        );
    }

    #[test]
    fn ray_hit_equilateral_fixture() {
        // Circumcircle of B(0,0), C(1,0), A(0.5, sqrt3/2); horizontal chord
        // y = sqrt3/4 against center (0.5, sqrt3/6), r = 1/sqrt3. The chord
        // quadratic gives x = 0.5 +- sqrt5/4; the -x ray keeps the low root.
        let t = Triangle::new(
            pt(0.5, 3f64.sqrt() / 2.0),
            pt(0.0, 0.0),
            pt(1.0, 0.0),
        )
        .unwrap();
        let omega = circumcircle(&t);
        assert!(omega.center.dist(pt(0.5, 3f64.sqrt() / 6.0)) < 1e-12);
        assert!((omega.radius - 1.0 / 3f64.sqrt()).abs() < 1e-12);

        let e = pt(0.75, 3f64.sqrt() / 4.0);
        let f = pt(0.25, 3f64.sqrt() / 4.0);
        let p = ray_circle_hit(e, f, &omega, TOL).unwrap();
        let expected = pt(0.5 - 5f64.sqrt() / 4.0, 3f64.sqrt() / 4.0);
        assert!(p.dist(expected) < 1e-12);
        assert!(p.dist(pt(-0.0590170, 0.4330127)) < 1e-6);

        // other root of the same chord quadratic
        let chord = Line::new(p, f - e);
        let s = second_intersection(&chord, &omega, p, TOL).unwrap();
        assert!(!s.tangent);
        let expected_s = pt(0.5 + 5f64.sqrt() / 4.0, 3f64.sqrt() / 4.0);
        assert!(s.point.dist(expected_s) < 1e-12);
    }

    #[test]
    fn second_intersection_cases() {
        let unit = Circle::new(pt(0.0, 0.0), 1.0);
        let x_axis = Line::new(pt(0.0, 0.0), Vec2::new(1.0, 0.0));
        let s = second_intersection(&x_axis, &unit, pt(1.0, 0.0), TOL).unwrap();
        assert!(!s.tangent);
        assert!(s.point.dist(pt(-1.0, 0.0)) < 1e-12);

        let tangent = Line::new(pt(0.0, 1.0), Vec2::new(1.0, 0.0));
        let s = second_intersection(&tangent, &unit, pt(0.0, 1.0), TOL).unwrap();
        assert!(s.tangent);
        assert_eq!(s.point, pt(0.0, 1.0));

        assert_eq!(
            second_intersection(&x_axis, &unit, pt(2.0, 0.0), TOL),
            Err(Error::KnownNotOnCircle)
        );
    }

    #[test]
    fn circumcircle_fixtures() {
        let t = Triangle::new(pt(0.0, 0.0), pt(2.0, 0.0), pt(0.0, 2.0)).unwrap();
        let c = circumcircle(&t);
        assert!(c.center.dist(pt(1.0, 1.0)) < 1e-12);
        assert!((c.radius - 2f64.sqrt()).abs() < 1e-12);

        // distance-equality oracle on a scalene triangle
        let t = Triangle::new(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0)).unwrap();
        let c = circumcircle(&t);
        for v in t.vertices() {
            assert!((v.dist(c.center) - c.radius).abs() <= 1e-12 * c.radius);
        }
    }

    #[test]
    fn barycentric_special_points() {
        let t = Triangle::new(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0)).unwrap();
        let a = bary_to_cart(&t, BarycentricCoords::new(1.0, 0.0, 0.0)).unwrap();
        assert!(a.dist(t.a()) < 1e-12);

        let centroid = bary_to_cart(&t, BarycentricCoords::new(1.0, 1.0, 1.0)).unwrap();
        assert!(centroid.dist(pt(5.0 / 3.0, 1.0)) < 1e-12);

        let mid_bc = bary_to_cart(&t, BarycentricCoords::new(0.0, 1.0, 1.0)).unwrap();
        assert!(mid_bc.dist(t.b().midpoint(t.c())) < 1e-12);

        assert_eq!(
            bary_to_cart(&t, BarycentricCoords::new(1.0, -2.0, 1.0)),
            Err(Error::PointAtInfinity)
        );
    }

    #[test]
    fn barycentric_inverse() {
        let t = Triangle::new(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0)).unwrap();
        let bary = cart_to_bary(&t, pt(5.0 / 3.0, 1.0)).normalized().unwrap();
        assert!((bary.x - 1.0 / 3.0).abs() < 1e-12);
        assert!((bary.y - 1.0 / 3.0).abs() < 1e-12);
        assert!((bary.z - 1.0 / 3.0).abs() < 1e-12);

        let at_b = cart_to_bary(&t, t.b()).normalized().unwrap();
        assert!(at_b.x.abs() < 1e-12);
        assert!((at_b.y - 1.0).abs() < 1e-12);
        assert!(at_b.z.abs() < 1e-12);
    }

    #[test]
    fn parallels_and_bisectors() {
        let x_axis = Line::new(pt(0.0, 0.0), Vec2::new(1.0, 0.0));
        let par = parallel_through(pt(0.0, 1.0), &x_axis);
        assert_eq!(par.anchor, pt(0.0, 1.0));
        assert_eq!(par.dir, Vec2::new(1.0, 0.0));

        let perp = perpendicular_through(pt(0.0, 0.0), &x_axis);
        assert_eq!(perp.dir.dot(x_axis.dir), 0.0);

        let bis = perpendicular_bisector(pt(0.0, 0.0), pt(2.0, 0.0), TOL).unwrap();
        assert_eq!(bis.anchor, pt(1.0, 0.0));
        assert_eq!(bis.dir.dot(Vec2::new(1.0, 0.0)), 0.0);

        assert_eq!(
            perpendicular_bisector(pt(1.0, 1.0), pt(1.0, 1.0), TOL).unwrap_err(),
            Error::CoincidentPoints
        );
    }

    #[test]
    fn power_of_point_cases() {
        let unit = Circle::new(pt(0.0, 0.0), 1.0);
        assert_eq!(power_of_point(pt(0.0, 0.0), &unit), -1.0);
        assert!(power_of_point(pt(1.0, 0.0), &unit).abs() < 1e-15);
        assert_eq!(power_of_point(pt(2.0, 0.0), &unit), 3.0);
    }

    #[test]
    fn degenerate_triangles_rejected() {
        assert_eq!(
            Triangle::new(pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)).unwrap_err(),
            Error::DegenerateTriangle
        );
        assert_eq!(
            Triangle::new(pt(0.0, 0.0), pt(0.0, 0.0), pt(1.0, 1.0)).unwrap_err(),
            Error::DegenerateTriangle
        );
        // unvalidated input reaching Triangle::new directly
        let bad = Point {
            x: f64::NAN,
            y: 0.0,
        };
        assert_eq!(
            Triangle::new(bad, pt(1.0, 0.0), pt(0.0, 1.0)).unwrap_err(),
            Error::NonFiniteInput
        );
    }

    #[test]
    fn tolerance_bounds() {
        assert!(Tolerance::new(1e-9, 1e-12).is_ok());
        assert!(Tolerance::new(0.0, 1e-12).is_err());
        assert!(Tolerance::new(1e-2, 1e-12).is_err());
        assert!(Tolerance::new(1e-9, 0.0).is_err());
    }
}
