//! Golden-ratio constructions in arbitrary triangles.
//!
//! The library executes four straightedge-and-compass style constructions
//! built from symmedians and the nine-point circle, each of which cuts a
//! segment in the golden ratio regardless of the input triangle. Around the
//! constructions sit a small robust 2D kernel ([`geom`]), triangle-specific
//! derived objects ([`triangle`]), independent numerical oracles for the
//! identities the constructions rely on ([`verify`]), and report/figure
//! emission ([`report`], [`svg`]).

pub mod constructions;
pub mod geom;
pub mod report;
pub mod svg;
pub mod triangle;
pub mod verify;

pub use constructions::{
    construct, construct1, construct2, construct3, construct4, ConstructionReport, Flag,
};
pub use geom::{
    bary_to_cart, cart_to_bary, circumcircle, line_circle_intersect, line_line_intersect,
    orientation, parallel_through, perpendicular_bisector, perpendicular_through, power_of_point,
    ray_circle_hit, second_intersection, BarycentricCoords, Circle, Line, LineCircleIntersection,
    Point, SecondHit, Tolerance, Triangle, Vec2,
};
pub use report::{parse_triangle, ReportBody, ReportDocument};
pub use triangle::{
    midpoints, nine_point, symmedian_foot, symmedian_point, CevianFoot, NinePointData, Vertex,
};
pub use verify::{
    check_lemma1, check_lemma3, check_ptolemy, check_ptolemy_concyclic, identity_checks,
    run_suite, sample_cyclic_quad, sample_interior_bary, sample_similarity, sample_triangle,
    CheckKind, CheckResult, CheckSummary, CyclicQuad, NamedCheck, SamplerConfig, SuiteSummary,
    CONSTRUCTION_TOL, LEMMA_TOL, RELAXED_CONSTRUCTION_TOL,
};

/// Scalar type used throughout; a single alias so an extended-precision
/// backend can be swapped in without touching interfaces.
pub type Scalar = f64;

/// The golden ratio, (1 + sqrt 5) / 2.
pub const PHI: Scalar = 1.618033988749895;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("lines are parallel within tolerance")]
    ParallelLines,
    #[error("ray origin lies outside the circle")]
    OriginOutsideCircle,
    #[error("known point does not lie on the line and circle")]
    KnownNotOnCircle,
    #[error("triangle is degenerate (collinear or repeated vertices)")]
    DegenerateTriangle,
    #[error("barycentric coordinates sum to zero (point at infinity)")]
    PointAtInfinity,
    #[error("points coincide within tolerance")]
    CoincidentPoints,
    #[error("barycentric coordinates are not strictly interior")]
    NonInteriorPoint,
    #[error("circle misses the line beyond tolerance")]
    NoRealIntersection,
    #[error("coordinate is NaN or infinite")]
    NonFiniteInput,
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("quadrilateral vertices are not concyclic within tolerance")]
    NotConcyclic,
    #[error("quadrilateral vertices are not in convex circular order")]
    NotConvexOrder,
    #[error("parse error at vertex {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_matches_closed_form() {
        let computed = (1.0 + 5f64.sqrt()) / 2.0;
        assert_eq!(PHI, computed);
        assert_eq!(PHI, 1.6180339887498949);
    }

    #[test]
    fn phi_satisfies_defining_equation() {
        // x - 1/x = 1, equivalently x^2 = x + 1
        assert!((PHI - 1.0 / PHI - 1.0).abs() < 1e-15);
        assert!((PHI * PHI - PHI - 1.0).abs() < 1e-15);
    }
}
