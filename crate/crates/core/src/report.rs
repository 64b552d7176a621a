//! Structured report documents and boundary input parsing. Documents are
//! JSON with a schema version so suite outputs can be diffed across
//! versions; reals serialize in shortest round-trip form, so every number
//! in a document recovers the exact double the library computed.

use serde::{Deserialize, Serialize};

use crate::constructions::ConstructionReport;
use crate::geom::{Point, Tolerance, Triangle};
use crate::verify::SuiteSummary;
use crate::{Error, Result, Scalar};

pub const SCHEMA_VERSION: &str = "1";

/// Identifies the emitting tool inside a document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Echo of the request that produced a document.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[[Scalar; 2]; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<Tolerance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check_tolerance: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma: Option<u8>,
}

impl InputEcho {
    pub fn for_triangle(t: &Triangle) -> Self {
        InputEcho {
            triangle: Some([
                [t.a().x, t.a().y],
                [t.b().x, t.b().y],
                [t.c().x, t.c().y],
            ]),
            tolerance: Some(t.tolerance()),
            ..Default::default()
        }
    }
}

/// Payload of a document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportBody {
    Construction { report: ConstructionReport },
    Suite { summary: SuiteSummary },
}

/// A complete emitted document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub tool: ToolInfo,
    pub input: InputEcho,
    #[serde(flatten)]
    pub body: ReportBody,
}

impl ReportDocument {
    pub fn construction(input: InputEcho, report: ConstructionReport) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            tool: ToolInfo::default(),
            input,
            body: ReportBody::Construction { report },
        }
    }

    pub fn suite(input: InputEcho, summary: SuiteSummary) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            tool: ToolInfo::default(),
            input,
            body: ReportBody::Suite { summary },
        }
    }

    /// Canonical serialized form (pretty JSON, sorted point maps, shortest
    /// round-trip reals). Identical inputs give identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Machine-readable error object for boundary emission.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorDocument {
    pub schema_version: String,
    pub error: ErrorObject,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorObject {
    pub kind: String,
    pub message: String,
}

impl ErrorDocument {
    pub fn from_error(err: &Error) -> Self {
        ErrorDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            error: ErrorObject {
                kind: err.kind().to_string(),
                message: err.to_string(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("error serialization cannot fail")
    }
}

impl Error {
    /// Stable machine-readable discriminant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ParallelLines => "ParallelLines",
            Error::OriginOutsideCircle => "OriginOutsideCircle",
            Error::KnownNotOnCircle => "KnownNotOnCircle",
            Error::DegenerateTriangle => "DegenerateTriangle",
            Error::PointAtInfinity => "PointAtInfinity",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::NonInteriorPoint => "NonInteriorPoint",
            Error::NoRealIntersection => "NoRealIntersection",
            Error::NonFiniteInput => "NonFiniteInput",
            Error::InvalidTolerance(_) => "InvalidTolerance",
            Error::NotConcyclic => "NotConcyclic",
            Error::NotConvexOrder => "NotConvexOrder",
            Error::Parse { .. } => "ParseError",
        }
    }
}

/// Parse the inline triangle grammar: three whitespace-separated "x,y"
/// vertices with decimal reals.
pub fn parse_triangle(text: &str) -> Result<Triangle> {
    parse_triangle_with(text, Tolerance::default())
}

pub fn parse_triangle_with(text: &str, tol: Tolerance) -> Result<Triangle> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 3 {
        return Err(Error::Parse {
            position: tokens.len().min(4),
            message: format!(
                "expected exactly 3 vertices as 'x1,y1 x2,y2 x3,y3', found {}",
                tokens.len()
            ),
        });
    }
    let mut pts = [Point::new(0.0, 0.0); 3];
    for (i, token) in tokens.iter().enumerate() {
        let position = i + 1;
        let parts: Vec<&str> = token.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Parse {
                position,
                message: format!("vertex '{token}' is not of the form 'x,y'"),
            });
        }
        let mut coords = [0.0; 2];
        for (j, part) in parts.iter().enumerate() {
            coords[j] = part.parse::<Scalar>().map_err(|e| Error::Parse {
                position,
                message: format!("malformed number '{part}': {e}"),
            })?;
            if !coords[j].is_finite() {
                return Err(Error::Parse {
                    position,
                    message: format!("non-finite coordinate '{part}'"),
                });
            }
        }
        pts[i] = Point::new(coords[0], coords[1]);
    }
    Triangle::with_tolerance(pts[0], pts[1], pts[2], tol)
}
