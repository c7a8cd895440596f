//! The JSON coloring document.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "dimension": 1,
//!   "flavor": "regions",
//!   "classes": [
//!     {"color": "0", "boxes": [[{"lo": "0", "lo_end": "lo_closed", "hi": "1/2", "hi_end": "hi_open"}]]},
//!     {"color": "1", "boxes": [[{"lo": "1/2", "lo_end": "lo_closed", "hi": "1", "hi_end": "hi_closed"}]]}
//!   ]
//! }
//! ```
//!
//! Flavors `points` (`"points": [{"coords": [...], "color": ...}]`),
//! `lebesgue_cover` (`"members": [{"label": ..., "boxes": ...}]`) and
//! `kkm_cover` (`"members": [{"vertex": "01", "boxes": ...}]`) use the same
//! box encoding. Numbers are rational strings `"p/q"` or JSON integers.

use std::fmt;

use serde::Serialize;
use serde_json::Value;
use slkkm_core::coloring::{KkmCover, LebesgueCover, PointColoring, RegionColoring};
use slkkm_core::geometry::{AxisBox, BoxUnion, Interval, Point, Vertex};
use slkkm_core::scalar::{format_scalar, parse_scalar, Scalar};
use slkkm_core::Error as CoreError;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ErrorCode {
    MalformedJson,
    SchemaError,
    UnsupportedVersion,
    BadRational,
    DimensionMismatch,
    InvalidInterval,
    OutsideCube,
    DuplicatePoint,
    DuplicateLabel,
    PartitionViolation,
    InvalidCover,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::MalformedJson => "MALFORMED_JSON",
            Self::SchemaError => "SCHEMA_ERROR",
            Self::UnsupportedVersion => "UNSUPPORTED_VERSION",
            Self::BadRational => "BAD_RATIONAL",
            Self::DimensionMismatch => "DIMENSION_MISMATCH",
            Self::InvalidInterval => "INVALID_INTERVAL",
            Self::OutsideCube => "OUTSIDE_CUBE",
            Self::DuplicatePoint => "DUPLICATE_POINT",
            Self::DuplicateLabel => "DUPLICATE_LABEL",
            Self::PartitionViolation => "PARTITION_VIOLATION",
            Self::InvalidCover => "INVALID_COVER",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseError {
    pub code: ErrorCode,
    /// JSON path of the offending value, `$` for the whole document.
    pub location: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code.as_str(), self.location, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(code: ErrorCode, location: &str, message: impl Into<String>) -> ParseError {
    ParseError {
        code,
        location: location.to_string(),
        message: message.into(),
    }
}

fn from_core(e: CoreError, location: &str) -> ParseError {
    let code = match &e {
        CoreError::DimensionMismatch { .. } | CoreError::ZeroDimension => ErrorCode::DimensionMismatch,
        CoreError::InvalidInterval(_) => ErrorCode::InvalidInterval,
        CoreError::BadRational(_) => ErrorCode::BadRational,
        CoreError::OutsideDomain(..) => ErrorCode::OutsideCube,
        CoreError::DuplicateLabel(_) => ErrorCode::DuplicateLabel,
        CoreError::PartitionViolation(_) => ErrorCode::PartitionViolation,
        CoreError::InvalidDomain(m) if m.contains("appears twice") => ErrorCode::DuplicatePoint,
        _ => ErrorCode::InvalidCover,
    };
    err(code, location, e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Points(PointColoring),
    Regions(RegionColoring),
    LebesgueCover(LebesgueCover),
    KkmCover(KkmCover),
}

impl Document {
    pub fn flavor(&self) -> &'static str {
        match self {
            Self::Points(_) => "points",
            Self::Regions(_) => "regions",
            Self::LebesgueCover(_) => "lebesgue_cover",
            Self::KkmCover(_) => "kkm_cover",
        }
    }
}

struct Cursor<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Cursor<'a> {
    fn field(&self, name: &str) -> Result<Cursor<'a>, ParseError> {
        let obj = self
            .value
            .as_object()
            .ok_or_else(|| err(ErrorCode::SchemaError, &self.path, "expected an object"))?;
        let path = format!("{}.{name}", self.path);
        obj.get(name)
            .map(|value| Cursor {
                value,
                path: path.clone(),
            })
            .ok_or_else(|| err(ErrorCode::SchemaError, &path, "missing field"))
    }

    fn items(&self) -> Result<Vec<Cursor<'a>>, ParseError> {
        let arr = self
            .value
            .as_array()
            .ok_or_else(|| err(ErrorCode::SchemaError, &self.path, "expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, value)| Cursor {
                value,
                path: format!("{}[{i}]", self.path),
            })
            .collect())
    }

    fn str(&self) -> Result<&'a str, ParseError> {
        self.value
            .as_str()
            .ok_or_else(|| err(ErrorCode::SchemaError, &self.path, "expected a string"))
    }

    fn uint(&self) -> Result<u64, ParseError> {
        self.value
            .as_u64()
            .ok_or_else(|| err(ErrorCode::SchemaError, &self.path, "expected a non-negative integer"))
    }

    fn scalar(&self) -> Result<Scalar, ParseError> {
        let bad = |m: String| err(ErrorCode::BadRational, &self.path, m);
        match self.value {
            Value::String(s) => parse_scalar(s).map_err(|e| bad(e.to_string())),
            Value::Number(n) if n.is_i64() || n.is_u64() => {
                parse_scalar(&n.to_string()).map_err(|e| bad(e.to_string()))
            }
            Value::Number(n) => Err(bad(format!("{n} is not exact; write it as \"p/q\""))),
            _ => Err(bad("expected a rational string or an integer".into())),
        }
    }
}

fn parse_interval(c: &Cursor) -> Result<Interval, ParseError> {
    let lo = c.field("lo")?.scalar()?;
    let hi = c.field("hi")?.scalar()?;
    let lo_end = c.field("lo_end")?;
    let lo_closed = match lo_end.str()? {
        "lo_closed" => true,
        "lo_open" => false,
        other => {
            return Err(err(
                ErrorCode::SchemaError,
                &lo_end.path,
                format!("expected lo_closed or lo_open, got {other:?}"),
            ))
        }
    };
    let hi_end = c.field("hi_end")?;
    let hi_closed = match hi_end.str()? {
        "hi_closed" => true,
        "hi_open" => false,
        other => {
            return Err(err(
                ErrorCode::SchemaError,
                &hi_end.path,
                format!("expected hi_closed or hi_open, got {other:?}"),
            ))
        }
    };
    Interval::new(lo, hi, lo_closed, hi_closed).map_err(|e| from_core(e, &c.path))
}

fn parse_boxes(c: &Cursor, dim: usize) -> Result<BoxUnion, ParseError> {
    let mut boxes = Vec::new();
    for b in c.items()? {
        let intervals = b.items()?;
        if intervals.len() != dim {
            return Err(err(
                ErrorCode::DimensionMismatch,
                &b.path,
                format!("box has {} intervals, dimension is {dim}", intervals.len()),
            ));
        }
        let ivs = intervals.iter().map(parse_interval).collect::<Result<Vec<_>, _>>()?;
        boxes.push(AxisBox::new(ivs).map_err(|e| from_core(e, &b.path))?);
    }
    BoxUnion::new(dim, boxes).map_err(|e| from_core(e, &c.path))
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| err(ErrorCode::MalformedJson, "$", e.to_string()))?;
    let root = Cursor {
        value: &value,
        path: "$".into(),
    };
    let version = root.field("format_version")?;
    if version.uint()? != FORMAT_VERSION {
        return Err(err(
            ErrorCode::UnsupportedVersion,
            &version.path,
            format!("only version {FORMAT_VERSION} is known"),
        ));
    }
    let dim_c = root.field("dimension")?;
    let dim = dim_c.uint()? as usize;
    if dim == 0 || dim > 20 {
        return Err(err(
            ErrorCode::DimensionMismatch,
            &dim_c.path,
            "dimension must be in 1..=20",
        ));
    }
    let flavor = root.field("flavor")?;
    match flavor.str()? {
        "points" => {
            let pts = root.field("points")?;
            let mut entries = Vec::new();
            for p in pts.items()? {
                let coords_c = p.field("coords")?;
                let coords = coords_c
                    .items()?
                    .iter()
                    .map(Cursor::scalar)
                    .collect::<Result<Vec<_>, _>>()?;
                if coords.len() != dim {
                    return Err(err(
                        ErrorCode::DimensionMismatch,
                        &coords_c.path,
                        format!("point has {} coordinates, dimension is {dim}", coords.len()),
                    ));
                }
                let color = p.field("color")?.str()?.to_string();
                entries.push((Point::new(coords).map_err(|e| from_core(e, &p.path))?, color));
            }
            PointColoring::new(dim, entries)
                .map(Document::Points)
                .map_err(|e| from_core(e, &pts.path))
        }
        "regions" => {
            let classes_c = root.field("classes")?;
            let mut classes = Vec::new();
            for c in classes_c.items()? {
                let color = c.field("color")?.str()?.to_string();
                classes.push((color, parse_boxes(&c.field("boxes")?, dim)?));
            }
            RegionColoring::new(dim, classes)
                .map(Document::Regions)
                .map_err(|e| from_core(e, &classes_c.path))
        }
        "lebesgue_cover" => {
            let members_c = root.field("members")?;
            let mut members = Vec::new();
            for m in members_c.items()? {
                let label = m.field("label")?.str()?.to_string();
                members.push((label, parse_boxes(&m.field("boxes")?, dim)?));
            }
            LebesgueCover::new(dim, members)
                .map(Document::LebesgueCover)
                .map_err(|e| from_core(e, &members_c.path))
        }
        "kkm_cover" => {
            let members_c = root.field("members")?;
            let mut members = Vec::new();
            for m in members_c.items()? {
                let v_c = m.field("vertex")?;
                let v = Vertex::parse(v_c.str()?).filter(|v| v.dim() == dim).ok_or_else(|| {
                    err(
                        ErrorCode::SchemaError,
                        &v_c.path,
                        format!("expected a 0/1 string of length {dim}"),
                    )
                })?;
                members.push((v, parse_boxes(&m.field("boxes")?, dim)?));
            }
            KkmCover::new(dim, members)
                .map(Document::KkmCover)
                .map_err(|e| from_core(e, &members_c.path))
        }
        other => Err(err(
            ErrorCode::SchemaError,
            &flavor.path,
            format!("unknown flavor {other:?}"),
        )),
    }
}

#[derive(Serialize)]
struct IntervalOut {
    lo: String,
    lo_end: &'static str,
    hi: String,
    hi_end: &'static str,
}

fn boxes_out(u: &BoxUnion) -> Vec<Vec<IntervalOut>> {
    u.boxes()
        .iter()
        .map(|b| {
            b.intervals()
                .iter()
                .map(|iv| IntervalOut {
                    lo: format_scalar(iv.lo()),
                    lo_end: if iv.lo_closed() { "lo_closed" } else { "lo_open" },
                    hi: format_scalar(iv.hi()),
                    hi_end: if iv.hi_closed() { "hi_closed" } else { "hi_open" },
                })
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
struct PointOut {
    coords: Vec<String>,
    color: String,
}

#[derive(Serialize)]
struct ClassOut {
    color: String,
    boxes: Vec<Vec<IntervalOut>>,
}

#[derive(Serialize)]
struct LabeledOut {
    label: String,
    boxes: Vec<Vec<IntervalOut>>,
}

#[derive(Serialize)]
struct VertexOut {
    vertex: String,
    boxes: Vec<Vec<IntervalOut>>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Payload {
    Points { points: Vec<PointOut> },
    Classes { classes: Vec<ClassOut> },
    Labeled { members: Vec<LabeledOut> },
    Vertices { members: Vec<VertexOut> },
}

#[derive(Serialize)]
struct DocumentOut {
    format_version: u64,
    dimension: usize,
    flavor: &'static str,
    #[serde(flatten)]
    payload: Payload,
}

fn document_out(doc: &Document) -> DocumentOut {
    let (dimension, payload) = match doc {
        Document::Points(pc) => (
            pc.dim(),
            Payload::Points {
                points: pc
                    .points()
                    .iter()
                    .enumerate()
                    .map(|(i, p)| PointOut {
                        coords: p.coords().iter().map(format_scalar).collect(),
                        color: pc.color_of(i).to_string(),
                    })
                    .collect(),
            },
        ),
        Document::Regions(rc) => (
            rc.dim(),
            Payload::Classes {
                classes: rc
                    .classes()
                    .iter()
                    .map(|c| ClassOut {
                        color: c.label.clone(),
                        boxes: boxes_out(&c.region),
                    })
                    .collect(),
            },
        ),
        Document::LebesgueCover(cov) => (
            cov.dim(),
            Payload::Labeled {
                members: cov
                    .members()
                    .iter()
                    .map(|(label, m)| LabeledOut {
                        label: label.clone(),
                        boxes: boxes_out(m),
                    })
                    .collect(),
            },
        ),
        Document::KkmCover(cov) => (
            cov.dim(),
            Payload::Vertices {
                members: cov
                    .members()
                    .map(|(v, m)| VertexOut {
                        vertex: v.label(),
                        boxes: boxes_out(m),
                    })
                    .collect(),
            },
        ),
    };
    DocumentOut {
        format_version: FORMAT_VERSION,
        dimension,
        flavor: doc.flavor(),
        payload,
    }
}

/// Canonical text of a document; parsing it gives back an equal value.
pub fn serialize_document(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(&document_out(doc)).expect("documents serialize");
    text.push('\n');
    text
}

/// The document as a JSON value, for embedding in reports.
pub fn document_value(doc: &Document) -> Value {
    serde_json::to_value(document_out(doc)).expect("documents serialize")
}
