use std::collections::HashSet;

use serde::Serialize;

use crate::coloring::regions::RegionColoring;
use crate::coloring::report::{ValidationReport, Violation};
use crate::error::{Error, Result};
use crate::geometry::{AxisBox, BoxUnion, Face, Vertex};
use crate::scalar;

/// A finite family of box unions, meant to cover the cube with no member
/// touching two opposite faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LebesgueCover {
    dim: usize,
    members: Vec<(String, BoxUnion)>,
}

impl LebesgueCover {
    pub fn new(dim: usize, members: Vec<(String, BoxUnion)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut labels = HashSet::new();
        for (label, m) in &members {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim(),
                });
            }
            if !labels.insert(label.clone()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[(String, BoxUnion)] {
        &self.members
    }
}

/// One box union per vertex of the cube, stored in lexicographic vertex
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KkmCover {
    dim: usize,
    members: Vec<BoxUnion>,
}

impl KkmCover {
    /// Every vertex must appear exactly once.
    pub fn new(dim: usize, members: Vec<(Vertex, BoxUnion)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if dim > 20 {
            return Err(Error::DimensionOutOfRange(dim, "1..=20"));
        }
        let mut slots: Vec<Option<BoxUnion>> = vec![None; 1 << dim];
        for (v, m) in members {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
            if m.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim(),
                });
            }
            let slot = &mut slots[vertex_index(&v)];
            if slot.is_some() {
                return Err(Error::DuplicateLabel(v.label()));
            }
            *slot = Some(m);
        }
        let members = slots
            .into_iter()
            .zip(Vertex::all(dim))
            .map(|(m, v)| m.ok_or_else(|| Error::InvalidDomain(format!("vertex {} has no member", v.label()))))
            .collect::<Result<_>>()?;
        Ok(Self { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn member(&self, v: &Vertex) -> &BoxUnion {
        &self.members[vertex_index(v)]
    }

    /// `(vertex, member)` pairs in lexicographic vertex order.
    pub fn members(&self) -> impl Iterator<Item = (Vertex, &BoxUnion)> {
        Vertex::all(self.dim).into_iter().zip(&self.members)
    }
}

fn vertex_index(v: &Vertex) -> usize {
    v.0.iter().fold(0, |acc, &b| 2 * acc + usize::from(b))
}

pub fn validate_lebesgue_cover(cov: &LebesgueCover) -> ValidationReport {
    let mut report = ValidationReport::new();
    let cube = AxisBox::unit_cube(cov.dim);
    let (lo, hi) = (scalar::zero(), scalar::one());
    for (label, m) in &cov.members {
        let inside = m.intersect_box(&cube).expect("dimension checked");
        for axis in 0..cov.dim {
            if inside.projection_contains(axis, &lo) && inside.projection_contains(axis, &hi) {
                report.push(Violation::MemberSpansAxis {
                    member: label.clone(),
                    axis,
                });
            }
        }
    }
    if let Some(witness) = lebesgue_gap(cov) {
        report.push(Violation::Uncovered { face: None, witness });
    }
    report
}

fn lebesgue_gap(cov: &LebesgueCover) -> Option<crate::geometry::Point> {
    let all = BoxUnion::union_all(cov.dim, cov.members.iter().map(|(_, m)| m)).expect("dimension checked");
    BoxUnion::unit_cube(cov.dim)
        .difference(&all)
        .expect("dimension checked")
        .canonical()
        .sample_point()
}

pub fn validate_kkm_cover(cov: &KkmCover) -> ValidationReport {
    let mut report = ValidationReport::new();
    for face in Face::all(cov.dim) {
        let members = face
            .vertices()
            .into_iter()
            .map(|v| cov.member(&v).clone())
            .collect::<Vec<_>>();
        let all = BoxUnion::union_all(cov.dim, &members).expect("dimension checked");
        let missing = BoxUnion::from_box(face.closed_box())
            .difference(&all)
            .expect("dimension checked")
            .canonical();
        if let Some(witness) = missing.sample_point() {
            report.push(Violation::Uncovered {
                face: Some(face.to_string()),
                witness,
            });
        }
    }
    report
}

/// Colors each point of the cube by the first member containing it.
pub fn lebesgue_to_coloring(cov: &LebesgueCover) -> Result<RegionColoring> {
    if let Some(w) = lebesgue_gap(cov) {
        return Err(Error::NotACover(w.to_string()));
    }
    let cube = AxisBox::unit_cube(cov.dim);
    let mut claimed = BoxUnion::empty(cov.dim);
    let mut classes = Vec::new();
    for (label, m) in &cov.members {
        let class = m.intersect_box(&cube)?.difference(&claimed)?.canonical();
        claimed = claimed.union(m)?;
        if !class.is_empty() {
            classes.push((label.clone(), class));
        }
    }
    RegionColoring::new(cov.dim, classes)
}

/// Colors each point `x` by the lexicographically least vertex `v` of its
/// smallest face with `x` in `member(v)`.
pub fn kkm_to_coloring(cov: &KkmCover) -> Result<RegionColoring> {
    let dim = cov.dim;
    let mut parts: Vec<Vec<AxisBox>> = vec![Vec::new(); 1 << dim];
    for face in Face::all(dim) {
        let mut rest = BoxUnion::from_box(face.relative_interior());
        for v in face.vertices() {
            let piece = rest.intersection(cov.member(&v))?;
            if piece.is_empty() {
                continue;
            }
            rest = rest.difference(&piece)?;
            parts[vertex_index(&v)].extend(piece.into_boxes());
        }
        if let Some(w) = rest.canonical().sample_point() {
            return Err(Error::FaceCoverage {
                face: face.to_string(),
                witness: w.to_string(),
            });
        }
    }
    let classes = Vertex::all(dim)
        .into_iter()
        .zip(parts)
        .filter(|(_, boxes)| !boxes.is_empty())
        .map(|(v, boxes)| Ok((v.label(), BoxUnion::new(dim, boxes)?)))
        .collect::<Result<Vec<_>>>()?;
    RegionColoring::new(dim, classes)
}
