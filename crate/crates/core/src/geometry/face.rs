use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::aabox::AxisBox;
use crate::geometry::interval::Interval;
use crate::geometry::point::Point;
use crate::scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceTag {
    Zero,
    One,
    Free,
}

/// A face of `[0,1]^d`: each coordinate is pinned to 0, pinned to 1, or free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    tags: Vec<FaceTag>,
}

impl Face {
    pub fn new(tags: Vec<FaceTag>) -> Result<Self> {
        if tags.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { tags })
    }

    pub fn tags(&self) -> &[FaceTag] {
        &self.tags
    }

    pub fn dim(&self) -> usize {
        self.tags.len()
    }

    pub fn face_dimension(&self) -> usize {
        self.tags.iter().filter(|t| **t == FaceTag::Free).count()
    }

    /// All `3^d` faces, ordered with tag Zero < One < Free, first axis most
    /// significant.
    pub fn all(dim: usize) -> Vec<Face> {
        let mut faces = vec![Vec::new()];
        for _ in 0..dim {
            faces = faces
                .into_iter()
                .flat_map(|prefix: Vec<FaceTag>| {
                    [FaceTag::Zero, FaceTag::One, FaceTag::Free].map(|t| {
                        let mut next = prefix.clone();
                        next.push(t);
                        next
                    })
                })
                .collect();
        }
        faces.into_iter().map(|tags| Face { tags }).collect()
    }

    /// The face as a closed subset of the cube.
    pub fn closed_box(&self) -> AxisBox {
        self.to_box(Interval::unit())
    }

    /// The relative interior: free coordinates range over `(0,1)`.
    pub fn relative_interior(&self) -> AxisBox {
        self.to_box(Interval::open(scalar::zero(), scalar::one()).expect("0 < 1"))
    }

    fn to_box(&self, free: Interval) -> AxisBox {
        let intervals = self
            .tags
            .iter()
            .map(|t| match t {
                FaceTag::Zero => Interval::point(scalar::zero()),
                FaceTag::One => Interval::point(scalar::one()),
                FaceTag::Free => free.clone(),
            })
            .collect();
        AxisBox::new(intervals).expect("dimension >= 1")
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.closed_box().contains(p)
    }

    /// Cube vertices lying on the face, in lexicographic order.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = vec![Vec::new()];
        for t in &self.tags {
            let choices: &[bool] = match t {
                FaceTag::Zero => &[false],
                FaceTag::One => &[true],
                FaceTag::Free => &[false, true],
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<bool>| {
                    choices.iter().map(move |&c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(Vertex).collect()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tags {
            let c = match t {
                FaceTag::Zero => '0',
                FaceTag::One => '1',
                FaceTag::Free => '*',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A vertex of `{0,1}^d`. The derived order is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub Vec<bool>);

impl Vertex {
    /// All `2^d` vertices in lexicographic order.
    pub fn all(dim: usize) -> Vec<Vertex> {
        Face::new(vec![FaceTag::Free; dim])
            .map(|f| f.vertices())
            .unwrap_or_default()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn hamming_weight(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    pub fn to_point(&self) -> Point {
        Point::new(
            self.0
                .iter()
                .map(|&b| if b { scalar::one() } else { scalar::zero() })
                .collect(),
        )
        .expect("dimension >= 1")
    }

    pub fn as_face(&self) -> Face {
        Face {
            tags: self
                .0
                .iter()
                .map(|&b| if b { FaceTag::One } else { FaceTag::Zero })
                .collect(),
        }
    }

    /// Bit-string label such as `"01"`.
    pub fn label(&self) -> String {
        self.0.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn parse(label: &str) -> Option<Vertex> {
        label
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .filter(|bits| !bits.is_empty())
            .map(Vertex)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
