use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::aabox::AxisBox;
use crate::geometry::grid::{self, AtomGrid, CellMask};
use crate::geometry::point::Point;
use crate::scalar::{self, Scalar};

/// A finite union of axis-aligned boxes.
///
/// Input boxes may overlap. [`BoxUnion::canonical`] rewrites the union as a
/// pairwise-disjoint list that depends only on the underlying point set, so
/// two unions denote the same set iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxUnion {
    #[serde(skip)]
    dim: usize,
    boxes: Vec<AxisBox>,
}

impl BoxUnion {
    pub fn new(dim: usize, boxes: Vec<AxisBox>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for b in &boxes {
            b.check_dim(dim)?;
        }
        Ok(Self { dim, boxes })
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, boxes: Vec::new() }
    }

    pub fn from_box(b: AxisBox) -> Self {
        Self {
            dim: b.dim(),
            boxes: vec![b],
        }
    }

    pub fn unit_cube(dim: usize) -> Self {
        Self::from_box(AxisBox::unit_cube(dim))
    }

    pub fn from_points<'a>(dim: usize, points: impl IntoIterator<Item = &'a Point>) -> Result<Self> {
        let boxes = points.into_iter().map(AxisBox::singleton).collect();
        Self::new(dim, boxes)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boxes(&self) -> &[AxisBox] {
        &self.boxes
    }

    pub fn into_boxes(self) -> Vec<AxisBox> {
        self.boxes
    }

    /// Boxes are never empty, so the union is empty iff it lists no box.
    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    fn check_same_dim(&self, other: &BoxUnion) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    fn grid_with(&self, other: &BoxUnion) -> AtomGrid {
        AtomGrid::new(self.dim, self.boxes.iter().chain(&other.boxes))
    }

    fn from_mask(dim: usize, grid: &AtomGrid, mask: &CellMask) -> Self {
        Self {
            dim,
            boxes: grid::slabs_to_boxes(grid, &mask.slabs()),
        }
    }

    pub fn canonical(&self) -> BoxUnion {
        let grid = AtomGrid::new(self.dim, &self.boxes);
        let mask = CellMask::painted(&grid, &self.boxes);
        Self::from_mask(self.dim, &grid, &mask)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Exact Lebesgue measure. Endpoint flags do not matter.
    pub fn measure(&self) -> Scalar {
        if self.boxes.is_empty() {
            return scalar::zero();
        }
        let grid = AtomGrid::new(self.dim, &self.boxes);
        let mask = CellMask::painted(&grid, &self.boxes);
        grid::slabs_measure(&grid, &mask.slabs(), 0)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.boxes.iter().any(|b| b.contains(p))
    }

    pub fn intersects_box(&self, b: &AxisBox) -> bool {
        self.boxes.iter().any(|own| own.intersects(b))
    }

    pub fn union(&self, other: &BoxUnion) -> Result<BoxUnion> {
        self.check_same_dim(other)?;
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().cloned());
        Ok(BoxUnion { dim: self.dim, boxes }.canonical())
    }

    pub fn union_all<'a>(dim: usize, parts: impl IntoIterator<Item = &'a BoxUnion>) -> Result<BoxUnion> {
        let mut boxes = Vec::new();
        for part in parts {
            if part.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: part.dim,
                });
            }
            boxes.extend(part.boxes.iter().cloned());
        }
        Ok(BoxUnion { dim, boxes }.canonical())
    }

    pub fn intersection(&self, other: &BoxUnion) -> Result<BoxUnion> {
        self.check_same_dim(other)?;
        let grid = self.grid_with(other);
        let mut mask = CellMask::painted(&grid, &self.boxes);
        mask.and(&CellMask::painted(&grid, &other.boxes));
        Ok(Self::from_mask(self.dim, &grid, &mask))
    }

    pub fn intersect_box(&self, b: &AxisBox) -> Result<BoxUnion> {
        b.check_dim(self.dim)?;
        let boxes = self.boxes.iter().filter_map(|own| own.intersect(b)).collect();
        Ok(BoxUnion { dim: self.dim, boxes }.canonical())
    }

    /// Exact set difference `self \ other`, canonical.
    pub fn difference(&self, other: &BoxUnion) -> Result<BoxUnion> {
        self.check_same_dim(other)?;
        let grid = self.grid_with(other);
        let mut mask = CellMask::painted(&grid, &self.boxes);
        mask.and_not(&CellMask::painted(&grid, &other.boxes));
        Ok(Self::from_mask(self.dim, &grid, &mask))
    }

    pub fn is_subset_of(&self, other: &BoxUnion) -> Result<bool> {
        self.check_same_dim(other)?;
        let grid = self.grid_with(other);
        let mut mask = CellMask::painted(&grid, &self.boxes);
        mask.and_not(&CellMask::painted(&grid, &other.boxes));
        Ok(!mask.any())
    }

    pub fn intersects(&self, other: &BoxUnion) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(self.boxes.iter().any(|a| other.boxes.iter().any(|b| a.intersects(b))))
    }

    pub fn set_eq(&self, other: &BoxUnion) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(self.canonical() == other.canonical())
    }

    /// Minkowski sum with a single box, computed box by box and then
    /// canonicalized.
    pub fn minkowski_sum_box(&self, b: &AxisBox) -> Result<BoxUnion> {
        b.check_dim(self.dim)?;
        let boxes = self
            .boxes
            .iter()
            .map(|own| own.minkowski_sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(BoxUnion { dim: self.dim, boxes }.canonical())
    }

    /// Whether the projection of the union onto `axis` contains `value`.
    pub fn projection_contains(&self, axis: usize, value: &Scalar) -> bool {
        self.boxes.iter().any(|b| b.interval(axis).contains(value))
    }

    /// Some point of the set, chosen deterministically.
    pub fn sample_point(&self) -> Option<Point> {
        self.boxes.first().map(AxisBox::center)
    }
}

impl fmt::Display for BoxUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boxes.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, b) in self.boxes.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Exact Lebesgue measure of a box union.
pub fn boxunion_measure(u: &BoxUnion) -> Scalar {
    u.measure()
}

pub fn boxunion_difference(a: &BoxUnion, b: &BoxUnion) -> Result<BoxUnion> {
    a.difference(b)
}

/// Minkowski sum of a box union with an open box of positive side lengths.
/// The result is open.
pub fn minkowski_sum_open_box(u: &BoxUnion, b: &AxisBox) -> Result<BoxUnion> {
    b.check_dim(u.dim())?;
    if b.intervals().iter().any(|iv| !iv.is_open() || iv.is_degenerate()) {
        return Err(Error::InvalidInterval(format!(
            "{b} is not an open box with positive side lengths"
        )));
    }
    u.minkowski_sum_box(b)
}
