use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::interval::Interval;
use crate::geometry::point::Point;
use crate::scalar::{self, Scalar};

/// An axis-aligned box: a product of [`Interval`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AxisBox {
    intervals: Vec<Interval>,
}

impl AxisBox {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { intervals })
    }

    pub fn unit_cube(dim: usize) -> Self {
        Self {
            intervals: vec![Interval::unit(); dim],
        }
    }

    /// `[-pad, 1+pad]^d`.
    pub fn padded_cube(dim: usize, pad: &Scalar) -> Self {
        let iv = Interval::closed(-pad.clone(), scalar::one() + pad).expect("padding must be greater than -1/2");
        Self {
            intervals: vec![iv; dim],
        }
    }

    /// The degenerate box `{p}`.
    pub fn singleton(p: &Point) -> Self {
        Self {
            intervals: p.coords().iter().cloned().map(Interval::point).collect(),
        }
    }

    /// The cube of half-width `radius` about `center`; `closed` selects the
    /// closed ball, otherwise the open one.
    pub fn cube_around(center: &Point, radius: &Scalar, closed: bool) -> Result<Self> {
        let intervals = center
            .coords()
            .iter()
            .map(|c| Interval::new(c - radius, c + radius, closed, closed))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { intervals })
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, axis: usize) -> &Interval {
        &self.intervals[axis]
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }

    pub fn measure(&self) -> Scalar {
        self.intervals.iter().fold(scalar::one(), |acc, iv| acc * iv.length())
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim() && self.intervals.iter().zip(p.coords()).all(|(iv, c)| iv.contains(c))
    }

    pub fn intersect(&self, other: &AxisBox) -> Option<AxisBox> {
        if other.dim() != self.dim() {
            return None;
        }
        let intervals = self
            .intervals
            .iter()
            .zip(&other.intervals)
            .map(|(a, b)| a.intersect(b))
            .collect::<Option<Vec<_>>>()?;
        Some(AxisBox { intervals })
    }

    pub fn intersects(&self, other: &AxisBox) -> bool {
        other.dim() == self.dim()
            && self
                .intervals
                .iter()
                .zip(&other.intervals)
                .all(|(a, b)| a.intersects(b))
    }

    pub fn is_subset_of(&self, other: &AxisBox) -> bool {
        other.dim() == self.dim()
            && self
                .intervals
                .iter()
                .zip(&other.intervals)
                .all(|(a, b)| a.is_subset_of(b))
    }

    pub fn minkowski_sum(&self, other: &AxisBox) -> Result<AxisBox> {
        other.check_dim(self.dim())?;
        Ok(AxisBox {
            intervals: self
                .intervals
                .iter()
                .zip(&other.intervals)
                .map(|(a, b)| a.minkowski_sum(b))
                .collect(),
        })
    }

    /// Midpoint of every interval; lies in the box.
    pub fn center(&self) -> Point {
        Point::new(self.intervals.iter().map(Interval::midpoint).collect()).expect("box has dimension >= 1")
    }

    /// Componentwise-least point of the box closure.
    pub fn lo_corner(&self) -> Point {
        Point::new(self.intervals.iter().map(|iv| iv.lo().clone()).collect()).expect("box has dimension >= 1")
    }
}

impl fmt::Display for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}
