use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::aabox::AxisBox;
use crate::geometry::point::Point;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Openness {
    Open,
    Closed,
}

impl Openness {
    pub fn is_closed(self) -> bool {
        self == Openness::Closed
    }
}

/// An l-infinity ball, which is an axis-aligned cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSpec {
    center: Point,
    radius: Scalar,
    openness: Openness,
}

impl BallSpec {
    pub fn new(center: Point, radius: Scalar, openness: Openness) -> Result<Self> {
        if radius <= scalar::zero() {
            return Err(Error::InvalidDomain(format!("ball radius {radius} must be positive")));
        }
        Ok(Self {
            center,
            radius,
            openness,
        })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> &Scalar {
        &self.radius
    }

    pub fn openness(&self) -> Openness {
        self.openness
    }

    pub fn to_box(&self) -> AxisBox {
        AxisBox::cube_around(&self.center, &self.radius, self.openness.is_closed())
            .expect("positive radius gives a valid box")
    }

    /// The ball of the same radius and openness centered at the origin.
    pub fn at_origin(dim: usize, radius: &Scalar, openness: Openness) -> Result<AxisBox> {
        let origin = Point::new(vec![scalar::zero(); dim])?;
        Ok(Self::new(origin, radius.clone(), openness)?.to_box())
    }
}
