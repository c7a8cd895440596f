use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::aabox::AxisBox;
use crate::geometry::interval::Interval;
use crate::scalar::{self, Scalar};

/// A sign vector in `{-1, +1}^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    positive: Vec<bool>,
}

impl Orientation {
    pub fn new(positive: Vec<bool>) -> Result<Self> {
        if positive.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { positive })
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        signs
            .iter()
            .map(|&s| match s {
                1 => Ok(true),
                -1 => Ok(false),
                other => Err(Error::InvalidDomain(format!("orientation sign {other}"))),
            })
            .collect::<Result<Vec<_>>>()
            .and_then(Self::new)
    }

    pub fn dim(&self) -> usize {
        self.positive.len()
    }

    pub fn is_positive(&self, axis: usize) -> bool {
        self.positive[axis]
    }

    pub fn signs(&self) -> Vec<i8> {
        self.positive.iter().map(|&p| if p { 1 } else { -1 }).collect()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &p) in self.positive.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if p { "+1" } else { "-1" })?;
        }
        Ok(())
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.signs().serialize(s)
    }
}

/// The open orthant of the `eps`-ball at the origin opposite to `v`:
/// `(-eps, 0)` on positive axes, `(0, eps)` on negative ones.
pub fn oriented_quadrant(v: &Orientation, eps: &Scalar) -> Result<AxisBox> {
    if *eps <= scalar::zero() {
        return Err(Error::InvalidDomain(format!("eps = {eps} must be positive")));
    }
    let intervals = v
        .positive
        .iter()
        .map(|&p| {
            if p {
                Interval::open(-eps.clone(), scalar::zero())
            } else {
                Interval::open(scalar::zero(), eps.clone())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    AxisBox::new(intervals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::Point;
    use crate::scalar::rat;

    #[test]
    fn quadrant_examples() {
        let q = rat(1, 4);
        let pp = oriented_quadrant(&Orientation::from_signs(&[1, 1]).unwrap(), &q).unwrap();
        let expected = Interval::open(rat(-1, 4), rat(0, 1)).unwrap();
        assert_eq!(pp.intervals(), &[expected.clone(), expected.clone()]);
        let mp = oriented_quadrant(&Orientation::from_signs(&[-1, 1]).unwrap(), &q).unwrap();
        assert_eq!(
            mp.intervals(),
            &[Interval::open(rat(0, 1), rat(1, 4)).unwrap(), expected]
        );
        assert!(oriented_quadrant(&Orientation::from_signs(&[1]).unwrap(), &rat(0, 1)).is_err());
    }

    #[test]
    fn quadrants_lie_in_the_open_ball() {
        let eps = rat(1, 3);
        let ball = AxisBox::cube_around(&Point::from_ratios(&[(0, 1); 3]), &eps, false).unwrap();
        for bits in 0..8u8 {
            let v = Orientation::new((0..3).map(|i| bits >> i & 1 == 1).collect()).unwrap();
            assert!(oriented_quadrant(&v, &eps).unwrap().is_subset_of(&ball));
        }
    }
}
