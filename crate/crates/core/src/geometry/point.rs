use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::face::{Face, FaceTag};
use crate::scalar::{self, Scalar};

/// A point of R^d with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Point(#[serde(with = "crate::scalar::serde_text_vec")] Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(coords))
    }

    /// Convenience constructor from `(num, den)` pairs.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Self(coords.iter().map(|&(n, d)| scalar::rat(n, d)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn coord(&self, axis: usize) -> &Scalar {
        &self.0[axis]
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn in_unit_cube(&self) -> bool {
        self.0.iter().all(|c| *c >= scalar::zero() && *c <= scalar::one())
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

    fn require_in_cube(&self) -> Result<()> {
        if self.in_unit_cube() {
            Ok(())
        } else {
            Err(Error::OutsideDomain(self.to_string(), "[0,1]^d"))
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `max_i |a_i - b_i|`, exactly.
pub fn linf_distance(a: &Point, b: &Point) -> Result<Scalar> {
    b.check_dim(a.dim())?;
    Ok(a.0
        .iter()
        .zip(&b.0)
        .map(|(x, y)| scalar::abs(&(x - y)))
        .max()
        .unwrap_or_else(scalar::zero))
}

/// True iff some coordinate takes the value 0 on one point and 1 on the other.
pub fn on_opposite_faces(a: &Point, b: &Point) -> Result<bool> {
    b.check_dim(a.dim())?;
    a.require_in_cube()?;
    b.require_in_cube()?;
    let zero = scalar::zero();
    let one = scalar::one();
    Ok(a.0
        .iter()
        .zip(&b.0)
        .any(|(x, y)| (*x == zero && *y == one) || (*x == one && *y == zero)))
}

/// The intersection of all faces of `[0,1]^d` containing `x`.
pub fn smallest_face(x: &Point) -> Result<Face> {
    x.require_in_cube()?;
    let zero = scalar::zero();
    let one = scalar::one();
    let tags =
        x.0.iter()
            .map(|c| {
                if *c == zero {
                    FaceTag::Zero
                } else if *c == one {
                    FaceTag::One
                } else {
                    FaceTag::Free
                }
            })
            .collect();
    Face::new(tags)
}

/// Coordinatewise truncation of the extended cube `[-eps, 1+eps]^d` onto
/// `[0,1]^d`.
pub fn clamp_map(y: &Point, eps: &Scalar) -> Result<Point> {
    if *eps < scalar::zero() {
        return Err(Error::InvalidDomain(format!("eps = {eps} is negative")));
    }
    let lo = -eps.clone();
    let hi = scalar::one() + eps;
    if y.0.iter().any(|c| *c < lo || *c > hi) {
        return Err(Error::OutsideDomain(y.to_string(), "[-eps,1+eps]^d"));
    }
    Ok(Point(y.0.iter().map(clamp_unit).collect()))
}

pub(crate) fn clamp_unit(c: &Scalar) -> Scalar {
    if *c <= scalar::zero() {
        scalar::zero()
    } else if *c >= scalar::one() {
        scalar::one()
    } else {
        c.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn p(coords: &[(i64, i64)]) -> Point {
        Point::from_ratios(coords)
    }

    #[test]
    fn linf_distance_examples() {
        assert_eq!(
            linf_distance(&p(&[(0, 1), (0, 1)]), &p(&[(1, 1), (1, 1)])).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            linf_distance(&p(&[(0, 1), (3, 10)]), &p(&[(0, 1), (3, 10)])).unwrap(),
            rat(0, 1)
        );
        assert_eq!(
            linf_distance(&p(&[(0, 1), (3, 10)]), &p(&[(1, 1), (7, 10)])).unwrap(),
            rat(1, 1)
        );
        assert!(matches!(
            linf_distance(&p(&[(0, 1)]), &p(&[(0, 1), (1, 1)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn opposite_face_examples() {
        assert!(on_opposite_faces(&p(&[(0, 1), (3, 10)]), &p(&[(1, 1), (7, 10)])).unwrap());
        assert!(!on_opposite_faces(&p(&[(1, 2), (1, 2)]), &p(&[(1, 1), (1, 1)])).unwrap());
        assert!(on_opposite_faces(&p(&[(0, 1), (0, 1)]), &p(&[(0, 1), (1, 1)])).unwrap());
        assert!(on_opposite_faces(&p(&[(2, 1)]), &p(&[(0, 1)])).is_err());
    }

    #[test]
    fn smallest_face_examples() {
        use FaceTag::*;
        assert_eq!(smallest_face(&p(&[(0, 1), (1, 2)])).unwrap().tags(), &[Zero, Free]);
        assert_eq!(smallest_face(&p(&[(1, 1), (1, 1)])).unwrap().tags(), &[One, One]);
        assert_eq!(smallest_face(&p(&[(3, 10), (7, 10)])).unwrap().tags(), &[Free, Free]);
        assert!(smallest_face(&p(&[(-1, 10)])).is_err());
    }

    #[test]
    fn clamp_examples() {
        assert_eq!(
            clamp_map(&p(&[(-2, 10), (3, 10)]), &rat(1, 4)).unwrap(),
            p(&[(0, 1), (3, 10)])
        );
        assert_eq!(
            clamp_map(&p(&[(4, 10), (6, 10)]), &rat(1, 10)).unwrap(),
            p(&[(4, 10), (6, 10)])
        );
        assert_eq!(
            clamp_map(&p(&[(11, 10), (-5, 100)]), &rat(1, 5)).unwrap(),
            p(&[(1, 1), (0, 1)])
        );
        assert!(clamp_map(&p(&[(-3, 10)]), &rat(1, 4)).is_err());
    }

    fn coord() -> impl Strategy<Value = Scalar> {
        (-40i64..=40, 1i64..=20).prop_map(|(n, d)| rat(n, d))
    }

    fn point(dim: usize) -> impl Strategy<Value = Point> {
        proptest::collection::vec(coord(), dim).prop_map(|c| Point::new(c).unwrap())
    }

    proptest! {
        #[test]
        fn linf_is_a_metric((a, b, c) in (1usize..4).prop_flat_map(|d| (point(d), point(d), point(d)))) {
            let ab = linf_distance(&a, &b).unwrap();
            prop_assert_eq!(&ab, &linf_distance(&b, &a).unwrap());
            prop_assert_eq!(linf_distance(&a, &a).unwrap(), scalar::zero());
            prop_assert_eq!(ab == scalar::zero(), a == b);
            let ac = linf_distance(&a, &c).unwrap();
            let cb = linf_distance(&c, &b).unwrap();
            prop_assert!(ab <= ac + cb);
        }

        #[test]
        fn clamp_is_one_lipschitz(
            (a, b) in (1usize..4).prop_flat_map(|d| {
                let c = (-1i64..=21, 1i64..=1).prop_map(|(n, _)| rat(n, 20));
                (proptest::collection::vec(c.clone(), d), proptest::collection::vec(c, d))
            })
        ) {
            let eps = rat(1, 20);
            let a = Point::new(a).unwrap();
            let b = Point::new(b).unwrap();
            let fa = clamp_map(&a, &eps).unwrap();
            let fb = clamp_map(&b, &eps).unwrap();
            prop_assert!(linf_distance(&fa, &fb).unwrap() <= linf_distance(&a, &b).unwrap());
        }
    }
}
