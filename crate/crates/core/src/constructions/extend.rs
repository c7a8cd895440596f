use serde::Serialize;

use crate::coloring::{validate_slkkm_regions, RegionColoring, Violation};
use crate::error::{Error, Result};
use crate::geometry::{
    check_partition, minkowski_sum_open_box, oriented_quadrant, AxisBox, BoxUnion, Interval, Orientation,
};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Serialize)]
pub struct ExtendedClass {
    pub label: String,
    /// Preimage of the base class under the clamp map, inside
    /// `[-eps, 1+eps]^d`.
    pub region: BoxUnion,
    pub orientation: Orientation,
}

/// A coloring of `[-eps, 1+eps]^d` obtained by clamping onto the cube and
/// reading off the base coloring.
#[derive(Debug, Clone, Serialize)]
pub struct ExtendedColoring {
    #[serde(skip)]
    base: RegionColoring,
    #[serde(with = "scalar::serde_text")]
    eps: Scalar,
    classes: Vec<ExtendedClass>,
}

impl ExtendedColoring {
    pub fn base(&self) -> &RegionColoring {
        &self.base
    }

    pub fn eps(&self) -> &Scalar {
        &self.eps
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn classes(&self) -> &[ExtendedClass] {
        &self.classes
    }

    pub fn extended_cube(&self) -> AxisBox {
        AxisBox::padded_cube(self.dim(), &self.eps)
    }

    /// `class + B_v` for the class at `index`.
    pub fn inflated(&self, index: usize) -> Result<BoxUnion> {
        let c = &self.classes[index];
        minkowski_sum_open_box(&c.region, &oriented_quadrant(&c.orientation, &self.eps)?)
    }

    /// The open product each class must stay in: `(0, 1+eps]` along a
    /// positive axis, `[-eps, 1)` along a negative one.
    pub fn oriented_half_space(&self, orientation: &Orientation) -> AxisBox {
        let lo = -self.eps.clone();
        let hi = scalar::one() + &self.eps;
        let intervals = (0..self.dim())
            .map(|i| {
                if orientation.is_positive(i) {
                    Interval::new(scalar::zero(), hi.clone(), false, true)
                } else {
                    Interval::new(lo.clone(), scalar::one(), true, false)
                }
                .expect("eps > 0")
            })
            .collect();
        AxisBox::new(intervals).expect("dimension >= 1")
    }

    /// Re-checks every structural property exactly. A failure is a defect.
    pub fn check_invariants(&self) -> Result<()> {
        let dim = self.dim();
        let cube = AxisBox::unit_cube(dim);
        let ext = self.extended_cube();
        let regions: Vec<BoxUnion> = self.classes.iter().map(|c| c.region.clone()).collect();
        if let Some(defect) = check_partition(&regions, &ext)? {
            return Err(Error::Assertion(format!(
                "extended classes do not partition the padded cube: {defect:?}"
            )));
        }
        for (k, c) in self.classes.iter().enumerate() {
            let base = self.base.class(&c.label).expect("labels are shared");
            if !c.region.intersect_box(&cube)?.set_eq(base)? {
                return Err(Error::Assertion(format!(
                    "class {:?} does not restrict to its base class",
                    c.label
                )));
            }
            let half = BoxUnion::from_box(self.oriented_half_space(&c.orientation));
            if !c.region.is_subset_of(&half)? {
                return Err(Error::Assertion(format!(
                    "class {:?} leaves its oriented half space",
                    c.label
                )));
            }
            if !self.inflated(k)?.is_subset_of(&BoxUnion::from_box(ext.clone()))? {
                return Err(Error::Assertion(format!(
                    "inflated class {:?} leaves the padded cube",
                    c.label
                )));
            }
        }
        Ok(())
    }
}

/// Clamp preimage of an interval of `[0,1]`: a closed end at 0 or 1 reaches
/// out to `-eps` or `1+eps`.
fn pull_back(iv: &Interval, eps: &Scalar) -> Interval {
    let zero = scalar::zero();
    let one = scalar::one();
    let (lo, lo_closed) = if iv.contains(&zero) {
        (-eps.clone(), true)
    } else {
        (iv.lo().clone(), iv.lo_closed())
    };
    let (hi, hi_closed) = if iv.contains(&one) {
        (one + eps, true)
    } else {
        (iv.hi().clone(), iv.hi_closed())
    };
    Interval::new(lo, hi, lo_closed, hi_closed).expect("pull-back only grows the interval")
}

pub fn extend_coloring(base: &RegionColoring, eps: &Scalar) -> Result<ExtendedColoring> {
    if *eps <= scalar::zero() {
        return Err(Error::InvalidDomain(format!("eps must be positive, got {eps}")));
    }
    let report = validate_slkkm_regions(base);
    if let Some(Violation::ClassSpansAxis { color, axis }) = report.violations.first() {
        return Err(Error::NotSlkkm(format!(
            "class {color:?} meets both faces of axis {axis}"
        )));
    }
    let dim = base.dim();
    let one = scalar::one();
    let classes = base
        .classes()
        .iter()
        .map(|c| {
            let boxes = c
                .region
                .boxes()
                .iter()
                .map(|b| AxisBox::new(b.intervals().iter().map(|iv| pull_back(iv, eps)).collect()))
                .collect::<Result<Vec<_>>>()?;
            // touching side 1 forces a positive sign; otherwise negative
            let orientation = Orientation::new((0..dim).map(|i| c.region.projection_contains(i, &one)).collect())?;
            Ok(ExtendedClass {
                label: c.label.clone(),
                region: BoxUnion::new(dim, boxes)?.canonical(),
                orientation,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtendedColoring {
        base: base.clone(),
        eps: eps.clone(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hamming_coloring, orthant_coloring};
    use crate::scalar::rat;

    #[test]
    fn segment_halves() {
        let base = orthant_coloring(1).unwrap();
        let ext = extend_coloring(&base, &rat(1, 4)).unwrap();
        let c0 = &ext.classes()[0];
        let c1 = &ext.classes()[1];
        assert_eq!(
            c0.region.boxes()[0].interval(0),
            &Interval::new(rat(-1, 4), rat(1, 2), true, false).unwrap()
        );
        assert_eq!(
            c1.region.boxes()[0].interval(0),
            &Interval::closed(rat(1, 2), rat(5, 4)).unwrap()
        );
        assert_eq!(c0.orientation.signs(), vec![-1]);
        assert_eq!(c1.orientation.signs(), vec![1]);
        ext.check_invariants().unwrap();
    }

    #[test]
    fn invariants_hold_for_constructions() {
        for eps in [rat(1, 10), rat(1, 2), rat(3, 1)] {
            for d in 1..=3 {
                extend_coloring(&orthant_coloring(d).unwrap(), &eps)
                    .unwrap()
                    .check_invariants()
                    .unwrap();
                extend_coloring(&hamming_coloring(d).unwrap(), &eps)
                    .unwrap()
                    .check_invariants()
                    .unwrap();
            }
        }
    }

    #[test]
    fn rejects_non_slkkm_bases() {
        let whole = RegionColoring::new(1, vec![("a".into(), BoxUnion::unit_cube(1))]).unwrap();
        assert!(matches!(extend_coloring(&whole, &rat(1, 4)), Err(Error::NotSlkkm(_))));
        let base = orthant_coloring(1).unwrap();
        assert!(extend_coloring(&base, &rat(0, 1)).is_err());
    }
}
