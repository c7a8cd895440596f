use std::collections::HashSet;

use serde::Serialize;

use crate::coloring::report::{ValidationReport, Violation};
use crate::error::{Error, Result};
use crate::geometry::{check_partition, AxisBox, BoxUnion, PartitionDefect, Point};
use crate::scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorClass {
    pub label: String,
    pub region: BoxUnion,
}

/// A coloring of the whole cube whose classes are finite box unions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionColoring {
    dim: usize,
    classes: Vec<ColorClass>,
}

impl RegionColoring {
    /// Canonicalizes every class and checks exactly that the classes are
    /// nonempty and partition `[0,1]^d`.
    pub fn new(dim: usize, classes: Vec<(String, BoxUnion)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut labels = HashSet::new();
        let mut out = Vec::with_capacity(classes.len());
        for (label, region) in classes {
            if region.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: region.dim(),
                });
            }
            if !labels.insert(label.clone()) {
                return Err(Error::DuplicateLabel(label));
            }
            let region = region.canonical();
            if region.is_empty() {
                return Err(Error::PartitionViolation(format!("class {label:?} is empty")));
            }
            out.push(ColorClass { label, region });
        }
        let regions: Vec<BoxUnion> = out.iter().map(|c| c.region.clone()).collect();
        if let Some(defect) = check_partition(&regions, &AxisBox::unit_cube(dim))? {
            let msg = match defect {
                PartitionDefect::Overlap { first, second, witness } => format!(
                    "classes {:?} and {:?} overlap at {witness}",
                    out[first].label, out[second].label
                ),
                PartitionDefect::Uncovered { witness } => format!("no class contains {witness}"),
                PartitionDefect::Outside { part, witness } => {
                    format!("class {:?} contains {witness} outside the cube", out[part].label)
                }
            };
            return Err(Error::PartitionViolation(msg));
        }
        Ok(Self { dim, classes: out })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn classes(&self) -> &[ColorClass] {
        &self.classes
    }

    pub fn color_classes(&self) -> Vec<ColorClass> {
        self.classes.clone()
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, label: &str) -> Option<&BoxUnion> {
        self.classes.iter().find(|c| c.label == label).map(|c| &c.region)
    }

    /// Label of the class containing `p`, if `p` is in the cube.
    pub fn color_at(&self, p: &Point) -> Option<&str> {
        self.classes
            .iter()
            .find(|c| c.region.contains(p))
            .map(|c| c.label.as_str())
    }
}

pub fn validate_slkkm_regions(c: &RegionColoring) -> ValidationReport {
    let mut report = ValidationReport::new();
    let (lo, hi) = (scalar::zero(), scalar::one());
    for class in &c.classes {
        for axis in 0..c.dim {
            if class.region.projection_contains(axis, &lo) && class.region.projection_contains(axis, &hi) {
                report.push(Violation::ClassSpansAxis {
                    color: class.label.clone(),
                    axis,
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Interval;
    use crate::scalar::rat;

    fn iv(lo: (i64, i64), hi: (i64, i64), lc: bool, hc: bool) -> Interval {
        Interval::new(rat(lo.0, lo.1), rat(hi.0, hi.1), lc, hc).unwrap()
    }

    #[test]
    fn whole_cube_fails_every_axis() {
        let c = RegionColoring::new(2, vec![("a".into(), BoxUnion::unit_cube(2))]).unwrap();
        assert_eq!(validate_slkkm_regions(&c).total, 2);
    }

    #[test]
    fn half_open_strip_passes_on_its_axis() {
        let left = AxisBox::new(vec![iv((0, 1), (1, 1), true, false), Interval::unit()]).unwrap();
        let right = AxisBox::new(vec![Interval::point(rat(1, 1)), Interval::unit()]).unwrap();
        let c = RegionColoring::new(
            2,
            vec![
                ("a".into(), BoxUnion::from_box(left)),
                ("b".into(), BoxUnion::from_box(right)),
            ],
        )
        .unwrap();
        let r = validate_slkkm_regions(&c);
        // each class spans axis 1 but not axis 0
        assert_eq!(r.total, 2);
        assert!(r
            .violations
            .iter()
            .all(|v| matches!(v, Violation::ClassSpansAxis { axis: 1, .. })));
    }

    #[test]
    fn rejects_non_partitions() {
        let a = BoxUnion::from_box(AxisBox::new(vec![iv((0, 1), (1, 2), true, true)]).unwrap());
        let b = BoxUnion::from_box(AxisBox::new(vec![iv((1, 2), (1, 1), true, true)]).unwrap());
        let overlap = RegionColoring::new(1, vec![("a".into(), a.clone()), ("b".into(), b)]);
        assert!(matches!(overlap, Err(Error::PartitionViolation(_))));
        let short = RegionColoring::new(1, vec![("a".into(), a.clone())]);
        assert!(matches!(short, Err(Error::PartitionViolation(_))));
        let dup = RegionColoring::new(1, vec![("a".into(), a.clone()), ("a".into(), a)]);
        assert!(matches!(dup, Err(Error::DuplicateLabel(_))));
        let empty = RegionColoring::new(
            1,
            vec![("a".into(), BoxUnion::unit_cube(1)), ("b".into(), BoxUnion::empty(1))],
        );
        assert!(matches!(empty, Err(Error::PartitionViolation(_))));
    }
}
