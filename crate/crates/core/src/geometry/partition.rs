use crate::error::{Error, Result};
use crate::geometry::aabox::AxisBox;
use crate::geometry::grid::{self, AtomGrid};
use crate::geometry::point::Point;
use crate::geometry::union::BoxUnion;

/// First defect found when checking that `parts` partition a domain box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionDefect {
    Overlap {
        first: usize,
        second: usize,
        witness: Point,
    },
    Uncovered {
        witness: Point,
    },
    Outside {
        part: usize,
        witness: Point,
    },
}

/// Checks exactly that the parts are pairwise disjoint, stay inside
/// `domain`, and cover it.
pub fn check_partition(parts: &[BoxUnion], domain: &AxisBox) -> Result<Option<PartitionDefect>> {
    let dim = domain.dim();
    for p in parts {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    let grid = AtomGrid::new(dim, parts.iter().flat_map(|p| p.boxes()).chain(std::iter::once(domain)));
    let shape = grid.shape();
    let strides = grid::strides(&shape);
    let len: usize = shape.iter().product();
    let mut owner = vec![0usize; len];
    let mut overlap: Option<(usize, usize, usize)> = None;
    let witness_at = |flat: usize| {
        let mut rest = flat;
        let coords = strides
            .iter()
            .enumerate()
            .map(|(axis, s)| {
                let a = rest / s;
                rest %= s;
                grid.representative(axis, a)
            })
            .collect();
        Point::new(coords).expect("dimension >= 1")
    };
    for (k, part) in parts.iter().enumerate() {
        for b in part.boxes() {
            grid::for_each_cell(&strides, &grid.box_ranges(b), |i| {
                if owner[i] == 0 {
                    owner[i] = k + 1;
                } else if owner[i] != k + 1 && overlap.is_none() {
                    overlap = Some((i, owner[i] - 1, k));
                }
            });
        }
    }
    if let Some((flat, first, second)) = overlap {
        return Ok(Some(PartitionDefect::Overlap {
            first,
            second,
            witness: witness_at(flat),
        }));
    }
    let mut inside = vec![false; len];
    grid::for_each_cell(&strides, &grid.box_ranges(domain), |i| inside[i] = true);
    for i in 0..len {
        match (inside[i], owner[i]) {
            (true, 0) => return Ok(Some(PartitionDefect::Uncovered { witness: witness_at(i) })),
            (false, k) if k > 0 => {
                return Ok(Some(PartitionDefect::Outside {
                    part: k - 1,
                    witness: witness_at(i),
                }))
            }
            _ => {}
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::interval::Interval;
    use crate::scalar::rat;

    fn seg(lo: (i64, i64), hi: (i64, i64), lc: bool, hc: bool) -> BoxUnion {
        BoxUnion::from_box(
            AxisBox::new(vec![Interval::new(rat(lo.0, lo.1), rat(hi.0, hi.1), lc, hc).unwrap()]).unwrap(),
        )
    }

    #[test]
    fn detects_each_defect() {
        let cube = AxisBox::unit_cube(1);
        let good = [seg((0, 1), (1, 2), true, false), seg((1, 2), (1, 1), true, true)];
        assert_eq!(check_partition(&good, &cube).unwrap(), None);

        let overlap = [seg((0, 1), (1, 2), true, true), seg((1, 2), (1, 1), true, true)];
        assert_eq!(
            check_partition(&overlap, &cube).unwrap(),
            Some(PartitionDefect::Overlap {
                first: 0,
                second: 1,
                witness: Point::from_ratios(&[(1, 2)])
            })
        );

        let gap = [seg((0, 1), (1, 2), true, false), seg((1, 2), (1, 1), false, true)];
        assert_eq!(
            check_partition(&gap, &cube).unwrap(),
            Some(PartitionDefect::Uncovered {
                witness: Point::from_ratios(&[(1, 2)])
            })
        );

        let spill = [seg((0, 1), (1, 2), true, false), seg((1, 2), (3, 2), true, true)];
        assert!(matches!(
            check_partition(&spill, &cube).unwrap(),
            Some(PartitionDefect::Outside { part: 1, .. })
        ));
    }
}
