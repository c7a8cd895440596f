//! Maximum depth of an arrangement of box unions.
//!
//! The endpoint grid of the family and the region cuts space into atomic
//! cells. Every cell boundary is an endpoint of some box, so membership of a
//! cell's representative in a member decides membership of the whole cell.
//! Counting members per cell therefore yields the exact maximum multiplicity
//! together with a witness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::aabox::AxisBox;
use crate::geometry::grid::{self, AtomGrid};
use crate::geometry::point::Point;
use crate::geometry::union::BoxUnion;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub max_multiplicity: usize,
    pub witness: Point,
    pub witness_cell: AxisBox,
}

/// Depth result plus the number of atomic cells attaining the maximum.
#[derive(Debug, Clone)]
pub struct DepthProfile {
    pub result: DepthResult,
    pub cells_at_max: usize,
    pub cells_total: usize,
    /// Measure of the set of points attaining the maximum.
    pub measure_at_max: Scalar,
}

pub fn depth_arrangement(family: &[BoxUnion], region: &AxisBox) -> Result<DepthResult> {
    depth_profile(family, region).map(|p| p.result)
}

pub fn depth_profile(family: &[BoxUnion], region: &AxisBox) -> Result<DepthProfile> {
    let dim = region.dim();
    for member in family {
        if member.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: member.dim(),
            });
        }
    }
    if region.measure() == scalar::zero() {
        return Err(Error::ZeroMeasureRegion);
    }

    // Clip members to the region first so the grid stays inside it.
    let clipped: Vec<Vec<AxisBox>> = family
        .iter()
        .map(|m| m.boxes().iter().filter_map(|b| b.intersect(region)).collect())
        .collect();
    if family.is_empty() {
        return Ok(DepthProfile {
            result: DepthResult {
                max_multiplicity: 0,
                witness: region.center(),
                witness_cell: region.clone(),
            },
            cells_at_max: 1,
            cells_total: 1,
            measure_at_max: region.measure(),
        });
    }

    let grid = AtomGrid::new(dim, clipped.iter().flatten().chain(std::iter::once(region)));
    let shape = grid.shape();
    let strides = grid::strides(&shape);
    let len: usize = shape.iter().product();
    let mut counts = vec![0u32; len];
    let mut stamp = vec![0u32; len];
    for (k, boxes) in clipped.iter().enumerate() {
        let tag = k as u32 + 1;
        for b in boxes {
            grid::for_each_cell(&strides, &grid.box_ranges(b), |i| {
                if stamp[i] != tag {
                    stamp[i] = tag;
                    counts[i] += 1;
                }
            });
        }
    }

    // Ties go to the cell whose lower-corner vector is lexicographically
    // least; on each axis a gap (e, e') precedes the point {e}.
    let atoms_of = |flat: usize| -> Vec<usize> {
        let mut rest = flat;
        strides
            .iter()
            .map(|s| {
                let a = rest / s;
                rest %= s;
                a
            })
            .collect()
    };
    let tie_key = |flat: usize| -> Vec<usize> {
        atoms_of(flat)
            .into_iter()
            .map(|a| if a % 2 == 1 { a - 1 } else { a + 1 })
            .collect()
    };
    let region_ranges = grid.box_ranges(region);
    let mut best: Option<(u32, usize)> = None;
    let mut at_max = 0usize;
    let mut total = 0usize;
    grid::for_each_cell(&strides, &region_ranges, |i| {
        total += 1;
        match best {
            Some((c, _)) if counts[i] < c => {}
            Some((c, b)) if counts[i] == c => {
                at_max += 1;
                if tie_key(i) < tie_key(b) {
                    best = Some((c, i));
                }
            }
            _ => {
                best = Some((counts[i], i));
                at_max = 1;
            }
        }
    });
    let (count, flat) = best.expect("region has at least one cell");
    let mut measure_at_max = scalar::zero();
    grid::for_each_cell(&strides, &region_ranges, |i| {
        if counts[i] == count {
            let atoms = atoms_of(i);
            if atoms.iter().all(|a| a % 2 == 1) {
                measure_at_max += atoms
                    .iter()
                    .enumerate()
                    .map(|(axis, &a)| grid.atom_interval(axis, a, a).length())
                    .product::<Scalar>();
            }
        }
    });
    let atoms = atoms_of(flat);
    let witness = Point::new(
        atoms
            .iter()
            .enumerate()
            .map(|(axis, &a)| grid.representative(axis, a))
            .collect(),
    )?;
    let witness_cell = AxisBox::new(
        atoms
            .iter()
            .enumerate()
            .map(|(axis, &a)| grid.atom_interval(axis, a, a))
            .collect(),
    )?;
    Ok(DepthProfile {
        result: DepthResult {
            max_multiplicity: count as usize,
            witness,
            witness_cell,
        },
        cells_at_max: at_max,
        cells_total: total,
        measure_at_max,
    })
}

/// `Σ m(A ∩ S) / m(S)`, the quantity whose ceiling the depth must reach.
pub fn pigeonhole_ratio(family: &[BoxUnion], region: &AxisBox) -> Result<Scalar> {
    let region_measure = region.measure();
    if region_measure == scalar::zero() {
        return Err(Error::ZeroMeasureRegion);
    }
    let mut total = scalar::zero();
    for member in family {
        total += member.intersect_box(region)?.measure();
    }
    Ok(total / region_measure)
}
