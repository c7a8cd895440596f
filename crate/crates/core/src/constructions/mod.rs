//! Explicit colorings of the cube and the transformers used in the proofs:
//! extension to a padded cube and the region coloring induced by a colored
//! proximate point set.

mod extend;
mod sperner;

pub use extend::{extend_coloring, ExtendedClass, ExtendedColoring};
pub use sperner::sperner_gamma;

use crate::coloring::RegionColoring;
use crate::error::{Error, Result};
use crate::geometry::{AxisBox, BoxUnion, Face, Interval, Point, Vertex};
use crate::scalar::{self, Scalar};

/// The `2^d` orthants around the center, each its own color. Lower halves
/// are `[0,1/2)`, upper halves `[1/2,1]`.
pub fn orthant_coloring(d: usize) -> Result<RegionColoring> {
    if !(1..=10).contains(&d) {
        return Err(Error::DimensionOutOfRange(d, "1..=10"));
    }
    let lower = Interval::new(scalar::zero(), scalar::half(), true, false)?;
    let upper = Interval::closed(scalar::half(), scalar::one())?;
    let classes = Vertex::all(d)
        .into_iter()
        .map(|v| {
            let b = AxisBox::new(
                v.0.iter()
                    .map(|&up| if up { upper.clone() } else { lower.clone() })
                    .collect(),
            )?;
            Ok((v.label(), BoxUnion::from_box(b)))
        })
        .collect::<Result<Vec<_>>>()?;
    RegionColoring::new(d, classes)
}

/// Even-weight vertices keep a private singleton color. Every other
/// relatively open face takes the lexicographically least odd-weight vertex
/// of its closure.
pub fn hamming_coloring(d: usize) -> Result<RegionColoring> {
    if !(1..=6).contains(&d) {
        return Err(Error::DimensionOutOfRange(d, "1..=6"));
    }
    let vertices = Vertex::all(d);
    let mut parts: Vec<Vec<AxisBox>> = vec![Vec::new(); vertices.len()];
    for face in Face::all(d) {
        let closure = face.vertices();
        let owner = if closure.len() == 1 {
            closure[0].clone()
        } else {
            closure
                .into_iter()
                .find(|v| v.hamming_weight() % 2 == 1)
                .expect("faces of positive dimension have odd vertices")
        };
        let slot = vertices.binary_search(&owner).expect("vertex of the cube");
        parts[slot].push(face.relative_interior());
    }
    let classes = vertices
        .into_iter()
        .zip(parts)
        .map(|(v, boxes)| Ok((v.label(), BoxUnion::new(d, boxes)?)))
        .collect::<Result<Vec<_>>>()?;
    RegionColoring::new(d, classes)
}

/// The unit square cut by half-open unit bricks `[j+s_k, j+1+s_k) x [k, k+1)`
/// with row shift `s_k = k*sigma mod 1`.
pub fn brick_coloring(sigma: &Scalar) -> Result<RegionColoring> {
    if *sigma <= scalar::zero() || *sigma >= scalar::one() {
        return Err(Error::InvalidDomain(format!(
            "brick shift must lie in (0,1), got {sigma}"
        )));
    }
    let cube = AxisBox::unit_cube(2);
    let mut classes = Vec::new();
    // only rows 0 and 1 meet [0,1] vertically
    for k in 0..=1i64 {
        let shift = (scalar::int(k) * sigma).fract();
        for j in -1..=1i64 {
            let x0 = scalar::int(j) + &shift;
            let brick = AxisBox::new(vec![
                Interval::new(x0.clone(), x0 + scalar::one(), true, false)?,
                Interval::new(scalar::int(k), scalar::int(k + 1), true, false)?,
            ])?;
            if let Some(piece) = brick.intersect(&cube) {
                classes.push((format!("brick({j},{k})"), BoxUnion::from_box(piece)));
            }
        }
    }
    RegionColoring::new(2, classes)
}

/// The grid `{0, rho, 2 rho, ..., n rho, 1}^d` with `n = floor(1/rho)`, in
/// lexicographic order.
pub fn proximate_grid(d: usize, rho: &Scalar) -> Result<Vec<Point>> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if *rho <= scalar::zero() || *rho > scalar::one() {
        return Err(Error::InvalidDomain(format!("rho must lie in (0,1], got {rho}")));
    }
    let n = scalar::floor_big(&(scalar::one() / rho));
    let n: i64 = num_traits::ToPrimitive::to_i64(&n)
        .filter(|&n| n <= 1_000)
        .ok_or_else(|| Error::InvalidDomain(format!("rho = {rho} gives too fine a grid")))?;
    let mut axis: Vec<Scalar> = (0..=n).map(|k| rho * scalar::int(k)).collect();
    axis.push(scalar::one());
    axis.dedup();
    let total = axis.len().checked_pow(d as u32).filter(|&t| t <= 1_000_000);
    if total.is_none() {
        return Err(Error::InvalidDomain(format!(
            "grid with {} points per axis in dimension {d} is too large",
            axis.len()
        )));
    }
    let mut points: Vec<Vec<Scalar>> = vec![Vec::new()];
    for _ in 0..d {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    points.into_iter().map(Point::new).collect()
}
