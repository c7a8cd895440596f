use rayon::prelude::*;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::geometry::{AxisBox, Openness, Point};
use crate::scalar::{self, Scalar};
use crate::search::check_eps;

/// Candidate center coordinates along one axis: the regular grid, every
/// class endpoint shifted by `±eps`, the cube ends, and the midpoints
/// between consecutive candidates.
fn axis_candidates(boxes: &[AxisBox], axis: usize, eps: &Scalar, step: &Scalar) -> Vec<Scalar> {
    let (zero, one) = (scalar::zero(), scalar::one());
    let mut out = vec![zero.clone(), one.clone()];
    let mut t = zero.clone();
    while t <= one {
        out.push(t.clone());
        t += step;
    }
    for b in boxes {
        let iv = b.interval(axis);
        for e in [iv.lo(), iv.hi()] {
            out.push(e - eps);
            out.push(e + eps);
        }
    }
    out.retain(|c| *c >= zero && *c <= one);
    out.sort();
    out.dedup();
    let mids: Vec<Scalar> = out.windows(2).map(|w| scalar::midpoint(&w[0], &w[1])).collect();
    out.extend(mids);
    out.sort();
    out
}

/// Maximum number of classes met by a ball over a finite set of centers,
/// each intersection decided directly. The candidate set contains every
/// arrangement event, so the value matches the exact maximum.
pub fn brute_force_oracle(c: &impl Coloring, eps: &Scalar, openness: Openness, grid_step: &Scalar) -> Result<usize> {
    check_eps(eps)?;
    if *grid_step <= scalar::zero() {
        return Err(Error::InvalidDomain(format!(
            "grid step must be positive, got {grid_step}"
        )));
    }
    let classes = c.color_classes();
    let dim = c.dim();
    let boxes: Vec<AxisBox> = classes.iter().flat_map(|k| k.region.boxes().iter().cloned()).collect();
    let axes: Vec<Vec<Scalar>> = (0..dim).map(|a| axis_candidates(&boxes, a, eps, grid_step)).collect();
    let total: usize = axes.iter().map(Vec::len).product();
    let closed = openness.is_closed();
    let best = (0..total)
        .into_par_iter()
        .map(|mut flat| {
            let mut coords = vec![scalar::zero(); dim];
            for axis in (0..dim).rev() {
                coords[axis] = axes[axis][flat % axes[axis].len()].clone();
                flat /= axes[axis].len();
            }
            let center = Point::new(coords).expect("dimension >= 1");
            let ball = AxisBox::cube_around(&center, eps, closed).expect("eps > 0");
            classes.iter().filter(|k| k.region.intersects_box(&ball)).count()
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{brick_coloring, orthant_coloring};
    use crate::scalar::rat;

    #[test]
    fn examples() {
        let o = orthant_coloring(2).unwrap();
        assert_eq!(
            brute_force_oracle(&o, &rat(1, 10), Openness::Open, &rat(1, 20)).unwrap(),
            4
        );
        let b = brick_coloring(&rat(1, 2)).unwrap();
        assert_eq!(
            brute_force_oracle(&b, &rat(1, 4), Openness::Closed, &rat(1, 40)).unwrap(),
            3
        );
        assert!(brute_force_oracle(&b, &rat(1, 4), Openness::Closed, &rat(0, 1)).is_err());
    }
}
