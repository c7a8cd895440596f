use crate::error::{Error, Result};
use crate::geometry::{AxisBox, BoxUnion, Face, Point};
use crate::scalar::{self, Scalar};

/// `min(ρ, 1/2)`; radii beyond one half add nothing inside the cube.
pub fn effective_rho(rho: &Scalar) -> Scalar {
    scalar::min(rho, &scalar::half())
}

/// First face `F` (in [`Face::all`] order) with a point farther than `rho`
/// from every point of `F ∩ points`, together with such a point.
pub fn proximate_gap(points: &[Point], rho: &Scalar, dim: usize) -> Result<Option<(Face, Point)>> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if *rho < scalar::zero() {
        return Err(Error::InvalidDomain(format!("rho must be >= 0, got {rho}")));
    }
    for p in points {
        p.check_dim(dim)?;
    }
    for face in Face::all(dim) {
        let closed = face.closed_box();
        let mut boxes = Vec::new();
        for y in points.iter().filter(|y| face.contains(y)) {
            if let Some(b) = AxisBox::cube_around(y, rho, true)?.intersect(&closed) {
                boxes.push(b);
            }
        }
        let missing = BoxUnion::from_box(closed).difference(&BoxUnion::new(dim, boxes)?)?;
        if let Some(w) = missing.sample_point() {
            return Ok(Some((face, w)));
        }
    }
    Ok(None)
}

/// Whether every face `F` of the cube satisfies `F ⊆ (F ∩ Λ) + [-ρ,ρ]^d`.
pub fn is_proximate(points: &[Point], rho: &Scalar, dim: usize) -> Result<bool> {
    proximate_gap(points, rho, dim).map(|gap| gap.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vertex;
    use crate::scalar::rat;

    fn grid(n: i64) -> Vec<Point> {
        let mut out = Vec::new();
        for i in 0..=n {
            for j in 0..=n {
                out.push(Point::from_ratios(&[(i, n), (j, n)]));
            }
        }
        out
    }

    #[test]
    fn thirds_grid_is_proximate() {
        assert!(is_proximate(&grid(3), &rat(1, 3), 2).unwrap());
        assert!(!is_proximate(&grid(3), &rat(1, 7), 2).unwrap());
    }

    #[test]
    fn vertices_alone() {
        let vs: Vec<Point> = Vertex::all(2).iter().map(Vertex::to_point).collect();
        assert!(is_proximate(&vs, &rat(1, 2), 2).unwrap());
        assert!(!is_proximate(&vs, &rat(1, 3), 2).unwrap());
    }

    #[test]
    fn missing_vertex_is_never_proximate() {
        let mut pts = grid(4);
        pts.retain(|p| p != &Point::from_ratios(&[(1, 1), (0, 1)]));
        let (face, _) = proximate_gap(&pts, &rat(5, 1), 2).unwrap().unwrap();
        assert_eq!(face.face_dimension(), 0);
    }
}
