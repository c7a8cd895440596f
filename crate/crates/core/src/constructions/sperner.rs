use crate::coloring::{effective_rho, proximate_gap, validate_slkkm_points, PointColoring, RegionColoring};
use crate::error::{Error, Result};
use crate::geometry::{AxisBox, BoxUnion, Face};
use crate::scalar::Scalar;

/// Region coloring of the cube induced by a colored `rho`-proximate set:
/// a point `x` takes the least label (string order) among colors of points
/// of `Λ` that lie on the smallest face of `x` within distance
/// `min(rho, 1/2)`.
pub fn sperner_gamma(pc: &PointColoring, rho: &Scalar) -> Result<RegionColoring> {
    let dim = pc.dim();
    let report = validate_slkkm_points(pc);
    if !report.passed() {
        return Err(Error::NotSlkkm(format!("{} same-colored opposite pairs", report.total)));
    }
    let rho = effective_rho(rho);
    if let Some((face, w)) = proximate_gap(pc.points(), &rho, dim)? {
        return Err(Error::NotProximate {
            face: face.to_string(),
            witness: w.to_string(),
        });
    }
    let mut order: Vec<usize> = (0..pc.colors().len()).collect();
    order.sort_by(|&a, &b| pc.colors()[a].cmp(&pc.colors()[b]));

    let mut parts: Vec<Vec<AxisBox>> = vec![Vec::new(); pc.colors().len()];
    for face in Face::all(dim) {
        let mut available: Vec<Vec<AxisBox>> = vec![Vec::new(); pc.colors().len()];
        for (i, y) in pc.points().iter().enumerate() {
            if face.contains(y) {
                available[pc.color_index(i)].push(AxisBox::cube_around(y, &rho, true)?);
            }
        }
        let mut rest = BoxUnion::from_box(face.relative_interior());
        for &c in &order {
            if available[c].is_empty() || rest.is_empty() {
                continue;
            }
            let piece = rest.intersection(&BoxUnion::new(dim, std::mem::take(&mut available[c]))?)?;
            if piece.is_empty() {
                continue;
            }
            rest = rest.difference(&piece)?;
            parts[c].extend(piece.into_boxes());
        }
        if let Some(w) = rest.canonical().sample_point() {
            return Err(Error::Assertion(format!(
                "face {face} left uncolored at {w} despite proximity"
            )));
        }
    }
    let classes = pc
        .colors()
        .iter()
        .zip(parts)
        .filter(|(_, boxes)| !boxes.is_empty())
        .map(|(label, boxes)| Ok((label.clone(), BoxUnion::new(dim, boxes)?)))
        .collect::<Result<Vec<_>>>()?;
    RegionColoring::new(dim, classes)
}
