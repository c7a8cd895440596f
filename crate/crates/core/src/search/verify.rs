use serde::Serialize;

use crate::bounds::{lower_bound_main, sperner_lower};
use crate::coloring::{Coloring, PointColoring};
use crate::error::{Error, Result};
use crate::geometry::Openness;
use crate::scalar::{self, Scalar};
use crate::search::{max_colors_ball, SearchResult};

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub dimension: usize,
    #[serde(with = "scalar::serde_text")]
    pub eps: Scalar,
    pub openness: Openness,
    pub lower_bound: u64,
    pub search: SearchResult,
    pub holds: bool,
}

fn require_slkkm(c: &impl Coloring) -> Result<()> {
    let report = c.slkkm_report();
    if !report.passed() {
        return Err(Error::NotSlkkm(format!("{} boundary violations", report.total)));
    }
    Ok(())
}

fn check(c: &impl Coloring, eps: &Scalar, openness: Openness, bound: u64) -> Result<TheoremReport> {
    let search = max_colors_ball(c, eps, openness)?;
    if (search.max_colors as u64) < bound {
        return Err(Error::Assertion(format!(
            "best center meets {} colors, below the guaranteed {bound}",
            search.max_colors
        )));
    }
    Ok(TheoremReport {
        dimension: c.dim(),
        eps: eps.clone(),
        openness,
        lower_bound: bound,
        search,
        holds: true,
    })
}

/// Confirms that some ball meets at least `⌈((1+2ε)/(1+ε))^d⌉` colors.
/// A shortfall is reported as a defect.
pub fn verify_theorem(c: &impl Coloring, eps: &Scalar, openness: Openness) -> Result<TheoremReport> {
    require_slkkm(c)?;
    let bound = lower_bound_main(c.dim(), eps)?;
    check(c, eps, openness, bound)
}

/// The proximate point-set variant, with the radius reduced by
/// `min(rho, 1/2)`.
pub fn verify_sperner(pc: &PointColoring, eps: &Scalar, rho: &Scalar, openness: Openness) -> Result<TheoremReport> {
    require_slkkm(pc)?;
    let rho_eff = scalar::min(rho, &scalar::half());
    if let Some((face, w)) = crate::coloring::proximate_gap(pc.points(), &rho_eff, pc.dim())? {
        return Err(Error::NotProximate {
            face: face.to_string(),
            witness: w.to_string(),
        });
    }
    let bound = sperner_lower(pc.dim(), eps, rho)?;
    check(pc, eps, openness, bound)
}
