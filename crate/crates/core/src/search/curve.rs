use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::geometry::Openness;
use crate::scalar::{self, Scalar};
use crate::search::max_colors_ball;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveRow {
    #[serde(with = "scalar::serde_text")]
    pub eps: Scalar,
    pub open: usize,
    pub closed: usize,
}

/// Open and closed maxima of one coloring over increasing radii.
pub fn empirical_k_curve(c: &impl Coloring, eps_list: &[Scalar]) -> Result<Vec<CurveRow>> {
    if eps_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDomain("radii must be strictly increasing".into()));
    }
    let mut rows: Vec<CurveRow> = Vec::with_capacity(eps_list.len());
    for eps in eps_list {
        let row = CurveRow {
            eps: eps.clone(),
            open: max_colors_ball(c, eps, Openness::Open)?.max_colors,
            closed: max_colors_ball(c, eps, Openness::Closed)?.max_colors,
        };
        if row.open > row.closed {
            return Err(Error::Assertion(format!(
                "open count exceeds closed count at eps = {eps}"
            )));
        }
        if let Some(prev) = rows.last() {
            if row.open < prev.open || row.closed < prev.closed {
                return Err(Error::Assertion(format!("counts decrease at eps = {eps}")));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}
