//! Exact maximization of the number of colors an l-infinity ball with
//! center in the cube can meet, an independent brute-force oracle, theorem
//! drivers, the constructive proof pipeline, and a local search for
//! colorings that keep the maximum low.

mod curve;
mod extremal;
mod oracle;
mod pipeline;
mod verify;

pub use curve::{empirical_k_curve, CurveRow};
pub use extremal::{extremal_search, ExtremalParams, ExtremalResult};
pub use oracle::brute_force_oracle;
pub use pipeline::{proof_pipeline_witness, ClassGrowth, PipelineReport};
pub use verify::{verify_sperner, verify_theorem, TheoremReport};

use serde::Serialize;

use crate::coloring::{ColorClass, Coloring};
use crate::error::{Error, Result};
use crate::geometry::{depth_profile, AxisBox, BallSpec, BoxUnion, DepthProfile, Openness, Point};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    BruteGrid,
    Pipeline,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub max_colors: usize,
    pub witness_center: Point,
    pub colors_hit: Vec<String>,
    pub method: Method,
}

pub(crate) fn check_eps(eps: &Scalar) -> Result<()> {
    if *eps <= scalar::zero() {
        return Err(Error::InvalidDomain(format!("eps must be positive, got {eps}")));
    }
    Ok(())
}

/// Labels of the classes that meet the ball, decided box by box.
pub fn colors_hit(classes: &[ColorClass], center: &Point, eps: &Scalar, openness: Openness) -> Result<Vec<String>> {
    let ball = BallSpec::new(center.clone(), eps.clone(), openness)?.to_box();
    Ok(classes
        .iter()
        .filter(|c| c.region.intersects_box(&ball))
        .map(|c| c.label.clone())
        .collect())
}

/// Centers whose ball meets the class: the class grown by the ball at the
/// origin.
pub(crate) fn feasibility_region(class: &BoxUnion, eps: &Scalar, openness: Openness) -> Result<BoxUnion> {
    let ball = BallSpec::at_origin(class.dim(), eps, openness)?;
    class.minkowski_sum_box(&ball)
}

/// Exact maximum plus the depth profile it came from.
pub(crate) fn max_colors_profile(
    classes: &[ColorClass],
    dim: usize,
    eps: &Scalar,
    openness: Openness,
) -> Result<(SearchResult, DepthProfile)> {
    check_eps(eps)?;
    let regions = classes
        .iter()
        .map(|c| feasibility_region(&c.region, eps, openness))
        .collect::<Result<Vec<_>>>()?;
    let profile = depth_profile(&regions, &AxisBox::unit_cube(dim))?;
    let witness = profile.result.witness.clone();
    let by_regions: Vec<String> = classes
        .iter()
        .zip(&regions)
        .filter(|(_, r)| r.contains(&witness))
        .map(|(c, _)| c.label.clone())
        .collect();
    let direct = colors_hit(classes, &witness, eps, openness)?;
    if by_regions != direct || direct.len() != profile.result.max_multiplicity {
        return Err(Error::Assertion(format!(
            "at {witness} the grown classes give {by_regions:?}, the ball meets {direct:?}, depth {}",
            profile.result.max_multiplicity
        )));
    }
    let result = SearchResult {
        max_colors: direct.len(),
        witness_center: witness,
        colors_hit: direct,
        method: Method::Exact,
    };
    Ok((result, profile))
}

/// The largest number of classes an `eps`-ball centered in `[0,1]^d` meets,
/// with a center attaining it.
pub fn max_colors_ball(c: &impl Coloring, eps: &Scalar, openness: Openness) -> Result<SearchResult> {
    max_colors_profile(&c.color_classes(), c.dim(), eps, openness).map(|(r, _)| r)
}
