//! The extension argument run as a computation: pad the cube, grow every
//! class into its oriented quadrant, find a deep point with the pigeonhole
//! engine, then clamp it back into the cube.

use serde::Serialize;

use crate::bounds::lower_bound_main;
use crate::coloring::{validate_slkkm_regions, RegionColoring};
use crate::constructions::extend_coloring;
use crate::error::{Error, Result};
use crate::geometry::{clamp_map, depth_arrangement, pigeonhole_ratio, Openness, Point};
use crate::scalar::{self, Scalar};
use crate::search::{check_eps, colors_hit, Method, SearchResult};

#[derive(Debug, Clone, Serialize)]
pub struct ClassGrowth {
    pub label: String,
    pub orientation: Vec<i8>,
    #[serde(with = "scalar::serde_text")]
    pub extended_measure: Scalar,
    #[serde(with = "scalar::serde_text")]
    pub inflated_measure: Scalar,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub result: SearchResult,
    /// Deepest point of the grown classes in the padded cube.
    pub deep_point: Point,
    pub depth: usize,
    pub lower_bound: u64,
    /// `(1 + ε/(1+ε))^d`, the guaranteed growth factor of every class.
    #[serde(with = "scalar::serde_text")]
    pub growth_factor: Scalar,
    /// `Σ m(grown class) / m(padded cube)`.
    #[serde(with = "scalar::serde_text")]
    pub pigeonhole_ratio: Scalar,
    pub classes: Vec<ClassGrowth>,
}

fn fail(msg: String) -> Error {
    Error::Assertion(msg)
}

pub fn proof_pipeline_witness(c: &RegionColoring, eps: &Scalar) -> Result<PipelineReport> {
    check_eps(eps)?;
    if !validate_slkkm_regions(c).passed() {
        return Err(Error::NotSlkkm("the base coloring meets opposite faces".into()));
    }
    let d = c.dim();
    let ext = extend_coloring(c, eps)?;
    // orientation containment and the padded-cube containment of the sums
    ext.check_invariants()?;

    let one = scalar::one();
    let growth_factor = scalar::pow(&(&one + eps / (&one + eps)), d as u32);
    let mut inflated = Vec::with_capacity(ext.classes().len());
    let mut classes = Vec::with_capacity(ext.classes().len());
    for (k, class) in ext.classes().iter().enumerate() {
        let grown = ext.inflated(k)?;
        let extended_measure = class.region.measure();
        let inflated_measure = grown.measure();
        if inflated_measure < &extended_measure * &growth_factor {
            return Err(fail(format!(
                "class {:?} grew from {extended_measure} to only {inflated_measure}",
                class.label
            )));
        }
        classes.push(ClassGrowth {
            label: class.label.clone(),
            orientation: class.orientation.signs(),
            extended_measure,
            inflated_measure,
        });
        inflated.push(grown);
    }

    let padded = ext.extended_cube();
    let ratio = pigeonhole_ratio(&inflated, &padded)?;
    if ratio < growth_factor {
        return Err(fail(format!(
            "pigeonhole ratio {ratio} is below the growth factor {growth_factor}"
        )));
    }
    let deep = depth_arrangement(&inflated, &padded)?;
    let needed = scalar::ceil_u64(&ratio)?;
    if (deep.max_multiplicity as u64) < needed {
        return Err(fail(format!(
            "deepest point lies in {} grown classes, pigeonhole promises {needed}",
            deep.max_multiplicity
        )));
    }

    let center = clamp_map(&deep.witness, eps)?;
    let classes_base = c.color_classes();
    let hit = colors_hit(&classes_base, &center, eps, Openness::Open)?;
    // every grown class through the deep point must still be met after
    // clamping, since clamping never increases distances
    let through: Vec<&String> = ext
        .classes()
        .iter()
        .zip(&inflated)
        .filter(|(_, g)| g.contains(&deep.witness))
        .map(|(k, _)| &k.label)
        .collect();
    if let Some(lost) = through.iter().find(|l| !hit.contains(l)) {
        return Err(fail(format!(
            "class {lost:?} is lost when clamping {} to {center}",
            deep.witness
        )));
    }
    let lower_bound = lower_bound_main(d, eps)?;
    if (hit.len() as u64) < lower_bound {
        return Err(fail(format!(
            "pipeline center meets {} colors, below {lower_bound}",
            hit.len()
        )));
    }
    Ok(PipelineReport {
        result: SearchResult {
            max_colors: hit.len(),
            witness_center: center,
            colors_hit: hit,
            method: Method::Pipeline,
        },
        deep_point: deep.witness,
        depth: deep.max_multiplicity,
        lower_bound,
        growth_factor,
        pigeonhole_ratio: ratio,
        classes,
    })
}
