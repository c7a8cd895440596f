//! Colorings of the cube and of finite point sets, Lebesgue and KKM covers,
//! proximate point sets, and the conversions from covers to colorings.

mod covers;
mod points;
mod proximate;
mod regions;
mod report;

pub use covers::{
    kkm_to_coloring, lebesgue_to_coloring, validate_kkm_cover, validate_lebesgue_cover, KkmCover, LebesgueCover,
};
pub use points::{validate_slkkm_points, PointColoring};
pub use proximate::{effective_rho, is_proximate, proximate_gap};
pub use regions::{validate_slkkm_regions, ColorClass, RegionColoring};
pub use report::{ValidationReport, Violation, MAX_REPORTED};

/// Anything that splits into labeled color classes.
pub trait Coloring {
    fn dim(&self) -> usize;
    fn color_classes(&self) -> Vec<ColorClass>;
    /// Checks the boundary condition: no color on two opposite faces.
    fn slkkm_report(&self) -> ValidationReport;
}

impl Coloring for PointColoring {
    fn dim(&self) -> usize {
        PointColoring::dim(self)
    }

    fn color_classes(&self) -> Vec<ColorClass> {
        PointColoring::color_classes(self)
    }

    fn slkkm_report(&self) -> ValidationReport {
        validate_slkkm_points(self)
    }
}

impl Coloring for RegionColoring {
    fn dim(&self) -> usize {
        RegionColoring::dim(self)
    }

    fn color_classes(&self) -> Vec<ColorClass> {
        RegionColoring::color_classes(self)
    }

    fn slkkm_report(&self) -> ValidationReport {
        validate_slkkm_regions(self)
    }
}
