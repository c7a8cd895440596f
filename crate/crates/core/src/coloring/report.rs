use serde::Serialize;

use crate::geometry::Point;

/// Reports keep at most this many violations; the total is still counted.
pub const MAX_REPORTED: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two points of one color lie on opposite faces of the cube.
    OppositePair {
        color: String,
        first: usize,
        second: usize,
        first_point: Point,
        second_point: Point,
    },
    /// A color class projects onto both 0 and 1 along `axis`.
    ClassSpansAxis { color: String, axis: usize },
    /// A cover member (clipped to the cube) projects onto both 0 and 1.
    MemberSpansAxis { member: String, axis: usize },
    /// A point of the cube, or of `face`, that the relevant members miss.
    Uncovered { face: Option<String>, witness: Point },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub total: usize,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: Violation) {
        self.total += 1;
        if self.violations.len() < MAX_REPORTED {
            self.violations.push(v);
        }
    }

    pub fn passed(&self) -> bool {
        self.total == 0
    }

    pub fn truncated(&self) -> bool {
        self.total > self.violations.len()
    }
}
