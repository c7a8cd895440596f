use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::coloring::report::{ValidationReport, Violation};
use crate::coloring::ColorClass;
use crate::error::{Error, Result};
use crate::geometry::{on_opposite_faces, BoxUnion, Point};

/// A coloring of a finite point set in the unit cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointColoring {
    dim: usize,
    points: Vec<Point>,
    /// Distinct labels in first-seen order.
    colors: Vec<String>,
    assignment: Vec<usize>,
}

impl PointColoring {
    pub fn new(dim: usize, entries: Vec<(Point, String)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut seen = BTreeSet::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut colors = Vec::new();
        let mut points = Vec::with_capacity(entries.len());
        let mut assignment = Vec::with_capacity(entries.len());
        for (p, label) in entries {
            p.check_dim(dim)?;
            if !p.in_unit_cube() {
                return Err(Error::OutsideDomain(p.to_string(), "the unit cube"));
            }
            if !seen.insert(p.clone()) {
                return Err(Error::InvalidDomain(format!("point {p} appears twice")));
            }
            let c = *index.entry(label.clone()).or_insert_with(|| {
                colors.push(label);
                colors.len() - 1
            });
            points.push(p);
            assignment.push(c);
        }
        Ok(Self {
            dim,
            points,
            colors,
            assignment,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn color_index(&self, point: usize) -> usize {
        self.assignment[point]
    }

    pub fn color_of(&self, point: usize) -> &str {
        &self.colors[self.assignment[point]]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Each color class as a union of singleton boxes.
    pub fn color_classes(&self) -> Vec<ColorClass> {
        let mut members: Vec<Vec<&Point>> = vec![Vec::new(); self.colors.len()];
        for (p, &c) in self.points.iter().zip(&self.assignment) {
            members[c].push(p);
        }
        self.colors
            .iter()
            .zip(members)
            .map(|(label, pts)| ColorClass {
                label: label.clone(),
                region: BoxUnion::from_points(self.dim, pts).expect("points share the dimension"),
            })
            .collect()
    }
}

pub fn validate_slkkm_points(c: &PointColoring) -> ValidationReport {
    let mut report = ValidationReport::new();
    for i in 0..c.points.len() {
        for j in i + 1..c.points.len() {
            if c.assignment[i] != c.assignment[j]
                || !on_opposite_faces(&c.points[i], &c.points[j]).expect("validated on construction")
            {
                continue;
            }
            report.push(Violation::OppositePair {
                color: c.color_of(i).to_string(),
                first: i,
                second: j,
                first_point: c.points[i].clone(),
                second_point: c.points[j].clone(),
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring(dim: usize, entries: &[(&[(i64, i64)], &str)]) -> PointColoring {
        PointColoring::new(
            dim,
            entries
                .iter()
                .map(|(p, c)| (Point::from_ratios(p), c.to_string()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn endpoints_of_the_segment() {
        let ok = coloring(1, &[(&[(0, 1)], "a"), (&[(1, 1)], "b")]);
        assert!(validate_slkkm_points(&ok).passed());
        let bad = coloring(1, &[(&[(0, 1)], "a"), (&[(1, 1)], "a")]);
        let r = validate_slkkm_points(&bad);
        assert_eq!(r.total, 1);
        assert!(matches!(
            r.violations[0],
            Violation::OppositePair {
                first: 0,
                second: 1,
                ..
            }
        ));
    }

    #[test]
    fn opposite_edges_of_the_square() {
        let bad = coloring(2, &[(&[(0, 1), (1, 2)], "a"), (&[(1, 1), (1, 2)], "a")]);
        assert!(!validate_slkkm_points(&bad).passed());
    }

    #[test]
    fn rejects_malformed_input() {
        let dup = PointColoring::new(
            1,
            vec![
                (Point::from_ratios(&[(1, 2)]), "a".into()),
                (Point::from_ratios(&[(1, 2)]), "b".into()),
            ],
        );
        assert!(dup.is_err());
        let outside = PointColoring::new(1, vec![(Point::from_ratios(&[(3, 2)]), "a".into())]);
        assert!(matches!(outside, Err(Error::OutsideDomain(..))));
    }

    #[test]
    fn report_truncates() {
        // every point on the left edge pairs with the single point on the right edge
        let mut entries = Vec::new();
        for k in 0..101 {
            entries.push((Point::from_ratios(&[(0, 1), (k, 101)]), "a".to_string()));
        }
        entries.push((Point::from_ratios(&[(1, 1), (1, 2)]), "a".to_string()));
        let r = validate_slkkm_points(&PointColoring::new(2, entries).unwrap());
        assert_eq!(r.total, 101);
        assert_eq!(r.violations.len(), 100);
        assert!(r.truncated());
    }
}
