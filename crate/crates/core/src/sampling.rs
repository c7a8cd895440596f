//! Random instances for property tests and benchmarks: guillotine
//! partitions colored without breaking the boundary condition, covers built
//! on top of them, colored grids, and plain box families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloring::{KkmCover, LebesgueCover, PointColoring, RegionColoring};
use crate::error::Result;
use crate::geometry::{AxisBox, BoxUnion, Interval, Point, Vertex};
use crate::scalar::{self, Scalar};

/// Which side of one axis a set touches: `Some(false)` for 0, `Some(true)`
/// for 1, `None` for neither.
pub type SideType = Option<bool>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionParams {
    pub max_boxes: usize,
    pub max_colors: usize,
    /// Chance of splitting off a degenerate slice `{c}` at a cut.
    pub slice_prob: f64,
}

impl Default for PartitionParams {
    fn default() -> Self {
        Self {
            max_boxes: 40,
            max_colors: 8,
            slice_prob: 0.15,
        }
    }
}

fn random_cut<R: Rng + ?Sized>(rng: &mut R, lo: &Scalar, hi: &Scalar) -> Scalar {
    let den = rng.gen_range(2..=6i64);
    let num = rng.gen_range(1..den);
    lo + (hi - lo) * scalar::rat(num, den)
}

/// Splits `iv` at an interior cut into two or three pieces.
fn split_interval<R: Rng + ?Sized>(rng: &mut R, iv: &Interval, slice_prob: f64) -> Vec<Interval> {
    let c = random_cut(rng, iv.lo(), iv.hi());
    let (lo, hi) = (iv.lo().clone(), iv.hi().clone());
    let (lc, hc) = (iv.lo_closed(), iv.hi_closed());
    let mk = |a: Scalar, b: Scalar, ac: bool, bc: bool| Interval::new(a, b, ac, bc).expect("cut is interior");
    if rng.gen_bool(slice_prob) {
        vec![
            mk(lo, c.clone(), lc, false),
            Interval::point(c.clone()),
            mk(c, hi, false, hc),
        ]
    } else if rng.gen_bool(0.5) {
        vec![mk(lo, c.clone(), lc, false), mk(c, hi, true, hc)]
    } else {
        vec![mk(lo, c.clone(), lc, true), mk(c, hi, false, hc)]
    }
}

fn split_box<R: Rng + ?Sized>(rng: &mut R, b: &AxisBox, axis: usize, slice_prob: f64) -> Vec<AxisBox> {
    split_interval(rng, b.interval(axis), slice_prob)
        .into_iter()
        .map(|iv| {
            let mut ivs = b.intervals().to_vec();
            ivs[axis] = iv;
            AxisBox::new(ivs).expect("dimension >= 1")
        })
        .collect()
}

/// A random guillotine partition of `[0,1]^d` in which every axis is cut at
/// least once, so no piece meets two opposite faces.
pub fn random_guillotine<R: Rng + ?Sized>(rng: &mut R, d: usize, max_boxes: usize, slice_prob: f64) -> Vec<AxisBox> {
    let mut boxes = vec![AxisBox::unit_cube(d)];
    for axis in 0..d {
        boxes = boxes.iter().flat_map(|b| split_box(rng, b, axis, slice_prob)).collect();
    }
    let target = rng.gen_range(boxes.len().min(max_boxes)..=max_boxes.max(boxes.len()));
    while boxes.len() < target {
        // favor splitting pieces of positive measure so the picture stays rich
        let k = rng.gen_range(0..boxes.len());
        let axis = rng.gen_range(0..d);
        if boxes[k].interval(axis).is_degenerate() {
            continue;
        }
        let pieces = split_box(rng, &boxes[k], axis, slice_prob);
        if boxes.len() - 1 + pieces.len() > max_boxes {
            break;
        }
        boxes.swap_remove(k);
        boxes.extend(pieces);
    }
    boxes
}

/// The sides of the cube a box touches, per axis.
pub fn side_type(b: &AxisBox) -> Vec<SideType> {
    let (zero, one) = (scalar::zero(), scalar::one());
    b.intervals()
        .iter()
        .map(|iv| match (iv.contains(&zero), iv.contains(&one)) {
            (true, false) => Some(false),
            (false, true) => Some(true),
            (false, false) => None,
            (true, true) => panic!("box spans an axis"),
        })
        .collect()
}

fn compatible(box_type: &[SideType], color_type: &[SideType]) -> bool {
    box_type.iter().zip(color_type).all(|(b, c)| b.is_none() || b == c)
}

/// A palette of side types: the `2^d` vertex types followed by random extra
/// types, `max_colors` entries at most (and at least `2^d`).
fn random_palette<R: Rng + ?Sized>(rng: &mut R, d: usize, max_colors: usize) -> Vec<Vec<SideType>> {
    let mut palette: Vec<Vec<SideType>> = Vertex::all(d)
        .into_iter()
        .map(|v| v.0.into_iter().map(Some).collect())
        .collect();
    let extra = rng.gen_range(0..=max_colors.saturating_sub(palette.len()));
    for _ in 0..extra {
        palette.push(
            (0..d)
                .map(|_| match rng.gen_range(0..3) {
                    0 => Some(false),
                    1 => Some(true),
                    _ => None,
                })
                .collect(),
        );
    }
    palette
}

/// A random SLKKM region coloring whose classes are unions of guillotine
/// pieces.
pub fn random_region_coloring<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    params: PartitionParams,
) -> Result<RegionColoring> {
    let boxes = random_guillotine(rng, d, params.max_boxes, params.slice_prob);
    let palette = random_palette(rng, d, params.max_colors);
    let mut parts: Vec<Vec<AxisBox>> = vec![Vec::new(); palette.len()];
    for b in boxes {
        let t = side_type(&b);
        let choices: Vec<usize> = (0..palette.len()).filter(|&c| compatible(&t, &palette[c])).collect();
        let c = *choices.choose(rng).expect("some vertex type always fits");
        parts[c].push(b);
    }
    let classes = parts
        .into_iter()
        .enumerate()
        .filter(|(_, bs)| !bs.is_empty())
        .map(|(c, bs)| Ok((format!("c{c}"), BoxUnion::new(d, bs)?)))
        .collect::<Result<Vec<_>>>()?;
    RegionColoring::new(d, classes)
}

/// A random box with endpoints on a grid of step `1/den` inside `[lo, hi]`
/// on every axis, with random flags. Degenerate sides are closed points.
pub fn random_box<R: Rng + ?Sized>(rng: &mut R, d: usize, den: i64, lo: i64, hi: i64, degenerate_prob: f64) -> AxisBox {
    let intervals = (0..d)
        .map(|_| {
            if rng.gen_bool(degenerate_prob) {
                return Interval::point(scalar::rat(rng.gen_range(lo..=hi), den));
            }
            let a = rng.gen_range(lo..hi);
            let b = rng.gen_range(a + 1..=hi);
            Interval::new(
                scalar::rat(a, den),
                scalar::rat(b, den),
                rng.gen_bool(0.5),
                rng.gen_bool(0.5),
            )
            .expect("a < b")
        })
        .collect();
    AxisBox::new(intervals).expect("dimension >= 1")
}

/// A random union of `1..=max_boxes` boxes in the cube.
pub fn random_box_union<R: Rng + ?Sized>(rng: &mut R, d: usize, max_boxes: usize) -> BoxUnion {
    let n = rng.gen_range(1..=max_boxes);
    let den = rng.gen_range(2..=12);
    let boxes = (0..n).map(|_| random_box(rng, d, den, 0, den, 0.1)).collect();
    BoxUnion::new(d, boxes).expect("dimension >= 1")
}

/// A random box in the cube that stays off the sides `allowed` forbids:
/// `Some(s)` keeps it off side `!s`, `None` off both.
fn random_box_avoiding<R: Rng + ?Sized>(rng: &mut R, allowed: &[SideType]) -> AxisBox {
    let den = 8;
    let intervals = allowed
        .iter()
        .map(|side| {
            let (lo_min, hi_max) = match side {
                Some(false) => (0, den - 1),
                Some(true) => (1, den),
                None => (1, den - 1),
            };
            let a = rng.gen_range(lo_min..hi_max);
            let b = rng.gen_range(a + 1..=hi_max);
            Interval::new(scalar::rat(a, den), scalar::rat(b, den), true, true).expect("a < b")
        })
        .collect();
    AxisBox::new(intervals).expect("dimension >= 1")
}

fn union_side_type(u: &BoxUnion) -> Vec<SideType> {
    let (zero, one) = (scalar::zero(), scalar::one());
    (0..u.dim())
        .map(
            |axis| match (u.projection_contains(axis, &zero), u.projection_contains(axis, &one)) {
                (true, _) => Some(false),
                (false, true) => Some(true),
                (false, false) => None,
            },
        )
        .collect()
}

/// A random Lebesgue cover: the classes of a random coloring, each grown by
/// a few boxes that keep it off one side per axis, in shuffled order.
pub fn random_lebesgue_cover<R: Rng + ?Sized>(rng: &mut R, d: usize, members: usize) -> Result<LebesgueCover> {
    let base = random_region_coloring(
        rng,
        d,
        PartitionParams {
            max_boxes: 12,
            max_colors: members.max(1 << d),
            slice_prob: 0.1,
        },
    )?;
    let mut out = Vec::new();
    for class in base.classes() {
        let mut t = union_side_type(&class.region);
        for side in t.iter_mut() {
            if side.is_none() && rng.gen_bool(0.5) {
                *side = Some(rng.gen_bool(0.5));
            }
        }
        let mut boxes = class.region.boxes().to_vec();
        for _ in 0..rng.gen_range(0..=2) {
            boxes.push(random_box_avoiding(rng, &t));
        }
        out.push((class.label.clone(), BoxUnion::new(d, boxes)?));
    }
    out.shuffle(rng);
    LebesgueCover::new(d, out)
}

/// A random KKM cover: a random coloring by vertex labels where each piece
/// takes a vertex of the faces it touches, plus arbitrary extra boxes.
pub fn random_kkm_cover<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Result<KkmCover> {
    let vertices = Vertex::all(d);
    let mut members: Vec<Vec<AxisBox>> = vec![Vec::new(); vertices.len()];
    for b in random_guillotine(rng, d, 16, 0.1) {
        let v: Vec<bool> = side_type(&b)
            .into_iter()
            .map(|s| s.unwrap_or_else(|| rng.gen_bool(0.5)))
            .collect();
        let k = vertices.binary_search(&Vertex(v)).expect("vertex of the cube");
        members[k].push(b);
    }
    for m in members.iter_mut() {
        for _ in 0..rng.gen_range(0..=2) {
            m.push(random_box(rng, d, 8, 0, 8, 0.0));
        }
    }
    let pairs = vertices
        .into_iter()
        .zip(members)
        .map(|(v, bs)| Ok((v, BoxUnion::new(d, bs)?)))
        .collect::<Result<Vec<_>>>()?;
    KkmCover::new(d, pairs)
}

/// A random SLKKM coloring of `points`, with at most `max_colors` colors.
pub fn random_point_coloring<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    points: &[Point],
    max_colors: usize,
) -> Result<PointColoring> {
    let palette = random_palette(rng, d, max_colors);
    let entries = points
        .iter()
        .map(|p| {
            let t = side_type(&AxisBox::singleton(p));
            let choices: Vec<usize> = (0..palette.len()).filter(|&c| compatible(&t, &palette[c])).collect();
            let c = *choices.choose(rng).expect("some vertex type always fits");
            (p.clone(), format!("c{c}"))
        })
        .collect();
    PointColoring::new(d, entries)
}
