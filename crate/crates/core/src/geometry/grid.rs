//! Coordinate compression shared by the box-union algebra and the depth
//! engine.
//!
//! Along each axis the sorted distinct endpoints `e_0 < ... < e_k` split the
//! line into atoms: atom `2j` is the point `{e_j}` and atom `2j+1` is the
//! open gap `(e_j, e_{j+1})`. Every interval whose endpoints are grid values
//! is exactly a contiguous run of atoms, whatever its open/closed flags, so
//! set operations reduce to boolean operations on the atom lattice.

use crate::geometry::aabox::AxisBox;
use crate::geometry::interval::Interval;
use crate::scalar::{self, Scalar};

pub(crate) type AtomRange = (usize, usize);

#[derive(Debug, Clone)]
pub(crate) struct AtomGrid {
    coords: Vec<Vec<Scalar>>,
}

impl AtomGrid {
    pub fn new<'a>(dim: usize, boxes: impl IntoIterator<Item = &'a AxisBox>) -> Self {
        let mut coords: Vec<Vec<Scalar>> = vec![Vec::new(); dim];
        for b in boxes {
            for (axis, iv) in b.intervals().iter().enumerate() {
                coords[axis].push(iv.lo().clone());
                coords[axis].push(iv.hi().clone());
            }
        }
        for axis in &mut coords {
            axis.sort();
            axis.dedup();
        }
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn atom_count(&self, axis: usize) -> usize {
        match self.coords[axis].len() {
            0 => 0,
            k => 2 * k - 1,
        }
    }

    pub fn shape(&self) -> Vec<usize> {
        (0..self.dim()).map(|a| self.atom_count(a)).collect()
    }

    fn index_of(&self, axis: usize, value: &Scalar) -> usize {
        self.coords[axis]
            .binary_search(value)
            .expect("interval endpoint missing from the compression grid")
    }

    /// Inclusive run of atoms covered by `iv`. The endpoints of `iv` must be
    /// grid values.
    pub fn atom_range(&self, axis: usize, iv: &Interval) -> AtomRange {
        let lo = 2 * self.index_of(axis, iv.lo()) + usize::from(!iv.lo_closed());
        let hi = 2 * self.index_of(axis, iv.hi()) - usize::from(!iv.hi_closed());
        (lo, hi)
    }

    pub fn box_ranges(&self, b: &AxisBox) -> Vec<AtomRange> {
        b.intervals()
            .iter()
            .enumerate()
            .map(|(axis, iv)| self.atom_range(axis, iv))
            .collect()
    }

    /// The interval formed by atoms `start..=end` on `axis`.
    pub fn atom_interval(&self, axis: usize, start: usize, end: usize) -> Interval {
        let c = &self.coords[axis];
        let (lo, lo_closed) = if start.is_multiple_of(2) {
            (c[start / 2].clone(), true)
        } else {
            (c[start / 2].clone(), false)
        };
        let (hi, hi_closed) = if end.is_multiple_of(2) {
            (c[end / 2].clone(), true)
        } else {
            (c[end / 2 + 1].clone(), false)
        };
        Interval::new(lo, hi, lo_closed, hi_closed).expect("atom runs are never empty")
    }

    /// The endpoint itself for point atoms, the midpoint for gaps.
    pub fn representative(&self, axis: usize, atom: usize) -> Scalar {
        let c = &self.coords[axis];
        if atom.is_multiple_of(2) {
            c[atom / 2].clone()
        } else {
            scalar::midpoint(&c[atom / 2], &c[atom / 2 + 1])
        }
    }
}

pub(crate) fn strides(shape: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; shape.len()];
    for axis in (0..shape.len().saturating_sub(1)).rev() {
        strides[axis] = strides[axis + 1] * shape[axis + 1];
    }
    strides
}

/// Calls `f` with the flat index of every cell in the product of `ranges`,
/// in row-major order.
pub(crate) fn for_each_cell(strides: &[usize], ranges: &[AtomRange], mut f: impl FnMut(usize)) {
    let d = ranges.len();
    if d == 0 {
        return;
    }
    let mut idx: Vec<usize> = ranges.iter().map(|r| r.0).collect();
    let (inner_lo, inner_hi) = ranges[d - 1];
    loop {
        let base: usize = (0..d - 1).map(|a| idx[a] * strides[a]).sum();
        for atom in inner_lo..=inner_hi {
            f(base + atom * strides[d - 1]);
        }
        // advance the odometer over the outer axes
        let mut axis = d - 1;
        loop {
            if axis == 0 {
                return;
            }
            axis -= 1;
            if idx[axis] < ranges[axis].1 {
                idx[axis] += 1;
                break;
            }
            idx[axis] = ranges[axis].0;
        }
    }
}

/// A boolean set of cells over an [`AtomGrid`].
#[derive(Debug, Clone)]
pub(crate) struct CellMask {
    shape: Vec<usize>,
    strides: Vec<usize>,
    bits: Vec<bool>,
}

impl CellMask {
    pub fn new(grid: &AtomGrid) -> Self {
        let shape = grid.shape();
        let strides = strides(&shape);
        let len = shape.iter().product();
        Self {
            shape,
            strides,
            bits: vec![false; len],
        }
    }

    pub fn painted<'a>(grid: &AtomGrid, boxes: impl IntoIterator<Item = &'a AxisBox>) -> Self {
        let mut mask = Self::new(grid);
        for b in boxes {
            mask.paint(&grid.box_ranges(b));
        }
        mask
    }

    pub fn paint(&mut self, ranges: &[AtomRange]) {
        let bits = &mut self.bits;
        for_each_cell(&self.strides, ranges, |i| bits[i] = true);
    }

    pub fn and_not(&mut self, other: &CellMask) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a = *a && !*b;
        }
    }

    pub fn and(&mut self, other: &CellMask) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a = *a && *b;
        }
    }

    pub fn any(&self) -> bool {
        self.bits.iter().any(|&b| b)
    }

    /// Maximal merge of the set into a tree of axis slabs. Two adjacent atoms
    /// of an axis share a slab iff their cross-sections are equal, so the
    /// result depends only on the set, not on the grid it was painted on.
    pub fn slabs(&self) -> Vec<Slab> {
        if self.shape.contains(&0) {
            return Vec::new();
        }
        self.slabs_at(0, 0)
    }

    fn slabs_at(&self, axis: usize, offset: usize) -> Vec<Slab> {
        let last = axis + 1 == self.shape.len();
        let mut out: Vec<Slab> = Vec::new();
        for atom in 0..self.shape[axis] {
            let cell = offset + atom * self.strides[axis];
            let sub = if last {
                if !self.bits[cell] {
                    continue;
                }
                Vec::new()
            } else {
                let sub = self.slabs_at(axis + 1, cell);
                if sub.is_empty() {
                    continue;
                }
                sub
            };
            match out.last_mut() {
                Some(prev) if prev.end + 1 == atom && prev.sub == sub => prev.end = atom,
                _ => out.push(Slab {
                    start: atom,
                    end: atom,
                    sub,
                }),
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Slab {
    start: usize,
    end: usize,
    sub: Vec<Slab>,
}

pub(crate) fn slabs_to_boxes(grid: &AtomGrid, slabs: &[Slab]) -> Vec<AxisBox> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(grid.dim());
    collect_boxes(grid, slabs, 0, &mut prefix, &mut out);
    out
}

fn collect_boxes(grid: &AtomGrid, slabs: &[Slab], axis: usize, prefix: &mut Vec<Interval>, out: &mut Vec<AxisBox>) {
    for slab in slabs {
        prefix.push(grid.atom_interval(axis, slab.start, slab.end));
        if slab.sub.is_empty() {
            out.push(AxisBox::new(prefix.clone()).expect("dimension >= 1"));
        } else {
            collect_boxes(grid, &slab.sub, axis + 1, prefix, out);
        }
        prefix.pop();
    }
}

pub(crate) fn slabs_measure(grid: &AtomGrid, slabs: &[Slab], axis: usize) -> Scalar {
    let mut total = scalar::zero();
    for slab in slabs {
        let length = grid.atom_interval(axis, slab.start, slab.end).length();
        if length == scalar::zero() {
            continue;
        }
        if slab.sub.is_empty() {
            total += length;
        } else {
            total += length * slabs_measure(grid, &slab.sub, axis + 1);
        }
    }
    total
}
