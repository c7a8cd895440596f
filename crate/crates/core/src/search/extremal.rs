//! Simulated annealing over colorings of a fixed grid of cells, looking for
//! colorings whose best ball meets few colors. Results are upper evidence
//! for box-union colorings only.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::lower_bound_main;
use crate::coloring::{ColorClass, RegionColoring};
use crate::error::{Error, Result};
use crate::geometry::{AxisBox, BoxUnion, Interval, Openness};
use crate::scalar::{self, Scalar};
use crate::search::{check_eps, max_colors_ball, max_colors_profile};

pub const EVIDENCE_LABEL: &str = "box-union upper evidence";

#[derive(Debug, Clone)]
pub struct ExtremalParams {
    pub d: usize,
    pub eps: Scalar,
    pub openness: Openness,
    /// Annealing steps per restart.
    pub budget: usize,
    pub seed: u64,
    /// Each axis is cut into `grid` equal parts; the cells are the points
    /// and open gaps between cuts.
    pub grid: usize,
    pub restarts: usize,
}

impl ExtremalParams {
    pub fn new(d: usize, eps: Scalar, budget: usize, seed: u64) -> Self {
        Self {
            d,
            eps,
            openness: Openness::Closed,
            budget,
            seed,
            grid: match d {
                1 => 8,
                2 => 4,
                _ => 2,
            },
            restarts: 8,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalResult {
    pub coloring: RegionColoring,
    pub max_colors: usize,
    pub lower_bound: u64,
    pub evidence: &'static str,
    pub restart: usize,
    pub score_float: f64,
}

struct CellGrid {
    d: usize,
    atoms: usize,
    boxes: Vec<AxisBox>,
    /// Per cell and axis: `Some(false)` on side 0, `Some(true)` on side 1.
    sides: Vec<Vec<Option<bool>>>,
}

impl CellGrid {
    fn new(d: usize, k: usize) -> Self {
        let atoms = 2 * k + 1;
        let cut = |j: usize| scalar::rat(j as i64, k as i64);
        let atom_interval = |a: usize| {
            if a.is_multiple_of(2) {
                Interval::point(cut(a / 2))
            } else {
                Interval::open(cut(a / 2), cut(a / 2 + 1)).expect("k >= 1")
            }
        };
        let n = atoms.pow(d as u32);
        let mut boxes = Vec::with_capacity(n);
        let mut sides = Vec::with_capacity(n);
        for flat in 0..n {
            let idx = Self::unflatten(flat, d, atoms);
            boxes.push(AxisBox::new(idx.iter().map(|&a| atom_interval(a)).collect()).expect("d >= 1"));
            sides.push(
                idx.iter()
                    .map(|&a| match a {
                        0 => Some(false),
                        a if a == atoms - 1 => Some(true),
                        _ => None,
                    })
                    .collect(),
            );
        }
        Self { d, atoms, boxes, sides }
    }

    fn unflatten(mut flat: usize, d: usize, atoms: usize) -> Vec<usize> {
        let mut idx = vec![0; d];
        for axis in (0..d).rev() {
            idx[axis] = flat % atoms;
            flat /= atoms;
        }
        idx
    }

    fn len(&self) -> usize {
        self.boxes.len()
    }
}

/// Cell assignment with per color, per axis counts of cells on each side.
#[derive(Clone)]
struct State {
    assign: Vec<usize>,
    /// `touch[c][axis][side]`
    touch: Vec<Vec<[usize; 2]>>,
}

impl State {
    fn orthants(grid: &CellGrid, colors: usize) -> Self {
        let half = grid.atoms / 2;
        let assign = (0..grid.len())
            .map(|flat| {
                CellGrid::unflatten(flat, grid.d, grid.atoms)
                    .iter()
                    .fold(0, |acc, &a| 2 * acc + usize::from(a >= half))
            })
            .collect();
        let mut s = Self {
            assign,
            touch: vec![vec![[0; 2]; grid.d]; colors],
        };
        for cell in 0..grid.len() {
            s.count(grid, cell, s.assign[cell], true);
        }
        s
    }

    fn count(&mut self, grid: &CellGrid, cell: usize, color: usize, add: bool) {
        for (axis, side) in grid.sides[cell].iter().enumerate() {
            if let Some(s) = side {
                let slot = &mut self.touch[color][axis][usize::from(*s)];
                if add {
                    *slot += 1;
                } else {
                    *slot -= 1;
                }
            }
        }
    }

    fn can_take(&self, grid: &CellGrid, cell: usize, color: usize) -> bool {
        grid.sides[cell]
            .iter()
            .enumerate()
            .all(|(axis, side)| side.is_none_or(|s| self.touch[color][axis][usize::from(!s)] == 0))
    }

    fn can_merge(&self, from: usize, into: usize) -> bool {
        self.touch[from].iter().zip(&self.touch[into]).all(|(a, b)| {
            let lo = a[0] + b[0] > 0;
            let hi = a[1] + b[1] > 0;
            !(lo && hi)
        })
    }

    fn recolor(&mut self, grid: &CellGrid, cell: usize, color: usize) {
        let old = self.assign[cell];
        self.count(grid, cell, old, false);
        self.count(grid, cell, color, true);
        self.assign[cell] = color;
    }

    fn classes(&self, grid: &CellGrid) -> Vec<ColorClass> {
        let colors = self.touch.len();
        let mut parts: Vec<Vec<AxisBox>> = vec![Vec::new(); colors];
        for (cell, &c) in self.assign.iter().enumerate() {
            parts[c].push(grid.boxes[cell].clone());
        }
        parts
            .into_iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(c, boxes)| ColorClass {
                label: format!("c{c}"),
                region: BoxUnion::new(grid.d, boxes)
                    .expect("cells share the dimension")
                    .canonical(),
            })
            .collect()
    }
}

fn score(state: &State, grid: &CellGrid, p: &ExtremalParams) -> Result<f64> {
    let (r, profile) = max_colors_profile(&state.classes(grid), p.d, &p.eps, p.openness)?;
    // the measure term gives a usable gradient; the cell term breaks ties
    // when the maximum lives on a null set
    let measure = scalar::to_f64(&profile.measure_at_max);
    let cells = profile.cells_at_max as f64 / profile.cells_total as f64;
    Ok(r.max_colors as f64 + 0.9 * measure + 0.1 * cells)
}

fn anneal(p: &ExtremalParams, grid: &CellGrid, restart: usize) -> Result<(f64, State)> {
    let colors = 1usize << p.d;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    rng.set_stream(restart as u64);
    let mut state = State::orthants(grid, colors);
    let mut current = score(&state, grid, p)?;
    let mut best = (current, state.clone());
    let (t0, t1) = (0.05f64, 0.001f64);
    let cooling = if p.budget > 1 {
        (t1 / t0).powf(1.0 / (p.budget - 1) as f64)
    } else {
        1.0
    };
    let mut temp = t0;
    for _ in 0..p.budget {
        let mut next = state.clone();
        if rng.gen_bool(0.9) {
            let cell = rng.gen_range(0..grid.len());
            let color = rng.gen_range(0..colors);
            if color == next.assign[cell] || !next.can_take(grid, cell, color) {
                temp *= cooling;
                continue;
            }
            next.recolor(grid, cell, color);
        } else {
            let from = rng.gen_range(0..colors);
            let into = rng.gen_range(0..colors);
            if from == into || !next.can_merge(from, into) {
                temp *= cooling;
                continue;
            }
            for cell in 0..grid.len() {
                if next.assign[cell] == from {
                    next.recolor(grid, cell, into);
                }
            }
        }
        let s = score(&next, grid, p)?;
        let delta = s - current;
        if delta <= 0.0 || rng.gen_bool((-delta / temp).exp().min(1.0)) {
            state = next;
            current = s;
            if current < best.0 {
                best = (current, state.clone());
            }
        }
        temp *= cooling;
    }
    Ok(best)
}

/// Searches for a coloring whose best ball meets as few colors as
/// possible. Deterministic for a fixed seed.
pub fn extremal_search(p: &ExtremalParams) -> Result<ExtremalResult> {
    if !(1..=3).contains(&p.d) {
        return Err(Error::DimensionOutOfRange(p.d, "1..=3"));
    }
    check_eps(&p.eps)?;
    if !(1..=8).contains(&p.grid) {
        return Err(Error::InvalidDomain(format!("grid must be in 1..=8, got {}", p.grid)));
    }
    if p.budget > 1_000_000 || p.restarts == 0 || p.restarts > 64 {
        return Err(Error::InvalidDomain(
            "budget must be <= 1000000 and restarts in 1..=64".into(),
        ));
    }
    let grid = CellGrid::new(p.d, p.grid);
    let runs = (0..p.restarts)
        .into_par_iter()
        .map(|i| anneal(p, &grid, i).map(|(s, st)| (s, i, st)))
        .collect::<Result<Vec<_>>>()?;
    let (score_float, restart, state) = runs
        .into_iter()
        .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))
        .expect("at least one restart");
    let coloring = RegionColoring::new(
        p.d,
        state.classes(&grid).into_iter().map(|c| (c.label, c.region)).collect(),
    )?;
    let max_colors = max_colors_ball(&coloring, &p.eps, p.openness)?.max_colors;
    let lower_bound = lower_bound_main(p.d, &p.eps)?;
    if (max_colors as u64) < lower_bound {
        return Err(Error::Assertion(format!(
            "search reached {max_colors} colors, below the guaranteed {lower_bound}"
        )));
    }
    Ok(ExtremalResult {
        coloring,
        max_colors,
        lower_bound,
        evidence: EVIDENCE_LABEL,
        restart,
        score_float,
    })
}
