//! The depth engine against a direct point-sampling oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slkkm_core::geometry::{depth_arrangement, pigeonhole_ratio, AxisBox, BoxUnion, Point};
use slkkm_core::sampling::random_box;
use slkkm_core::scalar::{self, Scalar};

/// Every point whose coordinates are endpoints or midpoints of consecutive
/// endpoints: one representative per cell of the arrangement.
fn oracle(family: &[BoxUnion], region: &AxisBox) -> usize {
    let d = region.dim();
    let mut axes: Vec<Vec<Scalar>> = Vec::new();
    for axis in 0..d {
        let mut v: Vec<Scalar> = family
            .iter()
            .flat_map(|m| m.boxes())
            .chain(std::iter::once(region))
            .flat_map(|b| [b.interval(axis).lo().clone(), b.interval(axis).hi().clone()])
            .collect();
        v.sort();
        v.dedup();
        let mids: Vec<Scalar> = v.windows(2).map(|w| (&w[0] + &w[1]) / scalar::int(2)).collect();
        v.extend(mids);
        axes.push(v);
    }
    let mut best = 0;
    let mut idx = vec![0usize; d];
    loop {
        let p = Point::new((0..d).map(|a| axes[a][idx[a]].clone()).collect()).unwrap();
        if region.contains(&p) {
            best = best.max(family.iter().filter(|m| m.contains(&p)).count());
        }
        let mut axis = 0;
        loop {
            if axis == d {
                return best;
            }
            idx[axis] += 1;
            if idx[axis] < axes[axis].len() {
                break;
            }
            idx[axis] = 0;
            axis += 1;
        }
    }
}

fn random_family(rng: &mut ChaCha8Rng, d: usize, max_boxes: usize) -> Vec<BoxUnion> {
    let n = rng.gen_range(1..=max_boxes);
    (0..n)
        .map(|_| {
            let parts = rng.gen_range(1..=2);
            let boxes = (0..parts).map(|_| random_box(rng, d, 10, 0, 10, 0.1)).collect();
            BoxUnion::new(d, boxes).unwrap()
        })
        .collect()
}

#[test]
fn matches_oracle_in_the_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let region = AxisBox::unit_cube(2);
    for _ in 0..100 {
        let family = random_family(&mut rng, 2, 20);
        let r = depth_arrangement(&family, &region).unwrap();
        assert_eq!(r.max_multiplicity, oracle(&family, &region));
        assert!(r.witness_cell.contains(&r.witness));
        let hits = family.iter().filter(|m| m.contains(&r.witness)).count();
        assert_eq!(hits, r.max_multiplicity);
        let ratio = pigeonhole_ratio(&family, &region).unwrap();
        assert!(r.max_multiplicity as u64 >= scalar::ceil_u64(&ratio).unwrap());
    }
}

#[test]
fn matches_oracle_in_three_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..20 {
        let family = random_family(&mut rng, 3, 8);
        let region = random_box(&mut rng, 3, 4, 0, 4, 0.0);
        let r = depth_arrangement(&family, &region).unwrap();
        assert_eq!(r.max_multiplicity, oracle(&family, &region));
    }
}

#[test]
fn every_witness_cell_point_attains_the_maximum() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let family = random_family(&mut rng, 2, 10);
        let r = depth_arrangement(&family, &AxisBox::unit_cube(2)).unwrap();
        // corners of the cell that belong to it, plus its center
        let cell = BoxUnion::from_box(r.witness_cell.clone());
        for m in &family {
            let inside = cell.is_subset_of(m).unwrap();
            let meets = cell.intersects(m).unwrap();
            assert_eq!(inside, meets, "a cell is either inside or outside each member");
        }
    }
}
