use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slkkm_core::coloring::{
    is_proximate, kkm_to_coloring, lebesgue_to_coloring, validate_kkm_cover, validate_lebesgue_cover,
    validate_slkkm_points, validate_slkkm_regions, LebesgueCover, PointColoring,
};
use slkkm_core::constructions::{orthant_coloring, proximate_grid, sperner_gamma};
use slkkm_core::geometry::{check_partition, linf_distance, AxisBox, BoxUnion, Point, Vertex};
use slkkm_core::sampling::{random_kkm_cover, random_lebesgue_cover, random_point_coloring};
use slkkm_core::scalar::{self, rat};

/// Same-colored pairs at distance exactly one, found without faces.
fn distance_one_pairs(c: &PointColoring) -> usize {
    let mut n = 0;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c.color_index(i) == c.color_index(j)
                && linf_distance(&c.points()[i], &c.points()[j]).unwrap() == scalar::one()
            {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn two_characterizations_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let grid = proximate_grid(2, &rat(1, 3)).unwrap();
    for _ in 0..200 {
        // arbitrary labels, so both valid and invalid colorings show up
        let colors = rng.gen_range(1..=5);
        let entries = grid
            .iter()
            .map(|p| (p.clone(), format!("k{}", rng.gen_range(0..colors))))
            .collect();
        let c = PointColoring::new(2, entries).unwrap();
        assert_eq!(validate_slkkm_points(&c).total, distance_one_pairs(&c));
    }
}

#[test]
fn lebesgue_conversion_keeps_classes_inside_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let cov = random_lebesgue_cover(&mut rng, 2, 6).unwrap();
        assert!(validate_lebesgue_cover(&cov).passed());
        let c = lebesgue_to_coloring(&cov).unwrap();
        assert!(validate_slkkm_regions(&c).passed());
        for class in c.classes() {
            let member = &cov.members().iter().find(|(l, _)| *l == class.label).unwrap().1;
            assert!(class.region.is_subset_of(member).unwrap());
        }
        let parts: Vec<BoxUnion> = c.classes().iter().map(|k| k.region.clone()).collect();
        assert_eq!(check_partition(&parts, &AxisBox::unit_cube(2)).unwrap(), None);
    }
}

#[test]
fn kkm_conversion_keeps_classes_inside_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let cov = random_kkm_cover(&mut rng, 2).unwrap();
        assert!(validate_kkm_cover(&cov).passed());
        let c = kkm_to_coloring(&cov).unwrap();
        assert!(validate_slkkm_regions(&c).passed());
        for class in c.classes() {
            let v = Vertex::parse(&class.label).unwrap();
            assert!(class.region.is_subset_of(cov.member(&v)).unwrap());
        }
    }
}

#[test]
fn closed_orthants_form_a_lebesgue_cover() {
    let o = orthant_coloring(2).unwrap();
    let members = o
        .classes()
        .iter()
        .map(|c| {
            let closed: Vec<AxisBox> = c
                .region
                .boxes()
                .iter()
                .map(|b| {
                    AxisBox::new(
                        b.intervals()
                            .iter()
                            .map(|iv| slkkm_core::geometry::Interval::closed(iv.lo().clone(), iv.hi().clone()).unwrap())
                            .collect(),
                    )
                    .unwrap()
                })
                .collect();
            (c.label.clone(), BoxUnion::new(2, closed).unwrap())
        })
        .collect();
    let cov = LebesgueCover::new(2, members).unwrap();
    assert!(validate_lebesgue_cover(&cov).passed());
}

#[test]
fn proximity_is_monotone_and_needs_vertices() {
    let grid = proximate_grid(2, &rat(1, 4)).unwrap();
    let mut last = false;
    for k in 1..=12 {
        let now = is_proximate(&grid, &rat(k, 24), 2).unwrap();
        assert!(now || !last, "proximity lost when rho grew");
        last = now;
    }
    assert!(last);
    let without: Vec<Point> = grid
        .into_iter()
        .filter(|p| p != &Point::from_ratios(&[(1, 1), (1, 1)]))
        .collect();
    assert!(!is_proximate(&without, &rat(10, 1), 2).unwrap());
}

#[test]
fn sperner_gamma_outputs_are_slkkm() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for rho in [rat(1, 3), rat(1, 6)] {
        let grid = proximate_grid(2, &rho).unwrap();
        for _ in 0..10 {
            let pc = random_point_coloring(&mut rng, 2, &grid, 8).unwrap();
            let g = sperner_gamma(&pc, &rho).unwrap();
            assert!(validate_slkkm_regions(&g).passed());
            for v in Vertex::all(2) {
                let p = v.to_point();
                let i = pc.points().iter().position(|q| *q == p).unwrap();
                assert_eq!(g.color_at(&p), Some(pc.color_of(i)));
            }
        }
    }
}
