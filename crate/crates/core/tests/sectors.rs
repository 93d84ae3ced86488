mod common;

use diskcover::sectors::{
    representative_bound, rrc_cover, sample_points, sector_representatives, signature, verify_region_coverage,
    RrcInstance,
};
use diskcover::{Execution, Rect, Tolerance, UnitDisk};
use proptest::prelude::*;
use rand::Rng;
use std::collections::HashSet;

fn random_disks(seed: u64, m: usize, rect: &Rect) -> Vec<UnitDisk> {
    let mut r = common::rng(seed);
    (0..m)
        .map(|_| {
            UnitDisk::unit(
                r.gen_range(rect.xmin - 0.5..rect.xmax + 0.5),
                r.gen_range(rect.ymin - 0.5..rect.ymax + 0.5),
            )
        })
        .collect()
}

#[test]
fn every_sampled_face_has_a_representative() {
    let tol = Tolerance::default();
    let rect = Rect::new(0.0, 0.0, 3.0, 2.0).unwrap();
    for seed in 0..40u64 {
        let disks = random_disks(seed, 1 + (seed % 8) as usize, &rect);
        let reps = sector_representatives(&rect, &disks, tol, Execution::default());
        assert!(reps.len() <= representative_bound(disks.len()));
        let sigs: HashSet<Vec<usize>> = reps.iter().map(|r| r.signature.clone()).collect();
        assert_eq!(sigs.len(), reps.len());
        for r in &reps {
            assert!(rect.contains(&r.point, tol));
            assert_eq!(signature(&r.point, &disks, tol), r.signature);
        }
        for p in sample_points(&rect, 20_000, seed) {
            // skip points too close to a circle to classify robustly
            if disks.iter().any(|d| (d.center.dist(&p) - d.radius).abs() < 1e-6) {
                continue;
            }
            assert!(sigs.contains(&signature(&p, &disks, tol)), "seed {seed} at {p:?}");
        }
    }
}

#[test]
fn rrc_cover_covers_the_rectangle() {
    for seed in 0..30u64 {
        let (rect, disks) = common::covered_rect(seed, 3.0, 2.0, 1.0, 3);
        let c = rrc_cover(&RrcInstance::new(rect, disks.clone()), 3.0).unwrap();
        let chosen: Vec<UnitDisk> = c.disks.iter().map(|&d| disks[d]).collect();
        assert!(verify_region_coverage(&rect, &chosen, 20_000, seed).unwrap().passed(), "seed {seed}");
    }
}

#[cfg(feature = "parallel")]
#[test]
fn representatives_independent_of_execution() {
    let rect = Rect::new(0.0, 0.0, 3.0, 2.0).unwrap();
    let disks = random_disks(5, 8, &rect);
    let tol = Tolerance::default();
    assert_eq!(
        sector_representatives(&rect, &disks, tol, Execution::Sequential),
        sector_representatives(&rect, &disks, tol, Execution::Parallel)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn count_within_bound(seed in 0u64..10_000, m in 0usize..10) {
        let rect = Rect::new(0.0, 0.0, 2.0, 2.0).unwrap();
        let disks = random_disks(seed, m, &rect);
        let reps = sector_representatives(&rect, &disks, Tolerance::default(), Execution::Sequential);
        prop_assert!(reps.len() <= representative_bound(m));
    }
}
