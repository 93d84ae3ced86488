mod common;

use diskcover::reduced::{
    build_drs, disk_dominates, promise_disks, reduced_radius_optimum, rrc_reduced_solve, snap_disks,
    snapped_within_original, tiling, SnapConfig,
};
use diskcover::sectors::{verify_region_coverage, RrcInstance};
use diskcover::{Execution, Point, Rect, Tolerance, UnitDisk};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn excluded_disks_are_dominated_on_the_cell() {
    let tol = Tolerance::default();
    for nu in [0.5, 0.25] {
        let cfg = SnapConfig::new(nu, 4).unwrap();
        let cell = Rect::new(0.0, 0.0, 4.0, 4.0).unwrap();
        for seed in 0..15u64 {
            let mut r = common::rng(seed);
            let disks: Vec<UnitDisk> = (0..150)
                .map(|_| UnitDisk::unit(r.gen_range(-1.5..5.5), r.gen_range(-1.5..5.5)))
                .collect();
            let snapped = snap_disks(&disks, &cfg);
            let drs = build_drs(&snapped, &cell, &cfg);
            assert!(drs.len() as f64 <= cfg.candidate_bound());
            let kept: Vec<usize> = drs.kept.iter().map(|s| s.original).collect();
            // sampled check of domination at pitch nu / 8
            let pitch = nu / 8.0;
            let steps = (4.0 / pitch) as usize;
            for s in snapped.iter().filter(|s| !kept.contains(&s.original)) {
                let d2 = s.disk();
                if !d2.intersects_rect(&cell, tol) {
                    continue;
                }
                let dominated = drs.kept.iter().any(|k| {
                    let d = k.disk();
                    (0..=steps).all(|i| {
                        (0..=steps).all(|j| {
                            let p = Point::new(i as f64 * pitch, j as f64 * pitch);
                            !d2.contains(&p, tol) || d.contains(&p, tol)
                        })
                    })
                });
                assert!(dominated, "nu {nu} seed {seed} disk {}", s.original);
                assert!(drs.kept.iter().any(|k| disk_dominates(&k.disk(), &d2, &cell, tol)));
            }
        }
    }
}

#[test]
fn shift_candidates_and_choice() {
    let cfg = SnapConfig::new(0.5, 4).unwrap();
    for seed in 0..6u64 {
        let (rect, small) = common::covered_rect(seed, 1.2, 1.0, cfg.promise_radius(), 2);
        let disks: Vec<UnitDisk> = small.iter().map(|d| UnitDisk::unit(d.center.x, d.center.y)).collect();
        let inst = RrcInstance::new(rect, disks.clone());
        let sol = rrc_reduced_solve(&inst, &cfg, Execution::default()).unwrap();
        assert_eq!(sol.candidates.len(), 4);
        let min = sol.candidates.iter().map(|c| c.cover.len()).min().unwrap();
        assert_eq!(sol.cover.len(), min);
        let chosen: Vec<UnitDisk> = sol.cover.disks.iter().map(|&d| disks[d]).collect();
        assert!(verify_region_coverage(&rect, &chosen, 20_000, seed).unwrap().passed());
        let opt = reduced_radius_optimum(&inst, &cfg, diskcover::oracle::DEFAULT_BUDGET).unwrap();
        assert!(sol.cover.len() as f64 <= cfg.guaranteed_factor() * opt.len() as f64, "seed {seed}");
    }
}

#[test]
fn promise_disks_shrink() {
    let cfg = SnapConfig::new(0.25, 4).unwrap();
    let p = promise_disks(&[UnitDisk::unit(1.0, 2.0)], &cfg).unwrap();
    assert!((p[0].radius - (1.0 - 2.0 * 0.25 / std::f64::consts::SQRT_2)).abs() < 1e-15);
}

#[test]
fn tilings_cover_the_rectangle() {
    let rect = Rect::new(-1.3, 0.2, 9.1, 5.0).unwrap();
    for window in [4u32, 6] {
        let cfg = SnapConfig::new(0.5, window).unwrap();
        for offset in cfg.shift_offsets() {
            let cells = tiling(&rect, window, offset);
            let area: f64 = cells.iter().map(|c| c.width() * c.height()).sum();
            assert!((area - rect.width() * rect.height()).abs() < 1e-9);
            assert!(cells.iter().all(|c| c.width() <= window as f64 && c.height() <= window as f64));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn snapped_disk_inside_original(x in -50f64..50.0, y in -50f64..50.0, k in 0usize..3) {
        let nu = [1.0, 0.5, 0.25][k];
        let cfg = SnapConfig::new(nu, 4).unwrap();
        let d = UnitDisk::unit(x, y);
        let s = snap_disks(&[d], &cfg)[0];
        prop_assert!(s.center.dist(&d.center) <= cfg.delta + 1e-12);
        prop_assert!(snapped_within_original(&s, &d, 32, Tolerance::default()));
        let promise = promise_disks(&[d], &cfg);
        if let Ok(p) = promise {
            prop_assert!(disk_dominates(&s.disk(), &p[0], &Rect::new(x - 2.0, y - 2.0, x + 2.0, y + 2.0).unwrap(), Tolerance::default()));
        }
    }
}
