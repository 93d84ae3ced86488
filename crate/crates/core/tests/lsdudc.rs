mod common;

use diskcover::lsdudc::{boundary_chain, guaranteed_factor, lsdudc_cover, max_cover_prefix, LsInstance};
use diskcover::oracle::{exact_min_cover, CoverProblem, DEFAULT_BUDGET};
use diskcover::{Point, Tolerance};
use proptest::prelude::*;

fn instance(seed: u64, n: usize, m: usize) -> LsInstance {
    let (p, d, l) = common::line_separable(seed, n, m);
    LsInstance::new(p, d, l).unwrap()
}

#[test]
fn cover_within_factor_of_optimum() {
    let mut checked = 0;
    for seed in 0..120u64 {
        let n = 4 + (seed % 12) as usize;
        let m = 3 + (seed % 8) as usize;
        let inst = instance(seed, n, m);
        let opt = exact_min_cover(&CoverProblem::new(inst.points.clone(), inst.disks.clone()), DEFAULT_BUDGET)
            .unwrap()
            .len();
        for k in 3..=6 {
            let c = lsdudc_cover(&inst, k).unwrap();
            assert!(c.covers(&inst.points, &inst.disks, inst.tol), "seed {seed} k {k}");
            let bound = (guaranteed_factor(k) * opt as f64 - 1e-9).ceil() as usize;
            assert!(c.len() <= bound, "seed {seed} k {k}: {} > {bound} (opt {opt})", c.len());
            checked += 1;
        }
    }
    assert_eq!(checked, 480);
}

#[test]
fn slabs_partition_points_and_sit_under_their_disk() {
    let tol = Tolerance::default();
    for seed in 0..60u64 {
        let inst = instance(seed, 12, 8);
        let chain = boundary_chain(&inst).unwrap();
        let mut seen: Vec<usize> = chain.slabs.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..inst.points.len()).collect::<Vec<_>>(), "seed {seed}");
        for (t, slab) in chain.slabs.iter().enumerate() {
            let d = &inst.disks[chain.disks[t]];
            for &p in slab {
                assert!(d.contains(&inst.points[p], tol), "seed {seed} slab {t}");
            }
        }
        // breakpoints run left to right along the chain
        for w in chain.breakpoints.windows(2) {
            assert!(w[0].1.x <= w[1].0.x + 1e-9);
        }
    }
}

#[test]
fn chain_disks_attain_the_envelope_somewhere() {
    // every chain disk is the lowest-reaching disk at the middle of its extent
    for seed in 0..40u64 {
        let inst = instance(seed, 10, 8);
        let chain = boundary_chain(&inst).unwrap();
        for (t, &(l, r)) in chain.breakpoints.iter().enumerate() {
            let x = 0.5 * (l.x + r.x);
            let bottom = |d: &diskcover::UnitDisk| {
                let dx = x - d.center.x;
                if dx.abs() >= d.radius {
                    f64::INFINITY
                } else {
                    d.center.y - (d.radius * d.radius - dx * dx).sqrt()
                }
            };
            let own = bottom(&inst.disks[chain.disks[t]]);
            let best = inst.upper().map(|d| bottom(&inst.disks[d])).fold(f64::INFINITY, f64::min);
            assert!(own <= best + 1e-9, "seed {seed} chain {t}: {own} vs {best}");
        }
    }
}

#[test]
fn prefix_extent_is_monotone_in_k() {
    for seed in 0..30u64 {
        let inst = instance(seed, 14, 9);
        let chain = boundary_chain(&inst).unwrap();
        for i in 0..chain.len() {
            let mut last = i;
            for k in 1..=5 {
                let (j, c) = max_cover_prefix(&inst, &chain, i, k).unwrap();
                assert!(j >= last && c.len() <= k);
                last = j;
            }
        }
    }
}

#[test]
fn k_below_three_rejected() {
    let inst = instance(1, 3, 3);
    assert!(lsdudc_cover(&inst, 2).is_err());
    assert!(lsdudc_cover(&LsInstance::new(vec![], vec![], inst.line).unwrap(), 3).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_is_valid(seed in 0u64..10_000, n in 1usize..12, m in 1usize..8, k in 3usize..7) {
        let inst = instance(seed, n, m);
        let c = lsdudc_cover(&inst, k).unwrap();
        prop_assert!(c.covers(&inst.points, &inst.disks, inst.tol));
        prop_assert!(c.disks.iter().all(|&d| d < inst.disks.len()));
    }

    #[test]
    fn points_below_line_required(y in 0.01f64..0.5) {
        let r = LsInstance::new(vec![Point::new(0.0, y)], vec![diskcover::UnitDisk::unit(0.0, 0.5)], diskcover::HLine::new(0.0));
        prop_assert!(r.is_err());
    }
}
