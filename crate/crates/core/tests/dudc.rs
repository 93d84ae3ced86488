mod common;

use diskcover::dudc::{dudc_cover, dudc_cover_with, guaranteed_factor, reflect_across, strip_decompose, DudcInstance, Part};
use diskcover::oracle::{exact_min_cover, CoverProblem, DEFAULT_BUDGET};
use diskcover::wsdudc::{strip_cover_exact, strip_cover_greedy, StripInstance};
use diskcover::{Execution, HLine, Point, Tolerance, UnitDisk};
use proptest::prelude::*;
use rand::Rng;

fn instance(seed: u64, n: usize, m: usize) -> DudcInstance {
    let (p, d) = common::uniform(seed, n, m, 3.0);
    DudcInstance::new(p, d).unwrap()
}

#[test]
fn decomposition_assigns_every_point_once() {
    let tol = Tolerance::default();
    for seed in 0..80u64 {
        let inst = instance(seed, 20, 10);
        let dec = strip_decompose(&inst).unwrap();
        let mut counted = vec![0usize; inst.points.len()];
        let subs = dec
            .upward
            .iter()
            .map(|s| (&s.point_map, Part::Upward, s.strip))
            .chain(dec.downward.iter().map(|s| (&s.point_map, Part::Downward, s.strip)))
            .chain(dec.within.iter().map(|s| (&s.point_map, Part::Within, s.strip)));
        for (map, part, strip) in subs {
            for &p in map {
                counted[p] += 1;
                assert_eq!(dec.assignment[p], (strip, part));
            }
        }
        assert!(counted.iter().all(|&c| c == 1), "seed {seed}");

        for (p, &(j, part)) in dec.assignment.iter().enumerate() {
            let q = inst.points[p];
            assert!(q.y >= dec.bottom(j) && q.y < dec.top(j));
            let above = inst.disks.iter().any(|d| d.contains(&q, tol) && d.center.y > dec.top(j) + tol.eps);
            let below = inst.disks.iter().any(|d| d.contains(&q, tol) && d.center.y < dec.bottom(j) - tol.eps);
            let expected = if above {
                Part::Upward
            } else if below {
                Part::Downward
            } else {
                Part::Within
            };
            assert_eq!(part, expected, "seed {seed} point {p}");
        }
    }
}

#[test]
fn cover_within_factor_of_optimum() {
    for seed in 0..100u64 {
        let n = 5 + (seed % 11) as usize;
        let m = 3 + (seed % 7) as usize;
        let inst = instance(seed, n, m);
        let opt = exact_min_cover(&CoverProblem::new(inst.points.clone(), inst.disks.clone()), DEFAULT_BUDGET)
            .unwrap()
            .len();
        for eps in [3.0, 6.0] {
            let c = dudc_cover(&inst, eps).unwrap();
            assert!(c.covers(&inst.points, &inst.disks, inst.tol));
            assert!(c.len() as f64 <= guaranteed_factor(eps) * opt as f64, "seed {seed}");
        }
    }
}

#[cfg(feature = "parallel")]
#[test]
fn sequential_and_parallel_agree() {
    for seed in 0..20u64 {
        let inst = instance(seed, 30, 12);
        let a = dudc_cover_with(&inst, 3.0, Execution::Sequential).unwrap();
        let b = dudc_cover_with(&inst, 3.0, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn strip_exact_matches_oracle() {
    for seed in 0..80u64 {
        let mut r = common::rng(seed);
        let h = 0.7;
        let points: Vec<Point> = (0..10).map(|_| Point::new(r.gen_range(0.0..4.0), r.gen_range(0.0..h))).collect();
        let mut disks: Vec<UnitDisk> = points
            .iter()
            .step_by(2)
            .map(|p| UnitDisk::unit(p.x + r.gen_range(-0.6..0.6), r.gen_range(0.0..h)))
            .collect();
        let tol = Tolerance::default();
        for p in &points {
            if !disks.iter().any(|d| d.contains(p, tol)) {
                disks.push(UnitDisk::unit(p.x, p.y));
            }
        }
        let s = StripInstance::new(points.clone(), disks.clone(), HLine::new(0.0), HLine::new(h)).unwrap();
        let exact = strip_cover_exact(&s, DEFAULT_BUDGET).unwrap();
        let opt = exact_min_cover(&CoverProblem::new(points.clone(), disks.clone()), DEFAULT_BUDGET).unwrap();
        assert_eq!(exact.len(), opt.len(), "seed {seed}");
        assert!(exact.covers(&points, &disks, tol));
        let greedy = strip_cover_greedy(&s).unwrap();
        assert!(greedy.covers(&points, &disks, tol));
        let bound = ((points.len() as f64).ln() + 1.0) * opt.len() as f64;
        assert!(greedy.len() as f64 <= bound);
    }
}

#[test]
fn greedy_can_exceed_optimum() {
    // seeded search for an instance where greedy is strictly worse
    let tol = Tolerance::default();
    let found = (0..2000u64).find(|&seed| {
        let mut r = common::rng(seed);
        let points: Vec<Point> = (0..8).map(|_| Point::new(r.gen_range(0.0..3.0), r.gen_range(0.0..0.5))).collect();
        let mut disks: Vec<UnitDisk> = (0..5)
            .map(|_| UnitDisk::unit(r.gen_range(0.0..3.0), r.gen_range(0.0..0.5)))
            .collect();
        for p in &points {
            if !disks.iter().any(|d| d.contains(p, tol)) {
                disks.push(UnitDisk::unit(p.x, p.y));
            }
        }
        let s = StripInstance::new(points, disks, HLine::new(0.0), HLine::new(0.5)).unwrap();
        let exact = strip_cover_exact(&s, DEFAULT_BUDGET).unwrap().len();
        let greedy = strip_cover_greedy(&s).unwrap().len();
        assert!(greedy >= exact);
        greedy > exact
    });
    assert!(found.is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_is_an_involution(x in -1e3f64..1e3, y in -1e3f64..1e3, l in -1e3f64..1e3) {
        let line = HLine::new(l);
        let p = Point::new(x, y);
        let q = reflect_across(reflect_across(p, line), line);
        prop_assert!(q.dist(&p) <= 1e-9 * (1.0 + y.abs() + l.abs()));
    }

    #[test]
    fn dudc_cover_is_valid(seed in 0u64..10_000, n in 1usize..25, m in 1usize..10) {
        let inst = instance(seed, n, m);
        let c = dudc_cover(&inst, 6.0).unwrap();
        prop_assert!(c.covers(&inst.points, &inst.disks, inst.tol));
        let mut sorted = c.disks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted, c.disks.clone());
    }
}
