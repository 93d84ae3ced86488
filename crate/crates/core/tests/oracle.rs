mod common;

use diskcover::oracle::{enumerate_optimal_covers, exact_min_cover, exhaustive_min_cover, CoverProblem, DEFAULT_BUDGET, ENUMERATION_CAP};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matches_exhaustive(seed in 0u64..100_000, n in 1usize..14, m in 1usize..9) {
        let (p, d) = common::uniform(seed, n, m, 3.0);
        let prob = CoverProblem::new(p, d);
        let fast = exact_min_cover(&prob, DEFAULT_BUDGET).unwrap();
        let slow = exhaustive_min_cover(&prob).unwrap();
        prop_assert_eq!(fast.len(), slow.len());
        prop_assert!(prob.is_cover(&fast.disks));
    }

    #[test]
    fn enumerated_optima_are_distinct_optimal_covers(seed in 0u64..100_000, n in 1usize..10, m in 1usize..8) {
        let (p, d) = common::uniform(seed, n, m, 2.5);
        let prob = CoverProblem::new(p, d);
        let e = enumerate_optimal_covers(&prob, ENUMERATION_CAP, DEFAULT_BUDGET).unwrap();
        prop_assert!(!e.covers.is_empty());
        let mut seen = e.covers.clone();
        seen.sort();
        seen.dedup();
        prop_assert_eq!(seen.len(), e.covers.len());
        for c in &e.covers {
            prop_assert_eq!(c.len(), e.size);
            prop_assert!(prob.is_cover(c));
        }
        // the optimum count agrees with a direct subset scan
        let m = prob.disks.len();
        if m <= 12 {
            let direct = (0u32..1 << m)
                .filter(|mask| mask.count_ones() as usize == e.size)
                .filter(|mask| prob.is_cover(&(0..m).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>()))
                .count();
            prop_assert_eq!(direct, e.covers.len());
        }
    }
}
