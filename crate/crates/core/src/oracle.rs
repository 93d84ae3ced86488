//! Exact minimum disk cover over a finite point set.
//!
//! The search is iterative deepening on the cover size. Before searching, the
//! instance is reduced to a fixpoint by three rules:
//!
//! * point dominance: a point whose covering set contains another point's
//!   covering set is implied by that point and dropped;
//! * disk dominance: a disk whose covered set is contained in another disk's
//!   covered set is dropped (minimum mode only, never when enumerating);
//! * forced disks: a point with a single covering disk forces that disk.
//!
//! Each search node branches on the uncovered point with the fewest remaining
//! candidates and is pruned by a disjoint-candidate packing lower bound.

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::geom::{Point, Tolerance, UnitDisk};
use fixedbitset::FixedBitSet;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Maximum number of optimum covers collected by [`enumerate_optimal_covers`].
pub const ENUMERATION_CAP: usize = 10_000;

/// Largest disk count accepted by [`exhaustive_min_cover`].
pub const EXHAUSTIVE_MAX_DISKS: usize = 24;

const LABEL: &str = "oracle";

#[derive(Debug, Clone)]
pub struct CoverProblem {
    pub points: Vec<Point>,
    pub disks: Vec<UnitDisk>,
    /// For every point, the ascending indices of the disks containing it.
    pub coverage: Vec<Vec<usize>>,
}

impl CoverProblem {
    pub fn new(points: Vec<Point>, disks: Vec<UnitDisk>) -> Self {
        Self::with_tolerance(points, disks, Tolerance::default())
    }

    pub fn with_tolerance(points: Vec<Point>, disks: Vec<UnitDisk>, tol: Tolerance) -> Self {
        let coverage = points
            .iter()
            .map(|p| {
                disks
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| d.contains(p, tol))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        CoverProblem {
            points,
            disks,
            coverage,
        }
    }

    /// Builds a problem from a precomputed coverage matrix.
    pub fn from_coverage(points: Vec<Point>, disks: Vec<UnitDisk>, coverage: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(points.len(), coverage.len());
        CoverProblem {
            points,
            disks,
            coverage,
        }
    }

    pub fn check_feasible(&self) -> Result<()> {
        match self.coverage.iter().position(|c| c.is_empty()) {
            Some(index) => Err(Error::Infeasible {
                index,
                point: self.points[index],
            }),
            None => Ok(()),
        }
    }

    pub fn is_cover(&self, disks: &[usize]) -> bool {
        self.coverage
            .iter()
            .all(|c| c.iter().any(|d| disks.contains(d)))
    }
}

/// All optimum covers of a problem, possibly truncated at a cap.
#[derive(Debug, Clone)]
pub struct OptimaEnumeration {
    pub size: usize,
    /// Each cover sorted ascending; covers in discovery order.
    pub covers: Vec<Vec<usize>>,
    pub capped: bool,
}

pub fn exact_min_cover(prob: &CoverProblem, budget: u64) -> Result<Cover> {
    prob.check_feasible()?;
    let found = min_cover_at_most(prob, prob.disks.len(), budget)?;
    Ok(found.expect("a feasible problem has a cover using every disk"))
}

/// Minimum cover if one of size at most `limit` exists.
pub fn min_cover_at_most(prob: &CoverProblem, limit: usize, budget: u64) -> Result<Option<Cover>> {
    prob.check_feasible()?;
    let mut search = Search::new(prob, budget, true);
    let Some(forced) = search.reduce() else {
        return Ok(None);
    };
    if forced.len() > limit {
        return Ok(None);
    }
    if search.active_points.count_ones(..) == 0 {
        return Ok(Some(Cover::from_indices(sorted(forced), LABEL)));
    }
    let uncovered = search.active_points.clone();
    let excluded = FixedBitSet::with_capacity(prob.disks.len());
    let lower = search.packing_bound(&uncovered, &excluded).max(1);
    for depth in lower..=(limit - forced.len()) {
        let mut chosen = Vec::new();
        if search.find(&uncovered, excluded.clone(), depth, &mut chosen)? {
            chosen.extend(forced);
            return Ok(Some(Cover::from_indices(sorted(chosen), LABEL)));
        }
    }
    Ok(None)
}

/// Every minimum cover, up to `cap` covers. Disk dominance is not applied, so
/// covers using dominated disks are reported too.
pub fn enumerate_optimal_covers(
    prob: &CoverProblem,
    cap: usize,
    budget: u64,
) -> Result<OptimaEnumeration> {
    let size = exact_min_cover(prob, budget)?.len();
    let mut search = Search::new(prob, budget, false);
    let forced = search
        .reduce()
        .expect("reduction of a feasible problem succeeds");
    let mut out = OptimaEnumeration {
        size,
        covers: Vec::new(),
        capped: false,
    };
    let uncovered = search.active_points.clone();
    let excluded = FixedBitSet::with_capacity(prob.disks.len());
    let mut chosen = forced.clone();
    search.collect(&uncovered, excluded, size - forced.len(), &mut chosen, cap, &mut out)?;
    Ok(out)
}

/// Pruning-free reference: scans subsets in order of size, lexicographically
/// within a size, and returns the first cover.
pub fn exhaustive_min_cover(prob: &CoverProblem) -> Result<Cover> {
    prob.check_feasible()?;
    let m = prob.disks.len();
    if m > EXHAUSTIVE_MAX_DISKS {
        return Err(Error::InvalidParameter(format!(
            "exhaustive search limited to {EXHAUSTIVE_MAX_DISKS} disks, got {m}"
        )));
    }
    for size in 0..=m {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            if prob.is_cover(&combo) {
                return Ok(Cover::from_indices(combo, "exhaustive"));
            }
            // advance to the next combination in lexicographic order
            let mut i = size;
            while i > 0 && combo[i - 1] == m - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    unreachable!("the full disk set covers a feasible problem")
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

struct Search {
    /// Per point: disks covering it.
    cand: Vec<FixedBitSet>,
    /// Per disk: points it covers.
    covers: Vec<FixedBitSet>,
    active_points: FixedBitSet,
    active_disks: FixedBitSet,
    disk_dominance: bool,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn new(prob: &CoverProblem, budget: u64, disk_dominance: bool) -> Self {
        let n = prob.points.len();
        let m = prob.disks.len();
        let mut cand = vec![FixedBitSet::with_capacity(m); n];
        let mut covers = vec![FixedBitSet::with_capacity(n); m];
        for (p, list) in prob.coverage.iter().enumerate() {
            for &d in list {
                cand[p].insert(d);
                covers[d].insert(p);
            }
        }
        let mut active_points = FixedBitSet::with_capacity(n);
        active_points.insert_range(..);
        let mut active_disks = FixedBitSet::with_capacity(m);
        active_disks.insert_range(..);
        Search {
            cand,
            covers,
            active_points,
            active_disks,
            disk_dominance,
            nodes: 0,
            budget,
        }
    }

    fn avail(&self, p: usize, excluded: &FixedBitSet) -> FixedBitSet {
        let mut c = self.cand[p].clone();
        c.intersect_with(&self.active_disks);
        c.difference_with(excluded);
        c
    }

    fn covered_by(&self, d: usize) -> FixedBitSet {
        let mut c = self.covers[d].clone();
        c.intersect_with(&self.active_points);
        c
    }

    /// Applies the reduction rules to a fixpoint and returns the forced disks,
    /// or `None` if some point lost all of its candidates.
    fn reduce(&mut self) -> Option<Vec<usize>> {
        let none = FixedBitSet::with_capacity(self.active_disks.len());
        let mut forced = Vec::new();
        loop {
            let mut changed = false;

            let pts: Vec<usize> = self.active_points.ones().collect();
            let avail: Vec<FixedBitSet> = pts.iter().map(|&p| self.avail(p, &none)).collect();
            if avail.iter().any(|a| a.is_clear()) {
                return None;
            }
            for (i, &p) in pts.iter().enumerate() {
                let dominated = pts.iter().enumerate().any(|(j, &q)| {
                    j != i
                        && self.active_points.contains(q)
                        && avail[j].is_subset(&avail[i])
                        && (avail[j] != avail[i] || q < p)
                });
                if dominated {
                    self.active_points.set(p, false);
                    changed = true;
                }
            }

            let disks: Vec<usize> = self.active_disks.ones().collect();
            for &d in &disks {
                if self.covered_by(d).is_clear() {
                    self.active_disks.set(d, false);
                    changed = true;
                }
            }
            if self.disk_dominance {
                let disks: Vec<usize> = self.active_disks.ones().collect();
                let cov: Vec<FixedBitSet> = disks.iter().map(|&d| self.covered_by(d)).collect();
                for (i, &d) in disks.iter().enumerate() {
                    let dominated = disks.iter().enumerate().any(|(j, &e)| {
                        j != i
                            && self.active_disks.contains(e)
                            && cov[i].is_subset(&cov[j])
                            && (cov[i] != cov[j] || e < d)
                    });
                    if dominated {
                        self.active_disks.set(d, false);
                        changed = true;
                    }
                }
            }

            let pts: Vec<usize> = self.active_points.ones().collect();
            for p in pts {
                if !self.active_points.contains(p) {
                    continue;
                }
                let a = self.avail(p, &none);
                match a.count_ones(..) {
                    0 => return None,
                    1 => {
                        let d = a.ones().next().unwrap();
                        let hit = self.covered_by(d);
                        self.active_points.difference_with(&hit);
                        self.active_disks.set(d, false);
                        forced.push(d);
                        changed = true;
                    }
                    _ => {}
                }
            }

            if !changed {
                return Some(forced);
            }
        }
    }

    /// Greedy packing of uncovered points with pairwise disjoint candidate
    /// sets; each needs its own disk.
    fn packing_bound(&self, uncovered: &FixedBitSet, excluded: &FixedBitSet) -> usize {
        let mut order: Vec<(usize, FixedBitSet)> =
            uncovered.ones().map(|p| (p, self.avail(p, excluded))).collect();
        order.sort_by_key(|(p, a)| (a.count_ones(..), *p));
        let mut used = FixedBitSet::with_capacity(self.active_disks.len());
        let mut count = 0;
        for (_, a) in order {
            if a.is_disjoint(&used) {
                used.union_with(&a);
                count += 1;
            }
        }
        count
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Uncovered point with the fewest available candidates, with those
    /// candidates. `None` when everything is covered.
    fn branch_point(
        &self,
        uncovered: &FixedBitSet,
        excluded: &FixedBitSet,
    ) -> Option<(usize, FixedBitSet)> {
        let mut best: Option<(usize, FixedBitSet)> = None;
        for p in uncovered.ones() {
            let a = self.avail(p, excluded);
            let better = match &best {
                None => true,
                Some((_, b)) => a.count_ones(..) < b.count_ones(..),
            };
            if better {
                let empty = a.is_clear();
                best = Some((p, a));
                if empty {
                    break;
                }
            }
        }
        best
    }

    fn find(
        &mut self,
        uncovered: &FixedBitSet,
        mut excluded: FixedBitSet,
        remaining: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<bool> {
        let Some((_, options)) = self.branch_point(uncovered, &excluded) else {
            return Ok(true);
        };
        if remaining == 0 || options.is_clear() {
            return Ok(false);
        }
        self.tick()?;
        if self.packing_bound(uncovered, &excluded) > remaining {
            return Ok(false);
        }
        for d in options.ones() {
            let mut next = uncovered.clone();
            next.difference_with(&self.covers[d]);
            chosen.push(d);
            if self.find(&next, excluded.clone(), remaining - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
            excluded.insert(d);
        }
        Ok(false)
    }

    fn collect(
        &mut self,
        uncovered: &FixedBitSet,
        mut excluded: FixedBitSet,
        remaining: usize,
        chosen: &mut Vec<usize>,
        cap: usize,
        out: &mut OptimaEnumeration,
    ) -> Result<()> {
        let Some((_, options)) = self.branch_point(uncovered, &excluded) else {
            if remaining == 0 {
                if out.covers.len() >= cap {
                    out.capped = true;
                } else {
                    out.covers.push(sorted(chosen.clone()));
                }
            }
            return Ok(());
        };
        if remaining == 0 || options.is_clear() || out.capped {
            return Ok(());
        }
        self.tick()?;
        if self.packing_bound(uncovered, &excluded) > remaining {
            return Ok(());
        }
        for d in options.ones() {
            let mut next = uncovered.clone();
            next.difference_with(&self.covers[d]);
            chosen.push(d);
            self.collect(&next, excluded.clone(), remaining - 1, chosen, cap, out)?;
            chosen.pop();
            excluded.insert(d);
            if out.capped {
                break;
            }
        }
        Ok(())
    }
}
