//! Disk cover inside a horizontal strip of height at most `1/sqrt(2)`.
//!
//! [`strip_cover_exact`] is a branch-and-bound that sweeps the strip left to
//! right: it always branches on the leftmost uncovered point, trying the disks
//! that reach farthest right first. [`strip_cover_greedy`] is the classical
//! greedy set cover, used when the exact search runs out of budget.

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::geom::{HLine, Point, Tolerance, UnitDisk};
use fixedbitset::FixedBitSet;

pub const MAX_STRIP_HEIGHT: f64 = std::f64::consts::FRAC_1_SQRT_2;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct StripInstance {
    pub points: Vec<Point>,
    pub disks: Vec<UnitDisk>,
    pub bottom: HLine,
    pub top: HLine,
    pub tol: Tolerance,
}

impl StripInstance {
    pub fn new(points: Vec<Point>, disks: Vec<UnitDisk>, bottom: HLine, top: HLine) -> Result<Self> {
        Self::with_tolerance(points, disks, bottom, top, Tolerance::default())
    }

    pub fn with_tolerance(
        points: Vec<Point>,
        disks: Vec<UnitDisk>,
        bottom: HLine,
        top: HLine,
        tol: Tolerance,
    ) -> Result<Self> {
        let height = top.y - bottom.y;
        if !(height >= 0.0 && height <= MAX_STRIP_HEIGHT + tol.eps) {
            return Err(Error::InvalidInstance(format!(
                "strip height {height} outside [0, 1/sqrt(2)]"
            )));
        }
        let inside = |p: &Point| p.y >= bottom.y - tol.eps && p.y <= top.y + tol.eps;
        if let Some(i) = points.iter().position(|p| !inside(p)) {
            return Err(Error::InvalidInstance(format!("point {i} lies outside the strip")));
        }
        if let Some(i) = disks.iter().position(|d| !inside(&d.center)) {
            return Err(Error::InvalidInstance(format!(
                "disk {i} is centered outside the strip"
            )));
        }
        let inst = StripInstance {
            points,
            disks,
            bottom,
            top,
            tol,
        };
        inst.coverage()?;
        Ok(inst)
    }

    fn coverage(&self) -> Result<Vec<Vec<usize>>> {
        self.points
            .iter()
            .enumerate()
            .map(|(index, p)| {
                let c: Vec<usize> = (0..self.disks.len())
                    .filter(|&d| self.disks[d].contains(p, self.tol))
                    .collect();
                if c.is_empty() {
                    Err(Error::Infeasible { index, point: *p })
                } else {
                    Ok(c)
                }
            })
            .collect()
    }
}

pub fn strip_cover_exact(inst: &StripInstance, budget: u64) -> Result<Cover> {
    let coverage = inst.coverage()?;
    let n = inst.points.len();
    let m = inst.disks.len();
    if n == 0 {
        return Ok(Cover::new());
    }

    // sweep order: left to right
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inst.points[a].cmp_xy(&inst.points[b]).then(a.cmp(&b)));

    let mut covers = vec![FixedBitSet::with_capacity(n); m];
    for (p, list) in coverage.iter().enumerate() {
        for &d in list {
            covers[d].insert(p);
        }
    }

    // dominated disks can be swapped for their dominator in any cover
    let mut usable = vec![true; m];
    for a in 0..m {
        usable[a] = !covers[a].is_clear()
            && !(0..m).any(|b| {
                b != a
                    && covers[a].is_subset(&covers[b])
                    && (covers[a] != covers[b] || b < a)
            });
    }

    // singly-covered points force their disk
    let mut uncovered = FixedBitSet::with_capacity(n);
    uncovered.insert_range(..);
    let mut forced = Vec::new();
    for list in &coverage {
        if let [d] = list.as_slice() {
            if !forced.contains(d) {
                forced.push(*d);
                uncovered.difference_with(&covers[*d]);
            }
        }
    }

    let mut options: Vec<Vec<usize>> = coverage
        .iter()
        .map(|list| list.iter().copied().filter(|&d| usable[d]).collect())
        .collect();
    let reach = |d: usize| inst.disks[d].center.x + inst.disks[d].radius;
    for list in options.iter_mut() {
        list.sort_by(|&a, &b| reach(b).total_cmp(&reach(a)).then(a.cmp(&b)));
    }
    let max_diameter = inst.disks.iter().map(|d| 2.0 * d.radius).fold(0.0, f64::max);

    let mut bb = StripSearch {
        inst,
        order: &order,
        options: &options,
        covers: &covers,
        max_diameter,
        nodes: 0,
        budget,
    };
    let start = bb.separation_bound(&uncovered);
    for depth in start..=m {
        let mut chosen = Vec::new();
        if bb.search(&uncovered, depth, &mut chosen)? {
            let mut all = forced.clone();
            all.extend(chosen);
            all.sort_unstable();
            return Ok(Cover::from_indices(all, "wsdudc-exact"));
        }
    }
    unreachable!("every point has a usable covering disk")
}

struct StripSearch<'a> {
    inst: &'a StripInstance,
    order: &'a [usize],
    options: &'a [Vec<usize>],
    covers: &'a [FixedBitSet],
    max_diameter: f64,
    nodes: u64,
    budget: u64,
}

impl StripSearch<'_> {
    /// Uncovered points chosen left to right, each more than one disk
    /// diameter to the right of the previous; no disk covers two of them.
    fn separation_bound(&self, uncovered: &FixedBitSet) -> usize {
        let mut count = 0;
        let mut last = f64::NEG_INFINITY;
        for &p in self.order {
            if uncovered.contains(p) {
                let x = self.inst.points[p].x;
                if count == 0 || x - last > self.max_diameter + self.inst.tol.eps {
                    count += 1;
                    last = x;
                }
            }
        }
        count
    }

    fn search(&mut self, uncovered: &FixedBitSet, remaining: usize, chosen: &mut Vec<usize>) -> Result<bool> {
        let Some(&first) = self.order.iter().find(|&&p| uncovered.contains(p)) else {
            return Ok(true);
        };
        if remaining == 0 {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        if self.separation_bound(uncovered) > remaining {
            return Ok(false);
        }
        for &d in &self.options[first] {
            let mut next = uncovered.clone();
            next.difference_with(&self.covers[d]);
            chosen.push(d);
            if self.search(&next, remaining - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

pub fn strip_cover_greedy(inst: &StripInstance) -> Result<Cover> {
    let coverage = inst.coverage()?;
    let n = inst.points.len();
    let bound = (n.max(1) as f64).ln() + 1.0;
    let label = format!("wsdudc-greedy (size <= {bound:.3} x optimum)");
    let mut uncovered: Vec<bool> = vec![true; n];
    let mut left = n;
    let mut cover = Cover::new();
    while left > 0 {
        let gain = |d: usize| {
            (0..n)
                .filter(|&p| uncovered[p] && coverage[p].contains(&d))
                .count()
        };
        let (best, g) = (0..inst.disks.len())
            .map(|d| (d, gain(d)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("feasible instance has disks");
        debug_assert!(g > 0);
        cover.push(best, &label);
        for p in 0..n {
            if uncovered[p] && coverage[p].contains(&best) {
                uncovered[p] = false;
                left -= 1;
            }
        }
    }
    Ok(cover)
}

/// Exact search with a greedy fallback when the budget runs out.
pub fn strip_cover(inst: &StripInstance, budget: u64) -> Result<Cover> {
    match strip_cover_exact(inst, budget) {
        Err(Error::BudgetExceeded { .. }) => strip_cover_greedy(inst),
        other => other,
    }
}
