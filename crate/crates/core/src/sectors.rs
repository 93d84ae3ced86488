//! Rectangular region cover through sector representatives.
//!
//! A sector is a maximal part of the rectangle covered by one fixed set of
//! disks. Covering one interior point of a sector covers all of it, so a
//! region cover is exactly a point cover of one representative per sector.
//!
//! Representatives are found by line sampling: between consecutive critical
//! abscissae (circle extremes, circle/circle crossings, circle/edge crossings
//! and the rectangle sides) the arrangement is a stack of trapezoid-like
//! bands, so a vertical line through the middle of each such slab meets every
//! face of the slab, and the midpoint between consecutive crossings on that
//! line lies inside a face.

use crate::cover::Cover;
use crate::dudc::{dudc_cover_with, DudcInstance};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{circle_circle_intersections, circle_hline_intersections, circle_vline_intersections, HLine, Point, Rect, Tolerance, UnitDisk};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq)]
pub struct SectorRep {
    pub point: Point,
    /// Ascending indices of the disks containing `point`.
    pub signature: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct RrcInstance {
    pub rect: Rect,
    pub disks: Vec<UnitDisk>,
    pub tol: Tolerance,
}

impl RrcInstance {
    pub fn new(rect: Rect, disks: Vec<UnitDisk>) -> Self {
        RrcInstance {
            rect,
            disks,
            tol: Tolerance::default(),
        }
    }
}

/// Upper bound on the number of representatives for `m` disks, counting the
/// faces cut off by the rectangle boundary.
pub fn representative_bound(m: usize) -> usize {
    2 * m * m + 8 * m + 4
}

pub fn signature(p: &Point, disks: &[UnitDisk], tol: Tolerance) -> Vec<usize> {
    (0..disks.len()).filter(|&d| disks[d].contains(p, tol)).collect()
}

pub fn build_sector_representatives(inst: &RrcInstance) -> Vec<SectorRep> {
    sector_representatives(&inst.rect, &inst.disks, inst.tol, Execution::default())
}

/// One representative per distinct coverage signature inside `rect`,
/// including the empty signature when part of `rect` is uncovered.
/// Representatives come in sweep order (x, then y).
pub fn sector_representatives(
    rect: &Rect,
    disks: &[UnitDisk],
    tol: Tolerance,
    exec: Execution,
) -> Vec<SectorRep> {
    let relevant: Vec<usize> = (0..disks.len())
        .filter(|&d| disks[d].intersects_rect(rect, tol))
        .collect();

    let mut xs = vec![rect.xmin, rect.xmax];
    for &d in &relevant {
        let disk = &disks[d];
        xs.push(disk.center.x - disk.radius);
        xs.push(disk.center.x + disk.radius);
        for edge in [rect.ymin, rect.ymax] {
            xs.extend(circle_hline_intersections(disk, &HLine::new(edge), tol).iter().map(|p| p.x));
        }
    }
    for (a, &da) in relevant.iter().enumerate() {
        for &db in &relevant[a + 1..] {
            if let Ok(pts) = circle_circle_intersections(&disks[da], &disks[db], tol) {
                xs.extend(pts.iter().map(|p| p.x));
            }
        }
    }
    xs.retain(|&x| x >= rect.xmin && x <= rect.xmax);
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|b, a| *b - *a <= tol.eps);

    let slabs: Vec<(f64, f64)> = xs
        .windows(2)
        .filter(|w| w[1] - w[0] > tol.eps)
        .map(|w| (w[0], w[1]))
        .collect();

    let per_slab = exec.map(&slabs, |&(a, b)| {
        let x = 0.5 * (a + b);
        let active: Vec<usize> = relevant
            .iter()
            .copied()
            .filter(|&d| (x - disks[d].center.x).abs() < disks[d].radius)
            .collect();
        let mut ys = vec![rect.ymin, rect.ymax];
        for &d in &active {
            ys.extend(circle_vline_intersections(&disks[d], x, tol).iter().map(|p| p.y));
        }
        ys.retain(|&y| y >= rect.ymin && y <= rect.ymax);
        ys.sort_by(f64::total_cmp);
        ys.dedup_by(|b, a| *b - *a <= tol.eps);
        let mut out: Vec<SectorRep> = Vec::new();
        for w in ys.windows(2) {
            if w[1] - w[0] <= tol.eps {
                continue;
            }
            let p = Point::new(x, 0.5 * (w[0] + w[1]));
            let sig: Vec<usize> = active.iter().copied().filter(|&d| disks[d].contains(&p, tol)).collect();
            if out.last().is_none_or(|r| r.signature != sig) {
                out.push(SectorRep {
                    point: p,
                    signature: sig,
                });
            }
        }
        out
    });

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::new();
    for rep in per_slab.into_iter().flatten() {
        if seen.insert(rep.signature.clone()) {
            reps.push(rep);
        }
    }
    if reps.is_empty() {
        // degenerate rect thinner than the tolerance
        let c = Point::new(0.5 * (rect.xmin + rect.xmax), 0.5 * (rect.ymin + rect.ymax));
        reps.push(SectorRep {
            point: c,
            signature: signature(&c, disks, tol),
        });
    }
    reps
}

pub fn rrc_cover(inst: &RrcInstance, epsilon: f64) -> Result<Cover> {
    rrc_cover_with(inst, epsilon, Execution::default())
}

pub fn rrc_cover_with(inst: &RrcInstance, epsilon: f64, exec: Execution) -> Result<Cover> {
    let reps = sector_representatives(&inst.rect, &inst.disks, inst.tol, exec);
    if let Some(r) = reps.iter().find(|r| r.signature.is_empty()) {
        return Err(Error::RegionUncovered { witness: r.point });
    }
    let points = reps.into_iter().map(|r| r.point).collect();
    let dudc = DudcInstance::with_tolerance(points, inst.disks.clone(), inst.tol)?;
    dudc_cover_with(&dudc, epsilon, exec)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verification {
    Pass,
    Witness(Point),
}

impl Verification {
    pub fn passed(&self) -> bool {
        matches!(self, Verification::Pass)
    }
}

/// `samples` uniform points of `rect` drawn from a fixed seed.
pub fn sample_points(rect: &Rect, samples: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            Point::new(
                rng.gen_range(rect.xmin..=rect.xmax),
                rng.gen_range(rect.ymin..=rect.ymax),
            )
        })
        .collect()
}

pub fn verify_region_coverage(rect: &Rect, disks: &[UnitDisk], samples: usize, seed: u64) -> Result<Verification> {
    verify_region_coverage_with(rect, disks, samples, seed, Tolerance::default(), Execution::default())
}

/// Tests seeded random points of `rect`, then every sector representative of
/// the selection, for membership in the union of `disks`. Returns the first
/// uncovered point found.
pub fn verify_region_coverage_with(
    rect: &Rect,
    disks: &[UnitDisk],
    samples: usize,
    seed: u64,
    tol: Tolerance,
    exec: Execution,
) -> Result<Verification> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    let pts = sample_points(rect, samples, seed);
    let uncovered = |p: &Point| !disks.iter().any(|d| d.contains(p, tol));
    if let Some(i) = exec.position_first(&pts, uncovered) {
        return Ok(Verification::Witness(pts[i]));
    }
    let reps = sector_representatives(rect, disks, tol, exec);
    match reps.iter().find(|r| r.signature.is_empty()) {
        Some(r) => Ok(Verification::Witness(r.point)),
        None => Ok(Verification::Pass),
    }
}
