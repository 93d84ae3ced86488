//! Region cover in the reduced-radius setting.
//!
//! Disk centers are snapped to a grid of pitch `nu` and radii shrunk to
//! `1 - delta` with `delta = nu / sqrt(2)`; a snapped disk then lies inside its
//! original unit disk. The rectangle is tiled with `L x L` cells; for every
//! cell only a bounded candidate set survives (all disks centered in the cell,
//! the nearest disk on each grid line beside the cell, and non-dominated
//! nearest disks in the corner regions), and the cell is covered exactly. The
//! union over cells is computed for every shift of the tiling by multiples of
//! 2 and the smallest union wins, which is within `(1 + 2/L)^2` of the
//! optimum at the reduced radius.

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{circle_hline_intersections, circle_vline_intersections, HLine, Point, Rect, Tolerance, UnitDisk};
use crate::oracle::{self, CoverProblem};
use crate::sectors::{sector_representatives, RrcInstance};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnapConfig {
    pub nu: f64,
    pub delta: f64,
    pub window: u32,
}

impl SnapConfig {
    pub const DEFAULT_WINDOW: u32 = 4;

    pub fn new(nu: f64, window: u32) -> Result<Self> {
        let delta = nu / std::f64::consts::SQRT_2;
        if !(nu.is_finite() && nu > 0.0 && delta < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "grid pitch nu = {nu} must give 0 < nu/sqrt(2) < 1"
            )));
        }
        if window < 4 || !window.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "window L = {window} must be an even integer >= 4"
            )));
        }
        Ok(SnapConfig { nu, delta, window })
    }

    /// Radius of a snapped disk.
    pub fn reduced_radius(&self) -> f64 {
        1.0 - self.delta
    }

    /// Radius at original centers under which the instance must cover the
    /// rectangle. A disk of this radius fits inside the snapped disk of the
    /// same original disk.
    pub fn promise_radius(&self) -> f64 {
        1.0 - 2.0 * self.delta
    }

    pub fn shift_offsets(&self) -> Vec<(u32, u32)> {
        let steps: Vec<u32> = (0..self.window).step_by(2).collect();
        steps
            .iter()
            .flat_map(|&ox| steps.iter().map(move |&oy| (ox, oy)))
            .collect()
    }

    pub fn guaranteed_factor(&self) -> f64 {
        let f = 1.0 + 2.0 / self.window as f64;
        f * f
    }

    /// Bound on the candidate set of a full cell: grid vertices in the cell,
    /// one per grid line beside each side and in each corner.
    /// For `L = 4` this is `16/nu^2 + 20/nu`.
    pub fn candidate_bound(&self) -> f64 {
        let l = self.window as f64;
        (l / self.nu).powi(2) + (4.0 * l + 4.0) / self.nu
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnappedDisk {
    pub original: usize,
    /// Grid vertex indices; the center is `grid * nu`.
    pub grid: (i64, i64),
    pub center: Point,
    pub radius: f64,
}

impl SnappedDisk {
    pub fn disk(&self) -> UnitDisk {
        UnitDisk::with_radius(self.center, self.radius)
    }
}

/// Nearest grid index, ties toward negative infinity.
fn snap_index(v: f64, nu: f64) -> i64 {
    (v / nu - 0.5).ceil() as i64
}

pub fn snap_disks(disks: &[UnitDisk], cfg: &SnapConfig) -> Vec<SnappedDisk> {
    disks
        .iter()
        .enumerate()
        .map(|(original, d)| {
            let grid = (snap_index(d.center.x, cfg.nu), snap_index(d.center.y, cfg.nu));
            SnappedDisk {
                original,
                grid,
                center: Point::new(grid.0 as f64 * cfg.nu, grid.1 as f64 * cfg.nu),
                radius: cfg.reduced_radius(),
            }
        })
        .collect()
}

/// Samples `samples` points on the snapped circle and checks that each lies
/// in the original disk.
pub fn snapped_within_original(snapped: &SnappedDisk, original: &UnitDisk, samples: usize, tol: Tolerance) -> bool {
    (0..samples).all(|i| {
        let a = i as f64 * std::f64::consts::TAU / samples as f64;
        let p = Point::new(
            snapped.center.x + snapped.radius * a.cos(),
            snapped.center.y + snapped.radius * a.sin(),
        );
        original.contains(&p, tol)
    })
}

/// Position of a disk center relative to a cell. The cell is half-open for
/// this purpose (`[xmin, xmax) x [ymin, ymax)`), and side boundaries belong to
/// the side regions rather than the corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    Inside,
    Left,
    Right,
    Top,
    Down,
    TopLeft,
    TopRight,
    DownLeft,
    DownRight,
}

pub fn classify(center: &Point, cell: &Rect) -> Region {
    let col = if center.x < cell.xmin {
        -1
    } else if center.x < cell.xmax {
        0
    } else {
        1
    };
    let row = if center.y < cell.ymin {
        -1
    } else if center.y < cell.ymax {
        0
    } else {
        1
    };
    match (col, row) {
        (0, 0) => Region::Inside,
        (-1, 0) => Region::Left,
        (1, 0) => Region::Right,
        (0, 1) => Region::Top,
        (0, -1) => Region::Down,
        (-1, 1) => Region::TopLeft,
        (1, 1) => Region::TopRight,
        (-1, -1) => Region::DownLeft,
        _ => Region::DownRight,
    }
}

/// Whether `d ∩ cell ⊇ d2 ∩ cell`.
///
/// Decided on the extreme points of the convex set `d2 ∩ cell`: cell corners
/// inside `d2`, crossings of the circle of `d2` with the cell sides, and the
/// point of that circle farthest from the center of `d` when it lies in the
/// cell. The distance to the center of `d` is convex, so its maximum over
/// `d2 ∩ cell` is attained at one of these.
pub fn disk_dominates(d: &UnitDisk, d2: &UnitDisk, cell: &Rect, tol: Tolerance) -> bool {
    if cell.dist_to(&d2.center) > d2.radius + tol.eps {
        return true;
    }
    let gap = d2.center.dist(&d.center);
    if gap <= tol.eps * 1e-3 {
        return d2.radius <= d.radius + tol.eps;
    }
    let mut extremes: Vec<Point> = cell
        .corners()
        .into_iter()
        .filter(|c| d2.contains(c, tol))
        .collect();
    for y in [cell.ymin, cell.ymax] {
        extremes.extend(
            circle_hline_intersections(d2, &HLine::new(y), tol)
                .into_iter()
                .filter(|p| p.x >= cell.xmin && p.x <= cell.xmax),
        );
    }
    for x in [cell.xmin, cell.xmax] {
        extremes.extend(
            circle_vline_intersections(d2, x, tol)
                .into_iter()
                .filter(|p| p.y >= cell.ymin && p.y <= cell.ymax),
        );
    }
    let far = Point::new(
        d2.center.x + d2.radius * (d2.center.x - d.center.x) / gap,
        d2.center.y + d2.radius * (d2.center.y - d.center.y) / gap,
    );
    if cell.contains(&far, Tolerance { eps: 0.0 }) {
        extremes.push(far);
    }
    extremes.iter().all(|p| d.contains(p, tol))
}

pub fn dominates(d: &SnappedDisk, d2: &SnappedDisk, cell: &Rect) -> bool {
    disk_dominates(&d.disk(), &d2.disk(), cell, Tolerance::default())
}

/// Candidate set for one cell.
#[derive(Debug, Clone)]
pub struct DrsSet {
    pub cell: Rect,
    pub kept: Vec<SnappedDisk>,
    pub regions: Vec<Region>,
}

impl DrsSet {
    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }
}

pub fn build_drs(snapped: &[SnappedDisk], cell: &Rect, cfg: &SnapConfig) -> DrsSet {
    let tol = Tolerance::default();
    let _ = cfg;

    // one disk per grid vertex, lowest original index
    let mut by_vertex: BTreeMap<(i64, i64), SnappedDisk> = BTreeMap::new();
    for s in snapped {
        if !s.disk().intersects_rect(cell, tol) {
            continue;
        }
        by_vertex
            .entry(s.grid)
            .and_modify(|e| {
                if s.original < e.original {
                    *e = *s;
                }
            })
            .or_insert(*s);
    }

    let mut kept: Vec<(SnappedDisk, Region)> = Vec::new();
    // nearest candidate per grid line, keyed by (region, line index)
    let mut nearest: BTreeMap<(Region, i64), SnappedDisk> = BTreeMap::new();
    for s in by_vertex.values() {
        let region = classify(&s.center, cell);
        let (line, closer): (i64, fn(&SnappedDisk, &SnappedDisk) -> bool) = match region {
            Region::Inside => {
                kept.push((*s, region));
                continue;
            }
            Region::Left | Region::TopLeft | Region::DownLeft => (s.grid.1, |a, b| a.grid.0 > b.grid.0),
            Region::Right | Region::TopRight | Region::DownRight => (s.grid.1, |a, b| a.grid.0 < b.grid.0),
            Region::Top => (s.grid.0, |a, b| a.grid.1 < b.grid.1),
            Region::Down => (s.grid.0, |a, b| a.grid.1 > b.grid.1),
        };
        nearest
            .entry((region, line))
            .and_modify(|e| {
                if closer(s, e) {
                    *e = *s;
                }
            })
            .or_insert(*s);
    }

    for (&(region, _), s) in &nearest {
        if matches!(region, Region::Left | Region::Right | Region::Top | Region::Down) {
            kept.push((*s, region));
        }
    }

    // corners: scan rows from the cell outward, dropping dominated disks
    let mut corner_kept: Vec<SnappedDisk> = Vec::new();
    for corner in [Region::TopRight, Region::TopLeft, Region::DownLeft, Region::DownRight] {
        let mut rows: Vec<&SnappedDisk> = nearest
            .iter()
            .filter(|((r, _), _)| *r == corner)
            .map(|(_, s)| s)
            .collect();
        if matches!(corner, Region::DownLeft | Region::DownRight) {
            rows.reverse();
        }
        for s in rows {
            if !corner_kept.iter().any(|k| dominates(k, s, cell)) {
                corner_kept.push(*s);
                kept.push((*s, corner));
            }
        }
    }

    kept.sort_by_key(|(s, _)| s.original);
    let (kept, regions) = kept.into_iter().unzip();
    DrsSet {
        cell: *cell,
        kept,
        regions,
    }
}

/// Minimum cover of the cell by its candidate disks, reported as indices of
/// the original unit disks.
pub fn cell_cover_exact(drs: &DrsSet, cfg: &SnapConfig) -> Result<Cover> {
    let _ = cfg;
    let tol = Tolerance::default();
    let disks: Vec<UnitDisk> = drs.kept.iter().map(SnappedDisk::disk).collect();
    let reps = sector_representatives(&drs.cell, &disks, tol, Execution::Sequential);
    if let Some(r) = reps.iter().find(|r| r.signature.is_empty()) {
        return Err(Error::CellInfeasible {
            offset: (0, 0),
            cell: drs.cell,
            witness: r.point,
        });
    }
    let (points, coverage) = reps.into_iter().map(|r| (r.point, r.signature)).unzip();
    let prob = CoverProblem::from_coverage(points, disks, coverage);
    let local = oracle::exact_min_cover(&prob, oracle::DEFAULT_BUDGET)?;
    let c = drs.cell;
    let label = format!("cell [{}, {}] x [{}, {}]", c.xmin, c.xmax, c.ymin, c.ymax);
    Ok(Cover::from_indices(
        local.disks.iter().map(|&i| drs.kept[i].original),
        &label,
    ))
}

/// Cells of the tiling shifted by `offset`, clipped to `rect`, row-major from
/// the lower left.
pub fn tiling(rect: &Rect, window: u32, offset: (u32, u32)) -> Vec<Rect> {
    let l = window as f64;
    let cuts = |lo: f64, hi: f64, off: u32| -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let mut start = lo + off as f64 - if off > 0 { l } else { 0.0 };
        while start < hi {
            let a = start.max(lo);
            let b = (start + l).min(hi);
            if b > a {
                out.push((a, b));
            }
            start += l;
        }
        out
    };
    let xs = cuts(rect.xmin, rect.xmax, offset.0);
    let ys = cuts(rect.ymin, rect.ymax, offset.1);
    ys.iter()
        .flat_map(|&(y0, y1)| xs.iter().map(move |&(x0, x1)| Rect { xmin: x0, ymin: y0, xmax: x1, ymax: y1 }))
        .collect()
}

#[derive(Debug, Clone)]
pub struct ShiftCandidate {
    pub offset: (u32, u32),
    pub cover: Cover,
}

#[derive(Debug, Clone)]
pub struct ReducedSolution {
    pub cover: Cover,
    pub offset: (u32, u32),
    pub candidates: Vec<ShiftCandidate>,
}

/// Union of exact cell covers for every shift offset, in offset order.
pub fn shift_candidates(inst: &RrcInstance, cfg: &SnapConfig, exec: Execution) -> Result<Vec<ShiftCandidate>> {
    let snapped = snap_disks(&inst.disks, cfg);
    let offsets = cfg.shift_offsets();
    let jobs: Vec<((u32, u32), Rect)> = offsets
        .iter()
        .flat_map(|&o| tiling(&inst.rect, cfg.window, o).into_iter().map(move |c| (o, c)))
        .collect();
    let covers = exec.try_map(&jobs, |(offset, cell)| {
        let drs = build_drs(&snapped, cell, cfg);
        cell_cover_exact(&drs, cfg).map_err(|e| match e {
            Error::CellInfeasible { cell, witness, .. } => Error::CellInfeasible {
                offset: *offset,
                cell,
                witness,
            },
            other => other,
        })
    })?;
    Ok(offsets
        .iter()
        .map(|&offset| {
            let mut cover = Cover::new();
            for ((o, _), c) in jobs.iter().zip(&covers) {
                if *o == offset {
                    for (d, label) in c.disks.iter().zip(&c.trace) {
                        cover.push(*d, &format!("shift ({}, {}) {label}", offset.0, offset.1));
                    }
                }
            }
            ShiftCandidate {
                offset,
                cover: cover.sorted(),
            }
        })
        .collect())
}

pub fn rrc_reduced_solve(inst: &RrcInstance, cfg: &SnapConfig, exec: Execution) -> Result<ReducedSolution> {
    let candidates = shift_candidates(inst, cfg, exec)?;
    let best = candidates
        .iter()
        .min_by(|a, b| a.cover.len().cmp(&b.cover.len()).then(a.offset.cmp(&b.offset)))
        .expect("at least one shift offset");
    Ok(ReducedSolution {
        cover: best.cover.clone(),
        offset: best.offset,
        candidates: candidates.clone(),
    })
}

pub fn rrc_reduced_cover(inst: &RrcInstance, cfg: &SnapConfig) -> Result<Cover> {
    Ok(rrc_reduced_solve(inst, cfg, Execution::default())?.cover)
}

/// Disks of the promise radius at the original centers.
pub fn promise_disks(disks: &[UnitDisk], cfg: &SnapConfig) -> Result<Vec<UnitDisk>> {
    let r = cfg.promise_radius();
    if r <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "promise radius 1 - 2 nu/sqrt(2) = {r} is not positive for nu = {}",
            cfg.nu
        )));
    }
    Ok(disks.iter().map(|d| UnitDisk::with_radius(d.center, r)).collect())
}

/// Exact minimum cover of the rectangle by the promise-radius disks, the
/// reference optimum for the reduced-radius factor.
pub fn reduced_radius_optimum(inst: &RrcInstance, cfg: &SnapConfig, budget: u64) -> Result<Cover> {
    let disks = promise_disks(&inst.disks, cfg)?;
    let reps = sector_representatives(&inst.rect, &disks, inst.tol, Execution::default());
    if let Some(r) = reps.iter().find(|r| r.signature.is_empty()) {
        return Err(Error::RegionUncovered { witness: r.point });
    }
    let (points, coverage) = reps.into_iter().map(|r| (r.point, r.signature)).unzip();
    oracle::exact_min_cover(&CoverProblem::from_coverage(points, disks, coverage), budget)
}
