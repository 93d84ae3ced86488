//! General discrete unit disk cover by strip decomposition.
//!
//! The plane is cut into horizontal strips of height `1/sqrt(2)` anchored at
//! the lowest point. A point of strip `j` goes to the upward line-separable
//! part `A_j` if a disk centered above the strip covers it, else to the
//! downward part `B_j` if a disk centered below the strip covers it, else to
//! the within-strip part `W_j`. Line-separable parts are solved by
//! [`lsdudc_cover`], within-strip parts by the exact strip solver, and the
//! union of all part covers is returned.

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{HLine, Point, Tolerance, UnitDisk};
use crate::lsdudc::{self, lsdudc_cover, LsInstance};
use crate::wsdudc::{self, StripInstance};

pub const STRIP_HEIGHT: f64 = std::f64::consts::FRAC_1_SQRT_2;

#[derive(Debug, Clone)]
pub struct DudcInstance {
    pub points: Vec<Point>,
    pub disks: Vec<UnitDisk>,
    pub tol: Tolerance,
}

impl DudcInstance {
    pub fn new(points: Vec<Point>, disks: Vec<UnitDisk>) -> Result<Self> {
        Self::with_tolerance(points, disks, Tolerance::default())
    }

    pub fn with_tolerance(points: Vec<Point>, disks: Vec<UnitDisk>, tol: Tolerance) -> Result<Self> {
        for (i, d) in disks.iter().enumerate() {
            if !d.center.is_finite() || (d.radius - 1.0).abs() > tol.eps {
                return Err(Error::InvalidInstance(format!(
                    "disk {i} must be a finite unit disk"
                )));
            }
        }
        for (index, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::InvalidInstance(format!("point {index} is not finite")));
            }
            if !disks.iter().any(|d| d.contains(p, tol)) {
                return Err(Error::Infeasible { index, point: *p });
            }
        }
        Ok(DudcInstance { points, disks, tol })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    /// Covered from above the strip; line-separable with the strip top.
    Upward,
    /// Covered from below the strip; line-separable with the strip bottom
    /// after reflection.
    Downward,
    /// Covered only by disks centered inside the strip.
    Within,
}

/// A sub-instance with maps from its local indices to the parent instance.
#[derive(Debug, Clone)]
pub struct SubInstance<I> {
    pub strip: i64,
    pub instance: I,
    pub point_map: Vec<usize>,
    pub disk_map: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct StripDecomposition {
    pub height: f64,
    pub origin: f64,
    pub upward: Vec<SubInstance<LsInstance>>,
    /// Reflected downward parts. Coordinates are relative to the strip
    /// bottom (which becomes the line `y = 0`) and negated, so the reflection
    /// is exactly invertible.
    pub downward: Vec<SubInstance<LsInstance>>,
    pub within: Vec<SubInstance<StripInstance>>,
    /// Per parent point: its strip and part.
    pub assignment: Vec<(i64, Part)>,
}

impl StripDecomposition {
    pub fn bottom(&self, strip: i64) -> f64 {
        self.origin + strip as f64 * self.height
    }

    pub fn top(&self, strip: i64) -> f64 {
        self.origin + (strip + 1) as f64 * self.height
    }

    pub fn parts(&self) -> usize {
        self.upward.len() + self.downward.len() + self.within.len()
    }
}

/// Mirror image of `p` across `line`.
pub fn reflect_across(p: Point, line: HLine) -> Point {
    Point::new(p.x, 2.0 * line.y - p.y)
}

pub fn strip_decompose(inst: &DudcInstance) -> Result<StripDecomposition> {
    let tol = inst.tol;
    let h = STRIP_HEIGHT;
    let origin = inst
        .points
        .iter()
        .map(|p| p.y)
        .fold(f64::INFINITY, f64::min);
    let mut dec = StripDecomposition {
        height: h,
        origin: if origin.is_finite() { origin } else { 0.0 },
        upward: Vec::new(),
        downward: Vec::new(),
        within: Vec::new(),
        assignment: Vec::with_capacity(inst.points.len()),
    };

    for (index, p) in inst.points.iter().enumerate() {
        let mut j = ((p.y - dec.origin) / h).floor() as i64;
        while p.y >= dec.top(j) {
            j += 1;
        }
        while p.y < dec.bottom(j) {
            j -= 1;
        }
        let top = HLine::new(dec.top(j));
        let bottom = HLine::new(dec.bottom(j));
        let covering = inst.disks.iter().filter(|d| d.contains(p, tol));
        let mut part = None;
        for d in covering {
            if top.is_strictly_above(&d.center, tol) {
                part = Some(Part::Upward);
                break;
            }
            if d.center.y < bottom.y - tol.eps {
                part = Some(Part::Downward);
            }
        }
        let part = match part {
            Some(p) => p,
            None if inst.disks.iter().any(|d| d.contains(p, tol)) => Part::Within,
            None => return Err(Error::Infeasible { index, point: *p }),
        };
        dec.assignment.push((j, part));
    }

    let mut groups: Vec<(i64, Part)> = dec.assignment.clone();
    groups.sort();
    groups.dedup();
    for (strip, part) in groups {
        let point_map: Vec<usize> = (0..inst.points.len())
            .filter(|&i| dec.assignment[i] == (strip, part))
            .collect();
        let disk_map: Vec<usize> = (0..inst.disks.len())
            .filter(|&d| point_map.iter().any(|&p| inst.disks[d].contains(&inst.points[p], tol)))
            .collect();
        let pts = point_map.iter().map(|&p| inst.points[p]);
        let dks = disk_map.iter().map(|&d| inst.disks[d]);
        match part {
            Part::Upward => {
                let line = HLine::new(dec.top(strip));
                let instance = LsInstance::with_tolerance(pts.collect(), dks.collect(), line, tol)?;
                dec.upward.push(SubInstance {
                    strip,
                    instance,
                    point_map,
                    disk_map,
                });
            }
            Part::Downward => {
                let b = dec.bottom(strip);
                let flip = |q: Point| Point::new(q.x, -(q.y - b));
                let instance = LsInstance::with_tolerance(
                    pts.map(flip).collect(),
                    dks.map(|d| UnitDisk::with_radius(flip(d.center), d.radius)).collect(),
                    HLine::new(0.0),
                    tol,
                )?;
                dec.downward.push(SubInstance {
                    strip,
                    instance,
                    point_map,
                    disk_map,
                });
            }
            Part::Within => {
                let instance = StripInstance::with_tolerance(
                    pts.collect(),
                    dks.collect(),
                    HLine::new(dec.bottom(strip)),
                    HLine::new(dec.top(strip)),
                    tol,
                )?;
                dec.within.push(SubInstance {
                    strip,
                    instance,
                    point_map,
                    disk_map,
                });
            }
        }
    }
    Ok(dec)
}

/// Segment size used for the line-separable parts at slack `epsilon`:
/// `mu = epsilon / 6`, `k = 2 + ceil(2 / mu)`.
pub fn k_for_epsilon(epsilon: f64) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon <= 6.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon = {epsilon} outside (0, 6]"
        )));
    }
    lsdudc::k_for_mu(epsilon / 6.0)
}

pub fn guaranteed_factor(epsilon: f64) -> f64 {
    9.0 + epsilon
}

pub fn dudc_cover(inst: &DudcInstance, epsilon: f64) -> Result<Cover> {
    dudc_cover_with(inst, epsilon, Execution::default())
}

enum Task<'a> {
    Ls(&'a SubInstance<LsInstance>, &'static str),
    Strip(&'a SubInstance<StripInstance>),
}

pub fn dudc_cover_with(inst: &DudcInstance, epsilon: f64, exec: Execution) -> Result<Cover> {
    let k = k_for_epsilon(epsilon)?;
    let dec = strip_decompose(inst)?;
    let tasks: Vec<Task> = dec
        .upward
        .iter()
        .map(|s| Task::Ls(s, "A"))
        .chain(dec.downward.iter().map(|s| Task::Ls(s, "B")))
        .chain(dec.within.iter().map(Task::Strip))
        .collect();
    let parts = exec.try_map(&tasks, |task| -> Result<Cover> {
        let (strip, tag, local, map) = match task {
            Task::Ls(sub, tag) => (sub.strip, *tag, lsdudc_cover(&sub.instance, k)?, &sub.disk_map),
            Task::Strip(sub) => (
                sub.strip,
                "W",
                wsdudc::strip_cover(&sub.instance, wsdudc::DEFAULT_BUDGET)?,
                &sub.disk_map,
            ),
        };
        let mut c = local.remap(map);
        for label in c.trace.iter_mut() {
            *label = format!("{tag}{strip}: {label}");
        }
        Ok(c)
    })?;
    let mut cover = Cover::new();
    for part in &parts {
        cover.extend(part);
    }
    Ok(cover.sorted())
}
