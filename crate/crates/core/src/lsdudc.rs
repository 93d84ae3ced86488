//! Line-separable discrete unit disk cover.
//!
//! Points lie on or below a horizontal line and each is covered by some disk
//! centered strictly above it. The disks above the line whose lower regions
//! form the lower envelope of the union (the lower boundary chain) partition
//! the points into vertical slabs, one per chain disk. The solver then sweeps
//! the slabs left to right, each time extending the current segment as far as
//! a cover of at most `k` disks allows. Consecutive optimal segment covers
//! share at most two disks, which yields the factor `1 + 2/(k-2)`.

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::geom::{circle_circle_intersections, circle_hline_intersections, HLine, Point, Tolerance, UnitDisk};
use crate::oracle::{self, CoverProblem};

#[derive(Debug, Clone)]
pub struct LsInstance {
    pub points: Vec<Point>,
    pub disks: Vec<UnitDisk>,
    pub line: HLine,
    pub tol: Tolerance,
}

impl LsInstance {
    pub fn new(points: Vec<Point>, disks: Vec<UnitDisk>, line: HLine) -> Result<Self> {
        Self::with_tolerance(points, disks, line, Tolerance::default())
    }

    pub fn with_tolerance(
        points: Vec<Point>,
        disks: Vec<UnitDisk>,
        line: HLine,
        tol: Tolerance,
    ) -> Result<Self> {
        let inst = LsInstance {
            points,
            disks,
            line,
            tol,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        if !self.line.y.is_finite() {
            return Err(Error::InvalidInstance("line y must be finite".into()));
        }
        for (i, d) in self.disks.iter().enumerate() {
            if !d.center.is_finite() || (d.radius - 1.0).abs() > self.tol.eps {
                return Err(Error::InvalidInstance(format!(
                    "disk {i} must be a finite unit disk"
                )));
            }
        }
        for (index, p) in self.points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::InvalidInstance(format!("point {index} is not finite")));
            }
            if !self.line.is_below(p, self.tol) {
                return Err(Error::InvalidInstance(format!(
                    "point {index} lies above the separating line"
                )));
            }
            if !self.upper().any(|d| self.disks[d].contains(p, self.tol)) {
                return Err(Error::UncoveredPoint { index, point: *p });
            }
        }
        Ok(())
    }

    /// Indices of disks centered strictly above the line.
    pub fn upper(&self) -> impl Iterator<Item = usize> + '_ {
        self.disks
            .iter()
            .enumerate()
            .filter(|(_, d)| self.line.is_strictly_above(&d.center, self.tol))
            .map(|(i, _)| i)
    }

    /// Indices of disks centered on or below the line.
    pub fn lower(&self) -> impl Iterator<Item = usize> + '_ {
        self.disks
            .iter()
            .enumerate()
            .filter(|(_, d)| !self.line.is_strictly_above(&d.center, self.tol))
            .map(|(i, _)| i)
    }

    /// Chord of disk `d` on the line, if the disk reaches strictly below it.
    fn chord(&self, d: usize) -> Option<(f64, f64)> {
        let disk = &self.disks[d];
        if disk.center.y - disk.radius >= self.line.y - self.tol.eps {
            return None;
        }
        match circle_hline_intersections(disk, &self.line, self.tol).as_slice() {
            [l, r] => Some((l.x, r.x)),
            _ => None,
        }
    }

    /// Lowest y of disk `d` at abscissa `x`.
    fn bottom(&self, d: usize, x: f64) -> f64 {
        let disk = &self.disks[d];
        let dx = x - disk.center.x;
        disk.center.y - (disk.radius * disk.radius - dx * dx).max(0.0).sqrt()
    }
}

/// The lower boundary disks, left to right, with their envelope extents.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundaryChain {
    pub disks: Vec<usize>,
    /// `(left, right)` breakpoints per chain disk; empty until computed.
    pub breakpoints: Vec<(Point, Point)>,
    /// Point indices per slab; empty until computed.
    pub slabs: Vec<Vec<usize>>,
}

impl BoundaryChain {
    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }
}

/// Disks above the line that contribute an arc to the lower envelope of the
/// union below the line, ordered by their left intersection with the line.
pub fn lower_boundary_disks(inst: &LsInstance) -> Result<BoundaryChain> {
    let tol = inst.tol;
    let reaching: Vec<(usize, (f64, f64))> = inst
        .upper()
        .filter_map(|d| inst.chord(d).map(|c| (d, c)))
        .collect();
    if reaching.is_empty() {
        return Err(Error::EmptyChain);
    }

    let mut xs: Vec<f64> = reaching.iter().flat_map(|(_, (l, r))| [*l, *r]).collect();
    for (a, (da, _)) in reaching.iter().enumerate() {
        for (db, _) in &reaching[a + 1..] {
            if let Ok(pts) = circle_circle_intersections(&inst.disks[*da], &inst.disks[*db], tol) {
                xs.extend(pts.iter().filter(|p| p.y < inst.line.y).map(|p| p.x));
            }
        }
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|b, a| (*b - *a).abs() <= tol.eps);

    let mut on_envelope = vec![false; inst.disks.len()];
    for w in xs.windows(2) {
        if w[1] - w[0] <= tol.eps {
            continue;
        }
        let mid = 0.5 * (w[0] + w[1]);
        let lowest = reaching
            .iter()
            .filter(|(_, (l, r))| *l < mid && mid < *r)
            .map(|(d, _)| (*d, inst.bottom(*d, mid)))
            .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
        if let Some((d, _)) = lowest {
            on_envelope[d] = true;
        }
    }

    let mut chain: Vec<(usize, f64)> = reaching
        .iter()
        .filter(|(d, _)| on_envelope[*d])
        .map(|(d, (l, _))| (*d, *l))
        .collect();
    chain.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    Ok(BoundaryChain {
        disks: chain.into_iter().map(|(d, _)| d).collect(),
        ..Default::default()
    })
}

/// Sets the left and right breakpoint of every chain disk: the crossing with
/// the neighbouring chain disk below the line if there is one, otherwise the
/// disk's own chord endpoint on the line.
pub fn compute_breakpoints(mut chain: BoundaryChain, inst: &LsInstance) -> Result<BoundaryChain> {
    let s = chain.len();
    let crossings: Vec<Option<Point>> = (0..s.saturating_sub(1))
        .map(|i| crossing_below(inst, chain.disks[i], chain.disks[i + 1]))
        .collect::<Result<_>>()?;
    chain.breakpoints = (0..s)
        .map(|i| {
            let d = chain.disks[i];
            let (l, r) = inst
                .chord(d)
                .ok_or_else(|| Error::GeometryViolation(format!("chain disk {d} misses the line")))?;
            let left = i
                .checked_sub(1)
                .and_then(|j| crossings[j])
                .unwrap_or(Point::new(l, inst.line.y));
            let right = crossings
                .get(i)
                .copied()
                .flatten()
                .unwrap_or(Point::new(r, inst.line.y));
            Ok((left, right))
        })
        .collect::<Result<_>>()?;
    Ok(chain)
}

fn crossing_below(inst: &LsInstance, a: usize, b: usize) -> Result<Option<Point>> {
    let below: Vec<Point> = circle_circle_intersections(&inst.disks[a], &inst.disks[b], inst.tol)?
        .into_iter()
        .filter(|p| p.y < inst.line.y - inst.tol.eps)
        .collect();
    match below.as_slice() {
        [] => Ok(None),
        [p] => Ok(Some(*p)),
        _ => Err(Error::GeometryViolation(format!(
            "chain disks {a} and {b} cross twice below the line"
        ))),
    }
}

/// Assigns every point to the slab between the breakpoints of a chain disk;
/// a point on a shared slab boundary goes to the lower slab index.
pub fn partition_points(mut chain: BoundaryChain, inst: &LsInstance) -> Result<BoundaryChain> {
    if chain.breakpoints.len() != chain.len() {
        return Err(Error::InvalidParameter("breakpoints not computed".into()));
    }
    let eps = inst.tol.eps;
    let mut slabs = vec![Vec::new(); chain.len()];
    for (index, p) in inst.points.iter().enumerate() {
        let slab = chain
            .breakpoints
            .iter()
            .enumerate()
            .filter(|(_, (l, r))| l.x - eps <= p.x && p.x <= r.x + eps)
            .map(|(i, _)| i)
            .find(|&i| inst.disks[chain.disks[i]].contains(p, inst.tol))
            .ok_or(Error::UncoveredPoint { index, point: *p })?;
        slabs[slab].push(index);
    }
    chain.slabs = slabs;
    Ok(chain)
}

/// Full chain construction: envelope, breakpoints and slabs.
pub fn boundary_chain(inst: &LsInstance) -> Result<BoundaryChain> {
    let chain = lower_boundary_disks(inst)?;
    let chain = compute_breakpoints(chain, inst)?;
    partition_points(chain, inst)
}

/// Points of slabs `first..=last`.
pub fn slab_points(chain: &BoundaryChain, first: usize, last: usize) -> Vec<usize> {
    chain.slabs[first..=last].iter().flatten().copied().collect()
}

/// Largest `j >= i` such that slabs `i..=j` admit a cover by at most `k` disks
/// (from the whole disk sequence), with a minimum such cover.
pub fn max_cover_prefix(
    inst: &LsInstance,
    chain: &BoundaryChain,
    i: usize,
    k: usize,
) -> Result<(usize, Cover)> {
    if i >= chain.slabs.len() || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "slab index {i} / cover size {k} out of range"
        )));
    }
    let decide = |j: usize| -> Result<Option<Cover>> {
        let pts = slab_points(chain, i, j);
        let prob = CoverProblem::with_tolerance(
            pts.iter().map(|&p| inst.points[p]).collect(),
            inst.disks.clone(),
            inst.tol,
        );
        oracle::min_cover_at_most(&prob, k, oracle::DEFAULT_BUDGET)
    };

    let mut best = decide(i)?.ok_or_else(|| {
        Error::GeometryViolation(format!("slab {i} is not covered by its own chain disk"))
    })?;
    let (mut lo, mut hi) = (i, chain.slabs.len() - 1);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        match decide(mid)? {
            Some(c) => {
                lo = mid;
                best = c;
            }
            None => hi = mid - 1,
        }
    }
    Ok((lo, best))
}

/// Segment size bound for a target approximation slack `mu` in (0, 1].
pub fn k_for_mu(mu: f64) -> Result<usize> {
    if !(mu > 0.0 && mu <= 1.0) {
        return Err(Error::InvalidParameter(format!("mu = {mu} outside (0, 1]")));
    }
    // 1e-12 absorbs representation error in 2/mu (e.g. mu = 0.5 exactly)
    Ok(2 + (2.0 / mu - 1e-12).ceil() as usize)
}

/// Guaranteed approximation factor for segment size `k`.
pub fn guaranteed_factor(k: usize) -> f64 {
    1.0 + 2.0 / (k as f64 - 2.0)
}

pub fn lsdudc_cover(inst: &LsInstance, k: usize) -> Result<Cover> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k = {k} must be at least 3")));
    }
    let mut cover = Cover::new();
    if inst.points.is_empty() {
        return Ok(cover);
    }
    let chain = boundary_chain(inst)?;
    let mut i = 0;
    while i < chain.len() {
        let (j, part) = max_cover_prefix(inst, &chain, i, k)?;
        let label = format!("lsdudc[k={k}] slabs {i}..={j}");
        for d in part.disks {
            cover.push(d, &label);
        }
        i = j + 1;
    }
    Ok(cover)
}
