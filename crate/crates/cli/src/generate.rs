//! Seeded instance generators. Every mode builds a feasible instance by
//! construction or rejection and fails after a bounded number of retries.

use crate::instance::{InstanceFile, Kind, Meta};
use diskcover::reduced::{promise_disks, SnapConfig};
use diskcover::sectors::sector_representatives;
use diskcover::{Execution, Point, Rect, Tolerance, UnitDisk};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

const RETRIES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Uniform,
    LineSeparable,
    Strip,
    Region,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Uniform => "uniform",
            Mode::LineSeparable => "line-separable",
            Mode::Strip => "strip",
            Mode::Region => "region",
        }
    }

    pub fn default_for(kind: Kind) -> Mode {
        match kind {
            Kind::Lsdudc => Mode::LineSeparable,
            Kind::Dudc => Mode::Uniform,
            Kind::Rrc | Kind::RrcReduced => Mode::Region,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Mode::Uniform, Mode::LineSeparable, Mode::Strip, Mode::Region]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown generator mode {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub kind: Kind,
    pub mode: Mode,
    pub n: usize,
    pub m: usize,
    pub extent: f64,
    pub seed: u64,
    pub nu: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("GenerationFailed: {0}")]
    Failed(String),
    #[error("InvalidParameter: {0}")]
    Parameter(String),
}

pub fn generate(p: &GenParams) -> Result<InstanceFile, GenError> {
    if !(p.extent.is_finite() && p.extent > 0.0) {
        return Err(GenError::Parameter(format!("extent {} must be positive", p.extent)));
    }
    let allowed = match p.kind {
        Kind::Lsdudc => p.mode == Mode::LineSeparable,
        Kind::Dudc => matches!(p.mode, Mode::Uniform | Mode::LineSeparable | Mode::Strip),
        Kind::Rrc | Kind::RrcReduced => p.mode == Mode::Region,
    };
    if !allowed {
        return Err(GenError::Parameter(format!("mode {} does not produce {} instances", p.mode, p.kind)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut file = match p.mode {
        Mode::Uniform => points_in_union(p, &mut rng, 0.0, p.extent, 0.0, p.extent, 0.0, p.extent)?,
        Mode::Strip => {
            let h = diskcover::wsdudc::MAX_STRIP_HEIGHT;
            points_in_union(p, &mut rng, 0.0, h, 0.0, h, 0.0, p.extent)?
        }
        Mode::LineSeparable => {
            // disks strictly above y = 0, points strictly below
            let mut f = points_in_union(p, &mut rng, 1e-3, 1.0, -1.0, -1e-3, 0.0, p.extent)?;
            if p.kind == Kind::Lsdudc {
                f.line = Some(0.0);
            }
            f
        }
        Mode::Region => region(p, &mut rng)?,
    };
    file.meta = Meta {
        generator: Some(p.mode.name().to_owned()),
        seed: Some(p.seed),
    };
    Ok(file)
}

/// `m` disk centers with y in `[dy0, dy1]`, then `n` points with y in
/// `[py0, py1]` drawn uniformly from the part of the box covered by the disks.
#[allow(clippy::too_many_arguments)]
fn points_in_union(
    p: &GenParams,
    rng: &mut ChaCha8Rng,
    dy0: f64,
    dy1: f64,
    py0: f64,
    py1: f64,
    x0: f64,
    x1: f64,
) -> Result<InstanceFile, GenError> {
    if p.n > 0 && p.m == 0 {
        return Err(GenError::Failed("points cannot be covered without disks".into()));
    }
    let tol = Tolerance::default();
    let centers: Vec<Point> = (0..p.m)
        .map(|_| Point::new(rng.gen_range(x0..=x1), rng.gen_range(dy0..=dy1)))
        .collect();
    let disks: Vec<UnitDisk> = centers.iter().map(|c| UnitDisk::unit(c.x, c.y)).collect();
    let mut points = Vec::with_capacity(p.n);
    let mut draws = 0usize;
    while points.len() < p.n {
        draws += 1;
        if draws > RETRIES * (p.n + 1) * 10 {
            return Err(GenError::Failed(format!(
                "disks cover too little of the box to place {} points",
                p.n
            )));
        }
        let q = Point::new(rng.gen_range(x0..=x1), rng.gen_range(py0..=py1));
        if disks.iter().any(|d| d.contains(&q, tol)) {
            points.push(q);
        }
    }
    let kind = p.kind;
    let mut f = InstanceFile::new(kind, centers);
    f.points = Some(points);
    Ok(f)
}

/// A jittered covering grid of disks of the working radius (1 for `rrc`,
/// `1 - 2 nu/sqrt(2)` for `rrc-reduced`) over `[0, extent]^2`, padded with
/// random disks up to `m`; retried until the union covers the rectangle.
fn region(p: &GenParams, rng: &mut ChaCha8Rng) -> Result<InstanceFile, GenError> {
    let rect = Rect::new(0.0, 0.0, p.extent, p.extent).map_err(|e| GenError::Parameter(e.to_string()))?;
    let cfg = match p.kind {
        Kind::RrcReduced => Some(SnapConfig::new(p.nu, SnapConfig::DEFAULT_WINDOW).map_err(|e| GenError::Parameter(e.to_string()))?),
        _ => None,
    };
    let radius = match &cfg {
        Some(c) if c.promise_radius() <= 0.0 => {
            return Err(GenError::Failed(format!(
                "promise radius {} is not positive for nu = {}",
                c.promise_radius(),
                p.nu
            )))
        }
        Some(c) => c.promise_radius(),
        None => 1.0,
    };
    let cells = (p.extent / (radius * std::f64::consts::SQRT_2 * 0.95)).ceil() as usize;
    if cells * cells > p.m {
        return Err(GenError::Failed(format!(
            "m = {} disks of radius {radius:.4} cannot be placed to cover a {} x {} square; need at least {}",
            p.m,
            p.extent,
            p.extent,
            cells * cells
        )));
    }
    let step = p.extent / cells as f64;
    let tol = Tolerance::default();
    for _ in 0..RETRIES {
        let jitter = 0.02 * step;
        let mut centers: Vec<Point> = Vec::with_capacity(p.m);
        for i in 0..cells {
            for j in 0..cells {
                centers.push(Point::new(
                    (i as f64 + 0.5) * step + rng.gen_range(-jitter..=jitter),
                    (j as f64 + 0.5) * step + rng.gen_range(-jitter..=jitter),
                ));
            }
        }
        while centers.len() < p.m {
            centers.push(Point::new(
                rng.gen_range(-radius..=p.extent + radius),
                rng.gen_range(-radius..=p.extent + radius),
            ));
        }
        let unit: Vec<UnitDisk> = centers.iter().map(|c| UnitDisk::unit(c.x, c.y)).collect();
        let working = match &cfg {
            Some(c) => promise_disks(&unit, c).map_err(|e| GenError::Parameter(e.to_string()))?,
            None => unit,
        };
        let reps = sector_representatives(&rect, &working, tol, Execution::default());
        if reps.iter().all(|r| !r.signature.is_empty()) {
            let mut f = InstanceFile::new(p.kind, centers);
            f.rect = Some(rect);
            f.nu = cfg.map(|c| c.nu);
            return Ok(f);
        }
    }
    Err(GenError::Failed(format!("no covering placement found in {RETRIES} attempts")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kind: Kind, n: usize, m: usize, extent: f64, seed: u64) -> GenParams {
        GenParams {
            kind,
            mode: Mode::default_for(kind),
            n,
            m,
            extent,
            seed,
            nu: 0.5,
        }
    }

    #[test]
    fn same_seed_same_file() {
        for kind in Kind::ALL {
            let (n, m, e) = if kind.is_region() { (0, 20, 1.2) } else { (10, 6, 3.0) };
            let a = generate(&params(kind, n, m, e, 42)).unwrap().to_json();
            let b = generate(&params(kind, n, m, e, 42)).unwrap().to_json();
            assert_eq!(a, b, "{kind}");
            let c = generate(&params(kind, n, m, e, 43)).unwrap().to_json();
            assert_ne!(a, c, "{kind}");
        }
    }

    #[test]
    fn outputs_validate() {
        for seed in 0..20 {
            for kind in Kind::ALL {
                let (n, m, e) = if kind.is_region() { (0, 20, 1.2) } else { (12, 8, 4.0) };
                let f = generate(&params(kind, n, m, e, seed)).unwrap();
                f.validate().unwrap();
                assert_eq!(f.disks.len(), m);
            }
        }
    }

    #[test]
    fn infeasible_parameters_fail() {
        assert!(matches!(generate(&params(Kind::Dudc, 3, 0, 2.0, 1)), Err(GenError::Failed(_))));
        assert!(matches!(generate(&params(Kind::Rrc, 0, 2, 5.0, 1)), Err(GenError::Failed(_))));
        let mut p = params(Kind::RrcReduced, 0, 50, 1.0, 1);
        p.nu = 1.0;
        assert!(matches!(generate(&p), Err(GenError::Failed(_))));
        p.mode = Mode::Uniform;
        assert!(matches!(generate(&p), Err(GenError::Parameter(_))));
    }
}
