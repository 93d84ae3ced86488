//! Solver dispatch, oracle comparison and coverage verification.

use crate::instance::{FileError, InstanceFile, Kind};
use diskcover::dudc::{self, DudcInstance};
use diskcover::lsdudc::{self, LsInstance};
use diskcover::oracle::{exact_min_cover, CoverProblem};
use diskcover::reduced::{self, rrc_reduced_solve, SnapConfig};
use diskcover::sectors::{rrc_cover_with, sector_representatives, verify_region_coverage_with, RrcInstance, Verification};
use diskcover::{Cover, Execution, HLine, Point, Tolerance};
use serde_json::{json, Map, Value};
use std::time::Instant;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Gen(#[from] crate::generate::GenError),
    #[error("{name}: {source}", name = .source.name())]
    Solver {
        #[from]
        source: diskcover::Error,
    },
    #[error("VerificationFailed: point ({}, {}) is not covered", .0.x, .0.y)]
    Uncovered(Point),
    #[error("ValidationError: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use diskcover::Error as E;
        match self {
            CliError::File(FileError::Io(_)) => 1,
            CliError::File(_) | CliError::Usage(_) => 2,
            CliError::Gen(crate::generate::GenError::Parameter(_)) => 2,
            CliError::Gen(crate::generate::GenError::Failed(_)) => 3,
            CliError::Uncovered(_) => 3,
            CliError::Solver { source } => match source {
                E::InvalidInstance(_) | E::InvalidParameter(_) => 2,
                E::UncoveredPoint { .. } | E::Infeasible { .. } | E::RegionUncovered { .. } | E::CellInfeasible { .. } => 3,
                E::BudgetExceeded { .. } => 4,
                E::CoincidentCircles | E::EmptyChain | E::GeometryViolation(_) => 1,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub epsilon: f64,
    pub k: usize,
    pub nu: Option<f64>,
    pub window: u32,
    pub oracle: bool,
    pub samples: usize,
    pub seed: u64,
    pub budget: u64,
    pub exec: Execution,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            epsilon: 3.0,
            k: 4,
            nu: None,
            window: SnapConfig::DEFAULT_WINDOW,
            oracle: false,
            samples: 100_000,
            seed: 0,
            budget: diskcover::oracle::DEFAULT_BUDGET,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub kind: Kind,
    pub cover: Cover,
    pub params: Map<String, Value>,
    pub guaranteed_factor: f64,
    pub oracle_size: Option<usize>,
    pub shift: Option<(u32, u32)>,
    pub verification: Option<(usize, u64)>,
    pub wall_time_s: f64,
}

impl SolveReport {
    pub fn ratio(&self) -> Option<f64> {
        self.oracle_size.map(|o| if o == 0 { 1.0 } else { self.cover.len() as f64 / o as f64 })
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind.name()));
        m.insert("cover".into(), json!(self.cover.disks));
        m.insert("size".into(), json!(self.cover.len()));
        m.insert("trace".into(), json!(self.cover.trace));
        m.insert("params".into(), Value::Object(self.params.clone()));
        m.insert("guaranteed_factor".into(), json!(self.guaranteed_factor));
        if let Some(o) = self.oracle_size {
            m.insert("oracle_size".into(), json!(o));
            m.insert("ratio".into(), json!(self.ratio()));
        }
        if let Some((ox, oy)) = self.shift {
            m.insert("shift".into(), json!([ox, oy]));
        }
        if let Some((samples, seed)) = self.verification {
            m.insert("verification".into(), json!({"samples": samples, "seed": seed}));
        }
        m.insert("wall_time_s".into(), json!(self.wall_time_s));
        Value::Object(m)
    }
}

fn ls_instance(file: &InstanceFile) -> Result<LsInstance, CliError> {
    let line = file
        .line
        .ok_or_else(|| CliError::Usage(format!("{} instance has no \"line\"; lsdudc needs one", file.kind)))?;
    Ok(LsInstance::new(file.points().to_vec(), file.unit_disks(), HLine::new(line))?)
}

fn require_points(file: &InstanceFile, solver: Kind) -> Result<(), CliError> {
    if file.points.is_none() {
        return Err(CliError::Usage(format!("{solver} needs a point instance, got {}", file.kind)));
    }
    Ok(())
}

fn require_rect(file: &InstanceFile, solver: Kind) -> Result<RrcInstance, CliError> {
    if file.rect.is_none() {
        return Err(CliError::Usage(format!("{solver} needs a region instance, got {}", file.kind)));
    }
    Ok(file.rrc())
}

pub fn snap_config(file: &InstanceFile, opts: &SolveOptions) -> Result<SnapConfig, CliError> {
    let nu = opts
        .nu
        .or(file.nu)
        .ok_or_else(|| CliError::Usage("rrc-reduced needs --nu or a \"nu\" field".into()))?;
    Ok(SnapConfig::new(nu, opts.window)?)
}

/// Runs `solver` on `file`, optionally the oracle, and checks the cover
/// before returning it.
pub fn solve(solver: Kind, file: &InstanceFile, opts: &SolveOptions) -> Result<SolveReport, CliError> {
    let start = Instant::now();
    let mut params = Map::new();
    let mut shift = None;
    let (cover, factor) = match solver {
        Kind::Lsdudc => {
            let inst = ls_instance(file)?;
            params.insert("k".into(), json!(opts.k));
            (lsdudc::lsdudc_cover(&inst, opts.k)?, lsdudc::guaranteed_factor(opts.k))
        }
        Kind::Dudc => {
            require_points(file, solver)?;
            let inst = DudcInstance::new(file.points().to_vec(), file.unit_disks())?;
            params.insert("epsilon".into(), json!(opts.epsilon));
            params.insert("k".into(), json!(dudc::k_for_epsilon(opts.epsilon)?));
            (dudc::dudc_cover_with(&inst, opts.epsilon, opts.exec)?, dudc::guaranteed_factor(opts.epsilon))
        }
        Kind::Rrc => {
            let inst = require_rect(file, solver)?;
            params.insert("epsilon".into(), json!(opts.epsilon));
            params.insert("k".into(), json!(dudc::k_for_epsilon(opts.epsilon)?));
            (rrc_cover_with(&inst, opts.epsilon, opts.exec)?, dudc::guaranteed_factor(opts.epsilon))
        }
        Kind::RrcReduced => {
            let inst = require_rect(file, solver)?;
            let cfg = snap_config(file, opts)?;
            params.insert("nu".into(), json!(cfg.nu));
            params.insert("window".into(), json!(cfg.window));
            let sol = rrc_reduced_solve(&inst, &cfg, opts.exec)?;
            shift = Some(sol.offset);
            (sol.cover, cfg.guaranteed_factor())
        }
    };

    let verification = if solver.is_region() {
        check_cover(file, &cover.disks, opts.samples, opts.seed, opts.exec)?;
        Some((opts.samples, opts.seed))
    } else {
        check_cover(file, &cover.disks, 0, 0, opts.exec)?;
        None
    };

    let oracle_size = if opts.oracle {
        Some(oracle_size(solver, file, opts)?)
    } else {
        None
    };

    let report = SolveReport {
        kind: solver,
        cover,
        params,
        guaranteed_factor: factor,
        oracle_size,
        shift,
        verification,
        wall_time_s: start.elapsed().as_secs_f64(),
    };
    if let Some(r) = report.ratio() {
        if r > factor {
            log::warn!("empirical ratio {r:.4} exceeds the guaranteed factor {factor:.4}");
        }
    }
    Ok(report)
}

/// Exact optimum: over the points, or over the sector representatives of the
/// rectangle (at the promise radius for `rrc-reduced`).
pub fn oracle_size(solver: Kind, file: &InstanceFile, opts: &SolveOptions) -> Result<usize, CliError> {
    let size = match solver {
        Kind::Lsdudc | Kind::Dudc => {
            exact_min_cover(&CoverProblem::new(file.points().to_vec(), file.unit_disks()), opts.budget)?.len()
        }
        Kind::Rrc => {
            let inst = file.rrc();
            let reps = sector_representatives(&inst.rect, &inst.disks, inst.tol, opts.exec);
            if let Some(r) = reps.iter().find(|r| r.signature.is_empty()) {
                return Err(diskcover::Error::RegionUncovered { witness: r.point }.into());
            }
            let (points, coverage) = reps.into_iter().map(|r| (r.point, r.signature)).unzip();
            exact_min_cover(&CoverProblem::from_coverage(points, inst.disks, coverage), opts.budget)?.len()
        }
        Kind::RrcReduced => {
            let cfg = snap_config(file, opts)?;
            reduced::reduced_radius_optimum(&file.rrc(), &cfg, opts.budget)?.len()
        }
    };
    Ok(size)
}

/// Checks that `cover` (indices into the file's disks) covers the instance:
/// every point exactly, or the rectangle by sampling plus sector
/// representatives.
pub fn check_cover(file: &InstanceFile, cover: &[usize], samples: usize, seed: u64, exec: Execution) -> Result<(), CliError> {
    let disks = file.unit_disks();
    if let Some(&bad) = cover.iter().find(|&&d| d >= disks.len()) {
        return Err(CliError::Usage(format!("cover index {bad} out of range for {} disks", disks.len())));
    }
    let chosen: Vec<_> = cover.iter().map(|&d| disks[d]).collect();
    let tol = Tolerance::default();
    if let Some(rect) = file.rect {
        if let Verification::Witness(p) = verify_region_coverage_with(&rect, &chosen, samples.max(1), seed, tol, exec)? {
            return Err(CliError::Uncovered(p));
        }
    }
    if let Some(p) = file.points().iter().find(|p| !chosen.iter().any(|d| d.contains(p, tol))) {
        return Err(CliError::Uncovered(*p));
    }
    Ok(())
}

/// Offset of the chosen tiling shift.
pub type Shift = (u32, u32);

/// Cover indices and shift offset from a report written by [`solve`].
pub fn read_report(text: &str) -> Result<(Vec<usize>, Option<Shift>), CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| FileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let cover = v
        .get("cover")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Usage("report has no \"cover\" array".into()))?
        .iter()
        .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| CliError::Usage(format!("bad cover index {d}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let shift = v.get("shift").and_then(Value::as_array).and_then(|s| match s.as_slice() {
        [a, b] => Some((a.as_u64()? as u32, b.as_u64()? as u32)),
        _ => None,
    });
    Ok((cover, shift))
}
