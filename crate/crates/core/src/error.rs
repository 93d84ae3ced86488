use crate::geom::{Point, Rect};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coincident circles: centers and radii equal within tolerance")]
    CoincidentCircles,

    #[error("no disk centered above the line reaches below it")]
    EmptyChain,

    #[error("geometry violation: {0}")]
    GeometryViolation(String),

    #[error("point {index} at ({x}, {y}) falls in no slab of the lower boundary", x = point.x, y = point.y)]
    UncoveredPoint { index: usize, point: Point },

    #[error("point {index} at ({x}, {y}) is not covered by any disk", x = point.x, y = point.y)]
    Infeasible { index: usize, point: Point },

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("region not covered: witness ({x}, {y})", x = witness.x, y = witness.y)]
    RegionUncovered { witness: Point },

    #[error(
        "cell [{x0}, {x1}] x [{y0}, {y1}] at offset ({ox}, {oy}) cannot be covered: witness ({wx}, {wy})",
        x0 = cell.xmin, x1 = cell.xmax, y0 = cell.ymin, y1 = cell.ymax,
        ox = offset.0, oy = offset.1, wx = witness.x, wy = witness.y
    )]
    CellInfeasible {
        offset: (u32, u32),
        cell: Rect,
        witness: Point,
    },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable variant name, used for CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::CoincidentCircles => "CoincidentCircles",
            Error::EmptyChain => "EmptyChain",
            Error::GeometryViolation(_) => "GeometryViolation",
            Error::UncoveredPoint { .. } => "UncoveredPoint",
            Error::Infeasible { .. } => "Infeasible",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::RegionUncovered { .. } => "RegionUncovered",
            Error::CellInfeasible { .. } => "CellInfeasible",
            Error::InvalidInstance(_) => "InvalidInstance",
            Error::InvalidParameter(_) => "InvalidParameter",
        }
    }
}
