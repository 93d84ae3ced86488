//! Solvers for geometric unit-disk covering.
//!
//! * [`lsdudc`]: line-separable discrete unit disk cover, a PTAS driven by the
//!   lower envelope of the disks above a horizontal line.
//! * [`dudc`]: general discrete unit disk cover, decomposed into horizontal
//!   strips whose parts are line-separable or confined to the strip.
//! * [`sectors`]: rectangular region cover reduced to point cover through one
//!   representative point per face of the disk arrangement.
//! * [`reduced`]: region cover in the reduced-radius setting, via grid
//!   snapping, per-cell candidate pruning and the shifting strategy.
//! * [`oracle`]: exact minimum cover over a finite point set, used as ground
//!   truth when auditing approximation factors.
//!
//! Data-parallel loops (sub-instances, shift offsets, coverage sampling) run
//! on rayon when the `parallel` feature is enabled and sequentially otherwise;
//! see [`Execution`].

pub mod cover;
pub mod dudc;
pub mod error;
pub mod exec;
pub mod geom;
pub mod lsdudc;
pub mod oracle;
pub mod reduced;
pub mod sectors;
pub mod wsdudc;

pub use cover::Cover;
pub use error::{Error, Result};
pub use exec::Execution;
pub use geom::{HLine, Point, Rect, Tolerance, UnitDisk};
