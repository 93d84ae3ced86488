//! Command-line front end for the `diskcover` solvers: instance files,
//! generators, solve/verify commands and SVG output.

pub mod app;
pub mod generate;
pub mod instance;
pub mod render;
pub mod solve;
