use crate::generate::{generate, GenParams, Mode};
use crate::instance::{to_canonical, write_atomic, InstanceFile, Kind};
use crate::render::{render_svg, Overlay};
use crate::solve::{check_cover, read_report, snap_config, solve, CliError, SolveOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use diskcover::Execution;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "diskcover", version, about = "Unit disk cover solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Lsdudc,
    Dudc,
    Rrc,
    RrcReduced,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Lsdudc => Kind::Lsdudc,
            KindArg::Dudc => Kind::Dudc,
            KindArg::Rrc => Kind::Rrc,
            KindArg::RrcReduced => Kind::RrcReduced,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Uniform,
    LineSeparable,
    Strip,
    Region,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Uniform => Mode::Uniform,
            ModeArg::LineSeparable => Mode::LineSeparable,
            ModeArg::Strip => Mode::Strip,
            ModeArg::Region => Mode::Region,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random instance
    Gen {
        kind: KindArg,
        #[arg(long)]
        mode: Option<ModeArg>,
        #[arg(short, long, default_value_t = 20)]
        n: usize,
        #[arg(short, long, default_value_t = 10)]
        m: usize,
        #[arg(long, default_value_t = 4.0)]
        extent: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grid pitch for rrc-reduced instances
        #[arg(long, default_value_t = 0.5)]
        nu: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve an instance and write a report
    Solve {
        solver: KindArg,
        #[command(flatten)]
        args: SolveArgs,
    },
    /// Check a report's cover against its instance
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        report: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw an instance, optionally with the cover from a report
    Render {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = diskcover::reduced::SnapConfig::DEFAULT_WINDOW)]
        window: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 3.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long, default_value_t = diskcover::reduced::SnapConfig::DEFAULT_WINDOW)]
    pub window: u32,
    /// Also compute the exact optimum and report the ratio
    #[arg(long)]
    pub oracle: bool,
    /// Random points tested when verifying region covers
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write an SVG of the instance and cover
    #[arg(long)]
    pub render: Option<PathBuf>,
    /// Run single-threaded
    #[arg(long)]
    pub sequential: bool,
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_atomic(p, text).map_err(|e| CliError::File(e.into())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<InstanceFile, CliError> {
    let mut file = InstanceFile::load(path)?;
    let removed = file.dedup_disks();
    if !removed.is_empty() {
        log::warn!("dropped duplicate disks {removed:?}; later indices shift down");
    }
    Ok(file)
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Gen {
            kind,
            mode,
            n,
            m,
            extent,
            seed,
            nu,
            output,
        } => {
            let kind = Kind::from(*kind);
            let params = GenParams {
                kind,
                mode: mode.map(Mode::from).unwrap_or(Mode::default_for(kind)),
                n: *n,
                m: *m,
                extent: *extent,
                seed: *seed,
                nu: *nu,
            };
            emit(output.as_deref(), &generate(&params)?.to_json())
        }
        Command::Solve { solver, args } => {
            let solver = Kind::from(*solver);
            let file = load(&args.input)?;
            let exec = if args.sequential { Execution::Sequential } else { Execution::default() };
            let opts = SolveOptions {
                epsilon: args.epsilon,
                k: args.k,
                nu: args.nu,
                window: args.window,
                oracle: args.oracle,
                samples: args.samples,
                seed: args.seed,
                exec,
                ..SolveOptions::default()
            };
            let report = solve(solver, &file, &opts)?;
            if let Some(svg) = &args.render {
                let overlay = Overlay {
                    cover: report.cover.disks.clone(),
                    cells: report.shift.map(|o| (args.window, o)),
                };
                write_atomic(svg, &render_svg(&file, &overlay)).map_err(|e| CliError::File(e.into()))?;
            }
            emit(args.output.as_deref(), &to_canonical(&report.to_value()))
        }
        Command::Verify {
            input,
            report,
            samples,
            seed,
        } => {
            let file = load(input)?;
            let text = std::fs::read_to_string(report).map_err(|e| CliError::File(e.into()))?;
            let (cover, _) = read_report(&text)?;
            check_cover(&file, &cover, *samples, *seed, Execution::default())?;
            println!("ok: {} disks cover the {} instance", cover.len(), file.kind);
            Ok(())
        }
        Command::Render {
            input,
            report,
            window,
            output,
        } => {
            let file = load(input)?;
            let mut overlay = Overlay::default();
            if let Some(r) = report {
                let text = std::fs::read_to_string(r).map_err(|e| CliError::File(e.into()))?;
                let (cover, shift) = read_report(&text)?;
                overlay.cover = cover;
                overlay.cells = shift.map(|o| (*window, o));
            } else if file.kind == Kind::RrcReduced {
                // without a report, draw the unshifted tiling
                let opts = SolveOptions {
                    window: *window,
                    ..SolveOptions::default()
                };
                overlay.cells = Some((snap_config(&file, &opts)?.window, (0, 0)));
            }
            emit(output.as_deref(), &render_svg(&file, &overlay))
        }
    }
}
