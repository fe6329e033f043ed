use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bijulia::commands::{self, CliError, RenderArgs};
use bijulia::config::{Config, Overrides, Settings};
use bijulia::parse::parse_rgb;

/// Bicomplex Julia set toolkit: classify points, inspect orbits, render
/// slices, and verify the algebra.
#[derive(Parser)]
#[command(name = "bijulia", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Config file with `key = value` lines.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Orbit length bound.
    #[arg(long)]
    max_iter: Option<u32>,
    /// Boundary thickness for standalone classification.
    #[arg(long)]
    de_threshold: Option<f64>,
    /// Multiplier on derived escape radii.
    #[arg(long)]
    escape_safety: Option<f64>,
    /// Worker threads (0 = all available). Results are identical for any
    /// thread count.
    #[arg(long)]
    threads: Option<usize>,
    /// Sampling window, `lo:hi` or per-axis `lo:hi,lo:hi[,lo:hi]`.
    #[arg(long)]
    window: Option<String>,
    /// Samples per axis, `n` or per-axis `n,n[,n]`.
    #[arg(long)]
    res: Option<String>,
    /// Background color as RRGGBB hex.
    #[arg(long)]
    background: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one bicomplex point under a polynomial.
    Classify {
        /// `quad c=<bc>` or `coeffs <bc>...`, plus `point=<bc>`, where
        /// `<bc>` is `(re,i1,i2,j)` or `e1e2(re,im;re,im)`.
        #[arg(required = true)]
        spec: Vec<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Print the first n orbit states and the escape verdict.
    Orbit {
        /// Polynomial spec plus `point=<bc>` and `n=<steps>`.
        #[arg(required = true)]
        spec: Vec<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Render a slice: 2D to PPM, 3D to a voxel volume or a ray-marched PPM.
    Render {
        /// Polynomial spec (`quad c=<bc>` or `coeffs <bc>...`).
        #[arg(required = true)]
        spec: Vec<String>,
        /// Pinned axes, e.g. `j=0` or `w2=0,w3=0`.
        #[arg(long, default_value = "j=0")]
        slice: String,
        /// `voxel` (scan the grid) or `ray` (march an image).
        #[arg(long, default_value = "voxel")]
        mode: String,
        /// View axis for ray marching: w0/w1/w2 with optional +/-.
        #[arg(long)]
        camera: Option<String>,
        /// Output file.
        #[arg(short, long, value_name = "PATH")]
        out: PathBuf,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Run the built-in verification suites.
    Verify {
        /// One of: algebra, klein, idempotent, oracle, symmetry.
        #[arg(long)]
        suite: Option<String>,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Print the resolved settings (flag > config file > default).
    Config {
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn settings_from(common: &CommonFlags) -> Result<Settings, CliError> {
    let config = match &common.config {
        Some(path) => Config::load(path).map_err(|e| CliError::Parse(e.to_string()))?,
        None => Config::default(),
    };
    let background = match &common.background {
        Some(hex) => Some(parse_rgb(hex)?),
        None => None,
    };
    let flags = Overrides {
        max_iter: common.max_iter,
        de_threshold: common.de_threshold,
        escape_safety: common.escape_safety,
        resolution: common.res.clone(),
        window: common.window.clone(),
        threads: common.threads,
        background,
    };
    Ok(Settings::resolve(&flags, &config))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { spec, common } => {
            commands::cmd_classify(spec, &settings_from(&common)?)
        }
        Command::Orbit { spec, common } => commands::cmd_orbit(spec, &settings_from(&common)?),
        Command::Render {
            spec,
            slice,
            mode,
            camera,
            out,
            common,
        } => {
            let settings = settings_from(&common)?;
            let args = RenderArgs {
                slice,
                window: common.window.clone(),
                resolution: common.res.clone(),
                mode,
                camera,
                out,
            };
            commands::cmd_render(spec, &args, &settings)
        }
        Command::Verify {
            suite,
            seed,
            common,
        } => {
            settings_from(&common)?;
            commands::cmd_verify(suite.as_deref(), seed)
        }
        Command::Config { common } => commands::cmd_config(&settings_from(&common)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code() as u8)
        }
    }
}
