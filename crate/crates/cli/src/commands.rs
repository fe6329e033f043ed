//! Command implementations. Every data line printed here is stable
//! across runs: no timestamps, no machine-dependent values.

use std::path::Path;

use bijulia_core::render::formats::encode_voxels;
use bijulia_core::render::raymarch::RaymarchError;
use bijulia_core::{
    classify_bicomplex_full, image_from_grid, orbit_bicomplex, ClassGrid, DegenerateError,
    IterParams, Proj, RenderMode, RenderOptions, SliceSpecError, Vec3,
};

use crate::config::Settings;
use crate::par::{classify_slice_parallel, raymarch_parallel, ParError};
use crate::parse::{
    parse_camera, parse_poly, parse_resolution, parse_slice, parse_window, take_count,
    take_point, ParseError,
};
use crate::verify::{run_suite, SUITES};

/// Command failures carrying their exit code: 1 verification failure,
/// 2 parse error, 3 degenerate polynomial, 4 IO error.
#[derive(Debug)]
pub enum CliError {
    Verify,
    Parse(String),
    Degenerate(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Verify => 1,
            CliError::Parse(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Verify => "verification failed".to_string(),
            CliError::Parse(m) => m.clone(),
            CliError::Degenerate(m) => m.clone(),
            CliError::Io(m) => m.clone(),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<DegenerateError> for CliError {
    fn from(e: DegenerateError) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

impl From<SliceSpecError> for CliError {
    fn from(e: SliceSpecError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<ParError> for CliError {
    fn from(e: ParError) -> Self {
        match e {
            ParError::Dynamics(d) => CliError::Degenerate(d.to_string()),
            ParError::Raymarch(RaymarchError::Dynamics(d)) => CliError::Degenerate(d.to_string()),
            ParError::Raymarch(other) => CliError::Parse(other.to_string()),
            ParError::Pool(m) => CliError::Io(m),
        }
    }
}

fn fmt_de(de: Option<f64>) -> String {
    match de {
        Some(d) if d.is_finite() => format!("{d:.6e}"),
        _ => "inf".to_string(),
    }
}

/// `classify <poly-spec> point=<literal>`: one line of class evidence.
pub fn cmd_classify(mut tokens: Vec<String>, settings: &Settings) -> Result<(), CliError> {
    let point = take_point(&mut tokens, "point")?;
    let poly = parse_poly(&tokens)?;
    let params = settings.iter_params();
    let full = classify_bicomplex_full(&poly, point, &params)?;
    println!(
        "p1={} p2={}",
        poly.project(Proj::P1),
        poly.project(Proj::P2)
    );
    println!(
        "class={} c1={} c2={} iters={},{} de={},{}",
        full.class,
        full.components[0],
        full.components[1],
        full.orbits[0].iters,
        full.orbits[1].iters,
        fmt_de(full.orbits[0].de),
        fmt_de(full.orbits[1].de),
    );
    Ok(())
}

/// `orbit <poly-spec> point=<literal> n=<steps>`: the first `n` orbit
/// states (seed first) and the escape verdict.
pub fn cmd_orbit(mut tokens: Vec<String>, settings: &Settings) -> Result<(), CliError> {
    let point = take_point(&mut tokens, "point")?;
    let n = take_count(&mut tokens, "n")?;
    let poly = parse_poly(&tokens)?;
    let params = IterParams {
        max_iter: n,
        ..settings.iter_params()
    };
    // Validate before printing anything.
    let verdict = orbit_bicomplex(&poly, point, &params)?;

    let mut w = point;
    for step in 0..n {
        let [w0, w1, w2, w3] = w.to_reals();
        println!("step={step} w=({w0},{w1},{w2},{w3}) norm={}", w.norm());
        w = poly.eval_direct(w);
    }
    println!(
        "verdict={} iters={}",
        if verdict.escaped { "escaped" } else { "bounded" },
        verdict.iters
    );
    Ok(())
}

fn class_summary(grid: &ClassGrid) -> String {
    let counts = grid.class_counts();
    format!(
        "cells={} j2={} k2_interior={} f2_bounded={} f2_unbounded_mixed={} f2_unbounded={}",
        grid.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        counts[4]
    )
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub struct RenderArgs {
    pub slice: String,
    pub window: Option<String>,
    pub resolution: Option<String>,
    pub mode: String,
    pub camera: Option<String>,
    pub out: std::path::PathBuf,
}

/// `render <poly-spec> --slice ... -o <path>`: classify a 2D slice into
/// a PPM, a 3D slice into a voxel volume, or ray-march a 3D slice.
pub fn cmd_render(
    tokens: Vec<String>,
    args: &RenderArgs,
    settings: &Settings,
) -> Result<(), CliError> {
    let poly = parse_poly(&tokens)?;
    let fixed = parse_slice(&args.slice)?;
    let free_count = fixed.iter().filter(|v| v.is_none()).count();
    let window = parse_window(args.window.as_ref().unwrap_or(&settings.window), free_count)?;
    let resolution = parse_resolution(
        args.resolution.as_ref().unwrap_or(&settings.resolution),
        free_count,
    )?;
    let spec = bijulia_core::SliceSpec::new(fixed, window, resolution)?;
    let params = settings.iter_params();

    let mode = match args.mode.as_str() {
        "voxel" | "voxel-scan" => RenderMode::VoxelScan,
        "ray" | "ray-march" => RenderMode::RayMarch,
        other => return Err(CliError::Parse(format!("unknown mode `{other}`"))),
    };

    if !spec.is_3d() {
        let grid = classify_slice_parallel(&poly, &spec, &params, settings.threads)?;
        let img = image_from_grid(&grid, &settings.palette).expect("2D grid");
        write_file(&args.out, &img.to_ppm())?;
        println!("{}", class_summary(&grid));
        println!("wrote {}", args.out.display());
        return Ok(());
    }

    match mode {
        RenderMode::VoxelScan => {
            let grid = classify_slice_parallel(&poly, &spec, &params, settings.threads)?;
            let bytes = encode_voxels(&grid).expect("3D grid");
            write_file(&args.out, &bytes)?;
            println!("{}", class_summary(&grid));
            println!("wrote {}", args.out.display());
        }
        RenderMode::RayMarch => {
            let (dir, up) = camera_basis(&spec, args.camera.as_deref())?;
            let opts = RenderOptions {
                mode,
                camera_dir: dir,
                camera_up: up,
                palette: settings.palette,
                background: settings.background,
                ..RenderOptions::default()
            };
            let img = raymarch_parallel(&poly, &spec, &opts, &params, settings.threads)?;
            let hits = (0..img.height())
                .flat_map(|y| (0..img.width()).map(move |x| (x, y)))
                .filter(|&(x, y)| img.get(x, y) != settings.background)
                .count();
            write_file(&args.out, &img.to_ppm())?;
            println!(
                "image={}x{} hits={hits} background={}",
                img.width(),
                img.height(),
                img.width() * img.height() - hits
            );
            println!("wrote {}", args.out.display());
        }
    }
    Ok(())
}

fn camera_basis(
    spec: &bijulia_core::SliceSpec,
    camera: Option<&str>,
) -> Result<(Vec3, Vec3), CliError> {
    let free = spec.free_axes();
    let (pos, sign) = match camera {
        Some(s) => parse_camera(s, free)?,
        // Default: look along the negative last free axis (w2 for the
        // j = 0 slice).
        None => (free.len() - 1, -1.0),
    };
    let unit = |k: usize| {
        Vec3::new(
            if k == 0 { 1.0 } else { 0.0 },
            if k == 1 { 1.0 } else { 0.0 },
            if k == 2 { 1.0 } else { 0.0 },
        )
    };
    let dir = unit(pos).scale(sign);
    // Up: the highest remaining free slot keeps the default view upright.
    let up_pos = (0..3).rev().find(|&k| k != pos).unwrap();
    Ok((dir, unit(up_pos)))
}

/// `verify [--suite name] [--seed n]`: run the named suites (all by
/// default) and report one line each.
pub fn cmd_verify(suite: Option<&str>, seed: u64) -> Result<(), CliError> {
    let chosen: Vec<&str> = match suite {
        Some(name) => {
            if !SUITES.contains(&name) {
                return Err(CliError::Parse(format!(
                    "unknown suite `{name}` (want one of {})",
                    SUITES.join(", ")
                )));
            }
            vec![SUITES.iter().copied().find(|&s| s == name).unwrap()]
        }
        None => SUITES.to_vec(),
    };
    let mut failed = false;
    for name in chosen {
        let outcome = run_suite(name, seed).expect("suite name validated");
        match outcome.result {
            Ok(detail) => println!("suite {name}: PASS ({detail})"),
            Err(detail) => {
                failed = true;
                println!("suite {name}: FAIL ({detail})");
            }
        }
    }
    if failed {
        Err(CliError::Verify)
    } else {
        Ok(())
    }
}

/// `config`: dump the resolved settings.
pub fn cmd_config(settings: &Settings) -> Result<(), CliError> {
    print!("{}", settings.dump());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_polynomials_map_to_exit_3() {
        let tokens: Vec<String> = ["quad", "c=(0,0,0,0)", "point=(0,0,0,0)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // e1 w^2: leading coefficient on the null-cone.
        let degen: Vec<String> = [
            "coeffs",
            "(0,0,0,0)",
            "(0,0,0,0)",
            "(0.5,0,0,0.5)",
            "point=(0,0,0,0)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let settings = Settings::default();
        assert!(cmd_classify(tokens, &settings).is_ok());
        let err = cmd_classify(degen, &settings).unwrap_err();
        assert_eq!(err.code(), 3);
    }

    #[test]
    fn missing_point_maps_to_exit_2() {
        let tokens: Vec<String> = ["quad", "c=(0,0,0,0)"].iter().map(|s| s.to_string()).collect();
        let err = cmd_classify(tokens, &Settings::default()).unwrap_err();
        assert_eq!(err.code(), 2);
    }
}
