//! Parallel drivers for grid classification and ray marching.
//!
//! Cells and pixels are pure functions of their index, so the drivers
//! map them with an order-preserving parallel collect: the output bytes
//! are identical for any worker count, including one.

use bijulia_core::render::raymarch::RaymarchError;
use bijulia_core::{
    classify_cell, render_params, BicomplexPoly, ClassGrid, DegenerateError, IterParams,
    ProjectedPoly, RaymarchScene, RenderOptions, RgbImage, SliceSpec,
};
use rayon::prelude::*;

#[derive(Debug)]
pub enum ParError {
    Dynamics(DegenerateError),
    Raymarch(RaymarchError),
    Pool(String),
}

impl std::fmt::Display for ParError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParError::Dynamics(e) => e.fmt(f),
            ParError::Raymarch(e) => e.fmt(f),
            ParError::Pool(m) => write!(f, "thread pool: {m}"),
        }
    }
}

impl std::error::Error for ParError {}

impl From<DegenerateError> for ParError {
    fn from(e: DegenerateError) -> Self {
        ParError::Dynamics(e)
    }
}

impl From<RaymarchError> for ParError {
    fn from(e: RaymarchError) -> Self {
        ParError::Raymarch(e)
    }
}

fn pool(threads: usize) -> Result<rayon::ThreadPool, ParError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads) // 0 picks the available parallelism
        .build()
        .map_err(|e| ParError::Pool(e.to_string()))
}

/// Classify a slice on `threads` workers (0 = all available).
pub fn classify_slice_parallel(
    p: &BicomplexPoly,
    spec: &SliceSpec,
    params: &IterParams,
    threads: usize,
) -> Result<ClassGrid, ParError> {
    let ctx = ProjectedPoly::prepare(p, params.tol)?;
    let cell_params = render_params(spec, params);
    let total = spec.cell_count();
    let cells: Vec<_> = pool(threads)?.install(|| {
        (0..total)
            .into_par_iter()
            .map(|flat| classify_cell(&ctx, spec, &cell_params, flat))
            .collect()
    });
    let mut classes = Vec::with_capacity(total);
    let mut de = Vec::with_capacity(total);
    for (c, d) in cells {
        classes.push(c);
        de.push(d);
    }
    Ok(ClassGrid {
        dims: spec.resolution().to_vec(),
        classes,
        de,
    })
}

/// Ray-march an image on `threads` workers (0 = all available).
pub fn raymarch_parallel(
    p: &BicomplexPoly,
    spec: &SliceSpec,
    opts: &RenderOptions,
    params: &IterParams,
    threads: usize,
) -> Result<RgbImage, ParError> {
    let scene = RaymarchScene::new(p, spec, opts, params)?;
    let (w, h) = (scene.width(), scene.height());
    let pixels: Vec<[u8; 3]> = pool(threads)?.install(|| {
        (0..w * h)
            .into_par_iter()
            .map(|at| scene.pixel(at % w, at / w))
            .collect()
    });
    let mut data = Vec::with_capacity(3 * w * h);
    for px in pixels {
        data.extend_from_slice(&px);
    }
    Ok(RgbImage::from_raw(w, h, data).expect("driver sized the buffer"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bijulia_core::{classify_slice, render_raymarch, Bicomplex};

    #[test]
    fn parallel_grid_matches_sequential() {
        let p = BicomplexPoly::quadratic(Bicomplex::from_re(0.27));
        let spec = SliceSpec::j_zero(1.5, 9).unwrap();
        let params = IterParams::default();
        let seq = classify_slice(&p, &spec, &params).unwrap();
        for threads in [1, 3] {
            let par = classify_slice_parallel(&p, &spec, &params, threads).unwrap();
            assert_eq!(par, seq);
        }
    }

    #[test]
    fn parallel_image_matches_sequential() {
        let p = BicomplexPoly::quadratic(Bicomplex::ZERO);
        let spec = SliceSpec::j_zero(1.25, 16).unwrap();
        let opts = RenderOptions {
            image_size: Some((24, 24)),
            ..RenderOptions::default()
        };
        let params = IterParams::default();
        let seq = render_raymarch(&p, &spec, &opts, &params).unwrap();
        for threads in [1, 4] {
            let par = raymarch_parallel(&p, &spec, &opts, &params, threads).unwrap();
            assert_eq!(par.to_ppm(), seq.to_ppm());
        }
    }
}
