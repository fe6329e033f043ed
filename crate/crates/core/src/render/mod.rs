//! Sampling of 2D and 3D slices of the four-dimensional dynamical space
//! and their classification into class grids, images and voxel volumes.

pub mod formats;
pub mod raymarch;

use alloc::vec::Vec;
use core::fmt;

use crate::bicomplex::Bicomplex;
use crate::dynamics::{
    BicomplexClass, DegenerateError, IterParams, PointClassification, ProjectedPoly,
};
use crate::poly::BicomplexPoly;

pub use formats::RgbImage;
pub use raymarch::{render_raymarch, RaymarchScene, RenderMode, RenderOptions, Vec3};

/// Map from class labels to display colors, all five cells covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Palette {
    colors: [[u8; 3]; 5],
}

impl Palette {
    pub fn color(&self, class: BicomplexClass) -> [u8; 3] {
        self.colors[class.ordinal() as usize]
    }

    pub fn set_color(&mut self, class: BicomplexClass, rgb: [u8; 3]) {
        self.colors[class.ordinal() as usize] = rgb;
    }
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            colors: [
                [245, 245, 245], // J2
                [200, 70, 60],   // K2_INTERIOR
                [70, 120, 200],  // F2_BOUNDED
                [130, 90, 170],  // F2_UNBOUNDED_MIXED
                [15, 18, 32],    // F2_UNBOUNDED
            ],
        }
    }
}

/// A rectangular sampling window through the space `w0 + w1 i1 + w2 i2 + w3 j`:
/// one or two axes pinned to fixed values, the rest gridded.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceSpec {
    fixed: [Option<f64>; 4],
    free: Vec<usize>,
    window: Vec<(f64, f64)>,
    resolution: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceSpecError {
    /// Slices must leave two or three axes free.
    FreeAxisCount(usize),
    /// Window and resolution lists must match the free axis count.
    ShapeMismatch,
    /// Every axis needs at least two samples.
    ResolutionTooLow(usize),
    /// Window bounds must be strictly increasing.
    EmptyWindow(usize),
}

impl fmt::Display for SliceSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceSpecError::FreeAxisCount(n) => {
                write!(f, "slice must leave 2 or 3 axes free, has {}", n)
            }
            SliceSpecError::ShapeMismatch => {
                write!(f, "window and resolution must cover each free axis once")
            }
            SliceSpecError::ResolutionTooLow(n) => {
                write!(f, "resolution must be at least 2 per axis, got {}", n)
            }
            SliceSpecError::EmptyWindow(axis) => {
                write!(f, "window on axis w{} is empty", axis)
            }
        }
    }
}

impl core::error::Error for SliceSpecError {}

impl SliceSpec {
    /// `fixed[k] = Some(v)` pins axis `w_k` to `v`; `window` and
    /// `resolution` describe the remaining axes in ascending axis order.
    pub fn new(
        fixed: [Option<f64>; 4],
        window: Vec<(f64, f64)>,
        resolution: Vec<usize>,
    ) -> Result<Self, SliceSpecError> {
        let free: Vec<usize> = (0..4).filter(|&k| fixed[k].is_none()).collect();
        if free.len() < 2 || free.len() > 3 {
            return Err(SliceSpecError::FreeAxisCount(free.len()));
        }
        if window.len() != free.len() || resolution.len() != free.len() {
            return Err(SliceSpecError::ShapeMismatch);
        }
        for &n in &resolution {
            if n < 2 {
                return Err(SliceSpecError::ResolutionTooLow(n));
            }
        }
        for (k, &(lo, hi)) in window.iter().enumerate() {
            if !(lo < hi) {
                return Err(SliceSpecError::EmptyWindow(free[k]));
            }
        }
        Ok(SliceSpec {
            fixed,
            free,
            window,
            resolution,
        })
    }

    /// The 3D slice with the `j` coefficient pinned to zero, cubic window
    /// `[-half, half]` and uniform resolution.
    pub fn j_zero(half: f64, res: usize) -> Result<Self, SliceSpecError> {
        SliceSpec::new(
            [None, None, None, Some(0.0)],
            alloc::vec![(-half, half); 3],
            alloc::vec![res; 3],
        )
    }

    /// The 2D plane `w2 = w3 = 0` (both idempotent components equal), a
    /// square window and uniform resolution.
    pub fn diagonal_plane(half: f64, res: usize) -> Result<Self, SliceSpecError> {
        SliceSpec::new(
            [None, None, Some(0.0), Some(0.0)],
            alloc::vec![(-half, half); 2],
            alloc::vec![res; 2],
        )
    }

    /// Free axis indices, ascending.
    pub fn free_axes(&self) -> &[usize] {
        &self.free
    }

    pub fn window(&self) -> &[(f64, f64)] {
        &self.window
    }

    pub fn resolution(&self) -> &[usize] {
        &self.resolution
    }

    pub fn is_3d(&self) -> bool {
        self.free.len() == 3
    }

    pub fn cell_count(&self) -> usize {
        self.resolution.iter().product()
    }

    /// Sample pitch along one free axis (endpoint linspace).
    pub fn pitch(&self, free_pos: usize) -> f64 {
        let (lo, hi) = self.window[free_pos];
        (hi - lo) / (self.resolution[free_pos] - 1) as f64
    }

    pub fn max_pitch(&self) -> f64 {
        (0..self.free.len())
            .map(|k| self.pitch(k))
            .fold(0.0, f64::max)
    }

    /// Coordinate of sample `i` along free axis `free_pos`. Endpoints are
    /// included, and symmetric windows sample symmetrically.
    pub fn coord(&self, free_pos: usize, i: usize) -> f64 {
        let (lo, hi) = self.window[free_pos];
        lo + (hi - lo) * (i as f64 / (self.resolution[free_pos] - 1) as f64)
    }

    /// The sample point for a flat cell index. Cells enumerate row-major
    /// with the lowest free axis fastest.
    pub fn cell_point(&self, mut flat: usize) -> Bicomplex {
        let mut coords = [0.0f64; 4];
        for (k, &axis) in self.free.iter().enumerate() {
            let n = self.resolution[k];
            coords[axis] = self.coord(k, flat % n);
            flat /= n;
        }
        self.embed(&coords)
    }

    /// Embed free-axis coordinates (ascending axis order) as a point.
    pub fn point_at(&self, free_coords: &[f64]) -> Bicomplex {
        let mut coords = [0.0f64; 4];
        for (k, &axis) in self.free.iter().enumerate() {
            coords[axis] = free_coords[k];
        }
        self.embed(&coords)
    }

    fn embed(&self, coords: &[f64; 4]) -> Bicomplex {
        let mut full = *coords;
        for (k, fixed) in self.fixed.iter().enumerate() {
            if let Some(v) = fixed {
                full[k] = *v;
            }
        }
        Bicomplex::from_reals(full[0], full[1], full[2], full[3])
    }
}

/// Classified cells of a slice, with the per-cell exterior distance
/// estimate where one exists.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassGrid {
    pub dims: Vec<usize>,
    pub classes: Vec<BicomplexClass>,
    /// Smallest exterior estimate among escaped components, infinity for
    /// cells with both orbits bounded.
    pub de: Vec<f64>,
}

impl ClassGrid {
    pub fn index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut flat = 0;
        for (k, &i) in idx.iter().enumerate().rev() {
            debug_assert!(i < self.dims[k]);
            flat = flat * self.dims[k] + i;
        }
        flat
    }

    pub fn class_at(&self, idx: &[usize]) -> BicomplexClass {
        self.classes[self.index(idx)]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Cell tallies indexed by class ordinal.
    pub fn class_counts(&self) -> [usize; 5] {
        let mut counts = [0usize; 5];
        for &c in &self.classes {
            counts[c.ordinal() as usize] += 1;
        }
        counts
    }
}

/// Parameters actually used when classifying a slice: the boundary
/// threshold tracks the grid, half the largest cell pitch.
pub fn render_params(spec: &SliceSpec, params: &IterParams) -> IterParams {
    IterParams {
        de_threshold: 0.5 * spec.max_pitch(),
        ..*params
    }
}

/// Classify one cell; pure, so cells may be evaluated in any order or
/// concurrently with identical results.
pub fn classify_cell(
    ctx: &ProjectedPoly,
    spec: &SliceSpec,
    params: &IterParams,
    flat: usize,
) -> (BicomplexClass, f64) {
    let full = ctx.classify(spec.cell_point(flat), params);
    (full.class, cell_de(&full))
}

fn cell_de(full: &PointClassification) -> f64 {
    let d1 = full.orbits[0].de.unwrap_or(f64::INFINITY);
    let d2 = full.orbits[1].de.unwrap_or(f64::INFINITY);
    f64::min(d1, d2)
}

/// Classify every cell of the slice sequentially.
pub fn classify_slice(
    p: &BicomplexPoly,
    spec: &SliceSpec,
    params: &IterParams,
) -> Result<ClassGrid, DegenerateError> {
    let ctx = ProjectedPoly::prepare(p, params.tol)?;
    let params = render_params(spec, params);
    let total = spec.cell_count();
    let mut classes = Vec::with_capacity(total);
    let mut de = Vec::with_capacity(total);
    for flat in 0..total {
        let (c, d) = classify_cell(&ctx, spec, &params, flat);
        classes.push(c);
        de.push(d);
    }
    Ok(ClassGrid {
        dims: spec.resolution.clone(),
        classes,
        de,
    })
}

/// Render a 2D class grid as an image, one pixel per cell, highest second
/// axis at the top row. Returns `None` for 3D grids.
pub fn image_from_grid(grid: &ClassGrid, palette: &Palette) -> Option<RgbImage> {
    if grid.dims.len() != 2 {
        return None;
    }
    let (w, h) = (grid.dims[0], grid.dims[1]);
    let mut img = RgbImage::new(w, h, [0, 0, 0]);
    for row in 0..h {
        let j = h - 1 - row;
        for i in 0..w {
            img.set(i, row, palette.color(grid.classes[i + w * j]));
        }
    }
    Some(img)
}
