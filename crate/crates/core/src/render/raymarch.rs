//! Orthographic sphere-traced views of 3D slices.
//!
//! The filled-in set factors through the two idempotent planes, and each
//! escaping component carries an exterior distance estimate that bounds
//! its planar distance to the factor boundary from below. The smaller of
//! the two estimates is a safe step for the product set: reaching it
//! requires closing every escaped component's gap, and a unit step in
//! slice coordinates moves either component by at most sqrt(2), so any
//! step safety below 1/sqrt(2) keeps the march from tunneling through
//! the set; the default is 0.5. A ray hits where the sample classifies
//! into the filled set at a boundary thickness of one pixel.

use core::fmt;
use core::ops::{Add, Sub};

use super::{Palette, RgbImage, SliceSpec};
use crate::dynamics::{DegenerateError, IterParams, ProjectedPoly};
use crate::poly::BicomplexPoly;

const MAX_STEPS: usize = 65_536;

/// Minimal 3-vector for camera geometry in free-axis coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn axis(self, k: usize) -> f64 {
        match k {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }

    pub fn scale(self, s: f64) -> Self {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn length(self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    pub fn normalize(self) -> Option<Vec3> {
        let len = self.length();
        if len > 0.0 && len.is_finite() {
            Some(self.scale(1.0 / len))
        } else {
            None
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderMode {
    /// Classify every cell of the grid and export the volume.
    VoxelScan,
    /// March orthographic rays and emit an image.
    RayMarch,
}

/// Knobs for the image-producing renderers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub mode: RenderMode,
    /// View direction, in free-axis coordinates.
    pub camera_dir: Vec3,
    /// Approximate up direction; re-orthogonalized against the view.
    pub camera_up: Vec3,
    pub palette: Palette,
    pub background: [u8; 3],
    /// Fraction of the distance estimate consumed per step.
    pub safety: f64,
    /// Step floor; defaults to 1e-4 of the window diagonal.
    pub min_step: Option<f64>,
    /// Hit distance; defaults to the pixel pitch.
    pub hit_epsilon: Option<f64>,
    /// Image size; defaults to the transverse grid resolutions.
    pub image_size: Option<(usize, usize)>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            mode: RenderMode::RayMarch,
            camera_dir: Vec3::new(0.0, 0.0, -1.0),
            camera_up: Vec3::new(0.0, 1.0, 0.0),
            palette: Palette::default(),
            background: [0, 0, 0],
            safety: 0.5,
            min_step: None,
            hit_epsilon: None,
            image_size: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RaymarchError {
    Dynamics(DegenerateError),
    /// Ray marching needs a 3D slice.
    NotThreeDimensional(usize),
    /// View direction is zero or parallel to the up vector.
    DegenerateCamera,
}

impl fmt::Display for RaymarchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RaymarchError::Dynamics(e) => e.fmt(f),
            RaymarchError::NotThreeDimensional(n) => {
                write!(f, "ray marching needs a 3D slice, got {} free axes", n)
            }
            RaymarchError::DegenerateCamera => write!(f, "camera direction and up are parallel"),
        }
    }
}

impl core::error::Error for RaymarchError {}

impl From<DegenerateError> for RaymarchError {
    fn from(e: DegenerateError) -> Self {
        RaymarchError::Dynamics(e)
    }
}

/// Everything needed to evaluate one pixel; pixels are independent and
/// pure, so any evaluation order produces the same image.
#[derive(Debug)]
pub struct RaymarchScene<'a> {
    ctx: ProjectedPoly,
    spec: &'a SliceSpec,
    params: IterParams,
    palette: Palette,
    background: [u8; 3],
    dir: Vec3,
    right: Vec3,
    vup: Vec3,
    center: Vec3,
    lo: Vec3,
    hi: Vec3,
    half_w: f64,
    half_h: f64,
    start_dist: f64,
    safety: f64,
    min_step: f64,
    width: usize,
    height: usize,
}

impl<'a> RaymarchScene<'a> {
    pub fn new(
        p: &BicomplexPoly,
        spec: &'a SliceSpec,
        opts: &RenderOptions,
        params: &IterParams,
    ) -> Result<Self, RaymarchError> {
        if !spec.is_3d() {
            return Err(RaymarchError::NotThreeDimensional(spec.free_axes().len()));
        }
        let ctx = ProjectedPoly::prepare(p, params.tol)?;

        let dir = opts.camera_dir.normalize().ok_or(RaymarchError::DegenerateCamera)?;
        let right = dir
            .cross(opts.camera_up)
            .normalize()
            .ok_or(RaymarchError::DegenerateCamera)?;
        let vup = right.cross(dir);

        let window = spec.window();
        let lo = Vec3::new(window[0].0, window[1].0, window[2].0);
        let hi = Vec3::new(window[0].1, window[1].1, window[2].1);
        let center = (lo + hi).scale(0.5);
        let half = (hi - lo).scale(0.5);
        let support = |v: Vec3| {
            half.x * libm::fabs(v.x) + half.y * libm::fabs(v.y) + half.z * libm::fabs(v.z)
        };
        let half_w = support(right);
        let half_h = support(vup);
        let diag = (hi - lo).length();

        let (width, height) = opts.image_size.unwrap_or_else(|| {
            (
                spec.resolution()[dominant_axis(right)],
                spec.resolution()[dominant_axis(vup)],
            )
        });
        let pitch = f64::max(2.0 * half_w / width as f64, 2.0 * half_h / height as f64);
        let hit_eps = opts.hit_epsilon.unwrap_or(pitch);

        Ok(RaymarchScene {
            ctx,
            spec,
            params: IterParams {
                de_threshold: hit_eps,
                ..*params
            },
            palette: opts.palette,
            background: opts.background,
            dir,
            right,
            vup,
            center,
            lo,
            hi,
            half_w,
            half_h,
            start_dist: support(dir) + diag,
            safety: opts.safety,
            min_step: opts.min_step.unwrap_or(1e-4 * diag),
            width,
            height,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Transverse offsets of the ray through pixel center `(px, py)`,
    /// in `[-1, 1]` screen coordinates (top row has `sy` near +1).
    pub fn screen_coords(&self, px: usize, py: usize) -> (f64, f64) {
        (
            2.0 * (px as f64 + 0.5) / self.width as f64 - 1.0,
            1.0 - 2.0 * (py as f64 + 0.5) / self.height as f64,
        )
    }

    pub fn pixel(&self, px: usize, py: usize) -> [u8; 3] {
        let (sx, sy) = self.screen_coords(px, py);
        let origin = self.center
            + self.right.scale(sx * self.half_w)
            + self.vup.scale(sy * self.half_h)
            + self.dir.scale(-self.start_dist);
        let Some((t_enter, t_exit)) = self.clip(origin) else {
            return self.background;
        };

        let mut t = t_enter;
        for _ in 0..MAX_STEPS {
            if t > t_exit {
                break;
            }
            let pos = origin + self.dir.scale(t);
            let w = self.spec.point_at(&[pos.x, pos.y, pos.z]);
            let full = self.ctx.classify(w, &self.params);
            // A hit is membership in the filled set at boundary thickness
            // `hit_eps`. Near-boundary components alone do not count: rays
            // must pass through the sheets where one factor sits on its
            // boundary while the other escapes.
            if full.class.in_filled_set() {
                return self.shade(full.class, t, t_enter, t_exit);
            }
            let de3 = f64::min(
                full.orbits[0].de.unwrap_or(f64::INFINITY),
                full.orbits[1].de.unwrap_or(f64::INFINITY),
            );
            t += f64::max(self.min_step, self.safety * de3);
        }
        self.background
    }

    fn shade(&self, class: crate::dynamics::BicomplexClass, t: f64, t0: f64, t1: f64) -> [u8; 3] {
        let frac = if t1 > t0 { (t - t0) / (t1 - t0) } else { 0.0 };
        let ramp = 1.0 - 0.75 * frac.clamp(0.0, 1.0);
        let c = self.palette.color(class);
        [
            (c[0] as f64 * ramp) as u8,
            (c[1] as f64 * ramp) as u8,
            (c[2] as f64 * ramp) as u8,
        ]
    }

    fn clip(&self, origin: Vec3) -> Option<(f64, f64)> {
        let mut t0 = f64::NEG_INFINITY;
        let mut t1 = f64::INFINITY;
        for k in 0..3 {
            let o = origin.axis(k);
            let d = self.dir.axis(k);
            let (lo, hi) = (self.lo.axis(k), self.hi.axis(k));
            if libm::fabs(d) < 1e-300 {
                if o < lo || o > hi {
                    return None;
                }
            } else {
                let a = (lo - o) / d;
                let b = (hi - o) / d;
                t0 = f64::max(t0, f64::min(a, b));
                t1 = f64::min(t1, f64::max(a, b));
            }
        }
        (t0 <= t1).then_some((t0, t1))
    }
}

fn dominant_axis(v: Vec3) -> usize {
    let a = [libm::fabs(v.x), libm::fabs(v.y), libm::fabs(v.z)];
    let mut best = 0;
    for k in 1..3 {
        if a[k] > a[best] {
            best = k;
        }
    }
    best
}

/// March the whole image sequentially.
pub fn render_raymarch(
    p: &BicomplexPoly,
    spec: &SliceSpec,
    opts: &RenderOptions,
    params: &IterParams,
) -> Result<RgbImage, RaymarchError> {
    let scene = RaymarchScene::new(p, spec, opts, params)?;
    let mut img = RgbImage::new(scene.width(), scene.height(), opts.background);
    for py in 0..scene.height() {
        for px in 0..scene.width() {
            img.set(px, py, scene.pixel(px, py));
        }
    }
    Ok(img)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::Bicomplex;

    fn w_squared() -> BicomplexPoly {
        BicomplexPoly::quadratic(Bicomplex::ZERO)
    }

    fn opts_64() -> RenderOptions {
        RenderOptions {
            image_size: Some((64, 64)),
            ..RenderOptions::default()
        }
    }

    #[test]
    fn squaring_silhouette_fits_the_unit_cylinder() {
        let spec = SliceSpec::j_zero(1.5, 64).unwrap();
        let opts = opts_64();
        let scene =
            RaymarchScene::new(&w_squared(), &spec, &opts, &IterParams::default()).unwrap();
        let mut hits = 0usize;
        for py in 0..64 {
            for px in 0..64 {
                if scene.pixel(px, py) == opts.background {
                    continue;
                }
                hits += 1;
                // Camera looks down w2, so the ray origin's transverse
                // position is (w0, w1) = (sx, sy) * 1.5.
                let (sx, sy) = scene.screen_coords(px, py);
                let dist = libm::sqrt((sx * 1.5) * (sx * 1.5) + (sy * 1.5) * (sy * 1.5));
                assert!(dist <= 1.1, "hit at transverse distance {dist}");
            }
        }
        assert!(hits > 0, "silhouette must be nonempty");
    }

    #[test]
    fn far_window_renders_pure_background() {
        let spec = SliceSpec::new(
            [None, None, None, Some(0.0)],
            alloc::vec![(10.0, 11.0); 3],
            alloc::vec![16; 3],
        )
        .unwrap();
        let opts = RenderOptions {
            image_size: Some((16, 16)),
            ..RenderOptions::default()
        };
        let img =
            render_raymarch(&w_squared(), &spec, &opts, &IterParams::default()).unwrap();
        for py in 0..16 {
            for px in 0..16 {
                assert_eq!(img.get(px, py), opts.background);
            }
        }
    }

    #[test]
    fn real_parameter_images_mirror_left_right() {
        let spec = SliceSpec::j_zero(1.5, 64).unwrap();
        let p = BicomplexPoly::quadratic(Bicomplex::from_re(-1.0));
        let img = render_raymarch(&p, &spec, &opts_64(), &IterParams::default()).unwrap();
        let mut mismatches = 0usize;
        for py in 0..64 {
            for px in 0..64 {
                if img.get(px, py) != img.get(63 - px, py) {
                    mismatches += 1;
                }
            }
        }
        assert!(
            mismatches as f64 <= 0.001 * 64.0 * 64.0,
            "{mismatches} asymmetric pixels"
        );
    }

    #[test]
    fn camera_validation() {
        let spec = SliceSpec::diagonal_plane(1.5, 8).unwrap();
        let err = RaymarchScene::new(
            &w_squared(),
            &spec,
            &RenderOptions::default(),
            &IterParams::default(),
        )
        .unwrap_err();
        assert_eq!(err, RaymarchError::NotThreeDimensional(2));

        let spec3 = SliceSpec::j_zero(1.0, 8).unwrap();
        let opts = RenderOptions {
            camera_up: Vec3::new(0.0, 0.0, 1.0),
            ..RenderOptions::default()
        };
        let err =
            RaymarchScene::new(&w_squared(), &spec3, &opts, &IterParams::default()).unwrap_err();
        assert_eq!(err, RaymarchError::DegenerateCamera);
    }
}
