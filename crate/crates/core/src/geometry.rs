//! Planar regions, the discus, and cartesian product sets in idempotent
//! coordinates, plus the deterministic samplers the tests and renderer use.

use alloc::vec::Vec;

use crate::bicomplex::{Bicomplex, IdempotentPair};
use crate::complex::Complex;
use crate::Proj;

/// Golden angle in radians; drives the spiral sampler.
const GOLDEN_ANGLE: f64 = 2.399963229728653;

/// An open ball in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball1 {
    pub center: Complex,
    pub radius: f64,
}

impl Ball1 {
    pub fn new(center: Complex, radius: f64) -> Self {
        debug_assert!(radius > 0.0);
        Ball1 { center, radius }
    }

    #[inline]
    pub fn contains(&self, z: Complex) -> bool {
        (z - self.center).abs() < self.radius
    }

    #[inline]
    pub fn contains_closed(&self, z: Complex) -> bool {
        (z - self.center).abs() <= self.radius
    }
}

/// An axis-aligned rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect1 {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Rect1 {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Self {
        debug_assert!(re_min < re_max && im_min < im_max);
        Rect1 {
            re_min,
            re_max,
            im_min,
            im_max,
        }
    }

    pub fn center(&self) -> Complex {
        Complex::new(
            0.5 * (self.re_min + self.re_max),
            0.5 * (self.im_min + self.im_max),
        )
    }

    #[inline]
    pub fn contains(&self, z: Complex) -> bool {
        z.re > self.re_min && z.re < self.re_max && z.im > self.im_min && z.im < self.im_max
    }

    #[inline]
    pub fn contains_closed(&self, z: Complex) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }
}

/// A planar factor region: ball or axis-aligned rectangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PlanarRegion {
    Ball(Ball1),
    Rect(Rect1),
}

impl PlanarRegion {
    pub fn center(&self) -> Complex {
        match self {
            PlanarRegion::Ball(b) => b.center,
            PlanarRegion::Rect(r) => r.center(),
        }
    }

    /// Strict (open) membership.
    pub fn contains(&self, z: Complex) -> bool {
        match self {
            PlanarRegion::Ball(b) => b.contains(z),
            PlanarRegion::Rect(r) => r.contains(z),
        }
    }

    /// Closed membership.
    pub fn contains_closed(&self, z: Complex) -> bool {
        match self {
            PlanarRegion::Ball(b) => b.contains_closed(z),
            PlanarRegion::Rect(r) => r.contains_closed(z),
        }
    }

    /// `count` deterministic points of the closed region.
    ///
    /// Point 0 is the center; the rest walk a golden-angle spiral that
    /// reaches the region border (the inscribed ellipse, for rectangles)
    /// at the last index. Enumeration order is stable across runs.
    pub fn sample(&self, count: usize) -> Vec<Complex> {
        let center = self.center();
        let (half_re, half_im) = match self {
            PlanarRegion::Ball(b) => (b.radius, b.radius),
            PlanarRegion::Rect(r) => {
                (0.5 * (r.re_max - r.re_min), 0.5 * (r.im_max - r.im_min))
            }
        };
        (0..count)
            .map(|m| {
                if m == 0 {
                    return center;
                }
                let t = m as f64 / (count - 1) as f64;
                let angle = m as f64 * GOLDEN_ANGLE;
                Complex::new(
                    center.re + half_re * t * libm::cos(angle),
                    center.im + half_im * t * libm::sin(angle),
                )
            })
            .collect()
    }
}

/// The discus `D(a; r1, r2)`: the cartesian product, in idempotent
/// coordinates, of two open balls centered at the projections of `a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Discus {
    pub center: Bicomplex,
    pub r1: f64,
    pub r2: f64,
}

impl Discus {
    pub fn new(center: Bicomplex, r1: f64, r2: f64) -> Self {
        debug_assert!(r1 > 0.0 && r2 > 0.0);
        Discus { center, r1, r2 }
    }

    /// The projected factor ball for one idempotent component.
    pub fn ball(&self, which: Proj) -> Ball1 {
        let radius = match which {
            Proj::P1 => self.r1,
            Proj::P2 => self.r2,
        };
        Ball1::new(self.center.project(which), radius)
    }

    /// Strict membership: both idempotent components of `w - center`
    /// lie inside the respective balls.
    pub fn contains(&self, w: Bicomplex) -> bool {
        let p = (w - self.center).to_idempotent();
        p.w1.abs() < self.r1 && p.w2.abs() < self.r2
    }

    /// Closed-discus membership.
    pub fn contains_closed(&self, w: Bicomplex) -> bool {
        let p = (w - self.center).to_idempotent();
        p.w1.abs() <= self.r1 && p.w2.abs() <= self.r2
    }

    pub fn to_cartesian(&self) -> TCartesian {
        TCartesian {
            region1: PlanarRegion::Ball(self.ball(Proj::P1)),
            region2: PlanarRegion::Ball(self.ball(Proj::P2)),
        }
    }
}

/// A cartesian product set in idempotent coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TCartesian {
    pub region1: PlanarRegion,
    pub region2: PlanarRegion,
}

impl TCartesian {
    pub fn new(region1: PlanarRegion, region2: PlanarRegion) -> Self {
        TCartesian { region1, region2 }
    }

    /// The stored factor region for one projection.
    pub fn project_region(&self, which: Proj) -> &PlanarRegion {
        match which {
            Proj::P1 => &self.region1,
            Proj::P2 => &self.region2,
        }
    }

    pub fn contains(&self, w: Bicomplex) -> bool {
        let p = w.to_idempotent();
        self.region1.contains(p.w1) && self.region2.contains(p.w2)
    }

    pub fn contains_closed(&self, w: Bicomplex) -> bool {
        let p = w.to_idempotent();
        self.region1.contains_closed(p.w1) && self.region2.contains_closed(p.w2)
    }

    /// Deterministic `n1 x n2` tensor grid: every pairing of the factor
    /// samples, recombined through the idempotent representation.
    /// Row-major: the second factor varies fastest.
    pub fn sample_grid(&self, n1: usize, n2: usize) -> Vec<Bicomplex> {
        let s1 = self.region1.sample(n1);
        let s2 = self.region2.sample(n2);
        let mut out = Vec::with_capacity(n1 * n2);
        for &w1 in &s1 {
            for &w2 in &s2 {
                out.push(Bicomplex::from_idempotent(IdempotentPair::new(w1, w2)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::IdempotentPair;

    fn unit_discus() -> Discus {
        Discus::new(Bicomplex::ZERO, 1.0, 1.0)
    }

    fn from_pair(w1: Complex, w2: Complex) -> Bicomplex {
        Bicomplex::from_idempotent(IdempotentPair::new(w1, w2))
    }

    #[test]
    fn discus_contains_center_and_respects_componentwise_radii() {
        let d = unit_discus();
        assert!(d.contains(Bicomplex::ZERO));

        let inside = from_pair(Complex::from_re(0.999), Complex::ZERO);
        assert!(d.contains(inside));
        let outside = from_pair(Complex::from_re(1.001), Complex::ZERO);
        assert!(!d.contains(outside));
    }

    #[test]
    fn projected_balls() {
        let d = Discus::new(Bicomplex::ZERO, 1.0, 2.0);
        let b2 = d.ball(Proj::P2);
        assert_eq!(b2.center, Complex::ZERO);
        assert_eq!(b2.radius, 2.0);

        // Center 1 + i2 projects to 1 -+ i1.
        let d = Discus::new(Bicomplex::ONE + Bicomplex::I2, 0.5, 0.5);
        assert_eq!(d.ball(Proj::P1).center, Complex::new(1.0, -1.0));
        assert_eq!(d.ball(Proj::P2).center, Complex::new(1.0, 1.0));
    }

    #[test]
    fn membership_factors_through_projections() {
        let d = Discus::new(Bicomplex::from_reals(0.2, -0.1, 0.3, 0.05), 0.8, 1.3);
        let t = d.to_cartesian();
        for w in t.sample_grid(7, 7) {
            let p = w.to_idempotent();
            let by_balls =
                d.ball(Proj::P1).contains(p.w1) && d.ball(Proj::P2).contains(p.w2);
            assert_eq!(d.contains(w), by_balls);
        }
        // A point outside one factor only.
        let w = from_pair(
            d.ball(Proj::P1).center + Complex::from_re(0.9),
            d.ball(Proj::P2).center,
        );
        assert!(!d.contains(w));
    }

    #[test]
    fn disc_membership_implies_norm_bound_but_not_conversely() {
        let r = 1.0;
        let d = Discus::new(Bicomplex::ZERO, r, r);
        for w in d.to_cartesian().sample_grid(9, 9) {
            if d.contains(w) {
                assert!(w.norm() < r);
            }
        }
        // Witness for the failed converse: |w1| = 1.4r, |w2| = 0 has
        // norm sqrt(1.96/2) r < r yet lies outside the disc.
        let w = from_pair(Complex::from_re(1.4 * r), Complex::ZERO);
        assert!(w.norm() < r);
        assert!(!d.contains(w));
    }

    #[test]
    fn grid_sampling_basics() {
        let t = unit_discus().to_cartesian();

        let single = t.sample_grid(1, 1);
        assert_eq!(single, alloc::vec![Bicomplex::ZERO]);

        let grid = t.sample_grid(3, 3);
        assert_eq!(grid.len(), 9);
        assert!(grid.iter().any(|&w| w == Bicomplex::ZERO));
        for &w in &grid {
            assert!(t.contains_closed(w));
        }

        // Stable enumeration.
        assert_eq!(grid, t.sample_grid(3, 3));
    }

    #[test]
    fn rect_regions_sample_inside() {
        let r = PlanarRegion::Rect(Rect1::new(-2.0, 1.0, 0.5, 3.0));
        let pts = r.sample(16);
        assert_eq!(pts[0], r.center());
        for &z in &pts {
            assert!(r.contains_closed(z));
        }
    }
}
