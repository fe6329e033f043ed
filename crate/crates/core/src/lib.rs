//! Bicomplex arithmetic and the dynamics of bicomplex polynomials.
//!
//! The crate builds up in layers:
//!
//! - [`complex`] and [`bicomplex`]: the scalar planes, the commutative
//!   four-dimensional algebra, its three conjugations, square moduli,
//!   norm, inverse, null-cone and idempotent decomposition;
//! - [`geometry`]: balls, rectangles, the discus and cartesian product
//!   sets in idempotent coordinates, with deterministic samplers;
//! - [`poly`]: complex and bicomplex polynomials, projections,
//!   derivatives, degeneracy and escape radii;
//! - [`dynamics`]: escape-time orbits with distance estimates and the
//!   classification of points into Julia, filled-interior and stable
//!   cells;
//! - [`render`]: slice grids, orthographic ray marching, and the PPM and
//!   voxel byte formats.
//!
//! Everything here is `no_std` (with `alloc`) and purely functional:
//! values are immutable, results depend only on arguments, and any
//! evaluation order over grid cells or pixels produces identical bytes.

#![no_std]

extern crate alloc;

pub mod bicomplex;
pub mod complex;
pub mod dynamics;
pub mod geometry;
pub mod poly;
pub mod render;

pub use bicomplex::{Bicomplex, ConjKind, Duplex, IdempotentPair, NullConeError, NULL_CONE_TOL};
pub use complex::Complex;
pub use dynamics::{
    classify_bicomplex, classify_bicomplex_full, classify_component, class_table,
    iterate_complex, julia_invariance_check, orbit_bicomplex, BicomplexClass, BicomplexOrbit,
    ComponentClass, DegenerateError, InvarianceReport, IterParams, OrbitRecord,
    PointClassification, ProjectedPoly,
};
pub use geometry::{Ball1, Discus, PlanarRegion, Rect1, TCartesian};
pub use poly::{BicomplexPoly, ComplexPoly, DegreeError};
pub use render::{
    classify_cell, classify_slice, image_from_grid, render_params, render_raymarch, ClassGrid,
    Palette, RaymarchScene, RenderMode, RenderOptions, RgbImage, SliceSpec, SliceSpecError, Vec3,
};

/// Selects one of the two idempotent projections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Proj {
    /// `w -> z1 - z2*i1`, the coefficient of `e1`.
    P1,
    /// `w -> z1 + z2*i1`, the coefficient of `e2`.
    P2,
}

impl Proj {
    pub const BOTH: [Proj; 2] = [Proj::P1, Proj::P2];
}
