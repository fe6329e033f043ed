//! Orbit iteration and the classification of bicomplex points into the
//! Julia set, the filled-in interior, and the stable-set cells.
//!
//! Everything factors through the idempotent pair: a point belongs to the
//! filled-in set exactly when both complex components have bounded orbits
//! under the projected polynomials, and the bicomplex Julia set is the
//! union of the two boundary-times-filled products. The per-plane verdicts
//! come from escape-time iteration with an exterior distance estimate; the
//! boundary is detected from the escaping side at a resolution set by
//! `de_threshold` (true boundary points with bounded orbits are measure
//! zero and classify as interior).

use core::fmt;

use crate::bicomplex::Bicomplex;
use crate::complex::Complex;
use crate::poly::{BicomplexPoly, ComplexPoly, DegreeError};
use crate::Proj;

/// Moduli past this bound are treated as escaped to infinity; squaring
/// them again would overflow and poison the distance estimate.
const OVERFLOW_GUARD: f64 = 1e150;

/// Iteration controls shared by every classification routine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IterParams {
    /// Orbit length bound.
    pub max_iter: u32,
    /// Escape radius override; `None` derives one per projected polynomial.
    pub escape_radius: Option<f64>,
    /// Multiplier applied to the escape radius in use.
    pub escape_safety: f64,
    /// Boundary thickness: escaping orbits with a distance estimate at or
    /// below this classify as boundary.
    pub de_threshold: f64,
    /// Tolerance for the zero-divisor (degeneracy) test.
    pub tol: f64,
}

impl Default for IterParams {
    fn default() -> Self {
        IterParams {
            max_iter: 500,
            escape_radius: None,
            escape_safety: 1.0,
            de_threshold: 1e-3,
            tol: crate::bicomplex::NULL_CONE_TOL,
        }
    }
}

impl IterParams {
    /// Same parameters geared for slow acceptance-grade orbits.
    pub fn acceptance() -> Self {
        IterParams {
            max_iter: 2000,
            ..IterParams::default()
        }
    }

    fn radius_for(&self, p: &ComplexPoly) -> Result<f64, DegreeError> {
        let base = match self.escape_radius {
            Some(r) => {
                // Degree is still validated: a fixed radius is not a
                // license to iterate linear maps.
                if !matches!(p.degree(), Some(d) if d >= 2) {
                    return Err(DegreeError { found: p.degree() });
                }
                r
            }
            None => p.escape_radius()?,
        };
        Ok(base * self.escape_safety)
    }
}

/// Outcome of a single complex orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitRecord {
    pub escaped: bool,
    /// Iterations applied when escape was detected, or `max_iter`.
    pub iters: u32,
    pub final_z: Complex,
    /// Derivative of the final iterate with respect to the seed.
    pub final_dz: Complex,
    /// Exterior distance estimate `|z| ln|z| / |dz|`; only for escapers.
    pub de: Option<f64>,
}

/// Per-plane verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentClass {
    Interior,
    Boundary,
    Exterior,
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentClass::Interior => "INTERIOR",
            ComponentClass::Boundary => "BOUNDARY",
            ComponentClass::Exterior => "EXTERIOR",
        })
    }
}

/// Bicomplex verdict derived from the two per-plane labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BicomplexClass {
    /// Julia set: one component on the boundary, the other in the filled set.
    J2,
    /// Interior of the filled-in set: both orbits bounded, away from the boundary.
    K2Interior,
    /// Stable cell with one bounded and one escaping component.
    F2Bounded,
    /// Stable cells pairing an unbounded component with a boundary one.
    F2UnboundedMixed,
    /// Both components escape.
    F2Unbounded,
}

impl BicomplexClass {
    pub const ALL: [BicomplexClass; 5] = [
        BicomplexClass::J2,
        BicomplexClass::K2Interior,
        BicomplexClass::F2Bounded,
        BicomplexClass::F2UnboundedMixed,
        BicomplexClass::F2Unbounded,
    ];

    /// Stable ordinal used by the voxel file format.
    pub fn ordinal(self) -> u8 {
        match self {
            BicomplexClass::J2 => 0,
            BicomplexClass::K2Interior => 1,
            BicomplexClass::F2Bounded => 2,
            BicomplexClass::F2UnboundedMixed => 3,
            BicomplexClass::F2Unbounded => 4,
        }
    }

    pub fn from_ordinal(v: u8) -> Option<BicomplexClass> {
        BicomplexClass::ALL.get(v as usize).copied()
    }

    /// Membership in the filled-in set (interior or boundary).
    pub fn in_filled_set(self) -> bool {
        matches!(self, BicomplexClass::J2 | BicomplexClass::K2Interior)
    }
}

impl fmt::Display for BicomplexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BicomplexClass::J2 => "J2",
            BicomplexClass::K2Interior => "K2_INTERIOR",
            BicomplexClass::F2Bounded => "F2_BOUNDED",
            BicomplexClass::F2UnboundedMixed => "F2_UNBOUNDED_MIXED",
            BicomplexClass::F2Unbounded => "F2_UNBOUNDED",
        })
    }
}

/// The polynomial cannot drive the product dynamics: it is degenerate or
/// of degree below two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegenerateError {
    /// Leading coefficient lies in the null-cone.
    LeadingCoefficient,
    /// Degree below two (`None` is the zero polynomial).
    Degree(Option<usize>),
}

impl fmt::Display for DegenerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegenerateError::LeadingCoefficient => {
                write!(f, "degenerate polynomial: leading coefficient is a zero divisor")
            }
            DegenerateError::Degree(Some(d)) => {
                write!(f, "polynomial degree must be at least 2, got {}", d)
            }
            DegenerateError::Degree(None) => {
                write!(f, "polynomial degree must be at least 2, got the zero polynomial")
            }
        }
    }
}

impl core::error::Error for DegenerateError {}

impl From<DegreeError> for DegenerateError {
    fn from(e: DegreeError) -> Self {
        DegenerateError::Degree(e.found)
    }
}

/// Iterate `z <- p(z)` with the derivative recurrence `dz <- p'(z) dz`.
///
/// Stops when `|z|` exceeds the escape radius or after `max_iter` steps.
/// Escaped orbits run two extra stabilization steps before the distance
/// estimate is taken.
pub fn iterate_complex(
    p: &ComplexPoly,
    z0: Complex,
    params: &IterParams,
) -> Result<OrbitRecord, DegreeError> {
    let radius = params.radius_for(p)?;
    let radius_sq = radius * radius;
    let dp = p.derivative();

    let mut z = z0;
    let mut dz = Complex::ONE;
    let mut iters = 0u32;
    let mut escaped = false;
    loop {
        if !z.is_finite() || z.norm_sq() > radius_sq {
            escaped = true;
            break;
        }
        if iters == params.max_iter {
            break;
        }
        dz = dp.eval(z) * dz;
        z = p.eval(z);
        iters += 1;
    }

    let de = if escaped {
        for _ in 0..2 {
            if !(z.norm_sq() < OVERFLOW_GUARD) {
                break;
            }
            dz = dp.eval(z) * dz;
            z = p.eval(z);
        }
        Some(distance_estimate(z, dz))
    } else {
        None
    };

    Ok(OrbitRecord {
        escaped,
        iters,
        final_z: z,
        final_dz: dz,
        de,
    })
}

/// `|z| ln|z| / |dz|` with IEEE-edge handling: a blown-up derivative means
/// the seed is squeezed against the boundary (estimate 0), a vanished or
/// outrun one means wide-open exterior (estimate infinity).
fn distance_estimate(z: Complex, dz: Complex) -> f64 {
    let zn = z.abs();
    let dzn = dz.abs();
    if !dzn.is_finite() {
        return 0.0;
    }
    if dzn == 0.0 {
        return f64::INFINITY;
    }
    let de = zn * libm::log(zn) / dzn;
    if de.is_finite() {
        de
    } else {
        f64::INFINITY
    }
}

/// Label one complex seed: interior when the orbit stays bounded,
/// boundary when it escapes with a distance estimate at or below
/// `de_threshold`, exterior otherwise.
pub fn classify_component(
    p: &ComplexPoly,
    z0: Complex,
    params: &IterParams,
) -> Result<ComponentClass, DegreeError> {
    Ok(component_class(&iterate_complex(p, z0, params)?, params))
}

fn component_class(record: &OrbitRecord, params: &IterParams) -> ComponentClass {
    match record.de {
        None => ComponentClass::Interior,
        Some(de) if de <= params.de_threshold => ComponentClass::Boundary,
        Some(_) => ComponentClass::Exterior,
    }
}

/// The product-set table mapping two per-plane labels to the bicomplex class.
pub fn class_table(c1: ComponentClass, c2: ComponentClass) -> BicomplexClass {
    use ComponentClass::*;
    match (c1, c2) {
        (Interior, Interior) => BicomplexClass::K2Interior,
        (Interior, Boundary) | (Boundary, Interior) | (Boundary, Boundary) => BicomplexClass::J2,
        (Exterior, Exterior) => BicomplexClass::F2Unbounded,
        (Interior, Exterior) | (Exterior, Interior) => BicomplexClass::F2Bounded,
        (Boundary, Exterior) | (Exterior, Boundary) => BicomplexClass::F2UnboundedMixed,
    }
}

/// Full per-point result: the class plus the per-component evidence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointClassification {
    pub class: BicomplexClass,
    pub components: [ComponentClass; 2],
    pub orbits: [OrbitRecord; 2],
}

/// A bicomplex polynomial validated for dynamics and projected once.
///
/// Classifying a grid projects the polynomial a single time and then runs
/// only complex arithmetic per point.
#[derive(Clone, Debug)]
pub struct ProjectedPoly {
    p1: ComplexPoly,
    p2: ComplexPoly,
}

impl ProjectedPoly {
    /// Validate (non-degenerate, degree at least 2) and project.
    pub fn prepare(p: &BicomplexPoly, tol: f64) -> Result<Self, DegenerateError> {
        match p.degree() {
            Some(d) if d >= 2 => {}
            found => return Err(DegenerateError::Degree(found)),
        }
        if p.is_degenerate(tol) {
            return Err(DegenerateError::LeadingCoefficient);
        }
        Ok(ProjectedPoly {
            p1: p.project(Proj::P1),
            p2: p.project(Proj::P2),
        })
    }

    pub fn poly(&self, which: Proj) -> &ComplexPoly {
        match which {
            Proj::P1 => &self.p1,
            Proj::P2 => &self.p2,
        }
    }

    /// Classify one point. Degree was validated at construction, so the
    /// per-plane iteration cannot fail.
    pub fn classify(&self, w: Bicomplex, params: &IterParams) -> PointClassification {
        let pair = w.to_idempotent();
        let o1 = iterate_complex(&self.p1, pair.w1, params).expect("degree checked in prepare");
        let o2 = iterate_complex(&self.p2, pair.w2, params).expect("degree checked in prepare");
        let c1 = component_class(&o1, params);
        let c2 = component_class(&o2, params);
        PointClassification {
            class: class_table(c1, c2),
            components: [c1, c2],
            orbits: [o1, o2],
        }
    }
}

/// Classify a single bicomplex point under `P`.
pub fn classify_bicomplex(
    p: &BicomplexPoly,
    w: Bicomplex,
    params: &IterParams,
) -> Result<BicomplexClass, DegenerateError> {
    Ok(classify_bicomplex_full(p, w, params)?.class)
}

/// Classify a single point, keeping the per-component evidence.
pub fn classify_bicomplex_full(
    p: &BicomplexPoly,
    w: Bicomplex,
    params: &IterParams,
) -> Result<PointClassification, DegenerateError> {
    Ok(ProjectedPoly::prepare(p, params.tol)?.classify(w, params))
}

/// Outcome of a direct bicomplex orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BicomplexOrbit {
    pub escaped: bool,
    pub iters: u32,
    pub final_w: Bicomplex,
}

/// Iterate `w <- P(w)` in full bicomplex arithmetic, escaping when the
/// larger idempotent component modulus exceeds the larger of the two
/// projected escape radii.
///
/// This never touches the projected polynomials during iteration, which
/// makes it an oracle for the filled-set factorization.
pub fn orbit_bicomplex(
    p: &BicomplexPoly,
    w0: Bicomplex,
    params: &IterParams,
) -> Result<BicomplexOrbit, DegenerateError> {
    let ctx = ProjectedPoly::prepare(p, params.tol)?;
    let r1 = params.radius_for(&ctx.p1)?;
    let r2 = params.radius_for(&ctx.p2)?;
    let bound = f64::max(r1, r2);

    let mut w = w0;
    let mut iters = 0u32;
    let mut escaped = false;
    loop {
        if !w.is_finite() {
            escaped = true;
            break;
        }
        let pair = w.to_idempotent();
        if f64::max(pair.w1.abs(), pair.w2.abs()) > bound {
            escaped = true;
            break;
        }
        if iters == params.max_iter {
            break;
        }
        w = p.eval_direct(w);
        iters += 1;
    }

    Ok(BicomplexOrbit {
        escaped,
        iters,
        final_w: w,
    })
}

/// Tally from a forward-invariance sweep over Julia-classified samples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InvarianceReport {
    /// Samples that classified as Julia-set points.
    pub checked: usize,
    /// Images that failed to classify as Julia-set points under the
    /// relaxed threshold.
    pub violations: usize,
}

impl InvarianceReport {
    pub fn violation_fraction(&self) -> f64 {
        if self.checked == 0 {
            0.0
        } else {
            self.violations as f64 / self.checked as f64
        }
    }
}

/// Forward invariance of the Julia set: for every sample classified `J2`,
/// its image under `P` must classify `J2` as well, judged with a twice
/// relaxed boundary threshold to absorb the boundary-thickness dilation
/// of one application of `P`.
pub fn julia_invariance_check(
    p: &BicomplexPoly,
    samples: &[Bicomplex],
    params: &IterParams,
) -> Result<InvarianceReport, DegenerateError> {
    let ctx = ProjectedPoly::prepare(p, params.tol)?;
    let relaxed = IterParams {
        de_threshold: params.de_threshold * 2.0,
        ..*params
    };
    let mut report = InvarianceReport::default();
    for &w in samples {
        if ctx.classify(w, params).class != BicomplexClass::J2 {
            continue;
        }
        report.checked += 1;
        let image = p.eval_direct(w);
        if ctx.classify(image, &relaxed).class != BicomplexClass::J2 {
            report.violations += 1;
        }
    }
    Ok(report)
}
