//! Classification checked against independent oracles: brute-force orbit
//! enumeration, the analytic unit-disc answer for squaring, and the
//! componentwise factorization of the filled-in set.

use bijulia_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mixed_complex_parameter() -> Bicomplex {
    // c = (-0.123 + 0.745 i1) e1 + (-0.391 - 0.587 i1) e2
    Bicomplex::from_idempotent(IdempotentPair::new(
        Complex::new(-0.123, 0.745),
        Complex::new(-0.391, -0.587),
    ))
}

fn params_500() -> IterParams {
    IterParams::default()
}

/// Brute-force oracle: does the orbit stay within `cap` for `steps` steps?
fn orbit_stays_bounded(p: &ComplexPoly, z0: Complex, steps: u32, cap: f64) -> bool {
    let mut z = z0;
    for _ in 0..steps {
        if !z.is_finite() || z.abs() > cap {
            return false;
        }
        z = p.eval(z);
    }
    z.is_finite() && z.abs() <= cap
}

#[test]
fn no_bounded_orbit_beyond_the_escape_radius() {
    // Validates the radius formula for the frozen example values by
    // brute force: every seed just outside R escapes within 1000 steps.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (c, expect_r) in [(0.27, 2.0), (-1.754878, 2.754878)] {
        let p = ComplexPoly::quadratic(Complex::from_re(c));
        let r = p.escape_radius().unwrap();
        assert!((r - expect_r).abs() < 1e-12);
        for _ in 0..2_000 {
            let angle = rng.gen_range(0.0..core::f64::consts::TAU);
            let radius = r * rng.gen_range(1.0 + 1e-9..3.0);
            let z = Complex::new(radius * angle.cos(), radius * angle.sin());
            assert!(
                !orbit_stays_bounded(&p, z, 1_000, 1e12),
                "bounded orbit at |z|={radius} for c={c}"
            );
        }
    }
}

#[test]
fn one_step_growth_outside_the_radius() {
    // Sampled soundness of the radius: one application strictly grows the
    // modulus, which locks in escape.
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let polys = [
        ComplexPoly::quadratic(Complex::from_re(0.27)),
        ComplexPoly::quadratic(Complex::from_re(-1.754878)),
        ComplexPoly::quadratic(Complex::new(-0.123, 0.745)),
        ComplexPoly::new(vec![
            Complex::new(0.4, -0.3),
            Complex::new(-1.0, 0.2),
            Complex::new(0.5, 0.0),
            Complex::new(0.0, 1.5),
        ]),
    ];
    for p in &polys {
        let r = p.escape_radius().unwrap();
        for _ in 0..10_000 {
            let angle = rng.gen_range(0.0..core::f64::consts::TAU);
            let radius = r * rng.gen_range(1.0 + 1e-12..1.1);
            let z = Complex::new(radius * angle.cos(), radius * angle.sin());
            assert!(p.eval(z).abs() > z.abs());
        }
    }
}

#[test]
fn squaring_matches_the_analytic_disc() {
    // Ground truth for z^2: inside the unit disc is interior, outside is
    // exterior, at resolution 1e-3 around the circle.
    let p = ComplexPoly::quadratic(Complex::ZERO);
    let params = params_500();
    let eps = 1e-3;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let angle = rng.gen_range(0.0..core::f64::consts::TAU);
        let radius = rng.gen_range(0.0..1.8f64);
        if (radius - 1.0).abs() <= eps {
            continue;
        }
        let z = Complex::new(radius * angle.cos(), radius * angle.sin());
        let got = classify_component(&p, z, &params).unwrap();
        let expect = if radius < 1.0 {
            ComponentClass::Interior
        } else {
            ComponentClass::Exterior
        };
        assert_eq!(got, expect, "radius {radius}");
    }
}

#[test]
fn filled_set_factorization_is_exact_in_idempotent_arithmetic() {
    // With both paths running componentwise complex arithmetic and the
    // same radius, membership agreement is an identity.
    let c = mixed_complex_parameter();
    let p = BicomplexPoly::quadratic(c);
    let ctx = ProjectedPoly::prepare(&p, 1e-12).unwrap();
    let r1 = ctx.poly(Proj::P1).escape_radius().unwrap();
    let r2 = ctx.poly(Proj::P2).escape_radius().unwrap();
    let bound = f64::max(r1, r2);
    let params = IterParams {
        escape_radius: Some(bound),
        ..params_500()
    };

    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..4_096 {
        let w = Bicomplex::from_reals(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let pair = w.to_idempotent();
        // Inline oracle: iterate the pair componentwise.
        let mut z = pair;
        let mut oracle_escaped = false;
        for _ in 0..params.max_iter {
            if f64::max(z.w1.abs(), z.w2.abs()) > bound {
                oracle_escaped = true;
                break;
            }
            z = IdempotentPair::new(
                ctx.poly(Proj::P1).eval(z.w1),
                ctx.poly(Proj::P2).eval(z.w2),
            );
        }
        if !oracle_escaped {
            oracle_escaped = f64::max(z.w1.abs(), z.w2.abs()) > bound;
        }

        let o1 = iterate_complex(ctx.poly(Proj::P1), pair.w1, &params).unwrap();
        let o2 = iterate_complex(ctx.poly(Proj::P2), pair.w2, &params).unwrap();
        assert_eq!(o1.escaped || o2.escaped, oracle_escaped);
    }
}

#[test]
fn direct_orbit_agrees_with_componentwise_classification() {
    // The full-algebra Horner oracle may disagree only through rounding
    // near thresholds: at most 0.1% of samples.
    let cases = [
        Bicomplex::from_re(0.27),
        Bicomplex::from_re(-1.754878),
        Bicomplex::E1.scale(0.26) + Bicomplex::E2.scale(-1.754878),
        mixed_complex_parameter(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for c in cases {
        let p = BicomplexPoly::quadratic(c);
        let ctx = ProjectedPoly::prepare(&p, 1e-12).unwrap();
        let r1 = ctx.poly(Proj::P1).escape_radius().unwrap();
        let r2 = ctx.poly(Proj::P2).escape_radius().unwrap();
        let params = IterParams {
            escape_radius: Some(f64::max(r1, r2)),
            ..params_500()
        };
        let total = 4_096;
        let mut disagreements = 0usize;
        for _ in 0..total {
            let w = Bicomplex::from_reals(
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
            );
            let direct = orbit_bicomplex(&p, w, &params).unwrap();
            let pair = w.to_idempotent();
            let o1 = iterate_complex(ctx.poly(Proj::P1), pair.w1, &params).unwrap();
            let o2 = iterate_complex(ctx.poly(Proj::P2), pair.w2, &params).unwrap();
            if direct.escaped != (o1.escaped || o2.escaped) {
                disagreements += 1;
            }
        }
        assert!(
            (disagreements as f64) <= 0.001 * total as f64,
            "{disagreements} disagreements for c={c:?}"
        );
    }
}

#[test]
fn longer_iteration_never_unescapes() {
    let cases = [Bicomplex::from_re(0.27), mixed_complex_parameter()];
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for c in cases {
        let p = BicomplexPoly::quadratic(c);
        let ctx = ProjectedPoly::prepare(&p, 1e-12).unwrap();
        let short = IterParams {
            max_iter: 60,
            ..IterParams::default()
        };
        let long = IterParams {
            max_iter: 1200,
            ..IterParams::default()
        };
        for _ in 0..1_000 {
            let z = Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            for which in Proj::BOTH {
                let a = iterate_complex(ctx.poly(which), z, &short).unwrap();
                let b = iterate_complex(ctx.poly(which), z, &long).unwrap();
                if a.escaped {
                    assert!(b.escaped);
                }
            }
        }
    }
}

#[test]
fn even_polynomials_classify_oppositely_placed_points_identically() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for c in [Bicomplex::from_re(-1.0), mixed_complex_parameter()] {
        let p = BicomplexPoly::quadratic(c);
        let params = params_500();
        for _ in 0..500 {
            let w = Bicomplex::from_reals(
                rng.gen_range(-1.6..1.6),
                rng.gen_range(-1.6..1.6),
                rng.gen_range(-1.6..1.6),
                rng.gen_range(-1.6..1.6),
            );
            assert_eq!(
                classify_bicomplex(&p, w, &params).unwrap(),
                classify_bicomplex(&p, -w, &params).unwrap()
            );
        }
    }
}

#[test]
fn squaring_iterates_are_stable_exactly_on_the_product_cells() {
    // Normality regions of the squaring family: bounded limit where both
    // components start inside the unit circle, escape to infinity where
    // both start outside.
    let p = BicomplexPoly::quadratic(Bicomplex::ZERO);
    let params = params_500();
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..2_000 {
        let angles = (
            rng.gen_range(0.0..core::f64::consts::TAU),
            rng.gen_range(0.0..core::f64::consts::TAU),
        );
        let inside = Bicomplex::from_idempotent(IdempotentPair::new(
            Complex::new(angles.0.cos(), angles.0.sin()).scale(rng.gen_range(0.0..0.995)),
            Complex::new(angles.1.cos(), angles.1.sin()).scale(rng.gen_range(0.0..0.995)),
        ));
        assert_eq!(
            classify_bicomplex(&p, inside, &params).unwrap(),
            BicomplexClass::K2Interior
        );
        let outside = Bicomplex::from_idempotent(IdempotentPair::new(
            Complex::new(angles.0.cos(), angles.0.sin()).scale(rng.gen_range(1.005..3.0)),
            Complex::new(angles.1.cos(), angles.1.sin()).scale(rng.gen_range(1.005..3.0)),
        ));
        assert_eq!(
            classify_bicomplex(&p, outside, &params).unwrap(),
            BicomplexClass::F2Unbounded
        );
    }
}
