//! The built-in verification suites: randomized checks of the algebra,
//! the conjugation group, the idempotent decomposition, the evaluation
//! and orbit oracles, and classification symmetry. Each suite returns a
//! short summary or a failure description; seeds make runs reproducible.

use bijulia_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITES: [&str; 5] = ["algebra", "klein", "idempotent", "oracle", "symmetry"];

const REL_TOL: f64 = 1e-12;

pub struct SuiteOutcome {
    pub name: &'static str,
    pub result: Result<String, String>,
}

pub fn run_suite(name: &str, seed: u64) -> Option<SuiteOutcome> {
    let result = match name {
        "algebra" => algebra(seed),
        "klein" => klein(seed),
        "idempotent" => idempotent(seed),
        "oracle" => oracle(seed),
        "symmetry" => symmetry(seed),
        _ => return None,
    };
    let name = SUITES.iter().find(|&&s| s == name).copied()?;
    Some(SuiteOutcome { name, result })
}

fn rel_close(a: Bicomplex, b: Bicomplex) -> bool {
    let scale = f64::max(1.0, f64::max(a.norm(), b.norm()));
    (a - b).norm() <= REL_TOL * scale
}

fn random_bicomplex(rng: &mut ChaCha8Rng, span: f64) -> Bicomplex {
    Bicomplex::from_reals(
        rng.gen_range(-span..span),
        rng.gen_range(-span..span),
        rng.gen_range(-span..span),
        rng.gen_range(-span..span),
    )
}

fn algebra(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..10_000 {
        let (a, b, c) = (
            random_bicomplex(&mut rng, 10.0),
            random_bicomplex(&mut rng, 10.0),
            random_bicomplex(&mut rng, 10.0),
        );
        if !rel_close(a * b, b * a) {
            return Err(format!("commutativity failed at sample {i}"));
        }
        if !rel_close((a * b) * c, a * (b * c)) {
            return Err(format!("associativity failed at sample {i}"));
        }
        if !rel_close(a * (b + c), a * b + a * c) {
            return Err(format!("distributivity failed at sample {i}"));
        }
        // Norm properties.
        let slack = 1.0 + 1e-14;
        if (a + b).norm() > (a.norm() + b.norm()) * slack {
            return Err(format!("triangle inequality failed at sample {i}"));
        }
        if (a * b).norm() > 2f64.sqrt() * a.norm() * b.norm() * slack + 1e-300 {
            return Err(format!("product norm bound failed at sample {i}"));
        }
    }
    // Tightness witness for the product bound.
    let e1 = Bicomplex::E1;
    let gap = ((e1 * e1).norm() - 2f64.sqrt() * e1.norm() * e1.norm()).abs();
    if gap > REL_TOL {
        return Err(format!("product bound witness off by {gap:e}"));
    }
    let mut inverted = 0;
    for i in 0..10_000 {
        let w = random_bicomplex(&mut rng, 10.0);
        if w.is_null_cone(1e-6) {
            continue;
        }
        let inv = match w.inverse() {
            Ok(v) => v,
            Err(_) => return Err(format!("inverse refused off-cone value at sample {i}")),
        };
        if (w * inv - Bicomplex::ONE).norm() > REL_TOL {
            return Err(format!("inverse residual too large at sample {i}"));
        }
        inverted += 1;
        if inverted >= 1_000 {
            break;
        }
    }
    Ok(format!("10000 triples, {inverted} inversions"))
}

fn klein(seed: u64) -> Result<String, String> {
    let table = [
        [0u8, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let w = random_bicomplex(&mut rng, 10.0);
        for (i, &outer) in ConjKind::ALL.iter().enumerate() {
            for (j, &inner) in ConjKind::ALL.iter().enumerate() {
                let expect = ConjKind::from_index(table[i][j]).unwrap();
                if outer.compose(inner) != expect {
                    return Err(format!("composition table broken at ({i},{j})"));
                }
                if w.conj(inner).conj(outer) != w.conj(expect) {
                    return Err(format!("application not bit-exact at ({i},{j})"));
                }
            }
        }
    }
    Ok("16 compositions exact on 100 samples".to_string())
}

fn idempotent(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..10_000 {
        let (a, b) = (
            random_bicomplex(&mut rng, 10.0),
            random_bicomplex(&mut rng, 10.0),
        );
        let (pa, pb) = (a.to_idempotent(), b.to_idempotent());
        if !rel_close((a + b).to_idempotent().to_bicomplex(), (pa + pb).to_bicomplex()) {
            return Err(format!("sum homomorphism failed at sample {i}"));
        }
        if !rel_close((a * b).to_idempotent().to_bicomplex(), (pa * pb).to_bicomplex()) {
            return Err(format!("product homomorphism failed at sample {i}"));
        }
        if !b.is_null_cone(1e-6) {
            let q = a * b.inverse().map_err(|e| e.to_string())?;
            let pq = IdempotentPair::new(pa.w1 / pb.w1, pa.w2 / pb.w2);
            if !rel_close(q, pq.to_bicomplex()) {
                return Err(format!("division homomorphism failed at sample {i}"));
            }
        }
        let rt = Bicomplex::from_idempotent(a.to_idempotent());
        if (rt - a).norm() > 4.0 * f64::EPSILON * f64::max(1.0, a.norm()) {
            return Err(format!("round trip too loose at sample {i}"));
        }
    }
    Ok("10000 pairs for +, *, /".to_string())
}

fn oracle(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Evaluation equivalence on random polynomials.
    for i in 0..10_000 {
        let degree = rng.gen_range(2..=6usize);
        let coeffs: Vec<Bicomplex> = (0..=degree)
            .map(|_| random_bicomplex(&mut rng, 2.0))
            .collect();
        let p = BicomplexPoly::new(coeffs);
        let w = random_bicomplex(&mut rng, 2.0);
        let direct = p.eval_direct(w);
        let idem = p.eval_idempotent(w);
        let scale = f64::max(1.0, f64::max(direct.norm(), idem.norm()));
        if (direct - idem).norm() > 1e-10 * scale {
            return Err(format!("evaluation routes disagree at sample {i}"));
        }
    }
    // Orbit factorization agreement.
    let p = BicomplexPoly::quadratic(Bicomplex::from_re(-1.754878));
    let ctx = ProjectedPoly::prepare(&p, 1e-12).map_err(|e| e.to_string())?;
    let r = ctx.poly(Proj::P1).escape_radius().map_err(|e| e.to_string())?;
    let params = IterParams {
        escape_radius: Some(r),
        ..IterParams::default()
    };
    let total = 4_096;
    let mut disagreements = 0usize;
    for _ in 0..total {
        let w = random_bicomplex(&mut rng, 1.5);
        let direct = orbit_bicomplex(&p, w, &params).map_err(|e| e.to_string())?;
        let pair = w.to_idempotent();
        let o1 = iterate_complex(ctx.poly(Proj::P1), pair.w1, &params).map_err(|e| e.to_string())?;
        let o2 = iterate_complex(ctx.poly(Proj::P2), pair.w2, &params).map_err(|e| e.to_string())?;
        if direct.escaped != (o1.escaped || o2.escaped) {
            disagreements += 1;
        }
    }
    if (disagreements as f64) > 0.001 * total as f64 {
        return Err(format!("{disagreements}/{total} orbit disagreements"));
    }
    Ok(format!(
        "10000 evaluations, {disagreements}/{total} orbit disagreements"
    ))
}

fn symmetry(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases = [
        Bicomplex::from_re(0.27),
        Bicomplex::from_re(-1.0),
        Bicomplex::from_idempotent(IdempotentPair::new(
            Complex::new(-0.123, 0.745),
            Complex::new(-0.391, -0.587),
        )),
    ];
    let params = IterParams::default();
    for c in cases {
        let p = BicomplexPoly::quadratic(c);
        for i in 0..1_000 {
            let w = random_bicomplex(&mut rng, 1.6);
            let a = classify_bicomplex(&p, w, &params).map_err(|e| e.to_string())?;
            let b = classify_bicomplex(&p, -w, &params).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("asymmetric classification at sample {i}"));
            }
        }
    }
    Ok("3 parameters x 1000 antipodal pairs".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_default_seed() {
        for name in SUITES {
            let outcome = run_suite(name, 42).unwrap();
            assert!(outcome.result.is_ok(), "{name}: {:?}", outcome.result);
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("fourier", 42).is_none());
    }
}
