//! Polynomials over the complex plane and over the bicomplex algebra.
//!
//! A bicomplex polynomial projects coefficient-wise onto two complex
//! polynomials, and evaluation factors through the idempotent
//! representation: `P(w) = P1(w1) e1 + P2(w2) e2`. The dynamics layer
//! projects once and iterates the complex pair; [`BicomplexPoly::eval_direct`]
//! keeps the full-algebra Horner route alive as an independent oracle.

use alloc::vec::Vec;
use core::fmt;

use crate::bicomplex::Bicomplex;
use crate::complex::Complex;
use crate::Proj;

/// Degree below the minimum required by an operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeError {
    /// Degree found, or `None` for the zero polynomial.
    pub found: Option<usize>,
}

impl fmt::Display for DegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.found {
            Some(d) => write!(f, "polynomial degree must be at least 2, got {}", d),
            None => write!(f, "polynomial degree must be at least 2, got the zero polynomial"),
        }
    }
}

impl core::error::Error for DegreeError {}

/// A complex polynomial, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex>,
}

impl ComplexPoly {
    /// Build from `a0..ad` coefficients, trimming exactly-zero leading ones.
    /// The zero polynomial is kept as a single zero coefficient.
    pub fn new(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex::ZERO) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex::ZERO);
        }
        ComplexPoly { coeffs }
    }

    /// `z^2 + c`.
    pub fn quadratic(c: Complex) -> Self {
        ComplexPoly {
            coeffs: alloc::vec![c, Complex::ZERO, Complex::ONE],
        }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.len() == 1 && self.coeffs[0] == Complex::ZERO {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex) -> Complex {
        let mut acc = Complex::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient rule `k * a_k`.
    pub fn derivative(&self) -> ComplexPoly {
        if self.coeffs.len() <= 1 {
            return ComplexPoly::new(Vec::new());
        }
        ComplexPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c.scale(k as f64))
                .collect(),
        )
    }

    /// A radius outside of which every orbit grows monotonically to
    /// infinity: `max(2, (1 + sum |a_k|, k < d) / |a_d|)`.
    ///
    /// For `|z| > R` this gives `|p(z)| >= |z|^(d-1) (|a_d||z| - sum|a_k|)
    /// > |z|`, and the growth factor only increases from there, so escape
    /// past `R` is final.
    pub fn escape_radius(&self) -> Result<f64, DegreeError> {
        match self.degree() {
            Some(d) if d >= 2 => {
                let lead = self.coeffs[d].abs();
                let lower: f64 = self.coeffs[..d].iter().map(|c| c.abs()).sum();
                Ok(f64::max(2.0, (1.0 + lower) / lead))
            }
            found => Err(DegreeError { found }),
        }
    }
}

impl fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree().is_none() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == Complex::ZERO {
                continue;
            }
            write_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: Complex, k: usize, first: bool) -> fmt::Result {
    // Coefficient part.
    if c.im == 0.0 {
        if k > 0 && c.re == 1.0 {
            if !first {
                write!(f, "+")?;
            }
        } else if k > 0 && c.re == -1.0 {
            write!(f, "-")?;
        } else if first {
            write!(f, "{}", c.re)?;
        } else {
            write!(f, "{:+}", c.re)?;
        }
    } else if c.re == 0.0 {
        if first {
            write!(f, "{}i", c.im)?;
        } else {
            write!(f, "{:+}i", c.im)?;
        }
    } else {
        if !first {
            write!(f, "+")?;
        }
        write!(f, "({}{:+}i)", c.re, c.im)?;
    }
    // Variable part.
    match k {
        0 => Ok(()),
        1 => write!(f, "z"),
        _ => write!(f, "z^{}", k),
    }
}

/// A bicomplex polynomial, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct BicomplexPoly {
    coeffs: Vec<Bicomplex>,
}

impl BicomplexPoly {
    pub fn new(mut coeffs: Vec<Bicomplex>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&Bicomplex::ZERO) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Bicomplex::ZERO);
        }
        BicomplexPoly { coeffs }
    }

    /// `w^2 + c`.
    pub fn quadratic(c: Bicomplex) -> Self {
        BicomplexPoly {
            coeffs: alloc::vec![c, Bicomplex::ZERO, Bicomplex::ONE],
        }
    }

    pub fn coeffs(&self) -> &[Bicomplex] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.len() == 1 && self.coeffs[0] == Bicomplex::ZERO {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Horner evaluation in full bicomplex arithmetic.
    pub fn eval_direct(&self, w: Bicomplex) -> Bicomplex {
        let mut acc = Bicomplex::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * w + c;
        }
        acc
    }

    /// Coefficient-wise projection. Degree drops exactly when the leading
    /// coefficient projects to zero, i.e. for degenerate polynomials.
    pub fn project(&self, which: Proj) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|c| c.project(which)).collect())
    }

    /// Evaluate through the idempotent decomposition: project to two
    /// complex polynomials, evaluate each on its component, recombine.
    pub fn eval_idempotent(&self, w: Bicomplex) -> Bicomplex {
        let p = w.to_idempotent();
        let v1 = self.project(Proj::P1).eval(p.w1);
        let v2 = self.project(Proj::P2).eval(p.w2);
        Bicomplex::from_idempotent(crate::bicomplex::IdempotentPair::new(v1, v2))
    }

    pub fn derivative(&self) -> BicomplexPoly {
        if self.coeffs.len() <= 1 {
            return BicomplexPoly::new(Vec::new());
        }
        BicomplexPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c.scale(k as f64))
                .collect(),
        )
    }

    /// True iff the leading coefficient is a zero divisor, in which case
    /// the projections lose degree and the product dynamics degenerate.
    pub fn is_degenerate(&self, tol: f64) -> bool {
        match self.coeffs.last() {
            Some(&lead) => lead.is_null_cone(tol),
            None => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::NULL_CONE_TOL;
    use alloc::string::ToString;
    use alloc::vec;

    fn w_squared() -> BicomplexPoly {
        BicomplexPoly::quadratic(Bicomplex::ZERO)
    }

    #[test]
    fn eval_direct_on_units() {
        assert_eq!(w_squared().eval_direct(Bicomplex::J), Bicomplex::ONE);
        assert_eq!(w_squared().eval_direct(Bicomplex::I2), -Bicomplex::ONE);
        // (i1 + i2)^2 = -2 + 2j
        let v = w_squared().eval_direct(Bicomplex::I1 + Bicomplex::I2);
        assert_eq!(v, Bicomplex::from_reals(-2.0, 0.0, 0.0, 2.0));
    }

    #[test]
    fn projection_of_mixed_quadratic() {
        let c = Bicomplex::E1.scale(0.26) + Bicomplex::E2.scale(-1.754878);
        let p = BicomplexPoly::quadratic(c);
        let p1 = p.project(Proj::P1);
        let p2 = p.project(Proj::P2);
        assert_eq!(p1.degree(), Some(2));
        assert!((p1.coeffs()[0].re - 0.26).abs() < 1e-15);
        assert!((p2.coeffs()[0].re + 1.754878).abs() < 1e-15);
        assert_eq!(p1.to_string(), "z^2+0.26");
        assert_eq!(p2.to_string(), "z^2-1.754878");

        let p = BicomplexPoly::quadratic(Bicomplex::from_re(0.27));
        assert_eq!(p.project(Proj::P1).to_string(), "z^2+0.27");
        assert_eq!(p.project(Proj::P2).to_string(), "z^2+0.27");
    }

    #[test]
    fn degenerate_projection_loses_degree() {
        let p = BicomplexPoly::new(vec![Bicomplex::ZERO, Bicomplex::ZERO, Bicomplex::E1]);
        assert_eq!(p.project(Proj::P2).degree(), None);
        assert_eq!(p.project(Proj::P1).degree(), Some(2));
        assert!(p.is_degenerate(NULL_CONE_TOL));
    }

    #[test]
    fn eval_idempotent_matches_direct() {
        let p = w_squared();
        assert_eq!(p.eval_idempotent(Bicomplex::E1), Bicomplex::E1);

        let q = BicomplexPoly::new(vec![
            Bicomplex::from_reals(0.5, -1.0, 0.25, 0.0),
            Bicomplex::from_reals(-1.5, 2.0, 0.0, 1.0),
            Bicomplex::from_reals(2.0, 0.0, -1.0, 0.5),
            Bicomplex::ONE,
        ]);
        let w = Bicomplex::from_reals(0.3, -0.7, 1.1, 0.2);
        let a = q.eval_direct(w);
        let b = q.eval_idempotent(w);
        assert!((a - b).norm() <= 1e-10 * f64::max(1.0, a.norm()));
    }

    #[test]
    fn derivative_rule_and_projection_commute() {
        let p = BicomplexPoly::quadratic(Bicomplex::from_re(-0.5));
        let dp = p.derivative();
        assert_eq!(dp.coeffs(), &[Bicomplex::ZERO, Bicomplex::from_re(2.0)]);

        let q = BicomplexPoly::new(vec![
            Bicomplex::from_reals(1.0, 2.0, 3.0, 4.0),
            Bicomplex::from_reals(-1.0, 0.5, 0.0, 2.0),
            Bicomplex::from_reals(0.0, 1.0, -2.0, 0.25),
            Bicomplex::from_reals(3.0, 0.0, 0.0, -1.0),
        ]);
        for which in [Proj::P1, Proj::P2] {
            assert_eq!(q.derivative().project(which), q.project(which).derivative());
        }
    }

    #[test]
    fn degeneracy_examples() {
        assert!(!BicomplexPoly::quadratic(Bicomplex::from_re(1e6)).is_degenerate(NULL_CONE_TOL));
        let p = BicomplexPoly::new(vec![
            Bicomplex::ONE,
            Bicomplex::ZERO,
            Bicomplex::ZERO,
            Bicomplex::I1 + Bicomplex::I2,
        ]);
        assert!(p.is_degenerate(NULL_CONE_TOL));
    }

    #[test]
    fn escape_radius_values() {
        let z2 = ComplexPoly::quadratic(Complex::ZERO);
        assert_eq!(z2.escape_radius().unwrap(), 2.0);
        let p = ComplexPoly::quadratic(Complex::from_re(0.27));
        assert_eq!(p.escape_radius().unwrap(), 2.0);
        let p = ComplexPoly::quadratic(Complex::from_re(-1.754878));
        assert!((p.escape_radius().unwrap() - 2.754878).abs() < 1e-15);

        let line = ComplexPoly::new(vec![Complex::ONE, Complex::ONE]);
        assert_eq!(line.escape_radius(), Err(DegreeError { found: Some(1) }));
        let zero = ComplexPoly::new(vec![]);
        assert_eq!(zero.escape_radius(), Err(DegreeError { found: None }));
    }

    #[test]
    fn escape_radius_growth_is_monotone() {
        // Outside the radius a single step must strictly grow the modulus.
        for c in [0.27, -1.754878, 1.0] {
            let p = ComplexPoly::quadratic(Complex::from_re(c));
            let r = p.escape_radius().unwrap();
            for k in 0..64 {
                let angle = k as f64 * 0.1;
                let z = Complex::new(libm::cos(angle), libm::sin(angle)).scale(r * 1.0001);
                assert!(p.eval(z).abs() > z.abs());
            }
        }
    }

    #[test]
    fn display_complex_coefficients() {
        let p = ComplexPoly::quadratic(Complex::new(-0.123, 0.745));
        assert_eq!(p.to_string(), "z^2+(-0.123+0.745i)");
        let q = ComplexPoly::new(vec![
            Complex::ZERO,
            Complex::new(0.0, -2.0),
            Complex::new(-1.0, 0.0),
        ]);
        assert_eq!(q.to_string(), "-z^2-2iz");
    }
}
