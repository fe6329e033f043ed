//! The bicomplex algebra: commutative four-dimensional numbers with two
//! anticommuting-free imaginary units.
//!
//! A bicomplex number is stored as a pair `(z1, z2)` of [`Complex`] scalars
//! representing `z1 + z2*i2`. The three units satisfy
//!
//! ```text
//! i1^2 = i2^2 = -1,   j^2 = 1,   i1*i2 = i2*i1 = j,
//! i1*j = -i2,         i2*j = -i1,
//! ```
//!
//! so multiplication is commutative but the ring has zero divisors: the
//! null-cone, spanned by the multiples of `i1 + i2` and `i1 - i2`.
//!
//! Every element also has a unique idempotent decomposition
//! `w = w1*e1 + w2*e2` with `e1 = (1+j)/2`, `e2 = (1-j)/2`,
//! `w1 = z1 - z2*i1`, `w2 = z1 + z2*i1`. In those coordinates addition,
//! multiplication and division act term by term, which is what every hot
//! loop in the dynamics layer relies on.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::complex::Complex;

/// Default relative tolerance for zero-divisor detection.
///
/// Zero divisors form a measure-zero set; detection is only meaningful up
/// to rounding, so membership is tested against `tol * max(1, norm(w))`.
pub const NULL_CONE_TOL: f64 = 1e-12;

/// A bicomplex number `z1 + z2*i2`.
///
/// Equivalently `w0 + w1*i1 + w2*i2 + w3*j` with `z1 = w0 + w1*i1` and
/// `z2 = w2 + w3*i1`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Bicomplex {
    pub z1: Complex,
    pub z2: Complex,
}

/// The coordinates `(w1, w2)` of the idempotent decomposition.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct IdempotentPair {
    /// Component along `e1`, equal to `z1 - z2*i1`.
    pub w1: Complex,
    /// Component along `e2`, equal to `z1 + z2*i1`.
    pub w2: Complex,
}

/// A hyperbolic (duplex) number `x + y*j` with `j^2 = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Duplex {
    pub x: f64,
    pub y: f64,
}

/// The four conjugations, closed under composition (the Klein four-group).
///
/// `K0` is the identity; `K1` conjugates both complex components; `K2`
/// negates the `i2` part; `K3` does both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjKind {
    K0,
    K1,
    K2,
    K3,
}

impl ConjKind {
    pub const ALL: [ConjKind; 4] = [ConjKind::K0, ConjKind::K1, ConjKind::K2, ConjKind::K3];

    #[inline]
    pub fn index(self) -> u8 {
        match self {
            ConjKind::K0 => 0,
            ConjKind::K1 => 1,
            ConjKind::K2 => 2,
            ConjKind::K3 => 3,
        }
    }

    pub fn from_index(k: u8) -> Option<ConjKind> {
        match k {
            0 => Some(ConjKind::K0),
            1 => Some(ConjKind::K1),
            2 => Some(ConjKind::K2),
            3 => Some(ConjKind::K3),
            _ => None,
        }
    }

    /// Composition `self ∘ other`: applying `other` first, then `self`.
    ///
    /// The group is isomorphic to Z2 x Z2, i.e. XOR on the two index bits.
    #[inline]
    pub fn compose(self, other: ConjKind) -> ConjKind {
        ConjKind::from_index(self.index() ^ other.index()).unwrap()
    }
}

/// Division impossible: the operand is a zero divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NullConeError;

impl fmt::Display for NullConeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "operand lies in the null-cone (zero divisor), no inverse")
    }
}

impl core::error::Error for NullConeError {}

impl Bicomplex {
    pub const ZERO: Bicomplex = Bicomplex {
        z1: Complex::ZERO,
        z2: Complex::ZERO,
    };
    pub const ONE: Bicomplex = Bicomplex {
        z1: Complex::ONE,
        z2: Complex::ZERO,
    };
    /// First imaginary unit.
    pub const I1: Bicomplex = Bicomplex {
        z1: Complex::I,
        z2: Complex::ZERO,
    };
    /// Second imaginary unit.
    pub const I2: Bicomplex = Bicomplex {
        z1: Complex::ZERO,
        z2: Complex::ONE,
    };
    /// The hyperbolic unit `j = i1*i2`.
    pub const J: Bicomplex = Bicomplex {
        z1: Complex::ZERO,
        z2: Complex::I,
    };
    /// Idempotent `e1 = (1+j)/2`.
    pub const E1: Bicomplex = Bicomplex {
        z1: Complex::new(0.5, 0.0),
        z2: Complex::new(0.0, 0.5),
    };
    /// Idempotent `e2 = (1-j)/2`.
    pub const E2: Bicomplex = Bicomplex {
        z1: Complex::new(0.5, 0.0),
        z2: Complex::new(0.0, -0.5),
    };

    #[inline]
    pub const fn new(z1: Complex, z2: Complex) -> Self {
        Bicomplex { z1, z2 }
    }

    #[inline]
    pub const fn from_re(x: f64) -> Self {
        Bicomplex {
            z1: Complex::from_re(x),
            z2: Complex::ZERO,
        }
    }

    /// Build from the four real coefficients of `w0 + w1*i1 + w2*i2 + w3*j`.
    #[inline]
    pub const fn from_reals(w0: f64, w1: f64, w2: f64, w3: f64) -> Self {
        Bicomplex {
            z1: Complex::new(w0, w1),
            z2: Complex::new(w2, w3),
        }
    }

    /// The four real coefficients `[w0, w1, w2, w3]`.
    #[inline]
    pub fn to_reals(self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.z1.is_finite() && self.z2.is_finite()
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Bicomplex::new(self.z1.scale(s), self.z2.scale(s))
    }

    /// Apply one of the four conjugations.
    #[inline]
    pub fn conj(self, k: ConjKind) -> Self {
        match k {
            ConjKind::K0 => self,
            ConjKind::K1 => Bicomplex::new(self.z1.conj(), self.z2.conj()),
            ConjKind::K2 => Bicomplex::new(self.z1, -self.z2),
            ConjKind::K3 => Bicomplex::new(self.z1.conj(), -self.z2.conj()),
        }
    }

    /// Square modulus valued in the `i1` plane: `w * conj(K2, w) = z1^2 + z2^2`.
    ///
    /// Vanishes exactly on the null-cone and equals `w1 * w2` of the
    /// idempotent pair.
    #[inline]
    pub fn mod_sq_i1(self) -> Complex {
        self.z1 * self.z1 + self.z2 * self.z2
    }

    /// Square modulus valued in the `i2` plane, returned as
    /// `(real part, i2 part) = (|z1|^2 - |z2|^2, 2 Re(z1 conj(z2)))`.
    #[inline]
    pub fn mod_sq_i2(self) -> (f64, f64) {
        let re = self.z1.norm_sq() - self.z2.norm_sq();
        let cross = 2.0 * (self.z1.re * self.z2.re + self.z1.im * self.z2.im);
        (re, cross)
    }

    /// Square modulus valued in the duplex plane:
    /// `(|z1|^2 + |z2|^2) - 2 Im(z1 conj(z2)) j`.
    #[inline]
    pub fn mod_sq_j(self) -> Duplex {
        Duplex {
            x: self.z1.norm_sq() + self.z2.norm_sq(),
            y: -2.0 * (self.z1.im * self.z2.re - self.z1.re * self.z2.im),
        }
    }

    /// Squared Euclidean norm in the four real coefficients.
    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.z1.norm_sq() + self.z2.norm_sq()
    }

    /// Euclidean norm `sqrt(|z1|^2 + |z2|^2)`, which also equals
    /// `sqrt((|w1|^2 + |w2|^2) / 2)` in idempotent coordinates.
    #[inline]
    pub fn norm(self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    /// Zero-divisor test: true iff the smaller idempotent component is
    /// below `tol * max(1, norm(w))`.
    pub fn is_null_cone(self, tol: f64) -> bool {
        let p = self.to_idempotent();
        let smaller = f64::min(p.w1.abs(), p.w2.abs());
        smaller <= tol * f64::max(1.0, self.norm())
    }

    /// Multiplicative inverse `conj(K2, w) / mod_sq_i1(w)`.
    ///
    /// Fails for zero divisors (detected at [`NULL_CONE_TOL`]).
    pub fn inverse(self) -> Result<Bicomplex, NullConeError> {
        if self.is_null_cone(NULL_CONE_TOL) {
            return Err(NullConeError);
        }
        let m = self.mod_sq_i1();
        let c = self.conj(ConjKind::K2);
        Ok(Bicomplex::new(c.z1 / m, c.z2 / m))
    }

    /// One idempotent projection of the point.
    #[inline]
    pub fn project(self, which: crate::Proj) -> Complex {
        let p = self.to_idempotent();
        match which {
            crate::Proj::P1 => p.w1,
            crate::Proj::P2 => p.w2,
        }
    }

    /// Idempotent coordinates `(z1 - z2*i1, z1 + z2*i1)`.
    #[inline]
    pub fn to_idempotent(self) -> IdempotentPair {
        let rot = self.z2.mul_i();
        IdempotentPair {
            w1: self.z1 - rot,
            w2: self.z1 + rot,
        }
    }

    /// Reassemble from idempotent coordinates:
    /// `z1 = (w1 + w2)/2`, `z2 = (w1 - w2)*i1/2`.
    #[inline]
    pub fn from_idempotent(p: IdempotentPair) -> Bicomplex {
        Bicomplex {
            z1: (p.w1 + p.w2).scale(0.5),
            z2: (p.w1 - p.w2).mul_i().scale(0.5),
        }
    }
}

impl IdempotentPair {
    pub const fn new(w1: Complex, w2: Complex) -> Self {
        IdempotentPair { w1, w2 }
    }

    #[inline]
    pub fn to_bicomplex(self) -> Bicomplex {
        Bicomplex::from_idempotent(self)
    }
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn add(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.z1 + rhs.z1, self.z2 + rhs.z2)
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn sub(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.z1 - rhs.z1, self.z2 - rhs.z2)
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(
            self.z1 * rhs.z1 - self.z2 * rhs.z2,
            self.z1 * rhs.z2 + self.z2 * rhs.z1,
        )
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    #[inline]
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-self.z1, -self.z2)
    }
}

// Componentwise ring operations in idempotent coordinates.
impl Add for IdempotentPair {
    type Output = IdempotentPair;
    #[inline]
    fn add(self, rhs: IdempotentPair) -> IdempotentPair {
        IdempotentPair::new(self.w1 + rhs.w1, self.w2 + rhs.w2)
    }
}

impl Mul for IdempotentPair {
    type Output = IdempotentPair;
    #[inline]
    fn mul(self, rhs: IdempotentPair) -> IdempotentPair {
        IdempotentPair::new(self.w1 * rhs.w1, self.w2 * rhs.w2)
    }
}
