//! Coefficient-ring abstraction shared by level functions, q-expansions and
//! symmetric-power sections.
//!
//! Elements carry their own ring metadata (level, prime, precision), so the
//! trait works on exemplars: `zero_like` / `one_like` produce constants in
//! the same ring as `self`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;

/// A commutative ring element that knows how to combine with peers from the
/// same ring. Binary operations panic on incompatible metadata (level or
/// prime); precision mismatches take the minimum, matching how truncated
/// data propagates.
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiply by a (signed) integer scalar.
    fn scale_int(&self, n: i64) -> Self;
    /// Multiply by an exact rational scalar. Fails for residue rings when
    /// the denominator is not invertible.
    fn try_scale_rat(&self, r: &BigRational) -> Result<Self>;
}

impl Coefficient for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, n: i64) -> Self {
        self * BigRational::from_integer(BigInt::from(n))
    }
    fn try_scale_rat(&self, r: &BigRational) -> Result<Self> {
        Ok(self * r)
    }
}

impl Coefficient for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, n: i64) -> Self {
        self * (n as f64)
    }
    fn try_scale_rat(&self, r: &BigRational) -> Result<Self> {
        let v = r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN);
        Ok(self * v)
    }
}

/// Rings containing a fixed primitive N-th root of unity, with the
/// arithmetic Frobenius acting on it. This is what the finite Fourier
/// transforms and the sigma-twisted operators need.
pub trait CycCoefficient: Coefficient {
    /// The level N of the root of unity this ring is built on.
    fn level(&self) -> u32;
    /// `zeta_N^e` in the same ring as `self` (e may be negative).
    fn zeta_pow(&self, e: i64) -> Self;
    /// Arithmetic Frobenius `zeta_N -> zeta_N^p`, fixing the prime subring.
    /// For residue rings the prime must match the ring's own.
    fn sigma_p(&self, p: u64) -> Self;
}
