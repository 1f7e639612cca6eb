//! Exact coefficient rings: Q(zeta_N) as Q\[x\]/(Phi_N) and its finite
//! quotient Z\[zeta_N\]/p^M, with the arithmetic Frobenius sigma.
//!
//! Both rings store elements as coefficient vectors of length phi(N) in the
//! power basis 1, zeta, ..., zeta^{phi(N)-1}, always reduced modulo the N-th
//! cyclotomic polynomial. The residue ring additionally reduces every
//! coordinate into \[0, p^M). Z\[zeta_N\]/p^M is a ring, not a field: Phi_N may
//! factor mod p, and only integers prime to p are ever inverted.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::ring::{Coefficient, CycCoefficient};

/// Euler totient by trial factorization; fine for the levels in scope.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact division of integer polynomials (ascending coefficients), used only
/// with monic divisors.
fn poly_div_exact(mut num: Vec<i64>, den: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; num.len() - den.len() + 1];
    for i in (0..out.len()).rev() {
        let c = num[i + den.len() - 1] / den[den.len() - 1];
        out[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            num[i + j] -= c * dj;
        }
    }
    debug_assert!(num.iter().all(|&c| c == 0));
    out
}

fn cyclotomic_uncached(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = poly_div_exact(poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

static CYCLOTOMIC_CACHE: Lazy<RwLock<HashMap<u32, Vec<i64>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending, monic.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    if let Some(p) = CYCLOTOMIC_CACHE.read().unwrap().get(&n) {
        return p.clone();
    }
    let p = cyclotomic_uncached(n);
    CYCLOTOMIC_CACHE.write().unwrap().insert(n, p.clone());
    p
}

/// Inverse of `u` modulo `modulus` via extended Euclid.
/// Fails when gcd(u, modulus) != 1.
pub fn mod_inverse(u: i64, modulus: u64) -> Option<u64> {
    let m = modulus as i128;
    let mut a = (u as i128).rem_euclid(m);
    let mut b = m;
    let (mut x0, mut x1) = (0i128, 1i128);
    while a > 1 {
        if b == 0 {
            return None;
        }
        let q = a / b;
        (a, b) = (b, a - q * b);
        (x0, x1) = (x1 - q * x0, x0);
    }
    if a != 1 {
        return None;
    }
    Some(x1.rem_euclid(m) as u64)
}

/// v with u*v = 1 mod p^M. Errors when p | u.
pub fn invert_mod(u: i64, p: u64, precision: u32) -> Result<u64> {
    if u.rem_euclid(p as i64) == 0 {
        return Err(Error::NonUnit(u, p));
    }
    let pm = pow_u64(p, precision);
    Ok(mod_inverse(u, pm).expect("unit mod p is a unit mod p^M"))
}

pub(crate) fn pow_u64(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("p^M overflows u64; lower the precision")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128) * (b as u128) % (m as u128)) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// CycRat: elements of Q(zeta_N)
// ---------------------------------------------------------------------------

/// An element of Q(zeta_N) = Q\[x\]/(Phi_N(x)), stored as phi(N) rational
/// coordinates in the power basis.
#[derive(Clone, PartialEq, Eq)]
pub struct CycRat {
    level: u32,
    coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for CycRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycRat(N={}; {:?})", self.level, self.coeffs)
    }
}

impl CycRat {
    pub fn zero(level: u32) -> Self {
        assert!(level >= 3, "level must be >= 3");
        let deg = euler_phi(level) as usize;
        CycRat { level, coeffs: vec![BigRational::zero(); deg] }
    }

    pub fn from_rational(level: u32, value: BigRational) -> Self {
        let mut z = Self::zero(level);
        z.coeffs[0] = value;
        z
    }

    pub fn from_int(level: u32, value: i64) -> Self {
        Self::from_rational(level, BigRational::from_integer(BigInt::from(value)))
    }

    pub fn one(level: u32) -> Self {
        Self::from_int(level, 1)
    }

    /// zeta_N^e as a ring element.
    pub fn zeta(level: u32, e: i64) -> Self {
        let n = level as i64;
        let e = e.rem_euclid(n) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        CycRat { level, coeffs: reduce_rational(poly, level) }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The coordinate of 1 in the power basis.
    pub fn rational_part(&self) -> &BigRational {
        &self.coeffs[0]
    }

    /// Some(rational) when all higher basis coordinates vanish.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_compatible(&self, rhs: &Self) {
        assert_eq!(self.level, rhs.level, "CycRat level mismatch");
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.level != rhs.level {
            return Err(Error::LevelMismatch(self.level, rhs.level));
        }
        Ok(Coefficient::mul(self, rhs))
    }

    /// Image under zeta_N -> zeta_N^p (any p prime to N gives a ring map).
    pub fn sigma(&self, p: u64) -> Self {
        let mut acc = Self::zero(self.level);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !Zero::is_zero(c) {
                let term = Self::zeta(self.level, (i as i64) * (p as i64));
                acc = Coefficient::add(&acc, &term.try_scale_rat(c).unwrap());
            }
        }
        acc
    }

    /// Coefficientwise image in Z\[zeta_N\]/p^M. Fails when any denominator is
    /// divisible by p.
    pub fn embed_padic(&self, p: u64, precision: u32) -> Result<PadicCyc> {
        let pm = pow_u64(p, precision);
        let mut coords = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coords.push(embed_rational(c, p, pm)?);
        }
        Ok(PadicCyc { level: self.level, p, precision, coeffs: coords })
    }

    /// Complex embedding zeta_N -> e^{2 pi i / N}.
    pub fn to_complex(&self) -> num_complex::Complex64 {
        let n = self.level as f64;
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !Zero::is_zero(c) {
                let v = c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
                let ang = 2.0 * std::f64::consts::PI * (i as f64) / n;
                acc += num_complex::Complex64::from_polar(v, ang);
            }
        }
        acc
    }
}

fn embed_rational(c: &BigRational, p: u64, pm: u64) -> Result<u64> {
    let den = c.denom();
    let num = c.numer();
    let p_big = BigInt::from(p);
    if (den % &p_big).is_zero() {
        return Err(Error::NotPIntegral { p, den: den.to_string() });
    }
    let pm_big = BigInt::from(pm);
    let num_red = num.mod_floor(&pm_big).to_u64().unwrap();
    let den_red = den.mod_floor(&pm_big).to_i64().unwrap();
    let den_inv = mod_inverse(den_red, pm).expect("denominator prime to p");
    Ok(mul_mod(num_red, den_inv, pm))
}

/// Reduce an ascending rational polynomial modulo Phi_N.
fn reduce_rational(mut poly: Vec<BigRational>, level: u32) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(level);
    let deg = phi.len() - 1;
    while poly.len() > deg {
        let top = poly.pop().unwrap();
        if !Zero::is_zero(&top) {
            let offset = poly.len() - deg;
            for (j, &pj) in phi.iter().take(deg).enumerate() {
                let t = &top * BigRational::from_integer(BigInt::from(pj));
                poly[offset + j] -= t;
            }
        }
    }
    poly.resize(deg, BigRational::zero());
    poly
}

impl Coefficient for CycRat {
    fn zero_like(&self) -> Self {
        Self::zero(self.level)
    }
    fn one_like(&self) -> Self {
        Self::one(self.level)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycRat { level: self.level, coeffs }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycRat { level: self.level, coeffs }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let deg = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !Zero::is_zero(b) {
                    prod[i + j] += a * b;
                }
            }
        }
        CycRat { level: self.level, coeffs: reduce_rational(prod, self.level) }
    }
    fn neg(&self) -> Self {
        CycRat { level: self.level, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn scale_int(&self, n: i64) -> Self {
        let f = BigRational::from_integer(BigInt::from(n));
        CycRat { level: self.level, coeffs: self.coeffs.iter().map(|c| c * &f).collect() }
    }
    fn try_scale_rat(&self, r: &BigRational) -> Result<Self> {
        Ok(CycRat { level: self.level, coeffs: self.coeffs.iter().map(|c| c * r).collect() })
    }
}

impl CycCoefficient for CycRat {
    fn level(&self) -> u32 {
        self.level
    }
    fn zeta_pow(&self, e: i64) -> Self {
        Self::zeta(self.level, e)
    }
    fn sigma_p(&self, p: u64) -> Self {
        self.sigma(p)
    }
}

// ---------------------------------------------------------------------------
// PadicCyc: elements of Z[zeta_N]/p^M
// ---------------------------------------------------------------------------

/// An element of Z\[zeta_N\]/p^M, stored as phi(N) coordinates in \[0, p^M).
/// Binary operations between different precisions land at the minimum.
#[derive(Clone)]
pub struct PadicCyc {
    level: u32,
    p: u64,
    precision: u32,
    coeffs: Vec<u64>,
}

impl std::fmt::Debug for PadicCyc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PadicCyc(N={}, p={}, M={}; {:?})",
            self.level, self.p, self.precision, self.coeffs
        )
    }
}

impl PadicCyc {
    pub fn zero(level: u32, p: u64, precision: u32) -> Self {
        assert!(level >= 3, "level must be >= 3");
        assert!(p >= 3 && is_prime(p), "p must be an odd prime");
        assert!((level as u64).gcd(&p) == 1, "p must not divide N");
        assert!(precision >= 1, "precision must be >= 1");
        pow_u64(p, precision);
        let deg = euler_phi(level) as usize;
        PadicCyc { level, p, precision, coeffs: vec![0; deg] }
    }

    pub fn from_int(level: u32, p: u64, precision: u32, value: i64) -> Self {
        let mut z = Self::zero(level, p, precision);
        z.coeffs[0] = value.rem_euclid(z.modulus() as i64) as u64;
        z
    }

    pub fn one(level: u32, p: u64, precision: u32) -> Self {
        Self::from_int(level, p, precision, 1)
    }

    pub fn zeta(level: u32, p: u64, precision: u32, e: i64) -> Self {
        let n = level as i64;
        let e = e.rem_euclid(n) as usize;
        let mut poly = vec![0u64; e + 1];
        poly[e] = 1;
        let z = Self::zero(level, p, precision);
        PadicCyc { coeffs: reduce_residue(poly, level, z.modulus()), ..z }
    }

    pub fn level(&self) -> u32 {
        self.level
    }
    pub fn prime(&self) -> u64 {
        self.p
    }
    pub fn precision(&self) -> u32 {
        self.precision
    }
    pub fn modulus(&self) -> u64 {
        pow_u64(self.p, self.precision)
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.level != rhs.level {
            return Err(Error::LevelMismatch(self.level, rhs.level));
        }
        if self.p != rhs.p {
            return Err(Error::PrimeMismatch(self.p, rhs.p));
        }
        Ok(Coefficient::mul(self, rhs))
    }

    /// Reduce to a lower precision M' <= M.
    pub fn reduce_precision(&self, precision: u32) -> Self {
        assert!(precision <= self.precision && precision >= 1);
        let pm = pow_u64(self.p, precision);
        PadicCyc {
            level: self.level,
            p: self.p,
            precision,
            coeffs: self.coeffs.iter().map(|&c| c % pm).collect(),
        }
    }

    /// Smallest p-adic valuation among the coordinates; the zero element
    /// reports its own precision M (everything below p^M is invisible).
    pub fn valuation(&self) -> u32 {
        let mut best = self.precision;
        for &c in &self.coeffs {
            if c == 0 {
                continue;
            }
            let mut v = 0u32;
            let mut x = c;
            while x % self.p == 0 {
                x /= self.p;
                v += 1;
            }
            best = best.min(v);
        }
        best
    }

    /// Exact division by p^n; the result is only known modulo p^{M-n}.
    pub fn div_exact_p_pow(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Ok(self.clone());
        }
        let got = self.valuation();
        if got < n || self.precision <= n {
            return Err(Error::InsufficientDivisibility { slot: 0, need: n, got });
        }
        let pn = pow_u64(self.p, n);
        let precision = self.precision - n;
        let pm = pow_u64(self.p, precision);
        Ok(PadicCyc {
            level: self.level,
            p: self.p,
            precision,
            coeffs: self.coeffs.iter().map(|&c| (c / pn) % pm).collect(),
        })
    }

    /// Arithmetic Frobenius zeta_N -> zeta_N^p.
    pub fn sigma(&self) -> Self {
        let mut acc = Self::zero(self.level, self.p, self.precision);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let term = Self::zeta(self.level, self.p, self.precision, (i as i64) * (self.p as i64));
                acc = Coefficient::add(&acc, &term.scale_u64(c));
            }
        }
        acc
    }

    fn scale_u64(&self, c: u64) -> Self {
        let pm = self.modulus();
        PadicCyc {
            level: self.level,
            p: self.p,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|&a| mul_mod(a, c, pm)).collect(),
        }
    }

    /// Multiply by an integer power of a unit: u^r with u inverted mod p^M
    /// when r < 0.
    pub fn scale_unit_pow(&self, u: i64, r: i64) -> Result<Self> {
        let pm = self.modulus();
        let base = if r >= 0 {
            u.rem_euclid(pm as i64) as u64
        } else {
            invert_mod(u, self.p, self.precision)?
        };
        Ok(self.scale_u64(pow_mod(base, r.unsigned_abs(), pm)))
    }
}

/// Equality at the minimum of the two precisions; false for mismatched
/// level or prime. This is the convention every container inherits.
impl PartialEq for PadicCyc {
    fn eq(&self, other: &Self) -> bool {
        if self.level != other.level || self.p != other.p {
            return false;
        }
        let m = self.precision.min(other.precision);
        let pm = pow_u64(self.p, m);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(&a, &b)| a % pm == b % pm)
    }
}

fn reduce_residue(mut poly: Vec<u64>, level: u32, pm: u64) -> Vec<u64> {
    let phi = cyclotomic_polynomial(level);
    let deg = phi.len() - 1;
    while poly.len() > deg {
        let top = poly.pop().unwrap() % pm;
        if top != 0 {
            let offset = poly.len() - deg;
            for (j, &pj) in phi.iter().take(deg).enumerate() {
                let t = mul_mod(top, pj.rem_euclid(pm as i64) as u64, pm);
                poly[offset + j] = (poly[offset + j] + pm - t) % pm;
            }
        }
    }
    poly.resize(deg, 0);
    poly.iter_mut().for_each(|c| *c %= pm);
    poly
}

impl Coefficient for PadicCyc {
    fn zero_like(&self) -> Self {
        Self::zero(self.level, self.p, self.precision)
    }
    fn one_like(&self) -> Self {
        Self::one(self.level, self.p, self.precision)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        let (a, b) = align(self, rhs);
        let pm = a.modulus();
        PadicCyc {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % pm).collect(),
            ..a
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let (a, b) = align(self, rhs);
        let pm = a.modulus();
        PadicCyc {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + pm - y) % pm).collect(),
            ..a
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = align(self, rhs);
        let pm = a.modulus();
        let deg = a.coeffs.len();
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = (prod[i + j] + mul_mod(x, y, pm)) % pm;
                }
            }
        }
        PadicCyc { coeffs: reduce_residue(prod, a.level, pm), ..a }
    }
    fn neg(&self) -> Self {
        let pm = self.modulus();
        PadicCyc {
            coeffs: self.coeffs.iter().map(|&c| (pm - c) % pm).collect(),
            ..self.clone()
        }
    }
    fn scale_int(&self, n: i64) -> Self {
        let pm = self.modulus();
        self.scale_u64(n.rem_euclid(pm as i64) as u64)
    }
    fn try_scale_rat(&self, r: &BigRational) -> Result<Self> {
        let pm = self.modulus();
        let num = r.numer().mod_floor(&BigInt::from(pm)).to_u64().unwrap();
        if (r.denom() % BigInt::from(self.p)).is_zero() {
            return Err(Error::NotPIntegral { p: self.p, den: r.denom().to_string() });
        }
        let den = r.denom().mod_floor(&BigInt::from(pm)).to_i64().unwrap();
        let den_inv = mod_inverse(den, pm).expect("denominator prime to p");
        Ok(self.scale_u64(mul_mod(num, den_inv, pm)))
    }
}

fn align(a: &PadicCyc, b: &PadicCyc) -> (PadicCyc, PadicCyc) {
    assert_eq!(a.level, b.level, "PadicCyc level mismatch");
    assert_eq!(a.p, b.p, "PadicCyc prime mismatch");
    let m = a.precision.min(b.precision);
    (a.reduce_precision(m), b.reduce_precision(m))
}

impl CycCoefficient for PadicCyc {
    fn level(&self) -> u32 {
        self.level
    }
    fn zeta_pow(&self, e: i64) -> Self {
        Self::zeta(self.level, self.p, self.precision, e)
    }
    fn sigma_p(&self, p: u64) -> Self {
        assert_eq!(p, self.p, "sigma prime must match the residue ring");
        self.sigma()
    }
}

/// The multiplicative order of p modulo N (the degree of the unramified
/// extension sigma generates).
pub fn multiplicative_order(p: u64, n: u32) -> u32 {
    let n = n as u64;
    assert_eq!(p.gcd(&n), 1);
    let mut acc = p % n;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * p % n;
        ord += 1;
    }
    ord
}
