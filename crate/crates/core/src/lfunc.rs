//! Bernoulli polynomials, L-values of periodic functions at non-positive
//! integers, a complex-float L oracle, the horospherical map and the
//! de Rham residue scalar.
//!
//! L-series orientation. For a function h on (Z/N)^2 the L-series used by
//! the horospherical map and the functional equation reads the second slot
//! of the first row, L(h, s) = sum_{m >= 1} h(0, m) m^{-s}; see
//! [`crate::level::LevelFunction::l_slice`]. This is the orientation under
//! which both displayed expressions of the horospherical map agree exactly
//! (the first-slot reading provably fails on delta functions), and it is
//! consistent with the explicit slice h(m) = f(m, 0) appearing in the
//! Eisenstein constant terms once f is the transposed Fourier transform.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::level::{p1, GL2ModN, LevelFunction};
use crate::ring::Coefficient;

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Bernoulli numbers B_0..B_k (B_1 = -1/2), by the defining recurrence
/// sum_{j<=m} C(m+1, j) B_j = 0.
pub fn bernoulli_numbers(k: u32) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(k as usize + 1);
    b.push(BigRational::one());
    for m in 1..=k {
        let mut s = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += BigRational::from_integer(binomial(m + 1, j as u32)) * bj;
        }
        b.push(-s / rat_int(m as i64 + 1));
    }
    b
}

/// The k-th Bernoulli polynomial with exact rational coefficients,
/// ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliPoly {
    degree: u32,
    coeffs: Vec<BigRational>,
}

impl BernoulliPoly {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// B_k(x) = sum_j C(k, j) B_j x^{k-j}.
pub fn bernoulli_poly(k: u32) -> BernoulliPoly {
    let nums = bernoulli_numbers(k);
    let mut coeffs = vec![BigRational::zero(); k as usize + 1];
    for j in 0..=k {
        coeffs[(k - j) as usize] = BigRational::from_integer(binomial(k, j)) * &nums[j as usize];
    }
    BernoulliPoly { degree: k, coeffs }
}

/// A total table of values over Z/N.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicFunction<C> {
    n: u32,
    values: Vec<C>,
}

impl<C: Coefficient> PeriodicFunction<C> {
    pub fn from_fn(n: u32, f: impl FnMut(i64) -> C) -> Self {
        assert!(n >= 1);
        PeriodicFunction { n, values: (0..n as i64).map(f).collect() }
    }

    pub fn period(&self) -> u32 {
        self.n
    }

    pub fn get(&self, a: i64) -> &C {
        &self.values[a.rem_euclid(self.n as i64) as usize]
    }
}

impl<C: Coefficient> LevelFunction<C> {
    /// The periodic function m -> f(0, m) whose L-series is the L-series of
    /// this level function (see the module docs for why this slice).
    pub fn l_slice(&self) -> PeriodicFunction<C> {
        PeriodicFunction::from_fn(self.level(), |m| self.get(0, m).clone())
    }
}

/// L(f, -k) for a periodic function, by the Hurwitz-zeta closed form
///
///   L(f, -k) = -(N^k / (k+1)) sum_{a=0}^{N-1} f(a) B_{k+1}(a/N) - [k=0] f(0).
///
/// Representatives a/N are taken in \[0,1); the a = 0 term of the analytic
/// continuation needs B_{k+1} at 1 rather than 0, which differs from the
/// \[0,1) convention only at k = 0 and is restored by the trailing
/// correction. With it, f = 1 gives zeta(0) = -1/2 and zeta(-1) = -1/12.
pub fn l_value_neg<C: Coefficient>(f: &PeriodicFunction<C>, k: u32) -> Result<C> {
    let n = f.period();
    let bp = bernoulli_poly(k + 1);
    let mut acc = f.get(0).zero_like();
    for a in 0..n as i64 {
        let x = BigRational::new(BigInt::from(a), BigInt::from(n));
        acc = acc.add(&f.get(a).try_scale_rat(&bp.eval(&x))?);
    }
    let scale = -BigRational::from_integer(BigInt::from(n).pow(k)) / rat_int(k as i64 + 1);
    let mut out = acc.try_scale_rat(&scale)?;
    if k == 0 {
        out = out.sub(f.get(0));
    }
    Ok(out)
}

/// Direct summation of L(f, k) = sum_{m>=1} f(m) m^{-k} for k >= 2, to
/// `cutoff` terms, plus an Euler-Maclaurin tail estimate per residue class
/// that pushes the truncation error below ~cutoff^{-k-1}.
pub fn l_value_complex(f: &PeriodicFunction<Complex64>, k: u32, cutoff: u64) -> Result<Complex64> {
    if k < 2 {
        return Err(Error::NotConvergent(k));
    }
    let n = f.period() as u64;
    let mut s = Complex64::new(0.0, 0.0);
    for m in 1..=cutoff {
        let t = (m as f64).powi(-(k as i32));
        s += f.get((m % n) as i64) * t;
    }
    // tail: for each residue class the first term beyond the cutoff is
    // m0, and sum_{j>=0} (m0 + jN)^{-k} = integral + g(0)/2 - g'(0)/12 + ...
    let kf = k as f64;
    for a in 0..n {
        let m0 = (cutoff + 1 + (a + n - (cutoff + 1) % n) % n) as f64;
        let integral = m0.powf(1.0 - kf) / ((n as f64) * (kf - 1.0));
        let half = 0.5 * m0.powf(-kf);
        let deriv = kf * (n as f64) * m0.powf(-kf - 1.0) / 12.0;
        s += f.get(a as i64) * (integral + half + deriv);
    }
    Ok(s)
}

/// The horospherical map rho^k(phi)(g), computed by both of its defining
/// expressions:
///
///   A = (N^k / (k! (k+2))) sum_t (g phi)(t) B_{k+2}(t_2 / N),   t_2/N in \[0,1)
///   B = (-1 / (N k!)) L(P1(g phi), -k-1)
///
/// A is a plain rational; B goes through the cyclotomic Fourier transform
/// and lands back in Q. The two are asserted equal (a disagreement signals
/// an implementation bug) and A is returned.
pub fn horospherical(phi: &LevelFunction<BigRational>, k: u32, g: &GL2ModN) -> BigRational {
    let n = phi.level();
    let g_phi = phi.act_gl2(g);

    // Bernoulli-sum expression
    let bp = bernoulli_poly(k + 2);
    let mut sum = BigRational::zero();
    for t1 in 0..n as i64 {
        for t2 in 0..n as i64 {
            let x = BigRational::new(BigInt::from(t2), BigInt::from(n));
            sum += g_phi.get(t1, t2) * bp.eval(&x);
        }
    }
    let kfact = factorial(k);
    let scale = BigRational::new(BigInt::from(n).pow(k), &kfact * BigInt::from(k as i64 + 2));
    let first = sum * scale;

    // L-value expression through the partial Fourier transform
    let transformed = p1(&g_phi.to_cyc());
    let lval = l_value_neg(&transformed.l_slice(), k + 1)
        .expect("rational scalars never fail in Q(zeta_N)");
    let rational = lval
        .as_rational()
        .expect("L(P1(g phi), -k-1) of a rational table lies in Q")
        .clone();
    let second = rational * BigRational::new(BigInt::from(-1), BigInt::from(n as i64) * kfact);

    assert_eq!(
        first, second,
        "horospherical double formula disagrees for k={k}; implementation bug"
    );
    first
}

/// res^k = (-1 / N^{k-1}) rho^k(phi)(g), the residue of the de Rham
/// Eisenstein class at the cusp g.
pub fn residue_de_rham(phi: &LevelFunction<BigRational>, k: u32, g: &GL2ModN) -> BigRational {
    let n = BigInt::from(phi.level());
    let scale = if k >= 1 {
        BigRational::new(BigInt::from(-1), n.pow(k - 1))
    } else {
        BigRational::from_integer(-n)
    };
    horospherical(phi, k, g) * scale
}

pub(crate) fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=k as u64 {
        acc *= BigInt::from(j);
    }
    acc
}
