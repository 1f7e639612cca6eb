//! Functions on (Z/N)^2, the GL_2(Z/N) action, and the finite Fourier
//! transforms.
//!
//! Conventions, fixed once for the whole crate:
//!   P1 f(m,n) = sum_v f(v,n) zeta^{mv}          (no 1/N factor)
//!   P2 f(m,n) = sum_v f(m,v) zeta^{nv}
//!   hat f(m,n) = (1/N) sum_{u,v} f(u,v) zeta^{un - mv}
//!   f^t(m,n) = f(n,m)
//!   (g f)(x) = f(g^{-1} x)
//!
//! Under these conventions P2((hat f)^t) = P1(f), P2(f^t) = P1(f)^t,
//! P1(hat f) = P1(f)^t, and hat is an involution.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{mod_inverse, CycRat, PadicCyc};
use crate::error::{Error, Result};
use crate::ring::{Coefficient, CycCoefficient};

/// An element of GL_2(Z/N), entries reduced into \[0, N).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GL2ModN {
    n: u32,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl GL2ModN {
    /// Fails when ad - bc is not invertible mod N.
    pub fn new(n: u32, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = n as i64;
        let det = (a * d - b * c).rem_euclid(m);
        if mod_inverse(det, n as u64).is_none() {
            return Err(Error::SingularMatrix { det, n });
        }
        Ok(GL2ModN {
            n,
            a: a.rem_euclid(m),
            b: b.rem_euclid(m),
            c: c.rem_euclid(m),
            d: d.rem_euclid(m),
        })
    }

    pub fn identity(n: u32) -> Self {
        GL2ModN { n, a: 1, b: 0, c: 0, d: 1 }
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn det(&self) -> i64 {
        (self.a * self.d - self.b * self.c).rem_euclid(self.n as i64)
    }

    /// Adjugate times the inverse of the determinant.
    pub fn inverse(&self) -> Self {
        let m = self.n as i64;
        let det_inv = mod_inverse(self.det(), self.n as u64).expect("det is a unit") as i64;
        GL2ModN {
            n: self.n,
            a: (self.d * det_inv).rem_euclid(m),
            b: (-self.b * det_inv).rem_euclid(m),
            c: (-self.c * det_inv).rem_euclid(m),
            d: (self.a * det_inv).rem_euclid(m),
        }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let m = self.n as i64;
        GL2ModN {
            n: self.n,
            a: (self.a * rhs.a + self.b * rhs.c).rem_euclid(m),
            b: (self.a * rhs.b + self.b * rhs.d).rem_euclid(m),
            c: (self.c * rhs.a + self.d * rhs.c).rem_euclid(m),
            d: (self.c * rhs.b + self.d * rhs.d).rem_euclid(m),
        }
    }

    /// Matrix times column vector mod N.
    pub fn apply(&self, x: (i64, i64)) -> (i64, i64) {
        let m = self.n as i64;
        (
            (self.a * x.0 + self.b * x.1).rem_euclid(m),
            (self.c * x.0 + self.d * x.1).rem_euclid(m),
        )
    }

    /// Deterministic enumeration of the first `count` elements of GL_2(Z/N)
    /// in lexicographic entry order; handy for test grids.
    pub fn enumerate(n: u32, count: usize) -> Vec<GL2ModN> {
        let mut out = Vec::with_capacity(count);
        'outer: for a in 0..n as i64 {
            for b in 0..n as i64 {
                for c in 0..n as i64 {
                    for d in 0..n as i64 {
                        if let Ok(g) = GL2ModN::new(n, a, b, c, d) {
                            out.push(g);
                            if out.len() == count {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// A total table of coefficient-ring values indexed by (a, b) in (Z/N)^2.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelFunction<C> {
    n: u32,
    values: Vec<C>,
}

impl<C: Coefficient> LevelFunction<C> {
    pub fn from_fn(n: u32, mut f: impl FnMut(i64, i64) -> C) -> Self {
        assert!(n >= 3, "level must be >= 3");
        let mut values = Vec::with_capacity((n * n) as usize);
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                values.push(f(a, b));
            }
        }
        LevelFunction { n, values }
    }

    pub fn constant(n: u32, value: C) -> Self {
        Self::from_fn(n, |_, _| value.clone())
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    /// Value at (a, b), indices reduced mod N.
    pub fn get(&self, a: i64, b: i64) -> &C {
        let m = self.n as i64;
        let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
        &self.values[(a * m + b) as usize]
    }

    pub fn set(&mut self, a: i64, b: i64, value: C) {
        let m = self.n as i64;
        let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
        self.values[(a * m + b) as usize] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LevelFunction<D> {
        LevelFunction { n: self.n, values: self.values.iter().map(f).collect() }
    }

    pub fn try_map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<LevelFunction<D>> {
        let mut values = Vec::with_capacity(self.values.len());
        for v in &self.values {
            values.push(f(v)?);
        }
        Ok(LevelFunction { n: self.n, values })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        LevelFunction {
            n: self.n,
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.map(|v| v.scale_int(k))
    }

    /// f^t(m,n) = f(n,m).
    pub fn transpose(&self) -> Self {
        LevelFunction::from_fn(self.n, |a, b| self.get(b, a).clone())
    }

    /// (g f)(x) = f(g^{-1} x); a left action.
    pub fn act_gl2(&self, g: &GL2ModN) -> Self {
        assert_eq!(self.n, g.level(), "matrix level must match the table");
        let g_inv = g.inverse();
        LevelFunction::from_fn(self.n, |a, b| {
            let (x, y) = g_inv.apply((a, b));
            self.get(x, y).clone()
        })
    }
}

impl LevelFunction<BigRational> {
    pub fn zero_rational(n: u32) -> Self {
        Self::constant(n, BigRational::zero())
    }

    /// The delta function supported at (a, b).
    pub fn delta(n: u32, a: i64, b: i64) -> Self {
        let one = BigRational::from_integer(BigInt::from(1));
        let mut f = Self::zero_rational(n);
        f.set(a, b, one);
        f
    }

    /// View the rational table inside Q(zeta_N), where the Fourier
    /// transforms live.
    pub fn to_cyc(&self) -> LevelFunction<CycRat> {
        self.map(|v| CycRat::from_rational(self.n, v.clone()))
    }

    /// Coefficientwise image in Z\[zeta_N\]/p^M; requires p-integral values.
    pub fn embed_padic(&self, p: u64, precision: u32) -> Result<LevelFunction<PadicCyc>> {
        self.try_map(|v| CycRat::from_rational(self.n, v.clone()).embed_padic(p, precision))
    }

    /// True when every denominator is prime to p.
    pub fn is_p_integral(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.values.iter().all(|v| !(v.denom() % &p).is_zero())
    }
}

impl LevelFunction<CycRat> {
    pub fn embed_padic(&self, p: u64, precision: u32) -> Result<LevelFunction<PadicCyc>> {
        self.try_map(|v| v.embed_padic(p, precision))
    }
}

fn exemplar<C: CycCoefficient>(f: &LevelFunction<C>) -> &C {
    let e = &f.values[0];
    assert_eq!(e.level(), f.n, "value ring level must match the table level");
    e
}

/// First partial Fourier transform: P1 f(m,n) = sum_v f(v,n) zeta^{mv}.
pub fn p1<C: CycCoefficient>(f: &LevelFunction<C>) -> LevelFunction<C> {
    let n = f.level() as i64;
    let ex = exemplar(f).clone();
    LevelFunction::from_fn(f.level(), |m, b| {
        let mut acc = ex.zero_like();
        for v in 0..n {
            acc = acc.add(&f.get(v, b).mul(&ex.zeta_pow(m * v)));
        }
        acc
    })
}

/// Second partial Fourier transform: P2 f(m,n) = sum_v f(m,v) zeta^{nv}.
pub fn p2<C: CycCoefficient>(f: &LevelFunction<C>) -> LevelFunction<C> {
    let n = f.level() as i64;
    let ex = exemplar(f).clone();
    LevelFunction::from_fn(f.level(), |a, m| {
        let mut acc = ex.zero_like();
        for v in 0..n {
            acc = acc.add(&f.get(a, v).mul(&ex.zeta_pow(m * v)));
        }
        acc
    })
}

/// Symplectic Fourier transform:
/// hat f(m,n) = (1/N) sum_{u,v} f(u,v) zeta^{un - mv}.
pub fn symplectic_hat<C: CycCoefficient>(f: &LevelFunction<C>) -> LevelFunction<C> {
    let n = f.level() as i64;
    let ex = exemplar(f).clone();
    let inv_n = BigRational::new(BigInt::from(1), BigInt::from(n));
    LevelFunction::from_fn(f.level(), |m, b| {
        let mut acc = ex.zero_like();
        for u in 0..n {
            for v in 0..n {
                acc = acc.add(&f.get(u, v).mul(&ex.zeta_pow(u * b - m * v)));
            }
        }
        acc.try_scale_rat(&inv_n)
            .expect("N is invertible in every coefficient ring in scope")
    })
}

/// The level-function input to Katz divisor sums: P1 of the symplectic
/// transform of g.phi. Equal to P1(g.phi)^t.
pub fn katz_input<C: CycCoefficient>(phi: &LevelFunction<C>, g: &GL2ModN) -> LevelFunction<C> {
    p1(&symplectic_hat(&phi.act_gl2(g)))
}
