//! Truncated q-expansions and the operators acting on them: theta = q d/dq,
//! Frob (q -> q^p), and the Frobenius pullback phi* = Frob composed with the
//! coefficient Frobenius sigma.
//!
//! A series holds coefficients a_0..a_Q sharing one coefficient ring.
//! Equality compares up to the smaller q-order, with ring equality itself at
//! minimum p-adic precision; two p-adic modular forms are equal exactly when
//! their q-expansions agree, so this convention is the q-expansion principle
//! in executable form. Laurent tails never arise for the series in scope.

use num_rational::BigRational;

use crate::error::Result;
use crate::ring::{Coefficient, CycCoefficient};

#[derive(Clone, Debug)]
pub struct QExpansion<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> QExpansion<C> {
    /// Build from coefficients a_0..a_Q; q_prec is the vector length - 1.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(coeffs.len() >= 2, "need q_prec >= 1");
        QExpansion { coeffs }
    }

    pub fn zero(exemplar: &C, q_prec: usize) -> Self {
        QExpansion { coeffs: vec![exemplar.zero_like(); q_prec + 1] }
    }

    pub fn constant(value: C, q_prec: usize) -> Self {
        let mut s = Self::zero(&value, q_prec);
        s.coeffs[0] = value;
        s
    }

    /// c * q^e truncated at q_prec.
    pub fn monomial(value: C, e: usize, q_prec: usize) -> Self {
        let mut s = Self::zero(&value, q_prec);
        if e <= q_prec {
            s.coeffs[e] = value;
        }
        s
    }

    pub fn q_prec(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, value: C) {
        self.coeffs[n] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, q_prec: usize) -> Self {
        assert!(q_prec <= self.q_prec());
        QExpansion { coeffs: self.coeffs[..=q_prec].to_vec() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let q = self.q_prec().min(rhs.q_prec());
        QExpansion {
            coeffs: (0..=q).map(|i| self.coeffs[i].add(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let q = self.q_prec().min(rhs.q_prec());
        QExpansion {
            coeffs: (0..=q).map(|i| self.coeffs[i].sub(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QExpansion { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    /// Cauchy product truncated at the smaller q-order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let q = self.q_prec().min(rhs.q_prec());
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; q + 1];
        for i in 0..=q {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=q - i {
                if !rhs.coeffs[j].is_zero() {
                    out[i + j] = out[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
                }
            }
        }
        QExpansion { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        QExpansion { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        QExpansion { coeffs: self.coeffs.iter().map(|a| a.scale_int(n)).collect() }
    }

    pub fn try_scale_rat(&self, r: &BigRational) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.try_scale_rat(r)?);
        }
        Ok(QExpansion { coeffs })
    }

    /// theta = q d/dq: coefficient n becomes n * a_n.
    pub fn theta(&self) -> Self {
        QExpansion {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a.scale_int(n as i64))
                .collect(),
        }
    }

    /// Frob: q -> q^p. Coefficient pn of the output is a_n; the q-order is
    /// kept at Q with zeros interleaved, so all series stay in one arena.
    pub fn frob_q(&self, p: u64) -> Self {
        let q = self.q_prec();
        let mut out = Self::zero(&self.coeffs[0], q);
        let p = p as usize;
        for (n, a) in self.coeffs.iter().enumerate() {
            if n * p > q {
                break;
            }
            out.coeffs[n * p] = a.clone();
        }
        out
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> QExpansion<D> {
        QExpansion { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<QExpansion<D>> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(f(c)?);
        }
        Ok(QExpansion { coeffs })
    }
}

impl<C: CycCoefficient> QExpansion<C> {
    /// Coefficientwise arithmetic Frobenius.
    pub fn sigma_coeffs(&self, p: u64) -> Self {
        self.map(|c| c.sigma_p(p))
    }

    /// phi* = Frob applied after (equivalently before) coefficientwise sigma.
    pub fn phi_star(&self, p: u64) -> Self {
        self.sigma_coeffs(p).frob_q(p)
    }
}

/// Coefficientwise equality up to the smaller q-order; the coefficient
/// comparison itself takes minimum p-adic precision.
impl<C: Coefficient> PartialEq for QExpansion<C> {
    fn eq(&self, other: &Self) -> bool {
        let q = self.q_prec().min(other.q_prec());
        (0..=q).all(|i| self.coeffs[i] == other.coeffs[i])
    }
}
