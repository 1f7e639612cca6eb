//! Sections of Sym^k H over the trivialized-curve coordinate ring in the
//! unit-root basis, the Gauss-Manin connection and Frobenius, the explicit
//! section alpha built from p-adic Eisenstein-Kronecker series, and the
//! differential-equation verifier for syntomic pairs.
//!
//! A section is a tuple (c_0, ..., c_k) of q-expansions, c_n the
//! coefficient of w^n u^{k-n} where {w, u} is the dual of the unit-root
//! basis; the connection sends w -> 0 and u -> w (tensor the Kodaira-
//! Spencer form), so
//!
//!   nabla(sum c_n w^n u^{k-n})_n = (k - n + 1) c_{n-1} + theta(c_n).
//!
//! Frobenius acts on the one-form side by slot: out_n = p^{-n} phi*(c_n),
//! the composite of the diagonal (p, 1) action on the basis, dualization,
//! the Tate twist, and the factor p the Kodaira-Spencer form picks up under
//! q -> q^p. Slot 0, the only slot the main identity populates, is twist-free.
//!
//! The de Rham Eisenstein form is kept over Q(zeta_N): its constant term
//! can carry a von Staudt-Clausen denominator divisible by p when
//! p = k + 3 (for example k = 4, p = 7 with B_6 = 1/42), so it does not
//! always embed p-adically on its own. The verifier forms (1 - Phi) of it
//! exactly and embeds the difference, which is always integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{CycRat, PadicCyc};
use crate::eisenstein::eis_classical;
use crate::error::{Error, Result};
use crate::level::{katz_input, GL2ModN, LevelFunction};
use crate::lfunc::factorial;
use crate::measure::unit_filtered_divisor_series;
use crate::qexp::QExpansion;
use crate::ring::{Coefficient, CycCoefficient};

/// A section of Sym^k H: coefficients (c_0, ..., c_k) of w^n u^{k-n}.
#[derive(Clone, Debug)]
pub struct SymSection<C> {
    k: u32,
    coeffs: Vec<QExpansion<C>>,
}

/// The same tuple shape read as a Sym^k H-valued one-form (tensor the
/// Kodaira-Spencer form dual to theta).
#[derive(Clone, Debug)]
pub struct SymOneForm<C> {
    k: u32,
    coeffs: Vec<QExpansion<C>>,
}

macro_rules! tuple_impls {
    ($ty:ident) => {
        impl<C: Coefficient> $ty<C> {
            pub fn from_coeffs(k: u32, coeffs: Vec<QExpansion<C>>) -> Self {
                assert_eq!(coeffs.len(), k as usize + 1, "need k + 1 slots");
                $ty { k, coeffs }
            }

            pub fn zero(k: u32, exemplar: &C, q_prec: usize) -> Self {
                $ty {
                    k,
                    coeffs: (0..=k).map(|_| QExpansion::zero(exemplar, q_prec)).collect(),
                }
            }

            pub fn k(&self) -> u32 {
                self.k
            }

            pub fn slot(&self, n: usize) -> &QExpansion<C> {
                &self.coeffs[n]
            }

            pub fn slot_mut(&mut self, n: usize) -> &mut QExpansion<C> {
                &mut self.coeffs[n]
            }

            pub fn slots(&self) -> &[QExpansion<C>] {
                &self.coeffs
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(|c| c.is_zero())
            }

            pub fn sub(&self, rhs: &Self) -> Self {
                assert_eq!(self.k, rhs.k);
                $ty {
                    k: self.k,
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&rhs.coeffs)
                        .map(|(a, b)| a.sub(b))
                        .collect(),
                }
            }

            pub fn scale_int(&self, n: i64) -> Self {
                $ty { k: self.k, coeffs: self.coeffs.iter().map(|c| c.scale_int(n)).collect() }
            }

            pub fn try_map<D: Coefficient>(
                &self,
                f: impl Fn(&C) -> Result<D>,
            ) -> Result<$ty<D>> {
                let mut coeffs = Vec::with_capacity(self.coeffs.len());
                for c in &self.coeffs {
                    coeffs.push(c.try_map(&f)?);
                }
                Ok($ty { k: self.k, coeffs })
            }
        }
    };
}

tuple_impls!(SymSection);
tuple_impls!(SymOneForm);

impl<C: Coefficient> PartialEq for SymSection<C> {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.coeffs == other.coeffs
    }
}

impl<C: Coefficient> PartialEq for SymOneForm<C> {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.coeffs == other.coeffs
    }
}

/// The Gauss-Manin connection in the unit-root coordinates:
/// out_n = (k - n + 1) c_{n-1} + theta(c_n), with c_{-1} = 0.
pub fn nabla<C: Coefficient>(s: &SymSection<C>) -> SymOneForm<C> {
    let k = s.k;
    let coeffs = (0..=k as usize)
        .map(|n| {
            let mut out = s.coeffs[n].theta();
            if n >= 1 {
                out = out.add(&s.coeffs[n - 1].scale_int(k as i64 - n as i64 + 1));
            }
            out
        })
        .collect();
    SymOneForm { k, coeffs }
}

/// Coefficient rings in which the slot-n Frobenius division by p^n makes
/// sense.
pub trait FrobeniusScale: CycCoefficient {
    /// Divide by p^n; exact over Q(zeta_N), valuation-checked (and
    /// precision-reducing) over Z\[zeta_N\]/p^M.
    fn div_p_pow(&self, p: u64, n: u32) -> Result<Self>;
}

impl FrobeniusScale for CycRat {
    fn div_p_pow(&self, p: u64, n: u32) -> Result<Self> {
        let scale = BigRational::new(BigInt::one(), BigInt::from(p).pow(n));
        self.try_scale_rat(&scale)
    }
}

impl FrobeniusScale for PadicCyc {
    fn div_p_pow(&self, p: u64, n: u32) -> Result<Self> {
        assert_eq!(p, self.prime());
        self.div_exact_p_pow(n)
    }
}

/// Frobenius on Sym^k H(1)-valued one-forms: out_n = p^{-n} phi*(c_n).
pub fn frobenius_oneform<C: FrobeniusScale>(
    form: &SymOneForm<C>,
    p: u64,
) -> Result<SymOneForm<C>> {
    let mut coeffs = Vec::with_capacity(form.coeffs.len());
    for (n, c) in form.coeffs.iter().enumerate() {
        let twisted = c.phi_star(p);
        let divided = twisted.try_map(|x| {
            x.div_p_pow(p, n as u32).map_err(|e| match e {
                Error::InsufficientDivisibility { need, got, .. } => {
                    Error::InsufficientDivisibility { slot: n, need, got }
                }
                other => other,
            })
        })?;
        coeffs.push(divided);
    }
    Ok(SymOneForm { k: form.k, coeffs })
}

/// The de Rham Eisenstein one-form in these coordinates, kept exact:
/// c_0 = (1/k!) E_{k+2,0,phi} in the u^k slot, all other slots zero. The
/// absolute de Rham normalization differs from this coordinate convention
/// by the scalar 2 / N^{k+1}, reported alongside.
pub struct DeRhamEisenstein {
    pub form: SymOneForm<CycRat>,
    /// Ratio relating the coordinate normalization used here to the
    /// absolute de Rham class normalization.
    pub normalization_ratio: BigRational,
}

pub fn eis_dr_oneform(
    k: u32,
    phi: &LevelFunction<BigRational>,
    g: &GL2ModN,
    q_prec: usize,
) -> Result<DeRhamEisenstein> {
    if k == 0 {
        return Err(Error::InvalidParameter("need k >= 1".into()));
    }
    let n = phi.level();
    let inv_kfact = BigRational::new(BigInt::one(), factorial(k));
    let series = eis_classical(k, phi, g, q_prec)?.try_scale_rat(&inv_kfact)?;
    let zero = CycRat::zero(n);
    let mut coeffs = vec![series];
    for _ in 1..=k {
        coeffs.push(QExpansion::zero(&zero, q_prec));
    }
    Ok(DeRhamEisenstein {
        form: SymOneForm { k, coeffs },
        normalization_ratio: BigRational::new(BigInt::from(2), BigInt::from(n).pow(k + 1)),
    })
}

/// The explicit section solving the syntomic differential equation:
///
///   alpha = sum_{n=0}^{k} ((-1)^n / (k-n)!) E^(p)_{k+1-n, -1-n, phi} w^n u^{k-n}.
///
/// Slot n is the unit-filtered divisor series with exponent pair
/// (k - n, -1 - n); at n = k the first index k + 1 - n = 1 falls outside
/// the measure handle's k > 0 gate, so the sum formula is driven directly
/// by the exponent pair, which is well-defined for every pair with p
/// not dividing d'.
pub fn alpha_eis(
    k: u32,
    phi: &LevelFunction<BigRational>,
    g: &GL2ModN,
    p: u64,
    q_prec: usize,
    p_prec: u32,
) -> Result<SymSection<PadicCyc>> {
    if k == 0 {
        return Err(Error::InvalidParameter("need k >= 1".into()));
    }
    if !crate::arith::is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!("p = {p} must be an odd prime")));
    }
    if phi.level() as u64 % p == 0 {
        return Err(Error::InvalidParameter("p must not divide N".into()));
    }
    if p <= (k + 2) as u64 {
        return Err(Error::InvalidParameter(format!(
            "need p > k + 2; got p = {p}, k = {k}"
        )));
    }
    if !phi.is_p_integral(p) {
        return Err(Error::NotPIntegral { p, den: "phi".into() });
    }
    let f = katz_input(&phi.embed_padic(p, p_prec)?, g);
    let mut coeffs = Vec::with_capacity(k as usize + 1);
    for n in 0..=k {
        let series = unit_filtered_divisor_series(k - n, -1 - n as i64, &f, q_prec)?;
        let scale = BigRational::new(
            BigInt::from(if n % 2 == 0 { 1 } else { -1 }),
            factorial(k - n),
        );
        coeffs.push(series.try_scale_rat(&scale)?);
    }
    Ok(SymSection { k, coeffs })
}

/// One nonzero residual coordinate of a failed verification.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ResidualFault {
    pub slot: usize,
    pub q_power: usize,
    pub valuation: u32,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SyntomicReport {
    pub pass: bool,
    pub q_prec: usize,
    pub p_prec: u32,
    pub faults: Vec<ResidualFault>,
}

/// Check the defining equation of a syntomic pair, nabla(alpha) = (1 - Phi) xi,
/// at working precision. The second condition nabla(xi) = 0 is vacuous on a
/// one-dimensional base and is not represented. The de Rham side is exact;
/// (1 - Phi) xi is computed over Q(zeta_N) and embedded, which is always
/// possible because the Frobenius difference kills the non-integral
/// constant.
pub fn verify_syntomic_pair(
    alpha: &SymSection<PadicCyc>,
    xi: &SymOneForm<CycRat>,
    p: u64,
) -> Result<SyntomicReport> {
    if alpha.k != xi.k {
        return Err(Error::InvalidParameter(format!(
            "symmetric powers differ: {} vs {}",
            alpha.k, xi.k
        )));
    }
    let exemplar = alpha.coeffs[0].coeff(0);
    let p_prec = exemplar.precision();
    let lhs = nabla(alpha);
    let frob = frobenius_oneform(xi, p)?;
    let rhs_exact = xi.sub(&frob);
    let rhs = rhs_exact.try_map(|c| c.embed_padic(p, p_prec))?;
    let q_prec = lhs.coeffs[0].q_prec().min(rhs.coeffs[0].q_prec());
    let mut faults = Vec::new();
    for n in 0..=alpha.k as usize {
        for i in 0..=q_prec {
            let residual = lhs.coeffs[n].coeff(i).sub(rhs.coeffs[n].coeff(i));
            if !residual.is_zero() {
                faults.push(ResidualFault {
                    slot: n,
                    q_power: i,
                    valuation: residual.valuation(),
                });
            }
        }
    }
    Ok(SyntomicReport { pass: faults.is_empty(), q_prec, p_prec, faults })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct KernelReport {
    /// nabla(candidate) = 0 at working precision.
    pub horizontal: bool,
    /// c_0 = ... = c_{k-1} = 0.
    pub lower_slots_vanish: bool,
    /// c_k has no q^i term for i >= 1.
    pub top_slot_constant: bool,
}

impl KernelReport {
    pub fn pass(&self) -> bool {
        self.horizontal && self.lower_slots_vanish && self.top_slot_constant
    }
}

/// Probe the horizontal-section recursion: nabla(s) = 0 forces
/// theta(c_0) = 0 and theta(c_n) = -(k - n + 1) c_{n-1}, whose only
/// solutions on truncations are c_0 = ... = c_{k-1} = 0 with c_k constant.
/// A non-horizontal candidate is reported as not in the kernel.
pub fn horizontal_kernel_probe<C: Coefficient>(candidate: &SymSection<C>) -> KernelReport {
    let horizontal = nabla(candidate).is_zero();
    let k = candidate.k as usize;
    let lower_slots_vanish = candidate.coeffs[..k].iter().all(|c| c.is_zero());
    let top = &candidate.coeffs[k];
    let top_slot_constant = (1..=top.q_prec()).all(|i| top.coeff(i).is_zero());
    KernelReport { horizontal, lower_slots_vanish, top_slot_constant }
}
