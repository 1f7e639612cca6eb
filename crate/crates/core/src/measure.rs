//! The two-variable Eisenstein measure on Z_p x (Z/N)^2: moments,
//! integration of continuous test functions through q-expansion limits, the
//! binomial integrality criterion, and restriction to the units Z_p^x.
//!
//! The measure is represented extensionally, through its action on test
//! data: its y^r-moments against f are the p-stabilized Katz forms
//!
//!   2 Phi^(p)_{k+1,r,f} = 2 ( Phi_{k+1,r,f(u,v)} - p^r Frob Phi_{k+1,r,f(u,pv)} ),
//!
//! and a change of summation index merges the two divisor sums into one
//! unit-filtered sum over factorizations n = d d' with p not dividing d'.
//! The merged form is what `unit_moment` computes (for any integer r, with
//! d'^r read p-adically when r < 0); `moment` computes the two-series
//! difference, so the pair gives two independent routes to the same values.
//! Restriction to the units is therefore combinatorial: the root-of-unity
//! averaging engine sum_zeta zeta^y = p \[p|y\] never needs ramified
//! extensions, and is exercised through the psi = \[p|y\] vanishing test.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{is_prime, PadicCyc};
use crate::eisenstein::katz_divisor_tail;
use crate::error::{Error, Result};
use crate::level::LevelFunction;
use crate::qexp::QExpansion;
use crate::ring::Coefficient;

/// Handle for the measure mu_N^{k+1}: parameters plus working precisions.
#[derive(Clone, Debug)]
pub struct EisensteinMeasure {
    p: u64,
    level: u32,
    k: u32,
    q_prec: usize,
    p_prec: u32,
}

impl EisensteinMeasure {
    pub fn new(p: u64, level: u32, k: u32, q_prec: usize, p_prec: u32) -> Result<Self> {
        if !is_prime(p) || p == 2 {
            return Err(Error::InvalidParameter(format!("p = {p} must be an odd prime")));
        }
        if level < 3 {
            return Err(Error::InvalidParameter("level must be >= 3".into()));
        }
        if level as u64 % p == 0 {
            return Err(Error::InvalidParameter(format!("p = {p} must not divide N = {level}")));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("the measure needs k > 0".into()));
        }
        if p <= (k + 2) as u64 {
            return Err(Error::InvalidParameter(format!(
                "need p > k + 2 so factorials stay invertible; got p = {p}, k = {k}"
            )));
        }
        if q_prec < 1 || p_prec < 1 {
            return Err(Error::InvalidParameter("precisions must be >= 1".into()));
        }
        Ok(EisensteinMeasure { p, level, k, q_prec, p_prec })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }
    pub fn level(&self) -> u32 {
        self.level
    }
    pub fn weight_index(&self) -> u32 {
        self.k
    }
    pub fn q_prec(&self) -> usize {
        self.q_prec
    }
    pub fn p_prec(&self) -> u32 {
        self.p_prec
    }

    fn check_f(&self, f: &LevelFunction<PadicCyc>) -> Result<()> {
        if f.level() != self.level {
            return Err(Error::LevelMismatch(f.level(), self.level));
        }
        let ex = f.get(0, 0);
        if ex.prime() != self.p {
            return Err(Error::PrimeMismatch(ex.prime(), self.p));
        }
        Ok(())
    }

    /// The r-th moment, int y^r f(u,v) dmu = 2 Phi^(p)_{k+1,r,f}, computed
    /// as the difference of two Katz divisor tails; the constant terms of
    /// the two pieces agree exactly (f(u, p*0) = f(u, 0)) and cancel, so
    /// every moment has zero constant term.
    pub fn moment(&self, r: u32, f: &LevelFunction<PadicCyc>) -> Result<QExpansion<PadicCyc>> {
        self.check_f(f)?;
        let plain = katz_divisor_tail(self.k + 1, r, f, self.q_prec)?;
        let scaled_arg = LevelFunction::from_fn(self.level, |u, v| {
            f.get(u, (self.p as i64) * v).clone()
        });
        let twisted = katz_divisor_tail(self.k + 1, r, &scaled_arg, self.q_prec)?;
        let p_pow_r = BigRational::from_integer(BigInt::from(self.p).pow(r));
        let diff = plain.sub(&twisted.frob_q(self.p).try_scale_rat(&p_pow_r)?);
        Ok(diff.scale_int(2))
    }

    /// Integration of a continuous test function psi:
    ///
    ///   coeff of q^m = sum_{dd'=m} ( d^{k+1} psi(d') f(d,d')
    ///                                - (-d)^{k+1} psi(-d') f(-d,-d') )
    ///     minus, when p | m, the same sum over dd' = m/p with psi(p d'),
    ///     psi(-p d') and f(d, p d'), f(-d, -p d').
    ///
    /// Returns 2 * integral, matching the doubled moment convention.
    pub fn integrate(
        &self,
        psi: &TestFunction<'_>,
        f: &LevelFunction<PadicCyc>,
    ) -> Result<QExpansion<PadicCyc>> {
        self.check_f(f)?;
        let n_level = self.level as i64;
        let p = self.p as i64;
        let zero = f.get(0, 0).zero_like();
        let sign = if (self.k + 1) % 2 == 0 { 1 } else { -1 };
        let mut coeffs = vec![zero.clone(); self.q_prec + 1];
        for m in 1..=self.q_prec as i64 {
            let mut acc = zero.clone();
            for d in 1..=m {
                if m % d != 0 {
                    continue;
                }
                let dp = m / d;
                let we = (self.k + 1) as i64;
                let plus = f
                    .get(d % n_level, dp % n_level)
                    .mul(&psi.eval(dp))
                    .scale_unit_pow(d, we)?;
                let minus = f
                    .get(-d % n_level, -dp % n_level)
                    .mul(&psi.eval(-dp))
                    .scale_unit_pow(d, we)?
                    .scale_int(sign);
                acc = acc.add(&plus.sub(&minus));
            }
            if m % p == 0 {
                let mp = m / p;
                for d in 1..=mp {
                    if mp % d != 0 {
                        continue;
                    }
                    let dp = mp / d;
                    let we = (self.k + 1) as i64;
                    let plus = f
                        .get(d % n_level, (p * dp) % n_level)
                        .mul(&psi.eval(p * dp))
                        .scale_unit_pow(d, we)?;
                    let minus = f
                        .get(-d % n_level, (-p * dp) % n_level)
                        .mul(&psi.eval(-p * dp))
                        .scale_unit_pow(d, we)?
                        .scale_int(sign);
                    acc = acc.sub(&plus.sub(&minus));
                }
            }
            coeffs[m as usize] = acc;
        }
        Ok(QExpansion::from_coeffs(coeffs))
    }

    /// The measure-normalized integral: half of `integrate`, i.e. the
    /// actual value of int psi(y) f(u,v) dmu.
    pub fn integrate_normalized(
        &self,
        psi: &TestFunction<'_>,
        f: &LevelFunction<PadicCyc>,
    ) -> Result<QExpansion<PadicCyc>> {
        let doubled = self.integrate(psi, f)?;
        doubled.try_scale_rat(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }

    /// The unit-restricted moment Phi^(p)_{k+1,r,f} for any integer r
    /// (d'^r through p-adic inversion when r < 0): coefficient of q^m is
    ///
    ///   (1/2) sum_{dd'=m, p not | d'} ( d^{k+1} d'^r f(d,d')
    ///                                   - (-d)^{k+1} (-d')^r f(-d,-d') ).
    ///
    /// Equals moment(r)/2 for r >= 0 since the measure is supported on the
    /// units.
    pub fn unit_moment(&self, r: i64, f: &LevelFunction<PadicCyc>) -> Result<QExpansion<PadicCyc>> {
        self.check_f(f)?;
        unit_filtered_divisor_series(self.k + 1, r, f, self.q_prec)
    }

    /// The binomial integrality criterion. For each r <= r_max, forms the
    /// integer-coefficient combination
    ///
    ///   A_r = sum_m s(r,m) * moment(m),      r! binom(y,r) = sum_m s(r,m) y^m
    ///
    /// (signed Stirling numbers of the first kind) and checks that every
    /// q-coefficient has valuation >= v_p(r!), which is the integrality of
    /// the binomial moment binom(y,r) cleared of its denominator.
    pub fn integrality_check(
        &self,
        r_max: u32,
        f: &LevelFunction<PadicCyc>,
    ) -> Result<IntegralityReport> {
        self.check_f(f)?;
        let moments: Vec<QExpansion<PadicCyc>> =
            (0..=r_max).map(|m| self.moment(m, f)).collect::<Result<_>>()?;
        let mut entries = Vec::with_capacity(r_max as usize + 1);
        for r in 0..=r_max {
            let stirling = falling_factorial_coeffs(r);
            let zero = f.get(0, 0).zero_like();
            let mut combo = QExpansion::zero(&zero, self.q_prec);
            for (m, c) in stirling.iter().enumerate() {
                if !c.is_zero() {
                    combo = combo.add(&moments[m].try_scale_rat(&BigRational::from_integer(c.clone()))?);
                }
            }
            let need = valuation_of_factorial(r, self.p);
            let mut min_val = self.p_prec;
            let mut first_fail = None;
            for (i, c) in combo.coeffs().iter().enumerate() {
                let v = c.valuation();
                if v < min_val {
                    min_val = v;
                }
                if v < need && first_fail.is_none() {
                    first_fail = Some(i);
                }
            }
            entries.push(IntegralityEntry {
                r,
                pass: first_fail.is_none(),
                // valuation of the binomial moment itself, i.e. after the
                // division by r! that the integral reformulation avoids
                min_valuation: min_val as i64 - need as i64,
                first_failing_q_power: first_fail,
            });
        }
        Ok(IntegralityReport { entries })
    }
}

/// The shared divisor-sum kernel behind every unit-restricted series:
/// coefficient of q^m is
/// (1/2) sum_{dd'=m, p not | d'} (d^e d'^r f(d,d') - (-d)^e (-d')^r f(-d,-d')).
pub(crate) fn unit_filtered_divisor_series(
    exp_d: u32,
    r: i64,
    f: &LevelFunction<PadicCyc>,
    q_prec: usize,
) -> Result<QExpansion<PadicCyc>> {
    let n_level = f.level() as i64;
    let ex = f.get(0, 0);
    let p = ex.prime() as i64;
    let zero = ex.zero_like();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    // (-d)^e (-d')^r = (-1)^(e + r) d^e d'^r
    let sign = if (exp_d as i64 + r).rem_euclid(2) == 0 { 1 } else { -1 };
    let mut coeffs = vec![zero.clone(); q_prec + 1];
    for m in 1..=q_prec as i64 {
        let mut acc = zero.clone();
        for d in 1..=m {
            if m % d != 0 {
                continue;
            }
            let dp = m / d;
            if dp % p == 0 {
                continue;
            }
            let plus = f
                .get(d % n_level, dp % n_level)
                .scale_unit_pow(d, exp_d as i64)?
                .scale_unit_pow(dp, r)?;
            let minus = f
                .get(-d % n_level, -dp % n_level)
                .scale_unit_pow(d, exp_d as i64)?
                .scale_unit_pow(dp, r)?
                .scale_int(sign);
            acc = acc.add(&plus.sub(&minus));
        }
        coeffs[m as usize] = acc.try_scale_rat(&half)?;
    }
    Ok(QExpansion::from_coeffs(coeffs))
}

/// A continuous test function on Z_p, evaluated at integer arguments; the
/// value may only depend on the argument mod p^M at the working precision.
pub struct TestFunction<'a> {
    eval: Box<dyn Fn(i64) -> PadicCyc + 'a>,
    pub declared_continuous: bool,
}

impl<'a> TestFunction<'a> {
    pub fn from_fn(eval: impl Fn(i64) -> PadicCyc + 'a, declared_continuous: bool) -> Self {
        TestFunction { eval: Box::new(eval), declared_continuous }
    }

    /// psi(y) = y^r for r >= 0.
    pub fn power(level: u32, p: u64, precision: u32, r: u32) -> Self {
        Self::from_fn(
            move |y| {
                PadicCyc::one(level, p, precision)
                    .scale_unit_pow(y, r as i64)
                    .expect("non-negative powers never invert")
            },
            true,
        )
    }

    /// The indicator of p Z_p.
    pub fn indicator_p_multiples(level: u32, p: u64, precision: u32) -> Self {
        Self::from_fn(
            move |y| {
                if y.rem_euclid(p as i64) == 0 {
                    PadicCyc::one(level, p, precision)
                } else {
                    PadicCyc::zero(level, p, precision)
                }
            },
            true,
        )
    }

    pub fn one(level: u32, p: u64, precision: u32) -> Self {
        Self::from_fn(move |_| PadicCyc::one(level, p, precision), true)
    }

    pub fn eval(&self, y: i64) -> PadicCyc {
        (self.eval)(y)
    }
}

/// Coefficients of y (y-1) ... (y-r+1) = r! binom(y, r), ascending in y:
/// the signed Stirling numbers of the first kind.
pub fn falling_factorial_coeffs(r: u32) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for j in 0..r as i64 {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * BigInt::from(j);
        }
        coeffs = next;
    }
    coeffs
}

pub fn valuation_of_factorial(r: u32, p: u64) -> u32 {
    let mut v = 0u64;
    let mut q = r as u64 / p;
    while q > 0 {
        v += q;
        q /= p;
    }
    v as u32
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct IntegralityEntry {
    pub r: u32,
    pub pass: bool,
    /// Valuation margin of the binomial moment: min over q-coefficients of
    /// v_p(coefficient) - v_p(r!); non-negative exactly when integral.
    pub min_valuation: i64,
    pub first_failing_q_power: Option<usize>,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct IntegralityReport {
    pub entries: Vec<IntegralityEntry>,
}

impl IntegralityReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::katz_phi;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_integral_table(
        n: u32,
        p: u64,
        m: u32,
        rng: &mut StdRng,
    ) -> LevelFunction<PadicCyc> {
        LevelFunction::from_fn(n, |_, _| {
            PadicCyc::from_int(n, p, m, rng.gen_range(-50..=50))
        })
    }

    fn rational_table_for(
        f: &LevelFunction<PadicCyc>,
        n: u32,
    ) -> LevelFunction<BigRational> {
        // lift the residue table to small integers for the exact route
        LevelFunction::from_fn(n, |a, b| {
            BigRational::from_integer(BigInt::from(f.get(a, b).coeffs()[0] as i64))
        })
    }

    #[test]
    fn parameter_gate() {
        assert!(EisensteinMeasure::new(5, 3, 1, 10, 4).is_ok());
        assert!(EisensteinMeasure::new(4, 3, 1, 10, 4).is_err(), "p must be prime");
        assert!(EisensteinMeasure::new(2, 3, 1, 10, 4).is_err(), "p must be odd");
        assert!(EisensteinMeasure::new(3, 9, 1, 10, 4).is_err(), "p | N");
        assert!(EisensteinMeasure::new(5, 3, 0, 10, 4).is_err(), "k > 0");
        assert!(EisensteinMeasure::new(5, 3, 3, 10, 4).is_err(), "p > k + 2");
    }

    #[test]
    fn zero_f_gives_zero_everything() {
        let mu = EisensteinMeasure::new(5, 3, 1, 12, 4).unwrap();
        let f = LevelFunction::constant(3, PadicCyc::zero(3, 5, 4));
        assert!(mu.moment(3, &f).unwrap().is_zero());
        assert!(mu.unit_moment(-2, &f).unwrap().is_zero());
    }

    #[test]
    fn moments_have_zero_constant_term() {
        let mut rng = StdRng::seed_from_u64(71);
        let mu = EisensteinMeasure::new(7, 4, 2, 14, 5).unwrap();
        let f = random_integral_table(4, 7, 5, &mut rng);
        for r in 0..=6 {
            assert!(mu.moment(r, &f).unwrap().coeff(0).is_zero(), "r={r}");
        }
    }

    #[test]
    fn moment_equals_merged_unit_filtered_enumeration() {
        // independent index bookkeeping: d'' = p d' merges the two sums
        let mut rng = StdRng::seed_from_u64(72);
        for (p, n, k) in [(5u64, 3u32, 1u32), (7, 4, 2)] {
            let mu = EisensteinMeasure::new(p, n, k, 20, 5).unwrap();
            let f = random_integral_table(n, p, 5, &mut rng);
            for r in 0..=4i64 {
                let direct = mu.moment(r as u32, &f).unwrap();
                let merged = mu.unit_moment(r, &f).unwrap().scale_int(2);
                assert_eq!(direct, merged, "p={p} N={n} k={k} r={r}");
            }
        }
    }

    #[test]
    fn moment_matches_exact_katz_difference() {
        // second independent route: the two Katz forms with their true
        // constant terms over Q(zeta_N), subtracted exactly, then embedded
        let mut rng = StdRng::seed_from_u64(73);
        let (p, n, k, m) = (5u64, 3u32, 1u32, 5u32);
        let mu = EisensteinMeasure::new(p, n, k, 16, m).unwrap();
        let fp = random_integral_table(n, p, m, &mut rng);
        let f = rational_table_for(&fp, n).to_cyc();
        let fp_embed = f.embed_padic(p, m).unwrap();
        // r = 0 uses the full katz_phi with L-value constant terms
        let plain = katz_phi(k + 1, 0, &f, 16).unwrap();
        let twisted_arg = LevelFunction::from_fn(n, |u, v| f.get(u, (p as i64) * v).clone());
        let twisted = katz_phi(k + 1, 0, &twisted_arg, 16).unwrap();
        let exact_diff = plain.sub(&twisted.frob_q(p));
        let embedded = exact_diff.try_map(|c| c.embed_padic(p, m)).unwrap().scale_int(2);
        assert_eq!(mu.moment(0, &fp_embed).unwrap(), embedded);
    }

    #[test]
    fn integrate_specializations() {
        let mut rng = StdRng::seed_from_u64(74);
        let (p, n, k, m) = (5u64, 3u32, 2u32, 5u32);
        let mu = EisensteinMeasure::new(p, n, k, 18, m).unwrap();
        let f = random_integral_table(n, p, m, &mut rng);
        // psi(y) = y^r recovers the moment
        for r in [0u32, 1, 3] {
            let psi = TestFunction::power(n, p, m, r);
            assert_eq!(mu.integrate(&psi, &f).unwrap(), mu.moment(r, &f).unwrap(), "r={r}");
        }
        // psi = 1 is the r = 0 moment
        let one = TestFunction::one(n, p, m);
        assert_eq!(mu.integrate(&one, &f).unwrap(), mu.moment(0, &f).unwrap());
        // the normalized variant is the unit moment itself (support on units)
        assert_eq!(
            mu.integrate_normalized(&one, &f).unwrap(),
            mu.unit_moment(0, &f).unwrap()
        );
    }

    #[test]
    fn support_on_units() {
        let mut rng = StdRng::seed_from_u64(75);
        for (p, n) in [(5u64, 3u32), (7, 4)] {
            for k in [1u32, 2, 3] {
                if p <= (k + 2) as u64 {
                    continue; // outside the measure gate p > k + 2
                }
                let mu = EisensteinMeasure::new(p, n, k, 30, 6).unwrap();
                let f = random_integral_table(n, p, 6, &mut rng);
                let psi = TestFunction::indicator_p_multiples(n, p, 6);
                let series = mu.integrate(&psi, &f).unwrap();
                assert!(series.is_zero(), "p={p} N={n} k={k}");
            }
        }
    }

    #[test]
    fn negative_moment_unit_factorization_at_q_p() {
        // at q^p only (d, d') = (p, 1) survives the unit filter
        let mut rng = StdRng::seed_from_u64(76);
        let (p, n, k, m) = (5u64, 4u32, 1u32, 6u32);
        let mu = EisensteinMeasure::new(p, n, k, p as usize + 1, m).unwrap();
        let f = random_integral_table(n, p, m, &mut rng);
        for r in [-3i64, -1, 0, 2] {
            let series = mu.unit_moment(r, &f).unwrap();
            let pi = p as i64;
            let sign = if (k as i64 + 1 + r).rem_euclid(2) == 0 { 1 } else { -1 };
            let expect = f
                .get(pi, 1)
                .scale_int(pi.pow(k + 1))
                .sub(&f.get(-pi, -1).scale_int(sign * pi.pow(k + 1)))
                .try_scale_rat(&BigRational::new(BigInt::from(1), BigInt::from(2)))
                .unwrap();
            assert_eq!(*series.coeff(p as usize), expect, "r={r}");
        }
    }

    #[test]
    fn interpolation_congruence() {
        // r = r' mod (p-1) p^m  =>  unit moments agree mod p^{m+1}
        let mut rng = StdRng::seed_from_u64(77);
        for (p, n, k) in [(5u64, 3u32, 1u32), (7, 3, 2)] {
            let mu = EisensteinMeasure::new(p, n, k, 16, 6).unwrap();
            let f = random_integral_table(n, p, 6, &mut rng);
            for m in 0..=2u32 {
                let step = ((p - 1) * p.pow(m)) as i64;
                for r in [-2i64, 0, 3] {
                    let a = mu.unit_moment(r, &f).unwrap();
                    let b = mu.unit_moment(r + step, &f).unwrap();
                    let am = a.map(|c| c.reduce_precision(m + 1));
                    let bm = b.map(|c| c.reduce_precision(m + 1));
                    assert_eq!(am, bm, "p={p} k={k} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn falling_factorial_coefficients() {
        assert_eq!(falling_factorial_coeffs(0), vec![BigInt::one()]);
        assert_eq!(falling_factorial_coeffs(1), vec![BigInt::zero(), BigInt::one()]);
        // y(y-1) = -y + y^2
        assert_eq!(
            falling_factorial_coeffs(2),
            vec![BigInt::zero(), BigInt::from(-1), BigInt::one()]
        );
        // y(y-1)(y-2) = 2y - 3y^2 + y^3
        assert_eq!(
            falling_factorial_coeffs(3),
            vec![BigInt::zero(), BigInt::from(2), BigInt::from(-3), BigInt::one()]
        );
        assert_eq!(valuation_of_factorial(6, 5), 1);
        assert_eq!(valuation_of_factorial(25, 5), 6);
    }

    #[test]
    fn integrality_holds_for_random_tables() {
        let mut rng = StdRng::seed_from_u64(78);
        let mu = EisensteinMeasure::new(5, 3, 1, 20, 6).unwrap();
        for _ in 0..4 {
            let f = random_integral_table(3, 5, 6, &mut rng);
            let report = mu.integrality_check(6, &f).unwrap();
            assert!(report.all_pass(), "{report:?}");
            assert_eq!(report.entries.len(), 7);
            // r = 0 and r = 1 are the plain moments
            assert!(report.entries[0].pass && report.entries[1].pass);
        }
    }

    #[test]
    fn integrality_binomial_combination_matches_direct_enumeration() {
        // oracle: coefficient of q^n of the r-th binomial combination is the
        // unit-filtered sum with the falling factorial of d' as weight
        let mut rng = StdRng::seed_from_u64(79);
        let (p, n, k, m, q) = (5u64, 3u32, 1u32, 6u32, 14usize);
        let mu = EisensteinMeasure::new(p, n, k, q, m).unwrap();
        let f = random_integral_table(n, p, m, &mut rng);
        let r = 4u32;
        let stirling = falling_factorial_coeffs(r);
        let mut combo = QExpansion::zero(&PadicCyc::zero(n, p, m), q);
        for (i, c) in stirling.iter().enumerate() {
            combo = combo.add(
                &mu.moment(i as u32, &f)
                    .unwrap()
                    .try_scale_rat(&BigRational::from_integer(c.clone()))
                    .unwrap(),
            );
        }
        let ff = |x: i64, r: u32| -> i64 {
            let mut acc = 1i64;
            for j in 0..r as i64 {
                acc *= x - j;
            }
            acc
        };
        let sign = if (k + 1) % 2 == 0 { 1i64 } else { -1 };
        for mm in 1..=q as i64 {
            let mut acc = PadicCyc::zero(n, p, m);
            for d in 1..=mm {
                if mm % d != 0 {
                    continue;
                }
                let dp = mm / d;
                if dp % p as i64 == 0 {
                    continue;
                }
                let plus = f.get(d, dp).scale_int(d.pow(k + 1) * ff(dp, r));
                let minus = f.get(-d, -dp).scale_int(sign * d.pow(k + 1) * ff(-dp, r));
                acc = acc.add(&plus.sub(&minus));
            }
            assert_eq!(*combo.coeff(mm as usize), acc, "q^{mm}");
        }
    }
}
