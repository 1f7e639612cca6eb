//! q-expansions of the classical Eisenstein series E_{k+2,0,phi} and of the
//! Katz forms Phi_{k,r,f}, plus a complex lattice-sum oracle.
//!
//! Divisor sums run over ordered pairs (d, d') of positive integers with
//! d d' = n; f(-d,-d') means f at (-d mod N, -d' mod N) while (-d)^k is an
//! integer power with sign. The exponent on d is the first index and the
//! exponent on d' the second, the pairing every p-stabilized formula
//! downstream relies on.
//!
//! Normalization. katz_phi returns Phi itself, i.e. half of the doubled
//! q-expansion 2 Phi. Its r = 0 constant term is (1/2) L(-k, m -> f(m,0));
//! equivalently a quarter of the L-value of the antisymmetrized slice
//! f(m,0) - (-1)^k f(-m,0), whose L-value is twice that of the plain slice.
//! This is the normalization under which the lattice sum defining
//! E_{k+2,0,phi} reproduces the q-expansion exactly, including the constant
//! term (the classical weight-w series has constant zeta(1-w)/2).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::arith::CycRat;
use crate::error::{Error, Result};
use crate::level::{katz_input, p1, symplectic_hat, GL2ModN, LevelFunction};
use crate::lfunc::l_value_neg;
use crate::qexp::QExpansion;
use crate::ring::{Coefficient, CycCoefficient};

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// The divisor-sum part of the Katz form: coefficient of q^n is
/// (1/2) sum_{dd'=n} (d^k d'^r f(d,d') - (-d)^k (-d')^r f(-d,-d')),
/// with zero constant term.
pub(crate) fn katz_divisor_tail<C: CycCoefficient>(
    k: u32,
    r: u32,
    f: &LevelFunction<C>,
    q_prec: usize,
) -> Result<QExpansion<C>> {
    let n_level = f.level() as i64;
    let zero = f.get(0, 0).zero_like();
    let mut coeffs = vec![zero.clone(); q_prec + 1];
    let sign = if (k + r) % 2 == 0 { 1 } else { -1 };
    for n in 1..=q_prec as i64 {
        let mut acc = zero.clone();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let dp = n / d;
            // exact integer weight; stays correct for large k and q_prec
            let weight = BigRational::from_integer(BigInt::from(d).pow(k) * BigInt::from(dp).pow(r));
            let plus = f.get(d % n_level, dp % n_level).try_scale_rat(&weight)?;
            let minus = f
                .get(-d % n_level, -dp % n_level)
                .try_scale_rat(&weight)?
                .scale_int(sign);
            acc = acc.add(&plus.sub(&minus));
        }
        coeffs[n as usize] = acc.try_scale_rat(&half())?;
    }
    Ok(QExpansion::from_coeffs(coeffs))
}

/// The Katz form Phi_{k,r,f} as a truncated q-expansion. Defined for
/// (r = 0, k >= 2) and (r >= 1, k >= 1); the constant term is nonzero only
/// for r = 0.
pub fn katz_phi<C: CycCoefficient>(
    k: u32,
    r: u32,
    f: &LevelFunction<C>,
    q_prec: usize,
) -> Result<QExpansion<C>> {
    let valid = (r == 0 && k >= 2) || (r >= 1 && k >= 1);
    if !valid {
        return Err(Error::UnsupportedIndices { k: k as i64, r: r as i64 });
    }
    let mut series = katz_divisor_tail(k, r, f, q_prec)?;
    if r == 0 {
        let slice = crate::lfunc::PeriodicFunction::from_fn(f.level(), |m| f.get(m, 0).clone());
        let constant = l_value_neg(&slice, k)?.try_scale_rat(&half())?;
        series.set_coeff(0, constant);
    }
    Ok(series)
}

/// q-expansion of the holomorphic Eisenstein series E_{k+2,0,phi} at the
/// component g, over Q(zeta_N):
///
///   (1/2) L(-1-k, m -> P1(g phi)(0, m))
///     + sum_{n>0} q^n (1/2) sum_{dd'=n} ( d^{k+1} P1(g phi)(d', d)
///                                        - (-d)^{k+1} P1(g phi)(-d', -d) ).
///
/// Equals katz_phi(k+1, 0, P1(hat(g phi))) through the transpose identity
/// P1(hat psi) = P1(psi)^t; both routes are exercised by the tests.
pub fn eis_classical(
    k: u32,
    phi: &LevelFunction<BigRational>,
    g: &GL2ModN,
    q_prec: usize,
) -> Result<QExpansion<CycRat>> {
    if k < 1 {
        return Err(Error::InvalidParameter("eis_classical needs k >= 1".into()));
    }
    let n_level = phi.level() as i64;
    let transformed = p1(&phi.act_gl2(g).to_cyc());
    let zero = CycRat::zero(phi.level());
    let mut coeffs = vec![zero.clone(); q_prec + 1];
    coeffs[0] = l_value_neg(&transformed.l_slice(), k + 1)?.try_scale_rat(&half())?;
    let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
    for n in 1..=q_prec as i64 {
        let mut acc = zero.clone();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let dp = n / d;
            let weight = BigRational::from_integer(BigInt::from(d).pow(k + 1));
            let plus = transformed
                .get(dp % n_level, d % n_level)
                .try_scale_rat(&weight)
                .unwrap();
            let minus = transformed
                .get(-dp % n_level, -d % n_level)
                .try_scale_rat(&weight)
                .unwrap()
                .scale_int(sign);
            acc = acc.add(&plus.sub(&minus));
        }
        coeffs[n as usize] = acc.try_scale_rat(&half()).unwrap();
    }
    Ok(QExpansion::from_coeffs(coeffs))
}

/// Truncated lattice sum
///
///   ((-1)^{k+2} N^{k+2} (k+1)! / (2 (2 pi i)^{k+2}))
///       sum_{(m,n) != (0,0), |m|,|n| <= cutoff}  hat(g phi)(m,n) / (m + n tau)^{k+2}
///
/// with zeta_N realized as e^{2 pi i / N}. Absolutely convergent for
/// k + 2 >= 3; this is the float oracle the exact q-expansion is checked
/// against at q = e^{2 pi i tau / N}.
pub fn eis_lattice_complex(
    k: u32,
    phi: &LevelFunction<BigRational>,
    g: &GL2ModN,
    tau: Complex64,
    cutoff: u32,
) -> Result<Complex64> {
    if k < 1 {
        return Err(Error::InvalidParameter("lattice oracle needs k >= 1".into()));
    }
    if cutoff < 100 {
        return Err(Error::InvalidParameter("cutoff must be >= 100".into()));
    }
    if tau.im <= 0.0 {
        return Err(Error::InvalidParameter("tau must lie in the upper half plane".into()));
    }
    let n_level = phi.level() as i64;
    let hat = symplectic_hat(&phi.act_gl2(g).to_cyc());
    let table: Vec<Complex64> = (0..n_level)
        .flat_map(|a| (0..n_level).map(move |b| (a, b)))
        .map(|(a, b)| hat.get(a, b).to_complex())
        .collect();
    let weight = k + 2;
    let r = cutoff as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in -r..=r {
        let mres = m.rem_euclid(n_level) * n_level;
        for n in -r..=r {
            if m == 0 && n == 0 {
                continue;
            }
            let z = Complex64::new(m as f64, 0.0) + tau * (n as f64);
            let inv = z.finv();
            let mut pw = inv;
            for _ in 1..weight {
                pw *= inv;
            }
            sum += table[(mres + n.rem_euclid(n_level)) as usize] * pw;
        }
    }
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let mut denom = Complex64::new(2.0, 0.0);
    let mut numer = Complex64::new(
        if weight % 2 == 0 { 1.0 } else { -1.0 } * (n_level as f64).powi(weight as i32),
        0.0,
    );
    for j in 1..=(k + 1) as u64 {
        numer *= j as f64;
    }
    for _ in 0..weight {
        denom *= two_pi_i;
    }
    Ok(numer / denom * sum)
}

/// Evaluate a cyclotomic q-expansion at a complex point q, mapping
/// zeta_N -> e^{2 pi i / N}.
pub fn evaluate_qexp_complex(series: &QExpansion<CycRat>, q: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut qp = Complex64::new(1.0, 0.0);
    for c in series.coeffs() {
        acc += c.to_complex() * qp;
        qp *= q;
    }
    acc
}

/// Classical series recomputed through the Katz form; the comparison route
/// E_{k+2,0,phi}(g) = Phi_{k+1,0,P1(hat(g phi))}.
pub fn eis_classical_via_katz(
    k: u32,
    phi: &LevelFunction<BigRational>,
    g: &GL2ModN,
    q_prec: usize,
) -> Result<QExpansion<CycRat>> {
    katz_phi(k + 1, 0, &katz_input(&phi.to_cyc(), g), q_prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn random_table(n: u32, rng: &mut StdRng) -> LevelFunction<BigRational> {
        LevelFunction::from_fn(n, |_, _| rat(rng.gen_range(-9..=9), rng.gen_range(1..=3)))
    }

    #[test]
    fn zero_input_gives_zero_series() {
        let n = 3;
        let f = LevelFunction::zero_rational(n).to_cyc();
        assert!(katz_phi(3, 0, &f, 12).unwrap().is_zero());
        assert!(katz_phi(2, 5, &f, 12).unwrap().is_zero());
        let g = GL2ModN::identity(n);
        assert!(eis_classical(2, &LevelFunction::zero_rational(n), &g, 12)
            .unwrap()
            .is_zero());
        let v = eis_lattice_complex(
            1,
            &LevelFunction::zero_rational(n),
            &g,
            Complex64::new(0.0, 2.0),
            150,
        )
        .unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn rejects_unsupported_indices() {
        let f = LevelFunction::delta(3, 1, 0).to_cyc();
        assert!(matches!(
            katz_phi(1, 0, &f, 8),
            Err(Error::UnsupportedIndices { .. })
        ));
        assert!(matches!(
            katz_phi(0, 3, &f, 8),
            Err(Error::UnsupportedIndices { .. })
        ));
        assert!(katz_phi(2, 0, &f, 8).is_ok());
        assert!(katz_phi(1, 1, &f, 8).is_ok());
    }

    #[test]
    fn first_coefficients_follow_the_divisor_sum() {
        let mut rng = StdRng::seed_from_u64(41);
        let n = 5u32;
        let f = random_table(n, &mut rng).to_cyc();
        for k in [2u32, 3] {
            let s = katz_phi(k, 0, &f, 6).unwrap();
            // q^1 of 2 Phi: f(1,1) - (-1)^k f(-1,-1)
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c1 = f.get(1, 1).sub(&f.get(-1, -1).scale_int(sign));
            assert_eq!(s.coeff(1).scale_int(2), c1);
            // q^2 of 2 Phi: f(1,2) + 2^k f(2,1) - (-1)^k (f(-1,-2) + 2^k f(-2,-1))
            let c2 = f
                .get(1, 2)
                .add(&f.get(2, 1).scale_int(2i64.pow(k)))
                .sub(
                    &f.get(-1, -2)
                        .add(&f.get(-2, -1).scale_int(2i64.pow(k)))
                        .scale_int(sign),
                );
            assert_eq!(s.coeff(2).scale_int(2), c2);
        }
    }

    #[test]
    fn katz_constant_term_vanishes_for_positive_r() {
        let mut rng = StdRng::seed_from_u64(42);
        let f = random_table(4, &mut rng).to_cyc();
        for r in 1..=4 {
            for k in 1..=3 {
                assert!(katz_phi(k, r, &f, 8).unwrap().coeff(0).is_zero());
            }
        }
    }

    #[test]
    fn classical_series_agrees_with_katz_route() {
        let mut rng = StdRng::seed_from_u64(43);
        for n in [3u32, 4] {
            for g in GL2ModN::enumerate(n, 3) {
                for a in 0..n as i64 {
                    for b in 0..n as i64 {
                        let phi = LevelFunction::delta(n, a, b);
                        for k in 1..=5u32 {
                            let direct = eis_classical(k, &phi, &g, 16).unwrap();
                            let katz = eis_classical_via_katz(k, &phi, &g, 16).unwrap();
                            assert_eq!(direct, katz, "N={n} k={k} delta=({a},{b})");
                        }
                    }
                }
            }
        }
        // random tables too
        let phi = random_table(3, &mut rng);
        let g = GL2ModN::new(3, 1, 2, 1, 0).unwrap();
        for k in 1..=3 {
            assert_eq!(
                eis_classical(k, &phi, &g, 20).unwrap(),
                eis_classical_via_katz(k, &phi, &g, 20).unwrap()
            );
        }
    }

    #[test]
    fn classical_constant_term_is_half_l_value() {
        let mut rng = StdRng::seed_from_u64(44);
        let n = 3u32;
        let phi = random_table(n, &mut rng);
        let g = GL2ModN::new(n, 0, 2, 1, 1).unwrap();
        for k in 1..=4u32 {
            let series = eis_classical(k, &phi, &g, 4).unwrap();
            let transformed = p1(&phi.act_gl2(&g).to_cyc());
            let expect = l_value_neg(&transformed.l_slice(), k + 1)
                .unwrap()
                .try_scale_rat(&rat(1, 2))
                .unwrap();
            assert_eq!(*series.coeff(0), expect);
        }
    }

    #[test]
    fn linearity_in_phi() {
        let mut rng = StdRng::seed_from_u64(45);
        let n = 4u32;
        let g = GL2ModN::new(n, 1, 1, 0, 1).unwrap();
        let f1 = random_table(n, &mut rng);
        let f2 = random_table(n, &mut rng);
        let combo = f1.add(&f2.scale_int(5));
        let lhs = eis_classical(2, &combo, &g, 12).unwrap();
        let rhs = eis_classical(2, &f1, &g, 12)
            .unwrap()
            .add(&eis_classical(2, &f2, &g, 12).unwrap().scale_int(5));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lattice_oracle_matches_qexpansion_modest_cutoff() {
        // full grid runs in the acceptance suite; one spot check here
        let n = 3u32;
        let g = GL2ModN::identity(n);
        let tau = Complex64::new(0.0, 2.0);
        let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau / (n as f64)).exp();
        let phi = LevelFunction::delta(n, 1, 1);
        for k in [1u32, 2] {
            let series = eis_classical(k, &phi, &g, 24).unwrap();
            let at_q = evaluate_qexp_complex(&series, q);
            let lat = eis_lattice_complex(k, &phi, &g, tau, 800).unwrap();
            let rel = (at_q - lat).norm() / at_q.norm().max(1e-12);
            assert!(rel < 1e-5, "k={k}: rel={rel}");
        }
    }

    #[test]
    fn lattice_summand_symmetry_matches_parity() {
        // pairing (m,n) with (-m,-n) multiplies the summand by (-1)^{k+2};
        // for hat(g phi) symmetric under negation and odd weight the series
        // collapses to zero
        let n = 3u32;
        let g = GL2ModN::identity(n);
        let phi = LevelFunction::delta(n, 0, 0); // hat is constant 1/N, negation-symmetric
        let v = eis_lattice_complex(1, &phi, &g, Complex64::new(0.3, 1.7), 300).unwrap();
        assert!(v.norm() < 1e-12, "odd-weight symmetric sum cancels: {v}");
        let series = eis_classical(1, &phi, &g, 20).unwrap();
        assert!(series.is_zero());
    }

    #[test]
    fn rational_phi_gives_rational_constant_term() {
        // coefficients live in Q(zeta_N) in general (the q-expansion takes
        // values in Z[1/N, zeta_N]((q))), but the constant term of the
        // component at g is a plain rational for rational phi
        let mut rng = StdRng::seed_from_u64(46);
        let n = 4u32;
        let phi = random_table(n, &mut rng);
        let g = GL2ModN::new(n, 1, 0, 1, 1).unwrap();
        let series = eis_classical(2, &phi, &g, 15).unwrap();
        assert!(series.coeff(0).as_rational().is_some());
        let _ = BigRational::zero();
    }
}
