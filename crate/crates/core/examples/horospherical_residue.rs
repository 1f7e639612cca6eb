//! L-values of periodic functions at non-positive integers, the
//! horospherical map with its built-in double-formula cross-check, and the
//! de Rham residue scalar.

use num_bigint::BigInt;
use num_rational::BigRational;
use qeis::level::{GL2ModN, LevelFunction};
use qeis::lfunc::{bernoulli_poly, horospherical, l_value_neg, residue_de_rham, PeriodicFunction};

fn main() {
    // Bernoulli polynomials drive everything.
    for k in 0..=4u32 {
        let bp = bernoulli_poly(k);
        let coeffs: Vec<String> = bp.coeffs().iter().map(|c| c.to_string()).collect();
        println!("B_{k}(x) coefficients (ascending): {}", coeffs.join(", "));
    }

    // zeta at non-positive integers, through the constant periodic function.
    let ones = PeriodicFunction::from_fn(7, |_| BigRational::from_integer(BigInt::from(1)));
    for k in [0u32, 1, 3, 5] {
        println!("zeta({}) = {}", -(k as i64), l_value_neg(&ones, k).unwrap());
    }

    // The horospherical map evaluates both of its defining formulas and
    // asserts they agree before returning.
    let n = 5u32;
    let phi = LevelFunction::from_fn(n, |a, b| {
        BigRational::new(BigInt::from(a * a - b), BigInt::from(3))
    });
    let g = GL2ModN::new(n, 2, 1, 1, 1).unwrap();
    for k in 0..=4u32 {
        let rho = horospherical(&phi, k, &g);
        let res = residue_de_rham(&phi, k, &g);
        println!("k={k}: rho^k(phi)(g) = {rho},  res^k = {res}");
    }
}
