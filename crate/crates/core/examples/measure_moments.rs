//! The two-variable Eisenstein measure: moments, integration of test
//! functions, support on the units, and the binomial integrality report.

use num_bigint::BigInt;
use num_rational::BigRational;
use qeis::level::LevelFunction;
use qeis::measure::{EisensteinMeasure, TestFunction};

fn main() {
    let (p, n, k) = (7u64, 3u32, 1u32);
    let (q_prec, p_prec) = (16usize, 5u32);
    let mu = EisensteinMeasure::new(p, n, k, q_prec, p_prec).unwrap();

    let phi = LevelFunction::from_fn(n, |a, b| {
        BigRational::from_integer(BigInt::from(2 * a - 3 * b + 1))
    });
    let f = phi.embed_padic(p, p_prec).unwrap();

    println!("moments of mu_N^{{k+1}} with p={p}, N={n}, k={k} (digit vectors mod p^{p_prec}):");
    for r in 0..=2u32 {
        let m = mu.moment(r, &f).unwrap();
        let row: Vec<String> = m
            .coeffs()
            .iter()
            .take(6)
            .map(|c| format!("[{}]", c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        println!("  r={r}: {}", row.join(" "));
    }

    // The same values through a test function, and the support property.
    let psi = TestFunction::power(n, p, p_prec, 2);
    let via_psi = mu.integrate(&psi, &f).unwrap();
    println!("\nintegrate(y^2) == moment(2): {}", via_psi == mu.moment(2, &f).unwrap());

    let indicator = TestFunction::indicator_p_multiples(n, p, p_prec);
    let on_p = mu.integrate(&indicator, &f).unwrap();
    println!("integrate([p | y]) vanishes:  {}", on_p.is_zero());

    // Negative moments exist because the measure lives on the units.
    let neg = mu.unit_moment(-2, &f).unwrap();
    let row: Vec<String> = neg
        .coeffs()
        .iter()
        .take(4)
        .map(|c| format!("[{}]", c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    println!("unit moment at r = -2:        {}", row.join(" "));

    // Binomial integrality.
    let report = mu.integrality_check(6, &f).unwrap();
    println!("\nintegrality report (r, pass, valuation margin):");
    for e in &report.entries {
        println!("  r={}: pass={} margin={}", e.r, e.pass, e.min_valuation);
    }
}
