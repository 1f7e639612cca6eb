//! Classical Eisenstein q-expansions three ways: the direct divisor-sum
//! formula, the Katz-form route through the transposed Fourier transform,
//! and the complex lattice sum evaluated at tau = 2i.

use num_complex::Complex64;
use qeis::eisenstein::{
    eis_classical, eis_classical_via_katz, eis_lattice_complex, evaluate_qexp_complex,
};
use qeis::level::{GL2ModN, LevelFunction};

fn main() {
    let n = 3u32;
    let k = 2u32;
    let phi = LevelFunction::delta(n, 1, 1);
    let g = GL2ModN::identity(n);

    let series = eis_classical(k, &phi, &g, 10).unwrap();
    println!("E_{{k+2,0,phi}} with k = {k}, phi = delta(1,1), N = {n}:");
    for (i, c) in series.coeffs().iter().enumerate().take(6) {
        let digits: Vec<String> = c.coeffs().iter().map(|x| x.to_string()).collect();
        println!("  q^{i}: [{}]", digits.join(", "));
    }

    let katz = eis_classical_via_katz(k, &phi, &g, 10).unwrap();
    println!("\ndirect divisor sum == Katz route: {}", series == katz);

    // Number checks against the defining lattice sum.
    let tau = Complex64::new(0.0, 2.0);
    let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau / (n as f64)).exp();
    let at_q = evaluate_qexp_complex(&eis_classical(k, &phi, &g, 30).unwrap(), q);
    let lattice = eis_lattice_complex(k, &phi, &g, tau, 1200).unwrap();
    println!("\nq-expansion at q = e^(2 pi i tau / N), tau = 2i: {at_q}");
    println!("lattice sum (cutoff 1200):                      {lattice}");
    println!("relative difference: {:.3e}", (at_q - lattice).norm() / at_q.norm());
}
