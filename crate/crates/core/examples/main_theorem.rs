//! The main identity end to end: build the section alpha from negative-
//! moment p-adic Eisenstein-Kronecker series, the de Rham Eisenstein
//! one-form, and verify nabla(alpha) = (1 - Phi) Eis_dR coefficient by
//! coefficient. A deliberately dented alpha shows the verifier pinpointing
//! the fault.

use num_bigint::BigInt;
use num_rational::BigRational;
use qeis::arith::PadicCyc;
use qeis::level::{GL2ModN, LevelFunction};
use qeis::ring::Coefficient;
use qeis::symh::{alpha_eis, eis_dr_oneform, nabla, verify_syntomic_pair};

fn main() {
    let (k, p, n) = (3u32, 11u64, 3u32);
    let (q_prec, p_prec) = (30usize, 6u32);
    let phi = LevelFunction::from_fn(n, |a, b| {
        BigRational::from_integer(BigInt::from(5 * a - b + 2))
    });
    let g = GL2ModN::new(n, 2, 1, 1, 1).unwrap();

    let alpha = alpha_eis(k, &phi, &g, p, q_prec, p_prec).unwrap();
    let dr = eis_dr_oneform(k, &phi, &g, q_prec).unwrap();
    println!(
        "alpha has {} slots; de Rham normalization ratio to the absolute class: {}",
        alpha.slots().len(),
        dr.normalization_ratio
    );

    // The telescoping: nabla(alpha) concentrates in the u^k slot.
    let d = nabla(&alpha);
    for slot in 0..=k as usize {
        println!("nabla(alpha) slot {slot} is zero: {}", d.slot(slot).is_zero());
    }

    let report = verify_syntomic_pair(&alpha, &dr.form, p).unwrap();
    println!(
        "\nverify nabla(alpha) == (1 - Phi) Eis_dR: pass = {} (q-prec {}, p-prec {})",
        report.pass, report.q_prec, report.p_prec
    );

    // Dent one coefficient by p^(M-1) q^4 and watch the verifier point at it.
    let mut dented = alpha.clone();
    let bump = PadicCyc::from_int(n, p, p_prec, (p as i64).pow(p_prec - 1));
    let old = dented.slot(1).coeff(4).clone();
    dented.slot_mut(1).set_coeff(4, old.add(&bump));
    let report = verify_syntomic_pair(&dented, &dr.form, p).unwrap();
    println!("\nafter denting slot 1 at q^4: pass = {}", report.pass);
    for fault in &report.faults {
        println!(
            "  fault: slot {}, q^{}, residual valuation {}",
            fault.slot, fault.q_power, fault.valuation
        );
    }
}
