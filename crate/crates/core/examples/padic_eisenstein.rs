//! p-adic Eisenstein-Kronecker series for positive and negative moment
//! index, the theta-shift between consecutive indices, and the relation
//! E^(p) = (1 - phi*) E at r = 0.

use num_bigint::BigInt;
use num_rational::BigRational;
use qeis::level::{GL2ModN, LevelFunction};
use qeis::padic_eis::{check_one_minus_phistar, check_theta_shift, eis_p, PadicEisSpec};

fn main() {
    let n = 4u32;
    let p = 7u64;
    let phi = LevelFunction::from_fn(n, |a, b| {
        BigRational::from_integer(BigInt::from(a + 2 * b - 3))
    });
    let g = GL2ModN::new(n, 1, 1, 0, 1).unwrap();

    for r in [-3i64, -1, 0, 2] {
        let spec = PadicEisSpec {
            k: 1,
            r,
            phi: phi.clone(),
            g,
            p,
            q_prec: 10,
            p_prec: 4,
        };
        let series = eis_p(&spec).unwrap();
        let row: Vec<String> = series
            .coeffs()
            .iter()
            .take(5)
            .map(|c| format!("[{}]", c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        println!("E^(p)_{{3,{r},phi}} coefficients: {}", row.join(" "));
    }

    let spec = PadicEisSpec {
        k: 1,
        r: -2,
        phi: phi.clone(),
        g,
        p,
        q_prec: 20,
        p_prec: 5,
    };
    let shift = check_theta_shift(&spec).unwrap();
    println!("\ntheta E^(p)_{{3,-2}} == E^(p)_{{4,-1}}: {}", shift.pass);

    let lemma = check_one_minus_phistar(1, &phi, &g, p, 20, 5).unwrap();
    println!("E^(p)_{{3,0}} == (1 - phi*) E_{{3,0}}:   {}", lemma.series_match);
    println!("sigma(P1 f)(m,n) == P1 f(pm,n):      {}", lemma.sigma_shift_holds);
}
