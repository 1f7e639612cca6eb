//! Finite Fourier analysis on (Z/N)^2: the two partial transforms, the
//! symplectic transform, the GL_2(Z/N) action, and the identities tying
//! them together.

use num_bigint::BigInt;
use num_rational::BigRational;
use qeis::level::{p1, p2, symplectic_hat, GL2ModN, LevelFunction};

fn main() {
    let n = 5u32;

    // A delta function, pushed around by a rotation.
    let phi = LevelFunction::delta(n, 1, 0);
    let g = GL2ModN::new(n, 0, -1, 1, 0).unwrap();
    let moved = phi.act_gl2(&g);
    println!("delta at (1,0) moved by [[0,-1],[1,0]]: support at");
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            if !num_traits::Zero::is_zero(moved.get(a, b)) {
                println!("  ({a}, {b})");
            }
        }
    }

    // P1 of the constant table is N times the indicator of m = 0.
    let ones = LevelFunction::constant(n, BigRational::from_integer(BigInt::from(1))).to_cyc();
    let t = p1(&ones);
    println!("\nP1(1)(m, n) for m = 0..2, n = 0:");
    for m in 0..3 {
        println!("  m={m}: {}", t.get(m, 0).rational_part());
    }

    // The transpose relations, exact in Q(zeta_N).
    let table = LevelFunction::from_fn(n, |a, b| {
        BigRational::new(BigInt::from(3 * a - 2 * b + 1), BigInt::from(2))
    })
    .to_cyc();
    let lhs = p2(&symplectic_hat(&table).transpose());
    let rhs = p1(&table);
    println!("\nP2((hat phi)^t) == P1(phi): {}", lhs == rhs);
    println!("P2(phi^t) == P1(phi)^t:     {}", p2(&table.transpose()) == p1(&table).transpose());
    println!("hat(hat phi) == phi:        {}", symplectic_hat(&symplectic_hat(&table)) == table);
}
