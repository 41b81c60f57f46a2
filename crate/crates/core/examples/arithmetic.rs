//! Divisor counts, prime factors and the reducibility budgets built from them.

use num_bigint::BigInt;
use polycomb::arith::{divisors, gamma_bounds, gyory_log_bound, omega, omega_asymptotic_ratio, primorial, tau, BoundInputs};

fn main() -> polycomb::Result<()> {
    for n in [1i64, 12, 360, 720_720, 999_983] {
        let b = BigInt::from(n);
        println!("n = {n}: tau {} omega {} divisors {:?}", tau(&b)?, omega(&b)?, &divisors(&b)?[..tau(&b)?.min(8) as usize]);
    }
    for k in [5, 8, 11] {
        let p = primorial(k);
        println!("primorial({k}) = {p}: omega ratio {:.3}", omega_asymptotic_ratio(&p)?);
    }
    for h in [1e2, 1e4, 1e6] {
        let g = gamma_bounds(&BoundInputs { cn: BigInt::from(12), d0: BigInt::from(-30), h })?;
        println!("H = {h:e}: Gamma {:.2}, Gamma' {:.2}", g.gamma, g.gamma_prime.unwrap_or(f64::NAN));
    }
    println!("log bound for cubics with 3 prime factors: {:.3e}", gyory_log_bound(3, 3));
    Ok(())
}
