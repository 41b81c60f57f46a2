//! Smallest constant shift making a cubic irreducible, against the
//! divisor-count budget.

use polycomb::families::{random_cubic, szegedy_shift};
use polycomb::IntPolynomial;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> polycomb::Result<()> {
    for c in [[0, 0, 0, 1], [0, -1, 0, 1], [0, 2, -3, 1], [-6, 11, -6, 1]] {
        let p = IntPolynomial::from_i64(&c);
        let s = szegedy_shift(&p)?;
        println!("{p}: b = {}, {} irreducible", s.b, s.shifted);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0f64;
    for _ in 0..200 {
        let s = szegedy_shift(&random_cubic(&mut rng, 1_000_000))?;
        worst = worst.max(s.ratio);
    }
    println!("200 random cubics of height <= 10^6: max |b| / budget = {worst:.4}");
    Ok(())
}
