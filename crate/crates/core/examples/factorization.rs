//! Zassenhaus factorization, rational-root extraction and the small-value
//! factor of a polynomial at a witness.

use polycomb::analytic::RationalWitness;
use polycomb::factor::{factor, is_irreducible, linear_factors, small_value_factor};
use polycomb::IntPolynomial;

fn main() -> polycomb::Result<()> {
    let cases = [
        vec![-1, 0, 4],
        vec![1, 0, -10, 0, 1],
        vec![0, 0, -12, 4, 3, -1, 0, 1],
        vec![6, 11, 6, 1],
        vec![1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ];
    for c in cases {
        let p = IntPolynomial::from_i64(&c);
        let f = factor(&p)?;
        let parts: Vec<String> = f.factors.iter().map(|fp| format!("({})^{}", fp.poly, fp.mult)).collect();
        println!("{p}\n  = {} * {} * {}", f.sign, f.content, parts.join(" "));
        println!("  irreducible: {}, linear factors: {:?}", is_irreducible(&p)?, linear_factors(&p)?);
        assert_eq!(f.reconstruct(), p);
    }

    // (T^2 - 2)(T - 3) at xi close to sqrt 2: the small factor carries the value.
    let p = IntPolynomial::from_i64(&[6, -2, -3, 1]);
    let xi = RationalWitness::from_ratio(665_857, 470_832);
    let s = small_value_factor(&p, &xi, 1.0)?;
    println!("small-value factor of {p} near sqrt 2: {} (exponent {:.3})", s.factor, s.exponent);
    Ok(())
}
