//! Pairwise coprime polynomials small at a witness, the Liouville-type floor
//! for coprime pairs, and the closest-root report for two small polynomials.

use polycomb::analytic::{liouville_floor, small_coprime_census, wbs_root_report, RationalWitness};
use polycomb::exponents::cf_witness;
use polycomb::IntPolynomial;

fn main() -> polycomb::Result<()> {
    let phi = cf_witness(&[1; 80])?;
    for h in [100, 1_000, 10_000] {
        let c = small_coprime_census(&phi, 1, 2.0, h)?;
        let ms: Vec<String> = c.members.iter().map(ToString::to_string).collect();
        println!("H = {h}: {} members ({} examined) {}", c.count(), c.examined, ms.join(", "));
    }

    let u1 = IntPolynomial::from_i64(&[-2, 0, 1]);
    let u2 = IntPolynomial::from_i64(&[-3, 0, 1]);
    let xi = RationalWitness::from_ratio(3, 2);
    let f = liouville_floor(&u1, &u2, &xi, 1e-6)?;
    println!("max |U_i(3/2)| in [{:.4}, {:.4}] vs floor {:.2e}: {}", f.max_lo, f.max_hi, f.threshold, f.verdict);

    let rep = wbs_root_report(&IntPolynomial::from_i64(&[-34, 21]), &IntPolynomial::from_i64(&[-55, 34]), &phi, 0.9, 128)?;
    println!(
        "closest root from P_{} at distance {:.3e}: achieved {:.3}, target {:.3}",
        rep.polynomial, rep.distance, rep.achieved, rep.target
    );
    Ok(())
}
