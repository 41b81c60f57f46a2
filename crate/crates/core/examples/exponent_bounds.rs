//! Closed-form exponent bounds: the comparison table, the equilibrium that
//! yields the exact-degree bound, and the transfer inequalities.

use polycomb::exponents::{comparison_table, ds_bound, equilibrium, german_transfer, jm_bound, pr_asymptotic_bound, uniform_exact_bound};

fn main() -> polycomb::Result<()> {
    println!(" n | recomputed | stored | uniform | not exact");
    for r in comparison_table() {
        println!(
            " {} | {:10.4} | {:6.4} | {:7.4} | {:9.4}",
            r.n, r.exact_degree, r.exact_degree_stored, r.uniform_transfer, r.not_exact_degree
        );
    }
    for n in 1..=7 {
        let (w, b) = equilibrium(n)?;
        println!("n={n}: equilibrium w_hat = {w:.9}, bound {b:.9}");
    }
    let w = 3.4;
    let lam = german_transfer(w, 3)?;
    println!(
        "w_hat = {w}, n = 3: lambda_hat <= {lam:.4}, 1/lambda_hat >= {:.4}, (3/2)w - n + 1/2 = {:.4}",
        ds_bound(lam)?,
        uniform_exact_bound(w, 3)?
    );
    let g2 = ((5f64.sqrt() + 1.0) / 2.0).powi(2);
    println!("jm bound at golden^2: {:.4}", jm_bound(g2)?);
    for n in [4, 16, 64] {
        println!("asymptotic even-degree bound n={n}: {:.4}", pr_asymptotic_bound(n)?);
    }
    Ok(())
}
