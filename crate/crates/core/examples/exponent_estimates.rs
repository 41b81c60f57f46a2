//! Brute-force exponent estimates at continued-fraction and Liouville
//! witnesses, for every polynomial class.

use polycomb::exponents::{estimate_lambda, estimate_w, liouville_witness, random_cf_witness, WVariant};

fn main() -> polycomb::Result<()> {
    let xi = random_cf_witness(7, 120, 5)?;
    println!("witness: {}", xi.description);
    for n in 1..=3 {
        for variant in [WVariant::Any, WVariant::ExactIrreducible, WVariant::Monic, WVariant::MonicUnit] {
            let t = std::time::Instant::now();
            let est = estimate_w(&xi, n, 1000, variant)?;
            println!(
                "  w  n={n} X=1000 {variant:?}: {:.4}  witness {}  ({:.2?}{})",
                est.value,
                serde_json::to_string(&est.witness)?,
                t.elapsed(),
                if est.indeterminate { ", indeterminate" } else { "" }
            );
        }
        let lam = estimate_lambda(&xi, n, 10_000)?;
        println!("  lambda n={n} X=10^4: {:.4}  x = {:?}", lam.value, lam.witness);
    }

    let liou = liouville_witness(10, 4)?;
    let est = estimate_w(&liou, 1, 1_000_000, WVariant::Any)?;
    println!("liouville base 10: w_1 at X=10^6 is {:.4} via {}", est.value, serde_json::to_string(&est.witness)?);
    Ok(())
}
