//! Certified root disks, root gaps against the kappa/theta thresholds, and
//! the value bounds at a midpoint witness.

use polycomb::analytic::{evaluate_at_witness, midpoint_witness, min_root_gap, proximity_check, roots, verify_pop, ProximityKind};
use polycomb::families::near_root_pair;
use polycomb::IntPolynomial;

fn main() -> polycomb::Result<()> {
    let p = IntPolynomial::from_i64(&[-2, 0, 1, 0, 0, 1]);
    let rs = roots(&p, 128)?;
    println!("{p}: {} roots, max radius {:.2e}, separated {}", rs.roots.len(), rs.max_radius(), rs.separated);
    for r in &rs.roots {
        println!("  {:+.15} {:+.15}i  r = {:.1e}", r.re_f64(), r.im_f64(), r.radius);
    }

    for n in [4, 5] {
        let (p, q) = near_root_pair(n, 100)?;
        let gap = min_root_gap(&p, &q, 128)?;
        let rep = proximity_check(&p, &q, n, ProximityKind::Kappa, 0.1, 128)?;
        println!("n={n}: P = {p}, Q = {q}");
        println!("  gap in [{:.3e}, {:.3e}], threshold {:.3e}: {}", gap.lo, gap.hi, rep.threshold, rep.verdict);
        let xi = midpoint_witness(&gap.alpha, &gap.beta)?;
        let (vp, vq) = (evaluate_at_witness(&p, &xi), evaluate_at_witness(&q, &xi));
        println!("  midpoint |P| <= {:.3e}, |Q| <= {:.3e}", vp.hi_f64(), vq.hi_f64());
        println!("  root-to-value bound at the midpoint: {}", verify_pop(&p, &gap.alpha, &xi));
    }
    Ok(())
}
