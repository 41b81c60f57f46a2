//! Reducibility censuses of S, R and M families: a seeded random pair
//! satisfying the hypotheses, and the named families whose reducible members
//! grow like a power of H.

use polycomb::families::{census, counterexample_family, random_spec, Counterexample, FamilyKind};

fn main() -> polycomb::Result<()> {
    for kind in [FamilyKind::S, FamilyKind::R] {
        for n in [2, 3] {
            let spec = random_spec(kind, n, 10_000, 0.5, 42)?;
            let r = census(&spec)?;
            println!(
                "{kind} n={n} P={} Q={}: {}/{} reducible, ratio {:.3} ({:?})",
                spec.p,
                spec.q,
                r.reducible_count,
                r.total_indices,
                r.ratio.unwrap_or(f64::NAN),
                r.ratio_basis
            );
        }
    }

    for which in [Counterexample::SQuadratic, Counterexample::RShift] {
        for h in [1_000u64, 10_000, 100_000, 1_000_000] {
            let fam = counterexample_family(which, h, 0.5, 2)?;
            let r = census(&fam.spec)?;
            println!("{which:?} H={h:>7}: {} reducible of {}, predicted {}", r.reducible_count, r.total_indices, fam.predicted.len());
        }
    }

    let fam = counterexample_family(Counterexample::MPowers, 300, 1.0, 3)?;
    let r = census(&fam.spec)?;
    println!(
        "M_powers n=3: {} reducible among {} pairs, predicted {:?}",
        r.reducible_count,
        r.total_indices,
        fam.predicted.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    Ok(())
}
