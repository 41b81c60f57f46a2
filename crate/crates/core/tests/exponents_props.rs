use polycomb::exponents::{
    comparison_table, equilibrium, estimate_lambda, estimate_w, random_cf_witness, reevaluate, wirsing_exact_bound, WVariant,
    TABLE_THM11,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn definition_chain_and_degree_monotonicity(seed in any::<u64>(), x in 10u64..=60) {
        let xi = random_cf_witness(seed, 60, 6).unwrap();
        let mut prev_any = f64::NEG_INFINITY;
        for n in 1..=3u32 {
            let vals: Vec<f64> = [WVariant::Any, WVariant::ExactIrreducible, WVariant::Monic, WVariant::MonicUnit]
                .iter()
                .map(|&v| {
                    let e = estimate_w(&xi, n, x, v).unwrap();
                    assert!((reevaluate(&e, &xi) - e.value).abs() < 1e-12);
                    e.value
                })
                .collect();
            prop_assert!(vals.windows(2).all(|w| w[0] >= w[1]), "n = {}: {:?}", n, vals);
            prop_assert!(vals[0] >= prev_any);
            prev_any = vals[0];
        }
    }

    #[test]
    fn larger_caps_search_larger_boxes(seed in any::<u64>(), x in 10u64..=200, extra in 1u64..=200) {
        let xi = random_cf_witness(seed, 60, 6).unwrap();
        let a = estimate_w(&xi, 2, x, WVariant::Any).unwrap();
        let b = estimate_w(&xi, 2, x + extra, WVariant::Any).unwrap();
        prop_assert!(b.search.raw_size >= a.search.raw_size);
        prop_assert!(b.search.effective_size >= a.search.effective_size);
    }

    #[test]
    fn dirichlet_floors(seed in any::<u64>()) {
        let xi = random_cf_witness(seed, 120, 5).unwrap();
        for n in 1..=2u32 {
            let w = estimate_w(&xi, n, 1000, WVariant::Any).unwrap();
            prop_assert!(w.value >= f64::from(n) - 0.2, "w_{} = {}", n, w.value);
            let l = estimate_lambda(&xi, n, 10_000).unwrap();
            prop_assert!(l.value >= 1.0 / f64::from(n) - 0.05, "lambda_{} = {}", n, l.value);
            prop_assert!((reevaluate(&l, &xi) - l.value).abs() < 1e-12);
        }
    }
}

#[test]
fn equilibrium_identity_and_table() {
    for n in 1..=7 {
        assert!((equilibrium(n).unwrap().1 - wirsing_exact_bound(n).unwrap()).abs() <= 1e-9);
    }
    for (row, stored) in comparison_table().iter().zip(TABLE_THM11) {
        assert_eq!(format!("{:.4}", row.exact_degree), format!("{stored:.4}"));
    }
}
