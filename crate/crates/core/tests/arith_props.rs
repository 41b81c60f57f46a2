use num_bigint::BigInt;
use num_integer::Integer;
use polycomb::arith::{omega, primes_up_to, primorial, tau};
use proptest::prelude::*;

proptest! {
    #[test]
    fn tau_is_multiplicative(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        prop_assume!(a.gcd(&b) == 1);
        let ab = BigInt::from(a) * BigInt::from(b);
        prop_assert_eq!(tau(&ab).unwrap(), tau(&a.into()).unwrap() * tau(&b.into()).unwrap());
    }

    #[test]
    fn tau_counts_divisors(n in 1u64..20_000) {
        let brute = (1..=n).filter(|d| n % d == 0).count() as u64;
        prop_assert_eq!(tau(&n.into()).unwrap(), brute);
    }
}

#[test]
fn tau_power_bound_up_to_a_million() {
    // tau(2) = 2 > 2^0.9 is the only exception.
    let exceptions: Vec<u64> =
        (2u64..=1_000_000).filter(|&n| tau(&n.into()).unwrap() as f64 > (n as f64).powf(0.9)).collect();
    assert_eq!(exceptions, vec![2]);
}

#[test]
fn omega_of_primorials() {
    for k in 0..=11 {
        assert_eq!(omega(&primorial(k)).unwrap(), k as u32);
    }
}

#[test]
fn short_intervals_contain_primes() {
    // Worst start X = p + 1 just past a prime; every X in [10^3, 10^6] covered.
    let primes = primes_up_to(1_010_000);
    for w in primes.windows(2) {
        let x = w[0] + 1;
        if !(1_000..=1_000_000).contains(&x) {
            continue;
        }
        let len = 40.0 * (x as f64).ln().powi(2);
        assert!((w[1] - x) as f64 <= len, "no prime in [{x}, {x} + {len}]");
    }
}
