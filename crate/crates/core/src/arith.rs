//! Divisor counts, prime counts, sieving and the count budgets built from them.
//!
//! Integers are factored by trial division up to `10^6`; anything left over is
//! tested with deterministic Miller-Rabin. Inputs above `10^12` are refused.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest magnitude accepted by the integer factorizer.
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization of `|n|` as `(prime, exponent)` pairs, ascending.
pub fn factorize(n: i128) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let m = n.unsigned_abs();
    if m > FACTOR_LIMIT as u128 {
        return Err(Error::OutOfRange(format!(
            "|{n}| exceeds the factorization limit {FACTOR_LIMIT}"
        )));
    }
    let mut m = m as u64;
    let mut out = Vec::new();
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut m);
    let mut p = 3;
    while p <= TRIAL_LIMIT && p * p <= m {
        push(p, &mut m);
        p += 2;
    }
    if m > 1 {
        // Cofactor of a number <= 10^12 after trial division to 10^6 is prime.
        debug_assert!(is_prime_u64(m));
        out.push((m, 1));
    }
    Ok(out)
}

fn to_i128(n: &BigInt) -> Result<i128> {
    n.to_i128()
        .ok_or_else(|| Error::OutOfRange(format!("{n} exceeds the factorization limit")))
}

/// Number of positive divisors of `|n|`.
pub fn tau(n: &BigInt) -> Result<u64> {
    Ok(factorize(to_i128(n)?)?
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product())
}

/// Number of distinct prime divisors of `|n|`.
pub fn omega(n: &BigInt) -> Result<u32> {
    Ok(factorize(to_i128(n)?)?.len() as u32)
}

/// All positive divisors of `|n|`, ascending.
pub fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(to_i128(n)?)? {
        let current = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let x = x as usize;
    let mut composite = vec![false; x + 1];
    let mut out = Vec::new();
    for i in 2..=x {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= x {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Product of the first `k` primes.
pub fn primorial(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut found = 0;
    let mut candidate = 2u64;
    while found < k {
        if is_prime_u64(candidate) {
            acc *= candidate;
            found += 1;
        }
        candidate += 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Inputs of the count budgets: leading coefficient of `P`, constant
/// coefficient of `Q`, and the height parameter.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundInputs {
    #[serde(with = "crate::poly::bigint_string")]
    pub cn: BigInt,
    #[serde(with = "crate::poly::bigint_string")]
    pub d0: BigInt,
    pub h: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaBounds {
    /// `tau(cn) tau(d0) log H`
    pub gamma: f64,
    /// `tau(cn) tau(d0) log H / log log H`; `None` when `H <= e`.
    pub gamma_prime: Option<f64>,
}

pub fn gamma_bounds(b: &BoundInputs) -> Result<GammaBounds> {
    if !(b.h > 1.0) {
        return Err(Error::OutOfRange(format!("H = {} must exceed 1", b.h)));
    }
    let taus = (tau(&b.cn)? * tau(&b.d0)?) as f64;
    let log_h = b.h.ln();
    let gamma = taus * log_h;
    let gamma_prime = (b.h > std::f64::consts::E).then(|| gamma / log_h.ln());
    Ok(GammaBounds { gamma, gamma_prime })
}

/// `Gamma'`, failing when `H <= e`.
pub fn gamma_prime(b: &BoundInputs) -> Result<f64> {
    gamma_bounds(b)?
        .gamma_prime
        .ok_or_else(|| Error::OutOfRange(format!("H = {} must exceed e for Gamma'", b.h)))
}

/// Natural log of the Gyory-Evertse shift bound,
/// `(w + 1) log(w + 2) (2^17 n)^(n^3)`. Overflows to infinity for `n >= 4`;
/// see [`gyory_log_log_bound`] for a finite proxy.
pub fn gyory_log_bound(n: u32, w: u32) -> f64 {
    let w = f64::from(w);
    (w + 1.0) * (w + 2.0).ln() * (131_072.0 * f64::from(n)).powf(f64::from(n).powi(3))
}

/// `ln` of [`gyory_log_bound`], finite for every degree.
pub fn gyory_log_log_bound(n: u32, w: u32) -> f64 {
    let w = f64::from(w);
    ((w + 1.0) * (w + 2.0).ln()).ln() + f64::from(n).powi(3) * (131_072.0 * f64::from(n)).ln()
}

/// `omega(N) log log N / log N`.
pub fn omega_asymptotic_ratio(n: &BigInt) -> Result<f64> {
    if n.abs() < BigInt::from(16) {
        return Err(Error::OutOfRange(format!("|{n}| must be at least 16")));
    }
    let w = f64::from(omega(n)?);
    let log_n = crate::poly::big_to_f64(&n.abs()).ln();
    Ok(w * log_n.ln() / log_n)
}
