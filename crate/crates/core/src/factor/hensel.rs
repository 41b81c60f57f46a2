//! Linear Hensel lifting of a modular factorization and exhaustive subset
//! recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::PolyModP;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

fn reduce(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m / 2;
    IntPolynomial::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    e.x.mod_floor(m)
}

/// Lift `f = lc * g * h (mod p)` with `g` monic to `f = G * H (mod p^k)`,
/// `G` monic of the same degree as `g`.
fn lift_pair(
    f: &IntPolynomial,
    g: &PolyModP,
    h: &PolyModP,
    p: u64,
    k: u32,
) -> (IntPolynomial, IntPolynomial) {
    let (_, s, t) = g.ext_gcd(h);
    let pb = BigInt::from(p);
    let mut big_g = g.to_int();
    let mut big_h = h.to_int();
    // H carries the leading coefficient of f exactly.
    let lc = f.leading().cloned().unwrap_or_default();
    let hc = big_h.coeffs().to_vec();
    let mut hc_fixed = hc.clone();
    if let Some(last) = hc_fixed.last_mut() {
        *last = lc.clone();
    }
    big_h = IntPolynomial::new(hc_fixed);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = f - &(&big_g * &big_h);
        if diff.is_zero() {
            break;
        }
        let e_int = IntPolynomial::new(diff.coeffs().iter().map(|c| c / &pj).collect());
        let e = PolyModP::from_int(&e_int, p);
        let (q, r) = t.mul(&e).div_rem(g);
        let dh = s.mul(&e).add(&q.mul(h));
        big_g = &big_g + &r.to_int().scalar_mul(&pj);
        big_h = &big_h + &dh.to_int().scalar_mul(&pj);
        pj *= &pb;
    }
    (big_g, big_h)
}

/// Monic lifts modulo `p^k` of every modular factor.
fn lift_all(f: &IntPolynomial, factors: &[PolyModP], p: u64, k: u32) -> Vec<IntPolynomial> {
    let m = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let lc = f.leading().cloned().unwrap_or_default();
        let inv = mod_inverse(&lc, &m);
        return vec![reduce(&f.scalar_mul(&inv), &m)];
    }
    let lc_mod = PolyModP::from_int(&IntPolynomial::constant(f.leading().cloned().unwrap_or_default()), p);
    let rest = factors[1..].iter().fold(lc_mod, |acc, g| acc.mul(g));
    let (big_g, big_h) = lift_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![reduce(&big_g, &m)];
    out.extend(lift_all(&reduce(&big_h, &m), &factors[1..], p, k));
    out
}

/// Bound on `|lc(f)| * |coefficient|` over all factors of `f`.
fn coefficient_bound(f: &IntPolynomial) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let lc = f.leading().cloned().unwrap_or_default().abs();
    lc * (BigInt::one() << f.deg()) * (norm2.sqrt() + 1u32)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Irreducible integer factors of `f` (squarefree, primitive, positive
/// leading, `p` not dividing the leading coefficient, squarefree mod `p`).
pub(super) fn lift_and_recombine(f: &IntPolynomial, p: u64, modular: &[PolyModP]) -> Result<Vec<IntPolynomial>> {
    if modular.len() <= 1 {
        return Ok(vec![f.clone()]);
    }
    let bound = coefficient_bound(f) * 2u32;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let mut lifted = lift_all(f, modular, p, k);
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let lc = rest.leading().cloned().unwrap_or_default();
            let mut g = IntPolynomial::constant(lc);
            for &i in &idx {
                g = reduce(&(&g * &lifted[i]), &m);
            }
            let g = symmetric(&g, &m);
            if !g.is_constant() {
                let g = g.primitive_positive()?;
                let ct = g.constant_term();
                let rt = rest.constant_term();
                let plausible = if ct.is_zero() { rt.is_zero() } else { (&rt % &ct).is_zero() };
                if plausible {
                    if let Some(q) = rest.div_exact(&g) {
                        hit = Some((g, q));
                        break;
                    }
                }
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        match hit {
            Some((g, q)) => {
                found.push(g);
                rest = q;
                let keep: Vec<_> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !idx.contains(i))
                    .map(|(_, l)| l.clone())
                    .collect();
                lifted = keep;
            }
            None => s += 1,
        }
    }
    if !rest.is_constant() {
        found.push(rest.primitive_positive()?);
    } else if !rest.constant_term().abs().is_one() {
        return Err(Error::Hypothesis(format!(
            "recombination left a non-unit constant ({rest}) at modulus {p}^{k}"
        )));
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn lifted_product_matches_modulo_p_power() {
        let f = &(&p(&[1, 0, -10, 0, 1]) * &p(&[-3, 5, 0, 1])) * &p(&[2, 3]);
        let prime = 13;
        let fp = PolyModP::from_int(&f, prime);
        assert!(fp.is_squarefree());
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let modular = super::super::modp::factor_squarefree(&fp, &mut rng);
        let k = 6;
        let m = BigInt::from(prime).pow(k);
        let lifts = lift_all(&f, &modular, prime, k);
        let lc = IntPolynomial::constant(f.leading().cloned().unwrap());
        let prod = lifts.iter().fold(lc, |acc, l| reduce(&(&acc * l), &m));
        assert_eq!(prod, reduce(&f, &m));
        assert!(lifts.iter().all(|l| l.leading().unwrap().is_one()));
    }

    #[test]
    fn combinations_enumerate_all_subsets() {
        let mut idx = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut idx, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
    }
}
