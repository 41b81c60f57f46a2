//! Factorization and irreducibility over the integers.
//!
//! Constant factors never count: a polynomial is reducible only when it has a
//! non-constant factor of smaller degree. The pipeline is squarefree
//! decomposition (Yun), then for each squarefree part a degree-pattern test
//! modulo several small primes; when the patterns do not rule out a proper
//! factor the part is Hensel-lifted and factors are recombined by exhaustive
//! subset search under the Mignotte bound.

mod hensel;
pub(crate) mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analytic::{evaluate_at_witness, RationalWitness};
use crate::arith;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

use modp::PolyModP;

/// Number of usable primes consulted before falling back to lifting.
const PATTERN_PRIMES: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorPower {
    pub poly: IntPolynomial,
    pub mult: usize,
}

/// `sign * content * prod(factor^mult)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub sign: i8,
    #[serde(with = "crate::poly::bigint_string")]
    pub content: BigInt,
    pub factors: Vec<FactorPower>,
}

impl Factorization {
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::constant(&self.content * BigInt::from(self.sign));
        for fp in &self.factors {
            for _ in 0..fp.mult {
                acc = &acc * &fp.poly;
            }
        }
        acc
    }

    /// Single irreducible factor with multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].mult == 1
    }

    /// Factor degrees repeated by multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for fp in &self.factors {
            out.extend(std::iter::repeat(fp.poly.deg()).take(fp.mult));
        }
        out.sort_unstable();
        out
    }
}

pub fn factor(p: &IntPolynomial) -> Result<Factorization> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?;
    let sign = if lead.is_negative() { -1 } else { 1 };
    let content = p.content()?;
    let mut f = p.primitive_positive()?;
    let mut factors = Vec::new();

    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        factors.push(FactorPower { poly: IntPolynomial::from_i64(&[0, 1]), mult: zeros });
        f = IntPolynomial::new(f.coeffs()[zeros..].to_vec());
    }
    if f.deg() >= 1 {
        for (part, mult) in squarefree_decomposition(&f)? {
            for g in factor_squarefree(&part)? {
                factors.push(FactorPower { poly: g, mult });
            }
        }
    }
    factors.sort_by(|a, b| a.poly.cmp(&b.poly));
    Ok(Factorization { sign, content, factors })
}

/// Irreducibility with content ignored; errors on constants.
pub fn is_irreducible(p: &IntPolynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let f = p.primitive_positive()?;
    let n = f.deg();
    if n == 1 {
        return Ok(true);
    }
    if f.constant_term().is_zero() {
        return Ok(false);
    }
    if !f.gcd(&f.derivative())?.is_constant() {
        return Ok(false);
    }
    Ok(factor_squarefree(&f)?.len() == 1)
}

/// Yun's algorithm: `(part, multiplicity)` with every part squarefree,
/// primitive, positive-leading and of degree at least one.
pub(crate) fn squarefree_decomposition(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    let f = f.primitive_positive()?;
    let fp = f.derivative();
    if fp.is_zero() {
        return Ok(Vec::new());
    }
    let a0 = f.gcd(&fp)?;
    let mut b = exact(&f, &a0)?;
    let c = exact(&fp, &a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() >= 1 {
        let a = b.gcd(&d)?;
        b = exact(&b, &a)?;
        let c = if d.is_zero() { d.clone() } else { exact(&d, &a)? };
        if a.deg() >= 1 {
            out.push((a, i));
        }
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

fn exact(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial> {
    a.div_exact(b)
        .ok_or_else(|| Error::Hypothesis(format!("inexact division of {a} by {b}")))
}

struct PrimeChoice {
    p: u64,
    factors: Vec<PolyModP>,
}

/// Irreducible factors of a squarefree, primitive, positive-leading polynomial.
pub(crate) fn factor_squarefree(f: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    let n = f.deg();
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let lead = f.leading().cloned().unwrap_or_default();
    let mut attainable = vec![true; n + 1];
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut used = 0;
    let mut candidate = 3u64;
    while used < PATTERN_PRIMES {
        if !arith::is_prime_u64(candidate) || (&lead % candidate).is_zero() {
            candidate += 2;
            continue;
        }
        let fp = PolyModP::from_int(f, candidate);
        if !fp.is_squarefree() {
            candidate += 2;
            continue;
        }
        let degs = modp::factor_degrees(&modp::distinct_degree(&fp));
        if degs.len() == 1 {
            return Ok(vec![f.clone()]);
        }
        let sums = subset_sums(&degs, n);
        for (slot, ok) in attainable.iter_mut().zip(&sums) {
            *slot &= *ok;
        }
        if !attainable[1..n].iter().any(|&b| b) {
            return Ok(vec![f.clone()]);
        }
        if best.as_ref().map_or(true, |(_, d)| degs.len() < d.len()) {
            best = Some((candidate, degs));
        }
        used += 1;
        candidate += 2;
    }
    let (p, _) = best.expect("at least one usable prime");
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let modular = modp::factor_squarefree(&PolyModP::from_int(f, p), &mut rng);
    let choice = PrimeChoice { p, factors: modular };
    let mut out = hensel::lift_and_recombine(f, choice.p, &choice.factors)?;
    out.sort();
    Ok(out)
}

fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Primitive linear factors `q*T - r` (`q > 0`), found from rational-root
/// candidates; distinct and sorted.
pub fn linear_factors(p: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut f = p.primitive_positive()?;
    let mut out = Vec::new();
    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        out.push(IntPolynomial::from_i64(&[0, 1]));
        f = IntPolynomial::new(f.coeffs()[zeros..].to_vec());
    }
    if f.deg() == 0 {
        return Ok(out);
    }
    let a0 = f.constant_term();
    let an = f.leading().cloned().unwrap_or_default();
    let (qs, rs) = match (arith::divisors(&an), arith::divisors(&a0)) {
        (Ok(q), Ok(r)) => (q, r),
        _ => {
            // Coefficients beyond the divisor-enumeration limit.
            let fac = factor(&f)?;
            out.extend(fac.factors.into_iter().filter(|fp| fp.poly.deg() == 1).map(|fp| fp.poly));
            out.sort();
            return Ok(out);
        }
    };
    for &q in &qs {
        for &r in &rs {
            if q.gcd(&r) != 1 {
                continue;
            }
            for r in [BigInt::from(r), -BigInt::from(r)] {
                let q = BigInt::from(q);
                if homogeneous_value(&f, &r, &q).is_zero() {
                    out.push(IntPolynomial::linear(q, r));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `q^n f(r/q)`.
fn homogeneous_value(f: &IntPolynomial, r: &BigInt, q: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for c in f.coeffs().iter().rev() {
        acc = acc * r + c * &qpow;
        qpow *= q;
    }
    acc
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmallValueFactor {
    pub factor: IntPolynomial,
    /// `-log|R(xi)| / log H(R)`, from the certified upper bound of `|R(xi)|`.
    pub exponent: f64,
}

/// Irreducible factor of `p` with the largest empirical exponent at `xi`.
///
/// `eta` is the caller's exponent for `p` itself and is only recorded for
/// comparison. Height-one factors use `log 2` in the denominator.
pub fn small_value_factor(p: &IntPolynomial, xi: &RationalWitness, _eta: f64) -> Result<SmallValueFactor> {
    let fac = factor(p)?;
    let mut best: Option<SmallValueFactor> = None;
    for fp in &fac.factors {
        let exponent = empirical_exponent(&fp.poly, xi);
        let better = match &best {
            None => true,
            Some(b) => exponent > b.exponent + 1e-9,
        };
        if better {
            best = Some(SmallValueFactor { factor: fp.poly.clone(), exponent });
        }
    }
    best.ok_or(Error::ConstantPolynomial)
}

pub(crate) fn empirical_exponent(r: &IntPolynomial, xi: &RationalWitness) -> f64 {
    let hi = evaluate_at_witness(r, xi).hi_f64();
    if hi <= 0.0 {
        return f64::INFINITY;
    }
    let h = r.height_f64().max(2.0);
    -hi.ln() / h.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn linear_factor_examples() {
        assert_eq!(linear_factors(&p(&[-1, 0, 4])).unwrap(), vec![p(&[-1, 2]), p(&[1, 2])]);
        assert!(linear_factors(&p(&[1, 0, 1])).unwrap().is_empty());
        // T^3 + 2: candidates +-1, +-2 all fail.
        for r in [-2i64, -1, 1, 2] {
            assert_ne!(r.pow(3) + 2, 0);
        }
        assert!(linear_factors(&p(&[2, 0, 0, 1])).unwrap().is_empty());
        assert_eq!(linear_factors(&p(&[0, -1, 0, 1])).unwrap(), vec![p(&[-1, 1]), p(&[0, 1]), p(&[1, 1])]);
        assert!(matches!(linear_factors(&IntPolynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&p(&[2, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(&[1, 0, 0, 1])).unwrap());
        assert_eq!(p(&[1, 1]) * p(&[1, -1, 1]), p(&[1, 0, 0, 1]));
        assert!(!is_irreducible(&p(&[-9, 0, 4])).unwrap());
        assert!(is_irreducible(&p(&[6, 4])).unwrap());
        assert!(is_irreducible(&p(&[2, 0, 6])).unwrap());
        assert!(matches!(is_irreducible(&p(&[5])), Err(Error::ConstantPolynomial)));
        assert!(matches!(is_irreducible(&IntPolynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn factor_examples() {
        let f = factor(&p(&[-1, 0, 0, 0, 1])).unwrap();
        let polys: Vec<_> = f.factors.iter().map(|fp| fp.poly.clone()).collect();
        assert_eq!(polys, vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
        assert_eq!(f.reconstruct(), p(&[-1, 0, 0, 0, 1]));

        let f = factor(&p(&[0, 0, 6])).unwrap();
        assert_eq!(f.content, 6.into());
        assert_eq!(f.factors, vec![FactorPower { poly: p(&[0, 1]), mult: 2 }]);

        let f = factor(&p(&[-1, 0, 4])).unwrap();
        assert_eq!(f.content, 1.into());
        assert_eq!(f.degrees(), vec![1, 1]);
        assert_eq!(f.factors[0].poly, p(&[-1, 2]));
        assert_eq!(f.factors[1].poly, p(&[1, 2]));
        assert!(matches!(factor(&IntPolynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn negative_content_and_powers() {
        // -3 (T + 1)^2 (T^2 + 2)^3
        let base = p(&[1, 1]) * p(&[1, 1]);
        let q = p(&[2, 0, 1]);
        let target = (base * &q * &q * &q).scalar_mul(&(-3).into());
        let f = factor(&target).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.content, 3.into());
        assert_eq!(f.reconstruct(), target);
        assert_eq!(f.degrees(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn swinnerton_dyer_like_needs_recombination() {
        // T^4 - 10T^2 + 1 is irreducible but splits modulo every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f).unwrap());
        let prod = p(&[1, 0, -10, 0, 1]) * p(&[-3, 5, 0, 1]);
        let fac = factor(&prod).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.reconstruct(), prod);
    }

    #[test]
    fn high_degree_products() {
        let a = p(&[7, -3, 0, 2, 1]);
        let b = p(&[-5, 0, 11, 0, 0, 3]);
        let c = p(&[1, 1, 1, 1, 1, 1, 1]);
        let prod = &(&a * &b) * &c;
        let fac = factor(&prod).unwrap();
        assert_eq!(fac.reconstruct(), prod);
        for fp in &fac.factors {
            assert!(is_irreducible(&fp.poly).unwrap());
        }
    }

    #[test]
    fn squarefree_parts() {
        let f = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[-2, 0, 1]);
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(parts, vec![(p(&[-2, 0, 1]), 1), (p(&[1, 1]), 2)]);
    }

    #[test]
    fn small_value_factor_picks_the_small_one() {
        // xi = 1.41421356 (close to sqrt 2); factors T - 1 and T^2 - 2.
        let xi = RationalWitness::exact(BigRational::new(141_421_356.into(), 100_000_000.into()));
        let prod = p(&[-1, 1]) * p(&[-2, 0, 1]);
        let svf = small_value_factor(&prod, &xi, 1.0).unwrap();
        assert_eq!(svf.factor, p(&[-2, 0, 1]));
        assert!(svf.exponent > 5.0);
        let single = small_value_factor(&p(&[-2, 0, 1]), &xi, 1.0).unwrap();
        assert_eq!(single.factor, p(&[-2, 0, 1]));
    }

    #[test]
    fn small_value_factor_tie_uses_canonical_order() {
        // At xi = 0 both T - 2 and T + 2 give |R(0)| = 2 with height 2.
        let xi = RationalWitness::exact(BigRational::zero());
        let svf = small_value_factor(&(p(&[-2, 1]) * p(&[2, 1])), &xi, 0.0).unwrap();
        assert_eq!(svf.factor, p(&[-2, 1]));
    }
}
