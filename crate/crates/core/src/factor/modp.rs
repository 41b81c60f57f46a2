//! Dense polynomials over a small prime field `F_p` (`p < 2^32`), with the
//! distinct-degree and equal-degree splitting used by the integer factorizer.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PolyModP {
    pub p: u64,
    /// Low-to-high, trimmed.
    pub c: Vec<u64>,
}

impl PolyModP {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().unwrap_or(0))
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        Self { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % self.p)
            .collect();
        Self::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + self.p - o.c.get(i).unwrap_or(&0)) % self.p)
            .collect();
        Self::new(self.p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, v)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| self.mulm(a, k % self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv(self.lead()))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial mod p");
        if self.c.len() < d.c.len() {
            return (Self::zero(self.p), self.clone());
        }
        let inv = self.inv(d.lead());
        let mut r = self.c.clone();
        let dd = d.deg();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = self.mulm(r[k + dd], inv);
            if t == 0 {
                continue;
            }
            q[k] = t;
            for (j, &dc) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - self.mulm(t, dc)) % self.p;
            }
        }
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let k = r0.inv(r0.lead());
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| self.mulm(a, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn pow_mod(&self, exp: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p);
        let base = self.rem(m);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Symmetric-range lift to the integers.
    pub fn to_int(&self) -> IntPolynomial {
        let half = self.p / 2;
        IntPolynomial::new(
            self.c
                .iter()
                .map(|&a| {
                    if a > half {
                        BigInt::from(a) - BigInt::from(self.p)
                    } else {
                        BigInt::from(a)
                    }
                })
                .collect(),
        )
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)` for each `d` present.
pub(crate) fn distinct_degree(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.p;
    let pb = BigUint::from(p);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = PolyModP::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pb, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Degrees of the irreducible factors, from a distinct-degree factorization.
pub(crate) fn factor_degrees(ddf: &[(PolyModP, usize)]) -> Vec<usize> {
    let mut out = Vec::new();
    for (g, d) in ddf {
        out.extend(std::iter::repeat(*d).take(g.deg() / d));
    }
    out
}

/// Split a product of irreducibles all of degree `d` (Cantor-Zassenhaus, odd `p`).
pub(crate) fn equal_degree<R: Rng>(g: &PolyModP, d: usize, rng: &mut R) -> Vec<PolyModP> {
    let p = g.p;
    if g.deg() == d {
        return vec![g.monic()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = PolyModP::new(p, (0..g.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = a.pow_mod(&exp, g).sub(&PolyModP::one(p));
        let h = g.gcd(&b);
        if h.deg() > 0 && h.deg() < g.deg() {
            let other = g.div_rem(&h).0;
            let mut out = equal_degree(&h, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles of a squarefree polynomial.
pub(crate) fn factor_squarefree<R: Rng>(f: &PolyModP, rng: &mut R) -> Vec<PolyModP> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(equal_degree(&g, d, rng));
    }
    out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
    out
}
