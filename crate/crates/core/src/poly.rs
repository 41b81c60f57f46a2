//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored low-to-high: `coeffs[i]` multiplies `T^i`. The zero
//! polynomial is the empty vector and every other value has a nonzero last
//! coefficient, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * T^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The linear polynomial `q*T - r`.
    pub fn linear(q: BigInt, r: BigInt) -> Self {
        Self::new(vec![-r, q])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient of `T^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Naive height: the largest absolute coefficient, 0 for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn height_f64(&self) -> f64 {
        big_to_f64(&self.height())
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiply by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// GCD of the coefficients.
    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// `self / content(self)`; the sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> Result<Self> {
        let g = self.content()?;
        Ok(self.div_scalar_exact(&g))
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_positive(&self) -> Result<Self> {
        let p = self.primitive_part()?;
        Ok(if p.leading().is_some_and(Signed::is_negative) { -p } else { p })
    }

    pub(crate) fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_rational(&self, x: &BigRational) -> BigRational {
        // Homogenized Horner over the common denominator keeps everything integral.
        let (num, den) = (x.numer(), x.denom());
        let n = match self.degree() {
            None => return BigRational::zero(),
            Some(n) => n,
        };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        BigRational::new(acc, num_traits::pow(den.clone(), n))
    }

    pub fn evaluate_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + big_to_f64(c))
    }

    /// Quotient and remainder when the divisor's leading coefficient divides
    /// every intermediate leading term; `None` otherwise.
    pub fn div_rem_exact(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dlead = divisor.leading()?;
        let dd = divisor.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// `self / divisor` when the division is exact over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem_exact(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Result<Self> {
        let blead = b.leading().ok_or(Error::ZeroPolynomial)?;
        let bd = b.deg();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.deg() >= bd {
            let shift = rem.deg() - bd;
            let rlead = rem.leading().cloned().unwrap_or_default();
            rem = rem.scalar_mul(blead) - b.scalar_mul(&rlead).shift(shift);
        }
        Ok(rem)
    }

    /// Primitive GCD with positive leading coefficient; `[1]` for coprime inputs.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::BothZero),
            (true, false) => return other.primitive_gcd_normal(),
            (false, true) => return self.primitive_gcd_normal(),
            _ => {}
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part()?, other.primitive_part()?)
        } else {
            (other.primitive_part()?, self.primitive_part()?)
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b)?;
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part()? };
        }
        if a.is_constant() {
            return Ok(Self::one());
        }
        a.primitive_positive()
    }

    fn primitive_gcd_normal(&self) -> Result<Self> {
        if self.is_constant() {
            Ok(Self::one())
        } else {
            self.primitive_positive()
        }
    }

    pub fn is_coprime(&self, other: &Self) -> Result<bool> {
        Ok(self.gcd(other)?.is_constant())
    }

    /// `(cT + d)^n * p((aT + b)/(cT + d))`, expanded.
    pub fn mobius_conjugate(&self, map: &MobiusMap, n: usize) -> Result<Self> {
        if self.deg() > n {
            return Err(Error::DegreeBound { bound: n, degree: self.deg() });
        }
        if map.determinant().is_zero() {
            return Err(Error::SingularMap);
        }
        let num = Self::new(vec![map.b.clone(), map.a.clone()]);
        let den = Self::new(vec![map.d.clone(), map.c.clone()]);
        let mut num_pows = vec![Self::one()];
        let mut den_pows = vec![Self::one()];
        for i in 1..=n {
            num_pows.push(&num_pows[i - 1] * &num);
            den_pows.push(&den_pows[i - 1] * &den);
        }
        let mut out = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out = out + (&num_pows[i] * &den_pows[n - i]).scalar_mul(c);
        }
        Ok(out)
    }

    /// Resultant via the Sylvester matrix, by fraction-free elimination.
    pub fn resultant(&self, other: &Self) -> Result<BigInt> {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return Err(Error::ZeroPolynomial),
        };
        if m == 0 && n == 0 {
            return Ok(BigInt::one());
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        Ok(bareiss_determinant(mat))
    }

    /// Decimal-string JSON array, low-to-high.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing strings cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub(crate) fn bareiss_determinant(mut mat: Vec<Vec<BigInt>>) -> BigInt {
    let size = mat.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                mat[i][j] = v / &prev;
            }
        }
        prev = mat[k][k].clone();
    }
    sign * &mat[size - 1][size - 1]
}

pub(crate) fn big_to_f64(x: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Canonical order: by degree, then coefficients from the constant term up.
impl Ord for IntPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPolynomial {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(if negate_b { x - y } else { x + y });
    }
    IntPolynomial::new(out)
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -self.clone()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.trim().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Decimal-string serde for a single integer.
pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        String::deserialize(d)?.trim().parse().map_err(serde::de::Error::custom)
    }
}

/// The birational substitution `T -> (aT + b)/(cT + d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusMap {
    #[serde(with = "bigint_string")]
    pub a: BigInt,
    #[serde(with = "bigint_string")]
    pub b: BigInt,
    #[serde(with = "bigint_string")]
    pub c: BigInt,
    #[serde(with = "bigint_string")]
    pub d: BigInt,
}

impl MobiusMap {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let m = Self { a, b, c, d };
        if m.determinant().is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(m)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Adjugate map, the inverse up to the scalar `det`.
    pub fn adjugate(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn height_examples() {
        assert_eq!(p(&[-1, 0, 4]).height(), 4.into());
        assert_eq!(IntPolynomial::zero().height(), 0.into());
        assert_eq!(p(&[7]).height(), 7.into());
    }

    #[test]
    fn canonical_zero() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p(&[1, 2]) * p(&[-1, 2]), p(&[-1, 0, 4]));
        assert_eq!(p(&[3, 1]) + IntPolynomial::zero(), p(&[3, 1]));
        let five_t2 = p(&[0, 0, 1]).scalar_mul(&5.into());
        assert_eq!(five_t2 + p(&[-1, 0, -1]), p(&[-1, 0, 4]));
        assert!((p(&[1, 1]) - p(&[1, 1])).is_zero());
    }

    #[test]
    fn content_and_primitive_part() {
        let q = p(&[6, -9, 12]);
        assert_eq!(q.content().unwrap(), 3.into());
        assert_eq!(q.primitive_part().unwrap(), p(&[2, -3, 4]));
        assert_eq!(p(&[2, -3, 4]).primitive_part().unwrap(), p(&[2, -3, 4]));
        let c = p(&[-4]);
        assert_eq!(c.content().unwrap(), 4.into());
        assert_eq!(c.primitive_part().unwrap(), p(&[-1]));
        assert!(matches!(IntPolynomial::zero().content(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[0, 1, 1])).unwrap(), p(&[1, 1]));
        let g = p(&[0, 0, 1]).gcd(&p(&[-1, 0, -1])).unwrap();
        assert_eq!(g, IntPolynomial::one());
        assert_ne!(p(&[0, 0, 1]).resultant(&p(&[-1, 0, -1])).unwrap(), 0.into());
        let q = p(&[-6, 3, -9]);
        assert_eq!(q.gcd(&q).unwrap(), p(&[2, -1, 3]));
        assert!(matches!(
            IntPolynomial::zero().gcd(&IntPolynomial::zero()),
            Err(Error::BothZero)
        ));
    }

    #[test]
    fn gcd_with_zero_and_constants() {
        assert_eq!(IntPolynomial::zero().gcd(&p(&[2, 4])).unwrap(), p(&[1, 2]));
        assert_eq!(p(&[5]).gcd(&p(&[1, 1])).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn mobius_examples() {
        let q = p(&[3, 2, 1]);
        let rev = MobiusMap::from_i64(0, 1, 1, 0).unwrap();
        assert_eq!(q.mobius_conjugate(&rev, 2).unwrap(), p(&[1, 2, 3]));
        assert_eq!(q.mobius_conjugate(&MobiusMap::identity(), 2).unwrap(), q);
        let shift = MobiusMap::from_i64(1, 1, 0, 1).unwrap();
        assert_eq!(p(&[0, 0, 1]).mobius_conjugate(&shift, 2).unwrap(), p(&[1, 2, 1]));
        assert!(matches!(
            q.mobius_conjugate(&shift, 1),
            Err(Error::DegreeBound { bound: 1, degree: 2 })
        ));
        assert!(matches!(MobiusMap::from_i64(1, 2, 2, 4), Err(Error::SingularMap)));
    }

    #[test]
    fn evaluate_examples() {
        let half = BigRational::new(1.into(), 2.into());
        assert!(p(&[-1, 0, 4]).evaluate_rational(&half).is_zero());
        assert_eq!(
            p(&[2, 0, 0, 1]).evaluate_rational(&BigRational::zero()),
            BigRational::from_integer(2.into())
        );
        let three_halves = BigRational::new(3.into(), 2.into());
        assert_eq!(
            p(&[0, 0, 1]).evaluate_rational(&three_halves),
            BigRational::new(9.into(), 4.into())
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[2, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert!(p(&[9]).derivative().is_zero());
        let mono = p(&[0, 0, 0, 0, -7]);
        let d = mono.derivative();
        assert_eq!(d.height(), mono.height() * 4);
    }

    #[test]
    fn pseudo_rem_and_exact_division() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        assert!(a.pseudo_rem(&b).unwrap().is_zero());
        assert_eq!(a.div_exact(&b).unwrap(), p(&[1, 1, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&p(&[1, 2])).is_none());
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(T - 2, T - 5) = 2 - 5 up to the Sylvester sign convention.
        let r = p(&[-2, 1]).resultant(&p(&[-5, 1])).unwrap();
        assert_eq!(r.abs(), 3.into());
        assert!(p(&[-1, 0, 1]).resultant(&p(&[1, 1])).unwrap().is_zero());
        // Res(T^2 + 1, T^2 - 2) = (i^2 - 2)((-i)^2 - 2) = 9
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[-2, 0, 1])).unwrap(), 9.into());
    }

    #[test]
    fn json_format() {
        let q = p(&[-1, 0, 4]);
        assert_eq!(q.to_json(), r#"["-1","0","4"]"#);
        assert_eq!(IntPolynomial::from_json(r#"["-1","0","4","0"]"#).unwrap(), q);
        assert!(IntPolynomial::from_json(r#"["x"]"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 4]).to_string(), "4T^2 - 1");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "T^3 - T");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
