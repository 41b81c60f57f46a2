//! Real witnesses given as a rational approximant with a certified radius, and
//! exact-endpoint intervals for values at such witnesses.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `xi` with `|xi - approximant| <= radius`, `0 <= radius < 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalWitness {
    #[serde(with = "rational_string")]
    pub approximant: BigRational,
    #[serde(with = "rational_string")]
    pub radius: BigRational,
    pub description: String,
}

impl RationalWitness {
    pub fn new(approximant: BigRational, radius: BigRational, description: impl Into<String>) -> Result<Self> {
        if radius.is_negative() || radius >= BigRational::one() {
            return Err(Error::OutOfRange(format!("witness radius {radius} must lie in [0, 1)")));
        }
        Ok(Self { approximant, radius, description: description.into() })
    }

    /// A rational `xi` known exactly.
    pub fn exact(q: BigRational) -> Self {
        let description = format!("exact {q}");
        Self { approximant: q, radius: BigRational::zero(), description }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::exact(BigRational::new(num.into(), den.into()))
    }

    pub fn approximant_f64(&self) -> f64 {
        rational_to_f64(&self.approximant)
    }

    pub fn radius_f64_upper(&self) -> f64 {
        upper_f64(&self.radius)
    }

    pub fn is_exact(&self) -> bool {
        self.radius.is_zero()
    }
}

impl fmt::Display for RationalWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} +- {:e} ({})", self.approximant_f64(), self.radius_f64_upper(), self.description)
    }
}

/// Closed interval with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealInterval {
    #[serde(with = "rational_string")]
    pub lo: BigRational,
    #[serde(with = "rational_string")]
    pub hi: BigRational,
}

impl RealInterval {
    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Lower endpoint rounded toward minus infinity.
    pub fn lo_f64(&self) -> f64 {
        lower_f64(&self.lo)
    }

    /// Upper endpoint rounded toward plus infinity.
    pub fn hi_f64(&self) -> f64 {
        upper_f64(&self.hi)
    }
}

/// Three-valued outcome of a certified comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    /// `x <= t` for `x` known to lie in `[lo, hi]`.
    pub fn le(lo: f64, hi: f64, t: f64) -> Self {
        if hi <= t {
            Verdict::True
        } else if lo > t {
            Verdict::False
        } else {
            Verdict::Indeterminate
        }
    }

    /// `x >= t` for `x` known to lie in `[lo, hi]`.
    pub fn ge(lo: f64, hi: f64, t: f64) -> Self {
        if lo >= t {
            Verdict::True
        } else if hi < t {
            Verdict::False
        } else {
            Verdict::Indeterminate
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Smallest representable `f64` not below `x`.
pub(crate) fn upper_f64(x: &BigRational) -> f64 {
    let v = rational_to_f64(x);
    if !v.is_finite() {
        return v;
    }
    match BigRational::from_f64(v) {
        Some(r) if &r < x => v.next_up(),
        _ => v,
    }
}

/// Largest representable `f64` not above `x`.
pub(crate) fn lower_f64(x: &BigRational) -> f64 {
    let v = rational_to_f64(x);
    if !v.is_finite() {
        return v;
    }
    match BigRational::from_f64(v) {
        Some(r) if &r > x => v.next_down(),
        _ => v,
    }
}

/// Coefficients of `p(a + x)` in powers of `x`.
pub(crate) fn taylor_shift(p: &IntPolynomial, a: &BigRational) -> Vec<BigRational> {
    let mut c: Vec<BigRational> = p.coeffs().iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let n = c.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let t = &c[j + 1] * a;
            c[j] += t;
        }
    }
    c
}

/// Certified interval for `|p(xi)|`: the exact value at the approximant,
/// widened by the full Taylor remainder `sum_{k>=1} |p_k(a)| r^k`.
pub fn evaluate_at_witness(p: &IntPolynomial, xi: &RationalWitness) -> RealInterval {
    if xi.radius.is_zero() || p.deg() == 0 {
        return RealInterval::point(p.evaluate_rational(&xi.approximant).abs());
    }
    let t = taylor_shift(p, &xi.approximant);
    let centre = t[0].abs();
    let mut err = BigRational::zero();
    let mut rk = BigRational::one();
    for c in &t[1..] {
        rk *= &xi.radius;
        err += c.abs() * &rk;
    }
    let lo = &centre - &err;
    let lo = if lo.is_negative() { BigRational::zero() } else { lo };
    RealInterval { lo, hi: centre + err }
}

/// Decimal-string serde for exact rationals (`"p/q"` or `"p"`).
pub(crate) mod rational_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses `p/q`, an integer, or a plain decimal such as `-1.25`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let mut n: BigInt = digits.parse().map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(n, d));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}
