//! Complex roots with certified inclusion disks.
//!
//! Approximations come from simultaneous (Aberth) iteration, first in `f64`
//! and then in fixed-point big-integer complex arithmetic. Each disk radius
//! is `n |s(z)| / |s'(z)|` for the squarefree part `s` of degree `n`,
//! evaluated exactly at the dyadic center `z` and rounded upward.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::witness::{lower_f64, upper_f64, Verdict};
use crate::error::{Error, Result};
use crate::factor::squarefree_decomposition;
use crate::poly::{big_to_f64, IntPolynomial};

pub const DEFAULT_PRECISION: u32 = 128;
/// Environment variable overriding [`DEFAULT_PRECISION`].
pub const PRECISION_ENV: &str = "POLYCOMB_PRECISION";

const GUARD_BITS: u32 = 32;
const F64_ITERATIONS: usize = 400;
const FIXED_ITERATIONS: usize = 200;

pub fn default_precision() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b: &u32| (16..=4096).contains(&b))
        .unwrap_or(DEFAULT_PRECISION)
}

/// Disk centered at `(re + i im) / 2^scale` containing at least one root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDisk {
    pub re: BigInt,
    pub im: BigInt,
    pub scale: u32,
    /// Upper bound on the inclusion radius.
    pub radius: f64,
    pub multiplicity: usize,
}

impl RootDisk {
    pub fn re_f64(&self) -> f64 {
        big_to_f64(&self.re) / 2f64.powi(self.scale as i32)
    }

    pub fn im_f64(&self) -> f64 {
        big_to_f64(&self.im) / 2f64.powi(self.scale as i32)
    }

    pub fn re_rational(&self) -> BigRational {
        BigRational::new(self.re.clone(), BigInt::from(1) << self.scale)
    }

    pub fn im_rational(&self) -> BigRational {
        BigRational::new(self.im.clone(), BigInt::from(1) << self.scale)
    }

    pub fn is_real_candidate(&self) -> bool {
        self.im_f64().abs() <= self.radius
    }

    /// Certified enclosure `[lo, hi]` of `|c1 - c2|` for the two centers.
    pub fn center_distance(&self, other: &RootDisk) -> (f64, f64) {
        let s = self.scale.max(other.scale);
        let dr = (&self.re << (s - self.scale)) - (&other.re << (s - other.scale));
        let di = (&self.im << (s - self.scale)) - (&other.im << (s - other.scale));
        let sq = BigRational::new(&dr * &dr + &di * &di, BigInt::from(1) << (2 * s));
        (lower_f64(&sq).sqrt().next_down().max(0.0), upper_f64(&sq).sqrt().next_up())
    }
}

impl Serialize for RootDisk {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View {
            re: f64,
            im: f64,
            radius: f64,
            multiplicity: usize,
        }
        View { re: self.re_f64(), im: self.im_f64(), radius: self.radius, multiplicity: self.multiplicity }.serialize(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSet {
    pub roots: Vec<RootDisk>,
    pub precision: u32,
    /// Fixed-point iterations spent across all squarefree parts.
    pub iterations: usize,
    /// Iteration cap hit with some radius above `2^(-precision/2)`.
    pub degraded: bool,
    /// Disks of distinct roots are pairwise disjoint.
    pub separated: bool,
}

impl RootSet {
    pub fn max_radius(&self) -> f64 {
        self.roots.iter().map(|r| r.radius).fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn zero() -> Self {
        Fx { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn from_c64(z: Complex64, s: u32) -> Self {
        let f = |x: f64| -> BigInt {
            if !x.is_finite() {
                return BigInt::zero();
            }
            let (m, e, sign) = num_traits::Float::integer_decode(x);
            let m = BigInt::from(m) * BigInt::from(sign);
            let shift = e as i64 + s as i64;
            if shift >= 0 {
                m << shift as usize
            } else {
                m >> (-shift) as usize
            }
        };
        Fx { re: f(z.re), im: f(z.im) }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Fx) -> Fx {
        Fx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Fx, s: u32) -> Fx {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> s,
            im: (&self.re * &o.im + &self.im * &o.re) >> s,
        }
    }

    fn div(&self, o: &Fx, s: u32) -> Option<Fx> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << s;
        let im = (&self.im * &o.re - &self.re * &o.im) << s;
        Some(Fx { re: re / &den, im: im / den })
    }

    fn abs_bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }
}

fn horner_fx(c: &[BigInt], z: &Fx, s: u32) -> Fx {
    let mut acc = Fx::zero();
    for a in c.iter().rev() {
        acc = acc.mul(z, s);
        acc.re += a << s;
    }
    acc
}

fn horner_c64(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

fn aberth_f64(f: &IntPolynomial) -> Vec<Complex64> {
    let n = f.deg();
    let c: Vec<f64> = f.coeffs().iter().map(big_to_f64).collect();
    let dc: Vec<f64> = f.derivative().coeffs().iter().map(big_to_f64).collect();
    let lead = c[n].abs();
    let cauchy = 1.0 + c[..n].iter().map(|a| a.abs() / lead).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(cauchy, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..F64_ITERATIONS {
        let mut moved = 0.0f64;
        for i in 0..n {
            let pz = horner_c64(&c, z[i]);
            let dz = horner_c64(&dc, z[i]);
            if pz == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = pz / dz;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    sum += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Fixed-point Aberth refinement; returns the iteration count and whether
/// the last correction fell below `2^(GUARD_BITS/2 - s)`.
fn aberth_fixed(f: &IntPolynomial, z: &mut [Fx], s: u32) -> (usize, bool) {
    let n = z.len();
    let c = f.coeffs();
    let dcoef = f.derivative();
    let dc = dcoef.coeffs();
    let one = Fx { re: BigInt::from(1) << s, im: BigInt::zero() };
    let tiny = BigInt::from(1) << 2;
    for it in 1..=FIXED_ITERATIONS {
        let mut max_bits = 0u64;
        for i in 0..n {
            let pz = horner_fx(c, &z[i], s);
            if pz.re.is_zero() && pz.im.is_zero() {
                continue;
            }
            let dz = horner_fx(dc, &z[i], s);
            let ratio = match pz.div(&dz, s) {
                Some(r) => r,
                None => {
                    z[i].re += &tiny;
                    z[i].im += &tiny;
                    max_bits = u64::MAX;
                    continue;
                }
            };
            let mut sum = Fx::zero();
            for j in 0..n {
                if j != i {
                    match one.div(&z[i].sub(&z[j]), s) {
                        Some(inv) => sum = sum.add(&inv),
                        None => {
                            z[i].re += &tiny;
                        }
                    }
                }
            }
            let den = one.sub(&ratio.mul(&sum, s));
            let w = ratio.div(&den, s).unwrap_or(ratio);
            max_bits = max_bits.max(w.abs_bits());
            z[i] = z[i].sub(&w);
        }
        // Corrections within the guard bits are rounding noise.
        if max_bits <= (GUARD_BITS / 2) as u64 {
            return (it, true);
        }
    }
    (FIXED_ITERATIONS, false)
}

/// Upper bound on `n |f(z)| / |f'(z)|` at the dyadic point `z / 2^s`.
fn inclusion_radius(f: &IntPolynomial, z: &Fx, s: u32) -> f64 {
    let n = f.deg();
    // Exact Gaussian integers f(z) 2^(s n) and f'(z) 2^(s (n-1)).
    let eval = |coeffs: &[BigInt], deg: usize| -> (BigInt, BigInt) {
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (i, a) in coeffs.iter().enumerate().rev() {
            let nr = &re * &z.re - &im * &z.im;
            let ni = &re * &z.im + &im * &z.re;
            re = nr + (a << (s as usize * (deg - i)));
            im = ni;
        }
        (re, im)
    };
    let (pr, pi) = eval(f.coeffs(), n);
    let d = f.derivative();
    let (dr, di) = eval(d.coeffs(), n - 1);
    let num = &pr * &pr + &pi * &pi;
    if num.is_zero() {
        return 0.0;
    }
    let den = &dr * &dr + &di * &di;
    if den.is_zero() {
        return f64::INFINITY;
    }
    // |f/f'|^2 = num / (den 2^(2s)).
    let sq = BigRational::new(num * BigInt::from((n * n) as u64), den << (2 * s as usize));
    let r = upper_f64(&sq).sqrt().next_up();
    if r == 0.0 {
        f64::MIN_POSITIVE
    } else {
        r
    }
}

fn simple_roots(f: &IntPolynomial, precision: u32, mult: usize) -> (Vec<RootDisk>, usize, bool) {
    let s = precision + GUARD_BITS;
    if f.deg() == 1 {
        // -c0 / c1 rounded to the grid.
        let num = -(f.coeff(0) << s);
        let z = Fx { re: num / f.coeff(1), im: BigInt::zero() };
        let radius = inclusion_radius(f, &z, s);
        return (vec![RootDisk { re: z.re, im: z.im, scale: s, radius, multiplicity: mult }], 0, true);
    }
    let approx = aberth_f64(f);
    let mut z: Vec<Fx> = approx.iter().map(|&w| Fx::from_c64(w, s)).collect();
    let (iters, converged) = aberth_fixed(f, &mut z, s);
    let disks = z
        .into_iter()
        .map(|w| {
            let radius = inclusion_radius(f, &w, s);
            RootDisk { re: w.re, im: w.im, scale: s, radius, multiplicity: mult }
        })
        .collect();
    (disks, iters, converged)
}

/// All complex roots of `p`, one disk per root counted with multiplicity.
pub fn roots(p: &IntPolynomial, precision: u32) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let target = 2f64.powi(-(precision as i32) / 2);
    let mut out = Vec::new();
    let mut iterations = 0;
    let mut converged = true;
    for (part, mult) in squarefree_decomposition(p)? {
        let (disks, it, ok) = simple_roots(&part, precision, mult);
        iterations += it;
        converged &= ok;
        for d in disks {
            for _ in 0..mult {
                out.push(d.clone());
            }
        }
    }
    out.sort_by(|a, b| {
        a.re_f64()
            .total_cmp(&b.re_f64())
            .then(a.im_f64().total_cmp(&b.im_f64()))
            .then(a.re.cmp(&b.re))
            .then(a.im.cmp(&b.im))
    });
    let degraded = out.iter().any(|d| !(d.radius < target)) && !converged;
    let mut separated = true;
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if out[i] == out[j] {
                continue;
            }
            let (lo, _) = out[i].center_distance(&out[j]);
            if lo <= out[i].radius + out[j].radius {
                separated = false;
            }
        }
    }
    Ok(RootSet { roots: out, precision, iterations, degraded, separated })
}

/// Certified enclosure of `min |alpha - beta|` over roots `alpha` of `p` and
/// `beta` of `q`.
#[derive(Clone, Debug, Serialize)]
pub struct RootGap {
    pub lo: f64,
    pub hi: f64,
    pub alpha: RootDisk,
    pub beta: RootDisk,
}

impl RootGap {
    /// `gap <= threshold`.
    pub fn below(&self, threshold: f64) -> Verdict {
        Verdict::le(self.lo, self.hi, threshold)
    }
}

pub fn min_root_gap(p: &IntPolynomial, q: &IntPolynomial, precision: u32) -> Result<RootGap> {
    let rp = roots(p, precision)?;
    let rq = roots(q, precision)?;
    let mut lo = f64::INFINITY;
    let mut best: Option<(f64, f64, &RootDisk, &RootDisk)> = None;
    for a in &rp.roots {
        for b in &rq.roots {
            let (dlo, dhi) = a.center_distance(b);
            let r = a.radius + b.radius;
            let plo = (dlo - r).next_down().max(0.0);
            let phi = (dhi + r).next_up();
            lo = lo.min(plo);
            let better = match best {
                None => true,
                Some((bd, bhi, _, _)) => phi < bhi || (phi == bhi && dlo < bd),
            };
            if better {
                best = Some((dlo, phi, a, b));
            }
        }
    }
    let (_, hi, a, b) = best.expect("both polynomials have roots");
    Ok(RootGap { lo, hi, alpha: a.clone(), beta: b.clone() })
}
