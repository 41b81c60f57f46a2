//! Closed-form exponent bounds and desk-scale estimators of `w_n`, its
//! exact-degree, monic and unit variants, and `lambda_n`.
//!
//! The estimators search exhaustively. Values are screened in `f64` with an
//! explicit rounding bound `E`, a top-`K` list of candidates is re-evaluated
//! with exact interval arithmetic, and `K` doubles until every unseen
//! candidate is certified to be no better than the reported minimum.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{evaluate_at_witness, parse_rational, upper_f64, RationalWitness, RealInterval};
use crate::error::{Error, Result};
use crate::factor;
use crate::poly::IntPolynomial;

/// `(n + sqrt(n^2 + 16n - 8)) / 4`, proven for `1 <= n <= 7`.
pub fn wirsing_exact_bound(n: u32) -> Result<f64> {
    if !(1..=7).contains(&n) {
        return Err(Error::OutOfRange(format!("the exact-degree bound covers 1 <= n <= 7, got {n}")));
    }
    let n = f64::from(n);
    Ok((n + (n * n + 16.0 * n - 8.0).sqrt()) / 4.0)
}

/// `(3/2) w_hat - n + 1/2`.
pub fn uniform_exact_bound(w_hat: f64, n: u32) -> Result<f64> {
    let nf = f64::from(n);
    if n < 1 || !(w_hat >= nf) {
        return Err(Error::OutOfRange(format!("need w_hat >= n >= 1, got w_hat = {w_hat}, n = {n}")));
    }
    Ok(1.5 * w_hat - nf + 0.5)
}

/// `1 / lambda_hat`.
pub fn ds_bound(lambda_hat: f64) -> Result<f64> {
    if !(lambda_hat > 0.0 && lambda_hat <= 1.0) {
        return Err(Error::OutOfRange(format!("lambda_hat = {lambda_hat} must lie in (0, 1]")));
    }
    Ok(1.0 / lambda_hat)
}

/// `(w_hat - n + 1) / w_hat`, an upper bound for `lambda_hat`.
pub fn german_transfer(w_hat: f64, n: u32) -> Result<f64> {
    let nf = f64::from(n);
    if n < 1 || !(w_hat >= nf) {
        return Err(Error::OutOfRange(format!("need w_hat >= n >= 1, got w_hat = {w_hat}, n = {n}")));
    }
    Ok((w_hat - nf + 1.0) / w_hat)
}

/// `w_hat2 (w_hat2 - 1)`.
pub fn jm_bound(w_hat2: f64) -> Result<f64> {
    if !(w_hat2 >= 2.0) {
        return Err(Error::OutOfRange(format!("w_hat2 = {w_hat2} must be at least 2")));
    }
    Ok(w_hat2 * (w_hat2 - 1.0))
}

/// `n/2 + (1 - log 2)/2 sqrt(n) + 1/3`.
pub fn pr_asymptotic_bound(n: u32) -> Result<f64> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("the asymptotic bound needs n >= 4, got {n}")));
    }
    let n = f64::from(n);
    Ok(n / 2.0 + (1.0 - std::f64::consts::LN_2) / 2.0 * n.sqrt() + 1.0 / 3.0)
}

/// Solution `(w_hat, bound)` of `w/(w - n + 1) = (3/2) w - n + 1/2` by
/// bisection on `[n, 2n + 2]`; the left side decreases and the right side
/// increases in `w`.
pub fn equilibrium(n: u32) -> Result<(f64, f64)> {
    if n < 1 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let nf = f64::from(n);
    let g = |w: f64| w / (w - nf + 1.0) - (1.5 * w - nf + 0.5);
    let (mut lo, mut hi) = (nf, 2.0 * nf + 2.0);
    if g(lo) <= 0.0 {
        return Ok((lo, 1.5 * lo - nf + 0.5));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    let w = 0.5 * (lo + hi);
    Ok((w, 1.5 * w - nf + 0.5))
}

/// Stored literature columns for `n = 3..=7`.
pub const TABLE_THM11: [f64; 5] = [2.5, 3.1213, 3.7122, 4.2839, 4.8423];
pub const TABLE_PR: [f64; 5] = [2.3557, 2.9667, 3.5615, 4.0916, 4.6457];
pub const TABLE_TSISHCHANKA: [f64; 5] = [2.7304, 3.4508, 4.1389, 4.7630, 5.3561];

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: u32,
    /// Recomputed from the closed form.
    pub exact_degree: f64,
    pub exact_degree_stored: f64,
    pub uniform_transfer: f64,
    pub not_exact_degree: f64,
}

pub fn comparison_table() -> Vec<TableRow> {
    (3..=7u32)
        .map(|n| {
            let i = (n - 3) as usize;
            TableRow {
                n,
                exact_degree: wirsing_exact_bound(n).expect("n in range"),
                exact_degree_stored: TABLE_THM11[i],
                uniform_transfer: TABLE_PR[i],
                not_exact_degree: TABLE_TSISHCHANKA[i],
            }
        })
        .collect()
}

/// `sum_{j=1}^k base^(-j!)`, radius `2 base^(-(k+1)!)`.
pub fn liouville_witness(base: u32, k: u32) -> Result<RationalWitness> {
    if base < 2 || k < 1 {
        return Err(Error::OutOfRange(format!("need base >= 2 and k >= 1, got base {base}, k {k}")));
    }
    if k > 7 {
        return Err(Error::OutOfRange(format!("k = {k} would need a denominator beyond base^40320")));
    }
    let b = BigInt::from(base);
    let mut sum = BigRational::zero();
    let mut fact = 1usize;
    for j in 1..=k as usize {
        fact *= j;
        sum += BigRational::new(BigInt::one(), num_traits::pow(b.clone(), fact));
    }
    let next = fact * (k as usize + 1);
    let radius = BigRational::new(BigInt::from(2), num_traits::pow(b, next));
    RationalWitness::new(sum, radius, format!("liouville:{base},{k}"))
}

/// The finite continued fraction `[a0; a1, ..., ak]` as an exact witness.
pub fn cf_witness(terms: &[i64]) -> Result<RationalWitness> {
    if terms.is_empty() {
        return Err(Error::OutOfRange("continued fraction needs at least one term".into()));
    }
    if terms[1..].iter().any(|&a| a < 1) {
        return Err(Error::OutOfRange("partial quotients after the first must be positive".into()));
    }
    let (mut p0, mut p1) = (BigInt::one(), BigInt::from(terms[0]));
    let (mut q0, mut q1) = (BigInt::zero(), BigInt::one());
    for &a in &terms[1..] {
        let a = BigInt::from(a);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    let desc = if terms.len() <= 8 {
        format!("cf:{terms:?}")
    } else {
        format!("cf:[{}, {}, ... ({} terms)]", terms[0], terms[1], terms.len())
    };
    Ok(RationalWitness { approximant: BigRational::new(p1, q1), radius: BigRational::zero(), description: desc })
}

/// Seeded continued fraction `[0; a1, ..., a_len]` with `a_i` uniform in
/// `1..=max_term`.
pub fn random_cf_witness(seed: u64, len: usize, max_term: i64) -> Result<RationalWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = vec![0i64];
    terms.extend((0..len).map(|_| rng.gen_range(1..=max_term)));
    let mut w = cf_witness(&terms)?;
    w.description = format!("random cf seed {seed}, {len} terms up to {max_term}");
    Ok(w)
}

/// Parses `liouville:b,k`, `cf:[a0,a1,...]`, or a rational (`p/q` or a
/// decimal) with an optional `+-radius` suffix.
pub fn parse_witness(s: &str) -> Result<RationalWitness> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("liouville:") {
        let (b, k) = rest.split_once(',').ok_or_else(|| Error::Parse(format!("expected liouville:b,k, got {s:?}")))?;
        let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad base in {s:?}")))?;
        let k = k.trim().parse().map_err(|_| Error::Parse(format!("bad term count in {s:?}")))?;
        return liouville_witness(b, k);
    }
    if let Some(rest) = s.strip_prefix("cf:") {
        let terms: Vec<i64> = serde_json::from_str(rest.trim())
            .map_err(|e| Error::Parse(format!("bad continued fraction {rest:?}: {e}")))?;
        return cf_witness(&terms);
    }
    if let Some((a, r)) = s.split_once("+-") {
        return RationalWitness::new(parse_rational(a)?, parse_rational(r)?, s.to_string());
    }
    let mut w = RationalWitness::exact(parse_rational(s)?);
    w.description = s.to_string();
    Ok(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WVariant {
    /// Degree at most `n`.
    Any,
    /// Irreducible of degree exactly `n`.
    ExactIrreducible,
    /// Irreducible monic of degree `n`.
    Monic,
    /// Irreducible monic of degree `n` with constant coefficient `+-1`.
    MonicUnit,
}

impl std::str::FromStr for WVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(WVariant::Any),
            "exact_irreducible" => Ok(WVariant::ExactIrreducible),
            "monic" => Ok(WVariant::Monic),
            "monic_unit" => Ok(WVariant::MonicUnit),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimateKind {
    W,
    WExact,
    WInt,
    WUnit,
    Lambda,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimateWitness {
    Polynomial(IntPolynomial),
    Integer(u64),
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchBox {
    /// Size of the full coefficient box (or `X` for lambda).
    pub raw_size: f64,
    /// Work actually enumerated; this is what the limit applies to.
    pub effective_size: f64,
    pub limit: f64,
    /// Final top-K list length.
    pub k: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExponentEstimate {
    pub kind: EstimateKind,
    pub variant: Option<WVariant>,
    pub n: u32,
    pub x: u64,
    /// `-log(upper bound of the attained minimum) / log X`.
    pub value: f64,
    pub witness: EstimateWitness,
    /// Certified interval of `|P(xi)|` or `max_i ||x xi^i||` at the witness.
    pub attained: RealInterval,
    /// Some candidate whose interval meets zero (or an uncertified tail)
    /// could beat the reported minimum.
    pub indeterminate: bool,
    pub search: SearchBox,
    pub xi: String,
}

/// Enumeration budget of the estimators.
pub const BOX_LIMIT: f64 = 1e9;
const INITIAL_K: usize = 64;
const MAX_K: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
struct Cand {
    f: f64,
    c: Vec<i64>,
}

impl Eq for Cand {}

impl Ord for Cand {
    fn cmp(&self, o: &Self) -> Ordering {
        self.f.total_cmp(&o.f).then_with(|| self.c.len().cmp(&o.c.len())).then_with(|| self.c.cmp(&o.c))
    }
}

impl PartialOrd for Cand {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

struct TopK {
    k: usize,
    heap: BinaryHeap<Cand>,
    pruned: bool,
}

impl TopK {
    fn new(k: usize) -> Self {
        Self { k, heap: BinaryHeap::with_capacity(k + 1), pruned: false }
    }

    fn threshold(&self) -> f64 {
        if self.heap.len() < self.k {
            f64::INFINITY
        } else {
            self.heap.peek().map_or(f64::INFINITY, |c| c.f)
        }
    }

    fn push(&mut self, f: f64, c: impl FnOnce() -> Vec<i64>) {
        if f < self.threshold() || self.heap.len() < self.k {
            self.heap.push(Cand { f, c: c() });
            if self.heap.len() > self.k {
                self.heap.pop();
                self.pruned = true;
            }
        } else {
            self.pruned = true;
        }
    }
}

/// Fractional parts `{c x}` for `c in [-X, X]`, sorted.
struct FracIndex {
    fr: Vec<(f64, i64)>,
}

impl FracIndex {
    fn new(x: f64, cap: i64) -> Self {
        let mut fr: Vec<(f64, i64)> = (-cap..=cap)
            .map(|c| {
                let v = c as f64 * x;
                (v - v.floor(), c)
            })
            .collect();
        fr.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        Self { fr }
    }

    /// Visits `c` in increasing circular distance of `{c x}` from `t` until
    /// `visit` returns false.
    fn walk(&self, t: f64, mut visit: impl FnMut(i64, f64) -> bool) {
        let len = self.fr.len();
        let start = self.fr.partition_point(|e| e.0 < t);
        let (mut r, mut l) = (start % len, (start + len - 1) % len);
        let mut seen = 0;
        while seen < len {
            let dr = (self.fr[r].0 - t).rem_euclid(1.0);
            let dl = (t - self.fr[l].0).rem_euclid(1.0);
            let (c, d) = if dr <= dl {
                let e = self.fr[r];
                r = (r + 1) % len;
                (e.1, dr)
            } else {
                let e = self.fr[l];
                l = (l + len - 1) % len;
                (e.1, dl)
            };
            seen += 1;
            if !visit(c, d) {
                break;
            }
        }
    }
}

struct WSetup {
    n: usize,
    x: f64,
    cap: i64,
    variant: WVariant,
    err: f64,
}

impl WSetup {
    fn c1_range(&self, outer: &[i64]) -> Option<(i64, i64)> {
        let all_zero = outer.iter().all(|&c| c == 0);
        match self.variant {
            WVariant::Any if self.n == 1 || all_zero => Some((1, self.cap)),
            WVariant::Any => {
                let top = outer.iter().rposition(|&c| c != 0).expect("not all zero");
                (outer[top] > 0).then_some((-self.cap, self.cap))
            }
            WVariant::ExactIrreducible if self.n == 1 => Some((1, self.cap)),
            WVariant::Monic | WVariant::MonicUnit if self.n == 1 => Some((1, 1)),
            _ => Some((-self.cap, self.cap)),
        }
    }

    fn top_range(&self) -> (i64, i64) {
        match self.variant {
            WVariant::Any => (0, self.cap),
            WVariant::ExactIrreducible => (1, self.cap),
            WVariant::Monic | WVariant::MonicUnit => (1, 1),
        }
    }

    /// Outer tuples are `(c_2, ..., c_n)`.
    fn outer_count(&self) -> f64 {
        if self.n == 1 {
            return 1.0;
        }
        let (lo, hi) = self.top_range();
        (hi - lo + 1) as f64 * (2.0 * self.cap as f64 + 1.0).powi(self.n as i32 - 2)
    }

    fn inner(&self, outer: &[i64], frac: &FracIndex, top: &mut TopK) {
        let Some((lo1, hi1)) = self.c1_range(outer) else { return };
        let mut s = 0.0;
        let mut xp = self.x * self.x;
        for &c in outer {
            s += c as f64 * xp;
            xp *= self.x;
        }
        let make = |c0: i64, c1: i64| {
            let mut v = Vec::with_capacity(self.n + 1);
            v.push(c0);
            v.push(c1);
            v.extend_from_slice(outer);
            v
        };
        if self.variant == WVariant::MonicUnit {
            for sign in [1i64, -1] {
                let shift = s + sign as f64;
                if self.x == 0.0 {
                    for c1 in lo1..=hi1 {
                        top.push(shift.abs(), || make(sign, c1));
                    }
                    continue;
                }
                let centre = (-shift / self.x).round().clamp(lo1 as f64, hi1 as f64) as i64;
                for dir in [1i64, -1] {
                    let mut c1 = if dir == 1 { centre } else { centre - 1 };
                    while c1 >= lo1 && c1 <= hi1 {
                        let f = (c1 as f64 * self.x + shift).abs();
                        let before = (c1 as f64 - (-shift / self.x)) * dir as f64 >= 0.0;
                        if f > top.threshold() + self.err && before {
                            break;
                        }
                        top.push(f, || make(sign, c1));
                        c1 += dir;
                    }
                }
            }
            return;
        }
        let t = (-s).rem_euclid(1.0);
        let cap = self.cap as f64;
        frac.walk(t, |c1, d| {
            if d > top.threshold() + self.err {
                return false;
            }
            if c1 < lo1 || c1 > hi1 {
                return true;
            }
            let v = c1 as f64 * self.x + s;
            let c0 = -v.round();
            if c0.abs() > cap {
                return true;
            }
            top.push((v + c0).abs(), || make(c0 as i64, c1));
            true
        });
    }

    fn run_chunk(&self, top_coeff: i64, frac: &FracIndex, k: usize) -> TopK {
        let mut top = TopK::new(k);
        if self.n == 1 {
            self.inner(&[], frac, &mut top);
            return top;
        }
        let mid = self.n - 2;
        let mut outer = vec![-self.cap; mid];
        outer.push(top_coeff);
        loop {
            self.inner(&outer, frac, &mut top);
            let mut i = 0;
            while i < mid {
                if outer[i] < self.cap {
                    outer[i] += 1;
                    break;
                }
                outer[i] = -self.cap;
                i += 1;
            }
            if i == mid {
                break;
            }
        }
        top
    }
}

fn f64_gap(x: f64, a: &BigRational) -> f64 {
    let xr = BigRational::from_f64(x).unwrap_or_else(BigRational::zero);
    upper_f64(&(xr - a).abs())
}

struct Screened {
    list: Vec<Cand>,
    /// Lower bound on the screened value of every candidate not in `list`.
    floor: f64,
}

fn merge(tops: Vec<TopK>, k: usize) -> Screened {
    let mut floor = f64::INFINITY;
    let mut all = Vec::new();
    for t in tops {
        if t.pruned {
            floor = floor.min(t.threshold());
        }
        all.extend(t.heap.into_vec());
    }
    all.sort();
    if all.len() > k {
        floor = floor.min(all[k].f);
        all.truncate(k);
    }
    Screened { list: all, floor }
}

/// Minimum of the certified upper bound of `|P(xi)|` over the variant's
/// class of height at most `X`.
pub fn estimate_w(xi: &RationalWitness, n: u32, x_cap: u64, variant: WVariant) -> Result<ExponentEstimate> {
    if n < 1 {
        return Err(Error::OutOfRange("degree must be at least 1".into()));
    }
    if x_cap < 2 {
        return Err(Error::OutOfRange(format!("X = {x_cap} must be at least 2")));
    }
    let cap = i64::try_from(x_cap).map_err(|_| Error::OutOfRange("X too large".into()))?;
    let x = xi.approximant_f64();
    let nn = n as usize;
    let m = x.abs().max(1.0);
    let err = (nn as f64 + 2.0).powi(2)
        * x_cap as f64
        * m.powi(n as i32)
        * (8.0 * f64::EPSILON + f64_gap(x, &xi.approximant));
    let setup = WSetup { n: nn, x, cap, variant, err };
    let raw_size = (2.0 * x_cap as f64 + 1.0).powi(n as i32 + 1);
    let per_outer = if variant == WVariant::MonicUnit { 4.0 } else { (2.0 * x_cap as f64 + 1.0).log2().ceil() + 1.0 };
    let effective_size = setup.outer_count() * per_outer;
    if effective_size > BOX_LIMIT {
        return Err(Error::SearchBoxTooLarge { size: effective_size, limit: BOX_LIMIT });
    }
    let frac = FracIndex::new(x, if variant == WVariant::MonicUnit { 0 } else { cap });
    let (tlo, thi) = setup.top_range();
    let tops: Vec<i64> = if nn == 1 { vec![0] } else { (tlo..=thi).collect() };
    let mut k = INITIAL_K;
    loop {
        let chunks: Vec<TopK> = tops.par_iter().map(|&t| setup.run_chunk(t, &frac, k)).collect();
        let screened = merge(chunks, k);
        let outcome = certify_w(xi, variant, &screened, err)?;
        match outcome {
            Some((poly, iv, certified, zero_risk)) if certified || k >= MAX_K => {
                let hi = iv.hi_f64();
                return Ok(ExponentEstimate {
                    kind: match variant {
                        WVariant::Any => EstimateKind::W,
                        WVariant::ExactIrreducible => EstimateKind::WExact,
                        WVariant::Monic => EstimateKind::WInt,
                        WVariant::MonicUnit => EstimateKind::WUnit,
                    },
                    variant: Some(variant),
                    n,
                    x: x_cap,
                    value: -hi.ln() / (x_cap as f64).ln(),
                    witness: EstimateWitness::Polynomial(poly),
                    attained: iv,
                    indeterminate: zero_risk || !certified,
                    search: SearchBox { raw_size, effective_size, limit: BOX_LIMIT, k },
                    xi: xi.description.clone(),
                });
            }
            None if k >= MAX_K || screened.floor.is_infinite() => {
                return Err(Error::Indeterminate(format!(
                    "no candidate of the class has a value interval excluding zero (examined {})",
                    screened.list.len()
                )));
            }
            _ => k *= 2,
        }
    }
}

type Certified = Option<(IntPolynomial, RealInterval, bool, bool)>;

fn certify_w(xi: &RationalWitness, variant: WVariant, s: &Screened, err: f64) -> Result<Certified> {
    let mut best: Option<(IntPolynomial, RealInterval)> = None;
    let mut zero_hi: Option<BigRational> = None;
    for c in &s.list {
        let p = IntPolynomial::from_i64(&c.c);
        if p.is_constant() {
            continue;
        }
        if variant != WVariant::Any && !factor::is_irreducible(&p)? {
            continue;
        }
        let iv = evaluate_at_witness(&p, xi);
        if iv.hi.is_zero() {
            continue;
        }
        if iv.lo.is_zero() {
            if zero_hi.as_ref().map_or(true, |z| iv.hi < *z) {
                zero_hi = Some(iv.hi.clone());
            }
            continue;
        }
        let better = match &best {
            None => true,
            Some((bp, bi)) => iv.hi < bi.hi || (iv.hi == bi.hi && p < *bp),
        };
        if better {
            best = Some((p, iv));
        }
    }
    Ok(best.map(|(p, iv)| {
        let certified = iv.hi_f64() <= s.floor - err;
        let zero_risk = zero_hi.map_or(false, |z| z < iv.hi);
        (p, iv, certified, zero_risk)
    }))
}

/// `||v||` interval for `v` in `[c - e, c + e]`.
fn nearest_distance(c: &BigRational, e: &BigRational) -> (BigRational, BigRational) {
    let fl = c.floor();
    let fr = c - &fl;
    let one = BigRational::one();
    let d = if fr <= &one - &fr { fr.clone() } else { &one - &fr };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let lo = &d - e;
    let lo = if lo.is_negative() { BigRational::zero() } else { lo };
    let hi = &d + e;
    let hi = if hi > half { half } else { hi };
    (lo, hi)
}

fn lambda_interval(xi: &RationalWitness, n: u32, x: u64) -> RealInterval {
    let a = &xi.approximant;
    let xa = BigRational::from_integer(BigInt::from(x));
    let abs_a = a.abs();
    let mut lo_max = BigRational::zero();
    let mut hi_max = BigRational::zero();
    let mut pa = BigRational::one();
    let mut pb = BigRational::one();
    let wide = &abs_a + &xi.radius;
    for _ in 1..=n {
        pa *= a;
        pb *= &wide;
        // |xi^i - a^i| <= (|a| + r)^i - |a|^i.
        let e = &xa * (&pb - pa.abs());
        let (lo, hi) = nearest_distance(&(&xa * &pa), &e);
        if lo > lo_max {
            lo_max = lo;
        }
        if hi > hi_max {
            hi_max = hi;
        }
    }
    RealInterval { lo: lo_max, hi: hi_max }
}

/// Best `x` in `[1, X]` for `max_{i <= n} ||x xi^i||`.
pub fn estimate_lambda(xi: &RationalWitness, n: u32, x_cap: u64) -> Result<ExponentEstimate> {
    if n < 1 {
        return Err(Error::OutOfRange("degree must be at least 1".into()));
    }
    if !(2..=10_000_000).contains(&x_cap) {
        return Err(Error::OutOfRange(format!("X = {x_cap} must lie in [2, 10^7]")));
    }
    let xf = xi.approximant_f64();
    let m = xf.abs().max(1.0);
    let err = (n as f64 + 2.0).powi(2) * x_cap as f64 * m.powi(n as i32) * (8.0 * f64::EPSILON + f64_gap(xf, &xi.approximant));
    let pows: Vec<f64> = (1..=n as i32).map(|i| xf.powi(i)).collect();
    let screen = |x: u64| -> f64 {
        pows.iter()
            .map(|p| {
                let v = x as f64 * p;
                (v - v.round()).abs()
            })
            .fold(0.0, f64::max)
    };
    const CHUNK: u64 = 1 << 16;
    let starts: Vec<u64> = (0..x_cap.div_ceil(CHUNK)).map(|i| 1 + i * CHUNK).collect();
    let mut k = INITIAL_K;
    loop {
        let chunks: Vec<TopK> = starts
            .par_iter()
            .map(|&st| {
                let mut top = TopK::new(k);
                for x in st..(st + CHUNK).min(x_cap + 1) {
                    let f = screen(x);
                    top.push(f, || vec![x as i64]);
                }
                top
            })
            .collect();
        let s = merge(chunks, k);
        let mut best: Option<(u64, RealInterval)> = None;
        for c in &s.list {
            let x = c.c[0] as u64;
            let iv = lambda_interval(xi, n, x);
            let better = match &best {
                None => true,
                Some((bx, bi)) => iv.hi < bi.hi || (iv.hi == bi.hi && x < *bx),
            };
            if better {
                best = Some((x, iv));
            }
        }
        let (x, iv) = best.expect("X >= 1 candidate");
        let certified = iv.hi_f64() <= s.floor - err;
        if certified || k >= MAX_K {
            let hi = iv.hi_f64();
            return Ok(ExponentEstimate {
                kind: EstimateKind::Lambda,
                variant: None,
                n,
                x: x_cap,
                value: -hi.ln() / (x_cap as f64).ln(),
                witness: EstimateWitness::Integer(x),
                indeterminate: !certified || iv.lo.is_zero(),
                attained: iv,
                search: SearchBox { raw_size: x_cap as f64, effective_size: x_cap as f64, limit: BOX_LIMIT, k },
                xi: xi.description.clone(),
            });
        }
        k *= 2;
    }
}

/// Re-evaluates an estimate's witness; equals `value` for a consistent estimate.
pub fn reevaluate(est: &ExponentEstimate, xi: &RationalWitness) -> f64 {
    let hi = match &est.witness {
        EstimateWitness::Polynomial(p) => evaluate_at_witness(p, xi).hi_f64(),
        EstimateWitness::Integer(x) => lambda_interval(xi, est.n, *x).hi_f64(),
    };
    -hi.ln() / (est.x as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn closed_forms() {
        assert_eq!(wirsing_exact_bound(3).unwrap(), 2.5);
        assert!((wirsing_exact_bound(4).unwrap() - 3.1213).abs() < 5e-5);
        assert!((wirsing_exact_bound(7).unwrap() - 4.8423).abs() < 5e-5);
        assert!(wirsing_exact_bound(8).is_err() && wirsing_exact_bound(0).is_err());
        assert_eq!(uniform_exact_bound(3.0, 3).unwrap(), 2.0);
        for n in 1..=7u32 {
            assert_eq!(uniform_exact_bound(f64::from(n), n).unwrap(), f64::from(n) / 2.0 + 0.5);
        }
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((ds_bound(golden).unwrap() - (5f64.sqrt() + 1.0) / 2.0).abs() < 1e-15);
        assert_eq!(ds_bound(0.25).unwrap(), 4.0);
        assert_eq!(ds_bound(1.0).unwrap(), 1.0);
        assert_eq!(german_transfer(5.0, 5).unwrap(), 0.2);
        assert_eq!(german_transfer(3.7, 1).unwrap(), 1.0);
        assert_eq!(jm_bound(2.0).unwrap(), 2.0);
        assert!((pr_asymptotic_bound(4).unwrap() - (3.0 - std::f64::consts::LN_2 + 1.0 / 3.0)).abs() < 1e-12);
        assert!(pr_asymptotic_bound(3).is_err());
    }

    #[test]
    fn transfer_composition_is_left_branch() {
        for n in 1..=7u32 {
            for k in 0..20 {
                let w = f64::from(n) + 0.37 * f64::from(k);
                let lhs = ds_bound(german_transfer(w, n).unwrap()).unwrap();
                let rhs = w / (w - f64::from(n) + 1.0);
                assert!((lhs - rhs).abs() <= 1e-12 * rhs);
            }
        }
    }

    #[test]
    fn equilibrium_matches_closed_form() {
        for n in 1..=7u32 {
            let (w, b) = equilibrium(n).unwrap();
            assert!((b - wirsing_exact_bound(n).unwrap()).abs() < 1e-9, "n = {n}");
            let nf = f64::from(n);
            assert!((w / (w - nf + 1.0) - b).abs() < 1e-9);
        }
    }

    #[test]
    fn witnesses() {
        let w = liouville_witness(10, 3).unwrap();
        assert_eq!(w.approximant, BigRational::new(110_001.into(), 1_000_000.into()));
        assert_eq!(w.radius, BigRational::new(2.into(), num_traits::pow(BigInt::from(10), 24)));
        let w = liouville_witness(2, 4).unwrap();
        assert!(w.approximant.denom().is_one() || w.approximant.denom().bits() == 25);
        let g = cf_witness(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(g.approximant, BigRational::new(8.into(), 5.into()));
        assert!(parse_witness("cf:[0,2,3]").unwrap().approximant == BigRational::new(3.into(), 7.into()));
        assert!(parse_witness("liouville:10,3").is_ok());
        let r = parse_witness("1.5+-0.01").unwrap();
        assert_eq!(r.radius, BigRational::new(1.into(), 100.into()));
    }

    #[test]
    fn estimate_w_linear_cf() {
        // xi = [0; 1, 2, 1, 1, 3, 2, 5, 1, 4, ...]; at X = q_k the best linear form
        // is the convergent, with value about 1 + log(a_{k+1}) / log q_k.
        let terms = [0i64, 1, 2, 1, 1, 3, 2, 5, 1, 4, 2, 7, 1, 1, 2, 3, 1, 2, 1, 1, 2];
        let xi = cf_witness(&terms).unwrap();
        let mut p0 = BigInt::one();
        let mut p1 = BigInt::zero();
        let (mut q0, mut q1) = (BigInt::zero(), BigInt::one());
        for &a in &terms[1..8] {
            let p2 = BigInt::from(a) * &p1 + &p0;
            let q2 = BigInt::from(a) * &q1 + &q0;
            p0 = std::mem::replace(&mut p1, p2);
            q0 = std::mem::replace(&mut q1, q2);
        }
        let q = q1.to_u64().unwrap();
        let est = estimate_w(&xi, 1, q, WVariant::Any).unwrap();
        let expected = IntPolynomial::new(vec![-p1.clone(), q1.clone()]);
        assert_eq!(est.witness, EstimateWitness::Polynomial(expected));
        let predicted = 1.0 + (terms[8] as f64).ln() / (q as f64).ln();
        assert!((est.value - predicted).abs() < 0.35, "{} vs {predicted}", est.value);
        assert!(!est.indeterminate);
        assert!((reevaluate(&est, &xi) - est.value).abs() < 1e-12);
    }

    #[test]
    fn estimate_w_unit_class() {
        let xi = cf_witness(&[0, 2, 1, 3, 1, 1, 4, 2, 2, 1, 5, 1, 3]).unwrap();
        let est = estimate_w(&xi, 2, 50, WVariant::MonicUnit).unwrap();
        let EstimateWitness::Polynomial(p) = &est.witness else { panic!() };
        assert_eq!(p.deg(), 2);
        assert!(p.leading().unwrap().is_one());
        assert!(p.constant_term().abs().is_one());
        assert!(factor::is_irreducible(p).unwrap());
    }

    #[test]
    fn estimate_w_brute_force_agreement() {
        let xi = cf_witness(&[0, 1, 3, 2, 1, 4, 1, 1, 2, 6, 1, 2, 3]).unwrap();
        for variant in [WVariant::Any, WVariant::ExactIrreducible, WVariant::Monic, WVariant::MonicUnit] {
            let est = estimate_w(&xi, 2, 12, variant).unwrap();
            let mut best: Option<(BigRational, IntPolynomial)> = None;
            for c2 in -12i64..=12 {
                for c1 in -12i64..=12 {
                    for c0 in -12i64..=12 {
                        let p = IntPolynomial::from_i64(&[c0, c1, c2]);
                        if p.is_constant() || p.leading().unwrap().is_negative() {
                            continue;
                        }
                        let ok = match variant {
                            WVariant::Any => true,
                            WVariant::ExactIrreducible => p.deg() == 2 && factor::is_irreducible(&p).unwrap(),
                            WVariant::Monic => c2 == 1 && factor::is_irreducible(&p).unwrap(),
                            WVariant::MonicUnit => c2 == 1 && c0.abs() == 1 && factor::is_irreducible(&p).unwrap(),
                        };
                        if !ok {
                            continue;
                        }
                        let v = p.evaluate_rational(&xi.approximant).abs();
                        if v.is_zero() {
                            continue;
                        }
                        if best.as_ref().map_or(true, |(bv, bp)| v < *bv || (v == *bv && p < *bp)) {
                            best = Some((v, p));
                        }
                    }
                }
            }
            let (bv, bp) = best.unwrap();
            assert_eq!(est.attained.hi, bv, "{variant:?}");
            assert_eq!(est.witness, EstimateWitness::Polynomial(bp), "{variant:?}");
        }
    }

    #[test]
    fn exact_irreducible_skips_reducible_minimum() {
        // xi just above 1/3: 3T - 1 and its multiples dominate degree <= 2.
        let a = BigRational::new(1.into(), 3.into()) + BigRational::new(1.into(), num_traits::pow(BigInt::from(10), 12));
        let xi = RationalWitness::exact(a);
        let any = estimate_w(&xi, 2, 30, WVariant::Any).unwrap();
        let irr = estimate_w(&xi, 2, 30, WVariant::ExactIrreducible).unwrap();
        assert!(any.value > irr.value);
    }

    #[test]
    fn liouville_spike() {
        let xi = liouville_witness(10, 4).unwrap();
        let est = estimate_w(&xi, 1, 1_000_000, WVariant::Any).unwrap();
        assert!(est.value >= 3.0 - 1e-6, "{}", est.value);
    }

    #[test]
    fn lambda_on_fibonacci() {
        let xi = cf_witness(&[1; 60]).unwrap();
        let est = estimate_lambda(&xi, 1, 6765).unwrap();
        assert!((est.value - 1.0).abs() < 0.15, "{}", est.value);
        assert!(matches!(est.witness, EstimateWitness::Integer(x) if x == 6765 || x == 4181));
        assert!(!est.indeterminate);
        let tiny = estimate_lambda(&xi, 3, 2).unwrap();
        assert!(tiny.value >= 0.0);
    }

    #[test]
    fn box_guard() {
        let xi = cf_witness(&[0, 1, 2]).unwrap();
        assert!(matches!(estimate_w(&xi, 5, 1000, WVariant::Any), Err(Error::SearchBoxTooLarge { .. })));
    }
}
