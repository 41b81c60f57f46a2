//! Combination families `S_l = l T^(n-u) P + Q`, `R_l = T^(n-u) P + l Q` and
//! `M_(l1,l2) = l1 P + l2 Q` built from a coprime pair `(P, Q)`, their
//! reducibility censuses, the small-shift search for cubics, and the
//! families whose reducible members come in infinite arithmetic patterns.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{default_precision, proximity_check, ProximityKind, ProximityReport};
use crate::arith::{self, BoundInputs};
use crate::error::{Error, Result};
use crate::factor::{self, Factorization};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    S,
    R,
    M,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::S => "S",
            FamilyKind::R => "R",
            FamilyKind::M => "M",
        })
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(FamilyKind::S),
            "R" | "r" => Ok(FamilyKind::R),
            "M" | "m" => Ok(FamilyKind::M),
            _ => Err(Error::Parse(format!("unknown family kind {s:?} (expected S, R or M)"))),
        }
    }
}

/// A prime `l` for S/R, a coprime pair `l1 < l2` for M.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyIndex {
    Single(u64),
    Pair(u64, u64),
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyIndex::Single(l) => write!(f, "{l}"),
            FamilyIndex::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

pub const DEFAULT_PROXIMITY_EPS: f64 = 0.1;

/// Largest index range a census enumerates: `H^delta` for S and R, half its
/// square for M.
pub const CENSUS_INDEX_LIMIT: f64 = 1e7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub p: IntPolynomial,
    pub q: IntPolynomial,
    /// Target degree.
    pub n: usize,
    pub delta: f64,
    /// Height budget.
    pub h: u64,
    /// Enforce `deg P = n`, `P(0) = 0`, `deg Q < n` for kinds S and R.
    pub hypotheses: bool,
    /// Seed of the generator that produced `(P, Q)`, when random.
    pub seed: Option<u64>,
    /// `eps` of the root-gap condition attached to the report.
    pub proximity_eps: f64,
}

impl FamilySpec {
    /// Spec with target degree `deg P`, hypotheses enforced for S and R.
    pub fn new(kind: FamilyKind, p: IntPolynomial, q: IntPolynomial, h: u64, delta: f64) -> Result<Self> {
        let spec = Self {
            kind,
            n: p.deg(),
            p,
            q,
            delta,
            h,
            hypotheses: kind != FamilyKind::M,
            seed: None,
            proximity_eps: DEFAULT_PROXIMITY_EPS,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_hypotheses(mut self, on: bool) -> Result<Self> {
        self.hypotheses = on;
        self.validate()?;
        Ok(self)
    }

    pub fn with_degree(mut self, n: usize) -> Result<Self> {
        self.n = n;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p.is_zero() || self.q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !(self.delta > 0.0 && self.delta <= 1.0) {
            return Err(Error::OutOfRange(format!("delta = {} must lie in (0, 1]", self.delta)));
        }
        if self.p.deg() > self.n {
            return Err(Error::DegreeBound { bound: self.n, degree: self.p.deg() });
        }
        let hmax = self.p.height().max(self.q.height());
        if hmax > BigInt::from(self.h) {
            return Err(Error::OutOfRange(format!("height budget {} below max height {hmax}", self.h)));
        }
        if self.h < 2 {
            return Err(Error::OutOfRange("height budget must be at least 2".into()));
        }
        if !self.p.is_coprime(&self.q)? {
            return Err(Error::NotCoprime);
        }
        if self.hypotheses && self.kind != FamilyKind::M {
            let v = self.violations();
            if !v.is_empty() {
                return Err(Error::Hypothesis(v.join("; ")));
            }
        }
        Ok(())
    }

    /// Which of `deg P = n`, `P(0) = 0`, `deg Q < n` fail.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.p.deg() != self.n {
            v.push(format!("deg P = {} differs from n = {}", self.p.deg(), self.n));
        }
        if !self.p.constant_term().is_zero() {
            v.push("P(0) != 0".to_string());
        }
        if self.q.deg() >= self.n {
            v.push(format!("deg Q = {} is not below n = {}", self.q.deg(), self.n));
        }
        v
    }

    /// `floor(H^delta)`.
    pub fn index_limit(&self) -> u64 {
        ((self.h as f64).powf(self.delta) + 1e-9).floor() as u64
    }

    pub fn indices(&self) -> Vec<FamilyIndex> {
        let lim = self.index_limit();
        match self.kind {
            FamilyKind::S | FamilyKind::R => arith::primes_up_to(lim).into_iter().map(FamilyIndex::Single).collect(),
            FamilyKind::M => {
                let mut out = Vec::new();
                for b in 2..=lim {
                    for a in 1..b {
                        if a.gcd(&b) == 1 {
                            out.push(FamilyIndex::Pair(a, b));
                        }
                    }
                }
                out
            }
        }
    }

    pub fn in_range(&self, index: FamilyIndex) -> bool {
        let lim = self.index_limit();
        match (self.kind, index) {
            (FamilyKind::S | FamilyKind::R, FamilyIndex::Single(l)) => l >= 1 && l <= lim && arith::is_prime_u64(l),
            (FamilyKind::M, FamilyIndex::Pair(a, b)) => a >= 1 && a < b && b <= lim && a.gcd(&b) == 1,
            _ => false,
        }
    }

    /// Count budgets `Gamma`, `Gamma'` from `c_n = lc(P)`, `d_0 = Q(0)`.
    pub fn gamma_inputs(&self) -> BoundInputs {
        BoundInputs { cn: self.p.leading().cloned().unwrap_or_default(), d0: self.q.constant_term(), h: self.h as f64 }
    }
}

fn raw_member(spec: &FamilySpec, index: FamilyIndex) -> IntPolynomial {
    let tp = spec.p.shift(spec.n - spec.p.deg());
    match index {
        FamilyIndex::Single(l) => {
            let l = BigInt::from(l);
            match spec.kind {
                FamilyKind::S => &tp.scalar_mul(&l) + &spec.q,
                _ => &tp + &spec.q.scalar_mul(&l),
            }
        }
        FamilyIndex::Pair(a, b) => &spec.p.scalar_mul(&BigInt::from(a)) + &spec.q.scalar_mul(&BigInt::from(b)),
    }
}

pub fn build_member(spec: &FamilySpec, index: FamilyIndex) -> Result<IntPolynomial> {
    spec.validate()?;
    if !spec.in_range(index) {
        return Err(Error::OutOfRange(format!("index {index} outside the {} family range", spec.kind)));
    }
    Ok(raw_member(spec, index))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusRow {
    pub index: FamilyIndex,
    pub degree: usize,
    pub reducible: bool,
    pub factor_degrees: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReducibleMember {
    pub index: FamilyIndex,
    pub member: IntPolynomial,
    pub factorization: Factorization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioBasis {
    Gamma,
    GammaPrime,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub spec: FamilySpec,
    pub violations: Vec<String>,
    pub total_indices: usize,
    pub reducible_count: usize,
    pub rows: Vec<CensusRow>,
    pub reducible: Vec<ReducibleMember>,
    pub gamma: Option<f64>,
    pub gamma_prime: Option<f64>,
    pub ratio_basis: RatioBasis,
    pub ratio: Option<f64>,
    pub smallest_irreducible_index: Option<FamilyIndex>,
    /// Indices whose member has degree below `n`.
    pub degree_drops: Vec<FamilyIndex>,
    /// Root-gap condition for the kinds and degrees where one applies.
    pub proximity: Option<ProximityReport>,
}

impl CensusReport {
    pub fn irreducible_count(&self) -> usize {
        self.total_indices - self.reducible_count
    }
}

fn classify(member: &IntPolynomial) -> Result<(bool, Factorization)> {
    let fac = factor::factor(member)?;
    let reducible = fac.factors.len() > 1 || fac.factors.iter().any(|f| f.mult > 1);
    Ok((reducible, fac))
}

/// Census without the root-gap check.
pub fn census_members(spec: &FamilySpec) -> Result<CensusReport> {
    spec.validate()?;
    let lim = spec.index_limit() as f64;
    let size = if spec.kind == FamilyKind::M { lim * lim / 2.0 } else { lim };
    if size > CENSUS_INDEX_LIMIT {
        return Err(Error::SearchBoxTooLarge { size, limit: CENSUS_INDEX_LIMIT });
    }
    let indices = spec.indices();
    let results: Vec<Result<(CensusRow, Option<ReducibleMember>)>> = indices
        .par_iter()
        .map(|&index| {
            let member = raw_member(spec, index);
            let (reducible, fac) = if member.is_constant() {
                (false, factor::factor(&member)?)
            } else {
                classify(&member)?
            };
            let row = CensusRow { index, degree: member.deg(), reducible, factor_degrees: fac.degrees() };
            let red = reducible.then(|| ReducibleMember { index, member, factorization: fac });
            Ok((row, red))
        })
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut reducible = Vec::new();
    for r in results {
        let (row, red) = r?;
        rows.push(row);
        reducible.extend(red);
    }
    let bounds = arith::gamma_bounds(&spec.gamma_inputs()).ok();
    let gamma = bounds.map(|b| b.gamma);
    let gamma_prime = bounds.and_then(|b| b.gamma_prime);
    let ratio_basis = if spec.kind != FamilyKind::M && spec.n <= 3 { RatioBasis::GammaPrime } else { RatioBasis::Gamma };
    let denom = match ratio_basis {
        RatioBasis::Gamma => gamma,
        RatioBasis::GammaPrime => gamma_prime,
    };
    let ratio = denom.map(|d| reducible.len() as f64 / d);
    let smallest_irreducible_index = rows.iter().find(|r| !r.reducible && r.degree >= 1).map(|r| r.index);
    let degree_drops = rows.iter().filter(|r| r.degree < spec.n).map(|r| r.index).collect();
    Ok(CensusReport {
        spec: spec.clone(),
        violations: spec.violations(),
        total_indices: rows.len(),
        reducible_count: reducible.len(),
        rows,
        reducible,
        gamma,
        gamma_prime,
        ratio_basis,
        ratio,
        smallest_irreducible_index,
        degree_drops,
        proximity: None,
    })
}

/// Full census: every member classified, budgets and the root-gap flag
/// (kappa for S/R with `n >= 4`, theta for M) attached.
pub fn census(spec: &FamilySpec) -> Result<CensusReport> {
    let mut report = census_members(spec)?;
    let kind = match spec.kind {
        FamilyKind::M if spec.n >= 2 => Some(ProximityKind::Theta),
        FamilyKind::S | FamilyKind::R if spec.n >= 4 => Some(ProximityKind::Kappa),
        _ => None,
    };
    if let Some(kind) = kind {
        if !spec.p.is_constant() && !spec.q.is_constant() {
            report.proximity =
                Some(proximity_check(&spec.p, &spec.q, spec.n, kind, spec.proximity_eps, default_precision())?);
        }
    }
    Ok(report)
}

/// Linear factors `q T - p` a member of an S family can have: `p` divides the
/// lowest nonzero coefficient and `q > 0` divides the leading coefficient.
///
/// Needs `P(0) = 0`, so that the constant coefficient of the member is `Q(0)`
/// for every index; `deg Q < n` is not needed.
pub fn linear_factor_divisibility_filter(spec: &FamilySpec, index: FamilyIndex) -> Result<Vec<IntPolynomial>> {
    if spec.kind != FamilyKind::S {
        return Err(Error::Hypothesis("the divisibility filter applies to S families".into()));
    }
    if !spec.p.constant_term().is_zero() {
        return Err(Error::Hypothesis("the divisibility filter needs P(0) = 0".into()));
    }
    let member = build_member(spec, index)?;
    if member.is_constant() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let zeros = member.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        out.push(IntPolynomial::from_i64(&[0, 1]));
    }
    let low = member.coeffs()[zeros].clone();
    let lead = member.leading().cloned().unwrap_or_default();
    let ps = arith::divisors(&low)?;
    let qs = arith::divisors(&lead)?;
    for &q in &qs {
        for &p in &ps {
            if q.gcd(&p) != 1 {
                continue;
            }
            for sp in [BigInt::from(p), -BigInt::from(p)] {
                out.push(IntPolynomial::linear(BigInt::from(q), sp));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SzegedyShift {
    pub b: i64,
    pub shifted: IntPolynomial,
    /// Factorization of `P + b` with a single irreducible factor.
    pub certificate: Factorization,
    /// `tau(c3) (log max(H(P), 3))^2`.
    pub budget: f64,
    /// `|b| / budget`.
    pub ratio: f64,
    pub scanned: u64,
}

pub const SZEGEDY_SCAN_CAP: u64 = 1_000_000;

/// Smallest `|b|` (positive first on ties) with `P + b` irreducible.
pub fn szegedy_shift(p: &IntPolynomial) -> Result<SzegedyShift> {
    if p.degree() != Some(3) {
        return Err(Error::Hypothesis(format!("expected a cubic, got degree {:?}", p.degree())));
    }
    let c3 = p.leading().cloned().unwrap_or_default();
    let h = p.height_f64().max(3.0);
    let budget = arith::tau(&c3)? as f64 * h.ln().powi(2);
    let mut scanned = 0u64;
    let mut k = 0i64;
    while scanned < SZEGEDY_SCAN_CAP {
        let candidates: &[i64] = if k == 0 { &[0] } else { &[k, -k] };
        for &b in candidates {
            scanned += 1;
            let shifted = p + &IntPolynomial::constant(BigInt::from(b));
            if factor::is_irreducible(&shifted)? {
                let certificate = factor::factor(&shifted)?;
                return Ok(SzegedyShift { b, shifted, certificate, budget, ratio: b.unsigned_abs() as f64 / budget, scanned });
            }
        }
        k += 1;
    }
    Err(Error::ScanCapExceeded(SZEGEDY_SCAN_CAP))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Counterexample {
    /// `P = T^2`, `Q = -T^2 - 1`: `S_l = N^2 T^2 - 1` for `l = N^2 + 1`.
    #[serde(rename = "S_quadratic")]
    SQuadratic,
    /// `P = T^2 + 1`, `Q = -1`: `R_l = T^2 - N^2` for `l = N^2 + 1`.
    #[serde(rename = "R_shift")]
    RShift,
    /// `P = T^n`, `Q = -1`: `M_(a^n, b^n) = a^n T^n - b^n`.
    #[serde(rename = "M_powers")]
    MPowers,
}

impl std::str::FromStr for Counterexample {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S_quadratic" => Ok(Counterexample::SQuadratic),
            "R_shift" => Ok(Counterexample::RShift),
            "M_powers" => Ok(Counterexample::MPowers),
            _ => Err(Error::Parse(format!("unknown counterexample family {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleFamily {
    pub which: Counterexample,
    pub spec: FamilySpec,
    /// In-range indices whose members are reducible by construction.
    pub predicted: Vec<FamilyIndex>,
}

/// Prime `N^2 + 1`, if it is one.
pub fn square_plus_one_prime(n: u64) -> Option<u64> {
    let l = n.checked_mul(n)?.checked_add(1)?;
    arith::is_prime_u64(l).then_some(l)
}

/// `(a^n, b^n)` for coprime `1 <= a < b`.
pub fn power_pair(a: u64, b: u64, n: u32) -> Option<FamilyIndex> {
    (a >= 1 && a < b && a.gcd(&b) == 1).then(|| Some(FamilyIndex::Pair(a.checked_pow(n)?, b.checked_pow(n)?))).flatten()
}

/// The named family (hypotheses not enforced) and its predicted reducible
/// indices up to `H^delta`. `n` is used by `M_powers` only.
pub fn counterexample_family(which: Counterexample, h: u64, delta: f64, n: usize) -> Result<CounterexampleFamily> {
    let p = |c: &[i64]| IntPolynomial::from_i64(c);
    let (kind, pp, qq) = match which {
        Counterexample::SQuadratic => (FamilyKind::S, p(&[0, 0, 1]), p(&[-1, 0, -1])),
        Counterexample::RShift => (FamilyKind::R, p(&[1, 0, 1]), p(&[-1])),
        Counterexample::MPowers => {
            if n < 2 {
                return Err(Error::OutOfRange(format!("M_powers needs n >= 2, got {n}")));
            }
            (FamilyKind::M, IntPolynomial::monomial(BigInt::from(1), n), p(&[-1]))
        }
    };
    let spec = FamilySpec {
        kind,
        n: pp.deg(),
        p: pp,
        q: qq,
        delta,
        h,
        hypotheses: false,
        seed: None,
        proximity_eps: DEFAULT_PROXIMITY_EPS,
    };
    spec.validate()?;
    let lim = spec.index_limit();
    let mut predicted = Vec::new();
    match which {
        Counterexample::SQuadratic | Counterexample::RShift => {
            let mut k = 1u64;
            while k * k + 1 <= lim {
                if let Some(l) = square_plus_one_prime(k) {
                    predicted.push(FamilyIndex::Single(l));
                }
                k += 1;
            }
        }
        Counterexample::MPowers => {
            let mut b = 2u64;
            while b.checked_pow(n as u32).map_or(false, |v| v <= lim) {
                for a in 1..b {
                    if let Some(ix) = power_pair(a, b, n as u32) {
                        predicted.push(ix);
                    }
                }
                b += 1;
            }
            predicted.sort();
        }
    }
    Ok(CounterexampleFamily { which, spec, predicted })
}

/// All members at `indices` pairwise coprime. For M, proportional index pairs
/// are refused.
pub fn pairwise_coprime_check(spec: &FamilySpec, indices: &[FamilyIndex]) -> Result<bool> {
    if spec.kind == FamilyKind::M {
        for (i, a) in indices.iter().enumerate() {
            for b in &indices[i + 1..] {
                if let (FamilyIndex::Pair(a1, a2), FamilyIndex::Pair(b1, b2)) = (a, b) {
                    if u128::from(*a1) * u128::from(*b2) == u128::from(*a2) * u128::from(*b1) {
                        return Err(Error::Hypothesis(format!("index pairs {a} and {b} are proportional")));
                    }
                }
            }
        }
    }
    let members: Vec<IntPolynomial> =
        indices.iter().map(|&ix| build_member(spec, ix)).collect::<Result<_>>()?;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if !members[i].is_coprime(&members[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Random coprime `(P, Q)` with `deg P = n`, `P(0) = 0`, `deg Q < n`,
/// `Q(0) != 0` and coefficients uniform in `[-H, H]`.
pub fn random_pair<R: Rng>(rng: &mut R, n: usize, h: u64) -> (IntPolynomial, IntPolynomial) {
    let h = h as i64;
    loop {
        let mut pc: Vec<i64> = (0..=n).map(|_| rng.gen_range(-h..=h)).collect();
        pc[0] = 0;
        let mut qc: Vec<i64> = (0..n).map(|_| rng.gen_range(-h..=h)).collect();
        if pc[n] == 0 || qc[0] == 0 {
            continue;
        }
        if qc.iter().all(|&c| c == 0) {
            qc[0] = 1;
        }
        let p = IntPolynomial::from_i64(&pc);
        let q = IntPolynomial::from_i64(&qc);
        if p.is_coprime(&q).unwrap_or(false) {
            return (p, q);
        }
    }
}

/// Seeded random S-family spec satisfying the hypotheses.
pub fn random_spec(kind: FamilyKind, n: usize, h: u64, delta: f64, seed: u64) -> Result<FamilySpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, q) = random_pair(&mut rng, n, h);
    let mut spec = FamilySpec::new(kind, p, q, h, delta)?;
    spec.seed = Some(seed);
    Ok(spec)
}

/// Random cubic with `c3 != 0` and coefficients in `[-H, H]`.
pub fn random_cubic<R: Rng>(rng: &mut R, h: u64) -> IntPolynomial {
    let h = h as i64;
    loop {
        let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-h..=h)).collect();
        if c[3] != 0 {
            return IntPolynomial::from_i64(&c);
        }
    }
}

/// Coprime pair sharing a near-root close to `1/a`:
/// `P = T (T^(n-1) - 2a T + 2)`, `Q = T^(n-1) - a T + 1`, with `H = 2a`.
///
/// `P - 2TQ = -T^n` and `Q(0) = 1`, so the pair is coprime; the roots near
/// `1/a` differ by about `a^(-n) / 2`.
pub fn near_root_pair(n: usize, a: u64) -> Result<(IntPolynomial, IntPolynomial)> {
    if n < 3 || a < 2 {
        return Err(Error::OutOfRange(format!("near-root pair needs n >= 3 and a >= 2, got n = {n}, a = {a}")));
    }
    let a = a.to_i64().ok_or_else(|| Error::OutOfRange("a too large".into()))?;
    let mut inner = vec![0i64; n];
    inner[0] = 2;
    inner[1] = -2 * a;
    inner[n - 1] += 1;
    let p = IntPolynomial::from_i64(&inner).shift(1);
    let mut qc = vec![0i64; n];
    qc[0] = 1;
    qc[1] = -a;
    qc[n - 1] += 1;
    let q = IntPolynomial::from_i64(&qc);
    if !p.is_coprime(&q)? {
        return Err(Error::NotCoprime);
    }
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn member_examples() {
        let fam = counterexample_family(Counterexample::SQuadratic, 10_000, 0.5, 2).unwrap();
        assert_eq!(build_member(&fam.spec, FamilyIndex::Single(5)).unwrap(), p(&[-1, 0, 4]));
        let m = FamilySpec::new(FamilyKind::M, p(&[0, 0, 1]), p(&[-1]), 100, 1.0).unwrap();
        assert_eq!(build_member(&m, FamilyIndex::Pair(4, 9)).unwrap(), p(&[-9, 0, 4]));
        let r = FamilySpec::new(FamilyKind::R, p(&[0, 1, 1]), p(&[1]), 100, 0.5).unwrap();
        assert!(matches!(build_member(&r, FamilyIndex::Single(0)), Err(Error::OutOfRange(_))));
        assert!(matches!(build_member(&r, FamilyIndex::Single(4)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn s_height_bound() {
        let spec = FamilySpec::new(FamilyKind::S, p(&[0, -7, 3, 9]), p(&[5, -2]), 100, 0.5).unwrap();
        for ix in spec.indices() {
            let m = build_member(&spec, ix).unwrap();
            let FamilyIndex::Single(l) = ix else { unreachable!() };
            let bound = l as f64 * spec.p.height_f64() + spec.q.height_f64();
            assert!(m.height_f64() <= bound);
            assert!(m.height_f64() <= 2.0 * (spec.h as f64).powf(1.0 + spec.delta));
        }
    }

    #[test]
    fn coprimality_is_checked_first() {
        let err = FamilySpec::new(FamilyKind::S, p(&[0, 1, 1]), p(&[0, 2]), 100, 0.5);
        assert!(matches!(err, Err(Error::NotCoprime)));
    }

    #[test]
    fn cube_plus_one_census() {
        // l T^3 + 1 is reducible exactly when l is a cube, never for primes.
        let spec = FamilySpec::new(FamilyKind::S, p(&[0, 0, 0, 1]), p(&[1]), 10_000, 0.5).unwrap();
        let rep = census(&spec).unwrap();
        assert_eq!(rep.total_indices, 25);
        assert_eq!(rep.reducible_count, 0);
        assert_eq!(rep.smallest_irreducible_index, Some(FamilyIndex::Single(2)));
        assert!(rep.proximity.is_none());
        assert_eq!(rep.ratio_basis, RatioBasis::GammaPrime);
    }

    #[test]
    fn counterexample_predictions_are_reducible() {
        let fam = counterexample_family(Counterexample::SQuadratic, 1_000_000, 0.5, 2).unwrap();
        assert!(fam.predicted.contains(&FamilyIndex::Single(17)));
        let rep = census(&fam.spec).unwrap();
        for ix in &fam.predicted {
            assert!(rep.reducible.iter().any(|r| r.index == *ix));
        }
        assert_eq!(build_member(&fam.spec, FamilyIndex::Single(17)).unwrap(), p(&[-1, 0, 16]));

        let fam = counterexample_family(Counterexample::RShift, 1_000_000, 0.5, 2).unwrap();
        for ix in &fam.predicted {
            let FamilyIndex::Single(l) = *ix else { unreachable!() };
            let m = build_member(&fam.spec, *ix).unwrap();
            let nn = ((l - 1) as f64).sqrt() as i64;
            assert_eq!(m, p(&[-nn * nn, 0, 1]));
            assert!(!factor::is_irreducible(&m).unwrap());
        }

        let fam = counterexample_family(Counterexample::MPowers, 100, 1.0, 2).unwrap();
        assert!(fam.predicted.contains(&FamilyIndex::Pair(4, 9)));
        for ix in &fam.predicted {
            assert!(!factor::is_irreducible(&build_member(&fam.spec, *ix).unwrap()).unwrap());
        }
    }

    #[test]
    fn divisibility_filter_examples() {
        let fam = counterexample_family(Counterexample::SQuadratic, 10_000, 0.5, 2).unwrap();
        let cands = linear_factor_divisibility_filter(&fam.spec, FamilyIndex::Single(5)).unwrap();
        for c in &cands {
            assert!(c.constant_term().abs() == BigInt::from(1));
        }
        for lf in factor::linear_factors(&p(&[-1, 0, 4])).unwrap() {
            assert!(cands.contains(&lf));
        }
        // Q(0) prime: at most 4 tau(lead) candidates.
        let spec = FamilySpec::new(FamilyKind::S, p(&[0, 3, 0, 2]), p(&[7, 1]), 100, 0.5).unwrap();
        let cands = linear_factor_divisibility_filter(&spec, FamilyIndex::Single(3)).unwrap();
        assert!(cands.len() as u64 <= 4 * arith::tau(&BigInt::from(6)).unwrap());
        let r = FamilySpec::new(FamilyKind::R, p(&[0, 1, 1]), p(&[1]), 100, 0.5).unwrap();
        assert!(linear_factor_divisibility_filter(&r, FamilyIndex::Single(2)).is_err());
    }

    #[test]
    fn szegedy_examples() {
        let s = szegedy_shift(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(s.b, 2);
        assert!(s.certificate.is_irreducible());
        assert_eq!(szegedy_shift(&p(&[2, 0, 0, 1])).unwrap().b, 0);
        assert_eq!(szegedy_shift(&p(&[0, -1, 0, 1])).unwrap().b, 1);
        assert!(szegedy_shift(&p(&[0, 1])).is_err());
    }

    #[test]
    fn pairwise_coprime_examples() {
        let spec = FamilySpec::new(FamilyKind::S, p(&[0, 2, 1]), p(&[3]), 1000, 0.5).unwrap();
        let ix: Vec<_> = spec.indices();
        assert!(pairwise_coprime_check(&spec, &ix).unwrap());
        for i in &ix {
            assert!(build_member(&spec, *i).unwrap().is_coprime(&spec.p).unwrap());
        }
        let m = FamilySpec::new(FamilyKind::M, p(&[0, 0, 1]), p(&[-1]), 100, 1.0).unwrap();
        assert!(pairwise_coprime_check(&m, &[FamilyIndex::Pair(1, 2), FamilyIndex::Pair(2, 3)]).is_ok());
    }

    #[test]
    fn degree_drops_at_most_once() {
        // deg Q = n is allowed without hypotheses; l = 2 cancels the top.
        let spec = FamilySpec::new(FamilyKind::M, p(&[0, 1, 1]), p(&[3, 0, -2]), 100, 1.0).unwrap();
        let s = FamilySpec { kind: FamilyKind::S, ..spec };
        let rep = census_members(&s).unwrap();
        assert_eq!(rep.degree_drops, vec![FamilyIndex::Single(2)]);
    }

    #[test]
    fn near_root_pair_is_close() {
        let (pp, qq) = near_root_pair(4, 100).unwrap();
        assert_eq!(pp.constant_term(), BigInt::zero());
        assert_eq!(pp.deg(), 4);
        assert_eq!(qq.deg(), 3);
        let gap = crate::analytic::min_root_gap(&pp, &qq, 128).unwrap();
        assert!(gap.hi < 1e-8 && gap.lo > 1e-9);
    }

    #[test]
    fn random_pairs_meet_hypotheses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (pp, qq) = random_pair(&mut rng, 3, 100);
            assert_eq!(pp.deg(), 3);
            assert!(pp.constant_term().is_zero());
            assert!(qq.deg() < 3 && !qq.constant_term().is_zero());
            assert!(pp.is_coprime(&qq).unwrap());
        }
    }
}
