//! Certified numerics: witnesses, value intervals, root disks, root-proximity
//! thresholds and the root-to-value inequalities checked against them.

mod roots;
mod witness;

pub use roots::{default_precision, min_root_gap, roots, RootDisk, RootGap, RootSet, DEFAULT_PRECISION, PRECISION_ENV};
pub use witness::{evaluate_at_witness, parse_rational, RationalWitness, RealInterval, Verdict};
pub(crate) use witness::{lower_f64, upper_f64};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Relative slack applied to `f64` comparisons built from rounded products.
const FLOAT_SLACK: f64 = 1e-12;

/// Root-proximity exponents: `kappa = 2n - 6` (defined for `n >= 4`) and
/// `theta = 1` for `n = 2`, `2n - 4` for `n >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProximityThresholds {
    pub n: usize,
    pub kappa: Option<f64>,
    pub theta: f64,
}

impl ProximityThresholds {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("proximity thresholds need degree >= 2, got {n}")));
        }
        let kappa = (n >= 4).then(|| 2.0 * n as f64 - 6.0);
        let theta = if n == 2 { 1.0 } else { 2.0 * n as f64 - 4.0 };
        Ok(Self { n, kappa, theta })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProximityKind {
    Kappa,
    Theta,
}

/// Outcome of `min |alpha - beta| <= H^(-exponent - eps)`.
#[derive(Clone, Debug, Serialize)]
pub struct ProximityReport {
    pub kind: ProximityKind,
    pub exponent: f64,
    pub eps: f64,
    pub height: f64,
    pub threshold: f64,
    pub gap: RootGap,
    pub verdict: Verdict,
}

/// Checks the root-gap condition for `(p, q)` with `H = max` of the heights.
pub fn proximity_check(
    p: &IntPolynomial,
    q: &IntPolynomial,
    n: usize,
    kind: ProximityKind,
    eps: f64,
    precision: u32,
) -> Result<ProximityReport> {
    let th = ProximityThresholds::new(n)?;
    let exponent = match kind {
        ProximityKind::Kappa => th
            .kappa
            .ok_or_else(|| Error::OutOfRange(format!("kappa threshold undefined for degree {n} < 4")))?,
        ProximityKind::Theta => th.theta,
    };
    let height = p.height_f64().max(q.height_f64());
    let threshold = height.powf(-exponent - eps);
    let gap = min_root_gap(p, q, precision)?;
    let verdict = gap_verdict(&gap, threshold);
    Ok(ProximityReport { kind, exponent, eps, height, threshold, gap, verdict })
}

fn gap_verdict(gap: &RootGap, threshold: f64) -> Verdict {
    if gap.hi <= threshold * (1.0 - FLOAT_SLACK) {
        Verdict::True
    } else if gap.lo > threshold * (1.0 + FLOAT_SLACK) {
        Verdict::False
    } else {
        Verdict::Indeterminate
    }
}

/// `|p(xi)| <= n(n+1) max(1, (|xi|+1)^n) H(p) |xi - alpha|`.
pub fn verify_pop(p: &IntPolynomial, alpha: &RootDisk, xi: &RationalWitness) -> Verdict {
    let n = p.deg() as f64;
    let value = evaluate_at_witness(p, xi);
    let r = xi.radius_f64_upper();
    let a = xi.approximant.abs();
    let a_lo = lower_f64(&a);
    let a_hi = upper_f64(&a);
    // |xi - alpha| from the exact center offset, widened by both radii.
    let dre = &xi.approximant - alpha.re_rational();
    let dim = alpha.im_rational();
    let sq = &dre * &dre + &dim * &dim;
    let d_lo = (lower_f64(&sq).sqrt() - r - alpha.radius).max(0.0);
    let d_hi = upper_f64(&sq).sqrt() + r + alpha.radius;
    let h = p.height_f64();
    let pow = |x: f64| (x + 1.0).powf(n).max(1.0);
    let rhs_lo = n * (n + 1.0) * pow((a_lo - r).max(0.0)) * h * d_lo * (1.0 - FLOAT_SLACK);
    let rhs_hi = n * (n + 1.0) * pow(a_hi + r) * h * d_hi * (1.0 + FLOAT_SLACK);
    if value.hi_f64() <= rhs_lo {
        Verdict::True
    } else if value.lo_f64() > rhs_hi {
        Verdict::False
    } else {
        Verdict::Indeterminate
    }
}

/// `xi = (Re alpha + Re beta) / 2`; the radius is half the sum of the disk
/// radii plus half the summed imaginary magnitudes.
pub fn midpoint_witness(alpha: &RootDisk, beta: &RootDisk) -> Result<RationalWitness> {
    let two = BigRational::from_integer(BigInt::from(2));
    let centre = (alpha.re_rational() + beta.re_rational()) / &two;
    let imag = alpha.im_rational().abs() + beta.im_rational().abs();
    let disks = BigRational::from_f64(alpha.radius + beta.radius)
        .ok_or_else(|| Error::OutOfRange("non-finite root disk radius".into()))?;
    let radius = (disks + imag) / two;
    let desc = format!("midpoint of roots {:.6e}{:+.6e}i and {:.6e}{:+.6e}i", alpha.re_f64(), alpha.im_f64(), beta.re_f64(), beta.im_f64());
    RationalWitness::new(centre, radius, desc)
}

#[derive(Clone, Debug, Serialize)]
pub struct LiouvilleFloor {
    pub max_lo: f64,
    pub max_hi: f64,
    pub threshold: f64,
    pub verdict: Verdict,
}

/// `max_i |U_i(xi)| >= c H^(-d1-d2+1)` with `H` the larger height.
pub fn liouville_floor(u1: &IntPolynomial, u2: &IntPolynomial, xi: &RationalWitness, c: f64) -> Result<LiouvilleFloor> {
    if u1.is_constant() || u2.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !u1.is_coprime(u2)? {
        return Err(Error::NotCoprime);
    }
    let (d1, d2) = (u1.deg() as f64, u2.deg() as f64);
    let h = u1.height_f64().max(u2.height_f64());
    let threshold = c * h.powf(-d1 - d2 + 1.0);
    let v1 = evaluate_at_witness(u1, xi);
    let v2 = evaluate_at_witness(u2, xi);
    let max_lo = v1.lo_f64().max(v2.lo_f64());
    let max_hi = v1.hi_f64().max(v2.hi_f64());
    let verdict = if max_lo >= threshold * (1.0 + FLOAT_SLACK) {
        Verdict::True
    } else if max_hi < threshold * (1.0 - FLOAT_SLACK) {
        Verdict::False
    } else {
        Verdict::Indeterminate
    };
    Ok(LiouvilleFloor { max_lo, max_hi, threshold, verdict })
}

/// Pairwise coprime polynomials small at a witness.
#[derive(Clone, Debug, Serialize)]
pub struct CoprimeCensus {
    pub degree: usize,
    pub mu: f64,
    pub height: u64,
    /// Candidates whose value interval was tested exactly.
    pub examined: u64,
    /// Candidates straddling the threshold, left out of the family.
    pub indeterminate: u64,
    pub members: Vec<IntPolynomial>,
}

impl CoprimeCensus {
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// Maximum number of outer coefficient tuples examined by the census.
pub const CENSUS_BOX_LIMIT: f64 = 1e8;

/// Non-constant `Q` with `deg Q <= d`, `H(Q) <= H` and `|Q(xi)| <= H(Q)^-mu`,
/// greedily thinned to a pairwise coprime family by increasing height.
///
/// The threshold never exceeds one and bounds `|Q(a)|` at the approximant
/// `a`, so the constant coefficient lies within one of
/// `-sum_{i>=1} c_i a^i`: at most three values per outer tuple.
pub fn small_coprime_census(xi: &RationalWitness, d: usize, mu: f64, h: u64) -> Result<CoprimeCensus> {
    if d == 0 {
        return Err(Error::OutOfRange("census degree must be at least 1".into()));
    }
    if !(mu > 2.0 * d as f64 - 1.0) {
        return Err(Error::Hypothesis(format!("mu = {mu} must exceed 2d - 1 = {}", 2 * d - 1)));
    }
    let side = 2.0 * h as f64 + 1.0;
    let size = side.powi(d as i32 - 1) * h as f64 * 3.0;
    if size > CENSUS_BOX_LIMIT {
        return Err(Error::SearchBoxTooLarge { size, limit: CENSUS_BOX_LIMIT });
    }
    let x = xi.approximant_f64();
    let hi = h as i64;
    let mut hits: Vec<IntPolynomial> = Vec::new();
    let mut examined = 0u64;
    let mut indeterminate = 0u64;
    // Outer tuples (c_1..c_d) with the top nonzero coefficient positive.
    let mut outer = vec![-hi; d];
    loop {
        let top = outer.iter().rposition(|&c| c != 0);
        if top.map_or(false, |t| outer[t] > 0) {
            let s: f64 = outer.iter().enumerate().map(|(i, &c)| c as f64 * x.powi(i as i32 + 1)).sum();
            let spread = 1.0 + 1e-9 * s.abs().max(1.0);
            let lo = (-s - spread).floor().max(-(hi as f64)) as i64;
            let up = (-s + spread).ceil().min(hi as f64) as i64;
            for c in lo..=up {
                let mut coeffs = vec![c];
                coeffs.extend_from_slice(&outer);
                let q = IntPolynomial::from_i64(&coeffs);
                let hq = q.height_f64();
                let fast = q.evaluate_f64(x).abs();
                let thr = hq.powf(-mu);
                if fast > 2.0 * thr + 1e-9 * (1.0 + hq * side) {
                    continue;
                }
                examined += 1;
                let iv = evaluate_at_witness(&q, xi);
                match Verdict::le(iv.lo_f64(), iv.hi_f64(), thr) {
                    Verdict::True => hits.push(q),
                    Verdict::Indeterminate => indeterminate += 1,
                    Verdict::False => {}
                }
            }
        }
        // Odometer over [-h, h]^d.
        let mut i = 0;
        while i < d {
            if outer[i] < hi {
                outer[i] += 1;
                break;
            }
            outer[i] = -hi;
            i += 1;
        }
        if i == d {
            break;
        }
    }
    hits.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    let mut members: Vec<IntPolynomial> = Vec::new();
    for q in hits {
        if members.iter().all(|m| m.is_coprime(&q).unwrap_or(false)) {
            members.push(q);
        }
    }
    Ok(CoprimeCensus { degree: d, mu, height: h, examined, indeterminate, members })
}

#[derive(Clone, Debug, Serialize)]
pub struct WbsReport {
    /// 1 or 2: which polynomial carries the closest root.
    pub polynomial: usize,
    pub root: RootDisk,
    /// Upper bound on `|xi - alpha|`.
    pub distance: f64,
    /// `-log|xi - alpha| / log H(P_i) - 1`, from the distance upper bound.
    pub achieved: f64,
    /// `(3/2) eta - n + 1/2`.
    pub target: f64,
}

/// Closest root to `xi` among the roots of `p1` and `p2`.
pub fn wbs_root_report(
    p1: &IntPolynomial,
    p2: &IntPolynomial,
    xi: &RationalWitness,
    eta: f64,
    precision: u32,
) -> Result<WbsReport> {
    if !p1.is_coprime(p2)? {
        return Err(Error::NotCoprime);
    }
    let n = p1.deg().max(p2.deg());
    let h = p1.height_f64().max(p2.height_f64());
    let bound = h.powf(-eta);
    for (i, p) in [p1, p2].into_iter().enumerate() {
        let v = evaluate_at_witness(p, xi);
        if !(v.hi_f64() <= bound) {
            return Err(Error::Hypothesis(format!(
                "|P_{}(xi)| <= {:e} not certified (upper bound {:e})",
                i + 1,
                bound,
                v.hi_f64()
            )));
        }
    }
    let r = xi.radius_f64_upper();
    let mut best: Option<(usize, RootDisk, f64)> = None;
    for (i, p) in [p1, p2].into_iter().enumerate() {
        for root in roots(p, precision)?.roots {
            let dre = &xi.approximant - root.re_rational();
            let dim = root.im_rational();
            let sq = &dre * &dre + &dim * &dim;
            let dist = upper_f64(&sq).sqrt().next_up() + r + root.radius;
            if best.as_ref().map_or(true, |(_, _, d)| dist < *d) {
                best = Some((i + 1, root, dist));
            }
        }
    }
    let (polynomial, root, distance) = best.expect("non-constant inputs have roots");
    let hp = [p1, p2][polynomial - 1].height_f64().max(2.0);
    let achieved = -distance.ln() / hp.ln() - 1.0;
    let target = 1.5 * eta - n as f64 + 0.5;
    Ok(WbsReport { polynomial, root, distance, achieved, target })
}
