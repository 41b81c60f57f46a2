//! Independent oracles shared by the integration tests. Plain `i64`/`i128`
//! arithmetic only; nothing here calls the factorization code under test.

#![allow(dead_code)]

use num_integer::Integer;
use polycomb::factor::Factorization;

/// Coefficients low-to-high with trailing zeros removed.
pub fn trim(mut c: Vec<i64>) -> Vec<i64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub fn eval(c: &[i64], x: i64) -> i128 {
    c.iter().rev().fold(0i128, |acc, &a| acc * x as i128 + a as i128)
}

/// Exact quotient `f / g` over the integers, if `g` divides `f`.
pub fn div_exact(f: &[i64], g: &[i64]) -> Option<Vec<i64>> {
    let (n, m) = (f.len(), g.len());
    if m > n {
        return None;
    }
    let mut r: Vec<i128> = f.iter().map(|&a| a as i128).collect();
    let lg = *g.last()? as i128;
    let mut q = vec![0i64; n - m + 1];
    for k in (0..=n - m).rev() {
        let top = r[k + m - 1];
        if top % lg != 0 {
            return None;
        }
        let t = top / lg;
        q[k] = i64::try_from(t).ok()?;
        for (j, &gj) in g.iter().enumerate() {
            r[k + j] -= t * gj as i128;
        }
    }
    r.iter().all(|&x| x == 0).then_some(q)
}

fn signed_divisors(v: i128) -> Vec<i128> {
    let v = v.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            if d * d != v {
                out.push(v / d);
            }
        }
        d += 1;
    }
    let neg: Vec<i128> = out.iter().map(|d| -d).collect();
    out.extend(neg);
    out
}

/// Polynomial through `(xs[i], vs[i])` by Newton divided differences, if its
/// coefficients are integers.
fn interpolate(xs: &[i64], vs: &[i128]) -> Option<Vec<i64>> {
    let k = xs.len();
    let mut dd = vs.to_vec();
    for level in 1..k {
        for i in (level..k).rev() {
            let num = dd[i] - dd[i - 1];
            let den = (xs[i] - xs[i - level]) as i128;
            if num % den != 0 {
                return None;
            }
            dd[i] = num / den;
        }
    }
    // Expand sum dd[i] prod_{j<i} (T - x_j).
    let mut coeffs = vec![0i128; k];
    let mut basis = vec![1i128];
    for i in 0..k {
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] += dd[i] * b;
        }
        let mut next = vec![0i128; basis.len() + 1];
        for (j, b) in basis.iter().enumerate() {
            next[j + 1] += b;
            next[j] -= b * xs[i] as i128;
        }
        basis = next;
    }
    coeffs.into_iter().map(|c| i64::try_from(c).ok()).collect()
}

/// `binom(k, i) ||f||_2`, bounding coefficient `i` of a degree-`k` factor.
fn mignotte_ok(g: &[i64], f: &[i64]) -> bool {
    let norm = (f.iter().map(|&c| (c as f64).powi(2)).sum::<f64>()).sqrt();
    let k = g.len() - 1;
    let mut binom = 1f64;
    for (i, &c) in g.iter().enumerate() {
        if (c as f64).abs() > binom * norm + 1e-9 {
            return false;
        }
        binom = binom * (k - i) as f64 / (i + 1) as f64;
    }
    true
}

/// A factor of primitive `f` with degree in `1..=deg f / 2`, smallest degree
/// first, found by Kronecker's divisor enumeration.
fn find_factor(f: &[i64]) -> Option<Vec<i64>> {
    let d = f.len() - 1;
    let mut points: Vec<(i64, i128)> = Vec::new();
    let mut x = 0i64;
    while points.len() < d / 2 + 1 {
        let v = eval(f, x);
        if v != 0 {
            points.push((x, v));
        } else {
            // T - x divides f.
            return Some(vec![-x, 1]);
        }
        x = if x > 0 { -x } else { -x + 1 };
    }
    for k in 1..=d / 2 {
        let xs: Vec<i64> = points[..=k].iter().map(|p| p.0).collect();
        let divs: Vec<Vec<i128>> = points[..=k].iter().map(|p| signed_divisors(p.1)).collect();
        let mut idx = vec![0usize; k + 1];
        loop {
            // g and -g are the same factor: fix the first value positive.
            if divs[0][idx[0]] > 0 {
                let vs: Vec<i128> = (0..=k).map(|i| divs[i][idx[i]]).collect();
                if let Some(g) = interpolate(&xs, &vs) {
                    if g[k] != 0 && mignotte_ok(&g, f) && div_exact(f, &g).is_some() {
                        return Some(normalize(g));
                    }
                }
            }
            let mut i = 0;
            while i <= k {
                idx[i] += 1;
                if idx[i] < divs[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i > k {
                break;
            }
        }
    }
    None
}

fn normalize(mut g: Vec<i64>) -> Vec<i64> {
    let c = g.iter().fold(0i64, |a, &b| a.gcd(&b));
    for x in &mut g {
        *x /= c;
    }
    if *g.last().unwrap() < 0 {
        for x in &mut g {
            *x = -*x;
        }
    }
    g
}

/// `(sign, content, [(factor, multiplicity)])` with factors primitive,
/// positive-leading and sorted by (degree, coefficients low-to-high).
pub type OracleFactorization = (i8, i64, Vec<(Vec<i64>, usize)>);

pub fn oracle_factor(c: &[i64]) -> OracleFactorization {
    let c = trim(c.to_vec());
    assert!(!c.is_empty(), "zero polynomial");
    let sign = if *c.last().unwrap() < 0 { -1 } else { 1 };
    let content = c.iter().fold(0i64, |a, &b| a.gcd(&b));
    let mut rest = normalize(c);
    let mut found: Vec<Vec<i64>> = Vec::new();
    while rest.len() > 1 {
        match find_factor(&rest) {
            Some(g) => {
                rest = div_exact(&rest, &g).expect("factor divides");
                found.push(g);
            }
            None => {
                found.push(rest);
                rest = vec![1];
            }
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut out: Vec<(Vec<i64>, usize)> = Vec::new();
    for g in found {
        match out.last_mut() {
            Some((h, m)) if *h == g => *m += 1,
            _ => out.push((g, 1)),
        }
    }
    (sign, content, out)
}

/// The library result in the oracle's shape.
pub fn library_shape(f: &Factorization) -> OracleFactorization {
    let mut factors: Vec<(Vec<i64>, usize)> = f
        .factors
        .iter()
        .map(|fp| (fp.poly.coeffs().iter().map(|c| i64::try_from(c).expect("small")).collect(), fp.mult))
        .collect();
    factors.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    (f.sign, i64::try_from(&f.content).expect("small"), factors)
}
