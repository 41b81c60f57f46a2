//! Exact integer polynomial arithmetic: canonical JSON, gcd, resultant,
//! Mobius conjugation and Gelfond-style heights.

use polycomb::{IntPolynomial, MobiusMap};

fn main() -> polycomb::Result<()> {
    let p = IntPolynomial::from_json(r#"["-1","0","4"]"#)?;
    let q = IntPolynomial::from_i64(&[1, 2]);
    println!("P = {p}, Q = {q}, P*Q = {}", &p * &q);
    println!("gcd(P, Q) = {}", p.gcd(&q)?);
    println!("Res(P, T^2 + 1) = {}", p.resultant(&IntPolynomial::from_i64(&[1, 0, 1]))?);

    let (div, rem) = (&p * &q).div_rem_exact(&q).expect("exact division over Z");
    println!("(P*Q) / Q = {div} remainder {rem}");

    // P(T) -> (T + 1)^2 P(T / (T + 1)) and back through the adjugate.
    let m = MobiusMap::from_i64(1, 0, 1, 1)?;
    let conj = p.mobius_conjugate(&m, 2)?;
    let back = conj.mobius_conjugate(&m.adjugate(), 2)?;
    println!("conjugate {conj}, round trip {back} (det {})", m.determinant());
    println!("height {} content {} derivative {}", p.height(), p.content()?, p.derivative());
    println!("canonical JSON: {}", conj.to_json());
    Ok(())
}
