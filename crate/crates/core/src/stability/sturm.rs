//! Real-root counting with Sturm sequences over the rationals.
//!
//! The polynomial is first stripped of its roots at zero, then split into
//! square-free parts by Yun's algorithm; each part gets its own Sturm
//! sequence, so roots are counted with multiplicity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::polyring::Polynomial;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    /// Every root is real (counted with multiplicity).
    pub all_real: bool,
    /// No repeated root, real or complex.
    pub distinct: bool,
    /// Every root is real and `≤ 0`.
    pub all_nonpositive: bool,
    /// Real roots with multiplicity.
    pub real_root_count: usize,
}

#[derive(Serialize)]
struct Labeled<'a> {
    polynomial: &'a str,
    #[serde(flatten)]
    report: &'a RootReport,
}

impl RootReport {
    pub fn is_real_rooted(&self) -> bool {
        self.all_real
    }

    /// `{"polynomial": id, "degree": .., "all_real": .., ...}`
    pub fn to_json(&self, id: &str) -> String {
        serde_json::to_string(&Labeled { polynomial: id, report: self }).expect("report serialization is infallible")
    }
}

/// Root report of a univariate integer polynomial.
pub fn sturm_report(p: &Polynomial) -> Result<RootReport, Error> {
    let (_, coeffs) = p.to_univariate()?;
    root_report(&coeffs)
}

/// Root report from dense coefficients, constant term first.
pub fn root_report(coeffs: &[BigInt]) -> Result<RootReport, Error> {
    let f = trim(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    if f.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = f.len() - 1;
    let distinct = deg(&gcd(&f, &derivative(&f))) == 0;

    let at_zero = f.iter().take_while(|c| c.is_zero()).count();
    let rest = f[at_zero..].to_vec();
    let mut real = at_zero;
    let mut nonpositive = at_zero;
    for (factor, multiplicity) in square_free_decomposition(&rest) {
        let seq = sturm_sequence(&factor);
        let (minus_inf, zero, plus_inf) = (
            variations(seq.iter().map(sign_at_minus_infinity)),
            variations(seq.iter().map(|s| s[0].signum())),
            variations(seq.iter().map(|s| s.last().expect("nonzero").signum())),
        );
        real += multiplicity * (minus_inf - plus_inf);
        nonpositive += multiplicity * (minus_inf - zero);
    }
    Ok(RootReport {
        degree,
        all_real: real == degree,
        distinct,
        all_nonpositive: nonpositive == degree,
        real_root_count: real,
    })
}

type Uni = Vec<BigRational>;

fn trim(mut p: Uni) -> Uni {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree, with the zero polynomial treated as degree 0.
fn deg(p: &Uni) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &Uni) -> Uni {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(k.into())).collect())
}

fn sub(a: &Uni, b: &Uni) -> Uni {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim((0..n).map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero)).collect())
}

fn div_rem(a: &Uni, b: &Uni) -> (Uni, Uni) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") / lead;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &c * bk;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Uni) -> Uni {
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn gcd(a: &Uni, b: &Uni) -> Uni {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn exact_div(a: &Uni, b: &Uni) -> Uni {
    let (q, r) = div_rem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Yun's algorithm: pairwise coprime square-free factors with their
/// multiplicities. Constant factors are dropped.
fn square_free_decomposition(f: &Uni) -> Vec<(Uni, usize)> {
    if deg(f) == 0 {
        return Vec::new();
    }
    let fp = derivative(f);
    let a0 = gcd(f, &fp);
    let mut b = exact_div(f, &a0);
    let mut c = exact_div(&fp, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while deg(&b) > 0 {
        let a = gcd(&b, &d);
        b = exact_div(&b, &a);
        c = exact_div(&d, &a);
        d = sub(&c, &derivative(&b));
        if deg(&a) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sturm_sequence(f: &Uni) -> Vec<Uni> {
    let mut seq = vec![f.clone()];
    let mut next = derivative(f);
    while !next.is_empty() {
        let (_, r) = div_rem(&seq[seq.len() - 1], &next);
        seq.push(next);
        next = r.into_iter().map(|c| -c).collect();
    }
    seq
}

fn sign_at_minus_infinity(p: &Uni) -> BigRational {
    let lead = p.last().expect("nonzero").signum();
    if deg(p) % 2 == 1 {
        -lead
    } else {
        lead
    }
}

fn variations<I: Iterator<Item = BigRational>>(signs: I) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for s in signs.filter(|s| !s.is_zero()) {
        let positive = s.is_positive();
        if last.is_some_and(|l| l != positive) {
            count += 1;
        }
        last = Some(positive);
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(coeffs: &[i64]) -> RootReport {
        root_report(&coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn constructed_roots() {
        // (x+1)(x+2)(x+3)
        let r = report(&[6, 11, 6, 1]);
        assert!(r.all_real && r.distinct && r.all_nonpositive);
        assert_eq!(r.real_root_count, 3);
    }

    #[test]
    fn no_real_roots() {
        let r = report(&[1, 0, 1]);
        assert_eq!(r.real_root_count, 0);
        assert!(!r.all_real && r.distinct && !r.all_nonpositive);
    }

    #[test]
    fn second_order_eulerian() {
        let r = report(&[0, 1, 8, 6]);
        assert!(r.all_real && r.distinct && r.all_nonpositive);
    }

    #[test]
    fn multiplicities_count() {
        // x^2 (x-1)^3 (x+2)
        let r = report(&[0, 0, -2, 5, -3, -1, 1]);
        let r2 = report(&[0, 0, 2, -5, 3, 1, -1]);
        assert_eq!(r, r2);
        assert_eq!(r.real_root_count, 6);
        assert!(r.all_real && !r.distinct && !r.all_nonpositive);
        // (x^2+1)^2
        let r = report(&[1, 0, 2, 0, 1]);
        assert_eq!(r.real_root_count, 0);
        assert!(!r.distinct);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(root_report(&[]), Err(Error::ZeroPolynomial));
        let r = report(&[5]);
        assert!(r.all_real && r.distinct && r.all_nonpositive);
        assert_eq!(r.degree, 0);
        let r = report(&[0, 0, 3]);
        assert!(r.all_real && !r.distinct && r.all_nonpositive);
    }

    #[test]
    fn json_form() {
        let r = report(&[0, 1]);
        assert_eq!(
            r.to_json("x"),
            r#"{"polynomial":"x","degree":1,"all_real":true,"distinct":true,"all_nonpositive":true,"real_root_count":1}"#
        );
    }
}
