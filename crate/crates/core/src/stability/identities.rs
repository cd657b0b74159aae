//! Univariate specializations of the multivariate families and the
//! classical identities relating them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::grammar::FamilyKind;
use crate::polyring::{Assignment, Family, Image, Polynomial, Variable};
use crate::structures::{coefficient_table, Statistic, StructureFamily};
use crate::Error;

/// The named diagonalizations; each sends one family of letters (or two)
/// to `x = x0` and the rest to `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Specialization {
    /// Eulerian: `x_i = 1`, `y_i = x`.
    A,
    /// Legendre-Stirling by descents: `y_i = v_i = x`, `x_i = u_i = z_i = 1`.
    B,
    /// Second-order Eulerian: `x_i = z_i = 1`, `y_i = x`.
    C,
    /// Legendre-Stirling by barred descents: `v_i = x`, the rest `1`.
    M,
    /// Stirling numbers of the second kind: `a = 1`, `b_i = x`.
    S,
    /// Marked Stirling by descents: `x_i = z_i = 1`, `y_i = x`.
    T,
}

impl Specialization {
    pub const ALL: [Specialization; 6] =
        [Specialization::A, Specialization::B, Specialization::C, Specialization::M, Specialization::S, Specialization::T];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::A => "A",
            Specialization::B => "B",
            Specialization::C => "C",
            Specialization::M => "M",
            Specialization::S => "S",
            Specialization::T => "T",
        }
    }

    /// The grammar family whose output is specialized.
    pub fn source(self) -> FamilyKind {
        match self {
            Specialization::A => FamilyKind::EulerianMulti,
            Specialization::B | Specialization::M => FamilyKind::Legendre,
            Specialization::C => FamilyKind::Stirling2Multi,
            Specialization::S => FamilyKind::PartitionMulti,
            Specialization::T => FamilyKind::MarkedMulti,
        }
    }

    fn sends_to_x(self, f: Family) -> bool {
        match self {
            Specialization::A | Specialization::C | Specialization::T => f == Family::Y,
            Specialization::B => matches!(f, Family::Y | Family::V),
            Specialization::M => f == Family::V,
            Specialization::S => f == Family::B,
        }
    }

    pub fn apply(self, p: &Polynomial) -> Polynomial {
        let assignment: Assignment = p
            .variables()
            .into_iter()
            .map(|v| {
                let image = if self.sends_to_x(v.family) { Image::Var(Variable::x(0)) } else { Image::from(1) };
                (v, image)
            })
            .collect();
        p.specialize(&assignment).expect("integer images keep integer coefficients")
    }

    /// The univariate polynomial of order `n`.
    pub fn polynomial(self, n: usize) -> Polynomial {
        self.apply(&self.source().iterate(n))
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let t = t.strip_suffix("n").unwrap_or(t);
        Specialization::ALL
            .into_iter()
            .find(|sp| sp.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// `A_n(x), B_n(x), C_n(x), M_n(x), S_n(x), T_n(x)` keyed by letter.
pub fn specialization_suite(n: usize) -> BTreeMap<&'static str, Polynomial> {
    Specialization::ALL.into_iter().map(|s| (s.name(), s.polynomial(n))).collect()
}

/// `Σ_k 2^{n-k} C(n,k) x^k`, with `C(n,k)` counted by enumeration.
pub fn tn_from_eulerian(n: usize) -> Polynomial {
    let table = coefficient_table(StructureFamily::Stirling, n, &[Statistic::Des]).expect("descents are defined");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (key, count) in table {
        let k = key[0];
        coeffs[k] = BigInt::from(count) << (n - k);
    }
    Polynomial::from_univariate(Variable::x(0), &coeffs)
}

/// `T_n(x) = 2^n C_n(x/2)`: the grammar side against the enumeration side.
pub fn verify_tn_identity(n: usize) -> bool {
    Specialization::T.polynomial(n) == tn_from_eulerian(n)
}

/// Stirling numbers of the second kind by `S(n,k) = k·S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let stay = if j < m { &row[j] * BigInt::from(j) } else { BigInt::zero() };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// Coefficients of `x^0..x^order` in `C_k(x)/(1-x)^{2k+1}`, where `C_k(x)`
/// counts Stirling words of order `k` by descents.
pub fn gessel_stanley_series(k: usize, order: usize) -> Vec<BigInt> {
    let table = coefficient_table(StructureFamily::Stirling, k, &[Statistic::Des]).expect("descents are defined");
    (0..=order)
        .map(|n| {
            table
                .iter()
                .filter(|(key, _)| key[0] <= n)
                .map(|(key, &count)| {
                    let m = n - key[0];
                    BigInt::from(count) * binomial(BigInt::from(m + 2 * k), BigInt::from(2 * k))
                })
                .sum()
        })
        .collect()
}

/// `Σ_n S(n+k, n) x^n = C_k(x)/(1-x)^{2k+1}` through `x^order`.
pub fn verify_gessel_stanley(k: usize, order: usize) -> bool {
    gessel_stanley_series(k, order).into_iter().enumerate().all(|(n, c)| c == stirling2(n + k, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_univariate(Variable::x(0), &coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn small_specializations() {
        assert_eq!(Specialization::B.polynomial(1), uni(&[0, 2]));
        assert_eq!(Specialization::T.polynomial(2), uni(&[0, 2, 2]));
        assert_eq!(Specialization::S.polynomial(3), uni(&[0, 1, 3, 1]));
        assert_eq!(Specialization::C.polynomial(3), uni(&[0, 1, 8, 6]));
        assert_eq!(Specialization::A.polynomial(3), uni(&[0, 1, 4, 1]));
        assert_eq!(Specialization::M.polynomial(2), uni(&[5, 26, 9]));
    }

    #[test]
    fn tn_identity_small() {
        assert!((1..=4).all(verify_tn_identity));
        assert_eq!(tn_from_eulerian(2), uni(&[0, 2, 2]));
    }

    #[test]
    fn stirling_numbers() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(5, 2), BigInt::from(15));
        assert_eq!(stirling2(6, 3), BigInt::from(90));
        assert_eq!(stirling2(3, 5), BigInt::zero());
    }

    #[test]
    fn gessel_stanley() {
        let s: Vec<BigInt> = [0, 1, 7, 25, 65].into_iter().map(BigInt::from).collect();
        assert_eq!(gessel_stanley_series(2, 4), s);
        assert!(verify_gessel_stanley(1, 6));
        assert!(verify_gessel_stanley(3, 5));
    }

    #[test]
    fn names_parse() {
        assert_eq!("Bn".parse::<Specialization>().unwrap(), Specialization::B);
        assert_eq!("t".parse::<Specialization>().unwrap(), Specialization::T);
        assert!("Q".parse::<Specialization>().is_err());
    }
}
