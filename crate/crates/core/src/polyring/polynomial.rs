use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{GaussianRational, Monomial, Variable};
use crate::Error;

/// Image of a variable under [`Polynomial::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Image {
    Value(BigRational),
    Var(Variable),
}

impl From<i64> for Image {
    fn from(n: i64) -> Self {
        Image::Value(BigRational::from_integer(n.into()))
    }
}

impl From<BigRational> for Image {
    fn from(q: BigRational) -> Self {
        Image::Value(q)
    }
}

impl From<Variable> for Image {
    fn from(v: Variable) -> Self {
        Image::Var(v)
    }
}

/// Simultaneous substitution; variables without an entry stay symbolic.
pub type Assignment = BTreeMap<Variable, Image>;

/// A point of evaluation.
pub type Point = BTreeMap<Variable, GaussianRational>;

/// A rational-coefficient polynomial kept as `numerator / denominator`
/// with a positive integer denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPolynomial {
    pub numerator: Polynomial,
    pub denominator: BigInt,
}

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in graded-lex order and no stored
/// coefficient is zero, so derived equality is structural equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::term(1, Monomial::var(v))
    }

    pub fn term<C: Into<BigInt>>(c: C, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Sums possibly repeated terms into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Polynomial::from_accumulator(acc)
    }

    fn from_accumulator(acc: HashMap<Monomial, BigInt>) -> Self {
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// No terms; the same as [`Polynomial::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn degree_in(&self, v: Variable) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Every monomial has all exponents at most one.
    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(Monomial::is_multiaffine)
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    pub fn partial_derivative(&self, v: Variable) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().filter_map(|(m, c)| {
            m.lower(v).map(|(e, q)| (q, c * BigInt::from(e)))
        }))
    }

    /// Simultaneous substitution with an integer-coefficient result.
    ///
    /// Fails with [`Error::NonIntegerCoefficient`] when a rational image
    /// leaves a fractional coefficient; use [`Polynomial::specialize_scaled`]
    /// to accept those.
    pub fn specialize(&self, assignment: &Assignment) -> Result<Polynomial, Error> {
        let scaled = self.specialize_scaled(assignment);
        if scaled.denominator.is_one() {
            Ok(scaled.numerator)
        } else {
            Err(Error::NonIntegerCoefficient)
        }
    }

    /// Simultaneous substitution with coefficients cleared by the least
    /// common denominator.
    pub fn specialize_scaled(&self, assignment: &Assignment) -> ScaledPolynomial {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut coeff = BigRational::from_integer(c.clone());
            let mut pairs = Vec::with_capacity(m.exponents().len());
            for &(v, e) in m.exponents() {
                match assignment.get(&v) {
                    None => pairs.push((v, e)),
                    Some(Image::Var(w)) => pairs.push((*w, e)),
                    Some(Image::Value(q)) => coeff *= num_traits::pow(q.clone(), e as usize),
                }
            }
            if coeff.is_zero() {
                continue;
            }
            *acc.entry(Monomial::from_pairs(pairs)).or_insert_with(BigRational::zero) += coeff;
        }
        acc.retain(|_, c| !c.is_zero());
        let denominator = acc.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let numerator = Polynomial {
            terms: acc
                .into_iter()
                .map(|(m, c)| {
                    let k = &denominator / c.denom();
                    (m, c.numer() * k)
                })
                .collect(),
        };
        ScaledPolynomial { numerator, denominator }
    }

    /// Exact evaluation at a Gaussian-rational point.
    pub fn evaluate(&self, point: &Point) -> Result<GaussianRational, Error> {
        let mut powers: HashMap<(Variable, u32), GaussianRational> = HashMap::new();
        let mut total = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut value = GaussianRational::real(BigRational::from_integer(c.clone()));
            for &(v, e) in m.exponents() {
                let base = point.get(&v).ok_or(Error::UnassignedVariable(v))?;
                let p = powers.entry((v, e)).or_insert_with(|| base.pow(e));
                value = &value * p;
            }
            total = &total + &value;
        }
        Ok(total)
    }

    /// Dense coefficient vector `[c0, c1, ...]` of a polynomial in at most
    /// one variable, together with that variable.
    pub fn to_univariate(&self) -> Result<(Option<Variable>, Vec<BigInt>), Error> {
        let vars = self.variables();
        if vars.len() > 1 {
            return Err(Error::NotUnivariate(vars.len()));
        }
        let var = vars.into_iter().next();
        let mut coeffs = vec![BigInt::zero(); self.total_degree() as usize + 1];
        for (m, c) in &self.terms {
            coeffs[m.degree() as usize] = c.clone();
        }
        if self.is_zero() {
            coeffs.clear();
        }
        Ok((var, coeffs))
    }

    pub fn from_univariate(var: Variable, coeffs: &[BigInt]) -> Polynomial {
        Polynomial::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::from_pairs([(var, k as u32)]), c.clone())),
        )
    }
}

impl fmt::Display for Polynomial {
    /// Highest term first, e.g. `2*x0^2*y0 - x1 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(existing) => {
                    *existing += c;
                    if existing.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Polynomial { terms }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        Polynomial::from_accumulator(acc)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        Polynomial::from_terms(iter.flat_map(|p| p.terms.into_iter()))
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::term(1, m)
    }
}
