//! The product test for stability preservers: a linear operator `T` on
//! multiaffine polynomials in `V` preserves stability when
//! `T(∏_{v∈V}(v + w_v))` is stable, each `w_v` a fresh partner variable.
//!
//! For a first-order operator `T = s + Σ c_v ∂/∂v` the image is
//! `s·F + Σ_{v∈V} c_v·∏_{u≠v}(u + w_u)`, the denominator-cleared form of
//! `F·(s + Σ c_v/(v + w_v))`. Sampling evaluates that sum directly, so large
//! `V` never needs the expanded polynomial.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::modular::Fp2;
use super::sample::{search, stream_point, Probe, SamplerConfig, Witness};
use crate::grammar::LinearDiffOp;
use crate::polyring::{GaussianRational, Point, Polynomial, Variable};

/// Largest `|V|` for which the expanded image is built (it has on the order
/// of `|V|·2^{|V|-1}` terms).
pub const DEFAULT_EXPAND_LIMIT: usize = 12;

/// Points on which the structured and expanded evaluations are compared.
const CROSS_CHECK_POINTS: usize = 8;

#[derive(Clone, Debug)]
pub struct GateReport {
    /// `T(F)` expanded, when `|V|` is within the expansion limit.
    pub expanded: Option<Polynomial>,
    pub identically_zero: bool,
    pub witness: Option<Witness>,
    /// `v ↦ w_v`.
    pub partners: BTreeMap<Variable, Variable>,
    /// Every variable of `T(F)`, in canonical order.
    pub variables: Vec<Variable>,
    /// Whether the structured evaluator agreed with the expanded polynomial
    /// on the first points of the stream; `None` when nothing was expanded.
    pub consistent: Option<bool>,
}

impl GateReport {
    /// No witness was found and `T(F)` is not identically zero.
    pub fn passes(&self) -> bool {
        self.witness.is_none() && !self.identically_zero && self.consistent != Some(false)
    }
}

#[derive(Serialize)]
pub struct GateSummary {
    pub vars: usize,
    pub sampled_variables: usize,
    pub expanded_terms: Option<usize>,
    pub identically_zero: bool,
    pub consistent: Option<bool>,
    pub witness: Option<Witness>,
}

impl GateReport {
    pub fn summary(&self) -> GateSummary {
        GateSummary {
            vars: self.partners.len(),
            sampled_variables: self.variables.len(),
            expanded_terms: self.expanded.as_ref().map(Polynomial::len),
            identically_zero: self.identically_zero,
            consistent: self.consistent,
            witness: self.witness.clone(),
        }
    }
}

/// Partners `p_k, p_{k+1}, ...` for `vars`, starting after every P-family
/// index already used by `t` or `vars`.
pub fn partner_map(t: &LinearDiffOp, vars: &[Variable]) -> BTreeMap<Variable, Variable> {
    let used = t.variables().into_iter().chain(vars.iter().copied());
    let start = used.filter(|v| v.family == crate::polyring::Family::P).map(|v| v.index + 1).max().unwrap_or(0);
    vars.iter().enumerate().map(|(k, &v)| (v, Variable::p(start + k as u32))).collect()
}

/// `∏_{v∈V}(v + w_v)`.
pub fn partner_product(partners: &BTreeMap<Variable, Variable>) -> Polynomial {
    partners.iter().map(|(&v, &w)| &Polynomial::var(v) + &Polynomial::var(w)).product()
}

/// Arithmetic the structured evaluator runs in: exact Gaussian rationals,
/// residues mod `p`, and floating point for a cheap pre-filter.
trait Scalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn coefficient(t: &Term) -> Self;
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn coefficient(t: &Term) -> Self {
        GaussianRational::real(BigRational::from_integer(t.coeff.clone()))
    }
}

impl Scalar for Fp2 {
    fn zero() -> Self {
        Fp2::ZERO
    }
    fn one() -> Self {
        Fp2::ONE
    }
    fn add(&self, o: &Self) -> Self {
        Fp2::add(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp2::mul(*self, *o)
    }
    fn coefficient(t: &Term) -> Self {
        t.residue
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn coefficient(t: &Term) -> Self {
        Complex64::new(t.float, 0.0)
    }
}

struct Term {
    coeff: BigInt,
    residue: Fp2,
    float: f64,
    /// `(position in the coordinate vector, exponent)`.
    factors: Vec<(usize, u32)>,
}

/// A polynomial with its variables replaced by coordinate positions.
struct Compiled(Vec<Term>);

impl Compiled {
    fn new(p: &Polynomial, position: &BTreeMap<Variable, usize>) -> Self {
        Compiled(
            p.terms()
                .map(|(m, c)| Term {
                    coeff: c.clone(),
                    residue: Fp2::from_int(c),
                    float: c.to_f64().unwrap_or(f64::INFINITY),
                    factors: m.exponents().iter().map(|&(v, e)| (position[&v], e)).collect(),
                })
                .collect(),
        )
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn eval<T: Scalar>(&self, x: &[T]) -> T {
        self.0.iter().fold(T::zero(), |acc, t| {
            let term = t.factors.iter().fold(T::coefficient(t), |v, &(k, e)| (0..e).fold(v, |v, _| v.mul(&x[k])));
            acc.add(&term)
        })
    }
}

struct StructuredProbe {
    /// Positions of `v_k` and `w_k` in `all`.
    vars: Vec<usize>,
    partners: Vec<usize>,
    scalar: Compiled,
    coefficients: Vec<Compiled>,
    all: Vec<Variable>,
}

impl StructuredProbe {
    fn new(t: &LinearDiffOp, partners: &BTreeMap<Variable, Variable>) -> Self {
        let mut all: BTreeSet<Variable> = t.scalar.variables();
        for (c, target) in &t.derivative_terms {
            if partners.contains_key(target) {
                all.extend(c.variables());
            }
        }
        all.extend(partners.iter().flat_map(|(&v, &w)| [v, w]));
        let all: Vec<Variable> = all.into_iter().collect();
        let position: BTreeMap<Variable, usize> = all.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let coefficients = partners
            .keys()
            .map(|v| {
                let c: Polynomial =
                    t.derivative_terms.iter().filter(|(_, target)| target == v).map(|(c, _)| c.clone()).sum();
                Compiled::new(&c, &position)
            })
            .collect();
        StructuredProbe {
            vars: partners.keys().map(|v| position[v]).collect(),
            partners: partners.values().map(|w| position[w]).collect(),
            scalar: Compiled::new(&t.scalar, &position),
            coefficients,
            all,
        }
    }

    fn identically_zero(&self) -> bool {
        self.scalar.is_zero() && self.coefficients.iter().all(Compiled::is_zero)
    }

    fn exact(&self, point: &Point) -> Vec<GaussianRational> {
        self.all.iter().map(|v| point[v].clone()).collect()
    }

    fn residues(&self, point: &Point) -> Option<Vec<Fp2>> {
        self.all.iter().map(|v| Fp2::from_gaussian(&point[v])).collect()
    }

    fn floats(&self, point: &Point) -> Vec<Complex64> {
        let f = |q: &BigRational| q.to_f64().unwrap_or(f64::NAN);
        self.all.iter().map(|v| Complex64::new(f(&point[v].re), f(&point[v].im))).collect()
    }

    /// `(s, L, c)` at `x`, with `None` for vanishing coefficients.
    fn parts<T: Scalar>(&self, x: &[T]) -> (T, Vec<T>, Vec<Option<T>>) {
        let l = self.vars.iter().zip(&self.partners).map(|(&v, &w)| x[v].add(&x[w])).collect();
        let c = self.coefficients.iter().map(|c| (!c.is_zero()).then(|| c.eval(x))).collect();
        (self.scalar.eval(x), l, c)
    }

    /// `s·∏L + Σ c_k·∏_{j≠k} L_j`.
    fn value<T: Scalar>(&self, x: &[T]) -> T {
        let (s, l, c) = self.parts(x);
        let (all, sum) = product_and_cofactor_sum(&l, &c);
        s.mul(&all).add(&sum)
    }

    /// `(c_k·P, s·P + Q)` for the affine split in `w_k` described at
    /// [`Probe::axis_root`]; `None` when `c_k = 0`.
    fn split<T: Scalar>(&self, x: &[T], k: usize) -> Option<(T, T)> {
        let (s, mut l, mut c) = self.parts(x);
        let ck = c[k].clone()?;
        l.remove(k);
        c.remove(k);
        let (p, q) = product_and_cofactor_sum(&l, &c);
        Some((ck.mul(&p), s.mul(&p).add(&q)))
    }
}

/// `(∏ l_k, Σ c_k·∏_{j≠k} l_j)` with prefix and suffix products.
fn product_and_cofactor_sum<T: Scalar>(l: &[T], c: &[Option<T>]) -> (T, T) {
    let n = l.len();
    let mut suffix = vec![T::one(); n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1].mul(&l[k]);
    }
    let mut prefix = T::one();
    let mut sum = T::zero();
    for k in 0..n {
        if let Some(ck) = &c[k] {
            sum = sum.add(&ck.mul(&prefix).mul(&suffix[k + 1]));
        }
        prefix = prefix.mul(&l[k]);
    }
    (prefix, sum)
}

/// Floating-point roots this far below the real axis (relative to their
/// size) are rejected without an exact solve.
const AXIS_FLOAT_MARGIN: f64 = 1e-9;

impl Probe for StructuredProbe {
    fn variables(&self) -> &[Variable] {
        &self.all
    }

    fn vanishes_at(&self, point: &Point) -> bool {
        self.value(&self.exact(point)).is_zero()
    }

    fn may_vanish_at(&self, point: &Point) -> bool {
        self.residues(point).is_none_or(|x| self.value(&x).is_zero())
    }

    /// The image is affine in each partner `w_k`: with `L_k = v_k + w_k`,
    /// `T(F) = L_k·(s·P + Q) + c_k·P` where `P = ∏_{j≠k} L_j` and
    /// `Q = Σ_{i≠k} c_i ∏_{j≠i,k} L_j`. Solve for `w_k`.
    fn axis_root(&self, point: &Point, pick: usize) -> Option<Point> {
        if self.vars.is_empty() {
            return None;
        }
        let k = pick % self.vars.len();
        let x = self.floats(point);
        let (num, den) = self.split(&x, k)?;
        let wk = -num / den - x[self.vars[k]];
        if wk.is_finite() && wk.im < -AXIS_FLOAT_MARGIN * (1.0 + wk.norm()) {
            return None;
        }
        let x = self.exact(point);
        let (num, den) = self.split(&x, k)?;
        let wk = &(&(-num) * &den.recip()?) - &x[self.vars[k]];
        if !wk.in_upper_half_plane() {
            return None;
        }
        let mut moved = point.clone();
        moved.insert(self.all[self.partners[k]], wk);
        Some(moved)
    }
}

/// Runs the product test for `t` over `vars`, expanding `T(F)` only when
/// `|vars| ≤ expand_limit`.
pub fn lemma_gate(t: &LinearDiffOp, vars: &[Variable], cfg: &SamplerConfig, expand_limit: usize) -> GateReport {
    let partners = partner_map(t, vars);
    let probe = StructuredProbe::new(t, &partners);
    let identically_zero = probe.identically_zero();
    let expanded = (partners.len() <= expand_limit).then(|| t.apply(&partner_product(&partners)));
    let consistent = expanded.as_ref().map(|e| {
        let position: BTreeMap<Variable, usize> = probe.all.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let compiled = Compiled::new(e, &position);
        e.is_zero() == identically_zero
            && (0..cfg.stream_len().min(CROSS_CHECK_POINTS)).all(|index| {
                let point = stream_point(&probe.all, cfg, index);
                match probe.residues(&point) {
                    Some(x) => compiled.eval(&x) == probe.value(&x),
                    None => true,
                }
            })
    });
    let witness = if identically_zero { None } else { search(&probe, cfg) };
    GateReport { expanded, identically_zero, witness, partners, variables: probe.all, consistent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{surrogate_operator, FamilyKind, SurrogateKind};
    use crate::polyring::monomial;
    use crate::stability::sample::certify;

    fn b(i: u32) -> Variable {
        Variable::b(i)
    }

    #[test]
    fn raw_partition_step_fails_the_gate() {
        let t = LinearDiffOp::from(&FamilyKind::PartitionMulti.grammar(2));
        let vars = [Variable::a(0), b(1)];
        let report = lemma_gate(&t, &vars, &SamplerConfig::default().with_samples(200), DEFAULT_EXPAND_LIMIT);
        let w = report.witness.clone().expect("raw step is not a stability preserver");
        assert!(certify(report.expanded.as_ref().unwrap(), &w));
        assert_eq!(report.consistent, Some(true));
        assert!(!report.passes());
    }

    #[test]
    fn partition_surrogate_image() {
        let n = 3;
        let t = surrogate_operator(SurrogateKind::PartitionMulti, n + 1);
        let vars: Vec<Variable> = std::iter::once(Variable::a(0)).chain((1..=n).map(b)).collect();
        let report = lemma_gate(&t, &vars, &SamplerConfig::default().with_samples(300), DEFAULT_EXPAND_LIMIT);
        // b_{n+1}·F·(1 + Σ 1/(b_i + w_i)) with the denominators cleared
        let partners = &report.partners;
        let f = partner_product(partners);
        let bn = Polynomial::var(b(n + 1));
        let mut expected = &bn * &f;
        for i in 1..=n {
            let rest: BTreeMap<_, _> = partners.iter().filter(|(v, _)| **v != b(i)).map(|(v, w)| (*v, *w)).collect();
            expected = &expected + &(&bn * &partner_product(&rest));
        }
        assert_eq!(report.expanded.as_ref(), Some(&expected));
        assert!(report.passes(), "{:?}", report.witness);
    }

    #[test]
    fn identically_zero_operator() {
        let t = LinearDiffOp::new(Polynomial::zero(), vec![(monomial([b(5)]), b(9))]);
        let report = lemma_gate(&t, &[b(1)], &SamplerConfig::default().with_samples(10), DEFAULT_EXPAND_LIMIT);
        assert!(report.identically_zero);
        assert!(report.expanded.as_ref().unwrap().is_zero());
        assert!(!report.passes());
    }

    #[test]
    fn partners_skip_used_indices() {
        let t = LinearDiffOp::new(Polynomial::var(Variable::p(4)), vec![]);
        let m = partner_map(&t, &[Variable::x(0), Variable::y(0)]);
        assert_eq!(m[&Variable::x(0)], Variable::p(5));
        assert_eq!(m[&Variable::y(0)], Variable::p(6));
    }
}
