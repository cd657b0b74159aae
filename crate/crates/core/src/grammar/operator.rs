use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::Grammar;
use crate::polyring::{monomial, Polynomial, Variable};
use crate::Error;

/// First-order linear differential operator
/// `f ↦ scalar·f + Σ coefficient·∂f/∂target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDiffOp {
    pub scalar: Polynomial,
    pub derivative_terms: Vec<(Polynomial, Variable)>,
}

impl LinearDiffOp {
    pub fn new(scalar: Polynomial, derivative_terms: Vec<(Polynomial, Variable)>) -> Self {
        LinearDiffOp { scalar, derivative_terms }
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = &self.scalar * p;
        for (coefficient, target) in &self.derivative_terms {
            let d = p.partial_derivative(*target);
            if !d.is_zero() {
                out = &out + &(coefficient * &d);
            }
        }
        out
    }

    pub fn targets(&self) -> impl Iterator<Item = Variable> + '_ {
        self.derivative_terms.iter().map(|&(_, v)| v)
    }

    /// Every variable mentioned by the scalar, the coefficients or the targets.
    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut vars = self.scalar.variables();
        for (c, t) in &self.derivative_terms {
            vars.extend(c.variables());
            vars.insert(*t);
        }
        vars
    }
}

/// A grammar's formal derivative is the operator `Σ rule(v)·∂/∂v`.
impl From<&Grammar> for LinearDiffOp {
    fn from(g: &Grammar) -> Self {
        LinearDiffOp {
            scalar: Polynomial::zero(),
            derivative_terms: g.rules().iter().map(|(v, p)| (p.clone(), *v)).collect(),
        }
    }
}

/// Families whose raw grammar step is replaced by an equivalent operator
/// with a stability-friendly shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurrogateKind {
    /// `b_n·(1 + Σ_{i<n} ∂/∂b_i)`, standing in for the partition step `G_n`.
    PartitionMulti,
    /// `x_n z_n + x_n y_n z_n·Σ_{w∈B} ∂/∂w` with
    /// `B = {x_i, y_i, z_i, u_i, v_i : i < n} ∪ {v_n}`, standing in for the
    /// even Legendre step `G_{2n}`.
    LegendreEven,
}

impl SurrogateKind {
    pub fn name(self) -> &'static str {
        match self {
            SurrogateKind::PartitionMulti => "partition_multi",
            SurrogateKind::LegendreEven => "legendre_even",
        }
    }
}

impl fmt::Display for SurrogateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SurrogateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "partition_multi" => Ok(SurrogateKind::PartitionMulti),
            "legendre_even" => Ok(SurrogateKind::LegendreEven),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// The surrogate for step `n` of the family. Targets come out in canonical
/// variable order.
pub fn surrogate_operator(kind: SurrogateKind, n: u32) -> LinearDiffOp {
    assert!(n >= 1, "surrogate operators are defined for n >= 1");
    match kind {
        SurrogateKind::PartitionMulti => {
            let bn = Polynomial::var(Variable::b(n));
            LinearDiffOp::new(bn.clone(), (1..n).map(|i| (bn.clone(), Variable::b(i))).collect())
        }
        SurrogateKind::LegendreEven => {
            let scalar = monomial([Variable::x(n), Variable::z(n)]);
            let coefficient = monomial([Variable::x(n), Variable::y(n), Variable::z(n)]);
            let mut targets: Vec<Variable> = (0..n)
                .flat_map(|i| {
                    [
                        Variable::x(i),
                        Variable::y(i),
                        Variable::z(i),
                        Variable::u(i),
                        Variable::v(i),
                    ]
                })
                .collect();
            targets.push(Variable::v(n));
            targets.sort();
            LinearDiffOp::new(scalar, targets.into_iter().map(|t| (coefficient.clone(), t)).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::FamilyKind;

    #[test]
    fn partition_surrogate_shapes() {
        let t2 = surrogate_operator(SurrogateKind::PartitionMulti, 2);
        assert_eq!(t2.scalar, Polynomial::var(Variable::b(2)));
        assert_eq!(t2.derivative_terms, vec![(Polynomial::var(Variable::b(2)), Variable::b(1))]);
        let t1 = surrogate_operator(SurrogateKind::PartitionMulti, 1);
        assert_eq!(t1.scalar, Polynomial::var(Variable::b(1)));
        assert!(t1.derivative_terms.is_empty());
    }

    #[test]
    fn legendre_surrogate_targets() {
        let t = surrogate_operator(SurrogateKind::LegendreEven, 1);
        assert_eq!(t.scalar, monomial([Variable::x(1), Variable::z(1)]));
        let targets: Vec<_> = t.targets().collect();
        assert_eq!(
            targets,
            vec![Variable::x(0), Variable::y(0), Variable::z(0), Variable::u(0), Variable::v(0), Variable::v(1)]
        );
        let xyz = monomial([Variable::x(1), Variable::y(1), Variable::z(1)]);
        assert!(t.derivative_terms.iter().all(|(c, _)| *c == xyz));
    }

    #[test]
    fn apply_partition_surrogate() {
        let (a, b1, b2) = (Variable::a(0), Variable::b(1), Variable::b(2));
        let t2 = surrogate_operator(SurrogateKind::PartitionMulti, 2);
        assert_eq!(t2.apply(&monomial([a, b1])), &monomial([a, b1, b2]) + &monomial([a, b2]));

        let (w, u) = (Polynomial::var(Variable::p(0)), Polynomial::var(Variable::u(0)));
        let lhs = &(&Polynomial::var(a) + &w) * &(&Polynomial::var(b1) + &u);
        let a_plus_w = &Polynomial::var(a) + &w;
        let b2p = Polynomial::var(b2);
        let expected = &(&b2p * &lhs) + &(&b2p * &a_plus_w);
        assert_eq!(t2.apply(&lhs), expected);
    }

    #[test]
    fn scalar_only_operator_scales() {
        let p = &Polynomial::var(Variable::x(1)) + &Polynomial::constant(3);
        let t = LinearDiffOp::new(Polynomial::var(Variable::y(0)), vec![]);
        assert_eq!(t.apply(&p), &Polynomial::var(Variable::y(0)) * &p);
    }

    #[test]
    fn grammar_as_operator_agrees() {
        let g = FamilyKind::Stirling2Multi.grammar(3);
        let f = FamilyKind::Stirling2Multi.iterate(2);
        assert_eq!(LinearDiffOp::from(&g).apply(&f), g.derive(&f));
    }

    #[test]
    fn raw_step_differs_off_sequence() {
        let (a, b1) = (Polynomial::var(Variable::a(0)), Polynomial::var(Variable::b(1)));
        let p = &a + &b1;
        let raw = FamilyKind::PartitionMulti.grammar(2).derive(&p);
        let surrogate = surrogate_operator(SurrogateKind::PartitionMulti, 2).apply(&p);
        assert_ne!(raw, surrogate);
    }
}
