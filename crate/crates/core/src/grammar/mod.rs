//! Formal derivatives induced by substitution grammars.
//!
//! A grammar maps letters to polynomials. Its formal derivative `D` sends a
//! letter to its production and extends to all polynomials by linearity and
//! the Leibniz rule, so `D(f) = Σ_v (∂f/∂v)·rule(v)`. Letters without a rule
//! behave as constants.

mod family;
mod operator;

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::polyring::{Polynomial, Variable};

pub use family::FamilyKind;
pub use operator::{surrogate_operator, LinearDiffOp, SurrogateKind};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Variable, Polynomial>,
}

impl Grammar {
    pub fn new() -> Self {
        Grammar::default()
    }

    /// Adds (or replaces) the production for `letter`.
    pub fn rule(mut self, letter: Variable, production: Polynomial) -> Self {
        self.rules.insert(letter, production);
        self
    }

    pub fn rules(&self) -> &BTreeMap<Variable, Polynomial> {
        &self.rules
    }

    pub fn production(&self, letter: Variable) -> Option<&Polynomial> {
        self.rules.get(&letter)
    }

    pub fn derive(&self, p: &Polynomial) -> Polynomial {
        let mut out = Vec::new();
        for (m, c) in p.terms() {
            for &(v, _) in m.exponents() {
                let Some(production) = self.rules.get(&v) else {
                    continue;
                };
                let (e, rest) = m.lower(v).expect("variable occurs in its own monomial");
                let k = c * BigInt::from(e);
                for (rm, rc) in production.terms() {
                    out.push((rest.mul(rm), &k * rc));
                }
            }
        }
        Polynomial::from_terms(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{monomial, Monomial};

    #[test]
    fn unruled_letters_are_constants() {
        let g = Grammar::new().rule(Variable::a(0), monomial([Variable::a(0), Variable::b(0)]));
        assert!(g.derive(&Polynomial::var(Variable::x(3))).is_zero());
        assert!(g.derive(&Polynomial::constant(4)).is_zero());
    }

    #[test]
    fn partition_grammar_first_step() {
        let g = FamilyKind::PartitionUni.grammar(1);
        let a = Polynomial::var(Variable::a(0));
        assert_eq!(g.derive(&a), monomial([Variable::a(0), Variable::b(0)]));
    }

    #[test]
    fn stirling_grammar_on_x() {
        let g = FamilyKind::Stirling2Uni.grammar(1);
        let x2y = Polynomial::from(Monomial::from_pairs([(Variable::x(0), 2), (Variable::y(0), 1)]));
        assert_eq!(g.derive(&Polynomial::var(Variable::x(0))), x2y);
    }

    #[test]
    fn marked_grammar_leibniz_by_hand() {
        // D(x²y) = 2x·x²y·y + x²·2x²y
        let g = FamilyKind::MarkedUni.grammar(1);
        let x2y = Polynomial::from(Monomial::from_pairs([(Variable::x(0), 2), (Variable::y(0), 1)]));
        let expected = &Polynomial::term(2, Monomial::from_pairs([(Variable::x(0), 3), (Variable::y(0), 2)]))
            + &Polynomial::term(2, Monomial::from_pairs([(Variable::x(0), 4), (Variable::y(0), 1)]));
        assert_eq!(g.derive(&x2y), expected);
    }
}
