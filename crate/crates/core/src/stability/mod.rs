//! Exact real-rootedness certificates, upper-half-plane zero search, the
//! product test for stability-preserving operators, and the identities tying
//! the univariate specializations together.

mod gate;
mod identities;
mod modular;
mod sample;
mod sturm;

pub use gate::{lemma_gate, partner_map, partner_product, GateReport, GateSummary, DEFAULT_EXPAND_LIMIT};
pub use identities::{
    gessel_stanley_series, specialization_suite, stirling2, tn_from_eulerian, verify_gessel_stanley,
    verify_tn_identity, Specialization,
};
pub use sample::{certify, sample_falsify, sample_point, SamplerConfig, Witness};
pub use sturm::{root_report, sturm_report, RootReport};

use crate::grammar::{FamilyKind, LinearDiffOp};
use crate::polyring::{GaussianRational, Point, Variable};

/// The raw second partition step `D_2` (rules `a → a·b_2`, `b_1 → b_2`) as
/// an operator.
pub fn raw_partition_step() -> LinearDiffOp {
    LinearDiffOp::from(&FamilyKind::PartitionMulti.grammar(2))
}

/// An upper-half-plane zero of `D_2((a + w)(b_1 + u))` with the partners
/// `w = p0`, `u = p1`: `a = (i-1)/2`, `b_1 = u = i/2 - 1`, `w = i`, and
/// `b_2 = i` (any upper-half-plane value works for the overall factor `b_2`).
pub fn counterexample_point() -> Point {
    Point::from([
        (Variable::a(0), GaussianRational::from_ratios(-1, 2, 1, 2)),
        (Variable::b(1), GaussianRational::from_ratios(-1, 1, 1, 2)),
        (Variable::b(2), GaussianRational::i()),
        (Variable::p(0), GaussianRational::i()),
        (Variable::p(1), GaussianRational::from_ratios(-1, 1, 1, 2)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{monomial, Polynomial};

    #[test]
    fn counterexample_vanishes() {
        let (a, b1, b2, w, u) = (Variable::a(0), Variable::b(1), Variable::b(2), Variable::p(0), Variable::p(1));
        let f = &(&Polynomial::var(a) + &Polynomial::var(w)) * &(&Polynomial::var(b1) + &Polynomial::var(u));
        let image = raw_partition_step().apply(&f);
        let expected = monomial([b2, a, b1]) + monomial([b2, a, u]) + monomial([b2, a]) + monomial([b2, w]);
        assert_eq!(image, expected);
        assert!(image.evaluate(&counterexample_point()).unwrap().is_zero());
    }
}
