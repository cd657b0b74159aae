use num_bigint::BigInt;

use super::{enumerate, partition_blocks, statistics, LabeledWord, StructureFamily};
use crate::grammar::FamilyKind;
use crate::polyring::{Assignment, Family, Image, Monomial, Polynomial, Variable};

/// The Z-family variable standing for `z_{j,v}` in the r-Stirling
/// polynomial of order `n`. Injective for `1 ≤ v ≤ n`.
pub fn rstirling_z(j: usize, v: u32, n: usize) -> Variable {
    Variable::z((j * (n + 1)) as u32 + v)
}

/// Grammatical-labeling weight of a single word:
///
/// * partitions: `a·∏ b_m` over blocks, `m` the block maximum;
/// * permutations: ascent `x`, descent `y`;
/// * Stirling and marked Stirling words: ascent `x`, descent `y`, plateau `z`;
/// * Legendre-Stirling words: the five sets `X, Y, Z, U, V` give `x, y, z, u, v`;
/// * r-Stirling words: descent `x`, ascent `y`, `j`-plateau `z_{j,·}`
///   (see [`rstirling_z`]).
///
/// Every variable is indexed by the letter value at the position.
pub fn weight_monomial(w: &LabeledWord) -> Monomial {
    let family = w.family();
    if family == StructureFamily::Partition {
        let maxima = partition_blocks(w).into_iter().map(|b| Variable::b(*b.last().expect("blocks are nonempty")));
        return Monomial::product(std::iter::once(Variable::a(0)).chain(maxima));
    }
    let s = statistics(w).expect("non-partition words have statistics");
    let at = |i: &usize| w.value_at(*i);
    let mut vars: Vec<Variable> = Vec::new();
    match family {
        StructureFamily::Permutation => {
            vars.extend(s.asc.iter().map(|i| Variable::x(at(i))));
            vars.extend(s.des.iter().map(|i| Variable::y(at(i))));
        }
        StructureFamily::Stirling | StructureFamily::MarkedStirling => {
            vars.extend(s.asc.iter().map(|i| Variable::x(at(i))));
            vars.extend(s.des.iter().map(|i| Variable::y(at(i))));
            vars.extend(s.plat.iter().map(|i| Variable::z(at(i))));
        }
        StructureFamily::Legendre => {
            vars.extend(s.ls_x.iter().map(|i| Variable::x(at(i))));
            vars.extend(s.ls_y.iter().map(|i| Variable::y(at(i))));
            vars.extend(s.ls_z.iter().map(|i| Variable::z(at(i))));
            vars.extend(s.ls_u.iter().map(|i| Variable::u(at(i))));
            vars.extend(s.ls_v.iter().map(|i| Variable::v(at(i))));
        }
        StructureFamily::RStirling(_) => {
            let n = w.order();
            vars.extend(s.des.iter().map(|i| Variable::x(at(i))));
            vars.extend(s.asc.iter().map(|i| Variable::y(at(i))));
            for (&j, set) in &s.jplat {
                vars.extend(set.iter().map(|i| rstirling_z(j, at(i), n)));
            }
        }
        StructureFamily::Partition => unreachable!(),
    }
    Monomial::product(vars)
}

/// Sum of [`weight_monomial`] over every word of order `n`.
pub fn weight_polynomial(family: StructureFamily, n: usize) -> Polynomial {
    let one = BigInt::from(1);
    Polynomial::from_terms(enumerate(family, n).iter().map(|w| (weight_monomial(w), one.clone())))
}

/// Identifies the indexed letters of a multivariate family with the single
/// letters of its constant grammar: `x_i, z_i → x`, `y_i → y`, `b_i → b`.
/// Multivariate kinds are returned unchanged.
pub fn collapse_to_uni(kind: FamilyKind, p: &Polynomial) -> Polynomial {
    let mut assignment = Assignment::new();
    for v in p.variables() {
        let target = match (kind, v.family) {
            (FamilyKind::PartitionUni, Family::B) => Variable::b(0),
            (FamilyKind::PartitionUni, _) => Variable::a(0),
            (FamilyKind::EulerianUni, Family::Y) => Variable::y(0),
            (FamilyKind::EulerianUni, _) => Variable::x(0),
            (FamilyKind::Stirling2Uni | FamilyKind::MarkedUni, Family::Y) => Variable::y(0),
            (FamilyKind::Stirling2Uni | FamilyKind::MarkedUni, _) => Variable::x(0),
            _ => continue,
        };
        assignment.insert(v, Image::Var(target));
    }
    p.specialize(&assignment).expect("variable substitutions keep integer coefficients")
}

/// The polynomial a grammar family should produce at order `n`, computed from
/// structures alone. Order `0` gives the seed.
pub fn enumeration_polynomial(kind: FamilyKind, n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::var(kind.seed());
    }
    collapse_to_uni(kind, &weight_polynomial(kind.structure(), n))
}
