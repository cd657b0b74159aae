use std::fmt;
use std::str::FromStr;

use super::Grammar;
use crate::polyring::{monomial, Polynomial, Variable};
use crate::structures::StructureFamily;
use crate::Error;

/// The grammar families: four constant grammars in a handful of letters and
/// five step-indexed sequences `G_1, G_2, ...` over indexed letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    /// `{a → ab, b → b}`, seed `a`.
    PartitionUni,
    /// `{x → xy, y → xy}`, seed `x`.
    EulerianUni,
    /// `{x → x²y, y → x²y}`, seed `x`.
    Stirling2Uni,
    /// `{x → x²y, y → 2x²y}`, seed `x`.
    MarkedUni,
    /// `G_n = {a → a·b_n, b_i → b_n : 1 ≤ i < n}`, seed `a`.
    PartitionMulti,
    /// `G_n = {x_i, y_i → x_n·y_n : i < n}`, seed `x_0`.
    EulerianMulti,
    /// `G_n = {x_i, y_i, z_i → x_n·y_n·z_n : i < n}`, seed `z_0`.
    Stirling2Multi,
    /// Alternating odd steps (insert a barred letter) and even steps
    /// (insert a doubled letter), seed `x_0`; order `n` takes `2n` steps.
    Legendre,
    /// Like [`FamilyKind::Stirling2Multi`] with `y_i → 2·x_n·y_n·z_n`, seed `z_0`.
    MarkedMulti,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::PartitionUni,
        FamilyKind::EulerianUni,
        FamilyKind::Stirling2Uni,
        FamilyKind::MarkedUni,
        FamilyKind::PartitionMulti,
        FamilyKind::EulerianMulti,
        FamilyKind::Stirling2Multi,
        FamilyKind::Legendre,
        FamilyKind::MarkedMulti,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::PartitionUni => "partition_uni",
            FamilyKind::EulerianUni => "eulerian_uni",
            FamilyKind::Stirling2Uni => "stirling2_uni",
            FamilyKind::MarkedUni => "marked_uni",
            FamilyKind::PartitionMulti => "partition_multi",
            FamilyKind::EulerianMulti => "eulerian_multi",
            FamilyKind::Stirling2Multi => "stirling2_multi",
            FamilyKind::Legendre => "legendre",
            FamilyKind::MarkedMulti => "marked_multi",
        }
    }

    pub fn is_multivariate(self) -> bool {
        !matches!(
            self,
            FamilyKind::PartitionUni | FamilyKind::EulerianUni | FamilyKind::Stirling2Uni | FamilyKind::MarkedUni
        )
    }

    /// The combinatorial structures whose weights this family generates.
    pub fn structure(self) -> StructureFamily {
        match self {
            FamilyKind::PartitionUni | FamilyKind::PartitionMulti => StructureFamily::Partition,
            FamilyKind::EulerianUni | FamilyKind::EulerianMulti => StructureFamily::Permutation,
            FamilyKind::Stirling2Uni | FamilyKind::Stirling2Multi => StructureFamily::Stirling,
            FamilyKind::MarkedUni | FamilyKind::MarkedMulti => StructureFamily::MarkedStirling,
            FamilyKind::Legendre => StructureFamily::Legendre,
        }
    }

    pub fn seed(self) -> Variable {
        match self {
            FamilyKind::PartitionUni | FamilyKind::PartitionMulti => Variable::a(0),
            FamilyKind::EulerianUni
            | FamilyKind::Stirling2Uni
            | FamilyKind::MarkedUni
            | FamilyKind::EulerianMulti
            | FamilyKind::Legendre => Variable::x(0),
            FamilyKind::Stirling2Multi | FamilyKind::MarkedMulti => Variable::z(0),
        }
    }

    /// Number of derivative steps that produce the order-`n` polynomial.
    pub fn steps(self, n: usize) -> usize {
        match self {
            FamilyKind::Legendre => 2 * n,
            _ => n,
        }
    }

    /// The grammar applied at step `step` (1-based). Constant families
    /// ignore the step.
    pub fn grammar(self, step: usize) -> Grammar {
        assert!(step >= 1, "grammar steps are numbered from 1");
        let n = step as u32;
        let (x, y, a, b) = (Variable::x(0), Variable::y(0), Variable::a(0), Variable::b(0));
        match self {
            FamilyKind::PartitionUni => Grammar::new()
                .rule(a, monomial([a, b]))
                .rule(b, Polynomial::var(b)),
            FamilyKind::EulerianUni => {
                let xy = monomial([x, y]);
                Grammar::new().rule(x, xy.clone()).rule(y, xy)
            }
            FamilyKind::Stirling2Uni | FamilyKind::MarkedUni => {
                let x2y = monomial([x, x, y]);
                let y_image = if self == FamilyKind::MarkedUni {
                    x2y.scale(&2.into())
                } else {
                    x2y.clone()
                };
                Grammar::new().rule(x, x2y).rule(y, y_image)
            }
            FamilyKind::PartitionMulti => {
                let bn = Variable::b(n);
                (1..n).fold(Grammar::new().rule(a, monomial([a, bn])), |g, i| {
                    g.rule(Variable::b(i), Polynomial::var(bn))
                })
            }
            FamilyKind::EulerianMulti => {
                let image = monomial([Variable::x(n), Variable::y(n)]);
                (0..n).fold(Grammar::new(), |g, i| {
                    g.rule(Variable::x(i), image.clone()).rule(Variable::y(i), image.clone())
                })
            }
            FamilyKind::Stirling2Multi | FamilyKind::MarkedMulti => {
                let image = monomial([Variable::x(n), Variable::y(n), Variable::z(n)]);
                let y_image = if self == FamilyKind::MarkedMulti {
                    image.scale(&2.into())
                } else {
                    image.clone()
                };
                (0..n).fold(Grammar::new(), |g, i| {
                    g.rule(Variable::x(i), image.clone())
                        .rule(Variable::y(i), y_image.clone())
                        .rule(Variable::z(i), image.clone())
                })
            }
            FamilyKind::Legendre => legendre_step(step),
        }
    }

    /// `D_steps ⋯ D_1(seed)`.
    pub fn iterate_steps(self, steps: usize) -> Polynomial {
        (1..=steps).fold(Polynomial::var(self.seed()), |f, s| self.grammar(s).derive(&f))
    }

    /// The order-`n` polynomial; `n = 0` yields the bare seed.
    pub fn iterate(self, n: usize) -> Polynomial {
        self.iterate_steps(self.steps(n))
    }

    /// `[f_0, f_1, ..., f_steps]` where `f_s = D_s(f_{s-1})`.
    pub fn trajectory(self, steps: usize) -> Vec<Polynomial> {
        let mut out = Vec::with_capacity(steps + 1);
        out.push(Polynomial::var(self.seed()));
        for s in 1..=steps {
            let next = self.grammar(s).derive(&out[s - 1]);
            out.push(next);
        }
        out
    }
}

fn legendre_step(step: usize) -> Grammar {
    let m = step.div_ceil(2) as u32;
    let lower = |i: u32| {
        [
            Variable::x(i),
            Variable::y(i),
            Variable::z(i),
            Variable::u(i),
            Variable::v(i),
        ]
    };
    if step % 2 == 1 {
        let image = monomial([Variable::u(m), Variable::v(m)]);
        (0..m)
            .flat_map(lower)
            .fold(Grammar::new(), |g, v| g.rule(v, image.clone()))
    } else {
        let xyz = monomial([Variable::x(m), Variable::y(m), Variable::z(m)]);
        (0..m)
            .flat_map(lower)
            .fold(Grammar::new(), |g, v| g.rule(v, xyz.clone()))
            .rule(Variable::u(m), monomial([Variable::x(m), Variable::z(m), Variable::u(m)]))
            .rule(Variable::v(m), xyz)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Accepts `stirling2_multi` as well as `stirling2-multi`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let normalized = s.trim().to_ascii_lowercase().replace('-', "_");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == normalized)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}
