use std::cmp::Ordering;
use std::fmt;

use super::Variable;

/// A power product of variables, stored as `(variable, exponent)` pairs
/// sorted by variable with every exponent positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are
    /// merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(Variable, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        exps.dedup_by(|later, earlier| {
            if later.0 == earlier.0 {
                earlier.1 += later.1;
                true
            } else {
                false
            }
        });
        Monomial { exps }
    }

    /// Product of the given variables, each with exponent one (repeats accumulate).
    pub fn product<I: IntoIterator<Item = Variable>>(vars: I) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn exponents(&self) -> &[(Variable, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: Variable) -> u32 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn is_multiaffine(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.degree_in(v) >= e)
    }

    /// Lowers the exponent of `v` by one, returning the old exponent and
    /// the quotient, or `None` if `v` does not occur.
    pub fn lower(&self, v: Variable) -> Option<(u32, Monomial)> {
        let i = self.exps.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let mut exps = self.exps.clone();
        let e = exps[i].1;
        if e == 1 {
            exps.remove(i);
        } else {
            exps[i].1 -= 1;
        }
        Some((e, Monomial { exps }))
    }

    /// The monomial with `v` removed entirely, along with its exponent.
    pub fn without(&self, v: Variable) -> (u32, Monomial) {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => {
                let mut exps = self.exps.clone();
                let (_, e) = exps.remove(i);
                (e, Monomial { exps })
            }
            Err(_) => (0, self.clone()),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }
}

/// Graded lexicographic order: total degree first, then the first variable
/// (in canonical variable order) where the exponents differ decides, with
/// the larger exponent ranking higher.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.exps.get(i), other.exps.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_pairs_normalizes() {
        let m = Monomial::from_pairs([(Variable::y(1), 1), (Variable::x(1), 2), (Variable::y(1), 1), (Variable::z(0), 0)]);
        assert_eq!(m.exponents(), &[(Variable::x(1), 2), (Variable::y(1), 2)]);
        assert!(!m.is_multiaffine());
        assert_eq!(m.degree(), 4);
    }

    #[test]
    fn grlex_order() {
        let x = Monomial::var(Variable::x(0));
        let y = Monomial::var(Variable::y(0));
        let xy = x.mul(&y);
        let xx = x.mul(&x);
        assert!(Monomial::one() < y);
        assert!(y < x);
        assert!(x < xy);
        assert!(xy < xx);
    }

    #[test]
    fn lower_and_divides() {
        let m = Monomial::from_pairs([(Variable::x(1), 2), (Variable::y(2), 1)]);
        let (e, q) = m.lower(Variable::x(1)).unwrap();
        assert_eq!(e, 2);
        assert_eq!(q, Monomial::product([Variable::x(1), Variable::y(2)]));
        assert!(q.divides(&m));
        assert!(!m.divides(&q));
        assert!(m.lower(Variable::z(0)).is_none());
    }
}
