use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Named variable families. The declaration order is the canonical order
/// used for monomial comparison and serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    Z,
    U,
    V,
    A,
    B,
    /// Partner variables, only introduced by stability gates.
    P,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::X,
        Family::Y,
        Family::Z,
        Family::U,
        Family::V,
        Family::A,
        Family::B,
        Family::P,
    ];

    pub fn prefix(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
            Family::U => 'u',
            Family::V => 'v',
            Family::A => 'a',
            Family::B => 'b',
            Family::P => 'p',
        }
    }

    pub fn from_prefix(c: char) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.prefix() == c)
    }
}

/// An indexed member of a variable family, e.g. `x3` or `b0`.
///
/// Ordered by family first, then by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub family: Family,
    pub index: u32,
}

impl Variable {
    pub const fn new(family: Family, index: u32) -> Self {
        Variable { family, index }
    }

    pub const fn x(index: u32) -> Self {
        Variable::new(Family::X, index)
    }

    pub const fn y(index: u32) -> Self {
        Variable::new(Family::Y, index)
    }

    pub const fn z(index: u32) -> Self {
        Variable::new(Family::Z, index)
    }

    pub const fn u(index: u32) -> Self {
        Variable::new(Family::U, index)
    }

    pub const fn v(index: u32) -> Self {
        Variable::new(Family::V, index)
    }

    pub const fn a(index: u32) -> Self {
        Variable::new(Family::A, index)
    }

    pub const fn b(index: u32) -> Self {
        Variable::new(Family::B, index)
    }

    pub const fn p(index: u32) -> Self {
        Variable::new(Family::P, index)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.prefix(), self.index)
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("invalid variable name {s:?}"));
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_prefix).ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index = digits.parse().map_err(|_| bad())?;
        Ok(Variable { family, index })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_family_then_index() {
        assert!(Variable::x(9) < Variable::y(0));
        assert!(Variable::y(2) < Variable::y(10));
        assert!(Variable::b(100) < Variable::p(0));
    }

    #[test]
    fn name_round_trip() {
        for name in ["x1", "y3", "u2", "a0", "b4", "p7", "z120"] {
            let v: Variable = name.parse().unwrap();
            assert_eq!(v.to_string(), name);
        }
        assert!("q1".parse::<Variable>().is_err());
        assert!("x".parse::<Variable>().is_err());
        assert!("x-1".parse::<Variable>().is_err());
    }
}
