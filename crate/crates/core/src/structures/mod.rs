//! Brute-force combinatorial structures: the oracle side of every grammar
//! identity in the crate.
//!
//! Words are sequences of [`Letter`]s. Bars only occur in Legendre-Stirling
//! words and marks only in marked Stirling words; every statistic compares
//! letters by value alone, with a virtual `0` before the first and after the
//! last letter. Set partitions are encoded as restricted growth words: the
//! `k`-th letter is the label of the block containing `k`, blocks being
//! numbered in order of their minima.

mod enumerate;
mod stats;
mod weight;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::Error;

pub use enumerate::{enumerate, enumerate_brute_force, partition_blocks};
pub use stats::{coefficient_table, statistics, table_to_csv, StatSets, Statistic};
pub use weight::{collapse_to_uni, enumeration_polynomial, weight_monomial, weight_polynomial, rstirling_z};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureFamily {
    Partition,
    Permutation,
    Stirling,
    /// Permutations of `{1^r, ..., n^r}` where every letter between two
    /// copies of `i` is at least `i`.
    RStirling(u32),
    Legendre,
    MarkedStirling,
}

impl StructureFamily {
    pub fn name(self) -> String {
        match self {
            StructureFamily::Partition => "partition".into(),
            StructureFamily::Permutation => "permutation".into(),
            StructureFamily::Stirling => "stirling".into(),
            StructureFamily::RStirling(r) => format!("r-stirling({r})"),
            StructureFamily::Legendre => "legendre".into(),
            StructureFamily::MarkedStirling => "marked-stirling".into(),
        }
    }

    /// Parses a family name; `r` is required for `r-stirling`.
    pub fn parse(name: &str, r: Option<u32>) -> Result<Self, Error> {
        match name.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "partition" => Ok(StructureFamily::Partition),
            "permutation" => Ok(StructureFamily::Permutation),
            "stirling" => Ok(StructureFamily::Stirling),
            "legendre" => Ok(StructureFamily::Legendre),
            "marked-stirling" | "marked" => Ok(StructureFamily::MarkedStirling),
            "r-stirling" => match r {
                Some(r) if r >= 1 => Ok(StructureFamily::RStirling(r)),
                _ => Err(Error::Unsupported("r-stirling needs r >= 1".into())),
            },
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// Copies of each value in a word of this family (bars included).
    fn copies(self) -> usize {
        match self {
            StructureFamily::Partition | StructureFamily::Permutation => 1,
            StructureFamily::Stirling | StructureFamily::MarkedStirling => 2,
            StructureFamily::RStirling(r) => r as usize,
            StructureFamily::Legendre => 3,
        }
    }
}

impl fmt::Display for StructureFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub value: u32,
    pub barred: bool,
    pub marked: bool,
}

impl Letter {
    pub const fn plain(value: u32) -> Self {
        Letter { value, barred: false, marked: false }
    }

    pub const fn barred(value: u32) -> Self {
        Letter { value, barred: true, marked: false }
    }

    pub const fn marked(value: u32) -> Self {
        Letter { value, barred: false, marked: true }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.barred {
            write!(f, "'")?;
        }
        if self.marked {
            write!(f, "*")?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid letter {s:?}"));
        let digits = s.trim_end_matches(['\'', '*']);
        let suffix = &s[digits.len()..];
        let value: u32 = digits.parse().map_err(|_| bad())?;
        let letter = match suffix {
            "" => Letter::plain(value),
            "'" => Letter::barred(value),
            "*" => Letter::marked(value),
            _ => return Err(bad()),
        };
        if value == 0 {
            return Err(bad());
        }
        Ok(letter)
    }
}

/// A valid word of one of the structure families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledWord {
    family: StructureFamily,
    letters: Vec<Letter>,
}

impl LabeledWord {
    /// Validates `letters` against the family's defining condition.
    pub fn new(family: StructureFamily, letters: Vec<Letter>) -> Result<Self, Error> {
        validate(family, &letters)?;
        Ok(LabeledWord { family, letters })
    }

    pub(crate) fn new_unchecked(family: StructureFamily, letters: Vec<Letter>) -> Self {
        debug_assert!(validate(family, &letters).is_ok(), "invalid {family} word {letters:?}");
        LabeledWord { family, letters }
    }

    /// Parses the space-separated form, e.g. `"1 1* 2 2"` or `"1' 1 1"`.
    pub fn parse(family: StructureFamily, s: &str) -> Result<Self, Error> {
        let letters = s.split_whitespace().map(str::parse).collect::<Result<Vec<Letter>, _>>()?;
        LabeledWord::new(family, letters)
    }

    pub fn family(&self) -> StructureFamily {
        self.family
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The order `n` of the word.
    pub fn order(&self) -> usize {
        self.letters.len() / self.family.copies()
    }

    /// Value at 1-based position `i`, with `0` at positions `0` and `len + 1`.
    pub(crate) fn value_at(&self, i: usize) -> u32 {
        if i == 0 || i > self.letters.len() {
            0
        } else {
            self.letters[i - 1].value
        }
    }
}

impl fmt::Display for LabeledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn invalid(family: StructureFamily, letters: &[Letter], why: &str) -> Error {
    let word: Vec<String> = letters.iter().map(Letter::to_string).collect();
    Error::InvalidWord(format!("{} as {family}: {why}", word.join(" ")))
}

/// Letters strictly between the first and last unbarred copy of each value
/// must satisfy `ok(letter_value, value)`.
fn between_copies_ok(letters: &[Letter], ok: impl Fn(u32, u32) -> bool) -> bool {
    let mut span: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for (i, l) in letters.iter().enumerate().filter(|(_, l)| !l.barred) {
        span.entry(l.value).and_modify(|s| s.1 = i).or_insert((i, i));
    }
    span.iter()
        .all(|(&v, &(first, last))| letters[first + 1..last].iter().all(|l| ok(l.value, v)))
}

fn validate(family: StructureFamily, letters: &[Letter]) -> Result<(), Error> {
    let fail = |why: &str| Err(invalid(family, letters, why));
    let copies = family.copies();
    if !letters.len().is_multiple_of(copies) {
        return fail("length is not a multiple of the copy count");
    }
    let n = (letters.len() / copies) as u32;
    if family != StructureFamily::Legendre && letters.iter().any(|l| l.barred) {
        return fail("bars only occur in Legendre-Stirling words");
    }
    if family != StructureFamily::MarkedStirling && letters.iter().any(|l| l.marked) {
        return fail("marks only occur in marked Stirling words");
    }

    if family == StructureFamily::Partition {
        let mut max = 0;
        for l in letters {
            if l.value == 0 || l.value > max + 1 {
                return fail("not a restricted growth word");
            }
            max = max.max(l.value);
        }
        return Ok(());
    }

    // Multiset content.
    let mut plain = vec![0usize; n as usize + 1];
    let mut bars = vec![0usize; n as usize + 1];
    for l in letters {
        if l.value == 0 || l.value > n {
            return fail("letter out of range");
        }
        if l.barred {
            bars[l.value as usize] += 1;
        } else {
            plain[l.value as usize] += 1;
        }
    }
    let (want_plain, want_bars) = match family {
        StructureFamily::Legendre => (2, 1),
        _ => (copies, 0),
    };
    if (1..=n as usize).any(|v| plain[v] != want_plain || bars[v] != want_bars) {
        return fail("wrong multiset");
    }

    let condition = match family {
        StructureFamily::Permutation => true,
        StructureFamily::Stirling | StructureFamily::MarkedStirling => between_copies_ok(letters, |w, v| w > v),
        StructureFamily::RStirling(_) => between_copies_ok(letters, |w, v| w >= v),
        StructureFamily::Legendre => between_copies_ok(letters, |w, v| w > v),
        StructureFamily::Partition => unreachable!(),
    };
    if !condition {
        return fail("a letter between two equal letters is too small");
    }

    if family == StructureFamily::MarkedStirling {
        let mut seen = vec![0usize; n as usize + 1];
        for (i, l) in letters.iter().enumerate() {
            seen[l.value as usize] += 1;
            if l.marked {
                let next = letters.get(i + 1).map_or(0, |m| m.value);
                if seen[l.value as usize] != 2 || l.value >= next {
                    return fail("a mark must sit on a second occurrence followed by a larger letter");
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_serialization() {
        let w = LabeledWord::parse(StructureFamily::MarkedStirling, "1 1* 2 2").unwrap();
        assert_eq!(w.to_string(), "1 1* 2 2");
        assert_eq!(w.order(), 2);
        let l = LabeledWord::parse(StructureFamily::Legendre, "1' 1 2' 2 3 3 2 3' 1").unwrap();
        assert_eq!(l.to_string(), "1' 1 2' 2 3 3 2 3' 1");
        assert_eq!(l.order(), 3);
    }

    #[test]
    fn stirling_condition() {
        assert!(LabeledWord::parse(StructureFamily::Stirling, "1 2 2 1").is_ok());
        assert!(LabeledWord::parse(StructureFamily::Stirling, "1 2 1 2").is_err());
        assert!(LabeledWord::parse(StructureFamily::Stirling, "1 1 2").is_err());
    }

    #[test]
    fn legendre_condition_compares_values_only() {
        assert!(LabeledWord::parse(StructureFamily::Legendre, "1 1 1'").is_ok());
        assert!(LabeledWord::parse(StructureFamily::Legendre, "1' 1 1").is_ok());
        assert!(LabeledWord::parse(StructureFamily::Legendre, "1 1' 1").is_err());
    }

    #[test]
    fn marking_rule() {
        assert!(LabeledWord::parse(StructureFamily::MarkedStirling, "1 1* 2 2").is_ok());
        // final letter is followed by the 0 sentinel
        assert!(LabeledWord::parse(StructureFamily::MarkedStirling, "1 1 2 2*").is_err());
        // first occurrence
        assert!(LabeledWord::parse(StructureFamily::MarkedStirling, "1* 1 2 2").is_err());
        // followed by a smaller letter
        assert!(LabeledWord::parse(StructureFamily::MarkedStirling, "2 2* 1 1").is_err());
        assert!(LabeledWord::parse(StructureFamily::Stirling, "1 1* 2 2").is_err());
    }

    #[test]
    fn r_stirling_allows_equal_letters_between() {
        assert!(LabeledWord::parse(StructureFamily::RStirling(3), "1 1 1").is_ok());
        assert!(LabeledWord::parse(StructureFamily::RStirling(3), "1 2 2 2 1 1").is_ok());
        assert!(LabeledWord::parse(StructureFamily::RStirling(3), "1 2 1 2 2 1").is_err());
    }

    #[test]
    fn partitions_are_restricted_growth_words() {
        assert!(LabeledWord::parse(StructureFamily::Partition, "1 1 2 1 3").is_ok());
        assert!(LabeledWord::parse(StructureFamily::Partition, "1 3 2").is_err());
        assert!(LabeledWord::parse(StructureFamily::Partition, "2 1").is_err());
    }

    #[test]
    fn family_names() {
        assert_eq!(StructureFamily::parse("marked-stirling", None).unwrap(), StructureFamily::MarkedStirling);
        assert_eq!(StructureFamily::parse("r_stirling", Some(3)).unwrap(), StructureFamily::RStirling(3));
        assert!(StructureFamily::parse("r-stirling", None).is_err());
        assert!(StructureFamily::parse("tree", None).is_err());
    }
}
