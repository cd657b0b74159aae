use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::{enumerate, partition_blocks, LabeledWord, StructureFamily};
use crate::Error;

/// Index sets of a word, positions 1-based.
///
/// `asc`, `des` and `plat` use the plain definitions (`π_{i-1} < π_i`,
/// `π_i > π_{i+1}`, `π_{i-1} = π_i`); `jplat` follows the r-Stirling
/// convention (`π_i = π_{i+1}` with `π_i` seen `j` times up to `i`). The
/// `ls_*` sets are only filled for Legendre-Stirling words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StatSets {
    pub asc: BTreeSet<usize>,
    pub des: BTreeSet<usize>,
    pub plat: BTreeSet<usize>,
    pub jplat: BTreeMap<usize, BTreeSet<usize>>,
    pub ls_x: BTreeSet<usize>,
    pub ls_y: BTreeSet<usize>,
    pub ls_z: BTreeSet<usize>,
    pub ls_u: BTreeSet<usize>,
    pub ls_v: BTreeSet<usize>,
}

impl StatSets {
    /// Descents at a barred letter; equal to `ls_v`.
    pub fn barred_des(&self) -> &BTreeSet<usize> {
        &self.ls_v
    }
}

/// Every statistic set of `w`. Partitions carry no positional statistics;
/// use [`partition_blocks`] for them.
pub fn statistics(w: &LabeledWord) -> Result<StatSets, Error> {
    if w.family() == StructureFamily::Partition {
        return Err(Error::Unsupported("partitions have no ascent/descent statistics".into()));
    }
    let len = w.len();
    let letters = w.letters();
    let mut s = StatSets::default();
    let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
    for i in 1..=len {
        let (prev, cur, next) = (w.value_at(i - 1), w.value_at(i), w.value_at(i + 1));
        let letter = letters[i - 1];
        let occurrence = if letter.barred {
            0
        } else {
            let c = seen.entry(cur).or_insert(0);
            *c += 1;
            *c
        };
        if prev < cur {
            s.asc.insert(i);
        }
        if cur > next {
            s.des.insert(i);
        }
        if prev == cur {
            s.plat.insert(i);
        }
        if cur == next && !letter.barred {
            s.jplat.entry(occurrence).or_default().insert(i);
        }
        if w.family() == StructureFamily::Legendre {
            match (letter.barred, prev <= cur, cur > next) {
                (true, rise, fall) => {
                    if rise {
                        s.ls_u.insert(i);
                    }
                    if fall {
                        s.ls_v.insert(i);
                    }
                }
                (false, rise, fall) => {
                    if rise && occurrence == 1 {
                        s.ls_x.insert(i);
                    }
                    if rise && occurrence == 2 {
                        s.ls_z.insert(i);
                    }
                    if fall {
                        s.ls_y.insert(i);
                    }
                }
            }
        }
    }
    Ok(s)
}

/// A statistic counted by [`coefficient_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Asc,
    Des,
    Plat,
    JPlat(usize),
    /// Descents at barred letters (Legendre words).
    BarredDes,
    /// Number of blocks (partitions).
    Blocks,
}

impl Statistic {
    fn count(self, w: &LabeledWord) -> Result<usize, Error> {
        if let Statistic::Blocks = self {
            if w.family() != StructureFamily::Partition {
                return Err(Error::Unsupported("blocks is a partition statistic".into()));
            }
            return Ok(partition_blocks(w).len());
        }
        let s = statistics(w)?;
        Ok(match self {
            Statistic::Asc => s.asc.len(),
            Statistic::Des => s.des.len(),
            Statistic::Plat => s.plat.len(),
            Statistic::JPlat(j) => s.jplat.get(&j).map_or(0, BTreeSet::len),
            Statistic::BarredDes => s.ls_v.len(),
            Statistic::Blocks => unreachable!(),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Asc => f.write_str("asc"),
            Statistic::Des => f.write_str("des"),
            Statistic::Plat => f.write_str("plat"),
            Statistic::JPlat(j) => write!(f, "jplat{j}"),
            Statistic::BarredDes => f.write_str("bdes"),
            Statistic::Blocks => f.write_str("blocks"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().to_ascii_lowercase();
        Ok(match s.as_str() {
            "asc" => Statistic::Asc,
            "des" => Statistic::Des,
            "plat" => Statistic::Plat,
            "bdes" => Statistic::BarredDes,
            "blocks" => Statistic::Blocks,
            _ => match s.strip_prefix("jplat").map(str::parse) {
                Some(Ok(j)) if j >= 1 => Statistic::JPlat(j),
                _ => return Err(Error::UnknownName(s)),
            },
        })
    }
}

/// Joint histogram of `stats` over all words of order `n`.
pub fn coefficient_table(
    family: StructureFamily,
    n: usize,
    stats: &[Statistic],
) -> Result<BTreeMap<Vec<usize>, u64>, Error> {
    let mut table = BTreeMap::new();
    for w in enumerate(family, n) {
        let key = stats.iter().map(|s| s.count(&w)).collect::<Result<Vec<_>, _>>()?;
        *table.entry(key).or_insert(0) += 1;
    }
    Ok(table)
}

/// CSV with one column per statistic followed by `count`.
pub fn table_to_csv(stats: &[Statistic], table: &BTreeMap<Vec<usize>, u64>) -> String {
    let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let header: Vec<String> = stats.iter().map(ToString::to_string).chain(["count".to_string()]).collect();
    out.write_record(&header).expect("writing to memory");
    for (key, count) in table {
        let row: Vec<String> = key.iter().map(ToString::to_string).chain([count.to_string()]).collect();
        out.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(out.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn legendre_example_sets() {
        let w = LabeledWord::parse(StructureFamily::Legendre, "1' 1 2' 2 3 3 2 3' 1").unwrap();
        let s = statistics(&w).unwrap();
        assert_eq!(s.ls_x, set(&[2, 4, 5]));
        assert_eq!(s.ls_y, set(&[6, 9]));
        assert_eq!(s.ls_z, set(&[6]));
        assert_eq!(s.ls_u, set(&[1, 3, 8]));
        assert_eq!(s.ls_v, set(&[8]));
    }

    #[test]
    fn small_words() {
        let w = LabeledWord::parse(StructureFamily::Stirling, "1 1").unwrap();
        let s = statistics(&w).unwrap();
        assert_eq!((s.asc, s.plat, s.des), (set(&[1]), set(&[2]), set(&[2])));
        let p = LabeledWord::parse(StructureFamily::Permutation, "1").unwrap();
        let s = statistics(&p).unwrap();
        assert_eq!((s.asc, s.des), (set(&[1]), set(&[1])));
    }

    #[test]
    fn j_plateaux_count_occurrences() {
        let w = LabeledWord::parse(StructureFamily::RStirling(3), "1 1 2 2 2 1").unwrap();
        let s = statistics(&w).unwrap();
        assert_eq!(s.jplat[&1], set(&[1, 3]));
        assert_eq!(s.jplat[&2], set(&[4]));
    }

    #[test]
    fn tables_and_csv() {
        let c2 = coefficient_table(StructureFamily::Stirling, 2, &[Statistic::Des]).unwrap();
        assert_eq!(c2, BTreeMap::from([(vec![1], 1), (vec![2], 2)]));
        assert_eq!(table_to_csv(&[Statistic::Des], &c2), "des,count\n1,1\n2,2\n");
        let a3 = coefficient_table(StructureFamily::Permutation, 3, &[Statistic::Des]).unwrap();
        assert_eq!(a3, BTreeMap::from([(vec![1], 1), (vec![2], 4), (vec![3], 1)]));
        let s4 = coefficient_table(StructureFamily::Partition, 4, &[Statistic::Blocks]).unwrap();
        assert_eq!(s4.values().copied().collect::<Vec<_>>(), vec![1, 7, 6, 1]);
        assert!(coefficient_table(StructureFamily::Partition, 2, &[Statistic::Des]).is_err());
    }

    #[test]
    fn statistic_names_round_trip() {
        for s in ["asc", "des", "plat", "jplat2", "bdes", "blocks"] {
            assert_eq!(s.parse::<Statistic>().unwrap().to_string(), s);
        }
        assert!("jplat0".parse::<Statistic>().is_err());
    }
}
