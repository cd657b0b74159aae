//! Two independent enumerators per family: growth by insertion of the
//! largest value (the same moves the grammars encode), and a brute-force
//! filter over all arrangements of the underlying multiset. Both return the
//! words sorted, so their outputs can be compared directly.

use super::{validate, LabeledWord, Letter, StructureFamily};

/// All words of order `n`, built by inserting the largest letter(s) into
/// every gap of every word of order `n - 1`. Sorted and duplicate-free.
pub fn enumerate(family: StructureFamily, n: usize) -> Vec<LabeledWord> {
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for k in 1..=n as u32 {
        words = match family {
            StructureFamily::Partition => grow_partition(&words),
            StructureFamily::Permutation => insert_block(&words, &[Letter::plain(k)]),
            StructureFamily::Stirling => insert_block(&words, &[Letter::plain(k); 2]),
            StructureFamily::RStirling(r) => insert_block(&words, &vec![Letter::plain(k); r as usize]),
            StructureFamily::Legendre => {
                let barred = insert_block(&words, &[Letter::barred(k)]);
                insert_block(&barred, &[Letter::plain(k); 2])
            }
            StructureFamily::MarkedStirling => grow_marked(&words, k),
        };
    }
    finish(family, words)
}

/// All words of order `n`, by filtering every arrangement of the family's
/// multiset through the validity predicate. Exponential; meant for tests.
pub fn enumerate_brute_force(family: StructureFamily, n: usize) -> Vec<LabeledWord> {
    let words: Vec<Vec<Letter>> = match family {
        StructureFamily::Partition => all_words(n, n as u32),
        StructureFamily::MarkedStirling => {
            let mut out = Vec::new();
            for w in multiset_permutations(base_multiset(StructureFamily::Stirling, n)) {
                if validate(StructureFamily::Stirling, &w).is_err() {
                    continue;
                }
                for mask in 0u64..1 << w.len() {
                    let marked: Vec<Letter> = w
                        .iter()
                        .enumerate()
                        .map(|(i, &l)| Letter { marked: mask >> i & 1 == 1, ..l })
                        .collect();
                    out.push(marked);
                }
            }
            out
        }
        _ => multiset_permutations(base_multiset(family, n)),
    };
    let valid = words.into_iter().filter(|w| validate(family, w).is_ok()).collect();
    finish(family, valid)
}

/// Blocks of a partition word, each sorted, listed in order of their minima.
pub fn partition_blocks(word: &LabeledWord) -> Vec<Vec<u32>> {
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for (i, l) in word.letters().iter().enumerate() {
        let b = l.value as usize - 1;
        if b == blocks.len() {
            blocks.push(Vec::new());
        }
        blocks[b].push(i as u32 + 1);
    }
    blocks
}

fn finish(family: StructureFamily, mut words: Vec<Vec<Letter>>) -> Vec<LabeledWord> {
    words.sort_unstable();
    words.dedup();
    words.into_iter().map(|w| LabeledWord::new_unchecked(family, w)).collect()
}

fn insert_block(words: &[Vec<Letter>], block: &[Letter]) -> Vec<Vec<Letter>> {
    let mut out = Vec::with_capacity(words.len() * (words.first().map_or(0, Vec::len) + 1));
    for w in words {
        for gap in 0..=w.len() {
            let mut next = Vec::with_capacity(w.len() + block.len());
            next.extend_from_slice(&w[..gap]);
            next.extend_from_slice(block);
            next.extend_from_slice(&w[gap..]);
            out.push(next);
        }
    }
    out
}

/// Element `k` joins one of the existing blocks or opens a new one.
fn grow_partition(words: &[Vec<Letter>]) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for w in words {
        let blocks = w.iter().map(|l| l.value).max().unwrap_or(0);
        for label in 1..=blocks + 1 {
            let mut next = w.clone();
            next.push(Letter::plain(label));
            out.push(next);
        }
    }
    out
}

/// Inserts `k k` into every gap. The letter just before the gap becomes
/// newly markable when it is a second occurrence that was not already
/// followed by a larger letter; both marking choices are then emitted.
/// Existing marks stay valid since `k` exceeds every other letter.
fn grow_marked(words: &[Vec<Letter>], k: u32) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for w in words {
        for gap in 0..=w.len() {
            let mut next = Vec::with_capacity(w.len() + 2);
            next.extend_from_slice(&w[..gap]);
            next.extend_from_slice(&[Letter::plain(k); 2]);
            next.extend_from_slice(&w[gap..]);
            out.push(next.clone());
            if gap == 0 {
                continue;
            }
            let prev = w[gap - 1];
            let second = w[..gap - 1].iter().any(|l| l.value == prev.value);
            let old_next = w.get(gap).map_or(0, |l| l.value);
            if second && !prev.marked && old_next <= prev.value {
                next[gap - 1].marked = true;
                out.push(next);
            }
        }
    }
    out
}

fn base_multiset(family: StructureFamily, n: usize) -> Vec<Letter> {
    let mut letters = Vec::new();
    for v in 1..=n as u32 {
        match family {
            StructureFamily::Legendre => {
                letters.extend([Letter::plain(v), Letter::plain(v), Letter::barred(v)]);
            }
            _ => letters.extend(std::iter::repeat_n(Letter::plain(v), family.copies())),
        }
    }
    letters
}

/// Distinct permutations of a multiset in lexicographic order.
fn multiset_permutations(mut items: Vec<Letter>) -> Vec<Vec<Letter>> {
    items.sort_unstable();
    let mut out = vec![items.clone()];
    while next_permutation(&mut items) {
        out.push(items.clone());
    }
    out
}

fn next_permutation(items: &mut [Letter]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Every word of length `len` over `1..=alphabet`.
fn all_words(len: usize, alphabet: u32) -> Vec<Vec<Letter>> {
    let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=alphabet).map(move |v| {
                    let mut next = w.clone();
                    next.push(Letter::plain(v));
                    next
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(words: &[LabeledWord]) -> Vec<String> {
        words.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn marked_order_two() {
        let words = enumerate(StructureFamily::MarkedStirling, 2);
        assert_eq!(strings(&words), vec!["1 1 2 2", "1 1* 2 2", "1 2 2 1", "2 2 1 1"]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(StructureFamily::Stirling, 2).len(), 3);
        assert_eq!(enumerate(StructureFamily::Legendre, 1).len(), 2);
        assert_eq!(enumerate(StructureFamily::Legendre, 2).len(), 40);
        assert_eq!(enumerate(StructureFamily::Permutation, 1).len(), 1);
        assert_eq!(enumerate(StructureFamily::Partition, 4).len(), 15);
        assert_eq!(enumerate(StructureFamily::RStirling(3), 3).len(), 28);
    }

    #[test]
    fn insertion_matches_brute_force() {
        let cases = [
            (StructureFamily::Permutation, 5),
            (StructureFamily::Partition, 5),
            (StructureFamily::Stirling, 4),
            (StructureFamily::RStirling(3), 3),
            (StructureFamily::Legendre, 2),
            (StructureFamily::MarkedStirling, 3),
        ];
        for (family, n) in cases {
            assert_eq!(enumerate(family, n), enumerate_brute_force(family, n), "{family} n={n}");
        }
    }

    #[test]
    fn blocks_of_partition_word() {
        let w = LabeledWord::parse(StructureFamily::Partition, "1 2 1 3 2 1").unwrap();
        assert_eq!(partition_blocks(&w), vec![vec![1, 3, 6], vec![2, 5], vec![4]]);
    }
}
