//! Exhaustive enumeration of T(c) and T_p(c), the four-case split on the
//! penultimate two runs, tail reductions, and grouping words into knots.
//!
//! Words are generated from bitmasks over the free runs. Bit `k` of the
//! mask (counting from the most significant end) is set when free run `k`
//! is a double, so increasing mask order is lexicographic order on runs.
//! A contiguous mask range is a set of words sharing a run prefix, which is
//! how callers split the work across threads.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::counting::check_c;
use crate::error::{Error, Result};
use crate::word::RunWord;

/// Largest crossing number whose free runs fit in a `u64` mask.
pub const MAX_ENUMERABLE: usize = 65;

fn check_enumerable(c: usize) -> Result<()> {
    check_c(c)?;
    if c > MAX_ENUMERABLE {
        return Err(Error::CrossingNumberAboveCap { c, cap: MAX_ENUMERABLE });
    }
    Ok(())
}

/// Number of free (interior) runs of a T(c) word.
fn free_runs(c: usize) -> u32 {
    (c - 2) as u32
}

/// Size of the mask space for [`words_in_range`].
pub fn mask_count(c: usize) -> Result<u64> {
    check_enumerable(c)?;
    Ok(1u64 << free_runs(c))
}

/// The T(c) word encoded by `mask`, or `None` when its length is not 1 mod 3.
pub fn word_from_mask(c: usize, mask: u64) -> Option<RunWord> {
    let free = free_runs(c);
    let doubles = (mask & ((1u64 << free) - 1)).count_ones() as usize;
    if (c + doubles) % 3 != 1 {
        return None;
    }
    let mut runs = Vec::with_capacity(c);
    runs.push(1);
    for k in (0..free).rev() {
        runs.push(1 + ((mask >> k) & 1) as u8);
    }
    runs.push(1);
    Some(RunWord::from_runs_unchecked(runs))
}

/// Words of T(c) whose masks fall in `masks`, in lexicographic order.
pub fn words_in_range(c: usize, masks: Range<u64>) -> Result<impl Iterator<Item = RunWord>> {
    let total = mask_count(c)?;
    let masks = masks.start.min(total)..masks.end.min(total);
    Ok(masks.filter_map(move |m| word_from_mask(c, m)))
}

/// All of T(c) in lexicographic order of run sequences.
pub fn enumerate_words(c: usize) -> Result<Vec<RunWord>> {
    Ok(words_in_range(c, 0..u64::MAX)?.collect())
}

/// All of T_p(c), built from the free half of the run sequence rather than
/// by filtering T(c).
pub fn enumerate_palindromic(c: usize) -> Result<Vec<RunWord>> {
    check_c(c)?;
    // Runs 0..half are chosen; the rest mirror them. For odd c the centre
    // run sits at index half - 1.
    let half = c.div_ceil(2);
    let free = (half - 1) as u32;
    if free >= 64 {
        return Err(Error::CrossingNumberAboveCap { c, cap: 2 * 64 });
    }
    let mut out = Vec::new();
    let mut runs = vec![1u8; c];
    for mask in 0..(1u64 << free) {
        for k in 0..free as usize {
            let r = 1 + ((mask >> (free as usize - 1 - k)) & 1) as u8;
            runs[1 + k] = r;
            runs[c - 2 - k] = r;
        }
        let len: usize = runs.iter().map(|&r| r as usize).sum();
        if len % 3 == 1 {
            out.push(RunWord::from_runs_unchecked(runs.clone()));
        }
    }
    Ok(out)
}

/// Which of the four possible shapes the penultimate two runs take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// single, single
    Case1,
    /// double, double
    Case2,
    /// single, double
    Case3,
    /// double, single
    Case4,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::Case1 => "case1",
            CaseTag::Case2 => "case2",
            CaseTag::Case3 => "case3",
            CaseTag::Case4 => "case4",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Smallest c for which the penultimate runs are distinct from run 1.
pub const MIN_CASE_CROSSINGS: usize = 5;

fn check_case_c(w: &RunWord) -> Result<usize> {
    let c = w.crossing_number();
    if c < MIN_CASE_CROSSINGS {
        return Err(Error::CrossingNumberTooSmall { c, min: MIN_CASE_CROSSINGS });
    }
    Ok(c)
}

pub fn classify_case(w: &RunWord) -> Result<CaseTag> {
    let c = check_case_c(w)?;
    let runs = w.runs();
    Ok(match (runs[c - 3], runs[c - 2]) {
        (1, 1) => CaseTag::Case1,
        (2, 2) => CaseTag::Case2,
        (1, 2) => CaseTag::Case3,
        _ => CaseTag::Case4,
    })
}

/// Applies the tail replacement for the word's case and returns the shorter
/// word with its crossing number.
///
/// Written for odd c (the even case swaps every sign):
/// case 1 `+-+` becomes `++-`, case 2 `++--+` becomes `+-`, case 3 `+--+`
/// becomes `+`, case 4 `++-+` becomes `+`.
pub fn reduce_tail(w: &RunWord) -> Result<(RunWord, usize)> {
    let case = classify_case(w)?;
    let runs = w.runs();
    let prefix = &runs[..runs.len() - 3];
    let tail: &[u8] = match case {
        CaseTag::Case1 => &[2, 1],
        CaseTag::Case2 => &[1, 1],
        CaseTag::Case3 | CaseTag::Case4 => &[1],
    };
    let reduced: Vec<u8> = prefix.iter().chain(tail).copied().collect();
    let c = reduced.len();
    let word = RunWord::new(reduced)
        .map_err(|e| Error::Invariant(format!("tail reduction of {w} left T(c): {e}")))?;
    Ok((word, c))
}

/// One 2-bridge knot: the words of T(c) that represent it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotClass {
    /// Lexicographically smaller word of the orbit.
    pub representative: RunWord,
    /// 1 for palindromic type, otherwise 2.
    pub orbit_size: u8,
    pub palindromic: bool,
}

impl KnotClass {
    /// Every word in the orbit, representative first.
    pub fn members(&self) -> Vec<RunWord> {
        if self.palindromic {
            vec![self.representative.clone()]
        } else {
            vec![self.representative.clone(), self.representative.partner()]
        }
    }
}

/// Groups a word list into orbits of the parity-correct involution.
pub fn classes_of(words: &[RunWord]) -> Vec<KnotClass> {
    let mut seen: HashSet<&RunWord> = HashSet::with_capacity(words.len());
    let mut out = Vec::with_capacity(words.len() / 2 + 1);
    let partners: Vec<RunWord> = words.iter().map(RunWord::partner).collect();
    for (w, p) in words.iter().zip(&partners) {
        if seen.contains(w) {
            continue;
        }
        seen.insert(p);
        let palindromic = w == p;
        out.push(KnotClass {
            representative: w.min(p).clone(),
            orbit_size: if palindromic { 1 } else { 2 },
            palindromic,
        });
    }
    out
}

/// Partitions T(c) into knots. Classes come out in lexicographic order of
/// their representatives.
pub fn knot_classes(c: usize) -> Result<Vec<KnotClass>> {
    Ok(classes_of(&enumerate_words(c)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_palindromic, count_words, ernst_sumners_count};
    use num_bigint::BigInt;

    fn w(s: &str) -> RunWord {
        RunWord::parse(s).unwrap()
    }

    fn strings(words: &[RunWord]) -> Vec<String> {
        words.iter().map(ToString::to_string).collect()
    }

    // Independent oracle: every {+,-} string of length l, kept when it
    // parses as a member of T(c).
    fn brute_force(c: usize) -> Vec<RunWord> {
        use crate::word::{Sign, SymbolWord};
        let mut out = Vec::new();
        for len in c..=2 * c {
            for bits in 0u64..(1 << len) {
                let symbols = (0..len)
                    .map(|i| if (bits >> (len - 1 - i)) & 1 == 0 { Sign::Plus } else { Sign::Minus })
                    .collect();
                if let Ok(word) = SymbolWord::new(symbols).to_run_word() {
                    if word.crossing_number() == c {
                        out.push(word);
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_word_sets() {
        assert_eq!(strings(&enumerate_words(3).unwrap()), ["+--+"]);
        assert_eq!(strings(&enumerate_words(4).unwrap()), ["+-+-"]);
        let mut t5 = strings(&enumerate_words(5).unwrap());
        t5.sort();
        let mut expected = vec!["+--++-+", "+-++--+", "+--+--+"];
        expected.sort();
        assert_eq!(t5, expected);
        assert!(matches!(enumerate_words(2), Err(Error::CrossingNumberTooSmall { .. })));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for c in 3..=9 {
            assert_eq!(enumerate_words(c).unwrap(), brute_force(c), "c = {c}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for c in 3..=14 {
            let words = enumerate_words(c).unwrap();
            assert!(words.windows(2).all(|p| p[0] < p[1]), "c = {c}");
        }
    }

    #[test]
    fn prefix_ranges_concatenate_to_the_full_set() {
        let c = 11;
        let total = mask_count(c).unwrap();
        let mut joined = Vec::new();
        for chunk in 0..8 {
            let range = chunk * total / 8..(chunk + 1) * total / 8;
            joined.extend(words_in_range(c, range).unwrap());
        }
        assert_eq!(joined, enumerate_words(c).unwrap());
    }

    #[test]
    fn palindromic_sets() {
        assert_eq!(strings(&enumerate_palindromic(3).unwrap()), ["+--+"]);
        assert_eq!(strings(&enumerate_palindromic(4).unwrap()), ["+-+-"]);
        assert_eq!(strings(&enumerate_palindromic(5).unwrap()), ["+--+--+"]);
        assert_eq!(enumerate_palindromic(7).unwrap().len(), 3);
        assert_eq!(enumerate_palindromic(9).unwrap().len(), 5);
        assert_eq!(enumerate_palindromic(10).unwrap().len(), 5);
    }

    #[test]
    fn palindromic_generation_matches_filtering() {
        for c in 3..=18 {
            let filtered: Vec<_> =
                enumerate_words(c).unwrap().into_iter().filter(RunWord::is_palindromic_type).collect();
            assert_eq!(enumerate_palindromic(c).unwrap(), filtered, "c = {c}");
        }
    }

    #[test]
    fn counts_match_closed_forms() {
        for c in 3..=16 {
            assert_eq!(BigInt::from(enumerate_words(c).unwrap().len()), count_words(c).unwrap());
            assert_eq!(BigInt::from(enumerate_palindromic(c).unwrap().len()), count_palindromic(c).unwrap());
        }
    }

    #[test]
    fn case_classification() {
        assert_eq!(classify_case(&w("+--++-+")).unwrap(), CaseTag::Case4);
        assert_eq!(classify_case(&w("+-++--+")).unwrap(), CaseTag::Case2);
        assert_eq!(classify_case(&w("+--+--+")).unwrap(), CaseTag::Case3);
        assert_eq!(classify_case(&w("+-+-+-+")).unwrap(), CaseTag::Case1);
        assert!(matches!(classify_case(&w("+-+-")), Err(Error::CrossingNumberTooSmall { .. })));
    }

    #[test]
    fn tail_reductions_from_the_worked_tables() {
        // c = 6 words reducing into T(4) and T(5).
        assert_eq!(reduce_tail(&w("+-+-++-")).unwrap(), (w("+-+-"), 4));
        assert_eq!(reduce_tail(&w("+-+--+-")).unwrap(), (w("+-+-"), 4));
        assert_eq!(reduce_tail(&w("+--++--++-")).unwrap(), (w("+--++-+"), 5));
        assert_eq!(reduce_tail(&w("+-++-+-")).unwrap(), (w("+-++--+"), 5));
        assert_eq!(reduce_tail(&w("+--+-+-")).unwrap(), (w("+--+--+"), 5));
        // c = 7 into c = 6.
        assert_eq!(reduce_tail(&w("+-+-+-+")).unwrap(), (w("+-+-++-"), 6));
        assert_eq!(reduce_tail(&w("+-+--++--+")).unwrap(), (w("+-+--+-"), 6));
    }

    #[test]
    fn knot_class_counts() {
        let c5 = knot_classes(5).unwrap();
        assert_eq!(c5.len(), 2);
        assert_eq!(c5.iter().filter(|k| k.palindromic).count(), 1);
        assert_eq!(knot_classes(3).unwrap().len(), 1);
        assert_eq!(knot_classes(7).unwrap().len(), 7);
        for c in 3..=14 {
            let classes = knot_classes(c).unwrap();
            assert_eq!(BigInt::from(classes.len()), ernst_sumners_count(c).unwrap());
            for k in &classes {
                assert_eq!(k.orbit_size == 1, k.palindromic);
                assert!(k.representative <= k.representative.partner());
            }
            let covered: usize = classes.iter().map(|k| k.orbit_size as usize).sum();
            assert_eq!(covered, enumerate_words(c).unwrap().len());
        }
    }
}
