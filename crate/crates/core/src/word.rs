//! Words in the symbols `+` and `-` and their run-length form.
//!
//! A word of crossing number `c` is stored as its `c` run lengths. Signs are
//! implicit: run 1 is `+`, run 2 is `-`, and so on, so a word with an odd
//! crossing number ends in `+` and one with an even crossing number ends in
//! `-`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result, WordError};

/// Smallest crossing number of a 2-bridge knot.
pub const MIN_CROSSINGS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Sign of the run at 0-based index `i`.
    pub fn of_run(i: usize) -> Sign {
        if i.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Accepts ASCII `+`/`-` and the typographic minus U+2212.
    pub fn from_char(ch: char) -> Option<Sign> {
        match ch {
            '+' => Some(Sign::Plus),
            '-' | '\u{2212}' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A member of T(c): run lengths in `{1, 2}`, first and last run single,
/// total length congruent to 1 mod 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RunWord {
    runs: Vec<u8>,
}

impl RunWord {
    /// Validates `runs` against every membership condition for T(c).
    pub fn new(runs: Vec<u8>) -> Result<Self> {
        for (i, &r) in runs.iter().enumerate() {
            if r != 1 && r != 2 {
                return Err(WordError::BadRunLength { index: i + 1, len: r as u32 }.into());
            }
        }
        Self::check_shape(&runs)?;
        Ok(Self { runs })
    }

    fn check_shape(runs: &[u8]) -> Result<(), WordError> {
        if runs.is_empty() {
            return Err(WordError::Empty);
        }
        if runs.len() < MIN_CROSSINGS {
            return Err(WordError::TooFewRuns(runs.len()));
        }
        if runs[0] != 1 {
            return Err(WordError::FirstRunDouble(runs[0]));
        }
        let last = runs[runs.len() - 1];
        if last != 1 {
            return Err(WordError::LastRunDouble(last));
        }
        let len: usize = runs.iter().map(|&r| r as usize).sum();
        if len % 3 != 1 {
            return Err(WordError::LengthNotOneModThree(len));
        }
        Ok(())
    }

    /// Skips validation; callers guarantee membership.
    pub(crate) fn from_runs_unchecked(runs: Vec<u8>) -> Self {
        debug_assert!(Self::new(runs.clone()).is_ok(), "not a T(c) word: {runs:?}");
        Self { runs }
    }

    /// Parses a comma-separated run list such as `"1,2,1"`.
    pub fn from_runs_str(s: &str) -> Result<Self> {
        let runs = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad run length {t:?} in {s:?}")))
            })
            .enumerate()
            .map(|(i, r)| {
                let r = r?;
                u8::try_from(r)
                    .ok()
                    .filter(|r| *r == 1 || *r == 2)
                    .ok_or(Error::InvalidWord(WordError::BadRunLength { index: i + 1, len: r }))
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(runs)
    }

    /// Parses either a symbol word (`"+--+"`) or a run list (`"1,2,1"`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.chars().next().is_some_and(|ch| ch.is_ascii_digit()) {
            Self::from_runs_str(s)
        } else {
            s.parse::<SymbolWord>()?.to_run_word()
        }
    }

    pub fn runs(&self) -> &[u8] {
        &self.runs
    }

    /// Number of runs, which is the crossing number of the alternating diagram.
    pub fn crossing_number(&self) -> usize {
        self.runs.len()
    }

    /// Symbol length ℓ of the expanded word.
    pub fn length(&self) -> usize {
        self.runs.iter().map(|&r| r as usize).sum()
    }

    pub fn to_symbols(&self) -> SymbolWord {
        let mut symbols = Vec::with_capacity(self.length());
        for (i, &r) in self.runs.iter().enumerate() {
            let sign = Sign::of_run(i);
            symbols.extend(std::iter::repeat_n(sign, r as usize));
        }
        SymbolWord(symbols)
    }

    /// The comma-joined run list, e.g. `"1,2,1"`.
    pub fn runs_string(&self) -> String {
        let mut out = String::with_capacity(self.runs.len() * 2);
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push(char::from(b'0' + r));
        }
        out
    }

    fn reversed_runs(&self) -> RunWord {
        let mut runs = self.runs.clone();
        runs.reverse();
        RunWord::from_runs_unchecked(runs)
    }

    /// The reverse r(w). Only closes on T(c) for odd c; even c would put a
    /// `-` first.
    pub fn reverse(&self) -> Result<RunWord> {
        if self.crossing_number().is_multiple_of(2) {
            return Err(Error::WrongParity { op: "reverse", expected: "an odd", c: self.crossing_number() });
        }
        Ok(self.reversed_runs())
    }

    /// The reverse mirror r̄(w). Only closes on T(c) for even c.
    pub fn mirror_reverse(&self) -> Result<RunWord> {
        if self.crossing_number() % 2 == 1 {
            return Err(Error::WrongParity {
                op: "mirror_reverse",
                expected: "an even",
                c: self.crossing_number(),
            });
        }
        Ok(self.reversed_runs())
    }

    /// Whichever of [`reverse`](Self::reverse) and
    /// [`mirror_reverse`](Self::mirror_reverse) matches the parity of c.
    pub fn partner(&self) -> RunWord {
        self.reversed_runs()
    }

    /// Fixed by the parity-correct involution; equivalently the run sequence
    /// is a palindrome.
    pub fn is_palindromic_type(&self) -> bool {
        self.runs.iter().eq(self.runs.iter().rev())
    }
}

impl fmt::Display for RunWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &r) in self.runs.iter().enumerate() {
            let ch = Sign::of_run(i).as_char();
            for _ in 0..r {
                fmt::Write::write_char(f, ch)?;
            }
        }
        Ok(())
    }
}

impl FromStr for RunWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RunWord::parse(s)
    }
}

impl Serialize for RunWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A raw word over `{+, -}`; not necessarily a member of T(c).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolWord(Vec<Sign>);

impl SymbolWord {
    pub fn new(symbols: Vec<Sign>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Maximal same-symbol blocks as `(sign, length)`.
    pub fn blocks(&self) -> Vec<(Sign, usize)> {
        let mut out: Vec<(Sign, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((sign, n)) if *sign == s => *n += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Symbol-level reverse.
    pub fn reverse(&self) -> SymbolWord {
        SymbolWord(self.0.iter().rev().copied().collect())
    }

    /// Symbol-level reverse mirror: reverse, then swap `+` and `-`.
    pub fn mirror_reverse(&self) -> SymbolWord {
        SymbolWord(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    /// Checks T(c) membership and returns the run form.
    pub fn to_run_word(&self) -> Result<RunWord> {
        if self.0.is_empty() {
            return Err(WordError::Empty.into());
        }
        if self.0[0] != Sign::Plus {
            return Err(WordError::StartsWithMinus.into());
        }
        let blocks = self.blocks();
        let mut runs = Vec::with_capacity(blocks.len());
        for (i, &(_, len)) in blocks.iter().enumerate() {
            if len > 2 {
                return Err(WordError::RunTooLong { index: i + 1, len }.into());
            }
            runs.push(len as u8);
        }
        RunWord::new(runs)
    }
}

impl fmt::Display for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            fmt::Write::write_char(f, s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SymbolWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(WordError::Empty.into());
        }
        s.chars()
            .map(|ch| Sign::from_char(ch).ok_or(Error::InvalidWord(WordError::BadSymbol(ch))))
            .collect::<Result<Vec<_>>>()
            .map(SymbolWord)
    }
}
