//! Per-crossing-number aggregates and the closed forms they must match.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{check_c, divide_exact};
use crate::diagram::{table_map, GeneratorMap};
use crate::enumerate::{classes_of, enumerate_palindromic, enumerate_words, CaseTag};
use crate::error::{Error, Result};
use crate::exact::{bigint_json, neg_one_pow, pow2, Rational};
use crate::seifert::WordRecord;
use crate::word::RunWord;

/// Largest c aggregated over the full word set unless overridden.
pub const DEFAULT_FULL_CAP: usize = 18;
/// Largest c for palindromic-only totals unless overridden.
pub const DEFAULT_PALINDROMIC_CAP: usize = 24;
/// Default upper end of `verify`.
pub const DEFAULT_VERIFY_MAX: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub full: usize,
    pub palindromic: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { full: DEFAULT_FULL_CAP, palindromic: DEFAULT_PALINDROMIC_CAP }
    }
}

impl Limits {
    /// Raises both caps to at least `cap`.
    pub fn with_cap(cap: usize) -> Self {
        Self { full: cap, palindromic: cap.max(DEFAULT_PALINDROMIC_CAP) }
    }

    pub(crate) fn check_full(&self, c: usize) -> Result<()> {
        check_c(c)?;
        if c > self.full {
            return Err(Error::CrossingNumberAboveCap { c, cap: self.full });
        }
        Ok(())
    }

    pub(crate) fn check_palindromic(&self, c: usize) -> Result<()> {
        check_c(c)?;
        if c > self.palindromic {
            return Err(Error::CrossingNumberAboveCap { c, cap: self.palindromic });
        }
        Ok(())
    }
}

/// Everything aggregated for one crossing number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingStats {
    pub c: usize,
    #[serde(serialize_with = "bigint_json::serialize")]
    pub t: BigInt,
    #[serde(serialize_with = "bigint_json::serialize")]
    pub t_p: BigInt,
    #[serde(serialize_with = "bigint_json::serialize")]
    pub knot_count: BigInt,
    #[serde(serialize_with = "bigint_json::serialize")]
    pub s_total: BigInt,
    #[serde(serialize_with = "bigint_json::serialize")]
    pub s_p_total: BigInt,
    /// Words per case 1..4 (all zero for c < 5).
    #[serde(serialize_with = "serialize_quad")]
    pub case_counts: [BigInt; 4],
    /// Seifert circles per case 1..4 (all zero for c < 5).
    #[serde(serialize_with = "serialize_quad")]
    pub case_s_totals: [BigInt; 4],
    /// Sum of genus over one word per knot.
    #[serde(serialize_with = "bigint_json::serialize")]
    pub genus_sum: BigInt,
    pub avg_seifert: Rational,
    /// Mean genus over knots, summed per knot.
    pub avg_genus: Rational,
    /// The correction term from the closed-form average.
    pub epsilon: Rational,
}

fn serialize_quad<S: serde::Serializer>(v: &[BigInt; 4], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(4))?;
    for n in v {
        match num_traits::ToPrimitive::to_i64(n) {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&n.to_string())?,
        }
    }
    seq.end()
}

impl CrossingStats {
    /// Average genus from the circle totals alone:
    /// (1 + c)/2 - (s + s_p) / (4 |K_c|).
    pub fn avg_genus_from_totals(&self) -> Result<Rational> {
        let half = Rational::new(BigInt::from(1 + self.c), BigInt::from(2))?;
        let circles = Rational::new(&self.s_total + &self.s_p_total, 4 * &self.knot_count)?;
        Ok(half - circles)
    }

    /// c/4 + 1/12 + epsilon.
    pub fn avg_genus_formula(&self) -> Result<Rational> {
        average_genus_formula(self.c)
    }
}

/// Per-word records for all of T(c), in enumeration order.
pub fn word_records(c: usize, map: GeneratorMap) -> Result<Vec<WordRecord>> {
    let words = enumerate_words(c)?;
    words.par_iter().map(|w| WordRecord::with_map(w, map)).collect()
}

/// Full aggregate over T(c).
pub fn aggregate(c: usize, limits: &Limits) -> Result<CrossingStats> {
    aggregate_with(c, limits, table_map)
}

pub fn aggregate_with(c: usize, limits: &Limits, map: GeneratorMap) -> Result<CrossingStats> {
    limits.check_full(c)?;
    let records = word_records(c, map)?;
    let words: Vec<RunWord> = records.iter().map(|r| r.word.clone()).collect();

    let mut s_total = 0u64;
    let mut s_p_total = 0u64;
    let mut t_p = 0u64;
    let mut case_counts = [0u64; 4];
    let mut case_s = [0u64; 4];
    for r in &records {
        s_total += r.s as u64;
        if r.palindromic {
            t_p += 1;
            s_p_total += r.s as u64;
        }
        if let Some(case) = r.case {
            case_counts[case.index()] += 1;
            case_s[case.index()] += r.s as u64;
        }
    }

    // Per-knot route: one representative per knot.
    let classes = classes_of(&words);
    let mut genus_sum = 0u64;
    for k in &classes {
        let i = words
            .binary_search(&k.representative)
            .map_err(|_| Error::Invariant(format!("representative {} not in T({c})", k.representative)))?;
        genus_sum += records[i].genus as u64;
    }
    let knot_count = BigInt::from(classes.len());
    let s_sum = BigInt::from(s_total) + BigInt::from(s_p_total);

    Ok(CrossingStats {
        c,
        t: BigInt::from(records.len()),
        t_p: BigInt::from(t_p),
        knot_count: knot_count.clone(),
        s_total: BigInt::from(s_total),
        s_p_total: BigInt::from(s_p_total),
        case_counts: case_counts.map(BigInt::from),
        case_s_totals: case_s.map(BigInt::from),
        genus_sum: BigInt::from(genus_sum),
        avg_seifert: Rational::new(s_sum, 2 * &knot_count)?,
        avg_genus: Rational::new(BigInt::from(genus_sum), knot_count)?,
        epsilon: epsilon(c)?,
    })
}

/// t_p(c) and s_p(c) by enumerating only the palindromic words.
pub fn palindromic_totals(c: usize, limits: &Limits) -> Result<(BigInt, BigInt)> {
    palindromic_totals_with(c, limits, table_map)
}

pub fn palindromic_totals_with(c: usize, limits: &Limits, map: GeneratorMap) -> Result<(BigInt, BigInt)> {
    limits.check_palindromic(c)?;
    let words = enumerate_palindromic(c)?;
    let s: u64 = words
        .par_iter()
        .map(|w| WordRecord::with_map(w, map).map(|r| r.s as u64))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok((BigInt::from(words.len()), BigInt::from(s)))
}

/// s(c) = ((3c+5) 2^(c-3) + (-1)^c (5-3c)) / 9.
pub fn s_closed_form(c: usize) -> Result<BigInt> {
    check_c(c)?;
    let ci = c as i64;
    let num = BigInt::from(3 * ci + 5) * pow2(c as u32 - 3) + neg_one_pow(ci) * (5 - 3 * ci);
    divide_exact(num, 9, "s(c)")
}

/// s_p(c), split by parity of c.
pub fn sp_closed_form(c: usize) -> Result<BigInt> {
    check_c(c)?;
    let ci = c as i64;
    let num = if c % 2 == 1 {
        BigInt::from(3 * ci + 1) * pow2((c as u32 - 3) / 2) + neg_one_pow((ci - 1) / 2) * (1 - 3 * ci)
    } else {
        BigInt::from(3 * ci + 4) * pow2((c as u32 - 4) / 2) + neg_one_pow((ci - 2) / 2) * (1 - 3 * ci)
    };
    divide_exact(num, 9, "s_p(c)")
}

/// The correction term epsilon(c), one branch per residue of c mod 4.
pub fn epsilon(c: usize) -> Result<Rational> {
    check_c(c)?;
    let ci = c as i64;
    let cu = c as u32;
    let main = pow2(cu - 3);
    let (num, den) = match c % 4 {
        0 => {
            let h = pow2((cu - 4) / 2);
            (&h - 4, 12 * (main + h))
        }
        1 => (BigInt::from(1), 3 * pow2((cu - 3) / 2)),
        2 => {
            let h = pow2((cu - 4) / 2);
            (&h + (3 * ci - 11), 12 * (main + h - 1))
        }
        _ => (pow2(cu.div_ceil(2)) + (11 - 3 * ci), 12 * (main + pow2((cu - 3) / 2) + 1)),
    };
    Rational::new(num, den)
}

/// c/4 + 1/12 + epsilon(c).
pub fn average_genus_formula(c: usize) -> Result<Rational> {
    let base = Rational::new(BigInt::from(3 * c + 1), BigInt::from(12))?;
    Ok(base + epsilon(c)?)
}

/// Whether |epsilon(c)| < 2^(-(c-10)/2), compared exactly by squaring.
pub fn epsilon_decay_holds(c: usize) -> Result<bool> {
    let e = epsilon(c)?;
    let sq = &e * &e;
    let bound = if c <= 10 {
        Rational::from_integer(pow2(10 - c as u32))
    } else {
        Rational::new(BigInt::from(1), pow2(c as u32 - 10))?
    };
    Ok(sq < bound)
}

/// Case tags in index order, for labelling `case_counts`.
pub fn case_labels() -> [&'static str; 4] {
    CaseTag::ALL.map(CaseTag::name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    // Independent route for s(c): iterate the recursion from s(3) = 2,
    // s(4) = 3 with t(c) = J(c - 2).
    fn s_by_recursion(c: usize) -> BigInt {
        let t = |c: usize| crate::counting::count_words(c).unwrap();
        let mut s = vec![big(0), big(0), big(0), big(2), big(3)];
        for k in 5..=c {
            let next = &s[k - 1] + 2 * &s[k - 2] + 3 * t(k - 2);
            s.push(next);
        }
        s[c].clone()
    }

    fn sp_by_recursion(c: usize) -> BigInt {
        let tp = |c: usize| crate::counting::count_palindromic(c).unwrap();
        let mut s = vec![big(0), big(0), big(0), big(2), big(3), big(2), big(3)];
        for k in 7..=c {
            let next = &s[k - 2] + 2 * &s[k - 4] + 6 * tp(k - 4);
            s.push(next);
        }
        s[c].clone()
    }

    #[test]
    fn closed_form_anchors() {
        assert_eq!(s_closed_form(3).unwrap(), big(2));
        assert_eq!(s_closed_form(4).unwrap(), big(3));
        assert_eq!(s_closed_form(5).unwrap(), big(10));
        assert_eq!(s_closed_form(6).unwrap(), big(19));
        assert_eq!(sp_closed_form(3).unwrap(), big(2));
        assert_eq!(sp_closed_form(4).unwrap(), big(3));
        assert_eq!(sp_closed_form(5).unwrap(), big(2));
        assert_eq!(sp_closed_form(6).unwrap(), big(3));
        assert_eq!(sp_closed_form(7).unwrap(), big(12));
        assert_eq!(sp_closed_form(9).unwrap(), big(22));
    }

    #[test]
    fn closed_forms_match_recursions() {
        for c in 3..=64 {
            assert_eq!(s_closed_form(c).unwrap(), s_by_recursion(c), "s({c})");
            assert_eq!(sp_closed_form(c).unwrap(), sp_by_recursion(c), "s_p({c})");
        }
    }

    #[test]
    fn epsilon_branches() {
        assert_eq!(epsilon(3).unwrap(), r(1, 6));
        assert_eq!(epsilon(4).unwrap(), r(-1, 12));
        assert_eq!(epsilon(5).unwrap(), r(1, 6));
        assert_eq!(average_genus_formula(3).unwrap(), r(1, 1));
        assert_eq!(average_genus_formula(4).unwrap(), r(1, 1));
        assert_eq!(average_genus_formula(5).unwrap(), r(3, 2));
        assert_eq!(average_genus_formula(6).unwrap(), r(5, 3));
        assert!(epsilon(2).is_err());
    }

    // Independent route: average genus assembled from the knot count and the
    // circle closed forms, without the mod-4 simplification.
    #[test]
    fn epsilon_matches_assembly_from_closed_forms() {
        for c in 3..=80 {
            let k = crate::counting::ernst_sumners_count(c).unwrap();
            let circles =
                Rational::new(s_closed_form(c).unwrap() + sp_closed_form(c).unwrap(), 4 * k).unwrap();
            let avg = r(1 + c as i64, 2) - circles;
            assert_eq!(avg, average_genus_formula(c).unwrap(), "c = {c}");
        }
    }

    #[test]
    fn decay_witness() {
        for c in 3..=60 {
            assert!(epsilon_decay_holds(c).unwrap(), "c = {c}");
        }
    }

    #[test]
    fn small_aggregates() {
        let limits = Limits::default();
        let a3 = aggregate(3, &limits).unwrap();
        assert_eq!((a3.t.clone(), a3.t_p.clone(), a3.knot_count.clone()), (big(1), big(1), big(1)));
        assert_eq!((a3.s_total.clone(), a3.s_p_total.clone()), (big(2), big(2)));
        assert_eq!(a3.avg_genus, r(1, 1));

        let a5 = aggregate(5, &limits).unwrap();
        assert_eq!((a5.t.clone(), a5.t_p.clone(), a5.knot_count.clone()), (big(3), big(1), big(2)));
        assert_eq!((a5.s_total.clone(), a5.s_p_total.clone()), (big(10), big(2)));
        assert_eq!(a5.avg_genus, r(3, 2));

        let a6 = aggregate(6, &limits).unwrap();
        assert_eq!((a6.t.clone(), a6.knot_count.clone(), a6.s_total.clone()), (big(5), big(3), big(19)));
        assert_eq!(a6.avg_genus, r(5, 3));

        for a in [&a3, &a5, &a6] {
            assert_eq!(a.avg_genus_from_totals().unwrap(), a.avg_genus);
            assert_eq!(a.avg_genus_formula().unwrap(), a.avg_genus);
        }
    }

    #[test]
    fn caps_are_enforced() {
        let limits = Limits { full: 8, palindromic: 10 };
        assert!(matches!(aggregate(9, &limits), Err(Error::CrossingNumberAboveCap { c: 9, cap: 8 })));
        assert!(matches!(palindromic_totals(11, &limits), Err(Error::CrossingNumberAboveCap { .. })));
        assert!(matches!(aggregate(2, &limits), Err(Error::CrossingNumberTooSmall { .. })));
    }

    #[test]
    fn palindromic_totals_match() {
        let limits = Limits::default();
        for c in 3..=20 {
            let (tp, sp) = palindromic_totals(c, &limits).unwrap();
            assert_eq!(tp, crate::counting::count_palindromic(c).unwrap());
            assert_eq!(sp, sp_closed_form(c).unwrap(), "c = {c}");
        }
    }
}
