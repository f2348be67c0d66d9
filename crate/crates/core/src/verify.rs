//! Runs every counting, recursion and closed-form identity over a range of
//! crossing numbers and reports each one as pass or fail.
//!
//! Per-word failures (a diagram that is not a knot, an orientation that
//! disagrees with the traversal, an odd `1 + c - s`) are collected as
//! report content rather than errors, with the first offending word kept
//! as the counterexample.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{count_palindromic, count_words, ernst_sumners_count, jacobsthal};
use crate::diagram::{table_map, to_alternating_with, trace_component_count, GeneratorMap};
use crate::enumerate::{
    classes_of, classify_case, enumerate_palindromic, enumerate_words, reduce_tail, CaseTag,
    MIN_CASE_CROSSINGS,
};
use crate::error::{Error, Result};
use crate::seifert::{
    genus_from_circles, orient_fast, orientation_string, orientations_from, seifert_circles, trace_directions,
    CrossingOrientation,
};
use crate::stats::{aggregate_with, average_genus_formula, epsilon_decay_holds, s_closed_form, sp_closed_form, Limits};
use crate::word::{RunWord, MIN_CROSSINGS};

/// Identity names as they appear in reports.
pub mod names {
    pub const WORD_COUNT: &str = "|T(c)| = (2^(c-2) - (-1)^c)/3 = J(c-2)";
    pub const WORD_RECURSION: &str = "t(c) = t(c-1) + 2 t(c-2)";
    pub const PALINDROMIC_COUNT: &str = "|T_p(c)| = t_p(c), palindromic members agree";
    pub const PALINDROMIC_RECURSION: &str = "t_p(c) = t_p(c-2) + 2 t_p(c-4)";
    pub const KNOT_COUNT: &str = "knot classes = Ernst-Sumners = (t + t_p)/2";
    pub const CASE_CENSUS: &str = "t1 = 2 t(c-3), t2 = t3 = t4 = t(c-2)";
    pub const TAIL_REDUCTION: &str = "tail reductions: cases 1+2 cover T(c-1), cases 3 and 4 each biject onto T(c-2)";
    pub const SINGLE_COMPONENT: &str = "diagram is a single component";
    pub const ORIENTATION: &str = "orient_fast == orient_oracle";
    pub const TWO_RIGHTWARD: &str = "two of three left-edge strands rightward";
    pub const GENUS_PARITY: &str = "1 + c - s even, genus >= 1";
    pub const ORBIT_INVARIANCE: &str = "s and genus invariant under the involution";
    pub const LOCAL_DELTAS: &str = "case 3 keeps s, case 4 adds 2";
    pub const S_CLOSED_FORM: &str = "s(c) = ((3c+5)2^(c-3) + (-1)^c(5-3c))/9";
    pub const S_RECURSION: &str = "s(c) = s(c-1) + 2 s(c-2) + 3 t(c-2)";
    pub const SP_CLOSED_FORM: &str = "s_p(c) closed form";
    pub const SP_RECURSION: &str = "s_p(c) = s_p(c-2) + 2 s_p(c-4) + 6 t_p(c-4)";
    pub const AVERAGE_GENUS: &str = "average genus: per-knot sum = circle totals = c/4 + 1/12 + eps(c)";
    pub const EPSILON_DECAY: &str = "|eps(c)| < 2^(-(c-10)/2)";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances examined (words or crossing numbers).
    pub instances: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub c_min: usize,
    pub c_max: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    /// One `name: PASS` / `name: FAIL (...)` line per identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify c = {}..={}", self.c_min, self.c_max)?;
        for c in &self.checks {
            if c.passed {
                writeln!(f, "{}: PASS ({} checked)", c.name, c.instances)?;
            } else {
                let why = c.counterexample.as_deref().unwrap_or("no detail");
                writeln!(f, "{}: FAIL (first counterexample: {})", c.name, why)?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            write!(f, "all {} identities hold", self.checks.len())
        } else {
            write!(f, "{failed} of {} identities failed", self.checks.len())
        }
    }
}

struct Tally {
    name: &'static str,
    instances: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, instances: 0, counterexample: None }
    }

    fn expect(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(why());
        }
    }

    fn fail(&mut self, why: String) {
        self.expect(false, || why);
    }

    fn finish(self) -> Check {
        Check {
            name: self.name,
            passed: self.counterexample.is_none(),
            instances: self.instances,
            counterexample: self.counterexample,
        }
    }
}

/// What we learn about one word.
struct WordFacts {
    word: RunWord,
    components: usize,
    fast: Vec<CrossingOrientation>,
    oracle: Result<Vec<CrossingOrientation>>,
    rightward: Option<usize>,
    circles: Result<usize>,
}

impl WordFacts {
    fn new(word: &RunWord, map: GeneratorMap) -> Self {
        let d = to_alternating_with(word, map);
        let fast = orient_fast(word);
        let traced = trace_directions(&d, false);
        let rightward = traced.as_ref().ok().map(|t| t.rightward_at_left_edge());
        let oracle = traced.map(|t| orientations_from(&d, &t));
        let circles = seifert_circles(&d, &fast).map(|s| s.circle_count);
        Self { word: word.clone(), components: trace_component_count(&d), fast, oracle, rightward, circles }
    }

    fn genus(&self) -> Result<u32> {
        genus_from_circles(self.word.crossing_number(), *self.circles.as_ref().map_err(Clone::clone)?)
    }
}

struct Census {
    words: Vec<RunWord>,
    facts: Vec<WordFacts>,
}

impl Census {
    fn build(c: usize, map: GeneratorMap) -> Result<Self> {
        let words = enumerate_words(c)?;
        let facts = words.par_iter().map(|w| WordFacts::new(w, map)).collect();
        Ok(Self { words, facts })
    }

    fn index_of(&self, w: &RunWord) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    fn circles_of(&self, w: &RunWord) -> Option<&Result<usize>> {
        self.index_of(w).map(|i| &self.facts[i].circles)
    }

    /// Total circles over the words selected by `keep`, or the first word
    /// whose circles could not be computed.
    fn circle_total(&self, keep: impl Fn(&RunWord) -> bool) -> std::result::Result<BigInt, String> {
        let mut total = 0u64;
        for f in self.facts.iter().filter(|f| keep(&f.word)) {
            match &f.circles {
                Ok(s) => total += *s as u64,
                Err(e) => return Err(format!("{}: {e}", f.word)),
            }
        }
        Ok(BigInt::from(total))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub limits: Limits,
    pub map: GeneratorMap,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { limits: Limits::default(), map: table_map }
    }
}

/// Runs every identity for `c_min..=c_max` with the standard diagram map.
pub fn verify_all(c_min: usize, c_max: usize) -> Result<Report> {
    verify_with(c_min, c_max, &VerifyOptions::default())
}

pub fn verify_with(c_min: usize, c_max: usize, opts: &VerifyOptions) -> Result<Report> {
    if c_min < MIN_CROSSINGS {
        return Err(Error::CrossingNumberTooSmall { c: c_min, min: MIN_CROSSINGS });
    }
    if c_min > c_max {
        return Err(Error::InvalidRange { min: c_min, max: c_max });
    }
    opts.limits.check_full(c_max)?;

    let low = c_min.saturating_sub(2).max(MIN_CROSSINGS);
    let mut census: BTreeMap<usize, Census> = BTreeMap::new();
    for c in low..=c_max {
        census.insert(c, Census::build(c, opts.map)?);
    }
    let range = || c_min..=c_max;
    let mut checks = Vec::new();

    // Counting.
    let mut t = Tally::new(names::WORD_COUNT);
    for c in range() {
        let n = BigInt::from(census[&c].words.len());
        let closed = count_words(c)?;
        let j = jacobsthal(c as i64 - 2)?;
        t.expect(n == closed && closed == j, || format!("c = {c}: enumerated {n}, closed form {closed}, J = {j}"));
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::WORD_RECURSION);
    for c in range().filter(|&c| c >= 5) {
        let n = |c: usize| census[&c].words.len();
        t.expect(n(c) == n(c - 1) + 2 * n(c - 2), || {
            format!("c = {c}: {} != {} + 2*{}", n(c), n(c - 1), n(c - 2))
        });
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::PALINDROMIC_COUNT);
    for c in range() {
        let listed = enumerate_palindromic(c)?;
        let closed = count_palindromic(c)?;
        t.expect(BigInt::from(listed.len()) == closed, || {
            format!("c = {c}: enumerated {}, closed form {closed}", listed.len())
        });
        let filtered: Vec<&RunWord> = census[&c].words.iter().filter(|w| w.is_palindromic_type()).collect();
        let same = filtered.len() == listed.len() && filtered.iter().zip(&listed).all(|(a, b)| *a == b);
        t.expect(same, || format!("c = {c}: generated palindromic words differ from filtered T(c)"));
        for w in &listed {
            let symbols = w.to_symbols();
            let fixed = if c % 2 == 1 { symbols.reverse() } else { symbols.mirror_reverse() };
            t.expect(fixed == symbols, || format!("{w} is not fixed by the symbol-level involution"));
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::PALINDROMIC_RECURSION);
    for c in range().filter(|&c| c >= 7) {
        let n = |c: usize| enumerate_palindromic(c).map(|v| v.len());
        let (a, b, d) = (n(c)?, n(c - 2)?, n(c - 4)?);
        t.expect(a == b + 2 * d, || format!("c = {c}: {a} != {b} + 2*{d}"));
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::KNOT_COUNT);
    for c in range() {
        let classes = classes_of(&census[&c].words).len();
        let es = ernst_sumners_count(c)?;
        let orbits = (count_words(c)? + count_palindromic(c)?) / 2;
        t.expect(BigInt::from(classes) == es && es == orbits, || {
            format!("c = {c}: {classes} classes, formula {es}, (t + t_p)/2 = {orbits}")
        });
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::CASE_CENSUS);
    for c in range().filter(|&c| c >= 6) {
        let mut tally = [0usize; 4];
        for w in &census[&c].words {
            tally[classify_case(w)?.index()] += 1;
        }
        let t3 = count_words(c - 3)?;
        let t2 = count_words(c - 2)?;
        let expect = [2 * &t3, t2.clone(), t2.clone(), t2];
        let ok = tally.iter().zip(&expect).all(|(a, b)| &BigInt::from(*a) == b);
        t.expect(ok, || format!("c = {c}: case counts {tally:?}, expected {expect:?}"));
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::TAIL_REDUCTION);
    for c in range().filter(|&c| c >= MIN_CASE_CROSSINGS) {
        let mut by_case: [Vec<RunWord>; 4] = Default::default();
        for w in &census[&c].words {
            match reduce_tail(w) {
                Ok((shorter, k)) => {
                    let case = classify_case(w)?;
                    let expected_k = match case {
                        CaseTag::Case1 | CaseTag::Case2 => c - 1,
                        _ => c - 2,
                    };
                    t.expect(k == expected_k && shorter.crossing_number() == k, || {
                        format!("{w} reduced to {shorter} with c = {k}, expected {expected_k}")
                    });
                    by_case[case.index()].push(shorter);
                }
                Err(e) => t.fail(format!("{w}: {e}")),
            }
        }
        let [one, two, three, four] = by_case;
        let mut upper: Vec<RunWord> = one.into_iter().chain(two).collect();
        upper.sort();
        t.expect(upper == census[&(c - 1)].words, || format!("c = {c}: cases 1 and 2 do not cover T({})", c - 1));
        for (label, mut v) in [("3", three), ("4", four)] {
            v.sort();
            t.expect(v == census[&(c - 2)].words, || {
                format!("c = {c}: case {label} reductions are not a bijection onto T({})", c - 2)
            });
        }
    }
    checks.push(t.finish());

    // Per-word structure.
    let mut components = Tally::new(names::SINGLE_COMPONENT);
    let mut orientation = Tally::new(names::ORIENTATION);
    let mut rightward = Tally::new(names::TWO_RIGHTWARD);
    let mut parity = Tally::new(names::GENUS_PARITY);
    let mut orbit = Tally::new(names::ORBIT_INVARIANCE);
    let mut deltas = Tally::new(names::LOCAL_DELTAS);
    for c in range() {
        let cen = &census[&c];
        for f in &cen.facts {
            let w = &f.word;
            components.expect(f.components == 1, || format!("{w}: {} components", f.components));
            match &f.oracle {
                Ok(o) => orientation.expect(*o == f.fast, || {
                    format!("{w}: fast {} vs oracle {}", orientation_string(&f.fast), orientation_string(o))
                }),
                Err(e) => orientation.fail(format!("{w}: {e}")),
            }
            match f.rightward {
                Some(n) => rightward.expect(n == 2, || format!("{w}: {n} rightward")),
                None => rightward.fail(format!("{w}: no traversal")),
            }
            match f.genus() {
                Ok(g) => parity.expect(g >= 1, || format!("{w}: genus {g}")),
                Err(e) => parity.fail(format!("{w}: {e}")),
            }
            let partner = w.partner();
            match cen.circles_of(&partner) {
                Some(other) => {
                    let ok = matches!((&f.circles, other), (Ok(a), Ok(b)) if a == b);
                    orbit.expect(ok, || format!("{w} vs {partner}: {:?} vs {:?}", f.circles, other));
                }
                None => orbit.fail(format!("{w}: partner {partner} not in T({c})")),
            }
            if c >= MIN_CASE_CROSSINGS {
                let case = classify_case(w)?;
                let delta = match case {
                    CaseTag::Case3 => 0,
                    CaseTag::Case4 => 2,
                    _ => continue,
                };
                let (shorter, k) = match reduce_tail(w) {
                    Ok(x) => x,
                    Err(e) => {
                        deltas.fail(format!("{w}: {e}"));
                        continue;
                    }
                };
                let below = census[&k].circles_of(&shorter);
                let ok = matches!((&f.circles, below), (Ok(a), Some(Ok(b))) if *a == b + delta);
                deltas.expect(ok, || format!("{w} ({case}) -> {shorter}: {:?} vs {:?}", f.circles, below));
            }
        }
    }
    checks.extend([components, orientation, rightward, parity, orbit, deltas].map(Tally::finish));

    // Circle totals.
    let s_of = |c: usize| census[&c].circle_total(|_| true);
    let mut t = Tally::new(names::S_CLOSED_FORM);
    for c in range() {
        let closed = s_closed_form(c)?;
        match s_of(c) {
            Ok(s) => t.expect(s == closed, || format!("c = {c}: enumerated {s}, closed form {closed}")),
            Err(e) => t.fail(e),
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::S_RECURSION);
    for c in range().filter(|&c| c >= 5) {
        match (s_of(c), s_of(c - 1), s_of(c - 2)) {
            (Ok(a), Ok(b), Ok(d)) => {
                let rhs = &b + 2 * &d + 3 * count_words(c - 2)?;
                t.expect(a == rhs, || format!("c = {c}: {a} != {rhs}"));
            }
            (a, b, d) => t.fail(format!("c = {c}: {:?}", [a, b, d].into_iter().find_map(|r| r.err()))),
        }
    }
    checks.push(t.finish());

    let sp_of = |c: usize| -> std::result::Result<BigInt, String> {
        let mut total = 0u64;
        for w in enumerate_palindromic(c).map_err(|e| e.to_string())? {
            let s = match census.get(&c).and_then(|cen| cen.circles_of(&w)) {
                Some(r) => r.clone(),
                None => WordFacts::new(&w, opts.map).circles,
            };
            total += s.map_err(|e| format!("{w}: {e}"))? as u64;
        }
        Ok(BigInt::from(total))
    };
    let mut t = Tally::new(names::SP_CLOSED_FORM);
    for c in range() {
        let closed = sp_closed_form(c)?;
        match sp_of(c) {
            Ok(s) => t.expect(s == closed, || format!("c = {c}: enumerated {s}, closed form {closed}")),
            Err(e) => t.fail(e),
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::SP_RECURSION);
    for c in range().filter(|&c| c >= 7) {
        match (sp_of(c), sp_of(c - 2), sp_of(c - 4)) {
            (Ok(a), Ok(b), Ok(d)) => {
                let rhs = &b + 2 * &d + 6 * count_palindromic(c - 4)?;
                t.expect(a == rhs, || format!("c = {c}: {a} != {rhs}"));
            }
            (a, b, d) => t.fail(format!("c = {c}: {:?}", [a, b, d].into_iter().find_map(|r| r.err()))),
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::AVERAGE_GENUS);
    for c in range() {
        match aggregate_with(c, &opts.limits, opts.map) {
            Ok(stats) => {
                let totals = stats.avg_genus_from_totals()?;
                let formula = average_genus_formula(c)?;
                t.expect(stats.avg_genus == totals && totals == formula, || {
                    format!("c = {c}: per-knot {}, totals {totals}, formula {formula}", stats.avg_genus)
                });
            }
            Err(e) => t.fail(format!("c = {c}: {e}")),
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new(names::EPSILON_DECAY);
    for c in range() {
        t.expect(epsilon_decay_holds(c)?, || format!("c = {c}"));
    }
    checks.push(t.finish());

    Ok(Report { c_min, c_max, checks })
}
