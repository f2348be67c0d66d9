//! Crossing orientations, Seifert circles and genus.
//!
//! Orientations come from two independent routes. [`orient_fast`] reads
//! them straight off the word's run positions mod 3. [`orient_oracle`]
//! walks the knot once and compares strand directions at every crossing.
//! The two must agree on every word.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::diagram::{
    run_positions, table_map, to_alternating, to_alternating_with, AlternatingDiagram, End, Generator,
    GeneratorMap, RightClosure, SegmentEnd,
};
use crate::dsu::{DisjointSets, ParitySets};
use crate::enumerate::{classify_case, CaseTag, MIN_CASE_CROSSINGS};
use crate::error::{Error, Result};
use crate::word::RunWord;

/// How the two strands pass through a crossing.
///
/// Horizontal: both travel the same way (both rightward or both leftward),
/// and smoothing keeps each on its own level. Vertical: they travel in
/// opposite directions, and smoothing joins the two left ends and the two
/// right ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingOrientation {
    Horizontal,
    Vertical,
}

impl CrossingOrientation {
    pub fn letter(self) -> char {
        match self {
            CrossingOrientation::Horizontal => 'H',
            CrossingOrientation::Vertical => 'V',
        }
    }
}

impl fmt::Display for CrossingOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Write::write_char(f, self.letter())
    }
}

impl Serialize for CrossingOrientation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Compact `"HVVH"` rendering.
pub fn orientation_string(o: &[CrossingOrientation]) -> String {
    o.iter().map(|x| x.letter()).collect()
}

/// Orientations from run positions: a single run at position p is
/// horizontal iff p = 1 mod 3; a double run at (p, p+1) is horizontal iff
/// p = 2 mod 3; every other crossing is vertical.
pub fn orient_fast(w: &RunWord) -> Vec<CrossingOrientation> {
    run_positions(w)
        .into_iter()
        .map(|(start, len)| {
            let horizontal = match len {
                1 => start % 3 == 1,
                _ => start % 3 == 2,
            };
            if horizontal {
                CrossingOrientation::Horizontal
            } else {
                CrossingOrientation::Vertical
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Rightward,
    Leftward,
}

/// Direction of travel along every segment for one orientation of the knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDirections(Vec<Direction>);

impl SegmentDirections {
    pub fn get(&self, gap: usize, pos: usize) -> Direction {
        self.0[AlternatingDiagram::segment(gap, pos)]
    }

    /// How many of the three segments at the left edge point rightward.
    pub fn rightward_at_left_edge(&self) -> usize {
        (0..3).filter(|&p| self.get(0, p) == Direction::Rightward).count()
    }
}

/// Walks the single component, starting on the bottom-left segment and
/// heading right (or left, when `reverse`).
pub fn trace_directions(d: &AlternatingDiagram, reverse: bool) -> Result<SegmentDirections> {
    let links = d.link_table();
    let n = d.segment_count();
    let mut dirs: Vec<Option<Direction>> = vec![None; n];
    let start_dir = if reverse { Direction::Leftward } else { Direction::Rightward };
    let (mut seg, mut dir) = (AlternatingDiagram::segment(0, 0), start_dir);
    let mut visited = 0;
    loop {
        match dirs[seg] {
            Some(prev) if prev == dir => break,
            Some(_) => return Err(Error::Invariant(format!("segment {seg} traversed in both directions"))),
            None => {}
        }
        dirs[seg] = Some(dir);
        visited += 1;
        let exit = match dir {
            Direction::Rightward => End::Right,
            Direction::Leftward => End::Left,
        };
        let next = links[SegmentEnd { segment: seg, end: exit }.slot()];
        seg = next.segment;
        dir = match next.end {
            End::Left => Direction::Rightward,
            End::Right => Direction::Leftward,
        };
    }
    if visited != n {
        return Err(Error::NotAKnot(crate::diagram::trace_component_count(d)));
    }
    Ok(SegmentDirections(dirs.into_iter().map(|d| d.expect("all segments visited")).collect()))
}

/// Orientations read off a traversal of the knot.
pub fn orient_oracle(d: &AlternatingDiagram) -> Result<Vec<CrossingOrientation>> {
    Ok(orientations_from(d, &trace_directions(d, false)?))
}

pub fn orientations_from(d: &AlternatingDiagram, dirs: &SegmentDirections) -> Vec<CrossingOrientation> {
    d.crossings()
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let (a, b) = x.generator.positions();
            if dirs.get(k, a) == dirs.get(k, b) {
                CrossingOrientation::Horizontal
            } else {
                CrossingOrientation::Vertical
            }
        })
        .collect()
}

/// Result of smoothing every crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertState {
    pub orientations: Vec<CrossingOrientation>,
    pub circle_count: usize,
}

/// Checks that `o` is realised by some orientation of the diagram's arcs:
/// strands keep their direction through crossings, caps turn them around,
/// the outer arc does not, and each crossing's label matches.
fn check_orientation(d: &AlternatingDiagram, o: &[CrossingOrientation]) -> Result<()> {
    if o.len() != d.crossing_count() {
        return Err(Error::InconsistentOrientation(format!(
            "{} orientations for {} crossings",
            o.len(),
            d.crossing_count()
        )));
    }
    let mut bits = ParitySets::new(d.segment_count());
    let mut ok = true;
    for k in 0..d.crossing_count() {
        for (a, b) in d.crossing_links(k) {
            ok &= bits.relate(a.segment, b.segment, a.end == b.end);
        }
    }
    for (a, b) in d.closure_links() {
        ok &= bits.relate(a.segment, b.segment, a.end == b.end);
    }
    if !ok {
        return Err(Error::MalformedDiagram("arc directions cannot be assigned".into()));
    }
    for (k, (x, &label)) in d.crossings().iter().zip(o).enumerate() {
        let (a, b) = x.generator.positions();
        let differ = label == CrossingOrientation::Vertical;
        if !bits.relate(AlternatingDiagram::segment(k, a), AlternatingDiagram::segment(k, b), differ) {
            return Err(Error::InconsistentOrientation(format!(
                "crossing {} cannot be {:?} given the others",
                k + 1,
                label
            )));
        }
    }
    Ok(())
}

/// Smooths each crossing according to `o` and counts the resulting circles.
pub fn seifert_circles(d: &AlternatingDiagram, o: &[CrossingOrientation]) -> Result<SeifertState> {
    check_orientation(d, o)?;
    let seg = AlternatingDiagram::segment;
    let mut sets = DisjointSets::new(d.segment_count());
    for (k, (x, &label)) in d.crossings().iter().zip(o).enumerate() {
        let g: Generator = x.generator;
        let (a, b) = g.positions();
        let idle = g.idle_position();
        sets.union(seg(k, idle), seg(k + 1, idle));
        match label {
            CrossingOrientation::Horizontal => {
                sets.union(seg(k, a), seg(k + 1, a));
                sets.union(seg(k, b), seg(k + 1, b));
            }
            CrossingOrientation::Vertical => {
                sets.union(seg(k, a), seg(k, b));
                sets.union(seg(k + 1, a), seg(k + 1, b));
            }
        }
    }
    for (a, b) in d.closure_links() {
        sets.union(a.segment, b.segment);
    }
    let s = sets.count();
    let c = d.crossing_count();
    if s < 1 || s > c + 2 {
        return Err(Error::Invariant(format!("{s} Seifert circles for {c} crossings")));
    }
    Ok(SeifertState { orientations: o.to_vec(), circle_count: s })
}

/// Seifert state of the word's alternating diagram, using the fast
/// orientation rule.
pub fn seifert_state(w: &RunWord) -> Result<SeifertState> {
    seifert_state_with(w, table_map)
}

/// [`seifert_state`] with a substitute run-to-crossing map.
pub fn seifert_state_with(w: &RunWord, map: GeneratorMap) -> Result<SeifertState> {
    seifert_circles(&to_alternating_with(w, map), &orient_fast(w))
}

/// g = (1 + c - s) / 2 for an alternating diagram with c crossings and s
/// Seifert circles.
pub fn genus_from_circles(c: usize, s: usize) -> Result<u32> {
    let twice = (1 + c)
        .checked_sub(s)
        .ok_or_else(|| Error::Invariant(format!("negative genus: c = {c}, s = {s}")))?;
    if twice % 2 != 0 {
        return Err(Error::Invariant(format!("1 + c - s is odd: c = {c}, s = {s}")));
    }
    Ok((twice / 2) as u32)
}

pub fn genus(w: &RunWord) -> Result<u32> {
    genus_from_circles(w.crossing_number(), seifert_state(w)?.circle_count)
}

/// One line of per-word output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordRecord {
    pub word: RunWord,
    pub c: usize,
    pub length: usize,
    pub s: usize,
    pub genus: u32,
    pub case: Option<CaseTag>,
    pub palindromic: bool,
}

impl WordRecord {
    pub fn new(w: &RunWord) -> Result<Self> {
        Self::with_map(w, table_map)
    }

    pub fn with_map(w: &RunWord, map: GeneratorMap) -> Result<Self> {
        let state = seifert_state_with(w, map)?;
        let c = w.crossing_number();
        Ok(Self {
            word: w.clone(),
            c,
            length: w.length(),
            s: state.circle_count,
            genus: genus_from_circles(c, state.circle_count)?,
            case: if c >= MIN_CASE_CROSSINGS { Some(classify_case(w)?) } else { None },
            palindromic: w.is_palindromic_type(),
        })
    }
}

/// Everything known about a single word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordDetail {
    pub word: RunWord,
    pub runs: String,
    pub c: usize,
    pub length: usize,
    pub generators: Vec<Generator>,
    pub right_closure: RightClosure,
    pub orientations: String,
    pub s: usize,
    pub genus: u32,
    pub case: Option<CaseTag>,
    pub palindromic: bool,
    pub partner: RunWord,
}

impl WordDetail {
    pub fn new(w: &RunWord) -> Result<Self> {
        let d = to_alternating(w);
        let record = WordRecord::new(w)?;
        Ok(Self {
            word: w.clone(),
            runs: w.runs_string(),
            c: record.c,
            length: record.length,
            generators: d.generators(),
            right_closure: d.right_closure(),
            orientations: orientation_string(&orient_fast(w)),
            s: record.s,
            genus: record.genus,
            case: record.case,
            palindromic: record.palindromic,
            partner: w.partner(),
        })
    }
}
