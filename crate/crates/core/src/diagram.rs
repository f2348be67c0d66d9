//! The c-crossing alternating plat diagram of a word.
//!
//! The diagram lives on three horizontal strand positions, bottom (0),
//! middle (1) and top (2). Crossing `k` sits between gap `k` and gap `k+1`;
//! each gap holds one strand segment per position, so a diagram with `c`
//! crossings has `3 * (c + 1)` segments, numbered `3 * gap + position`
//! (left to right, bottom to top).
//!
//! `S1` crosses the bottom and middle strands, `S2inv` the middle and top
//! ones. On the left a cap joins the middle and top segments and the bottom
//! segment is an open end. On the right the last generator decides: after
//! `S1` the bottom segment exits and a cap joins middle and top; after
//! `S2inv` the top segment exits and a cap joins bottom and middle. An outer
//! arc joins the two open ends.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::word::{RunWord, Sign};

pub const POSITIONS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    S1,
    S2Inv,
}

impl Generator {
    /// The two strand positions the crossing swaps.
    pub fn positions(self) -> (usize, usize) {
        match self {
            Generator::S1 => (0, 1),
            Generator::S2Inv => (1, 2),
        }
    }

    /// The position that passes straight through.
    pub fn idle_position(self) -> usize {
        match self {
            Generator::S1 => 2,
            Generator::S2Inv => 0,
        }
    }

    /// Where a strand entering on `pos` from the left leaves on the right.
    pub fn permute(self, pos: usize) -> usize {
        let (a, b) = self.positions();
        if pos == a {
            b
        } else if pos == b {
            a
        } else {
            pos
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::S1 => "s1",
            Generator::S2Inv => "s2i",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Maps a run (its sign and length) to a crossing.
pub type GeneratorMap = fn(Sign, u8) -> Generator;

/// `+` and `--` become `S1`; `++` and `-` become `S2inv`.
pub fn table_map(sign: Sign, len: u8) -> Generator {
    match (sign, len) {
        (Sign::Plus, 1) | (Sign::Minus, 2) => Generator::S1,
        _ => Generator::S2Inv,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RightClosure {
    /// Open end leaves at the bottom; cap on middle and top.
    BottomExit,
    /// Open end leaves at the top; cap on bottom and middle.
    TopExit,
}

impl RightClosure {
    pub fn after(last: Generator) -> Self {
        match last {
            Generator::S1 => RightClosure::BottomExit,
            Generator::S2Inv => RightClosure::TopExit,
        }
    }

    pub fn exit_position(self) -> usize {
        match self {
            RightClosure::BottomExit => 0,
            RightClosure::TopExit => 2,
        }
    }

    pub fn cap_positions(self) -> (usize, usize) {
        match self {
            RightClosure::BottomExit => (1, 2),
            RightClosure::TopExit => (0, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RightClosure::BottomExit => "bottom-exit",
            RightClosure::TopExit => "top-exit",
        }
    }
}

impl Serialize for RightClosure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

pub const LEFT_EXIT: usize = 0;
pub const LEFT_CAP: (usize, usize) = (1, 2);

/// Back-pointer from a crossing to the run that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RunSource {
    /// 1-based run index.
    pub run: usize,
    /// 1-based symbol position where the run starts.
    pub start: usize,
    pub len: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub generator: Generator,
    pub source: Option<RunSource>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingDiagram {
    crossings: Vec<Crossing>,
    right_closure: RightClosure,
}

/// Start position and length of every run, 1-based within the symbol word.
pub fn run_positions(w: &RunWord) -> Vec<(usize, u8)> {
    let mut start = 1;
    w.runs()
        .iter()
        .map(|&len| {
            let here = start;
            start += len as usize;
            (here, len)
        })
        .collect()
}

pub fn to_alternating(w: &RunWord) -> AlternatingDiagram {
    to_alternating_with(w, table_map)
}

/// Like [`to_alternating`] with a substitute run-to-crossing map.
pub fn to_alternating_with(w: &RunWord, map: GeneratorMap) -> AlternatingDiagram {
    let crossings: Vec<Crossing> = run_positions(w)
        .into_iter()
        .enumerate()
        .map(|(i, (start, len))| Crossing {
            generator: map(Sign::of_run(i), len),
            source: Some(RunSource { run: i + 1, start, len }),
        })
        .collect();
    let right_closure = RightClosure::after(crossings[crossings.len() - 1].generator);
    AlternatingDiagram { crossings, right_closure }
}

impl AlternatingDiagram {
    /// A diagram from a bare generator sequence, closure derived from the
    /// last generator.
    pub fn from_generators(generators: &[Generator]) -> Result<Self> {
        let last = *generators
            .last()
            .ok_or_else(|| Error::MalformedDiagram("no crossings".into()))?;
        Self::with_closure(generators, RightClosure::after(last))
    }

    /// A diagram with an explicit right closure, which must agree with the
    /// last generator.
    pub fn with_closure(generators: &[Generator], right_closure: RightClosure) -> Result<Self> {
        let last = *generators
            .last()
            .ok_or_else(|| Error::MalformedDiagram("no crossings".into()))?;
        if RightClosure::after(last) != right_closure {
            return Err(Error::MalformedDiagram(format!(
                "right closure {} does not match final generator {}",
                right_closure.name(),
                last
            )));
        }
        let crossings = generators.iter().map(|&generator| Crossing { generator, source: None }).collect();
        Ok(Self { crossings, right_closure })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.crossings.iter().map(|x| x.generator).collect()
    }

    pub fn right_closure(&self) -> RightClosure {
        self.right_closure
    }

    pub fn segment_count(&self) -> usize {
        POSITIONS * (self.crossings.len() + 1)
    }

    pub fn segment(gap: usize, pos: usize) -> usize {
        POSITIONS * gap + pos
    }

    /// Every place where two segment ends meet, excluding the crossings:
    /// the left cap, the right cap, and the outer arc. Each entry joins
    /// `(segment, end)` pairs.
    pub fn closure_links(&self) -> [(SegmentEnd, SegmentEnd); 3] {
        let c = self.crossings.len();
        let (rc0, rc1) = self.right_closure.cap_positions();
        [
            (SegmentEnd::left(0, LEFT_CAP.0), SegmentEnd::left(0, LEFT_CAP.1)),
            (SegmentEnd::right(c, rc0), SegmentEnd::right(c, rc1)),
            (SegmentEnd::left(0, LEFT_EXIT), SegmentEnd::right(c, self.right_closure.exit_position())),
        ]
    }

    /// Links through crossing `k`: each strand continues to its permuted
    /// position in the next gap.
    pub fn crossing_links(&self, k: usize) -> [(SegmentEnd, SegmentEnd); 3] {
        let g = self.crossings[k].generator;
        [0, 1, 2].map(|p| (SegmentEnd::right(k, p), SegmentEnd::left(k + 1, g.permute(p))))
    }

    /// Partner of every segment end: `links[2 * segment + end]`.
    pub(crate) fn link_table(&self) -> Vec<SegmentEnd> {
        let mut table = vec![SegmentEnd { segment: usize::MAX, end: End::Left }; 2 * self.segment_count()];
        let mut put = |a: SegmentEnd, b: SegmentEnd| {
            table[a.slot()] = b;
            table[b.slot()] = a;
        };
        for k in 0..self.crossings.len() {
            for (a, b) in self.crossing_links(k) {
                put(a, b);
            }
        }
        for (a, b) in self.closure_links() {
            put(a, b);
        }
        table
    }

    /// JSON-friendly summary.
    pub fn export(&self, word: &RunWord) -> DiagramExport {
        DiagramExport { word: word.to_string(), generators: self.generators(), right_closure: self.right_closure }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegmentEnd {
    pub segment: usize,
    pub end: End,
}

impl SegmentEnd {
    pub fn left(gap: usize, pos: usize) -> Self {
        Self { segment: AlternatingDiagram::segment(gap, pos), end: End::Left }
    }

    pub fn right(gap: usize, pos: usize) -> Self {
        Self { segment: AlternatingDiagram::segment(gap, pos), end: End::Right }
    }

    pub(crate) fn slot(self) -> usize {
        2 * self.segment + matches!(self.end, End::Right) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramExport {
    pub word: String,
    pub generators: Vec<Generator>,
    pub right_closure: RightClosure,
}

/// Closed components of the diagram, crossings passing strands straight
/// through.
pub fn trace_component_count(d: &AlternatingDiagram) -> usize {
    let mut sets = DisjointSets::new(d.segment_count());
    for k in 0..d.crossing_count() {
        for (a, b) in d.crossing_links(k) {
            sets.union(a.segment, b.segment);
        }
    }
    for (a, b) in d.closure_links() {
        sets.union(a.segment, b.segment);
    }
    sets.count()
}
