//! Exhaustive generators for every family, in increasing canonical-text
//! order.
//!
//! All generators are lazy odometers over a depth-first search: the current
//! object is kept as a decision stack, and the next one is found by popping
//! to the deepest decision with an untried alternative and refilling with the
//! leftmost completion. Pruning is exact, so every leaf is an object and no
//! work is spent on dead ends.
//!
//! The partition generator searches arc sets directly and never touches the
//! bijection; it is the oracle the bijection is checked against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::counting;
use crate::structures::{
    Arc, LargeMotzkinPath, LinkedPartition, MotzkinPath, NclPartition, PathWord, Record,
    SchroderPath, SchroderStep, SchroderVariant, Step,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Motzkin32,
    Large,
    Ncl,
    SchroderLarge,
    SchroderLittle,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Motzkin32,
        Family::Large,
        Family::Ncl,
        Family::SchroderLarge,
        Family::SchroderLittle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Motzkin32 => "m32",
            Family::Large => "large",
            Family::Ncl => "ncl",
            Family::SchroderLarge => "schroder-large",
            Family::SchroderLittle => "schroder-little",
        }
    }

    /// Exact size of the family at `n`.
    pub fn count(self, n: usize) -> BigUint {
        match self {
            Family::Motzkin32 => counting::motzkin32_numbers(n)[n].clone(),
            Family::Large => counting::large_motzkin_numbers(n)[n].clone(),
            Family::Ncl if n == 0 => BigUint::default(),
            Family::Ncl => counting::ncl_counts(n)[n].clone(),
            Family::SchroderLarge => counting::schroder_numbers(n).0[n].clone(),
            Family::SchroderLittle => counting::schroder_numbers(n).1[n].clone(),
        }
    }

    /// Every object of size `n` as a machine-readable record.
    pub fn records(self, n: usize) -> Box<dyn Iterator<Item = Record>> {
        match self {
            Family::Motzkin32 => Box::new(gen_motzkin32(n).map(|p| Record::path("m32", p.word()))),
            Family::Large => Box::new(gen_large(n).map(|p| Record::path("large", &p))),
            Family::Ncl => Box::new(gen_ncl(n).map(|p| Record::partition(&p))),
            Family::SchroderLarge => {
                Box::new(gen_schroder(n, SchroderVariant::Large).map(|p| Record::schroder(&p)))
            }
            Family::SchroderLittle => {
                Box::new(gen_schroder(n, SchroderVariant::Little).map(|p| Record::schroder(&p)))
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// Colored Motzkin words of a fixed length, optionally large.
pub struct PathStream {
    n: usize,
    large: bool,
    steps: Vec<Step>,
    heights: Vec<i64>,
    started: bool,
    done: bool,
}

impl PathStream {
    fn new(n: usize, large: bool) -> Self {
        PathStream {
            n,
            large,
            steps: Vec::with_capacity(n),
            heights: vec![0],
            started: false,
            done: false,
        }
    }

    fn allowed(&self, s: Step) -> bool {
        let h = *self.heights.last().unwrap();
        let after = h + s.height_delta();
        let remaining = (self.n - self.steps.len() - 1) as i64;
        after >= 0 && after <= remaining && !(self.large && h == 0 && s == Step::L3)
    }

    fn push(&mut self, s: Step) {
        let h = *self.heights.last().unwrap();
        self.steps.push(s);
        self.heights.push(h + s.height_delta());
    }

    fn fill(&mut self) {
        while self.steps.len() < self.n {
            let s = Step::ALL
                .into_iter()
                .find(|&s| self.allowed(s))
                .expect("a feasible prefix always extends");
            self.push(s);
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.fill();
            return true;
        }
        while let Some(prev) = self.steps.pop() {
            self.heights.pop();
            if let Some(s) = Step::ALL
                .into_iter()
                .filter(|&s| s > prev)
                .find(|&s| self.allowed(s))
            {
                self.push(s);
                self.fill();
                return true;
            }
        }
        false
    }

    fn next_word(&mut self) -> Option<PathWord> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        Some(PathWord::new(self.steps.clone()))
    }
}

pub struct MotzkinPaths(PathStream);
pub struct LargePaths(PathStream);

impl Iterator for MotzkinPaths {
    type Item = MotzkinPath;
    fn next(&mut self) -> Option<MotzkinPath> {
        self.0.next_word().map(MotzkinPath::from_word_unchecked)
    }
}

impl Iterator for LargePaths {
    type Item = LargeMotzkinPath;
    fn next(&mut self) -> Option<LargeMotzkinPath> {
        self.0
            .next_word()
            .map(LargeMotzkinPath::from_word_unchecked)
    }
}

pub fn gen_motzkin32(n: usize) -> MotzkinPaths {
    MotzkinPaths(PathStream::new(n, false))
}

pub fn gen_large(n: usize) -> LargePaths {
    LargePaths(PathStream::new(n, true))
}

/// Schröder paths of half-length `n`.
pub struct SchroderPaths {
    width: usize,
    variant: SchroderVariant,
    steps: Vec<SchroderStep>,
    // (height, used width) before each step, then the current state
    state: Vec<(i64, usize)>,
    started: bool,
    done: bool,
}

impl SchroderPaths {
    fn current(&self) -> (i64, usize) {
        *self.state.last().unwrap()
    }

    fn allowed(&self, s: SchroderStep) -> bool {
        let (h, used) = self.current();
        if used + s.width() > self.width {
            return false;
        }
        let after = h + s.height_delta();
        let remaining = (self.width - used - s.width()) as i64;
        let axis_level =
            self.variant == SchroderVariant::Little && h == 0 && s == SchroderStep::Level;
        after >= 0 && after <= remaining && !axis_level
    }

    fn push(&mut self, s: SchroderStep) {
        let (h, used) = self.current();
        self.steps.push(s);
        self.state.push((h + s.height_delta(), used + s.width()));
    }

    fn fill(&mut self) {
        while self.current().1 < self.width {
            let s = SchroderStep::ALL
                .into_iter()
                .find(|&s| self.allowed(s))
                .expect("a feasible prefix always extends");
            self.push(s);
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.fill();
            return true;
        }
        while let Some(prev) = self.steps.pop() {
            self.state.pop();
            let rank = |s: SchroderStep| SchroderStep::ALL.iter().position(|&t| t == s).unwrap();
            if let Some(s) = SchroderStep::ALL
                .into_iter()
                .filter(|&s| rank(s) > rank(prev))
                .find(|&s| self.allowed(s))
            {
                self.push(s);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for SchroderPaths {
    type Item = SchroderPath;
    fn next(&mut self) -> Option<SchroderPath> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        Some(SchroderPath::from_steps_unchecked(
            self.steps.clone(),
            self.variant,
        ))
    }
}

pub fn gen_schroder(n: usize, variant: SchroderVariant) -> SchroderPaths {
    SchroderPaths {
        width: 2 * n,
        variant,
        steps: Vec::new(),
        state: vec![(0, 0)],
        started: false,
        done: false,
    }
}

#[derive(Clone, Copy, Debug)]
enum Decision {
    /// Arc `(vertex, right)`; `last` is the previous largest right end at `vertex`.
    Add { right: usize, last: usize },
    /// Move past the current vertex.
    Close { last: usize },
}

/// Noncrossing linked partitions of `[n]` by arc-set backtracking.
///
/// Vertices are visited left to right; at each vertex the outgoing arcs are
/// chosen in increasing order of right end, and at every point adding another
/// arc is tried before closing the vertex. This is exactly increasing order
/// of the canonical block text.
pub struct NclPartitions {
    n: usize,
    vertex: usize,
    last: usize,
    arcs: Vec<Arc>,
    incoming: Vec<bool>,
    decisions: Vec<Decision>,
    started: bool,
    done: bool,
}

impl NclPartitions {
    /// Smallest admissible right end above `after` for an arc from the
    /// current vertex.
    fn next_right(&self, after: usize) -> Option<usize> {
        let v = self.vertex;
        // an arc (v, r) crosses (a, b) iff a < v < b < r
        let bound = self
            .arcs
            .iter()
            .filter(|a| a.left < v && v < a.right)
            .map(|a| a.right)
            .min()
            .unwrap_or(self.n);
        (after.max(v) + 1..=bound).find(|&r| !self.incoming[r])
    }

    fn add(&mut self, right: usize) {
        self.decisions.push(Decision::Add {
            right,
            last: self.last,
        });
        self.arcs.push(Arc {
            left: self.vertex,
            right,
        });
        self.incoming[right] = true;
        self.last = right;
    }

    fn close(&mut self) {
        self.decisions.push(Decision::Close { last: self.last });
        self.vertex += 1;
        self.last = self.vertex;
    }

    fn fill(&mut self) {
        while self.vertex <= self.n {
            match self.next_right(self.last) {
                Some(r) => self.add(r),
                None => self.close(),
            }
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.fill();
            return true;
        }
        while let Some(d) = self.decisions.pop() {
            match d {
                Decision::Add { right, last } => {
                    self.arcs.pop();
                    self.incoming[right] = false;
                    self.last = last;
                    match self.next_right(right) {
                        Some(r) => self.add(r),
                        None => self.close(),
                    }
                    self.fill();
                    return true;
                }
                Decision::Close { last } => {
                    self.vertex -= 1;
                    self.last = last;
                }
            }
        }
        false
    }
}

impl Iterator for NclPartitions {
    type Item = NclPartition;
    fn next(&mut self) -> Option<NclPartition> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        let p =
            LinkedPartition::new(self.n, self.arcs.iter().copied()).expect("arcs stay in range");
        Some(NclPartition::from_partition_unchecked(p))
    }
}

/// Empty for `n = 0`.
pub fn gen_ncl(n: usize) -> NclPartitions {
    NclPartitions {
        n,
        vertex: 1,
        last: 1,
        arcs: Vec::new(),
        incoming: vec![false; n + 1],
        decisions: Vec::new(),
        started: false,
        done: n == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts<T: ToString>(it: impl Iterator<Item = T>) -> Vec<String> {
        it.map(|x| x.to_string()).collect()
    }

    #[test]
    fn motzkin_small() {
        assert_eq!(texts(gen_motzkin32(0)), vec![""]);
        assert_eq!(texts(gen_motzkin32(1)), vec!["a", "b", "c"]);
        assert_eq!(gen_motzkin32(3).count(), 45);
    }

    #[test]
    fn large_small() {
        assert_eq!(texts(gen_large(1)), vec!["a", "b"]);
        assert_eq!(
            texts(gen_large(2)),
            vec!["Ux", "Uy", "aa", "ab", "ba", "bb"]
        );
        assert_eq!(gen_large(6).count(), 1806);
    }

    #[test]
    fn ncl_small() {
        assert_eq!(texts(gen_ncl(1)), vec!["{1}"]);
        assert_eq!(
            texts(gen_ncl(3)),
            vec![
                "{1,2,3}",
                "{1,2}{2,3}",
                "{1,2}{3}",
                "{1,3}{2}",
                "{1}{2,3}",
                "{1}{2}{3}"
            ]
        );
        assert_eq!(gen_ncl(4).count(), 22);
        assert_eq!(gen_ncl(0).count(), 0);
    }

    #[test]
    fn schroder_small() {
        assert_eq!(
            texts(gen_schroder(1, SchroderVariant::Large)),
            vec!["F", "UD"]
        );
        assert_eq!(texts(gen_schroder(1, SchroderVariant::Little)), vec!["UD"]);
        assert_eq!(gen_schroder(3, SchroderVariant::Little).count(), 11);
        assert_eq!(texts(gen_schroder(0, SchroderVariant::Large)), vec![""]);
    }

    #[test]
    fn streams_stop_early() {
        let first: Vec<String> = texts(gen_ncl(12).take(2));
        assert_eq!(
            first,
            vec![
                "{1,2,3,4,5,6,7,8,9,10,11,12}",
                "{1,2,3,4,5,6,7,8,9,10,11}{11,12}"
            ]
        );
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!(Family::Ncl.count(9), BigUint::from(41586u32));
        assert_eq!(Family::Large.records(2).count(), 6);
    }
}
