//! Colored lattice-path words and the (3,2)-Motzkin validity layers.
//!
//! A [`PathWord`] is any sequence of the six colored steps. A
//! [`MotzkinPath`] never dips below the axis and ends on it. A
//! [`LargeMotzkinPath`] additionally forbids the third level color on the
//! axis itself.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

/// One colored step: an up step, three level colors, two down colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    L1,
    L2,
    L3,
    D1,
    D2,
}

impl Step {
    /// All six steps, in the byte order of their compact symbols.
    pub const ALL: [Step; 6] = [Step::U, Step::L1, Step::L2, Step::L3, Step::D1, Step::D2];

    pub fn height_delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::L1 | Step::L2 | Step::L3 => 0,
            Step::D1 | Step::D2 => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Step::U => 'U',
            Step::L1 => 'a',
            Step::L2 => 'b',
            Step::L3 => 'c',
            Step::D1 => 'x',
            Step::D2 => 'y',
        }
    }

    pub fn from_symbol(c: char) -> Option<Step> {
        Some(match c {
            'U' => Step::U,
            'a' => Step::L1,
            'b' => Step::L2,
            'c' => Step::L3,
            'x' => Step::D1,
            'y' => Step::D2,
            _ => return None,
        })
    }

    pub fn is_level(self) -> bool {
        matches!(self, Step::L1 | Step::L2 | Step::L3)
    }

    pub fn is_down(self) -> bool {
        matches!(self, Step::D1 | Step::D2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unexpected character {found:?} at byte offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub found: char,
}

/// Why a word fails one of the path validity layers.
///
/// Positions are 0-based step indices.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path goes below the axis at step {0}")]
    NegativeHeight(usize),
    #[error("path ends at height {0}, not on the axis")]
    NonzeroFinalHeight(i64),
    #[error("level step of color 3 on the axis at step {0}")]
    AxisL3(usize),
    #[error("level step on the axis at step {0}")]
    AxisLevel(usize),
}

/// A raw step sequence. May or may not be a valid path.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord(Vec<Step>);

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        PathWord(steps)
    }

    pub fn empty() -> Self {
        PathWord(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Height before each step, followed by the final height.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = 0;
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(0);
        for s in &self.0 {
            h += s.height_delta();
            out.push(h);
        }
        out
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl FromIterator<Step> for PathWord {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        PathWord(iter.into_iter().collect())
    }
}

pub fn parse_path(text: &str) -> Result<PathWord, ParseError> {
    text.char_indices()
        .map(|(offset, c)| Step::from_symbol(c).ok_or(ParseError { offset, found: c }))
        .collect()
}

pub fn render_path(word: &PathWord) -> String {
    word.to_string()
}

/// A (3,2)-Motzkin path: prefix heights nonnegative, final height zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinPath(PathWord);

impl MotzkinPath {
    pub fn word(&self) -> &PathWord {
        &self.0
    }

    pub fn into_word(self) -> PathWord {
        self.0
    }

    /// Index of every level-3 step taken at height zero.
    pub fn axis_l3_positions(&self) -> Vec<usize> {
        let mut h = 0;
        let mut out = Vec::new();
        for (i, s) in self.0.steps().iter().enumerate() {
            if h == 0 && *s == Step::L3 {
                out.push(i);
            }
            h += s.height_delta();
        }
        out
    }

    pub(crate) fn from_word_unchecked(word: PathWord) -> Self {
        debug_assert!(validate_motzkin(&word).is_ok(), "{word}");
        MotzkinPath(word)
    }
}

impl Deref for MotzkinPath {
    type Target = PathWord;
    fn deref(&self) -> &PathWord {
        &self.0
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<PathWord> for MotzkinPath {
    type Error = PathError;
    fn try_from(word: PathWord) -> Result<Self, PathError> {
        validate_motzkin(&word)?;
        Ok(MotzkinPath(word))
    }
}

/// A (3,2)-Motzkin path whose axis level steps use only colors 1 and 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LargeMotzkinPath(MotzkinPath);

impl LargeMotzkinPath {
    pub fn motzkin(&self) -> &MotzkinPath {
        &self.0
    }

    pub fn into_motzkin(self) -> MotzkinPath {
        self.0
    }

    pub(crate) fn from_word_unchecked(word: PathWord) -> Self {
        debug_assert!(validate_large(&word).is_ok(), "{word}");
        LargeMotzkinPath(MotzkinPath(word))
    }
}

impl Deref for LargeMotzkinPath {
    type Target = PathWord;
    fn deref(&self) -> &PathWord {
        &self.0 .0
    }
}

impl fmt::Display for LargeMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<PathWord> for LargeMotzkinPath {
    type Error = PathError;
    fn try_from(word: PathWord) -> Result<Self, PathError> {
        validate_large(&word)?;
        Ok(LargeMotzkinPath(MotzkinPath(word)))
    }
}

impl TryFrom<MotzkinPath> for LargeMotzkinPath {
    type Error = PathError;
    fn try_from(path: MotzkinPath) -> Result<Self, PathError> {
        match path.axis_l3_positions().first() {
            Some(&i) => Err(PathError::AxisL3(i)),
            None => Ok(LargeMotzkinPath(path)),
        }
    }
}

pub fn validate_motzkin(word: &PathWord) -> Result<MotzkinPath, PathError> {
    let mut h = 0i64;
    for (i, s) in word.steps().iter().enumerate() {
        h += s.height_delta();
        if h < 0 {
            return Err(PathError::NegativeHeight(i));
        }
    }
    if h != 0 {
        return Err(PathError::NonzeroFinalHeight(h));
    }
    Ok(MotzkinPath(word.clone()))
}

pub fn validate_large(word: &PathWord) -> Result<LargeMotzkinPath, PathError> {
    LargeMotzkinPath::try_from(validate_motzkin(word)?)
}
