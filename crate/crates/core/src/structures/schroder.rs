//! Large and little Schröder paths, written over `U` (1,1), `F` (2,0) and
//! `D` (1,-1).

use std::fmt;

use super::path::{ParseError, PathError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchroderStep {
    Up,
    Level,
    Down,
}

impl SchroderStep {
    /// Byte order of the symbols: `D` < `F` < `U`.
    pub const ALL: [SchroderStep; 3] = [SchroderStep::Down, SchroderStep::Level, SchroderStep::Up];

    pub fn symbol(self) -> char {
        match self {
            SchroderStep::Up => 'U',
            SchroderStep::Level => 'F',
            SchroderStep::Down => 'D',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'U' => Some(SchroderStep::Up),
            'F' => Some(SchroderStep::Level),
            'D' => Some(SchroderStep::Down),
            _ => None,
        }
    }

    pub fn height_delta(self) -> i64 {
        match self {
            SchroderStep::Up => 1,
            SchroderStep::Level => 0,
            SchroderStep::Down => -1,
        }
    }

    /// Horizontal extent of the step.
    pub fn width(self) -> usize {
        match self {
            SchroderStep::Level => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchroderVariant {
    Large,
    /// No level step on the axis.
    Little,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchroderPath {
    steps: Vec<SchroderStep>,
    variant: SchroderVariant,
}

impl SchroderPath {
    pub fn steps(&self) -> &[SchroderStep] {
        &self.steps
    }

    pub fn variant(&self) -> SchroderVariant {
        self.variant
    }

    /// `n` for a path from (0,0) to (2n,0).
    pub fn half_length(&self) -> usize {
        self.steps.iter().map(|s| s.width()).sum::<usize>() / 2
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<SchroderStep>, variant: SchroderVariant) -> Self {
        debug_assert!(validate_schroder(&steps, variant).is_ok());
        SchroderPath { steps, variant }
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

pub fn parse_schroder(text: &str) -> Result<Vec<SchroderStep>, ParseError> {
    text.char_indices()
        .map(|(offset, c)| SchroderStep::from_symbol(c).ok_or(ParseError { offset, found: c }))
        .collect()
}

pub fn validate_schroder(
    steps: &[SchroderStep],
    variant: SchroderVariant,
) -> Result<SchroderPath, PathError> {
    let mut h = 0i64;
    for (i, s) in steps.iter().enumerate() {
        if variant == SchroderVariant::Little && h == 0 && *s == SchroderStep::Level {
            return Err(PathError::AxisLevel(i));
        }
        h += s.height_delta();
        if h < 0 {
            return Err(PathError::NegativeHeight(i));
        }
    }
    if h != 0 {
        return Err(PathError::NonzeroFinalHeight(h));
    }
    Ok(SchroderPath {
        steps: steps.to_vec(),
        variant,
    })
}
