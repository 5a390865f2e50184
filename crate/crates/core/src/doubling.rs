//! Two-to-one map from (3,2)-Motzkin paths of length `n-1` onto large
//! (3,2)-Motzkin paths of length `n`.
//!
//! A path with no axis level-3 step gets a final axis level step of color 1
//! or 2. Otherwise its first axis level-3 step is removed, everything after
//! it is raised by one, and the raised part is closed with a down step of
//! color 1 or 2. The [`ChoiceBit`] picks the color in both branches.

use thiserror::Error;

use crate::structures::{LargeMotzkinPath, MotzkinPath, PathWord, Step};

/// `Zero` selects `a`/`x`, `One` selects `b`/`y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChoiceBit {
    Zero,
    One,
}

impl ChoiceBit {
    pub const BOTH: [ChoiceBit; 2] = [ChoiceBit::Zero, ChoiceBit::One];

    fn level(self) -> Step {
        match self {
            ChoiceBit::Zero => Step::L1,
            ChoiceBit::One => Step::L2,
        }
    }

    fn down(self) -> Step {
        match self {
            ChoiceBit::Zero => Step::D1,
            ChoiceBit::One => Step::D2,
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }
}

impl TryFrom<u8> for ChoiceBit {
    type Error = DoublingError;
    fn try_from(b: u8) -> Result<Self, DoublingError> {
        match b {
            0 => Ok(ChoiceBit::Zero),
            1 => Ok(ChoiceBit::One),
            other => Err(DoublingError::BadBit(other)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DoublingError {
    #[error("the empty path has no preimage")]
    EmptyPath,
    #[error("choice bit must be 0 or 1, got {0}")]
    BadBit(u8),
}

pub fn double(q: &MotzkinPath, bit: ChoiceBit) -> LargeMotzkinPath {
    let steps = q.steps();
    let mut out = Vec::with_capacity(steps.len() + 1);
    match q.axis_l3_positions().first() {
        None => {
            out.extend_from_slice(steps);
            out.push(bit.level());
        }
        Some(&i) => {
            out.extend_from_slice(&steps[..i]);
            out.push(Step::U);
            out.extend_from_slice(&steps[i + 1..]);
            out.push(bit.down());
        }
    }
    LargeMotzkinPath::from_word_unchecked(PathWord::new(out))
}

pub fn project(p: &LargeMotzkinPath) -> Result<(MotzkinPath, ChoiceBit), DoublingError> {
    let steps = p.steps();
    let (&last, body) = steps.split_last().ok_or(DoublingError::EmptyPath)?;
    let (word, bit) = match last {
        Step::L1 | Step::L2 => {
            let bit = if last == Step::L1 {
                ChoiceBit::Zero
            } else {
                ChoiceBit::One
            };
            (body.to_vec(), bit)
        }
        Step::D1 | Step::D2 => {
            let bit = if last == Step::D1 {
                ChoiceBit::Zero
            } else {
                ChoiceBit::One
            };
            // opening of the final elevated component: last step leaving the axis
            let heights = p.heights();
            let open = (0..body.len())
                .rev()
                .find(|&i| heights[i] == 0 && steps[i] == Step::U)
                .expect("a closing down step has a matching up step");
            let mut word = body.to_vec();
            word[open] = Step::L3;
            (word, bit)
        }
        // a large path ends at height 0, so its last step is a level or a down
        other => unreachable!("large path cannot end with {other:?}"),
    };
    Ok((MotzkinPath::from_word_unchecked(PathWord::new(word)), bit))
}
