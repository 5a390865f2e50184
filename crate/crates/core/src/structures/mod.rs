//! Value types for colored paths, Schröder paths and linked partitions.

pub mod ascii;
pub mod partition;
pub mod path;
pub mod schroder;

use serde::{Deserialize, Serialize};

pub use ascii::{render_partition_ascii, render_path_ascii};
pub use partition::{
    parse_partition, render_partition, validate_ncl, validate_ncl_blockwise, Arc, Block,
    LinkedPartition, NclError, NclPartition, PartitionError, PartitionParseError,
};
pub use path::{
    parse_path, render_path, validate_large, validate_motzkin, LargeMotzkinPath, MotzkinPath,
    ParseError, PathError, PathWord, Step,
};
pub use schroder::{
    parse_schroder, validate_schroder, SchroderPath, SchroderStep, SchroderVariant,
};

/// One line of machine-readable output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub kind: String,
    pub n: usize,
    pub text: String,
}

impl Record {
    /// `n` is the step count.
    pub fn path(kind: &str, word: &PathWord) -> Self {
        Record {
            kind: kind.to_string(),
            n: word.len(),
            text: word.to_string(),
        }
    }

    /// `n` is the vertex count.
    pub fn partition(p: &LinkedPartition) -> Self {
        Record {
            kind: "ncl".to_string(),
            n: p.n(),
            text: p.to_string(),
        }
    }

    /// `n` is the half-length.
    pub fn schroder(p: &SchroderPath) -> Self {
        let kind = match p.variant() {
            SchroderVariant::Large => "schroder-large",
            SchroderVariant::Little => "schroder-little",
        };
        Record {
            kind: kind.to_string(),
            n: p.half_length(),
            text: p.to_string(),
        }
    }
}
