//! Large (3,2)-Motzkin paths and noncrossing linked partitions.
//!
//! The crate implements a recursive bijection `phi` from large (3,2)-Motzkin
//! paths of length `n` to noncrossing linked partitions of `[n+1]`, its
//! inverse, a 2-to-1 map from ordinary (3,2)-Motzkin paths onto large ones,
//! and exact counting of the sequences these families produce (large and
//! little Schröder numbers among them).
//!
//! Paths are written one character per step: `U` for an up step, `a`/`b`/`c`
//! for the three level colors and `x`/`y` for the two down colors.
//! Partitions are written as blocks, `{1,3,4}{2}`.
//!
//! ```
//! use schroder::{bijection, structures::parse_path, structures::validate_large};
//!
//! let path = validate_large(&parse_path("UbxUbUxcUycy").unwrap()).unwrap();
//! let pi = bijection::phi(&path);
//! assert_eq!(pi.to_string(), "{1,3,4}{2}{4,13}{5,6,7}{8,10,11}{9}{11,12}");
//! assert_eq!(bijection::phi_inv(&pi).unwrap(), path);
//! ```

pub mod bijection;
pub mod counting;
pub mod decompose;
pub mod doubling;
pub mod enumerate;
pub mod structures;
pub mod verify;

pub use structures::{
    Arc, LargeMotzkinPath, LinkedPartition, MotzkinPath, NclPartition, PathWord, Record,
    SchroderPath, SchroderStep, SchroderVariant, Step,
};
