//! Exact arithmetic on partial transformations of `{1, ..., n}`, monoid
//! presentations for the symmetric inverse monoid `I_n`, the full
//! transformation monoid `T_n`, and the partial transformation monoid `PT_n`,
//! and the machinery to machine-check that each presentation defines its
//! target monoid at small degree: Froidure-Pin enumeration of concrete
//! monoids, congruence enumeration and Knuth-Bendix completion for presented
//! monoids, elementary-sequence (derivation) search, permutation group
//! closure, and a verification harness for generating-set lemmas,
//! lower-bound witnesses and relation irredundancy.

pub mod builders;
pub mod cycles;
pub mod engine;
pub mod error;
pub mod sn;
pub mod transform;
pub mod verify;
pub mod word;

pub use cycles::{parse_cycles, CycleNotation};
pub use error::{Error, Result};
pub use transform::{KernelType, Parity, PartialTransformation, Stabiliser};
pub use word::{Alphabet, Assignment, Family, Letter, Presentation, Relation, Word};
