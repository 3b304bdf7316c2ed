//! Soft covering based rough sets over finite universes.
//!
//! Subsets are bitmasks over a named [`Universe`] of at most 30 elements.
//! A covering soft set gives a [`SoftCoveringSpace`] with lower and upper
//! approximations; its blocks also generate finite topologies whose
//! interior and closure can be compared with the approximations. The
//! [`verify`] module checks the algebraic laws of these operators,
//! exhaustively or on seeded samples, and returns re-checkable witnesses.

pub mod cli;
pub mod covering;
pub mod document;
pub mod error;
pub mod limit;
pub mod pawlak;
pub mod sets;
pub mod soft_set;
pub mod topology;
pub mod verify;

pub use covering::{BlockPair, ClosureCheck, MinimalDescription, SoftCoveringSpace};
pub use document::{load_soft_set, parse_space, SpaceDocument};
pub use error::{Error, Result};
pub use limit::ExhaustiveLimit;
pub use pawlak::{PawlakSpace, RegionReport};
pub use sets::{complement, family_union, is_union_of_blocks, Bits, SetFamily, Subset, Universe};
pub use soft_set::{BinaryRelation, SoftSet};
pub use topology::{
    generate_from_subbase, lower_fixed_point_family, subbase_base, upper_fixed_point_family, Origin, TopologyCheck,
    TopologyFamily, TopologyViolation,
};
pub use verify::{Claim, Mode, PropertyId, Status, Witness};
