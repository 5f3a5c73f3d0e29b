//! The lattice of integer partitions under dominance, its standard formal
//! context and the arrow relations of that context.
//!
//! Arrows are available three ways: [`context::arrows_bruteforce`] evaluates
//! the definition on packed intents and extents, [`context::arrows_via_covers`]
//! uses the unique covers of irreducibles, and [`theorems::predicted_arrows`]
//! enumerates them from closed-form parameter families. All three agree.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod bitset;
pub mod closure;
pub mod context;
mod error;
pub mod irreducible;
pub mod lattice;
pub mod partition;
pub mod theorems;

pub use context::{ArrowRelations, FormalContext};
pub use error::Error;
pub use irreducible::{IrreducibleInfo, Kind, Template, TypeLabel};
pub use lattice::PartitionLattice;
pub use partition::Partition;
