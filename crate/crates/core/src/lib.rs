//! Latin bitrades from finite groups and permutation triples, with
//! deciders for the structural properties of bitrades.

pub mod error;
pub mod families;
pub mod group;
pub mod latin;
pub mod properties;
pub mod search;
pub mod table;

pub use error::{Error, Result, Violation};
pub use group::{Element, Group, IndexedGroup, Perm};
pub use latin::{Bitrade, GroupTripleInput, PartialLatinSquare};
