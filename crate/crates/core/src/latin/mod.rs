//! Partial latin squares, latin bitrades and their constructions.

mod bitrade;
mod construct;
pub mod examples;
mod io;
mod render;
mod square;
mod tau;

pub use bitrade::{Bitrade, Provenance};
pub use construct::{from_coset_data, from_group, CosetData, GroupTripleInput};
pub use io::{from_json, read_bitrade, to_json, write_bitrade, BitradeDocument};
pub use render::render_text;
pub use square::{Alphabets, PartialLatinSquare, Role, Triple};
pub use tau::{beta_maps, from_perms, roundtrip_check, separation_violation, tau_perms, RoundTrip, SeparationWitness, TauTriple};


