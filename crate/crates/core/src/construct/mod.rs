//! Explicit maximally recoverable codes with two and three heavy parities,
//! and the field searches that feed them.

mod h2;
mod h3;
mod search;

pub use h2::{build_h2, construct_h2, H2Parameters};
pub use h3::{build_h3, construct_h3, omega_set, H3Parameters};
pub use search::{
    char2_recipe, field_of_order, find_field_h2, find_field_h3, search_field_char2,
    search_field_prime, FieldSearchResult,
};
