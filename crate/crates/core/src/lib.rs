//! Maximally recoverable local reconstruction codes over small finite fields.
//!
//! The crate covers finite field arithmetic ([`field`]), exact linear algebra
//! ([`matrix`]), the code model with an exhaustive recoverability verifier and
//! erasure codec ([`lrc`]), explicit constructions for two and three heavy
//! parities ([`construct`]), and the elliptic-curve triple families that give
//! codes with three groups-of-three parities ([`elliptic`]).

pub mod cli;
pub mod combinat;
pub mod construct;
pub mod elliptic;
pub mod error;
pub mod field;
pub mod lrc;
pub mod matrix;
pub mod numtheory;
pub mod text;

pub use error::{Error, Result};
pub use field::{Elem, Field};

#[cfg(test)]
pub(crate) mod testutil {
    use proptest::test_runner::{Config, RngAlgorithm, RngSeed};

    pub const SEED: u64 = 0x5eed_1bc0_de00_0001;

    pub fn proptest_config(cases: u32) -> Config {
        Config {
            cases,
            rng_algorithm: RngAlgorithm::ChaCha,
            rng_seed: RngSeed::Fixed(SEED),
            failure_persistence: None,
            ..Config::default()
        }
    }
}
