//! Concrete families: wreaths, (weak) distributive laws and their triples,
//! Brzeziński crossed products, named fixtures, and a miner for weak laws.

pub mod algebras;
pub mod brz;
pub mod fixtures;
pub mod laws;
pub mod miner;
pub mod triples;

pub use brz::{check_brzezinski, check_dp, iterate_dp};
pub use laws::{
    check_distributive_law, check_wdl, check_wreath, quadruple_from_twisting_map, quadruple_from_wdl,
    quadruple_from_wreath,
};
pub use miner::{mine_wdl, AlgebraFamily, MinedLaw, MinerConfig, MinerOutcome};
pub use triples::{check_yang_baxter, iterate_triple, LawKind, LawTriple};
