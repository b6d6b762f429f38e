//! Exact-arithmetic construction of crossed group categories, crossed
//! bimodules, and their bimodule categories from finite presentations, with
//! machine verification of the structural identities relating them
//! (adjunction, separability splittings, character-double equivalence,
//! radical and decomposition counts).

pub mod centersep;
pub mod chardual;
pub mod crossed;
pub mod decomp;
pub mod elements;
pub mod exactla;
pub mod fincat;
pub mod fixtures;
pub mod groupact;
pub mod report;
pub mod search;
