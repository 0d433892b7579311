//! Finite AG-groupoids (magmas satisfying `(ab)c = (cb)a`): Cayley tables,
//! ideal and bi-ideal structure, the spectral topologies on strongly
//! irreducible bi-ideals and on prime ideals, exhaustive model search, and a
//! claim harness that checks structural statements on each instance.

pub mod axioms;
pub mod claim;
pub mod elemset;
pub mod error;
pub mod groupoid;
pub mod harness;
pub mod ideals;
pub mod primality;
pub mod principal;
pub mod search;
pub mod table;
pub mod topology;

pub use axioms::{AxiomReport, Law};
pub use claim::{ClaimResult, Status, Witness};
pub use elemset::{ElemSet, SubsetFamily};
pub use error::{Error, Result};
pub use groupoid::AgGroupoid;
pub use harness::{run_claim, run_corpus, run_corpus_capped, ClaimId, CorpusReport};
pub use ideals::{IdealKind, Verdict};
pub use search::{census_counts, enumerate_ag_groupoids, Census, SearchSpec};
pub use table::AgTable;
pub use topology::{FiniteTopology, Space};
