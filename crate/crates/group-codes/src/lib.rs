//! Group codes over finite chain rings.
//!
//! A group code is a left ideal in a group algebra, viewed as a linear code
//! of length |G|. This crate works with two algebras at once: F_p G over the
//! residue field, where projective codes are generated by idempotents, and
//! RG over a chain ring R (Z/p^l Z or F_p[u]/(u^l)). Relative projective
//! codes in RG correspond to nested chains C_0 <= ... <= C_(l-1) of
//! projective codes in F_p G; the crate builds codes from chains, extracts
//! chains back, computes duals and distances, and searches exhaustively for
//! the best self-dual dihedral codes over Z/4Z.

pub mod chain;
pub mod error;
pub mod falgebra;
pub mod fcodes;
pub mod group;
pub mod jsonio;
pub mod linalg;
pub mod packed;
pub mod poly;
pub mod ralgebra;
pub mod rcode;
pub mod ring;
pub mod rlinalg;
pub mod search;
pub mod textio;
pub mod verify;

pub use chain::{
    build_code_from_chain, chain_extract, decide_relative_projective, euclidean_weights,
    min_hamming_r, CodeChain, DistanceMode, EuclideanReport, Verdict,
};
pub use error::{Error, Result};
pub use falgebra::FAlgebraElement;
pub use fcodes::GroupCodeF;
pub use group::FiniteGroup;
pub use ralgebra::{lift_idempotent, RAlgebraElement};
pub use rcode::RCode;
pub use ring::{ChainRingSpec, RScalar, RingFlavor};
pub use search::{
    enumerate_idempotents_cyclic, enumerate_idempotents_exhaustive, search_selfdual_dihedral_z4,
    SearchOptions, SearchReport,
};
pub use verify::{run_suite, Suite, SuiteOutcome};
