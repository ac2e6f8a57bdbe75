//! Finite hypermaps as permutation representations of the free product
//! Δ = C₂ ∗ C₂ ∗ C₂, together with the bipartite constructions arising
//! from epimorphisms Δ^0 → Δ, where Δ^0 is the even-index subgroup on the
//! generators a = R₁, b = R₂, c = R₁^R₀, d = R₂^R₀.
//!
//! The crate provides:
//! - word algebra for Δ and Δ^0 ([`word`]),
//! - the flag-set representation with cells, Euler characteristic, genus,
//!   orientability, boundary and colorings ([`hypermap`]),
//! - Todd–Coxeter coset enumeration over either group ([`presentation`]),
//! - duals, double covers, covering cores, closure covers and the
//!   φ-construction of bipartite hypermaps ([`construct`]),
//! - coverings, isomorphisms, automorphisms, regularity tests and image
//!   membership / preimage recovery for the built-in epimorphisms
//!   ([`morphism`]),
//! - named families of small hypermaps and seeded random generation
//!   ([`families`]),
//! - text/JSON serialization ([`io`]) and the claim-verification suite
//!   ([`verify`]).

pub mod construct;
pub mod families;
pub mod hypermap;
pub mod io;
pub mod morphism;
pub mod presentation;
pub mod verify;
pub mod word;

pub use construct::{
    closure_cover, covering_core, double_cover, monodromy_elements, phi_construct, sigma_dual,
    ConstructError,
};
pub use families::FamilyError;
pub use hypermap::{BipartiteType, CellKind, Hypermap, HypermapError, InvariantReport};
pub use morphism::{
    automorphism_count, automorphisms, b_quotient_min_generators, find_covering, in_image_of,
    is_bipartite_regular, is_isomorphic, is_regular, is_theta_regular, recover_preimage, FlagMap,
    MorphismError,
};
pub use presentation::{
    bipartite_hypermap_from_b_relators, regular_hypermap_from_delta_relators, CosetTable,
    EnumerationError, Presentation, DEFAULT_MAX_COSETS,
};
pub use word::{BLetter, BWord, DeltaWord, EpimorphismSpec, Sigma, SpecError, ThetaClass};
