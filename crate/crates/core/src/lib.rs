//! Automorphism groups of Cayley graphs of symmetric groups over
//! transposition sets.
//!
//! The pipeline: pick a transposition set S ⊆ S_n, build the Cayley graph
//! X = Cay(S_n, S), search Aut(X), and test whether it splits as the direct
//! product of the right regular image of S_n and the lifted automorphisms of
//! the transposition graph T(S). [`verify::verify_direct_product`] runs the
//! whole pipeline and returns a field-by-field report.
//!
//! Heavy loops (Cayley construction, automorphism search, the brute-force
//! oracle) run data-parallel under the `parallel` feature (on by default)
//! and produce bit-identical results to the sequential fallback.

pub mod autsearch;
pub mod cayley;
pub mod error;
pub mod exec;
pub mod graph;
pub mod group;
pub mod perm;
pub mod tgraph;
pub mod verify;

pub use autsearch::{
    automorphism_generators, automorphism_group, brute_force_automorphisms, equitable_refine,
    is_edge_preserving, vertex_stabilizer, Coloring,
};
pub use cayley::{
    build_cayley, build_cayley_with, family_generators, left_regular_embed, mbs_generators,
    right_regular_embed, CayleyGraph, Family,
};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use graph::Graph;
pub use group::PermGroup;
pub use perm::Perm;
pub use tgraph::{
    build_transposition_graph, normality_precheck, small_graph_automorphisms, Precheck,
    TranspositionGraph, TranspositionSet,
};
pub use verify::{
    is_normal_cayley, verify_conjugation_fixes_generators, verify_direct_product,
    verify_lambda_automorphisms, verify_mbs_theorem, verify_semidirect_stabilizer,
    verify_unique_factorization, DecompositionReport,
};
