//! Cut complexes of graphs.
//!
//! Build Δ_k(G), compute its integer homology, search for shellings and
//! construct discrete Morse matchings on it.

#![allow(clippy::needless_range_loop)]

pub mod complex;
pub mod cut;
pub mod error;
pub mod family;
pub mod graph;
pub mod homology;
pub mod morse;
pub mod shelling;
pub mod snf;
pub mod vertex_set;

pub use complex::{Complex, Face, Local, Properties};
pub use cut::{
    connected_kset_census, cut_complex, disconnected_ksets, facets_via_ridges, predicted_betti, realize_as_cut_complex,
    skeleton_condition_and_euler, BettiPrediction, ConnectedSetCensus, Realization, SkeletonCondition,
};
pub use error::{Error, Result};
pub use family::{family, Family};
pub use graph::{combine, Combine, Graph};
pub use homology::{boundary_matrices, reduced_homology, HomologyGroup, HomologyReport};
pub use morse::{
    element_matching_sequence, prism_critical_faces, prism_matching_order, restricted_matching, tree_matching_order,
    verify_acyclic_and_critical, MorseCensus, MorseMatching, MorsePair,
};
pub use shelling::{
    cycle_lex_order, find_shelling, find_shelling_with, h_vector, verify_shelling_order, OrderCheck, SearchOptions,
    ShellingCertificate, Verdict, DEFAULT_BUDGET,
};
pub use snf::{smith_normal_form, IntegerMatrix, SmithForm};
pub use vertex_set::VertexSet;
