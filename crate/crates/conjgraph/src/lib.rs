//! Conjugacy-class graphs of normal subgroups.
//!
//! Given a finite permutation group `G` and a normal subgroup `N`, the
//! elements of `N` split into G-conjugacy classes. The class graph has one
//! vertex per class of size greater than one, with an edge whenever two class
//! sizes share a prime divisor. This crate computes those graphs, analyzes
//! their components, distances and diameters, and mechanically checks a
//! family of structural statements about groups whose class graphs are
//! disconnected or have diameter three.

pub mod bitset;
pub mod classgraph;
pub mod constructions;
pub mod error;
pub mod group;
pub mod io;
pub mod perm;
pub mod structure;
pub mod theorems;

pub use classgraph::{build_graph, export_graph, isolated_pairs, summarize, ClassGraph, Diameter, GraphSummary};
pub use constructions::{catalog_build, GroupPair};
pub use error::{GroupError, Result};
pub use group::{g_classes_in, GClass, PermGroup, Subgroup};
pub use perm::Permutation;
pub use structure::{classify_structure, PrimeSet, StructureKind};
pub use theorems::{run_corpus, VerificationOutcome, Verdict};
