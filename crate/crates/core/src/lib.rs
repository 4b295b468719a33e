//! Construction and classification of conjugacy class graphs of finite groups.
//!
//! The crate enumerates finite permutation groups from generators, builds the
//! commuting / nilpotent / solvable conjugacy class graphs (and the invariable
//! generation graph) on their non-central classes, recognizes the five
//! forbidden-subgraph classes (cograph, chordal, split, threshold, claw-free),
//! and runs a registry of executable checks over a fixed corpus of groups.
//!
//! Heavy inner loops (closure enumeration, centralizer scans, edge decisions)
//! run data-parallel via rayon when the `parallel` feature (default) is
//! enabled, and fall back to equivalent sequential code without it. Results
//! are identical under both modes.

pub mod classgraph;
pub mod error;
pub(crate) mod exec;
pub mod families;
pub mod field;
pub mod graph;
pub mod group;
pub mod perm;
pub mod projective;
pub mod shape;
pub mod subgroup;
pub mod verifier;

pub use classgraph::{ClassGraph, EdgeWitness, Relation};
pub use error::{Error, Result};
pub use families::{FixtureRecord, GroupSpec};
pub use field::{FieldElem, SmallField};
pub use graph::{PropertyReport, SimpleGraph, Witness, WitnessKind};
pub use group::{ConjClass, FiniteGroup};
pub use perm::Permutation;
pub use projective::{Matrix, ProjPoint};
pub use shape::ShapeExpr;
pub use subgroup::SubgroupHandle;
pub use verifier::{CheckStatus, ClassificationRow, TheoremCheck, Tier};

/// Default cap on group enumeration, in elements.
pub const DEFAULT_CAP: usize = 1_000_000;
