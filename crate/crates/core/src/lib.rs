//! Exact decision procedures for sublattices and subalgebras of `C(X)` on a
//! finite space `X`.
//!
//! A subspace is a sublattice exactly when it is cut out by relations
//! `f(t) = λ·f(s)` with `λ ∈ [0, 1]`, and a subalgebra exactly when it is cut
//! out by such relations with `λ ∈ {0, 1}`. This crate extracts those
//! relations from the two-point projections of a subspace, rebuilds the
//! subspace they define (the hull) and compares.
//!
//! All arithmetic is over exact rationals.

pub mod analysis;
pub mod c0;
pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod pair;
pub mod relation;
pub mod scalar;
pub mod space;

pub use analysis::{
    analyze, decide, direct_algebra_check, hull, iterative_closure_oracle, member_by_pairs,
    separation_report, witness, AnalysisReport, Closure, Op, SeparationReport, Witness,
};
pub use c0::{c0_analyze, C0Analysis, CompactifiedSpace};
pub use error::{Error, Result};
pub use linalg::{canonical_basis, compare, kernel, member, Basis, Containment, Matrix};
pub use pair::{classify_line, classify_pair, project_pair, Mode, PairClass, PairProjection};
pub use relation::{
    canonicalize, extract_relations, relation_space, satisfies, Relation, RelationRecord,
    RelationSystem,
};
pub use scalar::Scalar;
pub use space::{lattice_ops, product, FiniteSpace, FunctionVec, Subspace};
