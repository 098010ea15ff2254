//! `C₀(T)` for a finite `T`, realised inside `C(T_∞)` as the functions that
//! vanish at an adjoined point at infinity.
//!
//! [`embed`](CompactifiedSpace::embed) and [`restrict`](CompactifiedSpace::restrict)
//! are mutually inverse isometric lattice isomorphisms between `C₀(T)` and
//! that ideal.

use crate::error::{Error, Result};
use crate::linalg::Basis;
use crate::pair::Mode;
use crate::relation::{extract_relations, relation_space, Relation, RelationSystem};
use crate::scalar::Scalar;
use crate::space::{FiniteSpace, FunctionVec, Subspace};

pub const DEFAULT_INFINITY_LABEL: &str = "∞";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactifiedSpace {
    base: FiniteSpace,
    infinity_label: String,
    full: FiniteSpace,
}

impl CompactifiedSpace {
    pub fn new(base: &FiniteSpace, infinity_label: &str) -> Result<Self> {
        if base.contains(infinity_label) {
            return Err(Error::InfinityCollision(infinity_label.to_string()));
        }
        let labels = base.labels().iter().cloned().chain([infinity_label.to_string()]);
        Ok(CompactifiedSpace {
            base: base.clone(),
            infinity_label: infinity_label.to_string(),
            full: FiniteSpace::new(labels)?,
        })
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn full(&self) -> &FiniteSpace {
        &self.full
    }

    pub fn infinity_label(&self) -> &str {
        &self.infinity_label
    }

    /// Index of the point at infinity in the full space (always last).
    pub fn infinity(&self) -> usize {
        self.base.len()
    }

    /// Extends `f` by zero at infinity.
    pub fn embed(&self, f: &FunctionVec) -> Result<FunctionVec> {
        if f.space() != &self.base {
            return Err(Error::SpaceMismatch);
        }
        let mut values = f.values().to_vec();
        values.push(Scalar::zero());
        FunctionVec::new(&self.full, values)
    }

    /// Drops the value at infinity, which must be zero.
    pub fn restrict(&self, f: &FunctionVec) -> Result<FunctionVec> {
        if f.space() != &self.full {
            return Err(Error::SpaceMismatch);
        }
        let (at_inf, rest) = f.values().split_last().expect("full space is nonempty");
        if !at_inf.is_zero() {
            return Err(Error::NonVanishing(at_inf.to_string()));
        }
        FunctionVec::new(&self.base, rest.to_vec())
    }

    pub fn embed_subspace(&self, a: &Subspace) -> Result<Subspace> {
        if a.space() != &self.base {
            return Err(Error::SpaceMismatch);
        }
        let rows: Vec<Vec<Scalar>> = a
            .basis()
            .vectors()
            .iter()
            .map(|v| v.iter().cloned().chain([Scalar::zero()]).collect())
            .collect();
        Subspace::span(&self.full, &rows)
    }

    /// Restriction of a subspace of functions vanishing at infinity.
    pub fn restrict_subspace(&self, a: &Subspace) -> Result<Subspace> {
        let mut rows = Vec::with_capacity(a.dim());
        for f in a.basis_functions() {
            rows.push(self.restrict(&f)?.into_values());
        }
        Subspace::new(&self.base, Basis::span(self.base.len(), &rows)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C0Analysis {
    /// Relations over `T` only.
    pub relations: RelationSystem,
    pub hull: Subspace,
    pub holds: bool,
}

/// Rewrites relations on `T_∞` into relations on `T` that cut out the same
/// functions among those vanishing at infinity.
fn rewrite_to_base(cs: &CompactifiedSpace, system: &RelationSystem) -> RelationSystem {
    let inf = cs.infinity();
    let rewritten = system.relations().iter().filter_map(|r| match (r.t == inf, r.s == inf) {
        (false, false) => Some(r.clone()),
        (false, true) => Some(Relation::zero(r.t)),
        (true, false) if r.lambda.is_positive() => Some(Relation::zero(r.s)),
        (true, _) => None,
    });
    RelationSystem::new(cs.base(), rewritten).expect("indices below infinity are base points")
}

/// Classifies a subspace of `C₀(T)` by transporting it into `C(T_∞)`.
pub fn c0_analyze(cs: &CompactifiedSpace, a: &Subspace, mode: Mode) -> Result<C0Analysis> {
    let lifted = cs.embed_subspace(a)?;
    let mut relations = extract_relations(&lifted, mode).relations().to_vec();
    relations.push(Relation::zero(cs.infinity()));
    let system = RelationSystem::new(cs.full(), relations)?;
    let full_hull = relation_space(&system);
    let holds = full_hull == lifted;
    Ok(C0Analysis {
        relations: rewrite_to_base(cs, &system),
        hull: cs.restrict_subspace(&full_hull)?,
        holds,
    })
}
