//! Relation triples `(t, s, λ)` meaning `f(t) = λ·f(s)`, the systems they
//! form, and the subspaces they cut out.

use std::collections::BTreeSet;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix};
use crate::pair::{classify_pair, project_indices, Mode, PairClass};
use crate::scalar::Scalar;
use crate::space::{FiniteSpace, FunctionVec, Subspace};

/// The constraint `f(t) = lambda · f(s)` on point indices of a space.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Relation {
    pub t: usize,
    pub s: usize,
    pub lambda: Scalar,
}

impl Relation {
    pub fn new(t: usize, s: usize, lambda: Scalar) -> Self {
        Relation { t, s, lambda }
    }

    /// `f(t) = 0`, stored as `(t, t, 0)`.
    pub fn zero(t: usize) -> Self {
        Relation { t, s: t, lambda: Scalar::zero() }
    }

    pub fn is_zero_constraint(&self) -> bool {
        self.t == self.s && self.lambda.is_zero()
    }

    /// `true` when `λ ∈ {0, 1}`.
    pub fn is_algebraic(&self) -> bool {
        self.lambda.is_zero() || self.lambda.is_one()
    }

    /// Constraint row `e_t − λ·e_s` over a space with `n` points.
    fn row(&self, n: usize) -> Vec<Scalar> {
        let mut row = vec![Scalar::zero(); n];
        row[self.t] += Scalar::one();
        row[self.s] -= &self.lambda;
        row
    }
}

/// Relation in its wire form: labels instead of indices, `lambda` as a fraction string.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RelationRecord {
    pub t: String,
    pub s: String,
    pub lambda: Scalar,
}

/// A set of relations over one space, kept sorted and free of duplicates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationSystem {
    space: FiniteSpace,
    relations: Vec<Relation>,
}

impl RelationSystem {
    /// Checks every index is in range and every `λ ∈ [0, 1]`; sorts and dedups.
    pub fn new(space: &FiniteSpace, relations: impl IntoIterator<Item = Relation>) -> Result<Self> {
        let n = space.len();
        let mut set = BTreeSet::new();
        for r in relations {
            for idx in [r.t, r.s] {
                if idx >= n {
                    return Err(Error::UnknownLabel(format!("#{idx}")));
                }
            }
            if r.lambda.is_negative() || r.lambda > Scalar::one() {
                return Err(Error::LambdaOutOfRange(r.lambda.to_string()));
            }
            set.insert(r);
        }
        Ok(RelationSystem { space: space.clone(), relations: set.into_iter().collect() })
    }

    pub fn empty(space: &FiniteSpace) -> Self {
        RelationSystem { space: space.clone(), relations: Vec::new() }
    }

    pub fn from_records(space: &FiniteSpace, records: &[RelationRecord]) -> Result<Self> {
        let relations = records
            .iter()
            .map(|r| Ok(Relation::new(space.index(&r.t)?, space.index(&r.s)?, r.lambda.clone())))
            .collect::<Result<Vec<_>>>()?;
        RelationSystem::new(space, relations)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn records(&self) -> Vec<RelationRecord> {
        self.relations
            .iter()
            .map(|r| RelationRecord {
                t: self.space.label(r.t).to_string(),
                s: self.space.label(r.s).to_string(),
                lambda: r.lambda.clone(),
            })
            .collect()
    }

    /// Points carrying a stored `(t, t, 0)` relation.
    pub fn zero_points(&self) -> Vec<usize> {
        self.relations.iter().filter(|r| r.is_zero_constraint()).map(|r| r.t).collect()
    }
}

impl Serialize for RelationSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let records = self.records();
        let mut seq = serializer.serialize_seq(Some(records.len()))?;
        for r in &records {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

/// `f(t) = λ·f(s)`, exactly.
pub fn satisfies(f: &FunctionVec, r: &Relation) -> bool {
    let v = f.values();
    v[r.t] == &r.lambda * &v[r.s]
}

/// The subspace `{f : f(t) = λ f(s) for every (t, s, λ) in the system}`.
pub fn relation_space(system: &RelationSystem) -> Subspace {
    let n = system.space.len();
    let rows: Vec<Vec<Scalar>> = system.relations.iter().map(|r| r.row(n)).collect();
    let matrix = Matrix::from_rows(n, &rows).expect("rows have the space's width");
    let basis = kernel(&matrix).expect("space is nonempty");
    Subspace::new(&system.space, basis).expect("kernel lives on the space")
}

/// Relations implied by one pair class, with `x < y` the projected points.
fn pair_relations(class: &PairClass, x: usize, y: usize, mode: Mode, out: &mut BTreeSet<Relation>) {
    match class {
        PairClass::Zero => {
            out.insert(Relation::zero(x));
            out.insert(Relation::zero(y));
        }
        PairClass::Full | PairClass::LineMixed { .. } => {}
        PairClass::LineAligned { a, b } => {
            if a.is_zero() {
                out.insert(Relation::zero(x));
            } else if b.is_zero() {
                out.insert(Relation::zero(y));
            } else if a == b {
                out.insert(Relation::new(x, y, Scalar::one()));
            } else if mode == Mode::Lattice {
                // The smaller coordinate is λ times the larger one.
                if b.is_one() {
                    out.insert(Relation::new(x, y, a.clone()));
                } else {
                    out.insert(Relation::new(y, x, b.clone()));
                }
            }
        }
    }
}

/// Collects every relation satisfied by the subspace that is visible on a
/// single pair of points: zero constraints, equalities, and (lattice mode)
/// proportionalities with `0 < λ < 1`.
///
/// The result is canonical: zero points appear only as `(t, t, 0)` and each
/// unordered pair carries at most one relation.
pub fn extract_relations(a: &Subspace, mode: Mode) -> RelationSystem {
    let n = a.space().len();
    let mut out = BTreeSet::new();
    if n == 1 {
        if a.dim() == 0 {
            out.insert(Relation::zero(0));
        }
    } else {
        for x in 0..n {
            for y in x + 1..n {
                let class = classify_pair(&project_indices(a.basis(), x, y));
                pair_relations(&class, x, y, mode, &mut out);
            }
        }
    }
    RelationSystem { space: a.space().clone(), relations: out.into_iter().collect() }
}

/// Rewrites a system into canonical form without changing the subspace it defines.
///
/// Every point forced to vanish (directly or through a chain of relations)
/// gets a `(t, t, 0)` relation and all other relations touching it are
/// dropped; vacuous `(t, t, 1)` disappears; `(s, t, 1)` is oriented so the
/// earlier point comes first. Conflicting relations on the same pair always
/// force both points to vanish, so they collapse to zero relations.
pub fn canonicalize(system: &RelationSystem) -> RelationSystem {
    let a = relation_space(system);
    let n = system.space.len();
    let vanishing: Vec<bool> =
        (0..n).map(|t| a.basis().vectors().iter().all(|v| v[t].is_zero())).collect();
    let mut out = BTreeSet::new();
    for t in (0..n).filter(|&t| vanishing[t]) {
        out.insert(Relation::zero(t));
    }
    for r in &system.relations {
        if r.t == r.s || vanishing[r.t] || vanishing[r.s] {
            continue;
        }
        let r = if r.lambda.is_one() && r.t > r.s {
            Relation::new(r.s, r.t, Scalar::one())
        } else {
            r.clone()
        };
        out.insert(r);
    }
    RelationSystem { space: system.space.clone(), relations: out.into_iter().collect() }
}
