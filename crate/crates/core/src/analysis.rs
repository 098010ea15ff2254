//! Hulls, closure decisions, counterexample witnesses and the independent
//! checks that cross-validate them.

use num_integer::Integer;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{compare, Basis, Containment};
use crate::pair::{classify_pair, project_indices, Mode, PairClass};
use crate::relation::{extract_relations, relation_space, RelationSystem};
use crate::scalar::Scalar;
use crate::space::{pointwise_max, pointwise_min, pointwise_product, FunctionVec, Subspace};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_BUDGET: usize = 1000;

/// Smallest relation-defined subspace containing `a`: the smallest
/// sublattice (lattice mode) or subalgebra (algebra mode) containing it.
pub fn hull(a: &Subspace, mode: Mode) -> Subspace {
    relation_space(&extract_relations(a, mode))
}

/// `true` iff `a` coincides with its hull.
pub fn decide(a: &Subspace, mode: Mode) -> bool {
    let h = hull(a, mode);
    compare(a.basis(), h.basis()).expect("same space") == Containment::Equal
}

/// Closure under multiplication checked directly on basis products; complete
/// because the product is bilinear.
pub fn direct_algebra_check(a: &Subspace) -> bool {
    let vs = a.basis().vectors();
    (0..vs.len()).all(|i| {
        (i..vs.len()).all(|j| a.basis().contains(&pointwise_product(&vs[i], &vs[j])).expect("same length"))
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Max,
    Min,
    Product,
}

impl Op {
    fn apply(self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        match self {
            Op::Max => pointwise_max(f, g),
            Op::Min => pointwise_min(f, g),
            Op::Product => pointwise_product(f, g),
        }
    }
}

/// `f, g ∈ A` with `op(f, g) ∉ A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub f: FunctionVec,
    pub g: FunctionVec,
    pub combined: FunctionVec,
    pub op: Op,
}

impl Witness {
    /// Re-checks the witness against `a` from scratch.
    pub fn is_valid_for(&self, a: &Subspace) -> bool {
        let recomputed = self.op.apply(self.f.values(), self.g.values());
        recomputed == self.combined.values()
            && a.contains(&self.f).unwrap_or(false)
            && a.contains(&self.g).unwrap_or(false)
            && !a.contains(&self.combined).unwrap_or(true)
    }
}

/// Random rational combination of the basis, coefficients `p/q` with
/// `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub(crate) fn random_member(basis: &Basis, rng: &mut impl Rng) -> Vec<Scalar> {
    let coeffs: Vec<Scalar> = (0..basis.rank())
        .map(|_| Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)).expect("nonzero denominator"))
        .collect();
    basis.combine(&coeffs)
}

/// Integer direction `(p, q)` with `gcd(|p|, |q|) = 1` on the line through `(a, b)`, same orientation.
fn primitive_direction(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
    let lcm = a.denom().lcm(b.denom());
    let p = a.numer() * (&lcm / a.denom());
    let q = b.numer() * (&lcm / b.denom());
    let g = p.abs().gcd(&q.abs());
    (Scalar::from(p / &g), Scalar::from(q / &g))
}

/// Lifts the two-point witness `min(h, 2h)` for a mixed-sign pair projection.
fn lift_mixed_pair(a: &Subspace) -> Option<Witness> {
    let basis = a.basis();
    let n = a.space().len();
    for x in 0..n {
        for y in x + 1..n {
            let PairClass::LineMixed { a: da, b: db } = classify_pair(&project_indices(basis, x, y)) else {
                continue;
            };
            let (p, q) = primitive_direction(&da, &db);
            let v = basis
                .vectors()
                .iter()
                .find(|v| !v[x].is_zero() || !v[y].is_zero())
                .expect("projection has rank one");
            let scale = if p.is_zero() { &v[y] / &q } else { &v[x] / &p };
            let h: Vec<Scalar> = v.iter().map(|c| c / &scale).collect();
            let two_h: Vec<Scalar> = h.iter().map(|c| c * &Scalar::from_int(2)).collect();
            let combined = pointwise_min(&h, &two_h);
            debug_assert!(!basis.contains(&combined).unwrap());
            let space = a.space();
            return Some(Witness {
                f: FunctionVec::new(space, h).expect("length"),
                g: FunctionVec::new(space, two_h).expect("length"),
                combined: FunctionVec::new(space, combined).expect("length"),
                op: Op::Min,
            });
        }
    }
    None
}

fn found(a: &Subspace, f: Vec<Scalar>, g: Vec<Scalar>, op: Op) -> Option<Witness> {
    let combined = op.apply(&f, &g);
    if a.basis().contains(&combined).expect("length") {
        return None;
    }
    let space = a.space();
    Some(Witness {
        f: FunctionVec::new(space, f).expect("length"),
        g: FunctionVec::new(space, g).expect("length"),
        combined: FunctionVec::new(space, combined).expect("length"),
        op,
    })
}

/// Searches for an explicit failure of closure.
///
/// Lattice mode first lifts a mixed-sign pair projection when one exists,
/// then tries pairs of basis vectors, then `budget` seeded random pairs.
/// Algebra mode tries products of basis vectors, which always succeeds for a
/// non-subalgebra. Returns `Ok(None)` if the random phase runs dry.
pub fn witness(a: &Subspace, mode: Mode, seed: u64, budget: usize) -> Result<Option<Witness>> {
    if decide(a, mode) {
        return Err(Error::AlreadyClosed(mode.noun()));
    }
    let op = match mode {
        Mode::Lattice => Op::Max,
        Mode::Algebra => Op::Product,
    };
    if mode == Mode::Lattice {
        if let Some(w) = lift_mixed_pair(a) {
            return Ok(Some(w));
        }
    }
    let vs = a.basis().vectors();
    for i in 0..vs.len() {
        for j in i..vs.len() {
            if let Some(w) = found(a, vs[i].clone(), vs[j].clone(), op) {
                return Ok(Some(w));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let f = random_member(a.basis(), &mut rng);
        let g = random_member(a.basis(), &mut rng);
        if let Some(w) = found(a, f, g, op) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Membership tested only through two-point projections: `(f(x), f(y)) ∈ A_xy`
/// for all `x, y`. Agrees with exact membership whenever `a` is a sublattice.
pub fn member_by_pairs(f: &FunctionVec, a: &Subspace) -> Result<bool> {
    if f.space() != a.space() {
        return Err(Error::SpaceMismatch);
    }
    let n = a.space().len();
    let v = f.values();
    let basis = a.basis();
    for x in 0..n {
        if !v[x].is_zero() && basis.vectors().iter().all(|b| b[x].is_zero()) {
            return Ok(false);
        }
        for y in x + 1..n {
            let proj = project_indices(basis, x, y);
            if !proj.basis.contains(&[v[x].clone(), v[y].clone()])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparationReport {
    pub separates: bool,
    /// Pairs `(x, y)`, `x < y`, with `f(x) = f(y)` for every `f ∈ A`.
    pub non_separated_pairs: Vec<(usize, usize)>,
    /// Points where every `f ∈ A` vanishes.
    pub zero_set: Vec<usize>,
}

pub fn separation_report(a: &Subspace) -> SeparationReport {
    let n = a.space().len();
    let basis = a.basis();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let class = classify_pair(&project_indices(basis, x, y));
            let merged = match &class {
                PairClass::Zero => true,
                PairClass::LineAligned { a, b } => a.is_one() && b.is_one(),
                _ => false,
            };
            if merged {
                pairs.push((x, y));
            }
        }
    }
    let zero_set = (0..n).filter(|&t| basis.vectors().iter().all(|v| v[t].is_zero())).collect();
    SeparationReport { separates: pairs.is_empty(), non_separated_pairs: pairs, zero_set }
}

/// Outcome of [`iterative_closure_oracle`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Closure {
    pub subspace: Subspace,
    pub converged: bool,
    /// Candidate maxima examined.
    pub attempts: usize,
}

/// Builds the generated sublattice bottom-up by adjoining pointwise maxima
/// of basis vectors and seeded random members until the result is closed.
/// Never leaves the lattice hull; stops unconverged after `budget` attempts.
pub fn iterative_closure_oracle(a: &Subspace, seed: u64, budget: usize) -> Closure {
    const RANDOM_PER_ROUND: usize = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = a.clone();
    let mut attempts = 0;
    while !decide(&current, Mode::Lattice) {
        let basis = current.basis().clone();
        let vs = basis.vectors();
        let mut candidates: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                candidates.push((vs[i].clone(), vs[j].clone()));
            }
        }
        for _ in 0..RANDOM_PER_ROUND {
            candidates.push((random_member(&basis, &mut rng), random_member(&basis, &mut rng)));
        }
        let mut fresh = Vec::new();
        for (u, v) in candidates {
            if attempts == budget {
                break;
            }
            attempts += 1;
            let m = pointwise_max(&u, &v);
            if !basis.contains(&m).expect("length") {
                fresh.push(m);
            }
        }
        if !fresh.is_empty() {
            current = Subspace::new(current.space(), basis.extend(&fresh).expect("length")).expect("same space");
        } else if attempts == budget {
            return Closure { subspace: current, converged: false, attempts };
        }
    }
    Closure { subspace: current, converged: true, attempts }
}

/// Everything the library can say about one subspace.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub is_sublattice: bool,
    pub is_subalgebra: bool,
    pub lattice_hull: Subspace,
    pub algebra_hull: Subspace,
    pub relations_lattice: RelationSystem,
    pub relations_algebra: RelationSystem,
    pub separation: SeparationReport,
    /// Witness for the requested mode, when that property fails.
    pub witness: Option<Witness>,
    /// Set when the property fails but no witness was found.
    pub witness_note: Option<String>,
}

pub fn analyze(a: &Subspace, mode: Mode, seed: u64, budget: usize) -> AnalysisReport {
    let relations_lattice = extract_relations(a, Mode::Lattice);
    let relations_algebra = extract_relations(a, Mode::Algebra);
    let lattice_hull = relation_space(&relations_lattice);
    let algebra_hull = relation_space(&relations_algebra);
    let is_sublattice = &lattice_hull == a;
    let is_subalgebra = &algebra_hull == a;
    let holds = match mode {
        Mode::Lattice => is_sublattice,
        Mode::Algebra => is_subalgebra,
    };
    let (witness, witness_note) = if holds {
        (None, None)
    } else {
        match witness(a, mode, seed, budget).expect("property fails") {
            Some(w) => (Some(w), None),
            None => (
                None,
                Some(format!(
                    "not a {} (hull is strictly larger); no explicit witness found within budget",
                    mode.noun()
                )),
            ),
        }
    };
    AnalysisReport {
        is_sublattice,
        is_subalgebra,
        lattice_hull,
        algebra_hull,
        relations_lattice,
        relations_algebra,
        separation: separation_report(a),
        witness,
        witness_note,
    }
}
