//! Two-point projections `A_xy = {(g(x), g(y)) : g ∈ A}` and their
//! classification against the complete lists of sublattices and subalgebras
//! of `Q²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Basis;
use crate::scalar::Scalar;
use crate::space::Subspace;

/// Which closure property is being examined.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Closure under pointwise max and min.
    Lattice,
    /// Closure under pointwise multiplication.
    Algebra,
}

impl Mode {
    pub fn noun(self) -> &'static str {
        match self {
            Mode::Lattice => "sublattice",
            Mode::Algebra => "subalgebra",
        }
    }
}

/// The image of a subspace under `f ↦ (f(x), f(y))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairProjection {
    pub x: usize,
    pub y: usize,
    /// Canonical basis of the projection, ambient dimension 2.
    pub basis: Basis,
}

/// Position of a subspace of `Q²` in the sublattice catalogue.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairClass {
    Zero,
    Full,
    /// `span{(a, b)}` with `a, b ≥ 0` and `max(a, b) = 1`: a sublattice.
    LineAligned { a: Scalar, b: Scalar },
    /// `span{(a, b)}` with `a·b < 0`, scaled so the coordinate of larger
    /// magnitude is `+1` (the first one on ties): not a sublattice.
    LineMixed { a: Scalar, b: Scalar },
}

impl PairClass {
    pub fn is_sublattice(&self) -> bool {
        !matches!(self, PairClass::LineMixed { .. })
    }

    /// Only `{0}`, `Q²`, `span{(1,0)}`, `span{(0,1)}` and `span{(1,1)}` are subalgebras.
    pub fn is_subalgebra(&self) -> bool {
        match self {
            PairClass::Zero | PairClass::Full => true,
            PairClass::LineAligned { a, b } => a.is_zero() || b.is_zero() || a == b,
            PairClass::LineMixed { .. } => false,
        }
    }

    pub fn is_closed(&self, mode: Mode) -> bool {
        match mode {
            Mode::Lattice => self.is_sublattice(),
            Mode::Algebra => self.is_subalgebra(),
        }
    }

    /// Direction of a line class.
    pub fn direction(&self) -> Option<(&Scalar, &Scalar)> {
        match self {
            PairClass::LineAligned { a, b } | PairClass::LineMixed { a, b } => Some((a, b)),
            _ => None,
        }
    }
}

/// Projection of `basis` onto coordinates `x` and `y`.
pub(crate) fn project_indices(basis: &Basis, x: usize, y: usize) -> PairProjection {
    let rows: Vec<[Scalar; 2]> =
        basis.vectors().iter().map(|v| [v[x].clone(), v[y].clone()]).collect();
    let basis = Basis::span(2, &rows).expect("two columns");
    PairProjection { x, y, basis }
}

/// Computes `A_xy` for two distinct labelled points.
pub fn project_pair(a: &Subspace, x: &str, y: &str) -> Result<PairProjection> {
    if x == y {
        return Err(Error::SamePoint(x.to_string()));
    }
    let space = a.space();
    Ok(project_indices(a.basis(), space.index(x)?, space.index(y)?))
}

/// Classifies a pair projection.
pub fn classify_pair(proj: &PairProjection) -> PairClass {
    match proj.basis.rank() {
        0 => PairClass::Zero,
        2 => PairClass::Full,
        _ => {
            let v = &proj.basis.vectors()[0];
            classify_line(&v[0], &v[1])
        }
    }
}

/// Classifies `span{(a, b)}` for a nonzero direction.
pub fn classify_line(a: &Scalar, b: &Scalar) -> PairClass {
    debug_assert!(!(a.is_zero() && b.is_zero()), "line direction must be nonzero");
    if a.signum() * b.signum() >= 0 {
        let (a, b) = (a.abs(), b.abs());
        let top = a.max_ref(&b).clone();
        PairClass::LineAligned { a: &a / &top, b: &b / &top }
    } else {
        let pick = if b.abs() > a.abs() { b } else { a };
        PairClass::LineMixed { a: a / pick, b: b / pick }
    }
}
