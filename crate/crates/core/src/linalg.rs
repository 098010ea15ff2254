//! Exact linear algebra over [`Scalar`]: canonical row-reduced bases, null
//! spaces, membership and containment of subspaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows<R: AsRef<[Scalar]>>(cols: usize, rows: &[R]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend_from_slice(row);
        }
        Ok(Matrix { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }
}

/// Result of comparing two subspaces of the same ambient space.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Equal,
    /// The left operand is a proper subspace of the right one.
    StrictlyInside,
    /// The right operand is a proper subspace of the left one.
    StrictlyContains,
    Incomparable,
}

impl Containment {
    /// `true` for `Equal` and `StrictlyInside`, i.e. left ⊆ right.
    pub fn is_subset(self) -> bool {
        matches!(self, Containment::Equal | Containment::StrictlyInside)
    }
}

/// A subspace of `Q^n` in canonical reduced row-echelon form.
///
/// Rows are nonzero, pivots are 1, pivot columns strictly increase and every
/// other entry of a pivot column is 0. Two `Basis` values describe the same
/// subspace exactly when they compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Basis {
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?} in Q^{}", self.vectors, self.ambient_dim)
    }
}

impl Basis {
    /// The zero subspace of `Q^n`.
    pub fn zero(ambient_dim: usize) -> Self {
        Basis { ambient_dim, vectors: Vec::new(), pivots: Vec::new() }
    }

    /// All of `Q^n`, as identity rows.
    pub fn full(ambient_dim: usize) -> Self {
        let vectors = (0..ambient_dim)
            .map(|i| {
                (0..ambient_dim)
                    .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        Basis { ambient_dim, vectors, pivots: (0..ambient_dim).collect() }
    }

    /// Canonical basis of the span of `rows`, each of length `ambient_dim`.
    pub fn span<R: AsRef<[Scalar]>>(ambient_dim: usize, rows: &[R]) -> Result<Self> {
        canonical_basis(&Matrix::from_rows(ambient_dim, rows)?)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Coefficients of `v` in this basis, or `None` if `v` lies outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_len(v.len())?;
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        // Pivot coordinates match by construction; only free columns can disagree.
        let inside = (0..self.ambient_dim).filter(|&j| !is_pivot[j]).all(|j| {
            let mut acc = v[j].clone();
            for (c, row) in coeffs.iter().zip(&self.vectors) {
                if !row[j].is_zero() && !c.is_zero() {
                    acc -= c * &row[j];
                }
            }
            acc.is_zero()
        });
        Ok(inside.then_some(coeffs))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Canonical basis of this subspace plus the given extra vectors.
    pub fn extend<R: AsRef<[Scalar]>>(&self, extra: &[R]) -> Result<Basis> {
        let mut rows: Vec<Vec<Scalar>> = self.vectors.clone();
        for v in extra {
            let v = v.as_ref();
            self.check_len(v.len())?;
            rows.push(v.to_vec());
        }
        Basis::span(self.ambient_dim, &rows)
    }

    /// Linear combination `Σ coeffs[i] · vectors[i]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ambient_dim];
        for (c, row) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: len });
        }
        Ok(())
    }
}

/// Reduces `rows` (each of length `cols`) to canonical RREF in place, drops
/// zero rows and returns the pivot columns.
fn reduce(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip().expect("pivot is nonzero");
        for x in rows[next].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

/// Canonical RREF basis of the row span of `generators`.
pub fn canonical_basis(generators: &Matrix) -> Result<Basis> {
    if generators.cols == 0 {
        return Err(Error::EmptyAmbient);
    }
    let mut rows: Vec<Vec<Scalar>> = generators.iter_rows().map(<[Scalar]>::to_vec).collect();
    let pivots = reduce(&mut rows, generators.cols);
    Ok(Basis { ambient_dim: generators.cols, vectors: rows, pivots })
}

/// Canonical basis of `{v : constraints · v = 0}`.
pub fn kernel(constraints: &Matrix) -> Result<Basis> {
    let reduced = canonical_basis(constraints)?;
    let n = reduced.ambient_dim;
    let mut is_pivot = vec![false; n];
    for &p in &reduced.pivots {
        is_pivot[p] = true;
    }
    let mut solutions = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (row, &p) in reduced.vectors.iter().zip(&reduced.pivots) {
            v[p] = -&row[free];
        }
        solutions.push(v);
    }
    Basis::span(n, &solutions)
}

/// Exact membership of `v` in the span of `basis`.
pub fn member(v: &[Scalar], basis: &Basis) -> Result<bool> {
    basis.contains(v)
}

/// Decides how `s` and `t` are related by inclusion.
pub fn compare(s: &Basis, t: &Basis) -> Result<Containment> {
    if s.ambient_dim != t.ambient_dim {
        return Err(Error::DimensionMismatch { expected: s.ambient_dim, found: t.ambient_dim });
    }
    if s == t {
        return Ok(Containment::Equal);
    }
    let s_in_t = s.vectors.iter().all(|v| t.contains(v).expect("same dimension"));
    let t_in_s = t.vectors.iter().all(|v| s.contains(v).expect("same dimension"));
    Ok(match (s_in_t, t_in_s) {
        // Canonical forms differ, so mutual containment is impossible.
        (true, true) => unreachable!("distinct canonical bases span the same space"),
        (true, false) => Containment::StrictlyInside,
        (false, true) => Containment::StrictlyContains,
        (false, false) => Containment::Incomparable,
    })
}
