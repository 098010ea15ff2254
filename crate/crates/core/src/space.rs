//! The finite space `X` and functions on it, with the pointwise lattice,
//! algebra and sup-norm structure of `C(X)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Basis;
use crate::scalar::Scalar;

#[derive(Debug)]
struct Points {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// A nonempty, ordered set of distinctly labelled points. Cheap to clone.
#[derive(Clone)]
pub struct FiniteSpace(Arc<Points>);

impl FiniteSpace {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(FiniteSpace(Arc::new(Points { labels, index })))
    }

    /// Points labelled `p0 .. p{n-1}`.
    pub fn numbered(n: usize) -> Result<Self> {
        FiniteSpace::new((0..n).map(|i| format!("p{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.0.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.0.index.contains_key(label)
    }
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for FiniteSpace {}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0.labels).finish()
    }
}

/// A function `X → Q`, one value per point.
#[derive(Clone, PartialEq, Eq)]
pub struct FunctionVec {
    space: FiniteSpace,
    values: Vec<Scalar>,
}

impl fmt::Debug for FunctionVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

impl FunctionVec {
    pub fn new(space: &FiniteSpace, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::DimensionMismatch { expected: space.len(), found: values.len() });
        }
        Ok(FunctionVec { space: space.clone(), values })
    }

    pub fn zero(space: &FiniteSpace) -> Self {
        FunctionVec { space: space.clone(), values: vec![Scalar::zero(); space.len()] }
    }

    /// The constant function 1.
    pub fn unit(space: &FiniteSpace) -> Self {
        FunctionVec { space: space.clone(), values: vec![Scalar::one(); space.len()] }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Scalar> {
        self.values
    }

    pub fn at(&self, label: &str) -> Result<&Scalar> {
        Ok(&self.values[self.space.index(label)?])
    }

    pub fn max(&self, other: &FunctionVec) -> Result<FunctionVec> {
        self.zip_with(other, |a, b| a.max_ref(b).clone())
    }

    pub fn min(&self, other: &FunctionVec) -> Result<FunctionVec> {
        self.zip_with(other, |a, b| a.min_ref(b).clone())
    }

    pub fn product(&self, other: &FunctionVec) -> Result<FunctionVec> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn add(&self, other: &FunctionVec) -> Result<FunctionVec> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scale(&self, c: &Scalar) -> FunctionVec {
        FunctionVec { space: self.space.clone(), values: self.values.iter().map(|x| x * c).collect() }
    }

    /// `max_p |f(p)|`.
    pub fn sup_norm(&self) -> Scalar {
        sup_norm(&self.values)
    }

    fn zip_with(
        &self,
        other: &FunctionVec,
        op: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<FunctionVec> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect();
        Ok(FunctionVec { space: self.space.clone(), values })
    }
}

/// Pointwise maximum and minimum of `f` and `g`.
pub fn lattice_ops(f: &FunctionVec, g: &FunctionVec) -> Result<(FunctionVec, FunctionVec)> {
    Ok((f.max(g)?, f.min(g)?))
}

pub fn product(f: &FunctionVec, g: &FunctionVec) -> Result<FunctionVec> {
    f.product(g)
}

pub(crate) fn pointwise_max(f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    f.iter().zip(g).map(|(a, b)| a.max_ref(b).clone()).collect()
}

pub(crate) fn pointwise_min(f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    f.iter().zip(g).map(|(a, b)| a.min_ref(b).clone()).collect()
}

pub(crate) fn pointwise_product(f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    f.iter().zip(g).map(|(a, b)| a * b).collect()
}

pub(crate) fn sup_norm(values: &[Scalar]) -> Scalar {
    values.iter().map(Scalar::abs).max().unwrap_or_else(Scalar::zero)
}

/// A linear subspace of `C(X)`: a space together with a canonical basis over it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    space: FiniteSpace,
    basis: Basis,
}

impl Subspace {
    pub fn new(space: &FiniteSpace, basis: Basis) -> Result<Self> {
        if basis.ambient_dim() != space.len() {
            return Err(Error::DimensionMismatch { expected: space.len(), found: basis.ambient_dim() });
        }
        Ok(Subspace { space: space.clone(), basis })
    }

    /// Span of the given value rows.
    pub fn span<R: AsRef<[Scalar]>>(space: &FiniteSpace, rows: &[R]) -> Result<Self> {
        Subspace::new(space, Basis::span(space.len(), rows)?)
    }

    pub fn full(space: &FiniteSpace) -> Self {
        Subspace { space: space.clone(), basis: Basis::full(space.len()) }
    }

    pub fn zero(space: &FiniteSpace) -> Self {
        Subspace { space: space.clone(), basis: Basis::zero(space.len()) }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn contains(&self, f: &FunctionVec) -> Result<bool> {
        if f.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        self.basis.contains(f.values())
    }

    /// Basis vectors as functions on the space.
    pub fn basis_functions(&self) -> Vec<FunctionVec> {
        self.basis
            .vectors()
            .iter()
            .map(|v| FunctionVec { space: self.space.clone(), values: v.clone() })
            .collect()
    }
}
