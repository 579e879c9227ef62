//! Ranks, kernels and cohomology of a truncated cochain complex whose terms are
//! subspaces of coordinate spaces.

use serde::Serialize;

use crate::error::Result;
use crate::exactlin::{is_zero_vec, kernel_basis, quotient_dim, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyRow {
    pub q: usize,
    pub dim: usize,
    pub rank: usize,
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    pub rows: Vec<CohomologyRow>,
    /// `closed[q]`: the differential maps the degree-`q` term into the next.
    pub closed: Vec<bool>,
    /// `squares_to_zero[q]`: `d^{q+1} d^q = 0`, for `q < qmax`.
    pub squares_to_zero: Vec<bool>,
    /// `d^q` in the canonical bases of the terms, when `closed[q]`.
    pub matrices: Vec<Option<Matrix>>,
}

impl ComplexReport {
    pub fn h(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.h).collect()
    }
}

/// `terms[q]` for `q = 0..=qmax+1`; `apply(q, v)` evaluates `d^q` on an
/// ambient vector of degree `q`.
pub fn analyze(terms: &[Subspace], qmax: usize, apply: impl Fn(usize, &[Scalar]) -> Vec<Scalar>) -> Result<ComplexReport> {
    assert_eq!(terms.len(), qmax + 2, "need terms up to qmax + 1");
    let mut images: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut closed = Vec::new();
    let mut matrices = Vec::new();
    for q in 0..=qmax {
        let imgs: Vec<Vec<Scalar>> = terms[q].basis().iter().map(|b| apply(q, b)).collect();
        let coords: Option<Vec<Vec<Scalar>>> = imgs.iter().map(|v| terms[q + 1].coordinates(v)).collect();
        closed.push(coords.is_some());
        matrices.push(coords.map(|cols| Matrix::from_columns(terms[q + 1].dim(), &cols)));
        images.push(imgs);
    }
    let mut squares_to_zero = Vec::new();
    for q in 0..qmax {
        let zero = match (&matrices[q], &matrices[q + 1]) {
            (Some(d0), Some(d1)) => (d1 * d0).is_zero(),
            _ => images[q].iter().all(|v| is_zero_vec(&apply(q + 1, v))),
        };
        squares_to_zero.push(zero);
    }
    let mut rows = Vec::new();
    for q in 0..=qmax {
        let ambient_next = terms[q + 1].ambient_dim();
        let rank = Subspace::from_rows(ambient_next, images[q].iter().cloned()).dim();
        let kernel_coords = kernel_basis(&Matrix::from_columns(ambient_next, &images[q]));
        let kernel = Subspace::from_rows(terms[q].ambient_dim(), kernel_coords.basis().iter().map(|c| terms[q].combine(c)));
        let image_prev =
            if q == 0 { Subspace::zero(terms[0].ambient_dim()) } else { Subspace::from_rows(terms[q].ambient_dim(), images[q - 1].iter().cloned()) };
        let h = quotient_dim(&image_prev, &kernel)?;
        rows.push(CohomologyRow { q, dim: terms[q].dim(), rank, h });
    }
    Ok(ComplexReport { rows, closed, squares_to_zero, matrices })
}
