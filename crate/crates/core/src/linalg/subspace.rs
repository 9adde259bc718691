//! Subspaces of `k^m` given by spanning vectors.

use crate::arith::{Field, Scalar};

use super::matk::MatK;

/// Reduced echelon basis of the span of `vectors` (each of length `dim`).
pub fn span_basis(field: Field, dim: usize, vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = MatK::from_rows(field, vectors.to_vec());
    debug_assert_eq!(m.cols(), dim);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Dimension of the span of `vectors`.
pub fn span_dim(field: Field, vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    MatK::from_rows(field, vectors.to_vec()).rank()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(field: Field, basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    let mut rows = basis.to_vec();
    let before = span_dim(field, &rows);
    rows.push(v.to_vec());
    span_dim(field, &rows) == before
}

/// Basis of the intersection of two spans inside `k^dim`.
pub fn intersection(field: Field, dim: usize, u: &[Vec<Scalar>], w: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    // Solve sum a_i u_i = sum b_j w_j; the a-part gives the intersection.
    let mut m = MatK::zeros(field, dim, u.len() + w.len());
    for (i, v) in u.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            m.set(r, i, x.clone());
        }
    }
    for (j, v) in w.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            m.set(r, u.len() + j, x.neg());
        }
    }
    let (_, ker) = m.rank_and_kernel();
    let vecs: Vec<Vec<Scalar>> = ker
        .basis
        .iter()
        .map(|k| {
            let mut acc = vec![field.zero(); dim];
            for (i, ui) in u.iter().enumerate() {
                if k[i].is_zero() {
                    continue;
                }
                for (r, x) in ui.iter().enumerate() {
                    acc[r] = acc[r].add(&k[i].mul(x));
                }
            }
            acc
        })
        .collect();
    span_basis(field, dim, &vecs)
}
