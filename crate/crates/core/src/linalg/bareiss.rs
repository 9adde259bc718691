//! Fraction-free Gaussian elimination shared by scalar and polynomial
//! matrices.

use crate::arith::{MultiPoly, Scalar};

pub(crate) trait Entry: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; the caller guarantees divisibility.
    fn exact_div(&self, other: &Self) -> Self;
    /// Rough cost used to prefer cheap pivots.
    fn weight(&self) -> usize;
}

impl Entry for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Scalar::sub(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn exact_div(&self, other: &Self) -> Self {
        Scalar::div(self, other)
    }
    fn weight(&self) -> usize {
        1
    }
}

impl Entry for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn exact_div(&self, other: &Self) -> Self {
        if other.is_one() {
            return self.clone();
        }
        self.exact_divide(other).expect("Bareiss step divides exactly")
    }
    fn weight(&self) -> usize {
        self.len()
    }
}

/// Determinant of an `n x n` row-major matrix. `one` is the unit of the
/// entry ring; it is returned for the empty matrix.
pub(crate) fn determinant<E: Entry>(mut m: Vec<E>, n: usize, one: E) -> E {
    if n == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        let pivot = (k..n)
            .filter(|&r| !m[r * n + k].is_zero())
            .min_by_key(|&r| m[r * n + k].weight());
        let Some(p) = pivot else {
            return m[0].sub(&m[0]);
        };
        if p != k {
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let akk = m[k * n + k].clone();
        for i in k + 1..n {
            let aik = m[i * n + k].clone();
            for j in k + 1..n {
                let a = akk.mul(&m[i * n + j]);
                let v = if aik.is_zero() || m[k * n + j].is_zero() {
                    a
                } else {
                    a.sub(&aik.mul(&m[k * n + j]))
                };
                m[i * n + j] = if v.is_zero() { v } else { v.exact_div(&prev) };
            }
        }
        prev = akk;
    }
    let d = m[n * n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}
