//! Word-sized matrices over GF(p) used for cheap rank certificates.

use crate::arith::{add_mod, inv_mod, mul_mod, sub_mod, Field};

/// Prime used to reduce rational matrices: `2^61 - 1`.
pub(crate) const REDUCTION_PRIME: u64 = (1 << 61) - 1;

pub(crate) fn modulus_for(field: Field) -> u64 {
    match field {
        Field::Rational => REDUCTION_PRIME,
        Field::Prime(p) => p,
    }
}

#[derive(Clone, Debug)]
pub(crate) struct ModMat {
    pub rows: usize,
    pub cols: usize,
    pub p: u64,
    pub data: Vec<u64>,
}

impl ModMat {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        ModMat {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ModMat {
        let mut out = ModMat::zeros(rows.len(), cols.len(), self.p);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c));
            }
        }
        out
    }

    pub fn transpose(&self) -> ModMat {
        let mut out = ModMat::zeros(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Pivot columns of the row echelon form, scanning columns left to right.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let p = self.p;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(r * cols + j, pr * cols + j);
                }
            }
            let inv = inv_mod(m[r * cols + c], p);
            for i in r + 1..rows {
                let f = m[i * cols + c];
                if f == 0 {
                    continue;
                }
                let f = mul_mod(f, inv, p);
                for j in c..cols {
                    let v = m[r * cols + j];
                    if v != 0 {
                        m[i * cols + j] = sub_mod(m[i * cols + j], mul_mod(f, v, p), p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }

    pub fn mul(&self, other: &ModMat) -> ModMat {
        let p = self.p;
        let mut out = ModMat::zeros(self.rows, other.cols, p);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = add_mod(out.get(r, c), mul_mod(a, other.get(k, c), p), p);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn det(&self) -> u64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (n, p) = (self.rows, self.p);
        let mut m = self.data.clone();
        let mut det = 1;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m[i * n + c] != 0) else {
                return 0;
            };
            if pr != c {
                for j in 0..n {
                    m.swap(c * n + j, pr * n + j);
                }
                det = sub_mod(0, det, p);
            }
            det = mul_mod(det, m[c * n + c], p);
            let inv = inv_mod(m[c * n + c], p);
            for i in c + 1..n {
                let f = mul_mod(m[i * n + c], inv, p);
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    m[i * n + j] = sub_mod(m[i * n + j], mul_mod(f, m[c * n + j], p), p);
                }
            }
        }
        det
    }
}

/// Coefficients (constant first) of the polynomial of degree below
/// `xs.len()` through the points `(xs[i], ys[i])`; the `xs` are distinct.
pub(crate) fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub_mod(coef[i], coef[i - 1], p);
            let den = sub_mod(xs[i], xs[i - j], p);
            coef[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    let mut out = vec![0; n];
    for i in (0..n).rev() {
        for k in (1..n).rev() {
            out[k] = sub_mod(out[k - 1], mul_mod(out[k], xs[i], p), p);
        }
        out[0] = sub_mod(coef[i], mul_mod(out[0], xs[i], p), p);
    }
    trim(out)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Monic gcd of two univariate polynomials (constant first); empty is zero.
pub(crate) fn univariate_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (i, &v) in b.iter().enumerate() {
                a[shift + i] = sub_mod(a[shift + i], mul_mod(f, v, p), p);
            }
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p);
        for v in a.iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let mut m = ModMat::zeros(3, 3, 7);
        for (i, v) in [1, 2, 3, 2, 4, 6, 0, 1, 1].into_iter().enumerate() {
            m.data[i] = v;
        }
        assert_eq!(m.pivot_columns(), vec![0, 1]);
        assert_eq!(m.transpose().rank(), 2);
        assert_eq!(m.det(), 0);
    }

    #[test]
    fn det_and_product() {
        let mut a = ModMat::zeros(2, 2, 101);
        a.data = vec![2, 3, 5, 7];
        assert_eq!(a.det(), 100);
        assert_eq!(a.mul(&a).det(), 1);
    }

    #[test]
    fn interpolation_and_gcd() {
        let p = 101;
        // (x - 1)(x - 2) = x^2 - 3x + 2
        let xs = [3, 4, 5];
        let ys: Vec<u64> = xs.iter().map(|&x| (x * x + 2 * p - 3 * x + 2) % p).collect();
        assert_eq!(interpolate(&xs, &ys, p), vec![2, p - 3, 1]);
        // gcd((x-1)(x-2), (x-1)(x+1)) = x - 1
        assert_eq!(univariate_gcd(&[2, p - 3, 1], &[p - 1, 0, 1], p), vec![p - 1, 1]);
        assert_eq!(univariate_gcd(&[1, 1], &[], p), vec![1, 1]);
    }
}
