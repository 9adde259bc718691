use std::fmt;

use crate::arith::{Field, Scalar};

use super::bareiss;

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatK {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Kernel of a matrix in reduced form: one basis vector per free column,
/// with a 1 in that column and zeros in the other free columns.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub basis: Vec<Vec<Scalar>>,
    pub pivot_cols: Vec<usize>,
    pub free_cols: Vec<usize>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a kernel element in `basis`: its free-column entries.
    /// The caller must make sure `v` actually lies in the kernel.
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.free_cols.iter().map(|&c| v[c].clone()).collect()
    }
}

impl MatK {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        MatK {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        MatK {
            field,
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> MatK {
        let mut out = MatK::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &MatK) -> MatK {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = MatK::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> MatK {
        let mut out = MatK::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (MatK, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(r * cols + j, pr * cols + j);
                }
            }
            let inv = m.get(r, c).inv();
            for j in c..cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = m.get(r, j);
                    if !v.is_zero() {
                        let nv = m.get(i, j).sub(&f.mul(v));
                        m.set(i, j, nv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    pub fn rank_and_kernel(&self) -> (usize, Kernel) {
        let (r, pivots) = self.rref();
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free_cols
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(i, f).neg();
                }
                v
            })
            .collect();
        let rank = pivots.len();
        (
            rank,
            Kernel {
                basis,
                pivot_cols: pivots,
                free_cols,
            },
        )
    }

    /// Determinant by fraction-free elimination. Panics unless square.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss::determinant(self.data.clone(), self.rows, self.field.one())
    }
}

impl fmt::Debug for MatK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatK {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn identity_and_zero() {
        let (r, k) = MatK::identity(Q, 3).rank_and_kernel();
        assert_eq!((r, k.dim()), (3, 0));
        let (r, k) = MatK::zeros(Q, 2, 2).rank_and_kernel();
        assert_eq!((r, k.dim()), (0, 2));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = MatK::from_i64(Q, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let (r, k) = m.rank_and_kernel();
        assert_eq!(r + k.dim(), 4);
        for v in &k.basis {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinants() {
        let m = MatK::from_i64(Q, &[&[2, 0], &[0, 3]]);
        assert_eq!(m.det(), Q.from_i64(6));
        let m = MatK::from_i64(Q, &[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.det(), Q.from_i64(-2));
        let f = Field::Prime(65521);
        let m = MatK::from_i64(f, &[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), f.from_i64(-1));
    }
}
