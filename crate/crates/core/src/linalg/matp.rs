use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{same_ring, Field, MultiPoly, PolyRing, Scalar};
use crate::error::{Error, Result};

use super::bareiss;
use super::matk::MatK;
use super::modp::{modulus_for, ModMat};

/// Dense row-major matrix with polynomial entries from one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct MatP {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    data: Vec<MultiPoly>,
}

/// Number of independent specializations tried before giving up on a
/// nonsingular minor.
const SELECT_ATTEMPTS: usize = 4;

impl MatP {
    pub fn zeros(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        MatP {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![MultiPoly::zero(ring); rows * cols],
        }
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        if rows.iter().flatten().any(|p| !same_ring(p.ring(), ring)) {
            return Err(Error::FieldMismatch);
        }
        let n = rows.len();
        Ok(MatP {
            ring: ring.clone(),
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses a matrix given as rows of polynomial strings.
    pub fn parse(ring: &Arc<PolyRing>, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| MultiPoly::parse(ring, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MultiPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MultiPoly::is_zero)
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.data
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> MatP {
        let mut out = MatP::zeros(&self.ring, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &MatP) -> MatP {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = MatP::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &MultiPoly) -> MatP {
        MatP {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p * c).collect(),
        }
    }

    pub fn add(&self, other: &MatP) -> MatP {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        MatP {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Determinant by fraction-free elimination. Panics unless square.
    pub fn det(&self) -> MultiPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss::determinant(self.data.clone(), self.rows, MultiPoly::one(&self.ring))
    }

    /// Entrywise evaluation at a point given by variable name. Variables
    /// that occur in no entry may be omitted.
    pub fn specialize(&self, point: &HashMap<String, Scalar>) -> Result<MatK> {
        let field = self.ring.field();
        let mut values = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars().iter().enumerate() {
            match point.get(name) {
                Some(v) => {
                    if v.field() != field {
                        return Err(Error::FieldMismatch);
                    }
                    values.push(v.clone());
                }
                None if self.data.iter().any(|p| p.degree_in(i) > 0) => {
                    return Err(Error::MissingAssignment(name.clone()))
                }
                None => values.push(field.zero()),
            }
        }
        Ok(self.specialize_at(&values))
    }

    /// Entrywise evaluation at a point given in ring variable order.
    pub fn specialize_at(&self, point: &[Scalar]) -> MatK {
        let field = self.ring.field();
        let mut out = MatK::zeros(field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let p = self.get(r, c);
                if !p.is_zero() {
                    out.set(r, c, p.eval_at(point));
                }
            }
        }
        out
    }

    /// Reduction modulo a word-sized prime followed by evaluation at
    /// `point`. Over the rationals this uses a fixed 61-bit prime; `None`
    /// if some coefficient has a denominator divisible by it.
    pub(crate) fn specialize_mod(&self, point: &[u64]) -> Option<ModMat> {
        let p = modulus_for(self.ring.field());
        let field = Field::Prime(p);
        let pt: Vec<Scalar> = point.iter().map(|&v| Scalar::Fp { value: v, modulus: p }).collect();
        let mut out = ModMat::zeros(self.rows, self.cols, p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let mut acc = field.zero();
                for (m, coeff) in e.terms() {
                    let mut v = coeff.convert(field)?;
                    for (i, &k) in m.exponents().iter().enumerate() {
                        if k > 0 {
                            v = v.mul(&pt[i].pow(k as u32));
                        }
                    }
                    acc = acc.add(&v);
                }
                out.set(r, c, acc.residue().unwrap());
            }
        }
        Some(out)
    }

    pub(crate) fn random_point(&self, rng: &mut ChaCha8Rng) -> Vec<u64> {
        let p = modulus_for(self.ring.field());
        (0..self.ring.nvars()).map(|_| rng.gen_range(1..p)).collect()
    }

    /// Rank over the fraction field, bounded below by a random
    /// specialization; two independent draws are combined.
    pub fn generic_rank(&self, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..2)
            .filter_map(|_| {
                let pt = self.random_point(&mut rng);
                self.specialize_mod(&pt).map(|m| m.rank())
            })
            .max()
            .unwrap_or(0)
    }

    /// Row and column indices of a `target x target` submatrix that is
    /// nonsingular over the fraction field. The choice is certified: the
    /// submatrix stays nonsingular at a specific point, so its symbolic
    /// determinant cannot vanish.
    pub fn nonsingular_minor_select(&self, target: usize, seed: u64) -> Result<(Vec<usize>, Vec<usize>)> {
        if target > self.rows.min(self.cols) {
            return Err(Error::Shape(format!(
                "{target}x{target} minor of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best = 0;
        for _ in 0..SELECT_ATTEMPTS {
            let pt = self.random_point(&mut rng);
            let Some(m) = self.specialize_mod(&pt) else {
                continue;
            };
            let cols = m.pivot_columns();
            best = best.max(cols.len());
            if cols.len() < target {
                continue;
            }
            let cols: Vec<usize> = cols[..target].to_vec();
            let all_rows: Vec<usize> = (0..self.rows).collect();
            let rows = m.submatrix(&all_rows, &cols).transpose().pivot_columns();
            debug_assert_eq!(rows.len(), target);
            return Ok((rows, cols));
        }
        Err(Error::NoNonsingularMinor { target, found: best })
    }

    /// Entries rendered in the polynomial grammar.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for MatP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatP {}x{} {:?}", self.rows, self.cols, self.to_strings())
    }
}
