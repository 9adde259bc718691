//! Graded strands of the Koszul and approximation complexes, and their
//! determinants.
//!
//! For generators `f_1..f_n` of degree `d` in a polynomial ring `A`, the
//! degree-`nu` strand uses coefficients in `A_nu`: an element of
//! `(Z_i)_nu` is a combination of exterior basis vectors `e_J` (`|J| = i`)
//! with coefficients in `A_nu` that the contraction `d_f` kills. The
//! second differential `d_T` replaces `f_j` by the target variable `T_j`,
//! so the strand is a complex of free `k[T]`-modules with matrices linear
//! in `T`.
//!
//! Matrices map columns to rows: `maps[i]` has one column per basis
//! vector of `(Z_{i+1})_nu` and one row per basis vector of `(Z_i)_nu`
//! (with `Z_0 = A_nu`).

use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::arith::{gcd, monomials_of_degree, Generators, Monomial, MultiPoly, PolyRing, Scalar};
use crate::error::{Error, Result};
use crate::arith::{add_mod, mul_mod};
use crate::linalg::modp::{interpolate, modulus_for, univariate_gcd, ModMat};
use crate::linalg::{span_basis, Kernel, MatK, MatP};

/// All `i`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..=n - left {
            cur.push(s);
            rec(s + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i <= n {
        rec(0, n, i, &mut Vec::new(), &mut out);
    }
    out
}

/// Basis of `Λ^i(A^n) ⊗ A_nu`: pairs `(J, m)` ordered by subset, then by
/// monomial in decreasing grevlex order.
#[derive(Clone, Debug)]
pub struct KoszulBasis {
    pub i: usize,
    pub nu: u32,
    pub index_sets: Vec<Vec<usize>>,
    pub monomials: Vec<Monomial>,
    set_index: FxHashMap<Vec<usize>, usize>,
    mono_index: FxHashMap<Monomial, usize>,
}

impl KoszulBasis {
    pub fn new(n: usize, nvars: usize, i: usize, nu: u32) -> Self {
        let index_sets = subsets(n, i);
        let monomials = monomials_of_degree(nvars, nu);
        let set_index = index_sets.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
        let mono_index = monomials.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        KoszulBasis {
            i,
            nu,
            index_sets,
            monomials,
            set_index,
            mono_index,
        }
    }

    pub fn len(&self) -> usize {
        self.index_sets.len() * self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, set: &[usize], m: &Monomial) -> usize {
        self.set_index[set] * self.monomials.len() + self.mono_index[m]
    }

    pub fn entry(&self, k: usize) -> (&[usize], &Monomial) {
        let dm = self.monomials.len();
        (&self.index_sets[k / dm], &self.monomials[k % dm])
    }
}

/// Matrix of the contraction `d_f: Λ^i ⊗ A_nu -> Λ^{i-1} ⊗ A_{nu+d}`,
/// `e_J ↦ Σ_p (-1)^p f_{J[p]} e_{J \ J[p]}`.
pub fn koszul_differential_matrix(g: &Generators, i: usize, nu: u32) -> Result<MatK> {
    let n = g.len();
    if i == 0 || i > n {
        return Err(Error::Shape(format!("exterior degree {i} outside 1..={n}")));
    }
    let nv = g.nvars();
    let field = g.ring().field();
    let src = KoszulBasis::new(n, nv, i, nu);
    let dst = KoszulBasis::new(n, nv, i - 1, nu + g.degree());
    let mut m = MatK::zeros(field, dst.len(), src.len());
    for col in 0..src.len() {
        let (set, mono) = src.entry(col);
        for p in 0..set.len() {
            let j = set[p];
            let mut rest = set.to_vec();
            rest.remove(p);
            for (fm, fc) in g.polys()[j].terms() {
                let row = dst.index(&rest, &mono.mul(fm));
                let c = if p % 2 == 0 { fc.clone() } else { fc.neg() };
                let v = m.get(row, col).add(&c);
                m.set(row, col, v);
            }
        }
    }
    Ok(m)
}

/// Reduced kernel basis of the `i`-th contraction in degree `nu`, i.e. a
/// basis of `(Z_i)_nu`.
pub fn cycle_basis(g: &Generators, i: usize, nu: u32) -> Result<Kernel> {
    Ok(koszul_differential_matrix(g, i, nu)?.rank_and_kernel().1)
}

/// Echelon basis of the Koszul boundaries `(B_1)_nu`, spanned by the
/// multiples `u (f_j e_i - f_i e_j)` with `deg u = nu - d`.
pub fn boundary_basis(g: &Generators, nu: u32) -> Vec<Vec<Scalar>> {
    let d = g.degree();
    if nu < d {
        return Vec::new();
    }
    let n = g.len();
    let field = g.ring().field();
    let basis = KoszulBasis::new(n, g.nvars(), 1, nu);
    let mut vecs = Vec::new();
    for u in monomials_of_degree(g.nvars(), nu - d) {
        for a in 0..n {
            for b in a + 1..n {
                let mut v = vec![field.zero(); basis.len()];
                for (m, c) in g.polys()[b].terms() {
                    let k = basis.index(&[a], &u.mul(m));
                    v[k] = v[k].add(c);
                }
                for (m, c) in g.polys()[a].terms() {
                    let k = basis.index(&[b], &u.mul(m));
                    v[k] = v[k].sub(c);
                }
                if v.iter().any(|x| !x.is_zero()) {
                    vecs.push(v);
                }
            }
        }
    }
    span_basis(field, basis.len(), &vecs)
}

/// The degree-`nu` strand `0 -> (Z_{n-1})_nu -> ... -> (Z_1)_nu -> A_nu[T]`.
#[derive(Clone, Debug)]
pub struct ZStrand {
    pub nu: u32,
    /// `[z_0, z_1, ..., z_{n-1}]`.
    pub dims: Vec<usize>,
    /// `maps[i]` is the `z_i x z_{i+1}` matrix of `d_T: Z_{i+1} -> Z_i`.
    pub maps: Vec<MatP>,
    /// `cycle_bases[i - 1]` is the chosen basis of `(Z_i)_nu`.
    pub cycle_bases: Vec<Kernel>,
}

/// Builds the degree-`nu` strand. `t_ring` supplies one variable per
/// generator.
pub fn z_strand(g: &Generators, t_ring: &Arc<PolyRing>, nu: u32) -> Result<ZStrand> {
    let n = g.len();
    if t_ring.nvars() != n || t_ring.field() != g.ring().field() {
        return Err(Error::Shape(format!("{} target variables for {n} generators", t_ring.nvars())));
    }
    let nv = g.nvars();
    let field = g.ring().field();
    let bases: Vec<KoszulBasis> = (0..n).map(|i| KoszulBasis::new(n, nv, i, nu)).collect();
    let mut cycles = Vec::with_capacity(n - 1);
    for i in 1..n {
        cycles.push(cycle_basis(g, i, nu)?);
    }
    let mut dims = vec![bases[0].len()];
    dims.extend(cycles.iter().map(Kernel::dim));

    let t_vars: Vec<MultiPoly> = (0..n).map(|j| MultiPoly::var(t_ring, j)).collect();
    let mut maps = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        // d_T from (Z_{i+1}) to (Z_i).
        let mut m = MatP::zeros(t_ring, dims[i], dims[i + 1]);
        let src = &bases[i + 1];
        let dst = &bases[i];
        for (col, v) in cycles[i].basis.iter().enumerate() {
            // components[j] = coefficient vector of T_j in d_T(v).
            let mut components = vec![vec![field.zero(); dst.len()]; n];
            for (k, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (set, mono) = src.entry(k);
                for p in 0..set.len() {
                    let mut rest = set.to_vec();
                    let j = rest.remove(p);
                    let row = dst.index(&rest, mono);
                    let c = if p % 2 == 0 { b.clone() } else { b.neg() };
                    components[j][row] = components[j][row].add(&c);
                }
            }
            let mut entries: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dims[i]];
            for (j, w) in components.iter().enumerate() {
                let coords = if i == 0 {
                    w.clone()
                } else {
                    let ker = &cycles[i - 1];
                    let coords = ker.coordinates(w);
                    check_reconstruction(ker, &coords, w)?;
                    coords
                };
                for (row, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries[row].push((j, c));
                    }
                }
            }
            for (row, terms) in entries.into_iter().enumerate() {
                if terms.is_empty() {
                    continue;
                }
                let mut acc = MultiPoly::zero(t_ring);
                for (j, c) in terms {
                    acc = &acc + &t_vars[j].scale(&c);
                }
                m.set(row, col, acc);
            }
        }
        maps.push(m);
    }
    Ok(ZStrand {
        nu,
        dims,
        maps,
        cycle_bases: cycles,
    })
}

fn check_reconstruction(ker: &Kernel, coords: &[Scalar], w: &[Scalar]) -> Result<()> {
    let field = match w.first() {
        Some(x) => x.field(),
        None => return Ok(()),
    };
    let mut acc = vec![field.zero(); w.len()];
    for (c, b) in coords.iter().zip(&ker.basis) {
        if c.is_zero() {
            continue;
        }
        for (a, x) in acc.iter_mut().zip(b) {
            if !x.is_zero() {
                *a = a.add(&c.mul(x));
            }
        }
    }
    if acc != w {
        return Err(Error::Internal("boundary image is not a cycle".into()));
    }
    Ok(())
}

impl ZStrand {
    /// Ranks over `k(T)` bounded below by random specialization (two draws,
    /// elementwise maximum).
    pub fn generic_ranks(&self, seed: u64) -> Vec<usize> {
        self.maps
            .iter()
            .enumerate()
            .map(|(i, m)| m.generic_rank(seed.wrapping_add(i as u64)))
            .collect()
    }

    /// Whether `ranks` make the strand exact over `k(T)`: `r_0 = z_0`,
    /// `r_{i-1} + r_i = z_i`, and the last map is injective.
    pub fn is_generically_exact(&self, ranks: &[usize]) -> bool {
        let l = self.maps.len();
        if l == 0 || ranks[0] != self.dims[0] {
            return false;
        }
        for i in 1..l {
            if ranks[i - 1] + ranks[i] != self.dims[i] {
                return false;
            }
        }
        ranks[l - 1] == self.dims[l]
    }
}

/// One factor of a determinant of a complex.
#[derive(Clone, Debug)]
pub struct Minor {
    /// Position in the strand: the minor is taken from `maps[map]`.
    pub map: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: MultiPoly,
}

impl Minor {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `+1` for numerator factors, `-1` for denominator factors.
    pub fn sign(&self) -> i32 {
        if self.map.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComplexDet {
    pub value: MultiPoly,
    pub minors: Vec<Minor>,
    pub ranks: Vec<usize>,
}

impl ComplexDet {
    pub fn minor_sizes(&self) -> Vec<usize> {
        self.minors.iter().map(Minor::size).collect()
    }
}

/// Rank profile of `s`, checked for generic exactness; a failed check is
/// repeated with an independent seed before it is reported.
pub fn checked_ranks(s: &ZStrand, seed: u64) -> Result<Vec<usize>> {
    let mut ranks = s.generic_ranks(seed);
    if !s.is_generically_exact(&ranks) {
        let again = s.generic_ranks(seed ^ 0x9e37_79b9_7f4a_7c15);
        ranks = ranks.iter().zip(&again).map(|(a, b)| *a.max(b)).collect();
        if !s.is_generically_exact(&ranks) {
            return Err(Error::RankProfile {
                dims: s.dims.clone(),
                ranks,
            });
        }
    }
    Ok(ranks)
}

/// Determinant of the strand as a based complex: nested nonsingular minors
/// chosen from the `A_nu[T]` end, alternating product divided out exactly.
pub fn complex_determinant(s: &ZStrand, seed: u64) -> Result<ComplexDet> {
    let ranks = checked_ranks(s, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut minors = Vec::with_capacity(s.maps.len());
    let mut prev_cols: Vec<usize> = Vec::new();
    'attempt: for attempt in 0..4 {
        minors.clear();
        prev_cols.clear();
        for (i, m) in s.maps.iter().enumerate() {
            let rows: Vec<usize> = (0..m.rows()).filter(|r| !prev_cols.contains(r)).collect();
            if rows.len() != ranks[i] {
                return Err(Error::Internal("minor chain lost track of ranks".into()));
            }
            let all_cols: Vec<usize> = (0..m.cols()).collect();
            let sub = m.submatrix(&rows, &all_cols);
            let pt = sub.random_point(&mut rng);
            let pivots = match sub.specialize_mod(&pt) {
                Some(mm) => mm.pivot_columns(),
                None => Vec::new(),
            };
            if pivots.len() < ranks[i] {
                if attempt == 3 {
                    return Err(Error::NoNonsingularMinor {
                        target: ranks[i],
                        found: pivots.len(),
                    });
                }
                continue 'attempt;
            }
            let cols: Vec<usize> = pivots[..ranks[i]].to_vec();
            minors.push(Minor {
                map: i,
                rows,
                cols: cols.clone(),
                det: MultiPoly::zero(m.ring()),
            });
            prev_cols = cols;
        }
        break;
    }
    let t_ring = s.maps[0].ring().clone();
    let mut num = MultiPoly::one(&t_ring);
    let mut den = MultiPoly::one(&t_ring);
    for minor in minors.iter_mut() {
        let m = &s.maps[minor.map];
        minor.det = m.submatrix(&minor.rows, &minor.cols).det();
        if minor.det.is_zero() {
            return Err(Error::Internal("certified minor has zero determinant".into()));
        }
        if minor.sign() > 0 {
            num = &num * &minor.det;
        } else {
            den = &den * &minor.det;
        }
    }
    let value = num.exact_divide(&den)?;
    Ok(ComplexDet { value, minors, ranks })
}

/// Number of `k`-subsets of `n` elements, saturating.
fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Largest number of maximal minors enumerated exhaustively.
const EXHAUSTIVE_MINORS: u128 = 64;
const MAX_MINOR_DRAWS: usize = 2000;

/// Degree of the gcd of the `z_0 x z_0` minors of `m`, read off mod p:
/// `det(M R)` for random scalar `R` combines all minors (Cauchy-Binet), and
/// two such combinations restricted to a random line are interpolated and
/// their univariate gcd taken. The smaller value over two lines is kept.
fn minor_gcd_degree(m: &MatP, rng: &mut ChaCha8Rng) -> usize {
    let (z0, z1) = (m.rows(), m.cols());
    let p = modulus_for(m.ring().field());
    let nv = m.ring().nvars();
    let mut best = usize::MAX;
    for _ in 0..2 {
        let rand_mat = |rng: &mut ChaCha8Rng| {
            let mut r = ModMat::zeros(z1, z0, p);
            r.data.iter_mut().for_each(|v| *v = rng.gen_range(0..p));
            r
        };
        let (r1, r2) = (rand_mat(rng), rand_mat(rng));
        let a: Vec<u64> = (0..nv).map(|_| rng.gen_range(0..p)).collect();
        let b: Vec<u64> = (0..nv).map(|_| rng.gen_range(1..p)).collect();
        let (mut xs, mut y1, mut y2) = (Vec::new(), Vec::new(), Vec::new());
        let mut t = 0u64;
        while xs.len() <= z0 && t < 4 * z0 as u64 + 8 {
            t += 1;
            let pt: Vec<u64> = (0..nv).map(|i| add_mod(a[i], mul_mod(t, b[i], p), p)).collect();
            let Some(mm) = m.specialize_mod(&pt) else {
                continue;
            };
            xs.push(t);
            y1.push(mm.mul(&r1).det());
            y2.push(mm.mul(&r2).det());
        }
        if xs.len() <= z0 {
            continue;
        }
        let g = univariate_gcd(&interpolate(&xs, &y1, p), &interpolate(&xs, &y2, p), p);
        if !g.is_empty() {
            best = best.min(g.len() - 1);
        }
    }
    best
}

/// Gcd of the `z_0 x z_0` minors of the first strand map. Small cases use
/// every minor. Otherwise distinct nonsingular minors are drawn until the
/// running gcd falls to the degree computed by a modular gcd of random
/// combinations of all minors.
pub fn gcd_of_maximal_minors(s: &ZStrand, seed: u64) -> Result<MultiPoly> {
    use rand::seq::SliceRandom;
    let m = &s.maps[0];
    let (z0, z1) = (m.rows(), m.cols());
    if z1 < z0 {
        return Err(Error::Shape(format!("first map is {z0}x{z1}; need at least {z0} columns")));
    }
    let rows: Vec<usize> = (0..z0).collect();
    let mut g: Option<MultiPoly> = None;
    if binomial(z1, z0) <= EXHAUSTIVE_MINORS {
        for cols in subsets(z1, z0) {
            let d = m.submatrix(&rows, &cols).det();
            if d.is_zero() {
                continue;
            }
            g = Some(match g {
                None => d.normalized(),
                Some(prev) => gcd(&prev, &d)?,
            });
        }
        return g.ok_or(Error::NoNonsingularMinor { target: z0, found: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = minor_gcd_degree(m, &mut rng);
    if target == usize::MAX {
        return Err(Error::NoNonsingularMinor { target: z0, found: 0 });
    }
    let mut seen = HashSet::new();
    let mut draws = 0;
    while g.as_ref().is_none_or(|g| g.degree() as usize > target) {
        draws += 1;
        if draws > MAX_MINOR_DRAWS {
            return Err(Error::NoNonsingularMinor { target: z0, found: 0 });
        }
        let mut order: Vec<usize> = (0..z1).collect();
        order.shuffle(&mut rng);
        let sub = m.submatrix(&rows, &order);
        let pt = sub.random_point(&mut rng);
        let Some(mm) = sub.specialize_mod(&pt) else {
            continue;
        };
        let piv = mm.pivot_columns();
        if piv.len() < z0 {
            return Err(Error::NoNonsingularMinor { target: z0, found: piv.len() });
        }
        let mut cols: Vec<usize> = piv.iter().map(|&c| order[c]).collect();
        cols.sort_unstable();
        if !seen.insert(cols.clone()) {
            continue;
        }
        let d = m.submatrix(&rows, &cols).det();
        g = Some(match g {
            None => d.normalized(),
            Some(prev) => gcd(&prev, &d)?,
        });
    }
    Ok(g.expect("at least one minor was drawn"))
}
