//! Base locus analysis: Hilbert values of `A/I`, the degree of the image,
//! degreewise saturation, and the Koszul-syzygy test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{monomials_of_degree, Generators, Monomial, MultiPoly, Scalar};
use crate::complexes::{boundary_basis, cycle_basis, koszul_differential_matrix, KoszulBasis};
use crate::error::Result;
use crate::linalg::{in_span, intersection, span_basis, MatK};

/// `dim_k A_nu` for `A = k[X_1..X_nvars]`.
pub fn monomial_count(nvars: usize, nu: u32) -> usize {
    if nvars == 0 {
        return usize::from(nu == 0);
    }
    let (n, k) = (nu as usize + nvars - 1, nvars - 1);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `dim_k (A/I)_nu`.
pub fn hilbert_value(g: &Generators, nu: u32) -> usize {
    let total = monomial_count(g.nvars(), nu);
    if nu < g.degree() {
        return total;
    }
    let mult = koszul_differential_matrix(g, 1, nu - g.degree()).expect("degree one contraction");
    total - mult.rank()
}

/// Coarse dimension of the base locus `V(I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseLocusDim {
    Empty,
    Points,
    Positive,
}

impl BaseLocusDim {
    /// `-1`, `0`, or `1` (meaning at least one).
    pub fn as_int(self) -> i32 {
        match self {
            BaseLocusDim::Empty => -1,
            BaseLocusDim::Points => 0,
            BaseLocusDim::Positive => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseLocusProfile {
    pub dim: BaseLocusDim,
    /// Eventual Hilbert value; meaningful when `dim` is not `Positive`.
    pub e_total: u64,
    /// `(nu, dim (A/I)_nu)` over the inspected window.
    pub samples: Vec<(u32, usize)>,
}

/// First degree of the stabilization window.
pub fn stabilization_start(g: &Generators) -> u32 {
    g.nvars() as u32 * (g.degree() - 1) + 1
}

/// Samples the Hilbert function of `A/I` on a window of degrees past the
/// generic regularity and classifies the base locus.
pub fn base_locus_profile(g: &Generators) -> BaseLocusProfile {
    let start = stabilization_start(g);
    let width = g.len().max(g.degree() as usize) as u32;
    let samples: Vec<(u32, usize)> = (start..=start + width).map(|nu| (nu, hilbert_value(g, nu))).collect();
    let first = samples[0].1;
    let constant = samples.iter().all(|&(_, h)| h == first);
    let (dim, e_total) = match (constant, first) {
        (true, 0) => (BaseLocusDim::Empty, 0),
        (true, c) => (BaseLocusDim::Points, c as u64),
        (false, _) => (BaseLocusDim::Positive, 0),
    };
    BaseLocusProfile { dim, e_total, samples }
}

/// `d^{n-2} - e_total` for a map given by `n` forms of degree `d`; zero or
/// less means the map is not generically finite.
pub fn predicted_degree(n: usize, d: u32, e_total: u64) -> i64 {
    (d as i64).pow(n as u32 - 2) - e_total as i64
}

/// Degree from which the strand determinant is known to give the implicit
/// equation: `(n - 2)(d - 1)`.
pub fn nu_bound(n: usize, d: u32) -> u32 {
    (n as u32 - 2) * (d - 1)
}

/// Coordinates (in the decreasing monomial basis of `A_nu`) spanning `I_nu`.
pub fn ideal_piece(g: &Generators, nu: u32) -> Vec<Vec<Scalar>> {
    let field = g.ring().field();
    let dim = monomial_count(g.nvars(), nu);
    if nu < g.degree() {
        return Vec::new();
    }
    let m = koszul_differential_matrix(g, 1, nu - g.degree()).expect("degree one contraction");
    let cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|c| m.column(c)).collect();
    span_basis(field, dim, &cols)
}

/// `{ h in A_nu : h * A_s ⊆ I_{nu+s} }` for one `s`.
fn colon_piece(g: &Generators, nu: u32, s: u32) -> Vec<Vec<Scalar>> {
    let field = g.ring().field();
    let nv = g.nvars();
    let src = monomials_of_degree(nv, nu);
    let dst = KoszulBasis::new(1, nv, 0, nu + s);
    let ideal = ideal_piece(g, nu + s);
    let pivots: Vec<usize> = ideal
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let free: Vec<usize> = (0..dst.len()).filter(|c| !pivots.contains(c)).collect();
    let free_pos: std::collections::HashMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    // Normal form of a monomial of degree nu+s modulo I, on the free columns.
    let normal_form = |k: usize| -> Vec<(usize, Scalar)> {
        if let Some(&i) = free_pos.get(&k) {
            return vec![(i, field.one())];
        }
        let row = pivots.iter().position(|&p| p == k).unwrap();
        free.iter()
            .enumerate()
            .filter(|(_, &c)| !ideal[row][c].is_zero())
            .map(|(i, &c)| (i, ideal[row][c].neg()))
            .collect()
    };
    let shifts = monomials_of_degree(nv, s);
    let mut m = MatK::zeros(field, shifts.len() * free.len(), src.len());
    for (a, u) in shifts.iter().enumerate() {
        for (col, x) in src.iter().enumerate() {
            let k = dst.index(&[], &x.mul(u));
            for (i, c) in normal_form(k) {
                let r = a * free.len() + i;
                let v = m.get(r, col).add(&c);
                m.set(r, col, v);
            }
        }
    }
    let (_, ker) = m.rank_and_kernel();
    span_basis(field, src.len(), &ker.basis)
}

/// Echelon basis of the degree-`nu` part of the saturation of `I` with
/// respect to the irrelevant ideal, in the decreasing monomial basis of
/// `A_nu`.
///
/// The colon `I_{nu+s} : A_s` is computed for `s` starting where `nu + s`
/// reaches the stabilization window and grows until two consecutive
/// values agree.
pub fn saturation_piece(g: &Generators, nu: u32) -> Vec<Vec<Scalar>> {
    let mut s = stabilization_start(g).saturating_sub(nu);
    let mut prev = colon_piece(g, nu, s);
    loop {
        s += 1;
        let next = colon_piece(g, nu, s);
        if next.len() == prev.len() {
            return next;
        }
        prev = next;
    }
}

/// Converts a coordinate vector over `A_nu` into a polynomial.
pub fn vector_to_poly(g: &Generators, nu: u32, v: &[Scalar]) -> MultiPoly {
    let monos = monomials_of_degree(g.nvars(), nu);
    MultiPoly::from_terms(
        g.ring(),
        monos.into_iter().zip(v.iter().cloned()).filter(|(_, c)| !c.is_zero()),
    )
}

/// Per-degree dimensions compared by the syzygy test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyDegree {
    pub nu: u32,
    pub boundaries: usize,
    pub cycles_in_ideal: usize,
    pub cycles_in_saturation: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SyzygeticReport {
    pub nu_min: u32,
    pub nu_max: u32,
    /// `Z_1 ∩ TF(I) A^n = B_1` in every tested degree.
    pub passed: bool,
    /// `Z_1 ∩ I A^n = B_1` in every tested degree.
    pub plain_passed: bool,
    pub degrees: Vec<SyzygyDegree>,
    /// A syzygy with coefficients in the saturation that is not a Koszul
    /// syzygy, from the first failing degree.
    pub witness: Option<(u32, Vec<MultiPoly>)>,
    /// Generators the test ran on when they differ from the input.
    pub combinations: Option<Vec<MultiPoly>>,
}

/// Echelon basis with pivots taken from the last coordinate backwards.
fn reverse_echelon(field: crate::arith::Field, dim: usize, vecs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let rev: Vec<Vec<Scalar>> = vecs.iter().map(|v| v.iter().rev().cloned().collect()).collect();
    span_basis(field, dim, &rev)
        .into_iter()
        .map(|v| v.into_iter().rev().collect())
        .collect()
}

/// Reduces `v` modulo a reverse echelon basis.
fn reduce(v: &[Scalar], basis: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for b in basis {
        let p = b.iter().rposition(|x| !x.is_zero()).unwrap();
        if out[p].is_zero() {
            continue;
        }
        let f = out[p].div(&b[p]);
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o = o.sub(&f.mul(x));
            }
        }
    }
    out
}

/// Compares `Z_1 ∩ TF(I)·A^n` and `Z_1 ∩ I·A^n` with the Koszul boundaries
/// `B_1` in every degree from `d` to `nu_max`.
pub fn syzygetic_test(g: &Generators, nu_max: u32) -> SyzygeticReport {
    let field = g.ring().field();
    let n = g.len();
    let d = g.degree();
    let mut degrees = Vec::new();
    let mut witness = None;
    let (mut passed, mut plain_passed) = (true, true);
    for nu in d..=nu_max {
        let dim_a = monomial_count(g.nvars(), nu);
        let len = n * dim_a;
        let z1 = cycle_basis(g, 1, nu).expect("degree one cycles").basis;
        let spread = |piece: &[Vec<Scalar>]| -> Vec<Vec<Scalar>> {
            let mut out = Vec::new();
            for j in 0..n {
                for v in piece {
                    let mut w = vec![field.zero(); len];
                    w[j * dim_a..(j + 1) * dim_a].clone_from_slice(v);
                    out.push(w);
                }
            }
            out
        };
        let b1 = boundary_basis(g, nu);
        let in_ideal = intersection(field, len, &z1, &spread(&ideal_piece(g, nu)));
        let in_sat = intersection(field, len, &z1, &spread(&saturation_piece(g, nu)));
        plain_passed &= in_ideal.len() == b1.len();
        if in_sat.len() != b1.len() {
            passed = false;
            if witness.is_none() {
                let b1_rev = reverse_echelon(field, len, &b1);
                let candidates = in_ideal.iter().chain(&in_sat);
                if let Some(v) = candidates.clone().find(|v| !in_span(field, &b1, v)) {
                    let mut w = reduce(v, &b1_rev);
                    let lead = w.iter().find(|x| !x.is_zero()).unwrap().inv();
                    for x in w.iter_mut() {
                        *x = x.mul(&lead);
                    }
                    let polys = (0..n).map(|j| vector_to_poly(g, nu, &w[j * dim_a..(j + 1) * dim_a])).collect();
                    witness = Some((nu, polys));
                }
            }
        }
        degrees.push(SyzygyDegree {
            nu,
            boundaries: b1.len(),
            cycles_in_ideal: in_ideal.len(),
            cycles_in_saturation: in_sat.len(),
        });
    }
    SyzygeticReport {
        nu_min: d,
        nu_max,
        passed,
        plain_passed,
        degrees,
        witness,
        combinations: None,
    }
}

/// Koszul-syzygy test for surfaces. With more than three generators in
/// three variables it runs on three seeded random combinations, which
/// define the same ideal locally at every base point when the base locus
/// is finite. Otherwise it is [`syzygetic_test`].
pub fn combined_syzygetic_test(g: &Generators, nu_max: u32, seed: u64) -> Result<SyzygeticReport> {
    let k = g.nvars();
    if k != 3 || g.len() <= k {
        return Ok(syzygetic_test(g, nu_max));
    }
    let field = g.ring().field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combos = (0..k)
        .map(|_| {
            let mut acc = MultiPoly::zero(g.ring());
            for f in g.polys() {
                let c = field.random(&mut rng, 100);
                acc = &acc + &f.scale(&c);
            }
            acc
        })
        .collect::<Vec<_>>();
    let sub = Generators::new(g.ring(), combos.clone())?;
    let mut report = syzygetic_test(&sub, nu_max);
    report.combinations = Some(combos);
    Ok(report)
}

/// Monomial basis of `A_nu` (exposed for callers converting vectors).
pub fn monomial_basis(g: &Generators, nu: u32) -> Vec<Monomial> {
    monomials_of_degree(g.nvars(), nu)
}
