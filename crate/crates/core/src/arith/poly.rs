//! Sparse multivariate polynomials over a [`Field`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::rational::Rational;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A polynomial ring `k[v_1, ..., v_m]`: a field plus an ordered list of
/// variable names. Polynomials from distinct rings never mix.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(field: Field, vars: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidVariables(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidVariables(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: Field) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            field,
            vars: self.vars.clone(),
        })
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A polynomial in canonical form: terms strictly decreasing in grevlex
/// order, no zero coefficients.
#[derive(Clone)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_i64(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::constant(ring, ring.field.from_i64(c))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field.one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<PolyRing>, acc: FxHashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<(Monomial, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant term value, if this polynomial is a constant.
    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(self.ring.field.zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn lead(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var) as u32).max().unwrap_or(0)
    }

    /// Variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .collect()
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &MultiPoly, subtract: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if subtract { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if subtract { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((m.clone(), if subtract { c.neg() } else { c.clone() }));
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: FxHashMap<Monomial, Scalar> =
            FxHashMap::with_capacity_and_hasher(small.len() * large.len() / 2 + 1, Default::default());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(&self.ring, acc)
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
            .collect();
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, cc)| (m.clone(), cc.mul(c))).collect();
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn negate(&self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(divisor)?;
        let (lm, lc) = divisor.lead().ok_or(Error::ZeroPolynomial)?;
        if self.is_zero() {
            return Ok(MultiPoly::zero(&self.ring));
        }
        let lc_inv = lc.inv();
        if divisor.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return Err(Error::NotDivisible);
                }
                terms.push((lm.quotient_of(m), c.mul(&lc_inv)));
            }
            return Ok(MultiPoly {
                ring: self.ring.clone(),
                terms,
            });
        }
        let tail = &divisor.terms[1..];
        let mut rem: BTreeMap<Monomial, Scalar> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return Err(Error::NotDivisible);
            }
            let qm = lm.quotient_of(&m);
            let qc = c.mul(&lc_inv);
            for (tm, tc) in tail {
                let key = qm.mul(tm);
                let delta = qc.mul(tc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get().sub(&delta);
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta.neg());
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    /// Whether `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &MultiPoly) -> bool {
        self.exact_divide(divisor).is_ok()
    }

    /// `Some(d)` when every term has total degree `d` in the given variables.
    pub fn homogeneous_degree_in(&self, vars: &[usize]) -> Result<Option<u32>> {
        let first = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        let d = first.0.degree_in(vars);
        Ok(self.terms.iter().all(|(m, _)| m.degree_in(vars) == d).then_some(d))
    }

    /// Homogeneity with respect to all variables of the ring.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let first = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        let d = first.0.degree();
        Ok(self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d))
    }

    /// Simultaneous substitution of `images[i]` for variable `i`. All images
    /// must lie in one common target ring.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Shape(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        if target.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        for img in images {
            if !same_ring(img.ring(), target) {
                return Err(Error::FieldMismatch);
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|_| Vec::new()).collect();
        let mut acc = MultiPoly::zero(target);
        // Group terms so that the running sum stays sparse.
        let mut parts: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(MultiPoly::one(target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[i]);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e as usize]);
            }
            for (tm, tc) in term.terms {
                match parts.get_mut(&tm) {
                    Some(v) => *v = v.add(&tc),
                    None => {
                        parts.insert(tm, tc);
                    }
                }
            }
        }
        acc = acc.merge(&MultiPoly::from_map(target, parts), false);
        Ok(acc)
    }

    /// Substitution driven by variable names. Variables of `self` that do not
    /// occur need no entry.
    pub fn evaluate(&self, target: &Arc<PolyRing>, assignment: &HashMap<String, MultiPoly>) -> Result<MultiPoly> {
        let mut images = Vec::with_capacity(self.ring.nvars());
        let support = self.support_vars();
        for (i, name) in self.ring.vars.iter().enumerate() {
            match assignment.get(name) {
                Some(p) => images.push(p.clone()),
                None if support.contains(&i) => return Err(Error::MissingAssignment(name.clone())),
                None => images.push(MultiPoly::zero(target)),
            }
        }
        self.substitute(target, &images)
    }

    /// Numeric evaluation at a point given for every variable.
    pub fn eval_at(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension");
        let mut powers: Vec<Vec<Scalar>> = point.iter().map(|p| vec![self.ring.field.one(), p.clone()]).collect();
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&point[i]);
                    cache.push(next);
                }
                v = v.mul(&cache[e as usize]);
            }
            acc = acc.add(&v);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let f = self.ring.field;
        let terms: Vec<(Monomial, Scalar)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c.mul(&f.from_i64(e as i64)))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // Lowering one exponent keeps grevlex order among these terms.
        let mut terms = terms;
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of
    /// `var^k`, as a polynomial not involving `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            buckets[e].push((m.with_exponent(var, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MultiPoly {
                    ring: self.ring.clone(),
                    terms: t,
                }
            })
            .collect()
    }

    /// Canonical representative of `self` up to a nonzero constant: over the
    /// rationals, integer coefficients with content one and positive leading
    /// coefficient; over GF(p), monic.
    pub fn normalized(&self) -> MultiPoly {
        self.normalized_with_unit().1
    }

    /// Returns `(u, n)` with `self = u * n` and `n` normalized. The unit of
    /// the zero polynomial is one.
    pub fn normalized_with_unit(&self) -> (Scalar, MultiPoly) {
        let f = self.ring.field;
        if self.is_zero() {
            return (f.one(), self.clone());
        }
        let factor = match f {
            Field::Prime(_) => self.terms[0].1.inv(),
            Field::Rational => {
                let mut den_lcm = BigInt::one();
                let mut num_gcd = BigInt::zero();
                for (_, c) in &self.terms {
                    let r = c.as_rational().expect("rational field");
                    den_lcm = den_lcm.lcm(&r.denom());
                }
                for (_, c) in &self.terms {
                    let r = c.as_rational().unwrap();
                    let scaled = r.numer() * (&den_lcm / r.denom());
                    num_gcd = num_gcd.gcd(&scaled);
                }
                let mut factor = Rational::from_bigints(den_lcm, num_gcd.abs());
                if self.terms[0].1.signum() < 0 {
                    factor = factor.neg();
                }
                Scalar::Q(factor)
            }
        };
        (factor.inv(), self.scale(&factor))
    }

    /// Equality up to multiplication by a nonzero constant.
    pub fn eq_up_to_unit(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    /// Moves the polynomial into another ring, sending variable `i` of
    /// `self` to variable `var_map[i]` of `target`, converting coefficients
    /// into the target field. `None` if a coefficient cannot be converted.
    pub fn map_into(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Option<MultiPoly> {
        debug_assert_eq!(var_map.len(), self.ring.nvars());
        let nt = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; nt];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[var_map[i]] += e;
                }
            }
            let c = c.convert(target.field())?;
            if !c.is_zero() {
                terms.push((Monomial::from_exponents(&exps), c));
            }
        }
        Some(MultiPoly::from_terms(target, terms))
    }

    /// Same polynomial with coefficients reduced into the ring's field
    /// counterpart `target` (same variables).
    pub fn convert_field(&self, target: &Arc<PolyRing>) -> Option<MultiPoly> {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_into(target, &map)
    }
}

/// Serialized as its canonical text form.
impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.signum() < 0;
            let abs = if negative { c.neg() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut first = true;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Field::Rational, names.iter().copied()).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> MultiPoly {
        MultiPoly::parse(r, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["X1", "X2"]);
        let prod = &p(&r, "X1 + X2") * &p(&r, "X1 - X2");
        assert_eq!(prod, p(&r, "X1^2 - X2^2"));
    }

    #[test]
    fn additive_inverse_and_merge() {
        let r = ring(&["X1", "X2"]);
        let a = p(&r, "3*X1^2*X2 - 5*X2 + 1/2");
        assert!((&a + &(-&a)).is_zero());
        let b = p(&r, "X1^2*X2");
        assert_eq!((&b + &b).to_string(), "2*X1^2*X2");
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let r = ring(&["X1", "X2"]);
        let rp = PolyRing::new(Field::Prime(7), ["X1", "X2"]).unwrap();
        let a = p(&r, "X1");
        let b = MultiPoly::parse(&rp, "X1").unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch)));
        assert!(matches!(a.try_mul(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn homogeneity() {
        let r = ring(&["X1", "X2", "X3"]);
        assert_eq!(p(&r, "X1^2 + X1*X2").homogeneous_degree().unwrap(), Some(2));
        assert_eq!(p(&r, "X1^2 + X1").homogeneous_degree().unwrap(), None);
        assert_eq!(p(&r, "X1^3 + X2^3 + X3^3").homogeneous_degree().unwrap(), Some(3));
        assert!(MultiPoly::zero(&r).homogeneous_degree().is_err());
    }

    #[test]
    fn substitution_examples() {
        let x = ring(&["X1", "X2"]);
        let t = ring(&["T1", "T2", "T3"]);
        let conic = p(&t, "T2^2 - T1*T3");
        let images = [p(&x, "X1^2"), p(&x, "X1*X2"), p(&x, "X2^2")];
        assert!(conic.substitute(&x, &images).unwrap().is_zero());

        let one = ring(&[]);
        let lin = p(&x, "X1 + X2");
        let v = lin
            .substitute(&one, &[MultiPoly::from_i64(&one, 1), MultiPoly::from_i64(&one, 2)])
            .unwrap();
        assert_eq!(v, MultiPoly::from_i64(&one, 3));

        let x3 = ring(&["X1", "X2", "X3"]);
        let t4 = ring(&["T1", "T2", "T3", "T4"]);
        let surface = p(&t4, "T1*T2*T3 + T1*T2*T4 - T3*T4^2");
        let f = [
            p(&x3, "X1*X3^2"),
            p(&x3, "X1*X2^2 + X2^2*X3"),
            p(&x3, "X1^2*X2 + X1*X2*X3"),
            p(&x3, "X1*X2*X3 + X2*X3^2"),
        ];
        assert!(surface.substitute(&x3, &f).unwrap().is_zero());
    }

    #[test]
    fn evaluate_reports_missing_variables() {
        let t = ring(&["T1", "T2"]);
        let x = ring(&["X1"]);
        let q = p(&t, "T1*T2");
        let mut a = HashMap::new();
        a.insert("T1".to_string(), p(&x, "X1"));
        assert!(matches!(q.evaluate(&x, &a), Err(Error::MissingAssignment(v)) if v == "T2"));
        a.insert("T2".to_string(), p(&x, "2*X1"));
        assert_eq!(q.evaluate(&x, &a).unwrap(), p(&x, "2*X1^2"));
    }

    #[test]
    fn exact_division() {
        let r = ring(&["X1", "X2"]);
        assert_eq!(p(&r, "X1^2 - X2^2").exact_divide(&p(&r, "X1 - X2")).unwrap(), p(&r, "X1 + X2"));
        assert!(matches!(p(&r, "X1^2").exact_divide(&p(&r, "X2")), Err(Error::NotDivisible)));
        assert!(matches!(p(&r, "X1").exact_divide(&MultiPoly::zero(&r)), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn normalization() {
        let r = ring(&["T1", "T2", "T3"]);
        let a = p(&r, "-2/3*T2^2 + 2/3*T1*T3");
        assert_eq!(a.normalized().to_string(), "T2^2 - T1*T3");
        assert!(a.eq_up_to_unit(&p(&r, "T1*T3 - T2^2")));
        let (u, n) = a.normalized_with_unit();
        assert_eq!(n.scale(&u), a);
    }

    #[test]
    fn derivative_and_coefficients() {
        let r = ring(&["X", "Y"]);
        let a = p(&r, "X^3*Y + 2*X*Y^2 + Y");
        assert_eq!(a.derivative(0), p(&r, "3*X^2*Y + 2*Y^2"));
        let cs = a.coefficients_in(0);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[1], p(&r, "2*Y^2"));
        assert_eq!(cs[0], p(&r, "Y"));
    }
}
