//! Multivariate gcd, squarefree parts and perfect powers.
//!
//! The gcd is the classical recursive scheme: split off the content with
//! respect to the last variable that occurs, then run a subresultant
//! pseudo-remainder sequence on the primitive parts with coefficients in
//! the remaining variables.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::monomial::Monomial;
use super::poly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};

type Coeffs = Vec<MultiPoly>;

fn trim(c: &mut Coeffs) {
    while c.last().is_some_and(|p| p.is_zero()) {
        c.pop();
    }
}

fn from_coeffs(ring: &Arc<PolyRing>, var: usize, c: &[MultiPoly]) -> MultiPoly {
    let mut terms = Vec::new();
    for (k, p) in c.iter().enumerate() {
        for (m, s) in p.terms() {
            terms.push((m.with_exponent(var, k as u16), s.clone()));
        }
    }
    MultiPoly::from_terms(ring, terms)
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, coefficientwise in one variable.
fn pseudo_remainder(a: &[MultiPoly], b: &[MultiPoly]) -> Coeffs {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r: Coeffs = a.to_vec();
    let mut e = (a.len() - b.len() + 1) as u32;
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lcr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &lcr * bj;
            r[j + k] = &r[j + k] - &t;
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lcb.pow(e);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn divide_all(c: &mut Coeffs, by: &MultiPoly) {
    if by.is_one() {
        return;
    }
    for p in c.iter_mut() {
        *p = p.exact_divide(by).expect("subresultant division is exact");
    }
}

/// Gcd of the coefficients of `c`.
fn content(c: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero(c[0].ring());
    for p in c {
        g = gcd_nonnormalized(&g, p);
        if !g.is_zero() && g.is_constant() {
            break;
        }
    }
    g
}

fn primitive(c: &[MultiPoly]) -> (MultiPoly, Coeffs) {
    let g = content(c);
    let mut out = c.to_vec();
    divide_all(&mut out, &g);
    (g, out)
}

/// Subresultant PRS on primitive inputs; returns the primitive gcd.
fn subresultant_gcd(a: Coeffs, b: Coeffs) -> Coeffs {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let ring = a[0].ring().clone();
    let mut g = MultiPoly::one(&ring);
    let mut h = MultiPoly::one(&ring);
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            return primitive(&b).1;
        }
        if r.len() == 1 {
            return vec![MultiPoly::one(&ring)];
        }
        a = b;
        b = r;
        let div = &g * &h.pow(delta);
        divide_all(&mut b, &div);
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).exact_divide(&h.pow(delta - 1)).expect("subresultant division is exact")
        };
    }
}

fn gcd_nonnormalized(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let ring = a.ring().clone();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(&ring);
    }
    let sa = a.support_vars();
    let sb = b.support_vars();
    let var = *sa.iter().chain(&sb).max().unwrap();
    let ca = a.coefficients_in(var);
    let cb = b.coefficients_in(var);
    if ca.len() == 1 {
        return gcd_nonnormalized(a, &content(&cb));
    }
    if cb.len() == 1 {
        return gcd_nonnormalized(&content(&ca), b);
    }
    // Monomial factors in `var` are cheap to peel off and keep the PRS small.
    let (conta, pa) = primitive(&ca);
    let (contb, pb) = primitive(&cb);
    let cont = gcd_nonnormalized(&conta, &contb);
    let g = subresultant_gcd(pa, pb);
    &cont * &from_coeffs(&ring, var, &g)
}

/// Greatest common divisor, normalized (primitive with positive leading
/// coefficient over the rationals, monic over GF(p)).
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    if !super::poly::same_ring(a.ring(), b.ring()) {
        return Err(Error::FieldMismatch);
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(gcd_nonnormalized(a, b).normalized())
}

/// Gcd of a list, skipping zeros. Errors if every entry is zero.
pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>) -> Result<MultiPoly> {
    let mut acc: Option<MultiPoly> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.clone(),
            Some(g) => {
                if g.is_constant() && !g.is_zero() {
                    return Ok(g.normalized());
                }
                gcd_nonnormalized(&g, p)
            }
        });
    }
    match acc {
        Some(g) if !g.is_zero() => Ok(g.normalized()),
        _ => Err(Error::ZeroPolynomial),
    }
}

fn check_characteristic(p: &MultiPoly) -> Result<()> {
    let ch = p.field().characteristic();
    let deg = p.degree();
    if ch != 0 && ch <= deg as u64 {
        return Err(Error::SmallCharacteristic {
            characteristic: ch,
            degree: deg,
        });
    }
    Ok(())
}

/// Restricts `p` to a random affine line and checks that the restriction
/// keeps its degree and is squarefree, which certifies that `p` is.
fn squarefree_on_line(p: &MultiPoly, seed: u64) -> bool {
    let field = p.field();
    let Ok(line) = PolyRing::new(field, ["t"]) else {
        return false;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = MultiPoly::var(&line, 0);
    let images: Vec<MultiPoly> = (0..p.ring().nvars())
        .map(|_| {
            let a = MultiPoly::constant(&line, field.random(&mut rng, 1000));
            let b = t.scale(&field.random(&mut rng, 1000));
            &a + &b
        })
        .collect();
    let Ok(g) = p.substitute(&line, &images) else {
        return false;
    };
    if g.degree() != p.degree() {
        return false;
    }
    match gcd(&g, &g.derivative(0)) {
        Ok(d) => d.is_constant(),
        Err(_) => false,
    }
}

/// The product of the distinct irreducible factors of `p`, normalized.
pub fn squarefree_part(p: &MultiPoly) -> Result<MultiPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_characteristic(p)?;
    if p.is_constant() {
        return Ok(MultiPoly::one(p.ring()));
    }
    if squarefree_on_line(p, 0x5eed) {
        return Ok(p.normalized());
    }
    let mut polys = vec![p.clone()];
    for v in p.support_vars() {
        polys.push(p.derivative(v));
    }
    let g = gcd_many(&polys)?;
    Ok(p.exact_divide(&g)?.normalized())
}

/// Tries to write a monic `q` as `h^e` with `h` monic.
fn exact_root(q: &MultiPoly, e: u32) -> Option<MultiPoly> {
    let ring = q.ring();
    let field = q.field();
    let (lm, _) = q.lead()?;
    let mut h = MultiPoly::monomial(ring, lm.root(e)?, field.one());
    let e_scalar = field.from_i64(e as i64);
    if e_scalar.is_zero() {
        return None;
    }
    let bound = q.len() * (e as usize) + 16;
    for _ in 0..bound {
        let r = q - &h.pow(e);
        let Some((rm, rc)) = r.lead() else {
            return Some(h);
        };
        let (hm, _) = h.lead().unwrap();
        let base: Monomial = hm.pow(e - 1);
        if !base.divides(rm) {
            return None;
        }
        let t = MultiPoly::monomial(ring, base.quotient_of(rm), rc.div(&e_scalar));
        h = &h + &t;
    }
    None
}

/// Largest `e` with `p = unit * h^e`; returns the normalized root `h` and
/// `e` (which is 1 when `p` is not a proper power).
pub fn perfect_power_decompose(p: &MultiPoly) -> Result<(MultiPoly, u32)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::Degenerate("constant polynomial has no root".into()));
    }
    check_characteristic(p)?;
    let lc = p.leading_coeff();
    let q = p.scale(&lc.inv());
    let deg = p.degree();
    for e in (2..=deg).rev() {
        if !deg.is_multiple_of(e) {
            continue;
        }
        if let Some(h) = exact_root(&q, e) {
            return Ok((h.normalized(), e));
        }
    }
    Ok((p.normalized(), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    fn ring(f: Field, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(f, names.iter().copied()).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> MultiPoly {
        MultiPoly::parse(r, s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let r = ring(Field::Rational, &["X1", "X2"]);
        assert_eq!(gcd(&p(&r, "X1^2*X2"), &p(&r, "X1*X2^2")).unwrap(), p(&r, "X1*X2"));
        let fs = [p(&r, "X1^3"), p(&r, "X1^2*X2"), p(&r, "X1*X2^2")];
        assert_eq!(gcd_many(&fs).unwrap(), p(&r, "X1"));
        let t = ring(Field::Rational, &["T1", "T2"]);
        assert!(gcd(&p(&t, "T1 + T2"), &p(&t, "T1 - T2")).unwrap().is_one());
    }

    #[test]
    fn gcd_with_common_factor() {
        let r = ring(Field::Rational, &["x", "y", "z"]);
        let c = p(&r, "x*y - 3*z^2 + 1");
        let a = &p(&r, "x^2 + y*z - 2") * &c;
        let b = &p(&r, "y^3 - x*z + 5*x") * &c;
        assert_eq!(gcd(&a, &b).unwrap(), c.normalized());
        let rp = ring(Field::Prime(65521), &["x", "y", "z"]);
        let cp = c.convert_field(&rp).unwrap();
        let ap = a.convert_field(&rp).unwrap();
        let bp = b.convert_field(&rp).unwrap();
        assert_eq!(gcd(&ap, &bp).unwrap(), cp.normalized());
    }

    #[test]
    fn squarefree_examples() {
        let r = ring(Field::Rational, &["T1", "T2", "T3", "T4"]);
        let l = p(&r, "T1 + T2");
        assert_eq!(squarefree_part(&l.pow(2)).unwrap(), l);
        let prod = p(&r, "T1*T3 + T1*T4 + T2*T3 + T2*T4");
        assert_eq!(squarefree_part(&prod).unwrap(), prod);
        let h = p(&r, "T1 + T2 + T3 - T4");
        assert_eq!(squarefree_part(&h.pow(4)).unwrap(), h);
        let mixed = &l.pow(3) * &p(&r, "T3 - T4");
        assert_eq!(squarefree_part(&mixed).unwrap(), (&l * &p(&r, "T3 - T4")).normalized());
    }

    #[test]
    fn small_characteristic_is_refused() {
        let r = ring(Field::Prime(3), &["x", "y"]);
        let q = p(&r, "x^3 + y^3");
        assert!(matches!(squarefree_part(&q), Err(Error::SmallCharacteristic { .. })));
        assert!(matches!(perfect_power_decompose(&q), Err(Error::SmallCharacteristic { .. })));
    }

    #[test]
    fn perfect_powers() {
        let r = ring(Field::Rational, &["T1", "T2", "T3", "T4"]);
        let h = p(&r, "T1 + T2 + T3 - T4");
        assert_eq!(perfect_power_decompose(&h.pow(4)).unwrap(), (h.clone(), 4));
        let q = p(&r, "T2^2 - T1*T3");
        assert_eq!(perfect_power_decompose(&q).unwrap(), (q.clone(), 1));
        assert_eq!(perfect_power_decompose(&q.pow(2).scale(&Field::Rational.from_i64(-3))).unwrap(), (q, 2));
        let six = h.pow(6);
        assert_eq!(perfect_power_decompose(&six).unwrap().1, 6);
    }
}
