//! Sylvester and Bezout matrices of binary forms, the Kravitsky pencil, and
//! resultant-based implicitization of curves.

use std::sync::Arc;

use crate::arith::{gcd_many, Field, MultiPoly, Parameterization, PolyRing};
use crate::error::{Error, Result};
use crate::linalg::MatP;

/// A binary form of a declared degree `d`: `coeffs[j]` is the coefficient of
/// `X^{d-j} Y^j`. Coefficients live in an arbitrary polynomial ring (often
/// the ring with no variables, i.e. the field itself). The zero form is
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<MultiPoly>,
}

impl BinaryForm {
    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Shape("a binary form needs degree at least 1".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    /// Reads a homogeneous polynomial in a two-variable ring as a form of
    /// degree `degree` with coefficients in `coeff_ring` (same field).
    pub fn from_poly(p: &MultiPoly, degree: u32, coeff_ring: &Arc<PolyRing>) -> Result<Self> {
        if p.ring().nvars() != 2 {
            return Err(Error::InvalidVariables(format!(
                "binary forms need exactly two variables, got {}",
                p.ring().nvars()
            )));
        }
        if p.field() != coeff_ring.field() {
            return Err(Error::FieldMismatch);
        }
        if !p.is_zero() && p.homogeneous_degree()? != Some(degree) {
            return Err(Error::InvalidParameterization(format!("`{p}` is not a form of degree {degree}")));
        }
        let mut coeffs = vec![MultiPoly::zero(coeff_ring); degree as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponent(1) as usize] = MultiPoly::constant(coeff_ring, c.clone());
        }
        Self::from_coeffs(coeffs)
    }

    /// Parses `text` over the ring `k[X, Y]` named by `vars`.
    pub fn parse(field: Field, vars: [&str; 2], text: &str, degree: u32) -> Result<Self> {
        let xr = PolyRing::new(field, vars)?;
        let scalars = PolyRing::new(field, Vec::<String>::new())?;
        Self::from_poly(&MultiPoly::parse(&xr, text)?, degree, &scalars)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.coeffs[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// `self - t * other` for a coefficient `t`.
    pub fn sub_scaled(&self, t: &MultiPoly, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::Shape("forms of different degrees".into()));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - &(t * b)).collect();
        Ok(BinaryForm { coeffs })
    }

    /// Moves the coefficients into another ring with the same field.
    pub fn embed(&self, ring: &Arc<PolyRing>) -> Result<BinaryForm> {
        if ring.field() != self.ring().field() {
            return Err(Error::FieldMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c.constant_value() {
                Some(v) => Ok(MultiPoly::constant(ring, v)),
                None => Err(Error::Shape("only constant coefficients can be embedded".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryForm { coeffs })
    }
}

/// The `(dp + dq)`-square Sylvester matrix: `dq` shifted rows of `p`'s
/// coefficients followed by `dp` shifted rows of `q`'s.
pub fn sylvester_matrix(p: &BinaryForm, q: &BinaryForm) -> Result<MatP> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (dp, dq) = (p.degree(), q.degree());
    let n = dp + dq;
    let mut m = MatP::zeros(p.ring(), n, n);
    for i in 0..dq {
        for (j, c) in p.coeffs.iter().enumerate() {
            m.set(i, i + j, c.clone());
        }
    }
    for i in 0..dp {
        for (j, c) in q.coeffs.iter().enumerate() {
            m.set(dq + i, i + j, c.clone());
        }
    }
    Ok(m)
}

pub fn sylvester_resultant(p: &BinaryForm, q: &BinaryForm) -> Result<MultiPoly> {
    Ok(sylvester_matrix(p, q)?.det())
}

/// Coefficients `c_{ij}` of `(P(S,1)Q(T,1) - P(T,1)Q(S,1)) / (S - T)
/// = Σ c_{ij} S^i T^j`, with row `i` and column `j`.
pub fn bezout_matrix(p: &BinaryForm, q: &BinaryForm) -> Result<MatP> {
    let d = p.degree();
    if q.degree() != d {
        return Err(Error::Shape(format!("Bezout matrix of forms of degrees {d} and {}", q.degree())));
    }
    // Coefficient of S^k in P(S, 1).
    let pc = |k: usize| &p.coeffs[d - k];
    let qc = |k: usize| &q.coeffs[d - k];
    let mut m = MatP::zeros(p.ring(), d, d);
    for a in 0..=d {
        for b in 0..a {
            let w = &(pc(a) * qc(b)) - &(pc(b) * qc(a));
            if w.is_zero() {
                continue;
            }
            // (S^a T^b - S^b T^a) / (S - T) = Σ_k S^{b+k} T^{a-1-k}.
            for k in 0..a - b {
                let (i, j) = (b + k, a - 1 - k);
                let v = m.get(i, j) + &w;
                m.set(i, j, v);
            }
        }
    }
    Ok(m)
}

/// `T_1 Bez(f_2, f_3) + T_2 Bez(f_3, f_1) + T_3 Bez(f_1, f_2)` over
/// `t_ring`, whose first three variables play the roles of `T_1, T_2, T_3`.
pub fn kravitsky_pencil(f: [&BinaryForm; 3], t_ring: &Arc<PolyRing>) -> Result<MatP> {
    let d = f[0].degree();
    if f.iter().any(|g| g.degree() != d) {
        return Err(Error::Shape("Kravitsky pencil needs forms of equal degree".into()));
    }
    if t_ring.nvars() < 3 {
        return Err(Error::InvalidVariables("the pencil needs three target variables".into()));
    }
    let emb: Vec<BinaryForm> = f.iter().map(|g| g.embed(t_ring)).collect::<Result<_>>()?;
    let mut acc = MatP::zeros(t_ring, d, d);
    for (k, (a, b)) in [(1, 2), (2, 0), (0, 1)].into_iter().enumerate() {
        let bez = bezout_matrix(&emb[a], &emb[b])?;
        acc = acc.add(&bez.scale(&MultiPoly::var(t_ring, k)));
    }
    Ok(acc)
}

/// Output of the resultant route for curves.
#[derive(Clone, Debug)]
pub struct CurveResultant {
    /// `Res(f_1 - T_1 f_3, f_2 - T_2 f_3)`, a polynomial in `T_1, T_2`.
    pub dehomogenized: MultiPoly,
    /// Determinant of the Kravitsky pencil, homogeneous in `T_1, T_2, T_3`.
    pub kravitsky: MultiPoly,
    pub pencil: MatP,
}

/// Implicit equation of a plane curve through resultants. Requires
/// `gcd(f_1, f_2, f_3) = 1`.
pub fn curve_implicitize_resultant(param: &Parameterization) -> Result<CurveResultant> {
    if param.n() != 3 {
        return Err(Error::InvalidParameterization(format!(
            "resultant methods handle curves only (3 polynomials), got {}",
            param.n()
        )));
    }
    let g = gcd_many(param.polys())?;
    if !g.is_constant() {
        return Err(Error::CommonFactor(g.to_string()));
    }
    let t_ring = param.t_ring();
    let d = param.degree();
    let forms: Vec<BinaryForm> = param
        .polys()
        .iter()
        .map(|p| BinaryForm::from_poly(p, d, t_ring))
        .collect::<Result<_>>()?;
    let t1 = MultiPoly::var(t_ring, 0);
    let t2 = MultiPoly::var(t_ring, 1);
    let a = forms[0].sub_scaled(&t1, &forms[2])?;
    let b = forms[1].sub_scaled(&t2, &forms[2])?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::Degenerate("a specialized form vanishes identically".into()));
    }
    let dehomogenized = sylvester_resultant(&a, &b)?;
    if dehomogenized.is_zero() {
        return Err(Error::Degenerate("the resultant vanishes identically".into()));
    }
    let pencil = kravitsky_pencil([&forms[0], &forms[1], &forms[2]], t_ring)?;
    let kravitsky = pencil.det();
    Ok(CurveResultant {
        dehomogenized,
        kravitsky,
        pencil,
    })
}

/// Sets the last of three target variables to one.
pub fn dehomogenize_last(p: &MultiPoly) -> MultiPoly {
    let ring = p.ring();
    let last = ring.nvars() - 1;
    MultiPoly::from_terms(ring, p.terms().iter().map(|(m, c)| (m.with_exponent(last, 0), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn form(text: &str, d: u32) -> BinaryForm {
        BinaryForm::parse(Q, ["X1", "X2"], text, d).unwrap()
    }

    fn scalar(p: &MultiPoly) -> i64 {
        p.constant_value().unwrap().to_string().parse().unwrap()
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(scalar(&sylvester_resultant(&form("X1", 1), &form("X2", 1)).unwrap()), 1);
        for d in 1..5 {
            let x = form(&format!("X1^{d}"), d);
            let y = form(&format!("X2^{d}"), d);
            assert_eq!(scalar(&sylvester_resultant(&x, &y).unwrap()), 1);
        }
        let zero = form("0", 2);
        assert!(sylvester_resultant(&zero, &form("X1^2", 2)).is_err());
    }

    #[test]
    fn bezout_examples() {
        let p = form("X1^2 + 3*X1*X2 - X2^2", 2);
        assert!(bezout_matrix(&p, &p).unwrap().is_zero());
        let b = bezout_matrix(&form("X1^2", 2), &form("X2^2", 2)).unwrap();
        assert_eq!(b.to_strings(), [["0", "1"], ["1", "0"]]);
        assert_eq!(scalar(&b.det()), -1);
        assert!(bezout_matrix(&form("X1^2", 2), &form("X2", 1)).is_err());
    }

    #[test]
    fn conic_pencil() {
        let t = PolyRing::new(Q, ["T1", "T2", "T3"]).unwrap();
        let f = [form("X1^2", 2), form("X1*X2", 2), form("X2^2", 2)];
        let m = kravitsky_pencil([&f[0], &f[1], &f[2]], &t).unwrap();
        let conic = MultiPoly::parse(&t, "T2^2 - T1*T3").unwrap();
        assert!(m.det().eq_up_to_unit(&conic));
    }

    #[test]
    fn curve_resultant_route() {
        let p = Parameterization::parse(Q, &["X1", "X2"], &["X1^2", "X1*X2", "X2^2"]).unwrap();
        let r = curve_implicitize_resultant(&p).unwrap();
        let t = p.t_ring();
        assert!(r.dehomogenized.eq_up_to_unit(&MultiPoly::parse(t, "T2^2 - T1").unwrap()));
        assert!(dehomogenize_last(&r.kravitsky).eq_up_to_unit(&r.dehomogenized));
        let bp = Parameterization::parse(Q, &["X1", "X2"], &["X1^3", "X1^2*X2", "X1*X2^2"]).unwrap();
        assert!(matches!(curve_implicitize_resultant(&bp), Err(Error::CommonFactor(_))));
    }
}
