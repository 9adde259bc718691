use std::cmp::Ordering;

use smallvec::SmallVec;

/// Dense exponent vector over the variables of a [`PolyRing`](super::PolyRing).
///
/// Ordered by graded reverse lexicographic order: `a > b` when `a` has larger
/// total degree, or equal degree and the last differing exponent of `a` is
/// smaller.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Monomial {
            exps,
            degree: other.degree - self.degree,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&x| u16::try_from(x as u32 * e).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree * e,
        }
    }

    /// Exact `e`-th root, if every exponent is divisible by `e`.
    pub fn root(&self, e: u32) -> Option<Monomial> {
        if self.exps.iter().any(|&x| !(x as u32).is_multiple_of(e)) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().map(|&x| (x as u32 / e) as u16).collect(),
            degree: self.degree / e,
        })
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.degree = m.degree - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }

    /// Degree restricted to a subset of variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i] as u32).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.exps.len()).rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in
/// decreasing graded reverse lexicographic order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u16; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, degree, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_order() {
        let x2 = Monomial::from_exponents(&[0, 2, 0]);
        let x1x3 = Monomial::from_exponents(&[1, 0, 1]);
        let x1sq = Monomial::from_exponents(&[2, 0, 0]);
        assert!(x1sq > x2);
        assert!(x2 > x1x3);
        assert!(Monomial::from_exponents(&[0, 0, 3]) > x1sq);
    }

    #[test]
    fn degree_basis_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
        let b = monomials_of_degree(2, 1);
        assert_eq!(b[0].exponents(), &[1, 0]);
        assert_eq!(b[1].exponents(), &[0, 1]);
    }

    #[test]
    fn divisibility_and_roots() {
        let a = Monomial::from_exponents(&[1, 2]);
        let b = Monomial::from_exponents(&[3, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).exponents(), &[2, 0]);
        assert_eq!(b.pow(2).root(2).unwrap(), b);
        assert!(a.root(2).is_none());
    }
}
