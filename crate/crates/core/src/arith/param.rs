//! Homogeneous generator lists and rational parameterizations.

use std::sync::Arc;

use super::poly::{same_ring, MultiPoly, PolyRing};
use crate::error::{Error, Result};

/// `n` homogeneous polynomials of a common degree `d >= 1` in the variables
/// of one ring. Zero entries are allowed; the number of variables is free.
#[derive(Clone, Debug)]
pub struct Generators {
    ring: Arc<PolyRing>,
    polys: Vec<MultiPoly>,
    degree: u32,
}

impl Generators {
    pub fn new(ring: &Arc<PolyRing>, polys: Vec<MultiPoly>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::InvalidParameterization("no polynomials given".into()));
        }
        let mut degree = None;
        for (i, p) in polys.iter().enumerate() {
            if !same_ring(p.ring(), ring) {
                return Err(Error::FieldMismatch);
            }
            if p.is_zero() {
                continue;
            }
            let d = p
                .homogeneous_degree()?
                .ok_or_else(|| Error::InvalidParameterization(format!("f{} is not homogeneous", i + 1)))?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::InvalidParameterization(format!(
                        "f{} has degree {d}, expected {e}",
                        i + 1
                    )))
                }
                _ => {}
            }
        }
        let degree = degree.ok_or(Error::ZeroPolynomial)?;
        if degree == 0 {
            return Err(Error::InvalidParameterization("polynomials must have degree at least 1".into()));
        }
        Ok(Generators {
            ring: ring.clone(),
            polys,
            degree,
        })
    }

    /// Parses each string over `ring`.
    pub fn parse(ring: &Arc<PolyRing>, polys: &[&str]) -> Result<Self> {
        let polys = polys.iter().map(|s| MultiPoly::parse(ring, s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }
}

/// A rational map `P^{n-2} --> P^{n-1}` given by `n >= 3` nonzero
/// homogeneous polynomials of equal degree in `n - 1` variables, together
/// with the ring of the target coordinates.
#[derive(Clone, Debug)]
pub struct Parameterization {
    gens: Generators,
    t_ring: Arc<PolyRing>,
}

impl Parameterization {
    /// Target coordinates default to `T1..Tn`.
    pub fn new(gens: Generators, t_vars: Option<Vec<String>>) -> Result<Self> {
        let n = gens.len();
        if n < 3 {
            return Err(Error::InvalidParameterization(format!("need at least 3 polynomials, got {n}")));
        }
        if gens.nvars() + 1 != n {
            return Err(Error::InvalidParameterization(format!(
                "{n} polynomials need {} variables, got {}",
                n - 1,
                gens.nvars()
            )));
        }
        if let Some(i) = gens.polys().iter().position(|p| p.is_zero()) {
            return Err(Error::InvalidParameterization(format!("f{} is zero", i + 1)));
        }
        let t_vars = t_vars.unwrap_or_else(|| (1..=n).map(|i| format!("T{i}")).collect());
        if t_vars.len() != n {
            return Err(Error::InvalidVariables(format!("{} target variables for {n} polynomials", t_vars.len())));
        }
        if let Some(v) = t_vars.iter().find(|v| gens.ring().var_index(v).is_some()) {
            return Err(Error::InvalidVariables(format!("`{v}` is used for both source and target")));
        }
        let t_ring = PolyRing::new(gens.ring().field(), t_vars)?;
        Ok(Parameterization { gens, t_ring })
    }

    /// Convenience constructor from variable names and polynomial strings.
    pub fn parse(field: super::Field, x_vars: &[&str], polys: &[&str]) -> Result<Self> {
        let ring = PolyRing::new(field, x_vars.iter().copied())?;
        Self::new(Generators::parse(&ring, polys)?, None)
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn x_ring(&self) -> &Arc<PolyRing> {
        self.gens.ring()
    }

    pub fn t_ring(&self) -> &Arc<PolyRing> {
        &self.t_ring
    }

    pub fn polys(&self) -> &[MultiPoly] {
        self.gens.polys()
    }

    pub fn n(&self) -> usize {
        self.gens.len()
    }

    pub fn degree(&self) -> u32 {
        self.gens.degree()
    }

    pub fn field(&self) -> super::Field {
        self.gens.ring().field()
    }
}
