//! Exact coefficient fields and sparse polynomial arithmetic.

mod gcd;
mod monomial;
mod param;
mod parse;
mod poly;
mod rational;
mod scalar;

pub use gcd::{gcd, gcd_many, perfect_power_decompose, squarefree_part};
pub use monomial::{monomials_of_degree, Monomial};
pub use param::{Generators, Parameterization};
pub use poly::{MultiPoly, PolyRing};
pub use rational::Rational;
pub use scalar::{is_prime_u64, Field, Scalar};

pub(crate) use poly::same_ring;
pub(crate) use scalar::{add_mod, inv_mod, mul_mod, sub_mod};
