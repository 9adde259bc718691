//! Dense exact linear algebra over a field and over a polynomial ring.

mod bareiss;
mod matk;
mod matp;
pub(crate) mod modp;
mod subspace;

pub use matk::{Kernel, MatK};
pub use matp::MatP;
pub use subspace::{in_span, intersection, span_basis, span_dim};
