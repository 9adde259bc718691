//! Exact implicitization of rational curves and surfaces.
//!
//! Given `n` homogeneous polynomials of equal degree in `n - 1` variables,
//! the library computes the implicit equation of the image of the induced
//! rational map as the determinant of a graded strand of the approximation
//! complex, with resultant matrices as an independent check for curves.
//!
//! ```
//! use implicax_core::arith::{Field, Generators, MultiPoly, Parameterization, PolyRing};
//! use implicax_core::{implicitize, Options};
//!
//! let ring = PolyRing::new(Field::Rational, ["X1", "X2"]).unwrap();
//! let polys = ["X1^2", "X1*X2", "X2^2"]
//!     .iter()
//!     .map(|s| MultiPoly::parse(&ring, s))
//!     .collect::<Result<Vec<_>, _>>()
//!     .unwrap();
//! let p = Parameterization::new(Generators::new(&ring, polys).unwrap(), None).unwrap();
//! let r = implicitize(&p, &Options::default()).unwrap();
//! assert_eq!(r.reduced.to_string(), "T2^2 - T1*T3");
//! assert_eq!(r.exponent, 1);
//! ```

pub mod arith;
pub mod complexes;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod pipeline;
pub mod resultants;

pub use error::{Error, ErrorKind, Result};
pub use pipeline::{
    analyze, implicitize, verify, BasePointReport, ImplicitResult, Method, Options, SyzygeticVerdict,
};
