#![allow(dead_code)]

use implicax_core::arith::{Field, MultiPoly, Parameterization};

pub const X2: [&str; 2] = ["X1", "X2"];
pub const X3: [&str; 3] = ["X1", "X2", "X3"];

pub const CONIC: [&str; 3] = ["X1^2", "X1*X2", "X2^2"];
pub const CUSP_BASE_POINT: [&str; 3] = ["X1^3", "X1^2*X2", "X1*X2^2"];
pub const QUARTIC_PLANE: [&str; 4] = ["X1^2", "X2^2", "X3^2", "X1^2 + X2^2 + X3^2"];
pub const NONIC: [&str; 4] = ["X1^2*X2", "X2^2*X3", "X1*X3^2", "X1^3 + X2^3 + X3^3"];
pub const LCI_CUBIC: [&str; 4] = [
    "X1*X3^2",
    "X1*X2^2 + X2^2*X3",
    "X1^2*X2 + X1*X2*X3",
    "X1*X2*X3 + X2*X3^2",
];

pub fn param(vars: &[&str], polys: &[&str]) -> Parameterization {
    Parameterization::parse(Field::Rational, vars, polys).unwrap()
}

/// The five worked examples with their names.
pub fn examples() -> Vec<(&'static str, Parameterization)> {
    vec![
        ("conic", param(&X2, &CONIC)),
        ("cuspidal base point", param(&X2, &CUSP_BASE_POINT)),
        ("plane to the fourth", param(&X3, &QUARTIC_PLANE)),
        ("nonic surface", param(&X3, &NONIC)),
        ("lci cubic surface", param(&X3, &LCI_CUBIC)),
    ]
}

/// `h(f_1, ..., f_n)`, expanded symbolically.
pub fn compose(h: &MultiPoly, p: &Parameterization) -> MultiPoly {
    let images = p.polys()[..h.ring().nvars()].to_vec();
    h.substitute(p.x_ring(), &images).unwrap()
}
