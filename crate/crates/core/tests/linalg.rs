use proptest::prelude::*;

use implicax_core::arith::{Field, MultiPoly, PolyRing, Scalar};
use implicax_core::linalg::{in_span, intersection, span_dim, MatK, MatP};

const GF: Field = Field::Prime(65521);

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(GF)]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = (Field, Vec<Vec<i64>>)> {
    (
        field_strategy(),
        prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows),
    )
}

fn to_matk(field: Field, rows: &[Vec<i64>]) -> MatK {
    MatK::from_rows(field, rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect())
}

/// Laplace expansion along the first row.
fn cofactor_det(field: Field, m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return field.one();
    }
    let mut acc = field.zero();
    for j in 0..n {
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = m[0][j].mul(&cofactor_det(field, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinant_matches_cofactor_expansion(n in 1usize..=4, seed in any::<u64>()) {
        let field = if seed % 2 == 0 { Field::Rational } else { GF };
        let mut s = seed;
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        field.from_i64(((s >> 33) % 13) as i64 - 6)
                    })
                    .collect()
            })
            .collect();
        let m = MatK::from_rows(field, rows.clone());
        prop_assert_eq!(m.det(), cofactor_det(field, &rows));
    }

    #[test]
    fn rank_is_invariant((field, rows) in matrix(4, 5), k in -3i64..=3) {
        let m = to_matk(field, &rows);
        let r = m.rank();
        prop_assert_eq!(m.transpose().rank(), r);
        // Add k times row 0 to row 1 and swap rows 2 and 3.
        let mut rows2 = rows.clone();
        for c in 0..5 {
            rows2[1][c] += k * rows[0][c];
        }
        rows2.swap(2, 3);
        prop_assert_eq!(to_matk(field, &rows2).rank(), r);
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.dim(), 5);
        for v in &kernel.basis {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinant_is_multiplicative((field, a) in matrix(3, 3), b in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 3)) {
        let (a, b) = (to_matk(field, &a), to_matk(field, &b));
        prop_assert_eq!(a.mul(&b).det(), a.det().mul(&b.det()));
    }

    #[test]
    fn specialization_commutes_with_det(
        entries in prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 9),
        pt in (-9i64..=9, -9i64..=9),
    ) {
        let ring = PolyRing::new(Field::Rational, ["T1", "T2"]).unwrap();
        let mut m = MatP::zeros(&ring, 3, 3);
        for (k, &(a, b, c)) in entries.iter().enumerate() {
            let q = |v: i64| Field::Rational.from_i64(v);
            let e = &(&MultiPoly::var(&ring, 0).scale(&q(a)) + &MultiPoly::var(&ring, 1).scale(&q(b)))
                + &MultiPoly::constant(&ring, q(c));
            m.set(k / 3, k % 3, e);
        }
        let point = [Field::Rational.from_i64(pt.0), Field::Rational.from_i64(pt.1)];
        prop_assert_eq!(m.det().eval_at(&point), m.specialize_at(&point).det());
    }

    #[test]
    fn intersection_lies_in_both((field, u) in matrix(3, 5), w in prop::collection::vec(prop::collection::vec(-6i64..=6, 5), 3)) {
        let conv = |rows: &[Vec<i64>]| -> Vec<Vec<Scalar>> {
            rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect()
        };
        let (u, w) = (conv(&u), conv(&w));
        let both = intersection(field, 5, &u, &w);
        for v in &both {
            prop_assert!(in_span(field, &u, v) && in_span(field, &w, v));
        }
        let mut joined = u.clone();
        joined.extend(w.iter().cloned());
        prop_assert_eq!(span_dim(field, &u) + span_dim(field, &w), span_dim(field, &joined) + both.len());
    }
}

#[test]
fn specialize_by_name_requires_every_variable() {
    let ring = PolyRing::new(Field::Rational, ["T1", "T2"]).unwrap();
    let m = MatP::parse(&ring, &[&["T1", "T2"], &["1", "T1"]]).unwrap();
    let mut pt = std::collections::HashMap::new();
    pt.insert("T1".to_string(), Field::Rational.from_i64(2));
    assert!(m.specialize(&pt).is_err());
    pt.insert("T2".to_string(), Field::Rational.from_i64(3));
    assert_eq!(m.specialize(&pt).unwrap().det(), Field::Rational.from_i64(1));
}

#[test]
fn generic_rank_and_certified_minor() {
    let ring = PolyRing::new(Field::Rational, ["T1", "T2"]).unwrap();
    // Rank 2 over k(T) although the first two columns are proportional.
    let m = MatP::parse(&ring, &[&["T1", "2*T1", "T2"], &["T2", "2*T2", "T1"]]).unwrap();
    assert_eq!(m.generic_rank(3), 2);
    let (rows, cols) = m.nonsingular_minor_select(2, 3).unwrap();
    assert!(!m.submatrix(&rows, &cols).det().is_zero());
    assert!(m.nonsingular_minor_select(3, 3).is_err());
}
