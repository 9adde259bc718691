//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use implicax_core::arith::{gcd_many, Field, Generators, Monomial, MultiPoly, Parameterization, PolyRing, Scalar};
use implicax_core::complexes::{complex_determinant, gcd_of_maximal_minors, koszul_differential_matrix, z_strand};
use implicax_core::geometry::syzygetic_test;
use implicax_core::linalg::MatK;
use implicax_core::resultants::{
    bezout_matrix, curve_implicitize_resultant, dehomogenize_last, kravitsky_pencil, sylvester_resultant, BinaryForm,
};
use implicax_core::{analyze, implicitize, verify, Error, ImplicitResult, Method, Options};

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn t_poly(n: usize, text: &str) -> MultiPoly {
    let ring = PolyRing::new(Field::Rational, (1..=n).map(|i| format!("T{i}"))).unwrap();
    MultiPoly::parse(&ring, text).unwrap()
}

fn run(p: &Parameterization, nu: Option<u32>, method: Method) -> implicax_core::Result<ImplicitResult> {
    let opts = Options {
        nu,
        method,
        allow_sub_bound: true,
        ..Options::default()
    };
    implicitize(p, &opts)
}

fn oracle(h: &MultiPoly, p: &Parameterization) -> Outcome {
    ensure!(compose(h, p).is_zero(), "{h} does not vanish on the parameterization");
    ensure!(verify(h, p, 20, 7).unwrap(), "sampling oracle rejected {h}");
    Ok(String::new())
}

fn nonzero_sizes(r: &ImplicitResult) -> Vec<usize> {
    r.minor_sizes.iter().copied().filter(|&s| s > 0).collect()
}

fn ac1() -> Outcome {
    let p = param(&X2, &CONIC);
    let r = run(&p, Some(1), Method::DetComplex).map_err(|e| e.to_string())?;
    ensure!(r.reduced.eq_up_to_unit(&t_poly(3, "T2^2 - T1*T3")), "got {}", r.reduced);
    ensure!(r.exponent == 1, "exponent {}", r.exponent);
    oracle(&r.reduced, &p)?;
    let low = match run(&p, Some(0), Method::DetComplex) {
        Err(e) => format!("rejected ({e})"),
        Ok(r) if r.degree != 2 => format!("wrong degree {}", r.degree),
        Ok(r) => return Err(format!("nu = 0 unexpectedly gave {}", r.reduced)),
    };
    Ok(format!("H = {}; nu = 0 {low}", r.reduced))
}

fn ac2() -> Outcome {
    let p = param(&X2, &CUSP_BASE_POINT);
    let r = run(&p, Some(2), Method::DetComplex).map_err(|e| e.to_string())?;
    ensure!(nonzero_sizes(&r) == [3, 1], "minor sizes {:?}", r.minor_sizes);
    ensure!(r.determinant.eq_up_to_unit(&t_poly(3, "T1*T3 - T2^2")), "got {}", r.determinant);
    ensure!(r.exponent == 1, "exponent {}", r.exponent);
    oracle(&r.reduced, &p)?;
    Ok(format!("3x3 / 1x1 quotient = {}", r.determinant))
}

fn ac3() -> Outcome {
    let p = param(&X3, &QUARTIC_PLANE);
    let r = run(&p, Some(2), Method::DetComplex).map_err(|e| e.to_string())?;
    ensure!(r.strand_dims == [6, 9, 4, 1], "strand dims {:?}", r.strand_dims);
    let mut sizes = nonzero_sizes(&r);
    sizes.sort_unstable();
    ensure!(sizes == [1, 3, 6], "minor sizes {:?}", r.minor_sizes);
    let plane = t_poly(4, "T1 + T2 + T3 - T4");
    ensure!(r.determinant.eq_up_to_unit(&plane.pow(4)), "determinant {}", r.determinant);
    ensure!(r.reduced.eq_up_to_unit(&plane) && r.exponent == 4, "got ({})^{}", r.reduced, r.exponent);
    oracle(&r.reduced, &p)?;
    Ok(format!("dims {:?}, minors {:?}, H = {}, e = 4", r.strand_dims, r.minor_sizes, r.reduced))
}

fn ac4() -> Outcome {
    let p = param(&X3, &NONIC);
    let r = run(&p, Some(4), Method::DetComplex).map_err(|e| e.to_string())?;
    ensure!(r.degree == 9 && r.exponent == 1, "degree {} exponent {}", r.degree, r.exponent);
    let mut sizes = nonzero_sizes(&r);
    sizes.sort_unstable();
    ensure!(sizes == [3, 9, 15], "minor sizes {:?}", r.minor_sizes);
    oracle(&r.reduced, &p)?;
    let mut below = Vec::new();
    for nu in 0..4 {
        match run(&p, Some(nu), Method::DetComplex) {
            Err(_) => below.push(format!("{nu}: rejected")),
            Ok(r) if r.degree != 9 => below.push(format!("{nu}: degree {}", r.degree)),
            Ok(_) => return Err(format!("nu = {nu} unexpectedly succeeded")),
        }
    }
    Ok(format!("degree 9 squarefree, minors {:?}; below bound {}", r.minor_sizes, below.join(", ")))
}

fn ac5() -> Outcome {
    let p = param(&X3, &LCI_CUBIC);
    let expected = t_poly(4, "T1*T2*T3 + T1*T2*T4 - T3*T4^2");
    let r = run(&p, Some(4), Method::DetComplex).map_err(|e| e.to_string())?;
    ensure!(r.reduced.eq_up_to_unit(&expected) && r.exponent == 1, "got ({})^{}", r.reduced, r.exponent);
    oracle(&r.reduced, &p)?;
    let a = analyze(&p).map_err(|e| e.to_string())?;
    ensure!(a.e_total == 6, "e_total {}", a.e_total);
    ensure!(a.predicted_degree == Some(3), "predicted {:?}", a.predicted_degree);
    ensure!(a.nu_bound == 4, "nu bound {}", a.nu_bound);
    for (nu, shape) in [(3, vec![10, 8, 1]), (2, vec![6, 3])] {
        let r = run(&p, Some(nu), Method::DetComplex).map_err(|e| format!("nu = {nu}: {e}"))?;
        ensure!(r.reduced.eq_up_to_unit(&expected), "nu = {nu} gave {}", r.reduced);
        ensure!(nonzero_sizes(&r) == shape, "nu = {nu} minors {:?}", r.minor_sizes);
    }
    Ok(format!("H = {}, e_total 6, predicted 3; nu = 3 and 2 agree", r.reduced))
}

fn ac6() -> Outcome {
    // Multiplicities of the base loci, counted by hand.
    let e_known = [0, 1, 0, 0, 6];
    let mut lines = Vec::new();
    for ((name, p), e) in examples().into_iter().zip(e_known) {
        let r = run(&p, None, Method::DetComplex).map_err(|err| format!("{name}: {err}"))?;
        let formula = (p.degree() as i64).pow(p.n() as u32 - 2) - e;
        ensure!(r.report.e_total as i64 == e, "{name}: e_total {}", r.report.e_total);
        ensure!(r.degree as i64 == formula, "{name}: degree {} vs {formula}", r.degree);
        lines.push(format!("{}", r.degree));
    }
    let flat = param(&X2, &["X1^2", "X1^2", "X1^2"]);
    match implicitize(&flat, &Options::default()) {
        Err(Error::NotGenericallyFinite { predicted: 0 }) => {}
        other => return Err(format!("constant map: {:?}", other.map(|r| r.reduced.to_string()))),
    }
    Ok(format!("degrees {} match the formula; constant map not generically finite", lines.join(", ")))
}

fn scalar_ring(field: Field) -> Arc<PolyRing> {
    PolyRing::new(field, Vec::<String>::new()).unwrap()
}

fn random_form(field: Field, d: usize, rng: &mut ChaCha8Rng) -> BinaryForm {
    let ring = scalar_ring(field);
    let mut coeffs: Vec<MultiPoly> = (0..=d).map(|_| MultiPoly::constant(&ring, field.random(rng, 9))).collect();
    while coeffs[0].is_zero() {
        coeffs[0] = MultiPoly::constant(&ring, field.random(rng, 9));
    }
    BinaryForm::from_coeffs(coeffs).unwrap()
}

/// `lead * Π (X - r Y)` and the list of roots.
fn split_form(field: Field, d: usize, rng: &mut ChaCha8Rng) -> (BinaryForm, Scalar, Vec<Scalar>) {
    let xy = PolyRing::new(field, ["X", "Y"]).unwrap();
    let mut lead = field.random(rng, 9);
    while lead.is_zero() {
        lead = field.random(rng, 9);
    }
    let roots: Vec<Scalar> = (0..d).map(|_| field.random(rng, 9)).collect();
    let mut p = MultiPoly::constant(&xy, lead.clone());
    for r in &roots {
        let lin = &MultiPoly::var(&xy, 0) - &MultiPoly::var(&xy, 1).scale(r);
        p = &p * &lin;
    }
    (BinaryForm::from_poly(&p, d as u32, &scalar_ring(field)).unwrap(), lead, roots)
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(65521);
    for field in [Field::Rational, Field::Prime(65521)] {
        for i in 0..50 {
            let d = 1 + i % 6;
            let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
            let unit = field.from_i64(sign);
            let (p, q) = (random_form(field, d, &mut rng), random_form(field, d, &mut rng));
            let bez = bezout_matrix(&p, &q).unwrap().det();
            let res = sylvester_resultant(&p, &q).unwrap();
            ensure!(bez == res.scale(&unit), "{field} d = {d}: det Bez {bez} vs Res {res}");
            // Resultant from the roots: a^d b^d Π (r_i - s_j).
            let (p, a, rs) = split_form(field, d, &mut rng);
            let (q, b, ss) = split_form(field, d, &mut rng);
            let mut want = a.pow(d as u32).mul(&b.pow(d as u32));
            for r in &rs {
                for s in &ss {
                    want = want.mul(&r.sub(s));
                }
            }
            let res = sylvester_resultant(&p, &q).unwrap();
            ensure!(res.constant_value() == Some(want.clone()) || (res.is_zero() && want.is_zero()), "root formula");
            let bez = bezout_matrix(&p, &q).unwrap().det();
            ensure!(bez == res.scale(&unit), "{field} split d = {d}: sign law");
        }
    }
    let gf = Field::Prime(65521);
    let xr = PolyRing::new(gf, X2).unwrap();
    let mut done = 0;
    while done < 20 {
        let polys: Vec<MultiPoly> = (0..3)
            .map(|_| {
                let terms = (0..=3u16).map(|j| (Monomial::from_exponents(&[3 - j, j]), gf.random(&mut rng, 0)));
                MultiPoly::from_terms(&xr, terms.collect::<Vec<_>>())
            })
            .collect();
        if polys.iter().any(|f| f.is_zero() || f.homogeneous_degree().unwrap() != Some(3)) {
            continue;
        }
        if !gcd_many(&polys).unwrap().is_constant() {
            continue;
        }
        let p = Parameterization::new(Generators::new(&xr, polys).unwrap(), None).unwrap();
        let r = curve_implicitize_resultant(&p).map_err(|e| e.to_string())?;
        let at_one = dehomogenize_last(&r.kravitsky);
        ensure!(at_one.eq_up_to_unit(&r.dehomogenized), "Kravitsky {at_one} vs Sylvester {}", r.dehomogenized);
        ensure!(compose(&r.kravitsky, &p).is_zero(), "Kravitsky determinant does not vanish on the curve");
        done += 1;
    }
    let uvw = PolyRing::new(Field::Rational, ["u", "v", "w"]).unwrap();
    for d in 1..=5u32 {
        let xd = BinaryForm::parse(Field::Rational, ["X", "Y"], &format!("X^{d}"), d).unwrap();
        let yd = BinaryForm::parse(Field::Rational, ["X", "Y"], &format!("Y^{d}"), d).unwrap();
        let zero = BinaryForm::from_coeffs(vec![MultiPoly::zero(&scalar_ring(Field::Rational)); d as usize + 1]).unwrap();
        let det = kravitsky_pencil([&xd, &yd, &zero], &uvw).unwrap().det();
        let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let want = MultiPoly::parse(&uvw, &format!("{sign}*w^{d}")).unwrap();
        ensure!(det == want, "d = {d}: {det}");
    }
    Ok("100 sign-law pairs per field, 20 cubic curves over GF(65521), d = 1..5 specialization".into())
}

/// Coordinates of vectors of forms, one column per (component, monomial).
fn coordinate_rank(field: Field, vectors: &[Vec<MultiPoly>]) -> usize {
    let mut index = BTreeMap::new();
    for v in vectors {
        for (j, f) in v.iter().enumerate() {
            for (m, _) in f.terms() {
                let k = index.len();
                index.entry((j, m.clone())).or_insert(k);
            }
        }
    }
    let mut mat = MatK::zeros(field, vectors.len(), index.len().max(1));
    for (r, v) in vectors.iter().enumerate() {
        for (j, f) in v.iter().enumerate() {
            for (m, c) in f.terms() {
                mat.set(r, index[&(j, m.clone())], c.clone());
            }
        }
    }
    mat.rank()
}

fn ac8() -> Outcome {
    let ring = PolyRing::new(Field::Rational, X3).unwrap();
    let ci = Generators::parse(&ring, &["X1^3", "X2^3", "X3^3"]).unwrap();
    let r = syzygetic_test(&ci, 6);
    ensure!(r.passed && r.plain_passed, "complete intersection failed: {:?}", r.degrees);

    let fat = Generators::parse(&ring, &["X1^2", "X1*X2", "X2^2"]).unwrap();
    let r = syzygetic_test(&fat, 4);
    ensure!(!r.passed && !r.plain_passed, "fat point passed");
    let (nu, w) = r.witness.ok_or("no witness")?;
    let want: Vec<MultiPoly> = ["X2^2", "-X1*X2", "0"].iter().map(|s| MultiPoly::parse(&ring, s).unwrap()).collect();
    ensure!(nu == 2 && w == want, "witness in degree {nu}: {:?}", w.iter().map(|f| f.to_string()).collect::<Vec<_>>());
    let f = fat.polys();
    let pairing = (0..3).fold(MultiPoly::zero(&ring), |acc, i| &acc + &(&w[i] * &f[i]));
    ensure!(pairing.is_zero(), "witness is not a syzygy");
    let zero = MultiPoly::zero(&ring);
    let koszul = vec![
        vec![f[1].clone(), -&f[0], zero.clone()],
        vec![f[2].clone(), zero.clone(), -&f[0]],
        vec![zero.clone(), f[2].clone(), -&f[1]],
    ];
    let mut with_w = koszul.clone();
    with_w.push(w);
    ensure!(coordinate_rank(Field::Rational, &with_w) == coordinate_rank(Field::Rational, &koszul) + 1, "witness is a Koszul syzygy");

    let p = param(&X3, &LCI_CUBIC);
    let a = analyze(&p).map_err(|e| e.to_string())?;
    let s = a.syzygetic.ok_or("syzygy test did not run")?;
    ensure!(s.passed && s.nu_max == 6, "lci surface: {:?}", s.degrees);
    let raw = syzygetic_test(p.generators(), 6);
    let raw_note = match raw.degrees.iter().find(|d| d.cycles_in_saturation != d.boundaries) {
        Some(d) => format!("four-generator ideal itself differs at nu = {} ({} vs {})", d.nu, d.cycles_in_saturation, d.boundaries),
        None => "four-generator ideal also passes".into(),
    };
    Ok(format!("ci passes, fat point witness (X2^2, -X1*X2, 0), lci surface passes to nu = 6 on three combinations; {raw_note}"))
}

fn ac9() -> Outcome {
    let strands = [(0, 1), (1, 2), (2, 2), (3, 4), (4, 2), (4, 3), (4, 4), (4, 5)];
    let ex = examples();
    for &(k, nu) in &strands {
        let (name, p) = &ex[k];
        let g = p.generators();
        let s = z_strand(g, p.t_ring(), nu).map_err(|e| e.to_string())?;
        for i in 0..s.maps.len().saturating_sub(1) {
            ensure!(s.maps[i].mul(&s.maps[i + 1]).is_zero(), "{name} nu = {nu}: d_T^2 != 0 at {i}");
        }
        for i in 2..=p.n() {
            let d = p.degree();
            let upper = koszul_differential_matrix(g, i, nu).unwrap();
            let lower = koszul_differential_matrix(g, i - 1, nu + d).unwrap();
            ensure!(lower.mul(&upper).rank() == 0, "{name} nu = {nu}: d_f^2 != 0 at {i}");
        }
    }
    for (name, p) in &ex {
        let nu = analyze_bound(p);
        let s = z_strand(p.generators(), p.t_ring(), nu).unwrap();
        let a = complex_determinant(&s, 1).map_err(|e| format!("{name}: {e}"))?.value;
        let b = complex_determinant(&s, 99).map_err(|e| format!("{name}: {e}"))?.value;
        ensure!(a.eq_up_to_unit(&b), "{name}: seeds disagree");
        let r = run(p, Some(nu), Method::DetComplex).map_err(|e| format!("{name}: {e}"))?;
        oracle(&r.reduced, p)?;
        ensure!(r.determinant.eq_up_to_unit(&a.normalized()), "{name}: pipeline vs strand");
        let g = gcd_of_maximal_minors(&s, 5).map_err(|e| format!("{name}: {e}"))?;
        ensure!(g.eq_up_to_unit(&a), "{name}: gcd of minors {g} vs {a}");
    }
    for k in [0, 2, 4] {
        let (name, p) = &ex[k];
        let nu = analyze_bound(p);
        let a = run(p, Some(nu), Method::DetComplex).map_err(|e| e.to_string())?;
        let b = run(p, Some(nu + 1), Method::DetComplex).map_err(|e| e.to_string())?;
        ensure!(a.reduced.eq_up_to_unit(&b.reduced), "{name}: nu and nu + 1 disagree");
        oracle(&b.reduced, p)?;
    }
    Ok("d^2 = 0 on 8 strands; seeds, nu + 1, gcd of minors and the oracle agree on all five".into())
}

fn analyze_bound(p: &Parameterization) -> u32 {
    (p.n() as u32 - 2) * (p.degree() - 1)
}

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("curve without base points", ac1, 1),
        ("curve with a base point", ac2, 1),
        ("surface without base points, plane", ac3, 5),
        ("surface without base points, nonic", ac4, 30),
        ("surface with lci base points", ac5, 30),
        ("degree formula", ac6, 30),
        ("resultant cross-checks", ac7, 30),
        ("syzygy tests", ac8, 10),
        ("property suites", ac9, 120),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > Duration::from_secs(limit) => Err(format!("{msg} (over the {limit} s limit)")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("AC{} PASS {name}: {msg} [{took:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("AC{} FAIL {name}: {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
