//! End-to-end implicitization: analyze the base locus, build the strand,
//! take its determinant, extract the reduced equation, and check it.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{gcd_many, perfect_power_decompose, Field, MultiPoly, Parameterization, Scalar};
use crate::complexes::{checked_ranks, complex_determinant, gcd_of_maximal_minors, z_strand};
use crate::error::{Error, Result};
use crate::geometry::{
    base_locus_profile, combined_syzygetic_test, nu_bound, predicted_degree, BaseLocusDim, SyzygeticReport,
};
use crate::resultants::curve_implicitize_resultant;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20020101;

/// Number of sample points checked by default.
pub const DEFAULT_CHECK_POINTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Determinant of the strand as a complex.
    DetComplex,
    /// Gcd of the maximal minors of the first strand map.
    GcdMinors,
    /// Kravitsky pencil and Sylvester resultant (curves only).
    Resultant,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DetComplex => "det-complex",
            Method::GcdMinors => "gcd-minors",
            Method::Resultant => "resultant",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "det-complex" => Ok(Method::DetComplex),
            "gcd-minors" => Ok(Method::GcdMinors),
            "resultant" => Ok(Method::Resultant),
            other => Err(Error::Shape(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub nu: Option<u32>,
    pub method: Method,
    pub seed: u64,
    pub allow_sub_bound: bool,
    pub check_points: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            nu: None,
            method: Method::DetComplex,
            seed: DEFAULT_SEED,
            allow_sub_bound: false,
            check_points: DEFAULT_CHECK_POINTS,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SyzygeticVerdict {
    Pass,
    Fail,
    NotRun,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasePointReport {
    pub content_gcd: MultiPoly,
    pub base_locus: BaseLocusDim,
    pub base_locus_dim: i32,
    pub e_total: u64,
    pub hilbert_samples: Vec<(u32, usize)>,
    /// `None` when the base locus is positive dimensional.
    pub predicted_degree: Option<i64>,
    pub generically_finite: bool,
    pub nu_bound: u32,
    pub syzygetic_verdict: SyzygeticVerdict,
    pub syzygetic: Option<SyzygeticReport>,
}

/// Base locus diagnostics. The syzygy test (up to degree `2d`) runs when
/// `syzygies` is set; `seed` drives its random combinations.
pub fn analyze_with(p: &Parameterization, syzygies: bool, seed: u64) -> Result<BasePointReport> {
    let g = p.generators();
    let (n, d) = (p.n(), p.degree());
    let content_gcd = gcd_many(p.polys())?;
    let profile = base_locus_profile(g);
    let predicted = match profile.dim {
        BaseLocusDim::Positive => None,
        _ => Some(predicted_degree(n, d, profile.e_total)),
    };
    let syzygetic = if syzygies {
        Some(combined_syzygetic_test(g, 2 * d, seed)?)
    } else {
        None
    };
    Ok(BasePointReport {
        content_gcd,
        base_locus: profile.dim,
        base_locus_dim: profile.dim.as_int(),
        e_total: profile.e_total,
        hilbert_samples: profile.samples,
        predicted_degree: predicted,
        generically_finite: predicted.is_some_and(|v| v > 0),
        nu_bound: nu_bound(n, d),
        syzygetic_verdict: match &syzygetic {
            None => SyzygeticVerdict::NotRun,
            Some(r) if r.passed => SyzygeticVerdict::Pass,
            Some(_) => SyzygeticVerdict::Fail,
        },
        syzygetic,
    })
}

/// Full diagnostics; the syzygy test runs for up to four polynomials.
pub fn analyze(p: &Parameterization) -> Result<BasePointReport> {
    analyze_with(p, p.n() <= 4, DEFAULT_SEED)
}

#[derive(Clone, Debug, Serialize)]
pub struct ImplicitResult {
    /// Normalized determinant `H^e`.
    pub determinant: MultiPoly,
    /// Normalized `H`.
    pub reduced: MultiPoly,
    pub exponent: u32,
    pub degree: u32,
    /// Strand degree; absent for the resultant method.
    pub nu: Option<u32>,
    pub method: Method,
    pub strand_dims: Vec<usize>,
    pub minor_sizes: Vec<usize>,
    pub report: BasePointReport,
    pub verified: bool,
    pub warnings: Vec<String>,
}

pub fn implicitize(p: &Parameterization, opts: &Options) -> Result<ImplicitResult> {
    let report = analyze_with(p, false, opts.seed)?;
    if report.base_locus == BaseLocusDim::Positive && p.n() >= 4 {
        return Err(Error::PositiveDimensionalBaseLocus {
            gcd: report.content_gcd.to_string(),
        });
    }
    if let Some(pred) = report.predicted_degree {
        if pred <= 0 {
            return Err(Error::NotGenericallyFinite { predicted: pred });
        }
    }
    let mut warnings = Vec::new();
    let (determinant, nu, strand_dims, minor_sizes) = match opts.method {
        Method::Resultant => {
            let r = curve_implicitize_resultant(p)?;
            let size = r.pencil.rows();
            (r.kravitsky, None, Vec::new(), vec![size])
        }
        Method::DetComplex | Method::GcdMinors => {
            let nu = opts.nu.unwrap_or(report.nu_bound);
            if nu < report.nu_bound {
                if !opts.allow_sub_bound {
                    return Err(Error::SubBound {
                        nu,
                        bound: report.nu_bound,
                    });
                }
                warnings.push(format!(
                    "nu = {nu} is below the bound {}; the result is checked but not guaranteed",
                    report.nu_bound
                ));
            }
            let strand = z_strand(p.generators(), p.t_ring(), nu)?;
            if opts.method == Method::DetComplex {
                let cd = complex_determinant(&strand, opts.seed)?;
                let sizes = cd.minor_sizes();
                (cd.value, Some(nu), strand.dims, sizes)
            } else {
                checked_ranks(&strand, opts.seed)?;
                let g = gcd_of_maximal_minors(&strand, opts.seed)?;
                let z0 = strand.dims[0];
                (g, Some(nu), strand.dims, vec![z0])
            }
        }
    };
    if determinant.is_constant() {
        return Err(Error::DegreeMismatch {
            expected: report.predicted_degree.unwrap_or(-1),
            found: 0,
        });
    }
    let determinant = determinant.normalized();
    let degree = determinant.degree();
    if let Some(pred) = report.predicted_degree {
        if degree as i64 != pred {
            return Err(Error::DegreeMismatch {
                expected: pred,
                found: degree,
            });
        }
    }
    let (reduced, exponent) = perfect_power_decompose(&determinant)?;
    let verified = verify(&reduced, p, opts.check_points, opts.seed)?;
    if !verified {
        return Err(Error::OracleFailure);
    }
    Ok(ImplicitResult {
        determinant,
        reduced,
        exponent,
        degree,
        nu,
        method: opts.method,
        strand_dims,
        minor_sizes,
        report,
        verified,
        warnings,
    })
}

fn sample_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-50..=50)),
        Field::Prime(_) => field.random(rng, 0),
    }
}

/// Checks `h(f(x)) = 0` at `trials` random points `x` where `f(x) != 0`.
/// `h` may live in any ring whose variables are the target variables of
/// `p` (or a prefix of them).
pub fn verify(h: &MultiPoly, p: &Parameterization, trials: usize, seed: u64) -> Result<bool> {
    let field = p.field();
    if h.field() != field {
        return Err(Error::FieldMismatch);
    }
    if h.ring().nvars() > p.n() {
        return Err(Error::Shape("polynomial has more variables than the target space".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0a11_ce5e);
    let nv = p.x_ring().nvars();
    let mut found = 0;
    let mut attempts = 0;
    while found < trials {
        attempts += 1;
        if attempts > 50 * trials + 100 {
            return Err(Error::NoSamplePoints { needed: trials });
        }
        let x: Vec<Scalar> = (0..nv).map(|_| sample_scalar(field, &mut rng)).collect();
        let values: Vec<Scalar> = p.polys().iter().map(|f| f.eval_at(&x)).collect();
        if values.iter().all(Scalar::is_zero) {
            continue;
        }
        found += 1;
        if !h.eval_at(&values[..h.ring().nvars()]).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
