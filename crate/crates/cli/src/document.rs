//! Result documents and their text rendering. The JSON form is the serde
//! serialization; `schema/result.schema.json` describes it.

use std::fmt::{self, Write as _};

use serde::Serialize;

use implicax_core::arith::Field;
use implicax_core::geometry::BaseLocusDim;
use implicax_core::{BasePointReport, ImplicitResult, Method, SyzygeticVerdict};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct ImplicitDoc {
    pub field: Field,
    /// `H^e`, normalized.
    pub implicit: String,
    pub reduced: String,
    pub exponent: u32,
    pub degree: u32,
    pub nu: Option<u32>,
    pub method: Method,
    pub strand_dims: Vec<usize>,
    pub minor_sizes: Vec<usize>,
    pub verified: bool,
    pub check_points: usize,
    pub seed: u64,
    pub warnings: Vec<String>,
    pub diagnostics: BasePointReport,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeDoc {
    pub field: Field,
    pub diagnostics: BasePointReport,
    pub timing: Timing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ResultantKind {
    Sylvester,
    Bezout,
    Kravitsky,
}

impl fmt::Display for ResultantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResultantKind::Sylvester => "sylvester",
            ResultantKind::Bezout => "bezout",
            ResultantKind::Kravitsky => "kravitsky",
        })
    }
}

#[derive(Debug, Serialize)]
pub struct ResultantDoc {
    pub field: Field,
    pub kind: ResultantKind,
    pub size: usize,
    pub determinant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Document {
    Implicitize(ImplicitDoc),
    Analyze(AnalyzeDoc),
    Resultant(ResultantDoc),
}

impl ImplicitDoc {
    pub fn new(field: Field, r: ImplicitResult, check_points: usize, seed: u64, timing: Timing) -> Self {
        ImplicitDoc {
            field,
            implicit: r.determinant.to_string(),
            reduced: r.reduced.to_string(),
            exponent: r.exponent,
            degree: r.degree,
            nu: r.nu,
            method: r.method,
            strand_dims: r.strand_dims,
            minor_sizes: r.minor_sizes,
            verified: r.verified,
            check_points,
            seed,
            warnings: r.warnings,
            diagnostics: r.report,
            timing,
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn render_report(out: &mut String, r: &BasePointReport) {
    let locus = match r.base_locus {
        BaseLocusDim::Empty => "empty",
        BaseLocusDim::Points => "points",
        BaseLocusDim::Positive => "positive dimensional",
    };
    let _ = writeln!(out, "base locus:       {locus} (e = {})", r.e_total);
    match r.predicted_degree {
        Some(d) => {
            let finite = if r.generically_finite { "generically finite" } else { "not generically finite" };
            let _ = writeln!(out, "predicted degree: {d} ({finite})");
        }
        None => {
            let _ = writeln!(out, "predicted degree: unknown (not generically finite)");
        }
    }
    let _ = writeln!(out, "nu bound:         {}", r.nu_bound);
    let _ = writeln!(out, "content gcd:      {}", r.content_gcd);
    let samples: Vec<String> = r.hilbert_samples.iter().map(|(nu, v)| format!("{nu}:{v}")).collect();
    let _ = writeln!(out, "hilbert samples:  {}", samples.join(" "));
    match (&r.syzygetic_verdict, &r.syzygetic) {
        (SyzygeticVerdict::NotRun, _) | (_, None) => {
            let _ = writeln!(out, "syzygetic test:   not run");
        }
        (verdict, Some(s)) => {
            let word = if *verdict == SyzygeticVerdict::Pass { "pass" } else { "fail" };
            let on = match &s.combinations {
                Some(c) => format!(", on {} random combinations", c.len()),
                None => String::new(),
            };
            let _ = writeln!(out, "syzygetic test:   {word} (nu {}..{}{on})", s.nu_min, s.nu_max);
            let plain = if s.plain_passed { "pass" } else { "fail" };
            let _ = writeln!(out, "  ideal version:  {plain}");
            for d in &s.degrees {
                let _ = writeln!(
                    out,
                    "  nu {:>2}: boundaries {}, cycles in I {}, cycles in saturation {}",
                    d.nu, d.boundaries, d.cycles_in_ideal, d.cycles_in_saturation
                );
            }
            if let Some((nu, w)) = &s.witness {
                let parts: Vec<String> = w.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(out, "  witness at nu {nu}: ({})", parts.join(", "));
            }
            if let Some(c) = &s.combinations {
                for (i, g) in c.iter().enumerate() {
                    let _ = writeln!(out, "  g{} = {g}", i + 1);
                }
            }
        }
    }
}

fn render_matrix(out: &mut String, m: &[Vec<String>]) {
    for row in m {
        let _ = writeln!(out, "  [{}]", row.join(", "));
    }
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Document::Implicitize(d) => {
                let _ = writeln!(out, "implicit equation: {}", d.reduced);
                let _ = writeln!(out, "exponent:          {}", d.exponent);
                let _ = writeln!(out, "determinant:       {}", d.implicit);
                let _ = writeln!(out, "degree:            {}", d.degree);
                let nu = d.nu.map_or_else(|| "-".to_string(), |v| v.to_string());
                let _ = writeln!(out, "nu:                {nu}");
                let _ = writeln!(out, "method:            {}", d.method);
                let _ = writeln!(out, "field:             {}", d.field);
                if !d.strand_dims.is_empty() {
                    let _ = writeln!(out, "strand dims:       {}", join(&d.strand_dims));
                }
                let _ = writeln!(out, "minor sizes:       {}", join(&d.minor_sizes));
                let verdict = if d.verified { "passed" } else { "failed" };
                let _ = writeln!(out, "oracle:            {verdict} at {} points (seed {})", d.check_points, d.seed);
                for w in &d.warnings {
                    let _ = writeln!(out, "warning:           {w}");
                }
                render_report(&mut out, &d.diagnostics);
                let _ = writeln!(out, "time:              {:.3} ms", d.timing.elapsed_ms);
            }
            Document::Analyze(d) => {
                let _ = writeln!(out, "field:            {}", d.field);
                render_report(&mut out, &d.diagnostics);
                let _ = writeln!(out, "time:             {:.3} ms", d.timing.elapsed_ms);
            }
            Document::Resultant(d) => {
                let _ = writeln!(out, "kind:        {}", d.kind);
                let _ = writeln!(out, "field:       {}", d.field);
                let _ = writeln!(out, "size:        {}", d.size);
                let _ = writeln!(out, "determinant: {}", d.determinant);
                if let Some(m) = &d.matrix {
                    let _ = writeln!(out, "matrix:");
                    render_matrix(&mut out, m);
                }
                let _ = writeln!(out, "time:        {:.3} ms", d.timing.elapsed_ms);
            }
        }
        out
    }
}
