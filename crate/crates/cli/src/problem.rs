//! Problem files: a line-oriented text form and an equivalent JSON form.
//!
//! ```text
//! # twisted cubic
//! field: QQ
//! x_vars: X1, X2
//! t_vars: T1, T2, T3
//! f1 = X1^3
//! f2 = X1^2*X2
//! f3 = X1*X2^2
//! ```

use std::sync::Arc;

use serde::Deserialize;

use implicax_core::arith::{Field, Generators, MultiPoly, Parameterization, PolyRing};

use crate::error::CliError;

/// One polynomial and where it came from, for error messages.
#[derive(Clone, Debug)]
pub struct Source {
    pub location: String,
    pub text: String,
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub field: Field,
    pub x_vars: Vec<String>,
    pub t_vars: Option<Vec<String>>,
    pub polys: Vec<Source>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonProblem {
    field: String,
    x_vars: Vec<String>,
    #[serde(default)]
    t_vars: Option<Vec<String>>,
    polys: Vec<String>,
}

fn problem_error(location: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Problem {
        location: location.into(),
        message: message.into(),
    }
}

fn split_names(value: &str) -> Vec<String> {
    value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

impl Problem {
    /// Reads either form; JSON is recognized by a leading `{`.
    pub fn parse(src: &str) -> Result<Problem, CliError> {
        if src.trim_start().starts_with('{') {
            Self::parse_json(src)
        } else {
            Self::parse_text(src)
        }
    }

    pub fn parse_json(src: &str) -> Result<Problem, CliError> {
        let raw: JsonProblem = serde_json::from_str(src)
            .map_err(|e| problem_error(format!("line {}", e.line()), e.to_string()))?;
        let field = raw.field.parse::<Field>().map_err(|e| problem_error("field", e.to_string()))?;
        let polys = raw
            .polys
            .into_iter()
            .enumerate()
            .map(|(i, text)| Source {
                location: format!("polys[{i}]"),
                text,
            })
            .collect();
        Ok(Problem {
            field,
            x_vars: raw.x_vars,
            t_vars: raw.t_vars,
            polys,
        })
    }

    pub fn parse_text(src: &str) -> Result<Problem, CliError> {
        let mut field = None;
        let mut x_vars = None;
        let mut t_vars = None;
        let mut polys: Vec<(usize, Source)> = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let location = format!("line {}", i + 1);
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some((lhs, rhs)) = line.split_once('=') {
                let name = lhs.trim();
                let index = name
                    .strip_prefix('f')
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| problem_error(&location, format!("expected `f<k> = ...`, found `{line}`")))?;
                if polys.iter().any(|(k, _)| *k == index) {
                    return Err(problem_error(&location, format!("f{index} is defined twice")));
                }
                polys.push((
                    index,
                    Source {
                        location: format!("{location} (`{line}`)"),
                        text: rhs.trim().to_string(),
                    },
                ));
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| problem_error(&location, format!("expected `key: value` or `f<k> = ...`, found `{line}`")))?;
            match key.trim() {
                "field" => {
                    let f = value.parse::<Field>().map_err(|e| problem_error(&location, e.to_string()))?;
                    field = Some(f);
                }
                "x_vars" => x_vars = Some(split_names(value)),
                "t_vars" => t_vars = Some(split_names(value)),
                other => return Err(problem_error(&location, format!("unknown key `{other}`"))),
            }
        }
        polys.sort_by_key(|(k, _)| *k);
        for (expected, (k, _)) in polys.iter().enumerate() {
            if *k != expected + 1 {
                return Err(problem_error("polynomials", format!("f{} is missing", expected + 1)));
            }
        }
        Ok(Problem {
            field: field.ok_or_else(|| problem_error("header", "missing `field:`"))?,
            x_vars: x_vars.ok_or_else(|| problem_error("header", "missing `x_vars:`"))?,
            t_vars,
            polys: polys.into_iter().map(|(_, s)| s).collect(),
        })
    }

    pub fn x_ring(&self) -> Result<Arc<PolyRing>, CliError> {
        Ok(PolyRing::new(self.field, self.x_vars.iter().cloned())?)
    }

    /// Parses every polynomial and checks that they are forms of one degree.
    pub fn polynomials(&self) -> Result<Vec<MultiPoly>, CliError> {
        let ring = self.x_ring()?;
        let mut degree = None;
        let mut out = Vec::with_capacity(self.polys.len());
        for src in &self.polys {
            let p = MultiPoly::parse(&ring, &src.text).map_err(|e| problem_error(&src.location, e.to_string()))?;
            if !p.is_zero() {
                let d = p
                    .homogeneous_degree()?
                    .ok_or_else(|| problem_error(&src.location, format!("`{}` is not homogeneous", src.text)))?;
                match degree {
                    None => degree = Some(d),
                    Some(e) if e != d => {
                        return Err(problem_error(&src.location, format!("degree {d} differs from the first polynomial's {e}")))
                    }
                    _ => {}
                }
            }
            out.push(p);
        }
        Ok(out)
    }

    pub fn parameterization(&self) -> Result<Parameterization, CliError> {
        let ring = self.x_ring()?;
        let gens = Generators::new(&ring, self.polynomials()?)?;
        Ok(Parameterization::new(gens, self.t_vars.clone())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CONIC: &str = "# conic\nfield: QQ\nx_vars: X1, X2\nf1 = X1^2\nf2 = X1*X2\nf3 = X2^2\n";

    #[test]
    fn text_and_json_agree() {
        let a = Problem::parse(CONIC).unwrap();
        let b = Problem::parse(r#"{"field": "QQ", "x_vars": ["X1", "X2"], "polys": ["X1^2", "X1*X2", "X2^2"]}"#).unwrap();
        assert_eq!(a.x_vars, b.x_vars);
        assert_eq!(a.polynomials().unwrap(), b.polynomials().unwrap());
        assert_eq!(a.parameterization().unwrap().n(), 3);
    }

    #[test]
    fn inhomogeneous_input_names_its_line() {
        let src = "field: QQ\nx_vars: X1 X2\nf1 = X1^2\nf2 = X1 + X2^2\nf3 = X2^2\n";
        let err = Problem::parse(src).unwrap().polynomials().unwrap_err().to_string();
        assert!(err.contains("line 4") && err.contains("X1 + X2^2"), "{err}");
    }

    #[test]
    fn structural_errors() {
        assert!(Problem::parse("x_vars: X1\nf1 = X1\n").is_err());
        assert!(Problem::parse("field: QQ\nx_vars: X1\nf2 = X1\n").is_err());
        assert!(Problem::parse("field: QQ\nx_vars: X1\nf1 = X1\nf1 = X1\n").is_err());
        assert!(Problem::parse("field: GF(8)\nx_vars: X1\n").is_err());
        assert!(Problem::parse("field: QQ\nvars: X1\n").is_err());
        assert!(Problem::parse(r#"{"field": "QQ", "x_vars": [], "polys": [], "extra": 1}"#).is_err());
    }
}
