//! Input documents, `catalog:ID` references, and inline maps and vectors.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use hompoisson::format::{parse_document, Template};
use hompoisson::linalg::Matrix;
use hompoisson::presentation::{Algebra, Representation};
use hompoisson::scalar::{parse_scalar, Scalar};
use hompoisson::ParameterBinding;

pub struct Input {
    pub label: String,
    pub template: Template,
}

pub fn load(spec: &str) -> Result<Input> {
    let template = match spec.strip_prefix("catalog:") {
        Some(id) => hompoisson::catalog::get(id)?.template(),
        None => {
            let text = std::fs::read_to_string(Path::new(spec)).with_context(|| format!("reading {spec}"))?;
            parse_document(&text).with_context(|| format!("in {spec}"))?
        }
    };
    Ok(Input { label: spec.to_string(), template })
}

impl Input {
    pub fn algebra(&self, binding: &ParameterBinding) -> Result<Algebra> {
        self.template.algebra(binding).with_context(|| format!("in {}", self.label))
    }

    pub fn representation(&self, binding: &ParameterBinding) -> Result<Representation> {
        self.template.representation(binding).with_context(|| format!("in {}", self.label))
    }

    pub fn has_representation(&self) -> bool {
        self.template.beta.is_some()
    }

    /// A map of the document by name, or an inline matrix `a,b;c,d` (rows).
    pub fn matrix(&self, spec: &str, binding: &ParameterBinding) -> Result<Matrix> {
        if let Some(m) = self.template.maps.get(spec) {
            return Ok(m.eval(binding)?);
        }
        inline_matrix(spec).with_context(|| format!("`{spec}` is neither a map of {} nor an inline matrix", self.label))
    }
}

pub fn inline_matrix(spec: &str) -> Result<Matrix> {
    let rows = spec
        .split(';')
        .map(|row| row.split(',').map(|x| scalar(x.trim())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows)?)
}

fn scalar(text: &str) -> Result<Scalar> {
    parse_scalar(text).ok_or_else(|| anyhow!("`{text}` is not a rational number"))
}

/// `e1+e2`, `2*e1-1/2*e3`, or coordinates `1,0,1`.
pub fn vector(spec: &str, basis: &[String]) -> Result<Vec<Scalar>> {
    if spec.contains(',') || parse_scalar(spec.trim()).is_some() {
        let v = spec.split(',').map(|x| scalar(x.trim())).collect::<Result<Vec<_>>>()?;
        if v.len() != basis.len() {
            bail!("vector has {} coordinates, expected {}", v.len(), basis.len());
        }
        return Ok(v);
    }
    let mut out = vec![Scalar::default(); basis.len()];
    let text = spec.replace('-', "+-");
    for term in text.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (coeff, name) = match term.rsplit_once('*') {
            Some((c, n)) => (scalar(c.trim())?, n.trim()),
            None => match term.strip_prefix('-') {
                Some(n) => (Scalar::from_integer((-1).into()), n.trim()),
                None => (Scalar::from_integer(1.into()), term),
            },
        };
        let i = basis.iter().position(|b| b == name).ok_or_else(|| anyhow!("unknown basis element `{name}`"))?;
        out[i] += coeff;
    }
    Ok(out)
}
