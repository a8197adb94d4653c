//! JSON interchange format.
//!
//! A document carries an algebra (`dim`, `basis`, `params`, `ops`, `maps`) and
//! optionally a representation (`module_dim`, `actions`, `beta`), a bilinear
//! form `B`, an operator `T` and coproducts `coops`. Coefficients are rational
//! strings or affine expressions in the declared parameters.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::{default_basis, Algebra, Comultiplication, Representation};
use crate::scalar::{Coeff, ParameterBinding};
use crate::tensor::BilinearMap;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

type RowsDoc = Vec<Vec<String>>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ops: Option<BTreeMap<String, Vec<EntryDoc>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maps: Option<BTreeMap<String, RowsDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<BTreeMap<String, Vec<RowsDoc>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<RowsDoc>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub form: Option<RowsDoc>,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<RowsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coops: Option<BTreeMap<String, Vec<EntryDoc>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Coeff>,
}

impl CoeffMatrix {
    pub fn from_matrix(m: &Matrix) -> Self {
        CoeffMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().cloned().map(Coeff::constant).collect(),
        }
    }

    pub fn eval(&self, binding: &ParameterBinding) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|c| c.eval(binding)).collect::<Result<_>>()?,
        })
    }

    fn to_doc(&self) -> RowsDoc {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.data[r * self.cols + c].to_string()).collect())
            .collect()
    }

    fn from_doc(rows: &RowsDoc, params: &[String], at: &str) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::parse(
                    format!("{at}[{r}]"),
                    format!("row has {} entries, expected {cols}", row.len()),
                ));
            }
            for (c, s) in row.iter().enumerate() {
                data.push(Coeff::parse(s, params).map_err(|m| Error::parse(format!("{at}[{r}][{c}]"), m))?);
            }
        }
        Ok(CoeffMatrix { rows: rows.len(), cols, data })
    }

    fn expect_shape(&self, rows: usize, cols: usize, at: &str) -> Result<()> {
        if (self.rows, self.cols) != (rows, cols) && !(self.rows == 0 && rows * cols == 0) {
            return Err(Error::parse(
                at,
                format!("matrix is {}x{}, expected {rows}x{cols}", self.rows, self.cols),
            ));
        }
        Ok(())
    }
}

pub type Entry = (usize, usize, usize, Coeff);

/// A validated document whose coefficients may still mention parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Template {
    pub dim: Option<usize>,
    pub basis: Option<Vec<String>>,
    pub params: Vec<String>,
    pub ops: BTreeMap<String, Vec<Entry>>,
    pub maps: BTreeMap<String, CoeffMatrix>,
    pub module_dim: Option<usize>,
    pub actions: BTreeMap<String, Vec<CoeffMatrix>>,
    pub beta: Option<CoeffMatrix>,
    pub form: Option<CoeffMatrix>,
    pub operator: Option<CoeffMatrix>,
    pub coops: BTreeMap<String, Vec<Entry>>,
}

fn entries_from_doc(
    list: &[EntryDoc],
    dim: usize,
    params: &[String],
    at: &str,
) -> Result<Vec<Entry>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(list.len());
    for (n, e) in list.iter().enumerate() {
        let here = format!("{at}[{n}]");
        for (field, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
            if v >= dim {
                return Err(Error::parse(
                    format!("{here}.{field}"),
                    format!("index {v} out of range for dimension {dim}"),
                ));
            }
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(Error::parse(here, format!("duplicate entry ({}, {}, {})", e.i, e.j, e.k)));
        }
        let c = Coeff::parse(&e.c, params).map_err(|m| Error::parse(format!("{here}.c"), m))?;
        out.push((e.i, e.j, e.k, c));
    }
    Ok(out)
}

fn entries_to_doc(list: &[Entry]) -> Vec<EntryDoc> {
    list.iter()
        .map(|(i, j, k, c)| EntryDoc { i: *i, j: *j, k: *k, c: c.to_string() })
        .collect()
}

fn entries_eval(list: &[Entry], dim: usize, binding: &ParameterBinding) -> Result<BilinearMap> {
    let mut m = BilinearMap::zero(dim);
    for (i, j, k, c) in list {
        m.set(*i, *j, *k, c.eval(binding)?);
    }
    Ok(m)
}

fn entries_of(m: &BilinearMap) -> Vec<Entry> {
    m.entries().into_iter().map(|(i, j, k, c)| (i, j, k, Coeff::constant(c))).collect()
}

impl Template {
    pub fn from_document(doc: &Document) -> Result<Self> {
        let params = doc.params.clone().unwrap_or_default();
        let mut seen = std::collections::BTreeSet::new();
        for p in &params {
            if !seen.insert(p) {
                return Err(Error::parse("params", format!("parameter `{p}` declared twice")));
            }
            if p.is_empty() || !p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') || p.as_bytes()[0].is_ascii_digit() {
                return Err(Error::parse("params", format!("invalid parameter name `{p}`")));
            }
        }
        let needs_dim = doc.ops.is_some()
            || doc.maps.is_some()
            || doc.actions.is_some()
            || doc.form.is_some()
            || doc.coops.is_some()
            || doc.basis.is_some();
        if needs_dim && doc.dim.is_none() {
            return Err(Error::parse("dim", "missing field `dim`"));
        }
        let dim = doc.dim.unwrap_or(0);
        if let Some(b) = &doc.basis {
            if b.len() != dim {
                return Err(Error::parse("basis", format!("{} names for dimension {dim}", b.len())));
            }
        }
        let mut t = Template {
            dim: doc.dim,
            basis: doc.basis.clone(),
            params: params.clone(),
            module_dim: doc.module_dim,
            ..Default::default()
        };
        for (name, list) in doc.ops.iter().flatten() {
            t.ops.insert(name.clone(), entries_from_doc(list, dim, &params, &format!("ops.{name}"))?);
        }
        for (name, list) in doc.coops.iter().flatten() {
            t.coops.insert(name.clone(), entries_from_doc(list, dim, &params, &format!("coops.{name}"))?);
        }
        for (name, rows) in doc.maps.iter().flatten() {
            t.maps.insert(name.clone(), CoeffMatrix::from_doc(rows, &params, &format!("maps.{name}"))?);
        }
        if doc.actions.is_some() || doc.beta.is_some() {
            let md = doc.module_dim.ok_or_else(|| Error::parse("module_dim", "missing field `module_dim`"))?;
            let beta = doc.beta.as_ref().ok_or_else(|| Error::parse("beta", "missing field `beta`"))?;
            let beta = CoeffMatrix::from_doc(beta, &params, "beta")?;
            beta.expect_shape(md, md, "beta")?;
            t.beta = Some(beta);
            for (name, mats) in doc.actions.iter().flatten() {
                if mats.len() != dim {
                    return Err(Error::parse(
                        format!("actions.{name}"),
                        format!("{} matrices for dimension {dim}", mats.len()),
                    ));
                }
                let mut out = Vec::with_capacity(mats.len());
                for (i, rows) in mats.iter().enumerate() {
                    let at = format!("actions.{name}[{i}]");
                    let m = CoeffMatrix::from_doc(rows, &params, &at)?;
                    m.expect_shape(md, md, &at)?;
                    out.push(m);
                }
                t.actions.insert(name.clone(), out);
            }
        }
        if let Some(rows) = &doc.form {
            let m = CoeffMatrix::from_doc(rows, &params, "B")?;
            m.expect_shape(dim, dim, "B")?;
            t.form = Some(m);
        }
        if let Some(rows) = &doc.operator {
            t.operator = Some(CoeffMatrix::from_doc(rows, &params, "T")?);
        }
        Ok(t)
    }

    pub fn to_document(&self) -> Document {
        let nonempty = |b: bool| b.then_some(());
        Document {
            dim: self.dim,
            basis: self.basis.clone(),
            params: nonempty(!self.params.is_empty()).map(|_| self.params.clone()),
            ops: nonempty(!self.ops.is_empty())
                .map(|_| self.ops.iter().map(|(k, v)| (k.clone(), entries_to_doc(v))).collect()),
            maps: nonempty(!self.maps.is_empty())
                .map(|_| self.maps.iter().map(|(k, v)| (k.clone(), v.to_doc())).collect()),
            module_dim: self.module_dim,
            actions: nonempty(!self.actions.is_empty()).map(|_| {
                self.actions
                    .iter()
                    .map(|(k, v)| (k.clone(), v.iter().map(CoeffMatrix::to_doc).collect()))
                    .collect()
            }),
            beta: self.beta.as_ref().map(CoeffMatrix::to_doc),
            form: self.form.as_ref().map(CoeffMatrix::to_doc),
            operator: self.operator.as_ref().map(CoeffMatrix::to_doc),
            coops: nonempty(!self.coops.is_empty())
                .map(|_| self.coops.iter().map(|(k, v)| (k.clone(), entries_to_doc(v))).collect()),
        }
    }

    fn dim(&self) -> Result<usize> {
        self.dim.ok_or_else(|| Error::parse("dim", "missing field `dim`"))
    }

    pub fn algebra(&self, binding: &ParameterBinding) -> Result<Algebra> {
        let dim = self.dim()?;
        let mut a = Algebra::new(dim);
        if let Some(b) = &self.basis {
            a.basis = b.clone();
        }
        for (name, list) in &self.ops {
            a.ops.insert(name.clone(), entries_eval(list, dim, binding)?);
        }
        for (name, m) in &self.maps {
            a.maps.insert(name.clone(), m.eval(binding)?);
        }
        Ok(a)
    }

    pub fn representation(&self, binding: &ParameterBinding) -> Result<Representation> {
        let dim = self.dim()?;
        let beta = self.beta.as_ref().ok_or_else(|| Error::parse("beta", "missing field `beta`"))?;
        let mut rep = Representation::new(dim, beta.eval(binding)?);
        for (name, mats) in &self.actions {
            let mats = mats.iter().map(|m| m.eval(binding)).collect::<Result<Vec<_>>>()?;
            rep = rep.with_action(name, mats);
        }
        Ok(rep)
    }

    pub fn form(&self, binding: &ParameterBinding) -> Result<Matrix> {
        self.form.as_ref().ok_or_else(|| Error::parse("B", "missing field `B`"))?.eval(binding)
    }

    pub fn operator(&self, binding: &ParameterBinding) -> Result<Matrix> {
        self.operator.as_ref().ok_or_else(|| Error::parse("T", "missing field `T`"))?.eval(binding)
    }

    pub fn comultiplication(&self, name: &str, binding: &ParameterBinding) -> Result<Comultiplication> {
        let list = self.coops.get(name).ok_or_else(|| Error::parse(format!("coops.{name}"), "missing coproduct"))?;
        Ok(Comultiplication::from_bilinear(&entries_eval(list, self.dim()?, binding)?))
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        let mut t = Template { dim: Some(a.dim), ..Default::default() };
        if a.basis != default_basis("e", a.dim) {
            t.basis = Some(a.basis.clone());
        }
        for (name, op) in &a.ops {
            t.ops.insert(name.clone(), entries_of(op));
        }
        for (name, m) in &a.maps {
            t.maps.insert(name.clone(), CoeffMatrix::from_matrix(m));
        }
        t
    }

    pub fn with_representation(mut self, rep: &Representation) -> Self {
        self.dim.get_or_insert(rep.algebra_dim);
        self.module_dim = Some(rep.module_dim);
        self.beta = Some(CoeffMatrix::from_matrix(&rep.beta));
        for (name, mats) in &rep.actions {
            self.actions.insert(name.clone(), mats.iter().map(CoeffMatrix::from_matrix).collect());
        }
        self
    }

    pub fn with_form(mut self, b: &Matrix) -> Self {
        self.dim.get_or_insert(b.rows);
        self.form = Some(CoeffMatrix::from_matrix(b));
        self
    }

    pub fn with_operator(mut self, t: &Matrix) -> Self {
        self.operator = Some(CoeffMatrix::from_matrix(t));
        self
    }

    pub fn with_coop(mut self, name: &str, c: &Comultiplication) -> Self {
        self.dim.get_or_insert(c.dim);
        self.coops.insert(name.to_string(), entries_of(&c.to_bilinear()));
        self
    }

    /// True when every coefficient is a constant.
    pub fn is_concrete(&self) -> bool {
        let ok = |m: &CoeffMatrix| m.data.iter().all(|c| c.as_constant().is_some());
        self.ops.values().chain(self.coops.values()).flatten().all(|e| e.3.as_constant().is_some())
            && self.maps.values().all(ok)
            && self.actions.values().flatten().all(ok)
            && self.beta.iter().chain(&self.form).chain(&self.operator).all(ok)
    }
}

pub fn parse_document(text: &str) -> Result<Template> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    Template::from_document(&doc)
}

/// Canonical text: pretty-printed JSON with a trailing newline.
pub fn render(t: &Template) -> String {
    let mut s = serde_json::to_string_pretty(&t.to_document()).expect("documents serialise");
    s.push('\n');
    s
}

pub fn render_algebra(a: &Algebra) -> String {
    render(&Template::from_algebra(a))
}

pub fn parse_algebra(text: &str, binding: &ParameterBinding) -> Result<Algebra> {
    parse_document(text)?.algebra(binding)
}
