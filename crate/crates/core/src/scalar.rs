//! Exact rational scalars and affine coefficient expressions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Parameter values used to instantiate templates.
pub type ParameterBinding = BTreeMap<String, Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Lowest-terms text: `p` or `p/q`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Accepts `-?[0-9]+(/[1-9][0-9]*)?`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let body = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut value = Scalar::from_integer(num.parse::<BigInt>().ok()?);
    if let Some(d) = den {
        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) || d.starts_with('0') {
            return None;
        }
        value /= Scalar::from_integer(d.parse::<BigInt>().ok()?);
    }
    if s.starts_with('-') {
        value = -value;
    }
    Some(value)
}

/// An affine expression `c0 + sum c_p * p` in named parameters.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Coeff {
    pub constant: Scalar,
    pub terms: BTreeMap<String, Scalar>,
}

impl Coeff {
    pub fn constant(c: Scalar) -> Self {
        Coeff { constant: c, terms: BTreeMap::new() }
    }

    pub fn param(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(name.to_string(), Scalar::one());
        Coeff { constant: Scalar::zero(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<&Scalar> {
        self.terms.is_empty().then_some(&self.constant)
    }

    pub fn scale(&self, k: &Scalar) -> Coeff {
        let mut out = Coeff::constant(&self.constant * k);
        for (p, c) in &self.terms {
            let v = c * k;
            if !v.is_zero() {
                out.terms.insert(p.clone(), v);
            }
        }
        out
    }

    pub fn params(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().map(String::as_str)
    }

    pub fn eval(&self, binding: &ParameterBinding) -> Result<Scalar> {
        let mut v = self.constant.clone();
        for (p, c) in &self.terms {
            let x = binding.get(p).ok_or_else(|| Error::UnboundParameter(p.clone()))?;
            v += c * x;
        }
        Ok(v)
    }

    /// Parses sums of terms `q`, `name`, `q*name` joined by `+`/`-`.
    /// Identifiers must appear in `names`.
    pub fn parse(text: &str, names: &[String]) -> std::result::Result<Coeff, String> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty expression".into());
        }
        let mut out = Coeff::default();
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut negative = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if pos == 0 && bytes[pos] == b'+' {
                    return Err(format!("malformed expression `{text}`"));
                }
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if pos != 0 {
                return Err(format!("malformed expression `{text}`"));
            }
            let end = s[pos..].find(['+', '-']).map_or(s.len(), |e| pos + e);
            let term = &s[pos..end];
            if term.is_empty() {
                return Err(format!("malformed expression `{text}`"));
            }
            let (factor, name) = match term.split_once('*') {
                Some((f, n)) => (
                    parse_scalar(f).ok_or_else(|| format!("malformed coefficient `{f}` in `{text}`"))?,
                    Some(n),
                ),
                None if term.as_bytes()[0].is_ascii_digit() => (
                    parse_scalar(term).ok_or_else(|| format!("malformed rational `{term}`"))?,
                    None,
                ),
                None => (Scalar::one(), Some(term)),
            };
            let factor = if negative { -factor } else { factor };
            match name {
                None => out.constant += factor,
                Some(n) => {
                    if !is_identifier(n) {
                        return Err(format!("malformed expression `{text}`"));
                    }
                    if !names.iter().any(|d| d == n) {
                        return Err(format!("undeclared name `{n}`"));
                    }
                    *out.terms.entry(n.to_string()).or_insert_with(Scalar::zero) += factor;
                }
            }
            pos = end;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str(&format_scalar(&self.constant));
        }
        let mut first = true;
        for (name, c) in &self.terms {
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{}*{name}", format_scalar(&mag))?;
            }
            first = false;
        }
        if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { "-" } else { "+" };
            write!(f, "{sign}{}", format_scalar(&self.constant.abs()))?;
        }
        Ok(())
    }
}

/// Parses `k=v,k=v` parameter bindings.
pub fn parse_binding(text: &str) -> Result<ParameterBinding> {
    let mut out = ParameterBinding::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse {
            location: "--params".into(),
            message: format!("expected key=value, got `{part}`"),
        })?;
        let value = parse_scalar(v.trim()).ok_or_else(|| Error::Parse {
            location: format!("--params {k}"),
            message: format!("malformed rational `{v}`"),
        })?;
        out.insert(k.trim().to_string(), value);
    }
    Ok(out)
}
