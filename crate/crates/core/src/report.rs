//! Identity families, the tuple-enumeration kernel and check reports.

use serde_json::{json, Value};

use crate::linalg::{basis_vector, is_zero_vector, Vector};
use crate::scalar::format_scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub max_witnesses: usize,
    pub execution: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { max_witnesses: 32, execution: Execution::default() }
    }
}

impl CheckConfig {
    pub fn sequential() -> Self {
        CheckConfig { execution: Execution::Sequential, ..Default::default() }
    }
}

type EvalFn<'a> = Box<dyn Fn(&[Vector]) -> Vector + Send + Sync + 'a>;

/// A multilinear identity `residual(x_1, ..., x_k) = 0`, one slot per argument.
pub struct Family<'a> {
    pub identity: String,
    pub dims: Vec<usize>,
    eval: EvalFn<'a>,
}

impl<'a> Family<'a> {
    pub fn new(
        identity: impl Into<String>,
        dims: Vec<usize>,
        eval: impl Fn(&[Vector]) -> Vector + Send + Sync + 'a,
    ) -> Self {
        Family { identity: identity.into(), dims, eval: Box::new(eval) }
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    /// Residual at arbitrary argument vectors.
    pub fn eval(&self, args: &[Vector]) -> Vector {
        (self.eval)(args)
    }

    /// Residual at a basis tuple.
    pub fn eval_basis(&self, tuple: &[usize]) -> Vector {
        let args: Vec<Vector> =
            tuple.iter().zip(&self.dims).map(|(&i, &n)| basis_vector(n, i)).collect();
        self.eval(&args)
    }

    pub fn tuple_count(&self) -> usize {
        self.dims.iter().product()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySummary {
    pub identity: String,
    pub evaluated: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub witnesses: Vec<Witness>,
    pub families: Vec<FamilySummary>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn evaluated(&self) -> usize {
        self.families.iter().map(|f| f.evaluated).sum()
    }

    pub fn failures(&self) -> usize {
        self.families.iter().map(|f| f.failures).sum()
    }

    /// Identities with at least one failing tuple.
    pub fn failed_identities(&self) -> Vec<&str> {
        self.families.iter().filter(|f| f.failures > 0).map(|f| f.identity.as_str()).collect()
    }

    pub fn family(&self, identity: &str) -> Option<&FamilySummary> {
        self.families.iter().find(|f| f.identity == identity)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Concatenates reports under a new name, re-sorting and re-truncating witnesses.
    pub fn merge(name: &str, parts: Vec<CheckReport>, max_witnesses: usize) -> CheckReport {
        let mut out = CheckReport { name: name.into(), witnesses: vec![], families: vec![], notes: vec![] };
        for p in parts {
            out.witnesses.extend(p.witnesses);
            out.families.extend(p.families);
            out.notes.extend(p.notes);
        }
        sort_witnesses(&mut out.witnesses);
        out.witnesses.truncate(max_witnesses.max(1));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "verdict": verdict(self.passed()),
            "evaluated": self.evaluated(),
            "failures": self.failures(),
            "families": self.families.iter().map(|f| json!({
                "identity": f.identity,
                "evaluated": f.evaluated,
                "failures": f.failures,
            })).collect::<Vec<_>>(),
            "witnesses": self.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

pub fn witness_json(w: &Witness) -> Value {
    json!({
        "identity": w.identity,
        "tuple": w.tuple,
        "residual": w.residual.iter().map(format_scalar).collect::<Vec<_>>(),
    })
}

fn sort_witnesses(ws: &mut [Witness]) {
    ws.sort_by(|a, b| (&a.identity, &a.tuple).cmp(&(&b.identity, &b.tuple)));
}

fn decode(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut tuple = vec![0; dims.len()];
    for (slot, &n) in dims.iter().enumerate().rev() {
        tuple[slot] = index % n;
        index /= n;
    }
    tuple
}

fn scan_family(family: &Family<'_>, execution: Execution) -> Vec<Witness> {
    let total = family.tuple_count();
    let basis: Vec<Vec<Vector>> =
        family.dims.iter().map(|&n| (0..n).map(|i| basis_vector(n, i)).collect()).collect();
    let probe = |index: usize| -> Option<Witness> {
        let tuple = decode(index, &family.dims);
        let args: Vec<Vector> =
            tuple.iter().enumerate().map(|(slot, &i)| basis[slot][i].clone()).collect();
        let residual = family.eval(&args);
        (!is_zero_vector(&residual)).then(|| Witness {
            identity: family.identity.clone(),
            tuple,
            residual,
        })
    };
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..total).into_par_iter().filter_map(probe).collect()
        }
        _ => (0..total).filter_map(probe).collect(),
    }
}

/// Evaluates every family on every basis tuple.
pub fn run(name: &str, families: &[Family<'_>], cfg: &CheckConfig) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut summaries = Vec::new();
    for family in families {
        let found = scan_family(family, cfg.execution);
        summaries.push(FamilySummary {
            identity: family.identity.clone(),
            evaluated: family.tuple_count(),
            failures: found.len(),
        });
        witnesses.extend(found);
    }
    sort_witnesses(&mut witnesses);
    witnesses.truncate(cfg.max_witnesses.max(1));
    CheckReport { name: name.into(), witnesses, families: summaries, notes: vec![] }
}

/// Turns a failed gate into a precondition error.
pub fn require(report: CheckReport, what: impl Into<String>) -> crate::Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(crate::Error::precondition(what, report))
    }
}

/// Turns a failed output check into a postcondition error.
pub fn ensure(report: CheckReport, what: impl Into<String>) -> crate::Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(crate::Error::postcondition(what, report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sub;

    #[test]
    fn kernel_finds_and_sorts_failures() {
        // x - y vanishes only on the diagonal
        let fam = Family::new("diag", vec![3, 3], |a: &[Vector]| sub(&a[0], &a[1]));
        for exec in [Execution::Sequential, Execution::Parallel] {
            let cfg = CheckConfig { max_witnesses: 4, execution: exec };
            let r = run("t", std::slice::from_ref(&fam), &cfg);
            assert!(!r.passed());
            assert_eq!(r.failures(), 6);
            assert_eq!(r.evaluated(), 9);
            assert_eq!(r.witnesses.len(), 4);
            assert_eq!(r.witnesses[0].tuple, vec![0, 1]);
            assert_eq!(r.witnesses[3].tuple, vec![1, 2]);
            for w in &r.witnesses {
                assert_eq!(fam.eval_basis(&w.tuple), w.residual);
            }
        }
    }

    #[test]
    fn zero_cap_still_reports_failure() {
        let fam = Family::new("id", vec![2], |a: &[Vector]| a[0].clone());
        let r = run("t", &[fam], &CheckConfig { max_witnesses: 0, ..Default::default() });
        assert!(!r.passed());
    }
}
