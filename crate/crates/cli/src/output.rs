//! Reports on standard output, in text or as JSON.

use hompoisson::report::{verdict, witness_json};
use hompoisson::CheckReport;
use serde_json::{json, Value};

pub struct Outcome {
    pub command: String,
    pub inputs: Vec<String>,
    pub passed: bool,
    pub sub_reports: Vec<CheckReport>,
    pub lines: Vec<String>,
    pub data: Option<Value>,
}

impl Outcome {
    pub fn new(command: &str, inputs: Vec<String>) -> Self {
        Outcome { command: command.into(), inputs, passed: true, sub_reports: vec![], lines: vec![], data: None }
    }

    pub fn report(mut self, r: CheckReport) -> Self {
        self.passed &= r.passed();
        self.sub_reports.push(r);
        self
    }

    /// Adds a report that is shown but does not decide the verdict.
    pub fn info(mut self, r: CheckReport) -> Self {
        self.sub_reports.push(r);
        self
    }

    pub fn line(mut self, l: impl Into<String>) -> Self {
        self.lines.push(l.into());
        self
    }

    pub fn verdict(mut self, passed: bool) -> Self {
        self.passed &= passed;
        self
    }

    pub fn to_json(&self, status: &str) -> Value {
        let witnesses: Vec<Value> = self
            .sub_reports
            .iter()
            .flat_map(|r| r.witnesses.iter().map(move |w| {
                let mut v = witness_json(w);
                v["report"] = json!(r.name);
                v
            }))
            .collect();
        let mut out = json!({
            "command": self.command,
            "inputs": self.inputs,
            "verdict": status,
            "witnesses": witnesses,
            "sub_reports": self.sub_reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        });
        if let Some(d) = &self.data {
            out["data"] = d.clone();
        }
        out
    }

    pub fn to_text(&self, status: &str) -> String {
        let mut s = format!("{} {}: {}\n", self.command, self.inputs.join(" "), status.to_uppercase());
        for l in &self.lines {
            s.push_str(&format!("  {l}\n"));
        }
        for r in &self.sub_reports {
            s.push_str(&format!(
                "  {}: {} ({} tuples, {} failing)\n",
                r.name,
                verdict(r.passed()),
                r.evaluated(),
                r.failures()
            ));
            for w in &r.witnesses {
                let tuple: Vec<String> = w.tuple.iter().map(|i| (i + 1).to_string()).collect();
                let res: Vec<String> = w.residual.iter().map(hompoisson::scalar::format_scalar).collect();
                s.push_str(&format!("    {} at ({}): [{}]\n", w.identity, tuple.join(", "), res.join(", ")));
            }
            for n in &r.notes {
                s.push_str(&format!("    note: {n}\n"));
            }
        }
        s
    }

    pub fn status(&self) -> &'static str {
        verdict(self.passed)
    }
}
