use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Deterministic for a fixed input and seed; timing goes to stderr instead.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub verdicts: Vec<Verdict>,
    pub dimensions: BTreeMap<String, i64>,
    pub seed: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: impl Into<String>, seed: u64) -> Self {
        Report {
            command: command.into(),
            input_digest: input_digest.into(),
            verdicts: Vec::new(),
            dimensions: BTreeMap::new(),
            seed,
        }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.check(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Value) {
        self.check(name, false, Some(witness));
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, witness: Option<Value>) {
        self.verdicts.push(Verdict {
            name: name.into(),
            pass,
            witness,
        });
    }

    pub fn dim(&mut self, name: impl Into<String>, value: usize) {
        self.dimensions.insert(name.into(), value as i64);
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        writeln!(f, "input:   sha256 {}", self.input_digest)?;
        writeln!(f, "seed:    {}", self.seed)?;
        for (k, v) in &self.dimensions {
            writeln!(f, "  {k} = {v}")?;
        }
        for v in &self.verdicts {
            write!(f, "{} {}", if v.pass { "PASS" } else { "FAIL" }, v.name)?;
            if let Some(w) = &v.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        let failed = self.verdicts.iter().filter(|v| !v.pass).count();
        write!(f, "{} of {} checks passed", self.verdicts.len() - failed, self.verdicts.len())
    }
}
