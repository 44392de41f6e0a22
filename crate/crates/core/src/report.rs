use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Outcome of one law, with the first counterexample found (if any) named by
/// basis labels or ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomLine {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<Vec<String>>,
}

/// Per-law pass/fail results, in the order the laws were checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub lines: Vec<AxiomLine>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a law; `witness == None` means it held.
    pub fn record(&mut self, axiom: impl Into<String>, witness: Option<Vec<String>>) {
        self.lines.push(AxiomLine { axiom: axiom.into(), passed: witness.is_none(), witness });
    }

    pub fn record_bool(&mut self, axiom: impl Into<String>, passed: bool) {
        self.lines.push(AxiomLine { axiom: axiom.into(), passed, witness: None });
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn line(&self, axiom: &str) -> Option<&AxiomLine> {
        self.lines.iter().find(|l| l.axiom == axiom)
    }

    /// Panics if the axiom was not checked.
    pub fn passed(&self, axiom: &str) -> bool {
        self.line(axiom).unwrap_or_else(|| panic!("no report line for {axiom:?}")).passed
    }

    pub fn failed(&self) -> Vec<&str> {
        self.lines.iter().filter(|l| !l.passed).map(|l| l.axiom.as_str()).collect()
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.lines.extend(other.lines);
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.lines.iter().map(|l| l.axiom.chars().count()).max().unwrap_or(0);
        for l in &self.lines {
            let status = if l.passed { "pass" } else { "FAIL" };
            write!(f, "{:width$}  {status}", l.axiom, width = width)?;
            if let Some(w) = &l.witness {
                write!(f, "  witness: {}", w.join(" "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Evaluates `check` on `0..n` in parallel and returns the witness of the
/// lowest failing index, so results do not depend on scheduling.
pub fn first_witness<F>(n: usize, check: F) -> Option<Vec<String>>
where
    F: Fn(usize) -> Option<Vec<String>> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(check)
}
