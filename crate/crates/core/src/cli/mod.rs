//! Command implementations behind the `grpdfrob` binary. Each command reads
//! its inputs, runs the relevant checks and returns a [`RunReport`].

pub mod random;

pub use random::{random_structures, serialization_roundtrip, Sample};

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::correspondence::{
    frobenius_to_gfa, gfa_to_frobenius, gfa_to_module, psi_map, roundtrip_frobenius, roundtrip_gfa,
    CorrespondenceError, EqualityReport,
};
use crate::fixtures::{fixture, FIXTURE_NAMES};
use crate::frobenius::{
    check_algebra_object, check_coalgebra_object, check_condition1, check_condition2,
    check_frobenius_object, FrobeniusObjectData,
};
use crate::gfa::{check_gfa, groupoid_ring_gfa, Gfa};
use crate::groupoid::Groupoid;
use crate::report::AxiomReport;
use crate::weak_hopf::{
    check_quasitriangular, check_weak_hopf, classify_hopf, drinfeld_double, groupoid_algebra,
    DoubleJson, DrinfeldDouble, HopfClass, QuantumGroupoid,
};

pub const DEFAULT_SEED: u64 = 20240607;
pub const RANDOM_SAMPLES: usize = 100;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Problems with the inputs themselves, as opposed to failed checks.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("cannot parse {path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("unknown fixture {0:?}; known: {known}", known = FIXTURE_NAMES.join(", "))]
    UnknownFixture(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub witness: Option<Vec<String>>,
}

/// Outcome of one command. `exit_code` is 0 exactly when every check passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub results: Vec<CheckResult>,
    pub notes: Vec<String>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { command: command.to_string(), inputs: vec![], results: vec![], notes: vec![], exit_code: EXIT_PASS }
    }

    pub fn input_error(command: &str, err: &CliError) -> Self {
        let mut r = Self::new(command);
        r.notes.push(err.to_string());
        r.exit_code = EXIT_INPUT_ERROR;
        r
    }

    fn add_input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(InputDigest { path: path.display().to_string(), sha256: hex::encode(Sha256::digest(bytes)) });
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: Option<Vec<String>>) {
        self.results.push(CheckResult { check: name.into(), passed, witness });
        self.refresh();
    }

    /// One result per report line, named `"{prefix}: {axiom}"`.
    pub fn add_report(&mut self, prefix: &str, report: &AxiomReport) {
        for line in &report.lines {
            self.results.push(CheckResult {
                check: format!("{prefix}: {}", line.axiom),
                passed: line.passed,
                witness: line.witness.clone(),
            });
        }
        self.refresh();
    }

    fn add_equality(&mut self, name: &str, report: &EqualityReport) {
        let witness = report.mismatches.first().map(|m| {
            vec![m.component.clone(), m.entry.clone(), m.expected.clone(), m.found.clone()]
        });
        self.check(name, report.is_equal(), witness);
        for m in &report.informational {
            self.note(format!("{name}: {} {} expected {} found {}", m.component, m.entry, m.expected, m.found));
        }
    }

    /// Records a failed construction as a failed check.
    fn add_failure(&mut self, name: &str, err: &CorrespondenceError) {
        let witness = match err {
            CorrespondenceError::GfaInvalid(v) | CorrespondenceError::ConditionsNotMet(v) => v.clone(),
            other => vec![other.to_string()],
        };
        self.check(name, false, Some(witness));
        self.note(format!("{name}: {err}"));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn refresh(&mut self) {
        if self.exit_code != EXIT_INPUT_ERROR {
            self.exit_code = if self.all_passed() { EXIT_PASS } else { EXIT_CHECK_FAILED };
        }
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.results.iter().filter(|r| !r.passed).map(|r| r.check.as_str()).collect()
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        for i in &self.inputs {
            writeln!(f, "input:   {} (sha256 {})", i.path, i.sha256)?;
        }
        let width = self.results.iter().map(|r| r.check.chars().count()).max().unwrap_or(0);
        for r in &self.results {
            let status = if r.passed { "pass" } else { "FAIL" };
            write!(f, "  {:width$}  {status}", r.check, width = width)?;
            if let Some(w) = &r.witness {
                write!(f, "  witness: {}", w.join(" "))?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        write!(f, "exit: {}", self.exit_code)
    }
}

/// Canonical JSON text for every file the tool writes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn read_json<T: DeserializeOwned>(report: &mut RunReport, path: &Path) -> Result<T, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Read { path: path.to_owned(), source })?;
    report.add_input(path, &bytes);
    serde_json::from_slice(&bytes).map_err(|e| CliError::Parse { path: path.to_owned(), message: e.to_string() })
}

fn write_output(report: &mut RunReport, out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Write { path: path.to_owned(), source })?;
            report.note(format!("wrote {}", path.display()));
        }
        None => report.note("no --out given; result not written"),
    }
    Ok(())
}

pub fn validate(path: &Path) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("validate");
    let g: Groupoid = read_json(&mut report, path)?;
    report.add_report("groupoid", &g.validate());
    Ok(report)
}

fn double_checks(report: &mut RunReport, prefix: &str, g: &Groupoid) -> Option<DrinfeldDouble> {
    let d = match drinfeld_double(g) {
        Ok(d) => d,
        Err(e) => {
            report.check(format!("{prefix}: construction"), false, Some(vec![e.to_string()]));
            return None;
        }
    };
    report.note(format!("{prefix}: dim {}, R̄ solution nullity {}", d.algebra.dim(), d.rbar_nullity));
    report.add_report(&format!("{prefix} weak Hopf"), &check_weak_hopf(&d.algebra));
    report.add_report(&format!("{prefix} quasitriangular"), &check_quasitriangular(&d.algebra, &d.r_matrix));
    hopf_class(report, prefix, &d.algebra, Some(g));
    Some(d)
}

/// Records the Hopf classification; with a groupoid at hand also checks that
/// it is Hopf exactly when there is one object.
fn hopf_class(report: &mut RunReport, prefix: &str, h: &QuantumGroupoid, g: Option<&Groupoid>) {
    match classify_hopf(h) {
        Ok(class) => {
            report.note(format!("{prefix}: {class:?}"));
            if let Some(g) = g {
                let expected = if g.num_objects() == 1 { HopfClass::Hopf } else { HopfClass::StrictlyWeak };
                report.check(
                    format!("{prefix}: Hopf exactly for one object"),
                    class == expected,
                    (class != expected).then(|| vec![format!("{class:?}")]),
                );
            }
        }
        Err(e) => report.check(format!("{prefix}: Hopf classification"), false, Some(vec![e.to_string()])),
    }
}

pub fn double(path: &Path, out: Option<&Path>) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("double");
    let g: Groupoid = read_json(&mut report, path)?;
    let validity = g.validate();
    if !validity.all_passed() {
        report.add_report("groupoid", &validity);
        return Ok(report);
    }
    if let Some(d) = double_checks(&mut report, "D(k[G])", &g) {
        write_output(&mut report, out, &to_canonical_json(&DoubleJson::from(&d)))?;
    }
    Ok(report)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WhaInput {
    Double(DoubleJson),
    Plain(QuantumGroupoid),
}

/// Accepts either a tabulated quantum groupoid or the output of `double`.
pub fn check_wha(path: &Path) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("check-wha");
    match read_json::<WhaInput>(&mut report, path)? {
        WhaInput::Double(j) => {
            let (h, rm) = j.decode().map_err(|e| CliError::Parse { path: path.to_owned(), message: e.to_string() })?;
            report.add_report("weak Hopf", &check_weak_hopf(&h));
            report.add_report("quasitriangular", &check_quasitriangular(&h, &rm));
            hopf_class(&mut report, "class", &h, None);
        }
        WhaInput::Plain(h) => {
            report.add_report("weak Hopf", &check_weak_hopf(&h));
            hopf_class(&mut report, "class", &h, None);
        }
    }
    Ok(report)
}

pub fn check_gfa_file(path: &Path) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("check-gfa");
    let a: Gfa = read_json(&mut report, path)?;
    report.add_report("GFA", &check_gfa(&a));
    Ok(report)
}

fn frobenius_checks(report: &mut RunReport, prefix: &str, f: &FrobeniusObjectData) {
    report.add_report(&format!("{prefix} algebra"), &check_algebra_object(f));
    report.add_report(&format!("{prefix} coalgebra"), &check_coalgebra_object(f));
    report.add_report(&format!("{prefix} Frobenius"), &check_frobenius_object(f));
    report.check(format!("{prefix}: condition1 Σρ(⟨g|g⟩) = id"), check_condition1(f), None);
    report.add_report(prefix, &check_condition2(f));
}

pub fn check_frobenius_file(path: &Path) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("check-frobenius");
    let f: FrobeniusObjectData = read_json(&mut report, path)?;
    frobenius_checks(&mut report, "object", &f);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    GfaToFrob,
    FrobToGfa,
}

pub fn convert(path: &Path, direction: Direction, out: Option<&Path>) -> Result<RunReport, CliError> {
    let mut report = RunReport::new(match direction {
        Direction::GfaToFrob => "convert gfa-to-frob",
        Direction::FrobToGfa => "convert frob-to-gfa",
    });
    let text = match direction {
        Direction::GfaToFrob => {
            let a: Gfa = read_json(&mut report, path)?;
            match gfa_to_frobenius(&a) {
                Ok(f) => {
                    frobenius_checks(&mut report, "output", &f);
                    Some(to_canonical_json(&f))
                }
                Err(e) => {
                    report.add_failure("gfa_to_frobenius", &e);
                    None
                }
            }
        }
        Direction::FrobToGfa => {
            let f: FrobeniusObjectData = read_json(&mut report, path)?;
            match frobenius_to_gfa(&f) {
                Ok(a) => {
                    report.add_report("output GFA", &check_gfa(&a));
                    Some(to_canonical_json(&a))
                }
                Err(e) => {
                    report.add_failure("frobenius_to_gfa", &e);
                    None
                }
            }
        }
    };
    if let Some(text) = text {
        write_output(&mut report, out, &text)?;
    }
    Ok(report)
}

pub fn roundtrip(path: &Path) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("roundtrip");
    let a: Gfa = read_json(&mut report, path)?;
    match roundtrip_gfa(&a) {
        Ok(eq) => report.add_equality("roundtrip_gfa exact", &eq),
        Err(e) => report.add_failure("roundtrip_gfa", &e),
    }
    Ok(report)
}

/// The whole pipeline on one groupoid, with results prefixed by `name`.
pub fn pipeline(report: &mut RunReport, name: &str, g: &Groupoid) {
    let validity = g.validate();
    report.add_report(&format!("{name} groupoid"), &validity);
    if !validity.all_passed() {
        return;
    }
    match groupoid_algebra(g) {
        Ok(h) => report.add_report(&format!("{name} k[G] weak Hopf"), &check_weak_hopf(&h)),
        Err(e) => report.check(format!("{name} k[G]"), false, Some(vec![e.to_string()])),
    }
    double_checks(report, &format!("{name} D(k[G])"), g);

    let a = match groupoid_ring_gfa(g) {
        Ok(a) => a,
        Err(e) => return report.check(format!("{name} GFA"), false, Some(vec![e.to_string()])),
    };
    report.add_report(&format!("{name} GFA"), &check_gfa(&a));
    match (psi_map(&a), gfa_to_module(&a)) {
        (Ok(psi), Ok(module)) => report.add_report(&format!("{name} ψ"), &psi.verify(&a, &module)),
        (Err(e), _) | (_, Err(e)) => return report.add_failure(&format!("{name} ψ"), &e),
    }
    let f = match gfa_to_frobenius(&a) {
        Ok(f) => f,
        Err(e) => return report.add_failure(&format!("{name} gfa_to_frobenius"), &e),
    };
    frobenius_checks(report, &format!("{name} Frobenius object"), &f);
    match frobenius_to_gfa(&f) {
        Ok(back) => report.add_report(&format!("{name} recovered GFA"), &check_gfa(&back)),
        Err(e) => report.add_failure(&format!("{name} frobenius_to_gfa"), &e),
    }
    match roundtrip_gfa(&a) {
        Ok(eq) => report.add_equality(&format!("{name} roundtrip_gfa exact"), &eq),
        Err(e) => report.add_failure(&format!("{name} roundtrip_gfa"), &e),
    }
    match roundtrip_frobenius(&f) {
        Ok(eq) => report.add_equality(&format!("{name} roundtrip_frobenius (m, μ, ε)"), &eq),
        Err(e) => report.add_failure(&format!("{name} roundtrip_frobenius"), &e),
    }
}

/// Runs [`pipeline`] on one fixture or on all of them (`"all"`), then the
/// seeded serialization round trip.
pub fn demo(name: &str, seed: u64) -> Result<RunReport, CliError> {
    let names: Vec<&str> = if name == "all" {
        FIXTURE_NAMES.to_vec()
    } else if FIXTURE_NAMES.contains(&name) {
        vec![name]
    } else {
        return Err(CliError::UnknownFixture(name.to_string()));
    };
    let mut report = RunReport::new(&format!("demo {name}"));
    for n in names {
        pipeline(&mut report, n, &fixture(n).expect("listed fixture"));
    }
    let failure = serialization_roundtrip(seed, RANDOM_SAMPLES);
    report.check(
        format!("serialization round trip ({RANDOM_SAMPLES} random structures, seed {seed})"),
        failure.is_none(),
        failure,
    );
    Ok(report)
}

/// Sets the rayon pool size from `GRPDFROB_THREADS` (0 or unset = automatic).
pub fn configure_threads() -> Result<(), String> {
    let n = match std::env::var("GRPDFROB_THREADS") {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| format!("GRPDFROB_THREADS={v:?} is not a number"))?,
        Err(_) => 0,
    };
    if n > 0 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

#[cfg(test)]
mod tests;
