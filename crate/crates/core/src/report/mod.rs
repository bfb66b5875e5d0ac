//! Batch verification: a configurable suite of checks with deterministic
//! text or JSON output.

mod checks;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::g_modules::{product_table, ProductTable, Registry};
use crate::reps::{self, EquivalenceSearch, GroupModule};
use crate::syzygy::delta_h;

pub const SCHEMA: &str = "repring-a4/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckGroup {
    Lemma1,
    Lemma2,
    Corollary1,
    Lemma4,
    Lemma5,
    Corollary2,
    Lemma6,
    Theorem,
    Audit,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 9] = [
        CheckGroup::Lemma1,
        CheckGroup::Lemma2,
        CheckGroup::Corollary1,
        CheckGroup::Lemma4,
        CheckGroup::Lemma5,
        CheckGroup::Corollary2,
        CheckGroup::Lemma6,
        CheckGroup::Theorem,
        CheckGroup::Audit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckGroup::Lemma1 => "lemma1",
            CheckGroup::Lemma2 => "lemma2",
            CheckGroup::Corollary1 => "corollary1",
            CheckGroup::Lemma4 => "lemma4",
            CheckGroup::Lemma5 => "lemma5",
            CheckGroup::Corollary2 => "corollary2",
            CheckGroup::Lemma6 => "lemma6",
            CheckGroup::Theorem => "theorem",
            CheckGroup::Audit => "audit",
        }
    }
}

impl fmt::Display for CheckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckGroup::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{}`", s)))
    }
}

impl Serialize for CheckGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format `{}`", s))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    /// Depth of the `Δ_n` tower checks.
    pub max_n: u32,
    /// Highest level of the tensor identities `Δ_m ⊗ Δ1`, `3k <= m <= 3k+2`.
    pub max_k: u32,
    /// Last `n` of the complex certificates.
    pub syzygy_sweep: u32,
    pub seed: u64,
    pub exhaustive_cap: u32,
    pub sample_cap: u64,
    /// Level of the product table behind the algebra checks.
    pub table_n: u32,
    pub checks: Vec<CheckGroup>,
    pub format: Format,
    /// Record wall-clock times (makes output run-dependent).
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: 6,
            max_k: 2,
            syzygy_sweep: 30,
            seed: 0,
            exhaustive_cap: 22,
            sample_cap: 1 << 20,
            table_n: 2,
            checks: CheckGroup::ALL.to_vec(),
            format: Format::Text,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("max_n", self.max_n as u64),
            ("syzygy_sweep", self.syzygy_sweep as u64),
            ("exhaustive_cap", self.exhaustive_cap as u64),
            ("sample_cap", self.sample_cap),
            ("table_n", self.table_n as u64),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(Error::InvalidArgument(format!("{} must be positive", name)));
            }
        }
        if self.syzygy_sweep < 2 {
            return Err(Error::InvalidArgument("syzygy_sweep must be at least 2".into()));
        }
        if self.exhaustive_cap > 40 {
            return Err(Error::InvalidArgument("exhaustive_cap above 40 is not supported".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidArgument("no checks selected".into()));
        }
        Ok(())
    }

    pub fn search(&self) -> EquivalenceSearch {
        EquivalenceSearch {
            exhaustive_cap: self.exhaustive_cap,
            sample_cap: self.sample_cap,
            seed: self.seed,
            fallback_cap: self.exhaustive_cap.max(26),
        }
    }

    /// Checks in canonical order, without repeats.
    fn groups(&self) -> Vec<CheckGroup> {
        let mut g = self.checks.clone();
        g.sort();
        g.dedup();
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Report,
    Indeterminate,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Report => "report",
            CheckStatus::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub statement: String,
    pub status: CheckStatus,
    pub witnesses: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub parameters: Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report: usize,
    pub indeterminate: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub config: RunConfig,
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl Report {
    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }

    pub fn result(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} seed={} pass={} fail={} report={} indeterminate={}\n",
            self.schema,
            self.config.seed,
            self.summary.pass,
            self.summary.fail,
            self.summary.report,
            self.summary.indeterminate
        );
        for r in &self.results {
            out.push_str(&format!("{:<13} {}  {}", r.status.to_string(), r.check_id, r.statement));
            if let Some(ms) = r.elapsed_ms {
                out.push_str(&format!("  [{} ms]", ms));
            }
            out.push_str(&format!("  {}\n", r.witnesses));
        }
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Shared state of one run.
pub(crate) struct Context {
    pub config: RunConfig,
    pub registry: Registry,
    table: OnceLock<std::result::Result<ProductTable, Error>>,
}

impl Context {
    pub fn search(&self, index: usize) -> EquivalenceSearch {
        self.config.search().with_seed(self.config.seed ^ index as u64)
    }

    pub fn table(&self) -> Result<&ProductTable> {
        self.table
            .get_or_init(|| product_table(self.config.table_n, &self.registry, &self.config.search(), self.config.timings))
            .as_ref()
            .map_err(|e| e.clone())
    }
}

/// A unit of work producing results in a fixed order.
pub(crate) type Job = Box<dyn Fn(&Context, usize) -> Vec<CheckResult> + Send + Sync>;

/// Builds a result from a check that yields `(passed, witnesses)`; errors
/// become `indeterminate` (search caps) or `fail`.
pub(crate) fn outcome(
    ctx: &Context,
    id: impl Into<String>,
    statement: impl Into<String>,
    parameters: Value,
    f: impl FnOnce() -> Result<(CheckStatus, Value)>,
) -> CheckResult {
    let start = Instant::now();
    let (status, witnesses) = match f() {
        Ok(x) => x,
        Err(Error::Indeterminate(m)) => (CheckStatus::Indeterminate, serde_json::json!({ "reason": m })),
        Err(e) => (CheckStatus::Fail, serde_json::json!({ "error": e.to_string() })),
    };
    CheckResult {
        check_id: id.into(),
        statement: statement.into(),
        status,
        witnesses,
        elapsed_ms: ctx.config.timings.then(|| start.elapsed().as_millis() as u64),
        parameters,
    }
}

pub(crate) fn pass_if(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Runs the selected checks. Jobs run in parallel; each gets the root seed
/// XOR its index, and results are assembled in job order.
pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let ctx = Context {
        config: config.clone(),
        registry: Registry::new(),
        table: OnceLock::new(),
    };
    let jobs: Vec<Job> = config.groups().into_iter().flat_map(|g| checks::jobs(g, config)).collect();
    let results: Vec<Vec<CheckResult>> = jobs.par_iter().enumerate().map(|(i, job)| job(&ctx, i)).collect();
    let results: Vec<CheckResult> = results.into_iter().flatten().collect();
    let mut summary = Summary::default();
    for r in &results {
        match r.status {
            CheckStatus::Pass => summary.pass += 1,
            CheckStatus::Fail => summary.fail += 1,
            CheckStatus::Report => summary.report += 1,
            CheckStatus::Indeterminate => summary.indeterminate += 1,
        }
    }
    Ok(Report {
        schema: SCHEMA,
        config: config.clone(),
        summary,
        results,
    })
}

/// Writes the named modules (and the `Δ_n` towers over G and H for
/// `|n| <= max_n`) in the dump text format, one file per module.
pub fn dump_representations(dir: &Path, max_n: u32) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::InvalidArgument(format!("{}: {}", dir.display(), e)))?;
    let reg = Registry::new();
    let pp = reps::projective_parts();
    let mut files: Vec<(String, String)> = vec![
        ("tau0".into(), reps::tau0().to_dump()),
        ("tau".into(), reps::tau().to_dump()),
        ("gamma1".into(), reps::gamma_d(1)?.to_dump()),
        ("gamma2".into(), reps::gamma_d(2)?.to_dump()),
        ("gamma4".into(), reps::gamma_d(4)?.to_dump()),
        ("p0".into(), pp.p0.to_dump()),
        ("p1".into(), pp.p1.to_dump()),
        ("regular".into(), reps::regular_rep().to_dump()),
    ];
    for n in -(max_n as i64)..=max_n as i64 {
        files.push((format!("delta_g_{}", n), reg.delta(n)?.to_dump()));
        files.push((format!("delta_h_{}", n), delta_h(n)?.to_dump()));
    }
    let mut out = Vec::new();
    for (name, text) in files {
        let path = dir.join(format!("{}.txt", name));
        std::fs::write(&path, text).map_err(|e| Error::InvalidArgument(format!("{}: {}", path.display(), e)))?;
        out.push(path);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
