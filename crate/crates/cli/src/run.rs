//! Task execution and expectation checks.

use std::sync::Arc;
use std::time::{Duration, Instant};

use filtralab_core::filtration::{integral_closure_power, ratliff_rush_piece};
use filtralab_core::hilbert::{self, CohomologyTable, DefectTable, Window};
use filtralab_core::theorems::{self, ReductionReport, TheoremReport};
use filtralab_core::{
    AmbientRing, CheckConfig, Error, ExponentVector, FitConfig, Filtration, HilbertSummary, MonomialIdeal, Postulation,
    RrConfig, Verdict,
};
use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::instance::{self, Value};
use crate::model::{self, Model, Target, Task, TaskKind, Theorem};

/// Knobs shared by every task of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Upper end of table windows and the reduction window `W`.
    pub window: Option<i64>,
    pub kmax: usize,
    pub fit: FitConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { window: None, kmax: RrConfig::default().kmax, fit: FitConfig::default() }
    }
}

impl RunConfig {
    pub fn rr(&self) -> RrConfig {
        RrConfig { kmax: self.kmax, ..RrConfig::default() }
    }

    pub fn check(&self) -> CheckConfig {
        let mut c = CheckConfig { fit: self.fit, rr: self.rr(), ..CheckConfig::default() };
        if let Some(w) = self.window {
            c.window = w.max(0);
            c.reduction_window = w.max(0) as usize;
        }
        c
    }
}

#[derive(Clone, Debug)]
pub enum TaskValue {
    Coefficients { filtration: String, summary: HilbertSummary, mixed: bool },
    Function { filtration: String, rows: Vec<(Vec<i64>, BigInt)> },
    Defect { filtration: String, table: DefectTable },
    Postulation { filtration: String, value: Postulation },
    Ideal { operation: &'static str, source: String, n: i64, ideal: MonomialIdeal, colength: BigInt },
    Cohomology { filtration: String, rows: CohomologyTable },
    Torsion { filtration: String, axis: usize, rows: Vec<(Vec<i64>, BigInt)> },
    Reduction { filtration: String, reports: Vec<ReductionReport>, best: Option<i64> },
    Theorem(TheoremReport),
}

impl TaskValue {
    /// Comparable summary used by `expect` statements.
    pub fn summary(&self) -> Value {
        let ints = |v: Vec<BigInt>| Value::List(v.into_iter().map(Value::Int).collect());
        match self {
            TaskValue::Coefficients { summary, .. } => {
                if summary.arity == 1 {
                    ints(summary.polynomial.univariate_coefficients())
                } else {
                    ints(summary.polynomial.coefficients().values().cloned().collect())
                }
            }
            TaskValue::Function { rows, .. } | TaskValue::Torsion { rows, .. } => {
                ints(rows.iter().map(|(_, v)| v.clone()).collect())
            }
            TaskValue::Defect { table, .. } => ints(table.rows.iter().map(|(_, v)| v.clone()).collect()),
            TaskValue::Postulation { value, .. } => match value {
                Postulation::At(n) => Value::Int(BigInt::from(*n)),
                Postulation::NegativeInfinity => Value::Word("-inf".into()),
            },
            TaskValue::Ideal { ideal, .. } => Value::List(
                ideal
                    .generators()
                    .iter()
                    .map(|g| Value::Word(ideal.ring().format_monomial(g)))
                    .collect(),
            ),
            TaskValue::Cohomology { rows, .. } => ints(rows.iter().map(|r| r.h2.clone()).collect()),
            TaskValue::Reduction { best, .. } => match best {
                Some(r) => Value::Int(BigInt::from(*r)),
                None => Value::Word("none".into()),
            },
            TaskValue::Theorem(r) => Value::Word(r.verdict.as_str().into()),
        }
    }

    pub fn verdict(&self) -> Option<Verdict> {
        match self {
            TaskValue::Theorem(r) => Some(r.verdict),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Status {
    Ok(Box<TaskValue>),
    /// The task does not apply to this input, e.g. a dimension-2 table on a
    /// three-dimensional ring.
    Inapplicable(String),
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub expected: String,
    pub actual: Option<String>,
    pub matched: bool,
}

#[derive(Clone, Debug)]
pub struct TaskOutcome {
    pub index: usize,
    pub task: String,
    pub status: Status,
    pub expectation: Option<Expectation>,
    pub elapsed: Duration,
}

impl TaskOutcome {
    pub fn violated(&self) -> bool {
        let verdict = matches!(&self.status, Status::Ok(v) if v.verdict() == Some(Verdict::Violated));
        verdict || self.expectation.as_ref().is_some_and(|e| e.actual.is_some() && !e.matched)
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Error(_))
    }
}

/// Everything produced for one instance file.
#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub path: String,
    pub digest: String,
    /// Syntax or name error; no tasks ran.
    pub parse_error: Option<String>,
    pub outcomes: Vec<TaskOutcome>,
}

/// Exit codes: 0 clean, 1 hard error, 2 violated. Violations win.
pub fn exit_code<'a>(reports: impl IntoIterator<Item = &'a InstanceReport>) -> i32 {
    let mut code = 0;
    for r in reports {
        if r.outcomes.iter().any(TaskOutcome::violated) {
            return 2;
        }
        if r.parse_error.is_some() || r.outcomes.iter().any(TaskOutcome::failed) {
            code = 1;
        }
    }
    code
}

impl InstanceReport {
    pub fn exit_code(&self) -> i32 {
        exit_code([self])
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Tasks chosen on the command line rather than read from the file.
#[derive(Clone, Debug, Default)]
pub struct Selection {
    pub kind: Option<TaskKind>,
    /// Every ideal or filtration of the right sort when absent.
    pub target: Option<String>,
    pub candidate: Option<String>,
    pub n: Option<i64>,
    pub window: Option<(i64, i64)>,
    pub axis: Option<usize>,
}

fn select(model: &Model, sel: &Selection) -> Result<Vec<Task>, String> {
    let Some(kind) = sel.kind else {
        return Ok(model.tasks.clone());
    };
    let targets: Vec<String> = match &sel.target {
        Some(t) => {
            if model.target(t).is_none() {
                return Err(format!("undeclared identifier `{t}`"));
            }
            vec![t.clone()]
        }
        None => {
            let ideals: Vec<String> = model.order.iter().filter(|n| model.ideals.contains_key(*n)).cloned().collect();
            let filtrations: Vec<String> =
                model.order.iter().filter(|n| model.filtrations.contains_key(*n)).cloned().collect();
            if kind.wants_ideal() || filtrations.is_empty() {
                ideals
            } else {
                filtrations
            }
        }
    };
    Ok(targets
        .into_iter()
        .map(|t| {
            let mut task = Task::new(kind, t);
            task.candidate = sel.candidate.clone();
            task.n = sel.n;
            task.window = sel.window;
            task.axis = sel.axis;
            task.candidates = model.candidate_order.clone();
            task
        })
        .collect())
}

/// Parses, resolves and runs one instance.
pub fn run_source(path: &str, text: &str, cfg: &RunConfig, sel: &Selection) -> InstanceReport {
    let mut report = InstanceReport { path: path.to_string(), digest: digest(text), parse_error: None, outcomes: Vec::new() };
    let model = match instance::parse(text).and_then(|f| model::resolve(&f, cfg.rr())) {
        Ok(m) => m,
        Err(e) => {
            report.parse_error = Some(e.to_string());
            return report;
        }
    };
    let tasks = match select(&model, sel) {
        Ok(t) => t,
        Err(e) => {
            report.parse_error = Some(e);
            return report;
        }
    };
    report.outcomes = tasks.iter().enumerate().map(|(i, t)| run_task(&model, t, cfg, i)).collect();
    report
}

fn classify(e: Error) -> Status {
    match e {
        Error::Unsupported(_) | Error::Arity { .. } => Status::Inapplicable(e.to_string()),
        other => Status::Error(other.to_string()),
    }
}

/// Runs one task and checks its expectation, if any.
pub fn run_task(model: &Model, task: &Task, cfg: &RunConfig, index: usize) -> TaskOutcome {
    let start = Instant::now();
    let status = match execute(model, task, cfg) {
        Ok(v) => Status::Ok(Box::new(v)),
        Err(TaskError::Core(e)) => classify(e),
        Err(TaskError::Other(m)) => Status::Error(m),
    };
    let expectation = task.expect.as_ref().map(|expected| {
        let (actual, matched) = match &status {
            Status::Ok(v) => {
                let actual = v.summary();
                let matched = match &**v {
                    TaskValue::Ideal { ideal, .. } => expected_ideal(expected, ideal.ring()).is_some_and(|e| &e == ideal),
                    _ => &actual == expected,
                };
                (Some(actual), matched)
            }
            Status::Inapplicable(_) => {
                let actual = Value::Word("inapplicable".into());
                let matched = &actual == expected;
                (Some(actual), matched)
            }
            Status::Error(_) => (None, false),
        };
        Expectation { expected: expected.to_string(), actual: actual.map(|a| a.to_string()), matched }
    });
    TaskOutcome { index, task: task.text(), status, expectation, elapsed: start.elapsed() }
}

fn expected_ideal(v: &Value, ring: &Arc<AmbientRing>) -> Option<MonomialIdeal> {
    let Value::List(items) = v else { return None };
    let mut gens = Vec::new();
    for item in items {
        let m = match item {
            Value::Monomial(m) => m.clone(),
            Value::Int(one) if *one == BigInt::from(1) => instance::Monomial { pos: Default::default(), factors: vec![] },
            _ => return None,
        };
        let mut e = vec![0u32; ring.num_vars()];
        for f in &m.factors {
            let i = ring.variables().iter().position(|v| *v == f.var.name)?;
            e[i] += f.exponent.unwrap_or(1);
        }
        gens.push(ExponentVector::new(e));
    }
    MonomialIdeal::from_generators(ring, gens).ok()
}

enum TaskError {
    Core(Error),
    Other(String),
}

impl From<Error> for TaskError {
    fn from(e: Error) -> Self {
        TaskError::Core(e)
    }
}

fn filtration_of(model: &Model, name: &str) -> Result<Arc<Filtration>, TaskError> {
    match model.target(name) {
        Some(Target::Ideal(i)) => Ok(Filtration::adic(&i)?),
        Some(Target::Filtration(Ok(f))) => Ok(f),
        Some(Target::Filtration(Err(e))) if e.unsupported => {
            Err(TaskError::Core(Error::Unsupported(format!("filtration `{name}`: {}", e.message.trim_start_matches("unsupported: ")))))
        }
        Some(Target::Filtration(Err(e))) => Err(TaskError::Other(format!("filtration `{name}`: {e}"))),
        None => Err(TaskError::Other(format!("undeclared identifier `{name}`"))),
    }
}

fn ideal_of(model: &Model, name: &str) -> Result<MonomialIdeal, TaskError> {
    model
        .ideal_or_candidate(name)
        .cloned()
        .ok_or_else(|| TaskError::Other(format!("`{name}` is not an ideal")))
}

/// `(lo, hi)` for tables. One axis: from `lo1` to the end of the fit's
/// verification grid. Several axes: `[0, d + 2]`.
fn table_window(task: &Task, cfg: &RunConfig, s: &HilbertSummary, lo1: i64) -> Window {
    if let Some((a, b)) = task.window {
        return Window::new(a, b);
    }
    let d = s.dimension as i64;
    let (lo, hi) = if s.arity == 1 {
        (lo1, s.certificate.base[0] + d + cfg.fit.margin as i64)
    } else {
        (0, d + 2)
    };
    Window::new(lo, cfg.window.unwrap_or(hi).max(lo))
}

fn execute(model: &Model, task: &Task, cfg: &RunConfig) -> Result<TaskValue, TaskError> {
    let check = cfg.check();
    let candidates: Vec<MonomialIdeal> = task.candidates.iter().filter_map(|c| model.candidates.get(c).cloned()).collect();
    match task.kind {
        TaskKind::Coeffs | TaskKind::Mixed => {
            let f = filtration_of(model, &task.target)?;
            let summary = hilbert::fit(&f, cfg.fit)?;
            Ok(TaskValue::Coefficients { filtration: f.to_string(), summary, mixed: task.kind == TaskKind::Mixed })
        }
        TaskKind::Function => {
            let f = filtration_of(model, &task.target)?;
            let s = hilbert::fit(&f, cfg.fit)?;
            let w = table_window(task, cfg, &s, 0);
            let rows = w
                .points(f.arity())
                .into_iter()
                .map(|n| {
                    let v = hilbert::hilbert_function(&f, &n)?;
                    Ok((n, v))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(TaskValue::Function { filtration: f.to_string(), rows })
        }
        TaskKind::Defect => {
            let f = filtration_of(model, &task.target)?;
            let s = hilbert::fit(&f, cfg.fit)?;
            let w = table_window(task, cfg, &s, -(s.dimension as i64) - 1);
            let table = hilbert::defect_table(&f, &s, w)?;
            Ok(TaskValue::Defect { filtration: f.to_string(), table })
        }
        TaskKind::Postulation => {
            let f = filtration_of(model, &task.target)?;
            let s = hilbert::fit(&f, cfg.fit)?;
            let value = hilbert::postulation_number(&s)?;
            Ok(TaskValue::Postulation { filtration: f.to_string(), value })
        }
        TaskKind::Rr => {
            let f = filtration_of(model, &task.target)?;
            let n = task.n.unwrap_or(1);
            let ideal = ratliff_rush_piece(&f, &vec![n; f.arity()], cfg.rr())?;
            let colength = ideal.colength()?;
            Ok(TaskValue::Ideal { operation: "rr", source: f.to_string(), n, ideal, colength })
        }
        TaskKind::IntClosure => {
            let base = ideal_of(model, &task.target)?;
            let n = task.n.unwrap_or(1);
            let ideal = integral_closure_power(&base, n as u32)?;
            let colength = ideal.colength()?;
            Ok(TaskValue::Ideal { operation: "intclosure", source: base.to_string(), n, ideal, colength })
        }
        TaskKind::Cohomology => {
            let f = filtration_of(model, &task.target)?;
            let s = hilbert::fit(&f, cfg.fit)?;
            let w = table_window(task, cfg, &s, -1);
            let rows = hilbert::cohomology_table_dim2(&f, &s, w, cfg.rr())?;
            Ok(TaskValue::Cohomology { filtration: f.to_string(), rows })
        }
        TaskKind::Torsion => {
            let f = filtration_of(model, &task.target)?;
            let s = hilbert::fit(&f, cfg.fit)?;
            let axis = task.axis.unwrap_or(0);
            let w = table_window(task, cfg, &s, 0);
            let w = Window::new(w.lo.max(0), w.hi);
            let rows = hilbert::g_torsion_table(&f, axis, w, cfg.rr())?;
            Ok(TaskValue::Torsion { filtration: f.to_string(), axis, rows })
        }
        TaskKind::Reduction => {
            let f = filtration_of(model, &task.target)?;
            let pool = match &task.candidate {
                Some(c) => vec![ideal_of(model, c)?],
                None => theorems::reduction_candidates(&f, &candidates)?,
            };
            let reports = pool
                .iter()
                .map(|j| theorems::is_reduction(j, &f, check.reduction_window))
                .collect::<Result<Vec<_>, _>>()?;
            let best = reports
                .iter()
                .filter(|r| r.is_reduction && r.minimal)
                .filter_map(|r| r.reduction_number)
                .min();
            Ok(TaskValue::Reduction { filtration: f.to_string(), reports, best })
        }
        TaskKind::Verify(th) => {
            let report = match th {
                Theorem::ItohE2 => theorems::check_itoh_e2(&ideal_of(model, &task.target)?, &candidates, &check)?,
                Theorem::ItohE3 => theorems::check_normal_e3(&ideal_of(model, &task.target)?, &check)?,
                _ => {
                    let f = filtration_of(model, &task.target)?;
                    match th {
                        Theorem::Northcott => theorems::check_northcott(&f, &check)?,
                        Theorem::HunekeOoishi => theorems::check_huneke_ooishi(&f, &candidates, &check)?,
                        Theorem::Sally => theorems::check_sally_postulation(&f, &candidates, &check)?,
                        Theorem::Nonneg => theorems::check_nonnegativity(&f, &check)?,
                        Theorem::Cohomology => theorems::check_dim2_cohomology_identities(&f, &check)?,
                        Theorem::Mgho => theorems::check_multigraded_ho(&f, &candidates, &check)?,
                        Theorem::E2ZeroMulti => theorems::check_e2_zero_multi(&f, &check)?,
                        Theorem::ItohE2 | Theorem::ItohE3 => unreachable!(),
                    }
                }
            };
            Ok(TaskValue::Theorem(report))
        }
    }
}
