//! JSON, CSV and text renderings of instance and corpus reports.
//!
//! JSON object keys are emitted in sorted order and every computed integer
//! is a decimal string. Timing sits in an optional top-level `timing`
//! object so the rest of the document is byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use filtralab_core::hilbert::Postulation;
use filtralab_core::theorems::{Quantity, ReductionReport, TheoremReport};
use filtralab_core::{HilbertSummary, MonomialIdeal};
use num_bigint::BigInt;
use serde_json::{json, Map, Value as Json};

use crate::run::{exit_code, InstanceReport, Status, TaskOutcome, TaskValue};

pub const INSTANCE_FORMAT: &str = "filtralab-report/1";
pub const CORPUS_FORMAT: &str = "filtralab-corpus/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn int(v: &BigInt) -> Json {
    Json::String(v.to_string())
}

fn postulation(p: &Postulation) -> Json {
    Json::String(p.to_string())
}

fn tool() -> Json {
    json!({ "name": "filtralab", "version": env!("CARGO_PKG_VERSION") })
}

fn generators(ideal: &MonomialIdeal) -> Json {
    Json::Array(ideal.generators().iter().map(|g| Json::String(ideal.ring().format_monomial(g))).collect())
}

fn alpha_rows(s: &HilbertSummary) -> Json {
    Json::Array(
        s.polynomial
            .coefficients()
            .iter()
            .map(|(a, e)| json!({ "alpha": a, "value": int(e) }))
            .collect(),
    )
}

fn rows(rows: &[(Vec<i64>, BigInt)], key: &str) -> Json {
    Json::Array(
        rows.iter()
            .map(|(n, v)| {
                let mut m = Map::new();
                m.insert("n".into(), json!(n));
                m.insert(key.into(), int(v));
                Json::Object(m)
            })
            .collect(),
    )
}

fn coefficients(filtration: &str, s: &HilbertSummary, mixed: bool) -> Json {
    let e = if s.arity == 1 && !mixed {
        Json::Array(s.polynomial.univariate_coefficients().iter().map(int).collect())
    } else {
        alpha_rows(s)
    };
    let function: Vec<(Vec<i64>, BigInt)> = s.function_table.iter().map(|(n, v)| (n.clone(), v.clone())).collect();
    json!({
        "kind": if mixed { "mixed" } else { "coefficients" },
        "filtration": filtration,
        "arity": s.arity,
        "dimension": s.dimension,
        "e": e,
        "postulation": s.postulation.as_ref().map(postulation),
        "function": rows(&function, "value"),
        "fit": {
            "base": s.certificate.base,
            "fit_points": s.certificate.fit_points.len(),
            "verification_points": s.certificate.verification_points.len(),
            "attempts": s.certificate.attempts,
        },
    })
}

fn reduction(r: &ReductionReport) -> Json {
    json!({
        "candidate": r.candidate.to_string(),
        "contained": r.contained,
        "is_reduction": r.is_reduction,
        "reduction_number": r.reduction_number.map(|v| v.to_string()),
        "minimal": r.minimal,
        "verified_window": r.verified_window.map(|(a, b)| vec![a, b]),
        "certificate": r.certificate.as_str(),
    })
}

fn quantity(name: &str, q: &Quantity) -> Json {
    let (ty, value) = match q {
        Quantity::Integer(v) => ("integer", int(v)),
        Quantity::Boolean(b) => ("boolean", Json::Bool(*b)),
        Quantity::Text(t) => ("text", Json::String(t.clone())),
    };
    json!({ "name": name, "type": ty, "value": value })
}

fn theorem(r: &TheoremReport) -> Json {
    json!({
        "kind": "theorem",
        "theorem": r.theorem,
        "subject": r.subject,
        "verdict": r.verdict.as_str(),
        "hypotheses": r.hypotheses.iter().map(|h| json!({ "name": h.name, "status": h.status.as_str() })).collect::<Vec<_>>(),
        "quantities": r.quantities.iter().map(|(n, q)| quantity(n, q)).collect::<Vec<_>>(),
        "trail": r.trail,
        "witness": r.witness.as_ref().map(|w| json!({
            "ring": w.ring,
            "filtration": w.filtration,
            "candidates": w.candidates,
            "window": w.window,
        })),
    })
}

pub fn value_json(v: &TaskValue) -> Json {
    match v {
        TaskValue::Coefficients { filtration, summary, mixed } => coefficients(filtration, summary, *mixed),
        TaskValue::Function { filtration, rows: r } => {
            json!({ "kind": "function", "filtration": filtration, "rows": rows(r, "value") })
        }
        TaskValue::Defect { filtration, table } => json!({
            "kind": "defect",
            "filtration": filtration,
            "rows": rows(&table.rows, "chi"),
            "stable_from": table.stable_from,
        }),
        TaskValue::Postulation { filtration, value } => {
            json!({ "kind": "postulation", "filtration": filtration, "postulation": postulation(value) })
        }
        TaskValue::Ideal { operation, source, n, ideal, colength } => json!({
            "kind": operation,
            "source": source,
            "n": n,
            "ideal": ideal.to_string(),
            "generators": generators(ideal),
            "colength": int(colength),
        }),
        TaskValue::Cohomology { filtration, rows } => json!({
            "kind": "cohomology",
            "filtration": filtration,
            "rows": rows.iter().map(|r| json!({ "n": r.n, "h1": int(&r.h1), "h2": int(&r.h2), "derived": r.derived })).collect::<Vec<_>>(),
        }),
        TaskValue::Torsion { filtration, axis, rows: r } => {
            json!({ "kind": "torsion", "filtration": filtration, "axis": axis + 1, "rows": rows(r, "value") })
        }
        TaskValue::Reduction { filtration, reports, best } => json!({
            "kind": "reduction",
            "filtration": filtration,
            "candidates": reports.iter().map(reduction).collect::<Vec<_>>(),
            "reduction_number": best.map(|v| v.to_string()),
            "relative_to": "candidates",
        }),
        TaskValue::Theorem(r) => theorem(r),
    }
}

/// `verified`, `violated`, ... for checks; `matched` / `mismatch` for
/// expectations; otherwise the task status.
pub fn outcome_label(o: &TaskOutcome) -> &'static str {
    if let Some(e) = &o.expectation {
        if e.actual.is_some() {
            return if e.matched { "matched" } else { "mismatch" };
        }
    }
    match &o.status {
        Status::Ok(v) => v.verdict().map_or("ok", |v| v.as_str()),
        Status::Inapplicable(_) => "inapplicable",
        Status::Error(_) => "error",
    }
}

fn outcome_json(o: &TaskOutcome) -> Json {
    let mut m = Map::new();
    m.insert("index".into(), json!(o.index));
    m.insert("task".into(), json!(o.task));
    match &o.status {
        Status::Ok(v) => {
            m.insert("status".into(), json!("ok"));
            m.insert("result".into(), value_json(v));
        }
        Status::Inapplicable(msg) => {
            m.insert("status".into(), json!("inapplicable"));
            m.insert("message".into(), json!(msg));
        }
        Status::Error(msg) => {
            m.insert("status".into(), json!("error"));
            m.insert("message".into(), json!(msg));
        }
    }
    if let Some(e) = &o.expectation {
        m.insert("expect".into(), json!({ "expected": e.expected, "actual": e.actual, "matched": e.matched }));
    }
    Json::Object(m)
}

fn counts<'a>(outcomes: impl IntoIterator<Item = &'a TaskOutcome>) -> Json {
    let mut c: BTreeMap<&str, usize> = BTreeMap::new();
    for o in outcomes {
        *c.entry(outcome_label(o)).or_default() += 1;
    }
    json!(c)
}

fn instance_body(r: &InstanceReport) -> Map<String, Json> {
    let mut m = Map::new();
    m.insert("instance".into(), json!({ "path": r.path, "sha256": r.digest }));
    if let Some(e) = &r.parse_error {
        m.insert("parse_error".into(), json!(e));
    }
    m.insert("tasks".into(), Json::Array(r.outcomes.iter().map(outcome_json).collect()));
    m.insert("summary".into(), json!({ "counts": counts(&r.outcomes), "exit_code": r.exit_code() }));
    m
}

fn ms(d: std::time::Duration) -> Json {
    json!(d.as_secs_f64() * 1e3)
}

pub fn instance_json(r: &InstanceReport, timing: bool) -> Json {
    let mut m = instance_body(r);
    m.insert("format".into(), json!(INSTANCE_FORMAT));
    m.insert("tool".into(), tool());
    if timing {
        let tasks: Vec<Json> = r.outcomes.iter().map(|o| json!({ "index": o.index, "ms": ms(o.elapsed) })).collect();
        m.insert("timing".into(), json!({ "tasks": tasks }));
    }
    Json::Object(m)
}

pub fn corpus_json(reports: &[InstanceReport], timing: bool) -> Json {
    let mut table = Vec::new();
    let mut violations = Vec::new();
    let mut errors = Vec::new();
    for r in reports {
        if let Some(e) = &r.parse_error {
            errors.push(json!({ "instance": r.path, "task": null, "message": e }));
        }
        for o in &r.outcomes {
            table.push(json!({ "instance": r.path, "task": o.task, "outcome": outcome_label(o) }));
            if o.violated() {
                let mut v = Map::new();
                v.insert("instance".into(), json!(r.path));
                v.insert("task".into(), json!(o.task));
                if let Status::Ok(value) = &o.status {
                    if let TaskValue::Theorem(t) = &**value {
                        if let Some(w) = &theorem(t).get("witness") {
                            v.insert("witness".into(), (*w).clone());
                        }
                    }
                }
                if let Some(e) = &o.expectation {
                    v.insert("expect".into(), json!({ "expected": e.expected, "actual": e.actual }));
                }
                violations.push(Json::Object(v));
            }
            if let Status::Error(msg) = &o.status {
                errors.push(json!({ "instance": r.path, "task": o.task, "message": msg }));
            }
        }
    }
    let mut m = Map::new();
    m.insert("format".into(), json!(CORPUS_FORMAT));
    m.insert("tool".into(), tool());
    m.insert("instances".into(), Json::Array(reports.iter().map(|r| Json::Object(instance_body(r))).collect()));
    m.insert(
        "summary".into(),
        json!({
            "instances": reports.len(),
            "counts": counts(reports.iter().flat_map(|r| &r.outcomes)),
            "table": table,
            "violations": violations,
            "errors": errors,
            "exit_code": exit_code(reports),
        }),
    );
    if timing {
        let per: Vec<Json> = reports
            .iter()
            .map(|r| json!({ "instance": r.path, "ms": ms(r.outcomes.iter().map(|o| o.elapsed).sum()) }))
            .collect();
        m.insert("timing".into(), json!({ "instances": per }));
    }
    Json::Object(m)
}

pub fn to_json_string(v: &Json) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_index_header(prefix: &str, s: usize) -> Vec<String> {
    if s == 1 {
        vec![prefix.to_string()]
    } else {
        (1..=s).map(|i| format!("{prefix}_{i}")).collect()
    }
}

fn csv_table(header: &[String], body: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in body {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_rows(rows: &[(Vec<i64>, BigInt)], value: &str) -> String {
    let s = rows.first().map_or(1, |(n, _)| n.len());
    let mut header = csv_index_header("n", s);
    header.push(value.to_string());
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|(n, v)| n.iter().map(|x| x.to_string()).chain([v.to_string()]).collect())
        .collect();
    csv_table(&header, &body)
}

pub fn value_csv(v: &TaskValue) -> String {
    match v {
        TaskValue::Coefficients { summary, mixed, .. } => {
            if summary.arity == 1 && !mixed {
                let body: Vec<Vec<String>> = summary
                    .polynomial
                    .univariate_coefficients()
                    .iter()
                    .enumerate()
                    .map(|(i, e)| vec![i.to_string(), e.to_string()])
                    .collect();
                csv_table(&["i".into(), "e_i".into()], &body)
            } else {
                let mut header = csv_index_header("alpha", summary.arity);
                header.push("e_alpha".into());
                let body: Vec<Vec<String>> = summary
                    .polynomial
                    .coefficients()
                    .iter()
                    .map(|(a, e)| a.iter().map(|x| x.to_string()).chain([e.to_string()]).collect())
                    .collect();
                csv_table(&header, &body)
            }
        }
        TaskValue::Function { rows, .. } => csv_rows(rows, "H"),
        TaskValue::Defect { table, .. } => csv_rows(&table.rows, "chi"),
        TaskValue::Torsion { rows, .. } => csv_rows(rows, "length"),
        TaskValue::Postulation { value, .. } => csv_table(&["postulation".into()], &[vec![value.to_string()]]),
        TaskValue::Ideal { ideal, .. } => {
            let body: Vec<Vec<String>> =
                ideal.generators().iter().map(|g| vec![ideal.ring().format_monomial(g)]).collect();
            csv_table(&["generator".into()], &body)
        }
        TaskValue::Cohomology { rows, .. } => {
            let s = rows.first().map_or(1, |r| r.n.len());
            let mut header = csv_index_header("n", s);
            header.extend(["h1".into(), "h2".into()]);
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.n.iter().map(|x| x.to_string()).chain([r.h1.to_string(), r.h2.to_string()]).collect())
                .collect();
            csv_table(&header, &body)
        }
        TaskValue::Reduction { reports, .. } => {
            let header: Vec<String> =
                ["candidate", "is_reduction", "reduction_number", "minimal", "certificate"].map(String::from).to_vec();
            let body: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        csv_quote(&r.candidate.to_string()),
                        r.is_reduction.to_string(),
                        r.reduction_number.map_or(String::new(), |v| v.to_string()),
                        r.minimal.to_string(),
                        r.certificate.as_str().to_string(),
                    ]
                })
                .collect();
            csv_table(&header, &body)
        }
        TaskValue::Theorem(r) => {
            let mut body: Vec<Vec<String>> =
                r.quantities.iter().map(|(n, q)| vec![csv_quote(n), csv_quote(&q.to_string())]).collect();
            body.push(vec!["verdict".into(), r.verdict.as_str().into()]);
            csv_table(&["quantity".into(), "value".into()], &body)
        }
    }
}

fn outcome_csv(o: &TaskOutcome) -> String {
    match &o.status {
        Status::Ok(v) => value_csv(v),
        Status::Inapplicable(msg) => format!("# inapplicable: {msg}\n"),
        Status::Error(msg) => format!("# error: {msg}\n"),
    }
}

/// A single task prints a bare table; several are separated by a blank line
/// and a `# task:` header.
pub fn instance_csv(r: &InstanceReport) -> String {
    if let Some(e) = &r.parse_error {
        return format!("# error: {e}\n");
    }
    if r.outcomes.len() == 1 {
        return outcome_csv(&r.outcomes[0]);
    }
    let parts: Vec<String> = r.outcomes.iter().map(|o| format!("# task: {}\n{}", o.task, outcome_csv(o))).collect();
    parts.join("\n")
}

pub fn corpus_csv(reports: &[InstanceReport]) -> String {
    let mut body = Vec::new();
    for r in reports {
        if r.parse_error.is_some() {
            body.push(vec![csv_quote(&r.path), String::new(), "error".into()]);
        }
        for o in &r.outcomes {
            body.push(vec![csv_quote(&r.path), csv_quote(&o.task), outcome_label(o).into()]);
        }
    }
    csv_table(&["instance".into(), "task".into(), "outcome".into()], &body)
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    format!("[{}]", items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn index(n: &[i64]) -> String {
    if n.len() == 1 {
        n[0].to_string()
    } else {
        format!("({})", n.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
    }
}

pub fn value_text(v: &TaskValue) -> String {
    let mut out = String::new();
    match v {
        TaskValue::Coefficients { filtration, summary, mixed } => {
            let _ = writeln!(out, "  filtration {filtration}, dimension {}", summary.dimension);
            if summary.arity == 1 && !mixed {
                let _ = writeln!(out, "  e = {}", list(summary.polynomial.univariate_coefficients()));
            } else {
                for (a, e) in summary.polynomial.coefficients() {
                    let _ = writeln!(out, "  e_{} = {e}", index(&a.iter().map(|&x| x as i64).collect::<Vec<_>>()));
                }
            }
            if let Some(p) = &summary.postulation {
                let _ = writeln!(out, "  postulation number {p}");
            }
        }
        TaskValue::Function { filtration, rows } => {
            let _ = writeln!(out, "  filtration {filtration}");
            for (n, h) in rows {
                let _ = writeln!(out, "  H({}) = {h}", index(n));
            }
        }
        TaskValue::Defect { filtration, table } => {
            let _ = writeln!(out, "  filtration {filtration}");
            for (n, c) in &table.rows {
                let _ = writeln!(out, "  chi({}) = {c}", index(n));
            }
        }
        TaskValue::Postulation { filtration, value } => {
            let _ = writeln!(out, "  filtration {filtration}\n  postulation number {value}");
        }
        TaskValue::Ideal { operation, source, n, ideal, colength } => {
            let _ = writeln!(out, "  {operation} of {source} at n = {n}\n  {ideal}\n  colength {colength}");
        }
        TaskValue::Cohomology { filtration, rows } => {
            let _ = writeln!(out, "  filtration {filtration}");
            for r in rows {
                let mark = if r.derived { " (derived)" } else { "" };
                let _ = writeln!(out, "  n = {}: h1 = {}, h2 = {}{mark}", index(&r.n), r.h1, r.h2);
            }
        }
        TaskValue::Torsion { filtration, axis, rows } => {
            let _ = writeln!(out, "  filtration {filtration}, axis {}", axis + 1);
            for (n, v) in rows {
                let _ = writeln!(out, "  n = {}: {v}", index(n));
            }
        }
        TaskValue::Reduction { filtration, reports, best } => {
            let _ = writeln!(out, "  filtration {filtration}");
            for r in reports {
                let status = match (r.is_reduction, r.reduction_number) {
                    (true, Some(k)) => format!("reduction, r = {k}"),
                    _ if !r.contained => "not contained in F(1)".to_string(),
                    _ => "not a reduction".to_string(),
                };
                let minimal = if r.minimal { ", minimal" } else { "" };
                let _ = writeln!(out, "  {}: {status}{minimal}", r.candidate);
            }
            let best = best.map_or("none".to_string(), |b| b.to_string());
            let _ = writeln!(out, "  reduction number over minimal candidates: {best}");
        }
        TaskValue::Theorem(r) => {
            let _ = writeln!(out, "  {} on {}: {}", r.theorem, r.subject, r.verdict);
            for h in &r.hypotheses {
                let _ = writeln!(out, "  hypothesis {}: {}", h.name, h.status.as_str());
            }
            for (n, q) in &r.quantities {
                let _ = writeln!(out, "  {n} = {q}");
            }
        }
    }
    out
}

pub fn instance_text(r: &InstanceReport) -> String {
    let mut out = format!("{} (sha256 {})\n", r.path, &r.digest[..12]);
    if let Some(e) = &r.parse_error {
        let _ = writeln!(out, "error: {e}");
        return out;
    }
    for o in &r.outcomes {
        let _ = writeln!(out, "{}: {}", o.task, outcome_label(o));
        match &o.status {
            Status::Ok(v) => out.push_str(&value_text(v)),
            Status::Inapplicable(msg) | Status::Error(msg) => {
                let _ = writeln!(out, "  {msg}");
            }
        }
        if let Some(e) = &o.expectation {
            let actual = e.actual.as_deref().unwrap_or("-");
            let _ = writeln!(out, "  expected {}, got {actual}", e.expected);
        }
    }
    out
}

pub fn corpus_text(reports: &[InstanceReport]) -> String {
    let mut out = String::new();
    let width = reports
        .iter()
        .flat_map(|r| r.outcomes.iter().map(move |o| r.path.len() + o.task.len() + 2))
        .max()
        .unwrap_or(0);
    for r in reports {
        if let Some(e) = &r.parse_error {
            let _ = writeln!(out, "{}  error: {e}", r.path);
        }
        for o in &r.outcomes {
            let key = format!("{}  {}", r.path, o.task);
            let _ = writeln!(out, "{key:width$}  {}", outcome_label(o));
        }
    }
    let all: Vec<&TaskOutcome> = reports.iter().flat_map(|r| &r.outcomes).collect();
    let violated = all.iter().filter(|o| o.violated()).count();
    let errors = all.iter().filter(|o| o.failed()).count() + reports.iter().filter(|r| r.parse_error.is_some()).count();
    let _ = writeln!(
        out,
        "{} instances, {} tasks, {violated} violated, {errors} errors; exit {}",
        reports.len(),
        all.len(),
        exit_code(reports)
    );
    out
}

pub fn render_instance(r: &InstanceReport, format: Format, timing: bool) -> String {
    match format {
        Format::Json => to_json_string(&instance_json(r, timing)),
        Format::Csv => instance_csv(r),
        Format::Text => instance_text(r),
    }
}

pub fn render_corpus(reports: &[InstanceReport], format: Format, timing: bool) -> String {
    match format {
        Format::Json => to_json_string(&corpus_json(reports, timing)),
        Format::Csv => corpus_csv(reports),
        Format::Text => corpus_text(reports),
    }
}
