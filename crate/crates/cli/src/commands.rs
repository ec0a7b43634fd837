//! Subcommand implementations: thin orchestration over critlab-core.

use crate::runlog::RunLog;
use crate::stream::{map_lines, open_output, write_jsonl, StreamInput};
use crate::StreamArgs;
use anyhow::{bail, Context, Result};
use critlab_core::bounds::{
    bound_value, check_main_theorem, k2_component_census, verify_proof_chain, BoundName,
    ProofChainReport,
};
use critlab_core::choosability::{is_choosable_with_cap, ListAssignment, ListSizes};
use critlab_core::criticality::{criticality, Caps, CriticalityKind, FailureReason};
use critlab_core::graph::iter_bits;
use critlab_core::graph6;
use critlab_core::paintability::is_paintable_with_cap;
use critlab_core::ratio::Exact;
use critlab_core::structure::{
    beta, check_gallai_structure, check_gallai_tree_bound, check_kernel_magic_with_cap,
    check_mic_combination, enumerate_gallai_trees, mic_with_cap, InequalityCheck,
};
use critlab_core::{Error, Graph};
use serde::Serialize;
use serde_json::json;
use std::io::Write;

/// What the process should report via its exit code.
pub enum Outcome {
    Clean,
    ViolationFound,
    InputErrors,
}

impl Outcome {
    fn combine(violation: bool, input_errors: bool) -> Outcome {
        if violation {
            Outcome::ViolationFound
        } else if input_errors {
            Outcome::InputErrors
        } else {
            Outcome::Clean
        }
    }
}

fn caps_of(stream: &StreamArgs) -> Caps {
    Caps {
        choosable: stream.choosable_cap,
        paintable: stream.paintable_cap,
        exact: stream.exact_cap,
    }
}

fn witness_lists(la: &ListAssignment) -> Vec<Vec<usize>> {
    la.lists.iter().map(|&l| iter_bits(l).collect()).collect()
}

fn parse_kind(kind: &str) -> Result<CriticalityKind> {
    match kind {
        "chromatic" => Ok(CriticalityKind::Chromatic),
        "list" => Ok(CriticalityKind::List),
        "online" => Ok(CriticalityKind::Online),
        other => bail!("unknown criticality kind {other:?} (chromatic|list|online)"),
    }
}

/// Parses "4..10,15,20" into sorted k values.
fn parse_k_spec(spec: &str) -> Result<Vec<usize>> {
    let mut ks = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (
                    a.parse()
                        .with_context(|| format!("bad range start {a:?}"))?,
                    b.parse().with_context(|| format!("bad range end {b:?}"))?,
                );
                if a > b {
                    bail!("empty range {part:?}");
                }
                ks.extend(a..=b);
            }
            None => ks.push(
                part.parse()
                    .with_context(|| format!("bad k value {part:?}"))?,
            ),
        }
    }
    if ks.is_empty() {
        bail!("no k values in {spec:?}");
    }
    Ok(ks)
}

pub fn bounds_table(kspec: &str, output: &str, log: Option<&str>) -> Result<Outcome> {
    let ks = parse_k_spec(kspec)?;
    let runlog = RunLog::start(json!({"subcommand": "bounds-table", "k": kspec}), None, 0);
    let mut out = open_output(output)?;
    writeln!(out, "k\tgallai_ref\tky_ref\there\tconjecture")?;
    let mut rows = Vec::new();
    for &k in &ks {
        let cells: Vec<String> = [
            BoundName::GallaiRef,
            BoundName::KyRef,
            BoundName::Here,
            BoundName::Conjecture,
        ]
        .iter()
        .map(|&name| Ok(bound_value(name, k)?.decimal_4))
        .collect::<Result<_, Error>>()?;
        writeln!(out, "{k}\t{}", cells.join("\t"))?;
        rows.push(json!({"k": k, "cells": cells}));
    }
    out.flush()?;
    runlog.append(log, json!({"rows": rows.len()}), rows)?;
    Ok(Outcome::Clean)
}

#[derive(Serialize)]
struct ChoosableRecord {
    index: usize,
    graph6: String,
    f: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    choosable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn choosable(f: usize, stream: &StreamArgs) -> Result<Outcome> {
    let input = StreamInput::read(&stream.input)?;
    let lines = input.lines();
    let runlog = RunLog::start(
        json!({"subcommand": "choosable", "f": f, "caps": caps_of(stream)}),
        Some(&input.raw),
        lines.len(),
    );
    let cap = stream.choosable_cap;
    let records = map_lines(&lines, stream.threads, |index, line| {
        let mut rec = ChoosableRecord {
            index,
            graph6: line.to_string(),
            f,
            choosable: None,
            witness: None,
            skipped: None,
            error: None,
        };
        match graph6::decode(line)
            .and_then(|g| is_choosable_with_cap(&g, &ListSizes::constant(g.n(), f), cap))
        {
            Ok(verdict) => {
                rec.choosable = Some(verdict.choosable);
                rec.witness = verdict.witness.as_ref().map(witness_lists);
            }
            Err(e @ Error::Capacity { .. }) => rec.skipped = Some(e.to_string()),
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    });
    let mut out = open_output(&stream.output)?;
    write_jsonl(out.as_mut(), &records)?;
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let yes = records.iter().filter(|r| r.choosable == Some(true)).count();
    let summary = json!({"graphs": records.len(), "choosable": yes, "errors": errors});
    eprintln!("choosable: {summary}");
    runlog.append(
        stream.log.as_deref(),
        summary,
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(false, errors > 0))
}

#[derive(Serialize)]
struct PaintableRecord {
    index: usize,
    graph6: String,
    f: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    paintable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn paintable(f: usize, stream: &StreamArgs) -> Result<Outcome> {
    let input = StreamInput::read(&stream.input)?;
    let lines = input.lines();
    let runlog = RunLog::start(
        json!({"subcommand": "paintable", "f": f, "caps": caps_of(stream)}),
        Some(&input.raw),
        lines.len(),
    );
    let cap = stream.paintable_cap;
    let records = map_lines(&lines, stream.threads, |index, line| {
        let mut rec = PaintableRecord {
            index,
            graph6: line.to_string(),
            f,
            paintable: None,
            skipped: None,
            error: None,
        };
        match graph6::decode(line)
            .and_then(|g| is_paintable_with_cap(&g, &ListSizes::constant(g.n(), f), cap))
        {
            Ok(p) => rec.paintable = Some(p),
            Err(e @ Error::Capacity { .. }) => rec.skipped = Some(e.to_string()),
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    });
    let mut out = open_output(&stream.output)?;
    write_jsonl(out.as_mut(), &records)?;
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let summary = json!({
        "graphs": records.len(),
        "paintable": records.iter().filter(|r| r.paintable == Some(true)).count(),
        "errors": errors,
    });
    eprintln!("paintable: {summary}");
    runlog.append(
        stream.log.as_deref(),
        summary,
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(false, errors > 0))
}

#[derive(Serialize)]
struct CriticalRecord {
    index: usize,
    graph6: String,
    kind: CriticalityKind,
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure_reason: Option<FailureReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_edge: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bad_assignment: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// Shared by `critical` (full witnesses) and `filter` (compact records).
pub fn critical(kind: &str, k: usize, stream: &StreamArgs, compact: bool) -> Result<Outcome> {
    let kind = parse_kind(kind)?;
    let caps = caps_of(stream);
    let input = StreamInput::read(&stream.input)?;
    let lines = input.lines();
    let runlog = RunLog::start(
        json!({
            "subcommand": if compact { "filter" } else { "critical" },
            "kind": kind, "k": k, "caps": caps,
        }),
        Some(&input.raw),
        lines.len(),
    );
    if compact {
        let records = map_lines(&lines, stream.threads, |index, line| {
            critlab_core::criticality::evaluate_line(index, line, kind, k, &caps)
        });
        let mut out = open_output(&stream.output)?;
        write_jsonl(out.as_mut(), &records)?;
        let errors = records.iter().filter(|r| r.error.is_some()).count();
        let summary = json!({
            "graphs": records.len(),
            "critical": records.iter().filter(|r| r.verdict == Some(true)).count(),
            "skipped": records.iter().filter(|r| r.skipped.is_some()).count(),
            "errors": errors,
        });
        eprintln!("filter: {summary}");
        runlog.append(
            stream.log.as_deref(),
            summary,
            records
                .iter()
                .map(|r| serde_json::to_value(r).unwrap())
                .collect(),
        )?;
        return Ok(Outcome::combine(false, errors > 0));
    }

    let records = map_lines(&lines, stream.threads, |index, line| {
        let mut rec = CriticalRecord {
            index,
            graph6: line.to_string(),
            kind,
            k,
            verdict: None,
            failure_reason: None,
            witness_edge: None,
            bad_assignment: None,
            skipped: None,
            error: None,
        };
        match graph6::decode(line).and_then(|g| criticality(&g, kind, k, &caps)) {
            Ok(report) => {
                rec.verdict = Some(report.verdict);
                rec.failure_reason = report.failure_reason;
                rec.witness_edge = report.witness_edge;
                rec.bad_assignment = report.bad_assignment.as_ref().map(witness_lists);
            }
            Err(e @ Error::Capacity { .. }) => rec.skipped = Some(e.to_string()),
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    });
    let mut out = open_output(&stream.output)?;
    write_jsonl(out.as_mut(), &records)?;
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let summary = json!({
        "graphs": records.len(),
        "critical": records.iter().filter(|r| r.verdict == Some(true)).count(),
        "errors": errors,
    });
    eprintln!("critical: {summary}");
    runlog.append(
        stream.log.as_deref(),
        summary,
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(false, errors > 0))
}

#[derive(Serialize)]
struct GallaiRecord {
    graph6: String,
    n: usize,
    m: usize,
    beta: usize,
    lhs: Exact,
    rhs: Exact,
    holds: bool,
    tight: bool,
}

pub fn gallai_verify(
    k: usize,
    nmax: usize,
    output: &str,
    extremes_only: bool,
    log: Option<&str>,
) -> Result<Outcome> {
    if k < 4 {
        bail!("the Gallai tree bound needs k >= 4");
    }
    let runlog = RunLog::start(
        json!({"subcommand": "gallai-verify", "k": k, "nmax": nmax, "extremes_only": extremes_only}),
        None,
        0,
    );
    let trees = enumerate_gallai_trees(nmax, k - 1)?;
    let mut records = Vec::new();
    let mut checked = 0usize;
    let mut violations = 0usize;
    let mut tight = 0usize;
    for tree in &trees {
        if tree.n() == k && tree.is_complete() {
            continue; // the excluded K_k
        }
        let check = check_gallai_tree_bound(tree, k)?;
        checked += 1;
        if !check.holds {
            violations += 1;
        }
        if check.tight {
            tight += 1;
        }
        if !extremes_only || !check.holds || check.tight {
            records.push(GallaiRecord {
                graph6: graph6::encode(tree),
                n: tree.n(),
                m: tree.edge_count(),
                beta: beta(tree, k),
                lhs: check.lhs,
                rhs: check.rhs,
                holds: check.holds,
                tight: check.tight,
            });
        }
    }
    let mut out = open_output(output)?;
    write_jsonl(out.as_mut(), &records)?;
    eprintln!("gallai-verify k={k} nmax={nmax}: checked {checked} trees, {violations} violations, {tight} tight");
    runlog.append(
        log,
        json!({"checked": checked, "violations": violations, "tight": tight}),
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(violations > 0, false))
}

#[derive(Serialize)]
struct MicRecord {
    index: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    mic: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    independent_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn mic(stream: &StreamArgs) -> Result<Outcome> {
    let input = StreamInput::read(&stream.input)?;
    let lines = input.lines();
    let runlog = RunLog::start(
        json!({"subcommand": "mic", "caps": caps_of(stream)}),
        Some(&input.raw),
        lines.len(),
    );
    let cap = stream.exact_cap;
    let records = map_lines(&lines, stream.threads, |index, line| {
        let mut rec = MicRecord {
            index,
            graph6: line.to_string(),
            mic: None,
            independent_set: None,
            skipped: None,
            error: None,
        };
        match graph6::decode(line).and_then(|g| mic_with_cap(&g, cap)) {
            Ok(w) => {
                rec.mic = Some(w.value);
                rec.independent_set = Some(iter_bits(w.independent_set).collect());
            }
            Err(e @ Error::Capacity { .. }) => rec.skipped = Some(e.to_string()),
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    });
    let mut out = open_output(&stream.output)?;
    write_jsonl(out.as_mut(), &records)?;
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    runlog.append(
        stream.log.as_deref(),
        json!({"graphs": records.len(), "errors": errors}),
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(false, errors > 0))
}

#[derive(Serialize)]
struct KernelMagicRecord {
    index: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<InequalityCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mic: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gallai_structure_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn kernel_magic(k: usize, stream: &StreamArgs) -> Result<Outcome> {
    if k < 1 {
        bail!("kernel-magic needs k >= 1");
    }
    let caps = caps_of(stream);
    let input = StreamInput::read(&stream.input)?;
    let lines = input.lines();
    let runlog = RunLog::start(
        json!({"subcommand": "kernel-magic", "k": k, "caps": caps}),
        Some(&input.raw),
        lines.len(),
    );
    let records = map_lines(&lines, stream.threads, |index, line| {
        let mut rec = KernelMagicRecord {
            index,
            graph6: line.to_string(),
            checks: Vec::new(),
            beta: None,
            mic: None,
            gallai_structure_ok: None,
            skipped: None,
            error: None,
        };
        let evaluate = |g: &Graph| -> Result<_, Error> {
            let kernel = check_kernel_magic_with_cap(g, k, caps.exact)?;
            let combo = check_mic_combination(g, k, caps.exact)?;
            Ok((kernel, combo))
        };
        match graph6::decode(line).and_then(|g| evaluate(&g).map(|r| (g, r))) {
            Ok((g, (kernel, combo))) => {
                rec.beta = Some(beta(&g, k));
                rec.mic = Some(combo.mic.value);
                rec.gallai_structure_ok = Some(check_gallai_structure(&g, k).ok);
                rec.checks = vec![kernel, combo.check];
            }
            Err(e @ Error::Capacity { .. }) => rec.skipped = Some(e.to_string()),
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    });
    let mut out = open_output(&stream.output)?;
    write_jsonl(out.as_mut(), &records)?;
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let violations = records
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| !c.holds)
        .count();
    let summary = json!({"graphs": records.len(), "violations": violations, "errors": errors});
    eprintln!("kernel-magic: {summary}");
    runlog.append(
        stream.log.as_deref(),
        summary,
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(violations > 0, errors > 0))
}

#[derive(Serialize)]
struct ProofChainRecord {
    index: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    main_theorem: Option<InequalityCheck>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    report: Option<ProofChainReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn proof_chain(k: usize, stream: &StreamArgs) -> Result<Outcome> {
    if k < 4 {
        bail!("the proof chain needs k >= 4 (the statement is trivial below)");
    }
    let caps = caps_of(stream);
    let input = StreamInput::read(&stream.input)?;
    let lines = input.lines();
    let runlog = RunLog::start(
        json!({"subcommand": "proof-chain", "k": k, "caps": caps}),
        Some(&input.raw),
        lines.len(),
    );
    let records = map_lines(&lines, stream.threads, |index, line| {
        let mut rec = ProofChainRecord {
            index,
            graph6: line.to_string(),
            main_theorem: None,
            report: None,
            skipped: None,
            error: None,
        };
        let evaluate = |g: &Graph| -> Result<_, Error> {
            let mt = check_main_theorem(g, k)?;
            let report = verify_proof_chain(g, k, caps.exact)?;
            Ok((mt, report))
        };
        match graph6::decode(line).and_then(|g| evaluate(&g)) {
            Ok((mt, report)) => {
                rec.main_theorem = Some(mt);
                rec.report = Some(report);
            }
            Err(e @ Error::Capacity { .. }) => rec.skipped = Some(e.to_string()),
            Err(e @ Error::Precondition(_)) => rec.skipped = Some(e.to_string()),
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    });
    let mut out = open_output(&stream.output)?;
    write_jsonl(out.as_mut(), &records)?;
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let violations = records
        .iter()
        .filter(|r| {
            r.report.as_ref().is_some_and(|rep| !rep.all_hold)
                || r.main_theorem.as_ref().is_some_and(|c| !c.holds)
        })
        .count();
    let summary = json!({
        "graphs": records.len(),
        "verified": records.iter().filter(|r| r.report.as_ref().is_some_and(|rep| rep.all_hold)).count(),
        "violations": violations,
        "skipped": records.iter().filter(|r| r.skipped.is_some()).count(),
        "errors": errors,
    });
    eprintln!("proof-chain: {summary}");
    runlog.append(
        stream.log.as_deref(),
        summary,
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(violations > 0, errors > 0))
}

#[derive(Serialize)]
struct ConjectureRecord {
    index: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    avg_degree: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjecture_bound: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tight: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k2_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k2_components: Option<Vec<Vec<usize>>>,
    /// Whether every non-exceptional component meets the strengthened
    /// k|C| form of the per-component bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    strengthened_ok_outside_k2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn conjecture_census(k: usize, stream: &StreamArgs) -> Result<Outcome> {
    if k < 2 {
        bail!("conjecture-census needs k >= 2");
    }
    let caps = caps_of(stream);
    let input = StreamInput::read(&stream.input)?;
    let lines = input.lines();
    let runlog = RunLog::start(
        json!({"subcommand": "conjecture-census", "k": k, "caps": caps}),
        Some(&input.raw),
        lines.len(),
    );
    let conjecture = bound_value(BoundName::Conjecture, k)?;
    let records = map_lines(&lines, stream.threads, |index, line| {
        let mut rec = ConjectureRecord {
            index,
            graph6: line.to_string(),
            avg_degree: None,
            conjecture_bound: None,
            holds: None,
            tight: None,
            k2_count: None,
            k2_components: None,
            strengthened_ok_outside_k2: None,
            skipped: None,
            error: None,
        };
        let evaluate = |g: &Graph| -> Result<_, Error> {
            if g.n() == k && g.is_complete() {
                return Err(Error::Precondition(
                    "G = K_k: the conjecture assumes an incomplete graph".into(),
                ));
            }
            if g.n() == 0 {
                return Err(Error::Contract("empty graph".into()));
            }
            let census = k2_component_census(g, k, caps.exact)?;
            Ok(census)
        };
        match graph6::decode(line).and_then(|g| evaluate(&g).map(|c| (g, c))) {
            Ok((g, census)) => {
                let avg = critlab_core::graph::degree_profile(&g, 1).average_degree;
                rec.avg_degree = Some(avg);
                rec.conjecture_bound = Some(conjecture.value);
                rec.holds = Some(avg.0 >= conjecture.value.0);
                rec.tight = Some(avg.0 == conjecture.value.0);
                rec.k2_count = Some(census.count);
                rec.k2_components = Some(
                    census
                        .k2_components
                        .iter()
                        .map(|&m| iter_bits(m).collect())
                        .collect(),
                );
                rec.strengthened_ok_outside_k2 = Some(
                    census
                        .components
                        .iter()
                        .filter(|c| !c.is_k2_both_degree_k)
                        .all(|c| c.strengthened_holds),
                );
            }
            Err(e @ Error::Capacity { .. }) => rec.skipped = Some(e.to_string()),
            Err(e @ Error::Precondition(_)) => rec.skipped = Some(e.to_string()),
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    });
    let mut out = open_output(&stream.output)?;
    write_jsonl(out.as_mut(), &records)?;
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let violations = records.iter().filter(|r| r.holds == Some(false)).count();
    let mut k2_distribution = std::collections::BTreeMap::new();
    for r in &records {
        if let Some(c) = r.k2_count {
            *k2_distribution.entry(c).or_insert(0usize) += 1;
        }
    }
    let summary = json!({
        "graphs": records.len(),
        "conjecture_violations": violations,
        "k2_distribution": k2_distribution,
        "errors": errors,
    });
    eprintln!("conjecture-census: {summary}");
    runlog.append(
        stream.log.as_deref(),
        summary,
        records
            .iter()
            .map(|r| serde_json::to_value(r).unwrap())
            .collect(),
    )?;
    Ok(Outcome::combine(violations > 0, errors > 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_spec_parser() {
        assert_eq!(
            parse_k_spec("4..10,15,20").unwrap(),
            vec![4, 5, 6, 7, 8, 9, 10, 15, 20]
        );
        assert_eq!(parse_k_spec("7").unwrap(), vec![7]);
        assert!(parse_k_spec("10..4").is_err());
        assert!(parse_k_spec("").is_err());
        assert!(parse_k_spec("x").is_err());
    }
}
