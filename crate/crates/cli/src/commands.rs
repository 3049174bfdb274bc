use std::path::Path;

use serde_json::{json, Value};

use crosskit_bounds::{status_report, Assumptions, BoundReport, CSV_HEADER};
use crosskit_gen::{cylinder_k11mn, random_geometric_drawing, zarankiewicz_drawing};
use crosskit_graph::{parse_graph_spec, Graph};
use crosskit_lemma::{lemma1_d1, lemma1_d2, Lemma1Context};
use crosskit_map::{encode, Drawing};
use crosskit_oracle::{exact_crossing_number_with, verify_witness, OracleError, SearchOptions, Witness};

use crate::args::{Assume, BoundsArgs, Command, ExactArgs, Format, GenKind, TransformArgs, TransformKind};
use crate::{load_drawing, read_file, verify, write_file, CliError, CommandOutcome, Ctx};

pub(crate) fn dispatch(cmd: Command, ctx: &Ctx) -> Result<CommandOutcome, CliError> {
    match cmd {
        Command::Gen { kind } => gen(kind, ctx),
        Command::Validate { file } => validate(&file),
        Command::Count { file, classes } => count(&file, &classes),
        Command::Ledger { file } => ledger(&file),
        Command::Transform(a) => transform(&a),
        Command::Verify(a) => verify::verify(&a, ctx),
        Command::Bounds(a) => bounds(&a),
        Command::Exact(a) => exact(&a),
    }
}

pub(crate) fn assumptions(list: &[Assume]) -> Assumptions {
    Assumptions { zc: list.contains(&Assume::Zc), hc2mn: list.contains(&Assume::Hc2mn) }
}

/// Writes `text` to `path`, or hands it back for stdout.
fn emit(outcome: &mut CommandOutcome, path: Option<&Path>, text: String) -> Result<(), CliError> {
    match path {
        Some(p) => outcome.artifacts.push(write_file(p, &text)?),
        None => outcome.output = Some(text),
    }
    Ok(())
}

fn drawing_json(d: &Drawing) -> Value {
    json!({
        "graph": d.graph().spec_string(),
        "vertices": d.graph().vertex_count(),
        "edges": d.graph().edge_count(),
        "crossings": d.crossings_total(),
    })
}

fn gen(kind: GenKind, ctx: &Ctx) -> Result<CommandOutcome, CliError> {
    let (d, what, output) = match kind {
        GenKind::Zarankiewicz { m, n, output } => {
            (zarankiewicz_drawing(m, n)?, "Zarankiewicz drawing".to_string(), output)
        }
        GenKind::Cylinder { m, n, output } => (cylinder_k11mn(m, n)?, "cylinder drawing".to_string(), output),
        GenKind::Random { spec, output } => {
            let g = parse_graph_spec(&spec)?;
            (random_geometric_drawing(&g, ctx.seed)?, format!("random drawing (seed {})", ctx.seed), output)
        }
    };
    let report = d.validate();
    let summary = format!("{what} of {}: {} crossings", d.graph().spec_string(), d.crossings_total());
    let mut body = drawing_json(&d);
    body["valid"] = json!(report.passed());
    let mut outcome = CommandOutcome::new(report.passed(), summary, body);
    emit(&mut outcome, output.as_deref(), encode(&d))?;
    Ok(outcome)
}

fn validate(file: &Path) -> Result<CommandOutcome, CliError> {
    let d = load_drawing(file)?;
    let report = d.validate();
    let violations: Vec<Value> =
        report.violations.iter().map(|v| json!({ "code": v.kind.code(), "detail": v.to_string() })).collect();
    let summary = if report.passed() {
        format!("valid good drawing of {} with {} crossings", d.graph().spec_string(), d.crossings_total())
    } else {
        let lines: Vec<String> = report.violations.iter().map(|v| format!("  {v}")).collect();
        format!("invalid drawing of {}:\n{}", d.graph().spec_string(), lines.join("\n"))
    };
    let mut body = drawing_json(&d);
    body["valid"] = json!(report.passed());
    body["violations"] = json!(violations);
    Ok(CommandOutcome::new(report.passed(), summary, body))
}

fn parse_class(g: &Graph, text: &str) -> Result<crosskit_graph::EdgeClass, CliError> {
    let (a, b) =
        text.split_once(':').ok_or_else(|| CliError::Usage(format!("class `{text}` is not of the form U:W")))?;
    let side =
        |s: &str| -> Vec<String> { s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect() };
    let (u, w) = (side(a), side(b));
    if u.is_empty() || w.is_empty() {
        return Err(CliError::Usage(format!("class `{text}` has an empty side")));
    }
    let u: Vec<&str> = u.iter().map(String::as_str).collect();
    let w: Vec<&str> = w.iter().map(String::as_str).collect();
    Ok(g.edge_class(&format!("E({},{})", u.join(","), w.join(",")), &u, &w)?)
}

fn count(file: &Path, classes: &[String]) -> Result<CommandOutcome, CliError> {
    let d = load_drawing(file)?;
    let cls = classes.iter().map(|c| parse_class(d.graph(), c)).collect::<Result<Vec<_>, _>>()?;
    let outcome = match cls.as_slice() {
        [] => CommandOutcome::new(true, d.crossings_total().to_string(), drawing_json(&d)),
        [a] => {
            let v = d.crossings_within(a)?;
            CommandOutcome::new(true, v.to_string(), json!({ "class": a.name, "crossings": v }))
        }
        [a, b] => {
            let v = d.crossings_between(a, b)?;
            CommandOutcome::new(true, v.to_string(), json!({ "classes": [a.name, b.name], "crossings": v }))
        }
        _ => {
            let l = d.ledger(&cls)?;
            let mut lines: Vec<String> = l.self_terms.iter().map(|(a, v)| format!("cr({a}) = {v}")).collect();
            lines.extend(l.pair_terms.iter().map(|(a, b, v)| format!("cr({a}, {b}) = {v}")));
            lines.push(format!("sum = {}, total = {}", l.sum(), l.total));
            CommandOutcome::new(true, lines.join("\n"), serde_json::to_value(&l).expect("ledgers serialize"))
        }
    };
    Ok(outcome)
}

fn ledger(file: &Path) -> Result<CommandOutcome, CliError> {
    let d = load_drawing(file)?;
    let l = d.lemma2_decomposition()?;
    let mut lines: Vec<String> = l.terms.iter().map(|(name, v)| format!("{name} = {v}")).collect();
    lines.push(format!("sum = {}, cr(D) = {}: {}", l.sum, l.total, if l.holds() { "holds" } else { "FAILS" }));
    let mut body = serde_json::to_value(&l).expect("ledgers serialize");
    body["holds"] = json!(l.holds());
    Ok(CommandOutcome::new(l.holds(), lines.join("\n"), body))
}

fn transform(a: &TransformArgs) -> Result<CommandOutcome, CliError> {
    let d = load_drawing(&a.file)?;
    let part: Vec<&str> = a.part.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let ctx = Lemma1Context::new(&d, &a.vertex, &part, a.k)?.with_labels(&a.x_label, &a.y_label);
    let (out, cert) = match a.kind {
        TransformKind::Lemma1D1 => lemma1_d1(&ctx)?,
        TransformKind::Lemma1D2 => lemma1_d2(&ctx)?,
    };
    let name = match a.kind {
        TransformKind::Lemma1D1 => "lemma1-d1",
        TransformKind::Lemma1D2 => "lemma1-d2",
    };
    let mut summary = format!(
        "{name}: {} -> {} with {} crossings; certificate {}",
        d.graph().spec_string(),
        out.graph().spec_string(),
        out.crossings_total(),
        if cert.passed { "passes" } else { "FAILS" }
    );
    for f in cert.failures() {
        summary.push_str(&format!("\n  {f}"));
    }
    let body = serde_json::to_value(&cert).expect("certificates serialize");
    let mut outcome = CommandOutcome::new(cert.passed, summary, body);
    if let Some(p) = &a.cert {
        outcome.artifacts.push(write_file(p, &cert.to_json())?);
    }
    emit(&mut outcome, a.output.as_deref(), encode(&out))?;
    Ok(outcome)
}

/// `a..b`, `a..=b` (both inclusive) or a single value.
pub(crate) fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not a range a..b"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn csv_table(rows: &[BoundReport]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::failed("CSV", e);
    w.write_record(CSV_HEADER).map_err(fail)?;
    for r in rows {
        w.write_record(r.csv_record()).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::failed("CSV", e))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

fn bounds(a: &BoundsArgs) -> Result<CommandOutcome, CliError> {
    let (mr, nr) = (parse_range(&a.m_range)?, parse_range(&a.n_range)?);
    let assume = assumptions(&a.assume);
    let rows = status_report(mr.clone(), nr.clone(), assume);
    let exact = rows.iter().filter(|r| r.status == crosskit_bounds::Status::Exact).count();
    let summary = format!(
        "{} cells m in {}..{}, n in {}..{} (assumptions: {}): {exact} exact",
        rows.len(),
        mr.start(),
        mr.end(),
        nr.start(),
        nr.end(),
        if assume.labels().is_empty() { "none".to_string() } else { assume.labels().join("+") }
    );
    let body = serde_json::to_value(&rows).expect("reports serialize");
    let text = match a.format {
        Format::Csv => csv_table(&rows)?,
        Format::Json => serde_json::to_string_pretty(&rows).expect("reports serialize"),
    };
    let mut outcome = CommandOutcome::new(true, summary, body);
    emit(&mut outcome, a.output.as_deref(), text)?;
    Ok(outcome)
}

fn oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::Json(_) => CliError::rejected(e.code(), e),
        OracleError::Graph(g) => g.into(),
        other => CliError::failed(other.code(), other),
    }
}

fn exact(a: &ExactArgs) -> Result<CommandOutcome, CliError> {
    let g = parse_graph_spec(&a.spec)?;
    let spec = g.spec_string();
    let write_drawing = |outcome: &mut CommandOutcome, d: &Drawing| -> Result<(), CliError> {
        if let Some(p) = &a.drawing {
            outcome.artifacts.push(write_file(p, &encode(d))?);
        }
        Ok(())
    };
    if let Some(path) = &a.check {
        let text = String::from_utf8_lossy(&read_file(path)?).into_owned();
        let w = Witness::from_json(&text).map_err(|e| CliError::Schema {
            path: path.display().to_string(),
            code: e.code(),
            message: e.to_string(),
        })?;
        let d = verify_witness(&g, &w).map_err(oracle_error)?;
        let summary = format!("witness verified: a good drawing of {spec} with {} crossings", w.k);
        let mut outcome = CommandOutcome::new(true, summary, json!({ "graph": spec, "verified": true, "k": w.k }));
        write_drawing(&mut outcome, &d)?;
        return Ok(outcome);
    }
    let opts = SearchOptions { jobs: a.jobs, ..SearchOptions::new(a.max_k) };
    match exact_crossing_number_with(&g, &opts) {
        Ok(r) => {
            let d = verify_witness(&g, &r.witness).map_err(oracle_error)?;
            let body = json!({
                "graph": spec,
                "value": r.value,
                "witness": serde_json::to_value(&r.witness).expect("witnesses serialize"),
            });
            let summary = format!(
                "cr({spec}) = {}\nwitness: {}",
                r.value,
                serde_json::to_string(&r.witness).expect("witnesses serialize")
            );
            let mut outcome = CommandOutcome::new(true, summary, body);
            if let Some(p) = &a.output {
                outcome.artifacts.push(write_file(p, &r.witness.to_json())?);
            }
            write_drawing(&mut outcome, &d)?;
            Ok(outcome)
        }
        Err(OracleError::BudgetExceeded { at_least }) => Ok(CommandOutcome::new(
            false,
            format!("cr({spec}) >= {at_least}: no drawing with at most {} crossings", a.max_k),
            json!({ "graph": spec, "at_least": at_least }),
        )),
        Err(e) => Err(oracle_error(e)),
    }
}

pub(crate) fn fresh_label(g: &Graph, base: &str, taken: &[&str]) -> String {
    let mut l = base.to_string();
    while g.vertex(&l).is_some() || taken.contains(&l.as_str()) {
        l.push('\'');
    }
    l
}
